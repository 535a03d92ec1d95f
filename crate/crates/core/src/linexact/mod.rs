//! Exact linear algebra over the rationals, prime fields and the integers.

pub mod dense;
mod field;
mod int;
mod lattice;
mod qech;
mod row;
mod space;
mod sparse;

pub use field::{FRow, FieldEchelon, FieldElem, Fp, Reduction};
pub use int::{cast, Checked, LinInt, Overflow};
pub use lattice::{primitive, Lattice, TorsionReduction, ZLattice};
pub use qech::{QEchelon, QSpan};
pub use row::{comb, content, convert, make_primitive, IRow};
pub use space::{integer_row, RowSpace};
pub use sparse::{
    hermite_normal_form, rank_over_field, smith_normal_form, solve_in_rowspan, torsion_index, NormalFormResult,
    SparseMat, SparseVec,
};

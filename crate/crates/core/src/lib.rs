//! Exact verification of Lie nilpotency and commutator-ideal claims for
//! associative algebras.

pub mod battery;
pub mod coeff;
pub mod error;
pub mod exprio;
pub mod findim;
pub mod freealg;
pub mod gensets;
pub mod ideal;
pub mod linexact;

pub use coeff::{RingSpec, Scalar};
pub use error::{Error, Result};
pub use freealg::{MultiDegree, Poly, Word};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/membership.md")]
    mod membership {}
    #[doc = include_str!("../../../book/src/finite-dimensional.md")]
    mod finite_dimensional {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

//! Expression parsing, algebra files and JSON reports.

mod algebra_file;
mod expr;
mod report;

pub use algebra_file::{load_algebra, AlgebraFile, CoeffDoc};
pub use expr::{elaborate, parse_expr, parse_expr_list, parse_poly, Expr, Sign};
pub use report::{emit_report, render_report, CaseVerdict, Report};

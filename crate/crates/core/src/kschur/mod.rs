//! Creation and Jing operators, generalized Hall–Littlewood polynomials and
//! 2-Schur functions.

mod operators;
mod split;

pub use operators::{creation_s, gen_hl, hall_littlewood, jing_b, rect_b, OperatorExpr, Step};
pub use split::{k_split, krec_verify, kschur2, kschur2_recursive, project_t2, two_schur_expand, SplitBasis};

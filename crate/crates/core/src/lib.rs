//! Exact computations with LLT polynomials, Hall–Littlewood vertex
//! operators and 2-Schur functions over `Z[q, q^{-1}]`.

pub mod cli;
pub mod descent;
pub mod error;
pub mod kschur;
pub mod laurent;
pub mod llt;
pub mod partition;
pub mod perm;
pub mod symfunc;
pub mod theorems;

pub use error::{Error, Result};

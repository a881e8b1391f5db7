//! Symmetric and quasisymmetric functions over `Z[q, q^{-1}]`.
//!
//! Schur is the canonical basis. Monomial expansions are only a pivot for
//! converting fundamental quasisymmetric expansions.

mod fund;
mod kostka;
mod pieri;
mod vector;

pub use fund::{monomial_to_schur, schur_to_monomial, FundVector};
pub use kostka::{kostka, KostkaTable};
pub use pieri::{e, h, skew_schur};
pub use vector::{Basis, Monomial, MonomialVector, PartitionVector, Schur, SchurVector, TwoSchur, TwoSchurVector};

use serde::Serialize;

use crate::error::Result;
use crate::kschur::two_schur_expand;
use crate::laurent::LaurentPoly;
use crate::partition::Partition;
use crate::symfunc::{Basis, PartitionVector, SchurVector};

/// Whether every coefficient of an expansion lies in `ℕ[q, q⁻¹]`, with the
/// first offending coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct PositivityReport {
    pub basis: &'static str,
    pub positive: bool,
    pub witness: Option<(Partition, LaurentPoly)>,
}

pub fn positivity_of<B: Basis>(f: &PartitionVector<B>) -> PositivityReport {
    let witness = f.first_non_positive().map(|(p, c)| (p.clone(), c.clone()));
    PositivityReport { basis: B::NAME, positive: witness.is_none(), witness }
}

/// Positivity in the Schur basis, or in the 2-Schur basis when
/// `two_schur` is set (failing if `f` is outside its span).
pub fn positivity_report(f: &SchurVector, two_schur: bool) -> Result<PositivityReport> {
    if two_schur {
        Ok(positivity_of(&two_schur_expand(f)?))
    } else {
        Ok(positivity_of(f))
    }
}

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::Result;
use crate::kschur::two_schur_expand;
use crate::laurent::LaurentPoly;
use crate::llt::{l_poly_with, llt, tuple_from_partition, LNormalization};
use crate::partition::Partition;
use crate::perm::Permutation;
use crate::symfunc::{FundVector, TwoSchurVector};

/// The four natural readings of "inversions of `v` inside the cells of `λ`".
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PairConvention {
    /// count inversions outside the pair set `{(j, n+1−r) : j ≤ λ_r}`
    pub complement: bool,
    /// index the fundamental by the descent set of `v⁻¹` rather than `v`
    pub inverse_descents: bool,
}

impl PairConvention {
    pub const ALL: [PairConvention; 4] = [
        PairConvention { complement: false, inverse_descents: false },
        PairConvention { complement: false, inverse_descents: true },
        PairConvention { complement: true, inverse_descents: false },
        PairConvention { complement: true, inverse_descents: true },
    ];

    /// The convention used by [`g_unicellular`](crate::llt::g_unicellular).
    pub const SELECTED: PairConvention = PairConvention { complement: true, inverse_descents: true };

    /// `Σ_v q^{inv(v, S)} F_{D}` by brute force over `S_n`.
    pub fn generating_function(self, n: usize, lam: &Partition) -> FundVector {
        let mut cells = BTreeSet::new();
        for r in 1..=lam.len() {
            for j in 1..=lam.part(r) {
                cells.insert((j, n + 1 - r));
            }
        }
        let mut out = FundVector::zero(n);
        for v in Permutation::all(n) {
            let inv = v.inversion_set().into_iter().filter(|pair| cells.contains(pair) != self.complement).count();
            let des = if self.inverse_descents { v.inverse_descent_set() } else { v.descent_set() };
            out.add_term(des, LaurentPoly::monomial(inv as i32, 1));
        }
        out
    }
}

impl fmt::Display for PairConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} pairs, F indexed by {}",
            if self.complement { "complement of" } else { "cell" },
            if self.inverse_descents { "iDes(v)" } else { "Des(v)" }
        )
    }
}

/// The conventions that agree with the tuple LLT polynomial for every
/// `λ ⊆ δ_{n−1}`.
pub fn matching_pair_conventions(n: usize) -> Result<Vec<PairConvention>> {
    let mut targets = Vec::new();
    for lam in Partition::in_staircase_all(n) {
        let g = llt(&tuple_from_partition(n, &lam)?)?;
        targets.push((lam, g));
    }
    Ok(PairConvention::ALL
        .into_iter()
        .filter(|c| targets.iter().all(|(lam, g)| &c.generating_function(n, lam) == g))
        .collect())
}

/// The reference 2-Schur expansions of `L(6, λ)` for `λ = (1,1), (2,1), (3,1)`.
pub fn reference_expansions() -> Vec<(Partition, TwoSchurVector)> {
    let k = |v: &[usize]| Partition::new(v.to_vec()).expect("valid");
    let poly = |t: &[(i32, i64)]| LaurentPoly::from_terms(t.iter().copied());
    let build = |c: [&[(i32, i64)]; 4]| {
        TwoSchurVector::from_terms(
            6,
            [k(&[1, 1, 1, 1, 1, 1]), k(&[2, 1, 1, 1, 1]), k(&[2, 2, 1, 1]), k(&[2, 2, 2])]
                .into_iter()
                .zip(c.iter().map(|t| poly(t))),
        )
    };
    vec![
        (k(&[1, 1]), build([&[(0, 1)], &[(4, 1), (3, 2)], &[(6, 2), (5, 1)], &[(7, 1)]])),
        (k(&[2, 1]), build([&[(0, 1)], &[(3, 3)], &[(5, 3)], &[(6, 1)]])),
        (k(&[3, 1]), build([&[(0, 1)], &[(3, 2), (2, 1)], &[(5, 1), (4, 2)], &[(5, 1)]])),
    ]
}

/// Which normalizations of `L(n, λ)` reproduce [`reference_expansions`].
#[derive(Clone, Debug, Serialize)]
pub struct NormalizationChoice {
    pub chosen: String,
    pub direct_matches: bool,
    pub reflected_matches: bool,
    #[serde(skip)]
    pub normalization: LNormalization,
}

fn matches_reference(norm: LNormalization) -> Result<bool> {
    for (lam, expected) in reference_expansions() {
        let l = l_poly_with(6, &lam, norm)?;
        if two_schur_expand(&l).ok().as_ref() != Some(&expected) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The normalization of `L(n, λ)`: `ω(G)` when it reproduces the reference
/// expansions, otherwise the reflected variant. Computed once.
pub fn l_normalization_choice() -> &'static NormalizationChoice {
    static CHOICE: OnceLock<NormalizationChoice> = OnceLock::new();
    CHOICE.get_or_init(|| {
        let direct_matches = matches_reference(LNormalization::Direct).unwrap_or(false);
        let reflected_matches = matches_reference(LNormalization::Reflected).unwrap_or(false);
        let normalization =
            if direct_matches || !reflected_matches { LNormalization::Direct } else { LNormalization::Reflected };
        NormalizationChoice { chosen: normalization.to_string(), direct_matches, reflected_matches, normalization }
    })
}

pub fn l_normalization() -> LNormalization {
    l_normalization_choice().normalization
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selected_convention_is_unique_at_four() {
        assert_eq!(matching_pair_conventions(4).unwrap(), vec![PairConvention::SELECTED]);
    }

    #[test]
    fn direct_normalization_is_chosen() {
        let c = l_normalization_choice();
        assert!(c.direct_matches);
        assert_eq!(l_normalization(), LNormalization::Direct);
    }
}

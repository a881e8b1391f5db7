use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;
use crate::symfunc::{SchurVector, TwoSchurVector};

use super::operators::{jing_b, rect_b};

/// The `k`-split of a `k`-bounded partition: maximal consecutive blocks of
/// rows with main hook length `k` (the last block may be shorter).
pub fn k_split(lam: &Partition, k: usize) -> Result<Vec<Partition>> {
    if !lam.is_k_bounded(k) {
        return Err(Error::NotBounded(lam.clone(), k));
    }
    let mut pieces = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for &row in lam.parts() {
        if let Some(&first) = current.first() {
            // appending a row keeps the first part and adds one to the length
            if first + current.len() > k {
                pieces.push(Partition::from_sorted(std::mem::take(&mut current)));
            }
        }
        current.push(row);
    }
    if !current.is_empty() {
        pieces.push(Partition::from_sorted(current));
    }
    Ok(pieces)
}

/// The split polynomials `C^(2)_λ` of one degree, indexed by the partitions
/// `2^a 1^b` in canonical order.
#[derive(Debug)]
pub struct SplitBasis {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    vectors: Vec<SchurVector>,
}

const CACHED_DEGREES: usize = 24;

impl SplitBasis {
    /// Shared basis for degree `n`, built once per process.
    pub fn for_degree(n: usize) -> Result<&'static SplitBasis> {
        static BASES: [OnceLock<std::result::Result<&'static SplitBasis, Error>>; CACHED_DEGREES] =
            [const { OnceLock::new() }; CACHED_DEGREES];
        if n >= CACHED_DEGREES {
            return Err(Error::BoundExceeded { n, bound: CACHED_DEGREES - 1 });
        }
        BASES[n].get_or_init(|| Self::build(n).map(|b| &*Box::leak(Box::new(b)))).clone()
    }

    fn build(n: usize) -> Result<Self> {
        let partitions = Partition::bounded(n, 2, n);
        let vectors = partitions
            .iter()
            .map(|lam| {
                let pieces = k_split(lam, 2)?;
                let Some((first, rest)) = pieces.split_first() else {
                    return Ok(SchurVector::one());
                };
                let rest = Partition::from_sorted(rest.iter().flat_map(|p| p.parts().to_vec()).collect());
                let below = SplitBasis::for_degree(rest.size())?;
                rect_b(first, below.get(&rest).expect("2-bounded"))
            })
            .collect::<Result<Vec<_>>>()?;
        let index = partitions.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let basis = Self { n, partitions, index, vectors };
        basis.check_unitriangular()?;
        Ok(basis)
    }

    fn check_unitriangular(&self) -> Result<()> {
        for (lam, v) in self.partitions.iter().zip(&self.vectors) {
            let leading = v.terms().next_back();
            if leading.map(|(p, c)| (p, c.is_one())) != Some((lam, true)) {
                return Err(Error::SingularBasis(self.n));
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, lam: &Partition) -> Option<&SchurVector> {
        self.index.get(lam).map(|&i| &self.vectors[i])
    }

    /// Coordinates of `f` in this basis.
    pub fn expand(&self, f: &SchurVector) -> Result<TwoSchurVector> {
        if !f.is_zero() && f.degree() != self.n {
            return Err(Error::SizeMismatch { left: f.degree(), right: self.n });
        }
        let mut residual = f.clone();
        let mut out = TwoSchurVector::zero(self.n);
        // every basis vector is s_λ plus terms earlier in the canonical order
        loop {
            let Some((lam, c)) = residual.terms().next_back().map(|(p, c)| (p.clone(), c.clone())) else {
                break;
            };
            let Some(v) = self.get(&lam) else {
                return Err(Error::NotInSpan(lam));
            };
            residual -= &v.scale(&c);
            out.add_term(lam, c);
        }
        Ok(out)
    }

    /// `Σ c_λ C_λ` back in the Schur basis.
    pub fn combine(&self, coords: &TwoSchurVector) -> SchurVector {
        let mut out = SchurVector::zero(self.n);
        for (lam, c) in coords.terms() {
            out += self.get(lam).expect("coordinates indexed by the basis").scale(c);
        }
        out
    }
}

/// The 2-Schur function `κ_λ = K_{λ→2}`.
pub fn kschur2(lam: &Partition) -> Result<SchurVector> {
    if !lam.is_k_bounded(2) {
        return Err(Error::NotBounded(lam.clone(), 2));
    }
    Ok(SplitBasis::for_degree(lam.size())?.get(lam).expect("2-bounded").clone())
}

/// Expansion of `f` in the 2-Schur basis of its degree.
pub fn two_schur_expand(f: &SchurVector) -> Result<TwoSchurVector> {
    SplitBasis::for_degree(f.degree())?.expand(f)
}

/// `T^(2)_i`: keeps the split-basis coordinates with `λ_1 = i`.
pub fn project_t2(i: usize, f: &SchurVector, basis: &SplitBasis) -> Result<SchurVector> {
    let coords = basis.expand(f)?;
    let kept = TwoSchurVector::from_terms(
        basis.degree(),
        coords.terms().filter(|(lam, _)| lam.first() == i).map(|(p, c)| (p.clone(), c.clone())),
    );
    Ok(basis.combine(&kept))
}

/// The recursive definition `s_(m, λ) = T_m B_m s_λ` with single rows as
/// Schur functions.
pub fn kschur2_recursive(lam: &Partition) -> Result<SchurVector> {
    if !lam.is_k_bounded(2) {
        return Err(Error::NotBounded(lam.clone(), 2));
    }
    match lam.parts() {
        [] => Ok(SchurVector::one()),
        [_] => Ok(SchurVector::basis_element(lam.clone())),
        [m, rest @ ..] => {
            let inner = kschur2_recursive(&Partition::from_sorted(rest.to_vec()))?;
            let raised = jing_b(*m as i64, &inner);
            project_t2(*m, &raised, SplitBasis::for_degree(lam.size())?)
        }
    }
}

/// Checks `B_{ℓ^{3−ℓ}} κ_λ = q^{|μ|−ℓ(μ)} κ_{(ℓ^{3−ℓ}) ∪ λ}` for
/// `λ = (μ, ν)` with `μ_{ℓ(μ)} > ℓ ≥ ν_1`.
pub fn krec_verify(ell: usize, mu: &Partition, nu: &Partition) -> Result<bool> {
    let last_mu = mu.parts().last().copied().unwrap_or(usize::MAX);
    if !(ell == 1 || ell == 2) || last_mu <= ell || ell < nu.first() {
        return Err(Error::Hypothesis(format!("need μ_ℓ(μ) > ℓ ≥ ν_1 with ℓ ∈ {{1, 2}}; got ℓ={ell}, μ={mu}, ν={nu}")));
    }
    let lam = Partition::from_sorted(mu.parts().iter().chain(nu.parts()).copied().collect());
    let rect = Partition::rectangle(3 - ell, ell);
    let lhs = rect_b(&rect, &kschur2(&lam)?)?;
    let shift = mu.size() as i32 - mu.len() as i32;
    let rhs = kschur2(&rect.union(&lam))?.scale(&LaurentPoly::monomial(shift, 1));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn s(v: &[usize]) -> SchurVector {
        SchurVector::basis_element(p(v))
    }

    #[test]
    fn k_split_examples() {
        assert_eq!(k_split(&p(&[3, 2, 2, 2, 1, 1]), 3).unwrap(), vec![p(&[3]), p(&[2, 2]), p(&[2, 1]), p(&[1])]);
        assert_eq!(k_split(&p(&[2, 1, 1]), 2).unwrap(), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(k_split(&p(&[1]), 2).unwrap(), vec![p(&[1])]);
        assert!(k_split(&p(&[3]), 2).is_err());
    }

    #[test]
    fn small_kschur() {
        assert_eq!(kschur2(&p(&[2])).unwrap(), s(&[2]));
        assert_eq!(kschur2(&p(&[1, 1])).unwrap(), s(&[1, 1]));
        assert_eq!(kschur2(&p(&[2, 1])).unwrap(), s(&[2, 1]) + s(&[3]).shift(1));
        assert_eq!(kschur2(&p(&[1, 1, 1])).unwrap(), s(&[1, 1, 1]) + s(&[2, 1]).shift(1));
    }

    #[test]
    fn expansion_examples() {
        let h11 = s(&[2]) + s(&[1, 1]);
        let k = two_schur_expand(&h11).unwrap();
        assert_eq!(k.coeff(&p(&[2])), LaurentPoly::one());
        assert_eq!(k.coeff(&p(&[1, 1])), LaurentPoly::one());
        assert!(matches!(two_schur_expand(&s(&[3])), Err(Error::NotInSpan(_))));
        for lam in Partition::bounded(5, 2, 5) {
            let unit = two_schur_expand(&kschur2(&lam).unwrap()).unwrap();
            assert_eq!(unit.len(), 1);
            assert!(unit.coeff(&lam).is_one());
        }
    }

    #[test]
    fn projection() {
        let b = SplitBasis::for_degree(2).unwrap();
        let c11 = b.get(&p(&[1, 1])).unwrap().clone();
        let c2 = b.get(&p(&[2])).unwrap().clone();
        assert!(project_t2(2, &c11, b).unwrap().is_zero());
        assert_eq!(project_t2(1, &c11, b).unwrap(), c11);
        let mix = c11.shift(3) + c2.times(2);
        assert_eq!(project_t2(2, &mix, b).unwrap(), c2.times(2));
    }

    #[test]
    fn recursive_small() {
        assert_eq!(kschur2_recursive(&p(&[2])).unwrap(), s(&[2]));
        for n in 0..=6 {
            for lam in Partition::bounded(n, 2, n) {
                assert_eq!(kschur2_recursive(&lam).unwrap(), kschur2(&lam).unwrap(), "{lam}");
            }
        }
    }

    #[test]
    fn krec_examples() {
        assert!(krec_verify(1, &p(&[]), &p(&[])).unwrap());
        assert!(krec_verify(2, &p(&[]), &p(&[1])).unwrap());
        assert!(krec_verify(1, &p(&[2]), &p(&[1])).unwrap());
        assert!(krec_verify(1, &p(&[1]), &p(&[])).is_err());
    }
}

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::descent::DescentSet;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;

use super::kostka::KostkaTable;
use super::vector::{MonomialVector, SchurVector};

/// A homogeneous quasisymmetric function in Gessel's fundamental basis.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct FundVector {
    n: usize,
    terms: BTreeMap<DescentSet, LaurentPoly>,
}

impl FundVector {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DescentSet, &LaurentPoly)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &DescentSet) -> LaurentPoly {
        self.terms.get(d).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, d: DescentSet, c: LaurentPoly) {
        assert_eq!(d.n(), self.n, "descent set for wrong degree");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(d).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn add(&mut self, other: &FundVector) {
        for (d, c) in &other.terms {
            self.add_term(*d, c.clone());
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.n);
        for (d, x) in &self.terms {
            out.add_term(*d, x * c);
        }
        out
    }

    /// Expands into monomial symmetric functions.
    ///
    /// `F_S = Σ_{D ⊇ S} M_D`, so the coefficient of `M_D` is the subset sum
    /// over stored `S ⊆ D`. Every composition must carry the same coefficient
    /// as its sorted partition, otherwise the input is not symmetric.
    pub fn to_monomial(&self) -> Result<MonomialVector> {
        let n = self.n;
        if n >= DescentSet::MAX_N - 1 {
            return Err(Error::BoundExceeded { n, bound: DescentSet::MAX_N - 2 });
        }
        if n == 0 {
            return Ok(MonomialVector::from_terms(0, [(Partition::empty(), self.coeff(&DescentSet::empty(0)))]));
        }
        let bits = n - 1;
        // subset-sum zeta transform over masks of {1..n-1}, shifted to bit 0
        let mut acc: Vec<LaurentPoly> = vec![LaurentPoly::zero(); 1 << bits];
        for (d, c) in &self.terms {
            acc[(d.mask() >> 1) as usize] += c;
        }
        for b in 0..bits {
            for mask in 0..acc.len() {
                if mask >> b & 1 == 1 {
                    let (lo, hi) = acc.split_at_mut(mask);
                    hi[0] += &lo[mask ^ (1 << b)];
                }
            }
        }
        let mut out = MonomialVector::zero(n);
        let mut by_partition: BTreeMap<Partition, usize> = BTreeMap::new();
        for (mask, c) in acc.iter().enumerate() {
            let d = DescentSet::from_mask(n, (mask as u64) << 1);
            let mut comp = d.composition();
            comp.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::from_sorted(comp);
            match by_partition.get(&lam) {
                Some(&m) => {
                    if acc[m] != *c {
                        return Err(Error::NotSymmetric(format!("{} vs {}", d, lam)));
                    }
                }
                None => {
                    by_partition.insert(lam.clone(), mask);
                    out.add_term(lam, c.clone());
                }
            }
        }
        Ok(out)
    }

    pub fn to_schur(&self) -> Result<SchurVector> {
        monomial_to_schur(&self.to_monomial()?)
    }

    /// Evaluates in `vars` commuting variables: map from exponent vector to
    /// coefficient. `F_S(x_1..x_N) = Σ x_{i_1}⋯x_{i_n}` over
    /// `i_1 ≤ ⋯ ≤ i_n` with strict increase at each `j ∈ S`.
    pub fn specialize(&self, vars: usize) -> BTreeMap<Vec<usize>, LaurentPoly> {
        let mut out: BTreeMap<Vec<usize>, LaurentPoly> = BTreeMap::new();
        let n = self.n;
        for (d, c) in &self.terms {
            let mut seq = Vec::with_capacity(n);
            weakly_increasing(n, vars, d, &mut seq, &mut |s| {
                let mut exps = vec![0; vars];
                for &i in s {
                    exps[i] += 1;
                }
                *out.entry(exps).or_default() += c;
            });
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

fn weakly_increasing(n: usize, vars: usize, d: &DescentSet, seq: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    let k = seq.len();
    if k == n {
        emit(seq);
        return;
    }
    let start = match seq.last() {
        None => 0,
        Some(&prev) if d.contains(k) => prev + 1,
        Some(&prev) => prev,
    };
    for v in start..vars {
        seq.push(v);
        weakly_increasing(n, vars, d, seq, emit);
        seq.pop();
    }
}

/// Unique Schur expansion of a monomial expansion, solved against the Kostka
/// matrix from the most dominant partition down.
pub fn monomial_to_schur(f: &MonomialVector) -> Result<SchurVector> {
    let n = f.degree();
    let table = KostkaTable::for_degree(n);
    let parts = table.partitions();
    let mut residual: Vec<LaurentPoly> = parts.iter().map(|p| f.coeff(p)).collect();
    let mut out = SchurVector::zero(n);
    for (i, lam) in parts.iter().enumerate() {
        let c = std::mem::take(&mut residual[i]);
        if c.is_zero() {
            continue;
        }
        debug_assert_eq!(table.entry(i, i), 1);
        for (j, r) in residual.iter_mut().enumerate().skip(i + 1) {
            let k = table.entry(i, j);
            if k != 0 {
                *r -= &c.scale_int(k);
            }
        }
        out.add_term(lam.clone(), c);
    }
    if let Some(i) = residual.iter().position(|r| !r.is_zero()) {
        return Err(Error::NotSymmetric(parts[i].to_string()));
    }
    Ok(out)
}

/// Inverse of [`monomial_to_schur`].
pub fn schur_to_monomial(f: &SchurVector) -> MonomialVector {
    let n = f.degree();
    let table = KostkaTable::for_degree(n);
    let mut out = MonomialVector::zero(n);
    for (lam, c) in f.terms() {
        let i = table.position(lam).unwrap();
        for (j, mu) in table.partitions().iter().enumerate() {
            let k = table.entry(i, j);
            if k != 0 {
                out.add_term(mu.clone(), c.scale_int(k));
            }
        }
    }
    out
}

impl LaurentPoly {
    pub(crate) fn scale_int(&self, k: u64) -> LaurentPoly {
        self * &LaurentPoly::monomial(0, k)
    }
}

impl fmt::Display for FundVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "F{d}")?;
            } else if c.len() == 1 {
                write!(f, "{c} F{d}")?;
            } else {
                write!(f, "({c}) F{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FundVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.n, self)
    }
}

#[derive(Serialize, Deserialize)]
struct FundTermJson {
    index: Vec<usize>,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct FundJson {
    n: usize,
    basis: String,
    terms: Vec<FundTermJson>,
}

impl Serialize for FundVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FundJson {
            n: self.n,
            basis: "fundamental".into(),
            terms: self.terms.iter().map(|(d, c)| FundTermJson { index: d.elements(), coeff: c.clone() }).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FundVector {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = FundJson::deserialize(deserializer)?;
        if raw.basis != "fundamental" {
            return Err(D::Error::custom("expected basis \"fundamental\""));
        }
        let mut v = FundVector::zero(raw.n);
        for t in raw.terms {
            let d = DescentSet::new(raw.n, &t.index).map_err(D::Error::custom)?;
            v.add_term(d, t.coeff);
        }
        Ok(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn fund(n: usize, sets: &[&[usize]]) -> FundVector {
        let mut f = FundVector::zero(n);
        for s in sets {
            f.add_term(DescentSet::new(n, s).unwrap(), LaurentPoly::one());
        }
        f
    }

    #[test]
    fn fund_to_monomial_examples() {
        let m = fund(2, &[&[]]).to_monomial().unwrap();
        assert_eq!(m, MonomialVector::basis_element(p(&[2])) + MonomialVector::basis_element(p(&[1, 1])));
        let m = fund(2, &[&[1]]).to_monomial().unwrap();
        assert_eq!(m, MonomialVector::basis_element(p(&[1, 1])));
        let m = fund(3, &[&[]]).to_monomial().unwrap();
        let expect = Partition::all(3)
            .into_iter()
            .map(MonomialVector::basis_element)
            .fold(MonomialVector::zero(3), |a, b| a + b);
        assert_eq!(m, expect);
    }

    #[test]
    fn non_symmetric_detected() {
        // F_{1} alone at n = 3 is not symmetric
        assert!(matches!(fund(3, &[&[1]]).to_monomial(), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn monomial_to_schur_examples() {
        let h2 = MonomialVector::basis_element(p(&[2])) + MonomialVector::basis_element(p(&[1, 1]));
        assert_eq!(monomial_to_schur(&h2).unwrap(), SchurVector::basis_element(p(&[2])));
        let h11 = MonomialVector::basis_element(p(&[2])) + MonomialVector::term(p(&[1, 1]), 2.into());
        assert_eq!(
            monomial_to_schur(&h11).unwrap(),
            SchurVector::basis_element(p(&[2])) + SchurVector::basis_element(p(&[1, 1]))
        );
        // p_1^3 = m3 + 3 m21 + 6 m111
        let p13 =
            MonomialVector::from_terms(3, [(p(&[3]), 1.into()), (p(&[2, 1]), 3.into()), (p(&[1, 1, 1]), 6.into())]);
        let expect =
            SchurVector::from_terms(3, [(p(&[3]), 1.into()), (p(&[2, 1]), 2.into()), (p(&[1, 1, 1]), 1.into())]);
        assert_eq!(monomial_to_schur(&p13).unwrap(), expect);
    }

    #[test]
    fn fund_to_schur_examples() {
        assert_eq!(fund(4, &[&[]]).to_schur().unwrap(), SchurVector::basis_element(p(&[4])));
        assert_eq!(
            fund(2, &[&[], &[1]]).to_schur().unwrap(),
            SchurVector::basis_element(p(&[2])) + SchurVector::basis_element(p(&[1, 1]))
        );
        assert_eq!(fund(3, &[&[1], &[2]]).to_schur().unwrap(), SchurVector::basis_element(p(&[2, 1])));
    }

    #[test]
    fn schur_monomial_roundtrip() {
        for n in 0..=8 {
            for lam in Partition::all(n) {
                let s = SchurVector::basis_element(lam);
                assert_eq!(monomial_to_schur(&schur_to_monomial(&s)).unwrap(), s);
            }
        }
    }

    #[test]
    fn specialize_two_variables() {
        let f = fund(2, &[&[]]);
        let poly = f.specialize(2);
        assert_eq!(poly.len(), 3);
        let g = fund(2, &[&[1]]).specialize(2);
        assert_eq!(g.keys().cloned().collect::<Vec<_>>(), vec![vec![1, 1]]);
    }
}

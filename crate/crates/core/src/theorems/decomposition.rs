use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kschur::kschur2;
use crate::llt::{domino_tuple, l_poly, llt_schur};
use crate::partition::Partition;
use crate::symfunc::SchurVector;

/// All subsets of `{1, ..., m}` as sorted vectors, ordered by bitmask.
pub fn subsets(m: usize) -> Vec<Vec<usize>> {
    (0u32..1 << m).map(|mask| (1..=m).filter(|i| mask >> (i - 1) & 1 == 1).collect()).collect()
}

fn mask_of(set: &[usize]) -> u32 {
    set.iter().fold(0, |acc, i| acc | 1 << (i - 1))
}

/// `e_I · λ = Σ_{i ∈ I} λ_i`.
pub fn dot(set: &[usize], lam: &Partition) -> usize {
    set.iter().map(|&i| lam.part(i)).sum()
}

/// The functions `f_{I,m}` with `L(n, λ) = Σ_I f_{I,m} q^{−e_I·λ}` for
/// every `λ ⊆ (n−m)^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDecomposition {
    n: usize,
    m: usize,
    terms: BTreeMap<Vec<usize>, SchurVector>,
}

impl LinearDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, set: &[usize]) -> Option<&SchurVector> {
        self.terms.get(set)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &SchurVector)> + '_ {
        self.terms.iter()
    }

    /// `Σ_I f_I q^{−e_I·λ}`.
    pub fn reconstruct(&self, lam: &Partition) -> SchurVector {
        let mut out = SchurVector::zero(self.n);
        for (set, f) in &self.terms {
            out += f.shift(-(dot(set, lam) as i32));
        }
        out
    }
}

impl fmt::Display for LinearDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (set, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let names: Vec<String> = set.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}: {v}", names.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for LinearDecomposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            subset: &'a [usize],
            value: &'a SchurVector,
        }
        let mut st = serializer.serialize_struct("LinearDecomposition", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("m", &self.m)?;
        let entries: Vec<Entry> = self.terms.iter().map(|(s, v)| Entry { subset: s, value: v }).collect();
        st.serialize_field("terms", &entries)?;
        st.end()
    }
}

fn check_m(n: usize, m: usize) -> Result<()> {
    if m > n / 2 {
        return Err(Error::Precondition(format!("m = {m} exceeds ⌊n/2⌋ = {}", n / 2)));
    }
    Ok(())
}

/// `q^{e_I·δ_m} ω(llt(η_{a_I}))` for `m = ⌊n/2⌋`.
pub fn domino_f(set: &[usize], n: usize) -> Result<SchurVector> {
    let m = n / 2;
    let a: Vec<bool> = (1..=m).map(|i| set.contains(&i)).collect();
    let shift: usize = set.iter().map(|&i| m + 1 - i).sum();
    Ok(llt_schur(&domino_tuple(&a, n % 2 == 1).to_shape())?.omega().shift(shift as i32))
}

fn aggregate(n: usize, m: usize, full: impl Fn(&[usize]) -> Result<SchurVector>) -> Result<LinearDecomposition> {
    check_m(n, m)?;
    let mut terms: BTreeMap<Vec<usize>, SchurVector> =
        subsets(m).into_iter().map(|s| (s, SchurVector::zero(n))).collect();
    for set in subsets(n / 2) {
        let f = full(&set)?;
        let key: Vec<usize> = set.iter().copied().filter(|&i| i <= m).collect();
        *terms.get_mut(&key).expect("all subsets present") += f;
    }
    Ok(LinearDecomposition { n, m, terms })
}

/// The decomposition built from domino LLT polynomials, aggregated over
/// `I ∩ [m] = J` when `m < ⌊n/2⌋`.
pub fn solve_decomposition(n: usize, m: usize) -> Result<LinearDecomposition> {
    aggregate(n, m, |set| domino_f(set, n))
}

/// The decomposition recovered from the values `L(n, δ_m − b)`,
/// `b ∈ {0,1}^m`, by inverting the linear system one coordinate at a time.
pub fn solve_by_inversion(n: usize, m: usize) -> Result<LinearDecomposition> {
    check_m(n, m)?;
    let stair = Partition::staircase(m);
    let mut values: Vec<SchurVector> = (0u32..1 << m)
        .map(|b| {
            let parts = (1..=m).map(|i| stair.part(i) - (b >> (i - 1) & 1) as usize).collect();
            l_poly(n, &Partition::new(parts)?)
        })
        .collect::<Result<_>>()?;
    // L(δ_m − b) = Σ_J g_J q^{e_J·b} with g_J = f_J q^{−e_J·δ_m}
    for i in 0..m {
        for mask in 0u32..1 << m {
            if mask >> i & 1 == 1 {
                continue;
            }
            let hi = mask | 1 << i;
            let diff = &values[hi as usize] - &values[mask as usize];
            let b = diff.div_q_minus_one().ok_or_else(|| {
                Error::Precondition(format!("values are not linear in coordinate {} for n = {n}", i + 1))
            })?;
            values[mask as usize] -= &b;
            values[hi as usize] = b;
        }
    }
    let terms = subsets(m)
        .into_iter()
        .map(|set| {
            let g = &values[mask_of(&set) as usize];
            let shift = dot(&set, &stair);
            (set, g.shift(shift as i32))
        })
        .collect();
    Ok(LinearDecomposition { n, m, terms })
}

/// The exponent of `q` in the closed form of `f_{I,⌊n/2⌋}`.
pub fn closed_form_exponent(set: &[usize], n: usize) -> Result<i32> {
    let m = n / 2;
    if set.iter().any(|&i| i == 0 || i > m) || set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Precondition(format!("{set:?} is not a sorted subset of 1..={m}")));
    }
    let l = set.len();
    // μ_j = m − l + j − i_j
    let mu: usize = set.iter().enumerate().map(|(j, &i)| m - l + j + 1 - i).sum();
    let base = if n.is_multiple_of(2) { m * l } else { (m + 1) * l };
    Ok((base + mu) as i32)
}

/// `q^{e} κ_{2^l 1^{n−2l}}` for `I ⊆ [m]`, `m = ⌊n/2⌋`.
pub fn closed_form_f(set: &[usize], m: usize, n: usize) -> Result<SchurVector> {
    if m != n / 2 {
        return Err(Error::Precondition(format!("closed forms need m = ⌊n/2⌋ = {}, got {m}", n / 2)));
    }
    let e = closed_form_exponent(set, n)?;
    let l = set.len();
    Ok(kschur2(&Partition::two_one(l, n - 2 * l))?.shift(e))
}

/// `Σ f_{I,⌊n/2⌋}` over `I` with `I ∩ [m] = J`, from the closed forms.
pub fn f_less(set: &[usize], m: usize, n: usize) -> Result<SchurVector> {
    check_m(n, m)?;
    let mut out = SchurVector::zero(n);
    for full in subsets(n / 2) {
        if full.iter().copied().filter(|&i| i <= m).eq(set.iter().copied()) {
            out += closed_form_f(&full, n / 2, n)?;
        }
    }
    Ok(out)
}

/// The decomposition assembled from the closed forms.
pub fn closed_form_decomposition(n: usize, m: usize) -> Result<LinearDecomposition> {
    aggregate(n, m, |set| closed_form_f(set, n / 2, n))
}

/// `Σ_{i=1}^{l} (m − i)` for even `n`, `Σ_{i=1}^{l} (m − i + 1)` for odd `n`.
pub fn domino_exponent(l: usize, n: usize) -> i32 {
    let m = n / 2;
    let extra = n % 2;
    (1..=l).map(|i| (m + extra - i) as i32).sum()
}

/// Both sides of the domino identity `ω(llt(η_a)) = q^M κ_{2^l 1^{n−2l}}`.
#[derive(Clone, Debug, Serialize)]
pub struct DominoCheck {
    pub tuple: String,
    pub exponent: i32,
    pub lhs: SchurVector,
    pub rhs: SchurVector,
    pub holds: bool,
}

pub fn domino_identity(a: &[bool], odd: bool) -> Result<DominoCheck> {
    let t = domino_tuple(a, odd);
    let n = t.n();
    let l = a.iter().filter(|&&x| x).count();
    let exponent = domino_exponent(l, n);
    let lhs = llt_schur(&t.to_shape())?.omega();
    let rhs = kschur2(&Partition::two_one(l, n - 2 * l))?.shift(exponent);
    let holds = lhs == rhs;
    Ok(DominoCheck { tuple: t.to_string(), exponent, lhs, rhs, holds })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kschur::two_schur_expand;
    use crate::laurent::LaurentPoly;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn n2_decomposition() {
        let d = solve_decomposition(2, 1).unwrap();
        assert_eq!(d.get(&[]).unwrap(), &kschur2(&p(&[1, 1])).unwrap());
        assert_eq!(d.get(&[1]).unwrap(), &kschur2(&p(&[2])).unwrap().shift(1));
        assert_eq!(solve_by_inversion(2, 1).unwrap(), d);
    }

    #[test]
    fn closed_form_examples() {
        // I = {m − l + 1, ..., m}
        assert_eq!(closed_form_exponent(&[2, 3], 6).unwrap(), 6);
        assert_eq!(closed_form_exponent(&[], 6).unwrap(), 0);
        assert_eq!(closed_form_f(&[], 3, 6).unwrap(), kschur2(&p(&[1; 6])).unwrap());
        assert_eq!(closed_form_exponent(&[1], 6).unwrap(), 5);
        assert!(closed_form_f(&[1], 2, 6).is_err());
        // 3q^3 on κ_{2,1^4} in L(6,(2,1)): the I={1} term contributes q^{5−2}
        let d = closed_form_decomposition(6, 3).unwrap();
        let l = two_schur_expand(&d.reconstruct(&p(&[2, 1]))).unwrap();
        assert_eq!(l.coeff(&p(&[2, 1, 1, 1, 1])), LaurentPoly::monomial(3, 3));
    }

    #[test]
    fn f_less_examples() {
        let lhs = f_less(&[], 2, 6).unwrap();
        let rhs = closed_form_f(&[], 3, 6).unwrap() + closed_form_f(&[3], 3, 6).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(f_less(&[1, 3], 3, 6).unwrap(), closed_form_f(&[1, 3], 3, 6).unwrap());
    }

    #[test]
    fn domino_examples() {
        assert!(domino_identity(&[false], false).unwrap().holds);
        assert_eq!(domino_identity(&[true, true, false, false], false).unwrap().exponent, 5);
        let odd = domino_identity(&[true], true).unwrap();
        assert_eq!(odd.exponent, 1);
        assert!(odd.holds);
    }

    #[test]
    fn three_solvers_agree() {
        for n in 2..=6 {
            for m in 0..=n / 2 {
                let d = solve_decomposition(n, m).unwrap();
                assert_eq!(d, solve_by_inversion(n, m).unwrap(), "n={n} m={m}");
                assert_eq!(d, closed_form_decomposition(n, m).unwrap(), "n={n} m={m}");
                for lam in Partition::in_rectangle(m, n - m) {
                    assert_eq!(d.reconstruct(&lam), l_poly(n, &lam).unwrap(), "n={n} λ={lam}");
                }
            }
        }
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets(3).len(), 8);
        assert_eq!(subsets(0), vec![Vec::<usize>::new()]);
    }
}

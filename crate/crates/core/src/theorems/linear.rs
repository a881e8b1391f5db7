use serde::Serialize;

use crate::error::{Error, Result};
use crate::kschur::two_schur_expand;
use crate::llt::{g_unicellular, l_poly};
use crate::partition::Partition;
use crate::symfunc::{SchurVector, TwoSchurVector};

/// The three partitions `μ⁰ = λ`, `μ¹`, `μ²` obtained by raising row `i`
/// by zero, one and two cells.
pub fn raised_triple(lam: &Partition, i: usize) -> Result<[Partition; 3]> {
    let li = lam.part(i);
    Ok([lam.clone(), lam.with_part(i, li + 1)?, lam.with_part(i, li + 2)?])
}

/// Checks `λ_i + 2 ≤ λ_{i−1}`, `λ_{n−λ_i−1} = λ_{n−λ_i}` and
/// `μ² ⊆ δ_{n−1}`, with `λ_0 = ∞`.
pub fn linear_hypothesis(n: usize, lam: &Partition, i: usize) -> Result<()> {
    let fail = |why: &str| Err(Error::Hypothesis(format!("n={n}, λ={lam}, i={i}: {why}")));
    if i == 0 || !lam.in_staircase(n) {
        return fail("need i ≥ 1 and λ inside the staircase");
    }
    let li = lam.part(i);
    if li + 2 > lam.part(i - 1) {
        return fail("λ_i + 2 > λ_{i−1}");
    }
    if li + 2 + i > n {
        return fail("μ² leaves the staircase");
    }
    let j = n - li;
    if lam.part(j - 1) != lam.part(j) {
        return fail("λ_{n−λ_i−1} ≠ λ_{n−λ_i}");
    }
    Ok(())
}

/// Every `(λ, i)` with `λ ⊆ δ_{n−1}` satisfying [`linear_hypothesis`].
pub fn linear_relation_cases(n: usize) -> Vec<(Partition, usize)> {
    let mut out = Vec::new();
    for lam in Partition::in_staircase_all(n) {
        for i in 1..=lam.len() + 1 {
            if linear_hypothesis(n, &lam, i).is_ok() {
                out.push((lam.clone(), i));
            }
        }
    }
    out
}

/// `G_{μ⁰} − G_{μ¹} = q (G_{μ¹} − G_{μ²})` together with the functions
/// `g₁, g₂` such that `L(n, μʲ) = g₁ + q^{−j} g₂`.
#[derive(Clone, Debug, Serialize)]
pub struct LinearRelation {
    pub n: usize,
    pub lambda: Partition,
    pub i: usize,
    pub lhs: SchurVector,
    pub rhs: SchurVector,
    pub holds: bool,
    pub g1: Option<SchurVector>,
    pub g2: Option<SchurVector>,
}

impl LinearRelation {
    pub fn g1_two_schur(&self) -> Option<TwoSchurVector> {
        self.g1.as_ref().and_then(|g| two_schur_expand(g).ok())
    }

    pub fn g2_two_schur(&self) -> Option<TwoSchurVector> {
        self.g2.as_ref().and_then(|g| two_schur_expand(g).ok())
    }
}

pub fn verify_linear_relation(n: usize, lam: &Partition, i: usize) -> Result<LinearRelation> {
    linear_hypothesis(n, lam, i)?;
    let mus = raised_triple(lam, i)?;
    let g = mus.iter().map(|mu| g_unicellular(n, mu)?.to_schur()).collect::<Result<Vec<_>>>()?;
    let lhs = &g[0] - &g[1];
    let rhs = (&g[1] - &g[2]).shift(1);
    let holds = lhs == rhs;
    let l = mus.iter().map(|mu| l_poly(n, mu)).collect::<Result<Vec<_>>>()?;
    let (g1, g2) = match (&l[0] - &l[1]).div_q_minus_one() {
        Some(d) => {
            let g2 = d.shift(1);
            let g1 = &l[0] - &g2;
            let consistent = (1..=2).all(|j| l[j] == &g1 + &g2.shift(-(j as i32)));
            if consistent {
                (Some(g1), Some(g2))
            } else {
                (None, None)
            }
        }
        None => (None, None),
    };
    Ok(LinearRelation { n, lambda: lam.clone(), i, lhs, rhs, holds, g1, g2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn hypothesis_examples() {
        assert!(linear_hypothesis(6, &p(&[1, 1]), 2).is_err());
        assert!(linear_hypothesis(5, &p(&[1, 1, 1]), 1).is_err());
        assert!(linear_hypothesis(6, &p(&[2, 1]), 2).is_err());
        assert!(linear_hypothesis(5, &p(&[]), 1).is_ok());
    }

    #[test]
    fn linear_relation_n6() {
        let lam = p(&[1, 1]);
        let mus = raised_triple(&lam, 1).unwrap();
        assert_eq!(mus[2], p(&[3, 1]));
        let cases = linear_relation_cases(6);
        assert!(cases.contains(&(lam, 1)));
        for (lam, i) in cases {
            let r = verify_linear_relation(6, &lam, i).unwrap();
            assert!(r.holds, "{lam} {i}");
            assert!(r.g1.is_some());
        }
    }

    #[test]
    fn g1_g2_from_reference_values() {
        // L(6,(1,1)), L(6,(2,1)), L(6,(3,1)) differ by one cell in the first row
        let l: Vec<SchurVector> = [p(&[1, 1]), p(&[2, 1]), p(&[3, 1])].iter().map(|m| l_poly(6, m).unwrap()).collect();
        let g2 = (&l[0] - &l[1]).div_q_minus_one().unwrap().shift(1);
        let g1 = &l[0] - &g2;
        let k1 = two_schur_expand(&g1).unwrap();
        let k2 = two_schur_expand(&g2).unwrap();
        let poly = |t: &[(i32, i64)]| LaurentPoly::from_terms(t.iter().copied());
        assert_eq!(k1.coeff(&p(&[1; 6])), poly(&[(0, 1)]));
        assert_eq!(k1.coeff(&p(&[2, 1, 1, 1, 1])), poly(&[(3, 2)]));
        assert_eq!(k1.coeff(&p(&[2, 2, 1, 1])), poly(&[(5, 1)]));
        assert_eq!(k2.coeff(&p(&[2, 1, 1, 1, 1])), poly(&[(4, 1)]));
        assert_eq!(k2.coeff(&p(&[2, 2, 1, 1])), poly(&[(6, 2)]));
        assert_eq!(k2.coeff(&p(&[2, 2, 2])), poly(&[(7, 1)]));
        assert_eq!(l[2], &g1 + &g2.shift(-2));
    }
}

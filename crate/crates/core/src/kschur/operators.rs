use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::partition::Partition;
use crate::symfunc::SchurVector;

/// One primitive step of an [`OperatorExpr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    MultiplyH(i64),
    MultiplyE(i64),
    SkewH(usize),
    SkewE(usize),
    Scalar(LaurentPoly),
}

/// A composition of primitive operators, applied first to last.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OperatorExpr {
    steps: Vec<Step>,
}

impl OperatorExpr {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn then(mut self, step: Step) -> Self {
        self.steps.push(step);
        self
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn apply(&self, f: &SchurVector) -> SchurVector {
        let mut acc = f.clone();
        for step in &self.steps {
            if acc.is_zero() {
                break;
            }
            acc = match step {
                Step::MultiplyH(r) => acc.h_multiply(*r),
                Step::MultiplyE(r) => acc.e_multiply(*r),
                Step::SkewH(r) => acc.h_perp(*r),
                Step::SkewE(r) => acc.e_perp(*r),
                Step::Scalar(c) => acc.scale(c),
            };
        }
        acc
    }
}

fn sign(i: usize) -> LaurentPoly {
    LaurentPoly::from(if i.is_multiple_of(2) { 1 } else { -1 })
}

/// The Schur creation operator `S_a = Σ_r (−1)^r h_{a+r} e_r^⊥`.
pub fn creation_s(a: i64, f: &SchurVector) -> SchurVector {
    let n = f.degree();
    let mut out = SchurVector::zero((n as i64 + a).max(0) as usize);
    for r in 0..=n {
        let term = OperatorExpr::new()
            .then(Step::SkewE(r))
            .then(Step::MultiplyH(a + r as i64))
            .then(Step::Scalar(sign(r)))
            .apply(f);
        out += term;
    }
    out
}

/// Jing's operator `B_a = Σ_{i,j} (−1)^i q^j h_{a+i+j} e_i^⊥ h_j^⊥`.
pub fn jing_b(a: i64, f: &SchurVector) -> SchurVector {
    let n = f.degree();
    let mut out = SchurVector::zero((n as i64 + a).max(0) as usize);
    for j in 0..=n {
        let skewed = f.h_perp(j);
        if skewed.is_zero() {
            continue;
        }
        out += creation_s(a + j as i64, &skewed).shift(j as i32);
    }
    out
}

/// `H_λ = B_{λ_1} ⋯ B_{λ_ℓ}(1)`.
pub fn hall_littlewood(lam: &Partition) -> SchurVector {
    lam.parts().iter().rev().fold(SchurVector::one(), |acc, &a| jing_b(a as i64, &acc))
}

/// `B_R` for the pieces `(1)`, `(2)` and `(1,1)` that occur in 2-splits,
/// with `B_(1,1) = B_1 B_1 − q B_2 B_0`.
pub fn rect_b(piece: &Partition, f: &SchurVector) -> Result<SchurVector> {
    match piece.parts() {
        [a] if *a <= 2 => Ok(jing_b(*a as i64, f)),
        [1, 1] => Ok(jing_b(1, &jing_b(1, f)) - jing_b(2, &jing_b(0, f)).shift(1)),
        _ => Err(Error::UnsupportedShape(piece.clone())),
    }
}

/// `B_{λ^(0)} ⋯ B_{λ^(d−1)}(1)`.
pub fn gen_hl(pieces: &[Partition]) -> Result<SchurVector> {
    pieces.iter().rev().try_fold(SchurVector::one(), |acc, p| rect_b(p, &acc))
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
    fn creation_examples() {
        for a in 1..5 {
            assert_eq!(creation_s(a, &SchurVector::one()), s(&[a as usize]));
        }
        assert_eq!(creation_s(1, &s(&[1])), s(&[1, 1]));
        assert_eq!(creation_s(0, &SchurVector::one()), SchurVector::one());
        // S_a s_λ = s_(a,λ) when a ≥ λ_1
        assert_eq!(creation_s(2, &s(&[2, 1])), s(&[2, 2, 1]));
    }

    #[test]
    fn jing_examples() {
        assert_eq!(jing_b(3, &SchurVector::one()), s(&[3]));
        assert_eq!(jing_b(1, &s(&[1])), s(&[1, 1]) + s(&[2]).shift(1));
        assert_eq!(jing_b(0, &SchurVector::one()), SchurVector::one());
        assert!(jing_b(-1, &SchurVector::one()).is_zero());
    }

    #[test]
    fn hall_littlewood_examples() {
        assert_eq!(hall_littlewood(&p(&[1])), s(&[1]));
        assert_eq!(hall_littlewood(&p(&[1, 1])), s(&[1, 1]) + s(&[2]).shift(1));
        for n in 0..=6 {
            for lam in Partition::all(n) {
                let h = hall_littlewood(&lam);
                assert_eq!(h.specialize_q(0).unwrap(), s(lam.parts()), "{lam}");
            }
        }
    }

    #[test]
    fn rect_pieces() {
        let one = SchurVector::one();
        assert_eq!(rect_b(&p(&[1, 1]), &one).unwrap(), s(&[1, 1]));
        assert_eq!(rect_b(&p(&[2]), &one).unwrap(), s(&[2]));
        assert_eq!(rect_b(&p(&[1, 1]), &one).unwrap().specialize_q(0).unwrap(), s(&[1, 1]));
        assert!(rect_b(&p(&[2, 1]), &one).is_err());
        assert_eq!(gen_hl(&[p(&[2])]).unwrap(), s(&[2]));
        assert_eq!(gen_hl(&[p(&[2]), p(&[1, 1])]).unwrap(), jing_b(2, &s(&[1, 1])));
    }
}

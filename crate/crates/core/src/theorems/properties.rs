use rand::Rng;

use crate::error::Result;
use crate::kschur::hall_littlewood;
use crate::llt::{l_poly, llt_schur, Component, ShapeTuple};
use crate::partition::Partition;
use crate::symfunc::{skew_schur, SchurVector};

use super::decomposition::{closed_form_exponent, subsets};

/// A component together with the skew diagram it was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewPiece {
    pub outer: Partition,
    pub inner: Partition,
    pub offset: i32,
}

/// `llt(t)` at `q = 1` against `Π s_{λ/μ}`.
pub fn q_one_product(pieces: &[SkewPiece]) -> Result<(SchurVector, SchurVector)> {
    let comps =
        pieces.iter().map(|p| Component::from_skew(&p.outer, &p.inner, p.offset)).collect::<Result<Vec<_>>>()?;
    let lhs = llt_schur(&ShapeTuple::new(comps))?.specialize_q(1).expect("no negative powers at q = 1");
    let rhs = pieces
        .iter()
        .fold(SchurVector::one(), |acc, p| acc.multiply(&skew_schur(&p.outer, &p.inner).expect("inner inside outer")));
    Ok((lhs, rhs))
}

/// A random nonempty skew diagram inside a `rows × cols` box.
pub fn random_skew(rng: &mut impl Rng, rows: usize, cols: usize) -> (Partition, Partition) {
    loop {
        let mut outer: Vec<usize> = (0..rows).map(|_| rng.gen_range(0..=cols)).collect();
        outer.sort_unstable_by(|a, b| b.cmp(a));
        let mut inner: Vec<usize> = outer.iter().map(|&o| rng.gen_range(0..=o)).collect();
        // keep inner a partition while staying inside outer
        for i in 1..inner.len() {
            inner[i] = inner[i].min(inner[i - 1]);
        }
        let outer = Partition::new(outer).expect("sorted");
        let inner = Partition::new(inner).expect("sorted");
        if outer.size() > inner.size() {
            return (outer, inner);
        }
    }
}

/// Up to three random skew components with at most `max_n` cells in total.
pub fn random_skew_tuple(rng: &mut impl Rng, max_n: usize) -> Vec<SkewPiece> {
    loop {
        let d = rng.gen_range(1..=3);
        let pieces: Vec<SkewPiece> = (0..d)
            .map(|_| {
                let (outer, inner) = random_skew(rng, 3, 3);
                SkewPiece { outer, inner, offset: rng.gen_range(-2..=2) }
            })
            .collect();
        let n: usize = pieces.iter().map(|p| p.outer.size() - p.inner.size()).sum();
        if n <= max_n {
            return pieces;
        }
    }
}

/// `L(n, λ)` and `L(n, λ')`.
pub fn conjugate_symmetry(n: usize, lam: &Partition) -> Result<(SchurVector, SchurVector)> {
    Ok((l_poly(n, lam)?, l_poly(n, &lam.conjugate())?))
}

/// `ω(llt)` of `n` content-0 cells against `H_{1^n}`.
pub fn hall_littlewood_column(n: usize) -> Result<(SchurVector, SchurVector)> {
    let t = ShapeTuple::singles(&vec![0; n]);
    Ok((llt_schur(&t)?.omega(), hall_littlewood(&Partition::rectangle(n, 1))))
}

/// The largest closed-form exponent over `|I| = l`, `I ⊆ [⌊n/2⌋]`.
pub fn max_closed_form_exponent(n: usize, l: usize) -> Option<i32> {
    subsets(n / 2)
        .into_iter()
        .filter(|s| s.len() == l)
        .map(|s| closed_form_exponent(&s, n).expect("valid subset"))
        .max()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn q_one_examples() {
        let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
        let pieces = vec![
            SkewPiece { outer: p(&[2, 1]), inner: p(&[1]), offset: 0 },
            SkewPiece { outer: p(&[2]), inner: p(&[]), offset: 1 },
        ];
        let (l, r) = q_one_product(&pieces).unwrap();
        assert_eq!(l, r);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let t = random_skew_tuple(&mut rng, 6);
            let (l, r) = q_one_product(&t).unwrap();
            assert_eq!(l, r, "{t:?}");
        }
    }

    #[test]
    fn small_properties() {
        for n in 1..=5 {
            let (a, b) = hall_littlewood_column(n).unwrap();
            assert_eq!(a, b);
            for lam in Partition::in_staircase_all(n) {
                let (a, b) = conjugate_symmetry(n, &lam).unwrap();
                assert_eq!(a, b, "{lam}");
            }
            for l in 0..=n / 2 {
                assert_eq!(max_closed_form_exponent(n, l), Some((l * (n - l)) as i32));
            }
        }
    }
}

use llt_core::llt::{
    g_unicellular, llt, llt_schur, llt_specialized, tuple_from_partition, Component, ShapeTuple, TwoDiagTuple,
};
use llt_core::partition::Partition;
use llt_core::theorems::{q_one_product, random_skew_tuple};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shape(pieces: &[llt_core::theorems::SkewPiece]) -> ShapeTuple {
    ShapeTuple::new(pieces.iter().map(|p| Component::from_skew(&p.outer, &p.inner, p.offset).unwrap()).collect())
}

#[test]
fn fundamental_expansion_matches_direct_ssyt_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..40 {
        let pieces = random_skew_tuple(&mut rng, 5);
        let t = shape(&pieces);
        let direct = llt_specialized(&t, 3);
        let via_fund = llt(&t).unwrap().specialize(3);
        assert_eq!(direct, via_fund, "{pieces:?}");
    }
}

#[test]
fn q_one_is_product_of_skew_schur() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let pieces = random_skew_tuple(&mut rng, 7);
        let (lhs, rhs) = q_one_product(&pieces).unwrap();
        assert_eq!(lhs, rhs, "{pieces:?}");
    }
}

#[test]
fn unicellular_generating_function_matches_tuple() {
    for n in 1..=5 {
        for lam in Partition::in_staircase_all(n) {
            let g = g_unicellular(n, &lam).unwrap().to_schur().unwrap();
            let t = llt_schur(&tuple_from_partition(n, &lam).unwrap()).unwrap();
            assert_eq!(g, t, "n={n} lambda={lam}");
        }
    }
}

#[test]
fn llt_is_schur_positive_on_two_diagonal_tuples() {
    for t in TwoDiagTuple::all_up_to(3) {
        let s = llt_schur(&t.to_shape()).unwrap();
        assert!(s.is_q_positive(), "{t}: {s}");
    }
}

#[test]
fn tuple_conjugation_is_an_involution_fixing_q_one() {
    for t in TwoDiagTuple::all_up_to(3) {
        let c = t.conjugate();
        assert_eq!(c.conjugate(), t);
        let a = llt_schur(&t.to_shape()).unwrap();
        let b = llt_schur(&c.to_shape()).unwrap();
        assert_eq!(a.specialize_q(1), b.specialize_q(1), "{t}");
    }
}

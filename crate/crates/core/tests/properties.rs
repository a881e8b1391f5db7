use std::collections::BTreeMap;

use llt_core::kschur::{two_schur_expand, SplitBasis};
use llt_core::laurent::LaurentPoly;
use llt_core::partition::Partition;
use llt_core::symfunc::{monomial_to_schur, schur_to_monomial, SchurVector, TwoSchurVector};
use num_bigint::BigInt;
use proptest::prelude::*;

type Dense = BTreeMap<i32, i64>;

fn laurent_terms() -> impl Strategy<Value = Vec<(i32, i64)>> {
    prop::collection::vec((-6i32..=6, -20i64..=20), 0..6)
}

fn build(terms: &[(i32, i64)]) -> (LaurentPoly, Dense) {
    let poly = LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, BigInt::from(c))));
    let mut dense = Dense::new();
    for &(e, c) in terms {
        *dense.entry(e).or_default() += c;
    }
    dense.retain(|_, c| *c != 0);
    (poly, dense)
}

fn flatten(p: &LaurentPoly) -> Dense {
    p.terms().map(|(e, c)| (e, i64::try_from(c).unwrap())).collect()
}

fn dense_mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            *out.entry(ea + eb).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn schur_vector(n: usize) -> impl Strategy<Value = SchurVector> {
    let parts = Partition::all(n);
    prop::collection::vec(laurent_terms(), parts.len()).prop_map(move |coeffs| {
        let terms = parts.iter().cloned().zip(coeffs.iter().map(|t| build(t).0));
        SchurVector::from_terms(n, terms)
    })
}

fn degree_and_vector() -> impl Strategy<Value = SchurVector> {
    (0usize..=5).prop_flat_map(schur_vector)
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0usize..=6, 0..6).prop_map(|v| {
        let mut v = v;
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn pairing(f: &SchurVector, g: &SchurVector) -> LaurentPoly {
    f.terms().map(|(p, c)| c * &g.coeff(p)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn laurent_ring_matches_dense_oracle(a in laurent_terms(), b in laurent_terms()) {
        let (pa, da) = build(&a);
        let (pb, db) = build(&b);
        prop_assert_eq!(flatten(&pa), da.clone());
        let mut sum = da.clone();
        for (e, c) in &db {
            *sum.entry(*e).or_default() += c;
        }
        sum.retain(|_, c| *c != 0);
        prop_assert_eq!(flatten(&(&pa + &pb)), sum);
        prop_assert_eq!(flatten(&(&pa * &pb)), dense_mul(&da, &db));
        prop_assert!((&pa - &pa).is_zero());
        prop_assert_eq!(&(&pa * &pb) * &LaurentPoly::q(), (&pa * &pb).shift(1));
        prop_assert_eq!(pa.substitute_qinv().substitute_qinv(), pa.clone());
    }

    #[test]
    fn division_by_q_minus_one_inverts_multiplication(a in laurent_terms()) {
        let (p, _) = build(&a);
        let qm1 = LaurentPoly::q() - LaurentPoly::one();
        prop_assert_eq!((&p * &qm1).div_q_minus_one(), Some(p));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in laurent_terms(), b in laurent_terms()) {
        let (pa, _) = build(&a);
        let (pb, _) = build(&b);
        let prod = &pa * &pb;
        prop_assert_eq!(prod.eval_at(1), Some(pa.eval_at(1).unwrap() * pb.eval_at(1).unwrap()));
    }

    #[test]
    fn laurent_json_round_trip(a in laurent_terms()) {
        let (p, _) = build(&a);
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn omega_is_an_involution(f in degree_and_vector()) {
        prop_assert_eq!(f.omega().omega(), f);
    }

    #[test]
    fn schur_monomial_round_trip(f in degree_and_vector()) {
        prop_assert_eq!(monomial_to_schur(&schur_to_monomial(&f)).unwrap(), f);
    }

    #[test]
    fn h_perp_is_adjoint_to_h(r in 0usize..=3, f in schur_vector(3)) {
        let g = Partition::all(3 + r).into_iter().fold(SchurVector::zero(3 + r), |mut acc, p| {
            let k = p.len() as i32;
            acc.add_term(p, LaurentPoly::monomial(k, 1));
            acc
        });
        prop_assert_eq!(pairing(&f.h_multiply(r as i64), &g), pairing(&f, &g.h_perp(r)));
    }

    #[test]
    fn schur_vector_json_round_trip(f in degree_and_vector()) {
        let s = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<SchurVector>(&s).unwrap(), f);
    }

    #[test]
    fn two_schur_expand_combine_round_trip(n in 0usize..=6, coeffs in prop::collection::vec(laurent_terms(), 8)) {
        let basis = SplitBasis::for_degree(n).unwrap();
        let k = TwoSchurVector::from_terms(
            n,
            basis.partitions().iter().cloned().zip(coeffs.iter().map(|t| build(t).0)),
        );
        let f = basis.combine(&k);
        prop_assert_eq!(&basis.expand(&f).unwrap(), &k);
        prop_assert_eq!(two_schur_expand(&f).unwrap(), k.clone());
        let s = serde_json::to_string(&k).unwrap();
        prop_assert_eq!(serde_json::from_str::<TwoSchurVector>(&s).unwrap(), k);
    }
}

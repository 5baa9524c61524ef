//! Randomized property suites: ring axioms, Gaussian binomial facts, orbit
//! invariants, the evaluation homomorphism, shift/evaluate commutation, and
//! closure idempotence.

use num::{BigInt, BigRational, One};
use proptest::prelude::*;
use schur::idealgen::{evaluation_hom, BasisChoice, PointSet};
use schur::laurent::{qbinom, KPolynomial, VLaurent};
use schur::rootdata::{preset, PresetKind, RootDatum, Weight};
use schur::weylgroup::{
    dominant_representative, is_dominant, orbit, reflect, SaturatedSet,
};

fn vlaurent_strategy() -> impl Strategy<Value = VLaurent> {
    proptest::collection::vec((-5i64..=5, -9i64..=9), 0..4).prop_map(|terms| {
        let mut out = VLaurent::zero();
        for (e, c) in terms {
            out = &out + &VLaurent::monomial(e, BigRational::from_integer(BigInt::from(c)));
        }
        out
    })
}

fn kpoly_strategy(n: usize) -> impl Strategy<Value = KPolynomial> {
    proptest::collection::vec(
        (
            proptest::collection::vec(-3i64..=3, n),
            -4i64..=4,
            -3i64..=3,
        ),
        0..4,
    )
    .prop_map(move |terms| {
        let mut out = KPolynomial::zero(n);
        for (exps, vexp, c) in terms {
            out = &out
                + &KPolynomial::monomial(
                    exps,
                    VLaurent::monomial(vexp, BigRational::from_integer(BigInt::from(c))),
                );
        }
        out
    })
}

fn datum_strategy() -> impl Strategy<Value = RootDatum> {
    (0usize..5).prop_map(|i| match i {
        0 => preset(PresetKind::Gl, 2).unwrap(),
        1 => preset(PresetKind::Gl, 3).unwrap(),
        2 => preset(PresetKind::Sp, 2).unwrap(),
        3 => preset(PresetKind::SpinB, 2).unwrap(),
        _ => preset(PresetKind::SoEven, 3).unwrap(),
    })
}

fn weight_for(d: &RootDatum) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(-3i64..=3, d.rank()).prop_map(Weight)
}

fn binomial(a: i64, t: u64) -> BigRational {
    let mut out = BigRational::one();
    for s in 0..t as i64 {
        out *= BigRational::from_integer(BigInt::from(a - s))
            / BigRational::from_integer(BigInt::from(s + 1));
    }
    out
}

proptest! {
    #[test]
    fn vlaurent_ring_axioms(
        a in vlaurent_strategy(),
        b in vlaurent_strategy(),
        c in vlaurent_strategy(),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &VLaurent::one(), a.clone());
        prop_assert_eq!(&a + &VLaurent::zero(), a.clone());
        prop_assert_eq!(&a - &a, VLaurent::zero());
    }

    #[test]
    fn kpoly_ring_axioms(
        a in kpoly_strategy(2),
        b in kpoly_strategy(2),
        c in kpoly_strategy(2),
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &KPolynomial::one(2), a.clone());
    }

    #[test]
    fn qbinom_facts(a in -8i64..=8, t in 0u64..6) {
        let q = qbinom(a, t);
        // integer Laurent coefficients
        for (_, c) in q.terms() {
            prop_assert!(c.is_integer());
        }
        // bar symmetry
        prop_assert_eq!(q.bar(), q.clone());
        // classical specialization
        prop_assert_eq!(q.eval_at_one(), binomial(a, t));
    }

    #[test]
    fn eval_at_one_is_homomorphism(a in vlaurent_strategy(), b in vlaurent_strategy()) {
        prop_assert_eq!((&a * &b).eval_at_one(), a.eval_at_one() * b.eval_at_one());
        prop_assert_eq!((&a + &b).eval_at_one(), a.eval_at_one() + b.eval_at_one());
    }

    #[test]
    fn orbit_and_reflection_invariants(
        (d, w) in datum_strategy().prop_flat_map(|d| {
            let w = weight_for(&d);
            (Just(d), w)
        }),
        i_pick in 0usize..8,
    ) {
        let i = i_pick % d.num_simple();
        // involution
        prop_assert_eq!(reflect(&d, i, &reflect(&d, i, &w)), w.clone());
        let orb = orbit(&d, &w);
        prop_assert!(orb.contains(&w));
        // reflections stay inside the orbit and generate the same orbit
        prop_assert_eq!(orbit(&d, &reflect(&d, i, &w)), orb.clone());
        let rep = dominant_representative(&d, &w);
        prop_assert!(is_dominant(&d, &rep));
        prop_assert!(orb.contains(&rep));
        // exactly one dominant weight per orbit
        prop_assert_eq!(orb.iter().filter(|x| is_dominant(&d, x)).count(), 1);
    }

    #[test]
    fn evaluation_hom_is_homomorphism(a in kpoly_strategy(2), b in kpoly_strategy(2)) {
        let d = preset(PresetKind::Gl, 2).unwrap();
        let pi = SaturatedSet::closure(&d, &[Weight(vec![2, 0])]).unwrap();
        let points = PointSet::quantized(&d, &pi.orbit_union(&d), BasisChoice::Canonical).unwrap();
        let va = evaluation_hom(&points, &a).unwrap();
        let vb = evaluation_hom(&points, &b).unwrap();
        let vsum = evaluation_hom(&points, &(&a + &b)).unwrap();
        let vprod = evaluation_hom(&points, &(&a * &b)).unwrap();
        for k in 0..points.len() {
            prop_assert_eq!(&vsum[k], &(&va[k] + &vb[k]));
            prop_assert_eq!(&vprod[k], &(&va[k] * &vb[k]));
        }
    }

    #[test]
    fn shift_commutes_with_evaluation(
        f in kpoly_strategy(2),
        e in proptest::collection::vec(-4i64..=4, 2),
        s in proptest::collection::vec(-2i64..=2, 2),
        sign in prop_oneof![Just(1i64), Just(-1i64)],
    ) {
        let shifted: Vec<i64> = e.iter().zip(&s).map(|(x, y)| x + sign * y).collect();
        prop_assert_eq!(
            f.shift_substitute(&s, sign).evaluate(&e),
            f.evaluate(&shifted)
        );
    }

    #[test]
    fn saturated_closure_idempotent(
        (d, w) in datum_strategy().prop_flat_map(|d| {
            let w = weight_for(&d);
            (Just(d), w)
        }),
    ) {
        let gen = dominant_representative(&d, &w);
        let pi = SaturatedSet::closure(&d, &[gen]).unwrap();
        let again = SaturatedSet::closure(&d, pi.dominant_weights()).unwrap();
        prop_assert_eq!(&pi, &again);
        prop_assert!(SaturatedSet::verify(&d, pi.dominant_weights()).is_ok());
    }
}

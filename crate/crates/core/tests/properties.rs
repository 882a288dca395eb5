use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

use onerow::arith::rational::rat;
use onerow::arith::{BigRat, Field, LaurentPoly, Mono, Scalar, SparsePoly};
use onerow::macdonald::{bc_specialize, eigenvalue_bracket, eigenvalue_pairs, Base};
use onerow::qseries::{qpoch, qpoch_multi};
use onerow::tableaux::{enumerate, weight_of, Alphabet, Family};

fn cfg(cases: u32, seed: u64) -> Config {
    Config { cases, rng_seed: RngSeed::Fixed(seed), failure_persistence: None, ..Config::default() }
}

fn poly(terms: &[(u32, u32, u32, i64)]) -> SparsePoly {
    SparsePoly::from_terms(terms.iter().map(|&(a, b, c, k)| (Mono::new([a, b, c]), rat(k, 1))))
}

/// `1 - s·u^a v^b w^c` with a nontrivial monomial.
fn binomial(a: u32, b: u32, c: u32, s: i64) -> Scalar {
    let m = if a + b + c == 0 { [1, 0, 0] } else { [a, b, c] };
    Scalar::from_poly(poly(&[(0, 0, 0, 1), (m[0], m[1], m[2], -s)]))
}

prop_compose! {
    fn scalar()(
        num in prop::collection::vec((0u32..4, 0u32..4, 0u32..3, -3i64..=3), 1..4),
        up in prop::collection::vec((0u32..3, 0u32..3, 0u32..2, prop::sample::select(vec![1i64, -1, 2])), 0..3),
        down in prop::collection::vec((0u32..3, 0u32..3, 0u32..2, prop::sample::select(vec![1i64, -1, 2])), 0..3),
        mono in (-2i32..=2, -2i32..=2, -1i32..=1),
    ) -> Scalar {
        let mut x = Scalar::from_poly(poly(&num)).mul(&Scalar::monomial([mono.0, mono.1, mono.2]));
        for &(a, b, c, s) in &up {
            x = x.mul(&binomial(a, b, c, s));
        }
        for &(a, b, c, s) in &down {
            x = x.div(&binomial(a, b, c, s)).unwrap();
        }
        x
    }
}

fn point() -> impl Strategy<Value = [BigRat; 3]> {
    let r = (1i64..40, 1i64..40, prop::bool::ANY).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d));
    [r.clone(), r.clone(), r]
}

proptest! {
    #![proptest_config(cfg(64, 11))]

    #[test]
    fn scalar_ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert!(a.mul(&a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(Scalar::parse(&a.to_text()).unwrap(), a);
    }

    #[test]
    fn scalar_square_root(a in scalar()) {
        prop_assume!(!a.is_zero());
        let sq = a.mul(&a);
        let r = sq.sqrt().unwrap();
        prop_assert_eq!(r.mul(&r), sq);
    }
}

proptest! {
    #![proptest_config(cfg(200, 2024))]

    /// Symbolic operations commute with evaluation at rational points.
    #[test]
    fn scalar_matches_rationals(a in scalar(), b in scalar(), at in point()) {
        let (ea, eb) = (a.eval(&at), b.eval(&at));
        prop_assume!(ea.is_ok() && eb.is_ok());
        let (ea, eb) = (ea.unwrap(), eb.unwrap());
        prop_assert_eq!(a.add(&b).eval(&at).unwrap(), &ea + &eb);
        prop_assert_eq!(a.sub(&b).eval(&at).unwrap(), &ea - &eb);
        prop_assert_eq!(a.mul(&b).eval(&at).unwrap(), &ea * &eb);
        if !Field::is_zero(&eb) && !b.is_zero() {
            if let Ok(v) = a.div(&b).unwrap().eval(&at) {
                prop_assert_eq!(v, &ea / &eb);
            }
        }
    }
}

prop_compose! {
    fn laurent(rank: usize)(
        terms in prop::collection::vec((prop::collection::vec(-3i32..=3, rank), -5i64..=5, 1i64..5), 0..6)
    ) -> LaurentPoly<BigRat> {
        LaurentPoly::from_terms(rank, terms.into_iter().map(|(e, n, d)| (e, rat(n, d))))
    }
}

fn nonzero_rat() -> impl Strategy<Value = BigRat> {
    (1i64..20, 1i64..20, prop::bool::ANY).prop_map(|(n, d, neg)| rat(if neg { -n } else { n }, d))
}

proptest! {
    #![proptest_config(cfg(128, 5))]

    #[test]
    fn substitution_is_a_homomorphism(p in laurent(2), q in laurent(2), x in nonzero_rat(), y in nonzero_rat()) {
        let at = [x, y];
        let (vp, vq) = (p.substitute(&at).unwrap(), q.substitute(&at).unwrap());
        prop_assert_eq!(p.add(&q).unwrap().substitute(&at).unwrap(), &vp + &vq);
        prop_assert_eq!(p.mul(&q).unwrap().substitute(&at).unwrap(), &vp * &vq);
    }

    #[test]
    fn laurent_text_round_trip(p in laurent(3)) {
        prop_assert_eq!(LaurentPoly::parse(3, &p.to_text()).unwrap(), p);
    }

    #[test]
    fn binomial_division_inverts_multiplication(p in laurent(2), c in nonzero_rat(), e0 in 0i32..3, e1 in -2i32..3) {
        let e = if e0 == 0 && e1 <= 0 { vec![0, 1] } else { vec![e0, e1] };
        let b = LaurentPoly::from_terms(2, [(vec![0, 0], rat(1, 1)), (e.clone(), -c.clone())]);
        let prod = p.mul(&b).unwrap();
        prop_assert_eq!(prod.div_binomial(&c, &e).unwrap(), p);
    }

    #[test]
    fn dilation_matches_substitution(p in laurent(2), c in nonzero_rat(), x in nonzero_rat(), y in nonzero_rat()) {
        let d = p.dilate(1, &c).unwrap();
        prop_assert_eq!(d.substitute(&[x.clone(), y.clone()]).unwrap(), p.substitute(&[x, &c * &y]).unwrap());
    }

    #[test]
    fn qpoch_multi_is_a_product(zs in prop::collection::vec(nonzero_rat(), 0..4), q in nonzero_rat(), k in -3i64..=4) {
        let each: Vec<_> = zs.iter().map(|z| qpoch(z, &q, k)).collect();
        prop_assume!(each.iter().all(|r| r.is_ok()));
        let prod = each.into_iter().fold(rat(1, 1), |a, r| a * r.unwrap());
        prop_assert_eq!(qpoch_multi(&zs, &q, k).unwrap(), prod);
    }
}

proptest! {
    #![proptest_config(cfg(24, 7))]

    #[test]
    fn eigenvalue_forms_agree(
        lambda in prop::collection::vec(0u32..5, 1..4),
        a in prop::sample::select(vec![(0i32, 0i32, 0i32), (0, 2, 0), (0, 0, 2), (2, -2, 0), (-2, 4, 2)]),
        b in prop::sample::select(vec![(0i32, 0i32, 0i32), (0, 2, 0), (0, 0, 2), (-2, 4, 0), (0, 2, 2)]),
    ) {
        let mut lambda = lambda;
        lambda.sort_unstable_by(|x, y| y.cmp(x));
        let base = Base::symbolic();
        let kp = bc_specialize(Scalar::monomial([a.0, a.1, a.2]), Scalar::monomial([b.0, b.1, b.2]), base.q, base.t).unwrap();
        let pairs = eigenvalue_pairs(&lambda, &kp).unwrap().d_lambda;
        prop_assert_eq!(pairs, eigenvalue_bracket(&lambda, &kp).unwrap());
    }

    #[test]
    fn bar_involution_negates_weights(n in 1usize..4, r in 0u32..5, c in prop::bool::ANY) {
        let family = if c { Family::C } else { Family::D };
        let tabs = enumerate(Alphabet::new(family, n), r);
        let thetas: std::collections::BTreeSet<Vec<u32>> = tabs.iter().map(|t| t.theta.clone()).collect();
        for t in &tabs {
            let mut bar = t.theta.clone();
            bar.reverse();
            let neg: Vec<i32> = t.weight().iter().map(|k| -k).collect();
            prop_assert_eq!(weight_of(&bar), neg);
            prop_assert!(thetas.contains(&bar));
        }
    }
}

use onerow::arith::rational::rat;
use onerow::arith::{BigRat, Field, Scalar};
use onerow::qseries::sampler::{check_sampled, run_identity_suite};
use onerow::qseries::*;

fn r(n: i64, d: i64) -> BigRat {
    rat(n, d)
}

#[test]
fn two_term_phi() {
    // 2φ1[t²/q, q^{-1}; t^{-2}q; q, (qx/t)²] by hand
    let (q, t, x) = (r(2, 7), r(3, 5), r(5, 11));
    let z = (&q * &x / &t).pow(2);
    let a = &t * &t / &q;
    let b = q.recip();
    let c = &q / (&t * &t);
    let spec = HypSeriesSpec::phi(vec![a.clone(), b.clone()], vec![c.clone()], q.clone(), z.clone());
    let one = r(1, 1);
    let want = &one + (&one - &a) * (&one - &b) / ((&one - &q) * (&one - &c)) * &z;
    assert_eq!(series_eval(&spec).unwrap(), want);
}

#[test]
fn zero_argument_collapses() {
    let q = r(3, 7);
    let spec = HypSeriesSpec::phi(vec![q.pow(-3), r(2, 5)], vec![r(1, 11)], q, r(0, 1));
    assert_eq!(series_eval(&spec).unwrap(), r(1, 1));
}

#[test]
fn lower_pole_is_reported() {
    let q = r(1, 2);
    let spec = HypSeriesSpec::phi(vec![q.pow(-3), r(2, 5)], vec![q.pow(-1)], q, r(1, 3));
    assert!(series_eval(&spec).unwrap_err().is_pole());
}

#[test]
fn qpoch_recurrence() {
    let q = r(2, 9);
    let z = r(5, 13);
    for k in -4..4i64 {
        let lhs = qpoch(&z, &q, k + 1).unwrap();
        let rhs = qpoch(&z, &q, k).unwrap() * (r(1, 1) - q.pow(k as i32) * &z);
        assert_eq!(lhs, rhs, "k = {k}");
    }
}

#[test]
fn balanced_12w11() {
    let (a, f, a2, q) = (r(2, 3), r(1, 5), r(3, 7), r(2, 11));
    let a3 = &a * &f / &a2;
    let spec = identities::thm22_spec(&a, &f, &a2, &a3, &q, 3).unwrap();
    assert!(is_vwp_balanced(&spec));
    let mut broken = spec.clone();
    broken.argument = &broken.argument * r(3, 2);
    assert!(!is_vwp_balanced(&broken));
}

#[test]
fn six_w_five_is_balanced() {
    let (a, b, c, q) = (r(2, 3), r(5, 7), r(3, 11), r(2, 13));
    let n = 3;
    let z = &a * q.pow(n + 1) / (&b * &c);
    let spec = HypSeriesSpec::w(a, vec![Param::One(b), Param::One(c), Param::One(q.pow(-n))], q, z);
    assert!(is_vwp_balanced(&spec));
}

#[test]
fn theorem_instance() {
    let (a, f, a2, q) = (r(2, 3), r(1, 5), r(3, 7), r(2, 11));
    for id in [IdentityId::Thm22, IdentityId::Thm22Sum] {
        for theta in 0..=3 {
            let inst = TransformInstance::new(id)
                .with("a", a.clone())
                .with("f", f.clone())
                .with("a2", a2.clone())
                .with("q", q.clone())
                .with_int("theta", theta);
            let (l, rr) = sides(&inst).unwrap();
            assert_eq!(l, rr, "{id} theta={theta}");
        }
    }
}

#[test]
fn theorem_side_condition() {
    let inst = TransformInstance::new(IdentityId::Thm22)
        .with("a", r(2, 3))
        .with("f", r(1, 5))
        .with("a2", r(3, 7))
        .with("a3", r(1, 1))
        .with("q", r(2, 11))
        .with_int("theta", 2);
    assert!(matches!(verify_identity(&inst), Err(onerow::Error::Usage(_))));
}

#[test]
fn every_identity_on_25_samples() {
    let reports = run_identity_suite(&IdentityId::ALL, 7, 25);
    for rep in &reports {
        assert!(rep.residual_is_zero, "{:?}", rep);
    }
}

#[test]
fn watson_n2() {
    let rep = check_sampled(IdentityId::Watson, 99, Some(2));
    assert!(rep.residual_is_zero, "{rep:?}");
}

#[test]
fn symbolic_thm22_theta1() {
    // a, f, a2 as monomials in q, t, T keep everything in the symbolic field
    let q = Scalar::q();
    let t = Scalar::t();
    let big = Scalar::big_t();
    let inst = TransformInstance::new(IdentityId::Thm22)
        .with("a", t.clone())
        .with("f", big.clone())
        .with("a2", t.mul(&t))
        .with("q", q)
        .with_int("theta", 1);
    assert!(verify_identity(&inst).unwrap().is_zero());
}

#[test]
fn type_d_transform_small() {
    let samples = [(r(2, 7), r(3, 5)), (r(3, 11), r(5, 13)), (r(-2, 17), r(7, 19))];
    for (q, t) in &samples {
        for n in 2..=3usize {
            for k in 0..=3u32 {
                for mm in 0..3u32.pow(n as u32) {
                    let m: Vec<u32> = (0..n).map(|i| (mm / 3u32.pow(i as u32)) % 3).collect();
                    let res = verify_transform_II(n, k, &m, q, t).unwrap();
                    assert!(res.is_zero(), "n={n} K={k} m={m:?}");
                }
            }
        }
    }
}

#[test]
fn type_d_spec_instance() {
    assert!(verify_transform_II(3, 2, &[1, 0, 2], &r(2, 7), &r(3, 5)).unwrap().is_zero());
}

#[test]
fn rank_two_explicit() {
    for k in 0..=4 {
        for m1 in 0..=2 {
            for m2 in 0..=2 {
                assert!(rank_two_residual(k, m1, m2, &r(2, 7), &r(3, 5)).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn type_c_transform_small() {
    let samples = [(r(3, 8), r(2, 9)), (r(2, 7), r(3, 5)), (r(5, 13), r(-3, 11))];
    for (q, t) in &samples {
        for n in 2..=3usize {
            for k in 0..=3u32 {
                for mm in 0..3u32.pow(n as u32) {
                    let m: Vec<u32> = (0..n).map(|i| (mm / 3u32.pow(i as u32)) % 3).collect();
                    let res = verify_transform_III(n, k, &m, q, t).unwrap();
                    assert!(res.is_zero(), "n={n} K={k} m={m:?}");
                }
            }
        }
    }
}

#[test]
fn type_c_printed_exponent_reading() {
    let (q, t) = (r(3, 8), r(2, 9));
    let printed = transform_iii_residual(3, 2, &[1, 1, 0], &q, &t, TypeCReading::AsPrinted).unwrap();
    let doubled = transform_iii_residual(3, 2, &[1, 1, 0], &q, &t, TypeCReading::Doubled).unwrap();
    assert!(!printed.is_zero());
    assert!(doubled.is_zero());
}

#[test]
fn pair_sum_symmetric_in_m() {
    let (q, t) = (r(2, 7), r(3, 5));
    let a = pair_sum(3, &[2, 0, 1], &q, &t).unwrap();
    let b = pair_sum(3, &[0, 1, 2], &q, &t).unwrap();
    assert_eq!(a, b);
}

#[test]
fn induction_step_readings() {
    let (q, t) = (r(2, 7), r(3, 5));
    for n in [3usize, 4] {
        for k in 0..=3u32 {
            let m: Vec<u32> = (0..n as u32).map(|i| (i + 2) % 3).collect();
            let res = |rd| induction_step_residual(n, k, &m, &q, &t, rd).unwrap();
            assert!(res(InductionReading::Corrected).is_zero(), "n={n} K={k}");
            if k > 0 {
                assert!(!res(InductionReading::AsPrinted).is_zero(), "n={n} K={k}");
            }
            // the l-product only exists from n = 4 on
            let den_only = res(InductionReading::PrintedDenominator).is_zero();
            assert_eq!(den_only, n == 3 || k == 0, "n={n} K={k}");
        }
    }
}

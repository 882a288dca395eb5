use std::collections::BTreeSet;

use onerow::arith::laurent::orbit_sum;
use onerow::arith::rational::rat;
use onerow::arith::{BigRat, LaurentPoly, Scalar};
use onerow::macdonald::{tableau_poly_d, Base};
use onerow::tableaux::{count_closed_form, enumerate, Alphabet, Family};
use onerow::walgebra::*;
use onerow::Error;

fn g(z: &BigRat, q: &BigRat, t: &BigRat) -> BigRat {
    let one = rat(1, 1);
    (&one - t * t * z) * (&one - z / (q * q)) / ((&one - z) * (&one - z * t * t / (q * q)))
}

fn m1(l: usize) -> LaurentPoly<Scalar> {
    let mut e = vec![0; l];
    e[0] = 1;
    orbit_sum(l, &e)
}

#[test]
fn gamma_base_values() {
    let (q, t) = (rat(2, 7), rat(3, 5));
    assert_eq!(gamma_base(&rat(0, 1), &q, &t).unwrap(), rat(1, 1));
    for z in [rat(1, 3), rat(-4, 9)] {
        assert_eq!(gamma_base(&z, &q, &rat(1, 1)).unwrap(), rat(1, 1));
        assert_eq!(gamma_base(&z, &q, &t).unwrap(), g(&z, &q, &t));
    }
    assert!(gamma_base(&rat(1, 1), &q, &t).unwrap_err().is_pole());
    assert!(gamma_base(&(&q * &q / (&t * &t)), &q, &t).unwrap_err().is_pole());
}

#[test]
fn gamma_pair_cases() {
    let (q, t) = (rat(2, 7), rat(3, 5));
    let (z, w) = (rat(5, 3), rat(-1, 4));
    let c = GammaTable::new(Family::C, 2, q.clone(), t.clone());
    assert_eq!(gamma_pair(&c, 1, 1, &z, &w).unwrap(), rat(1, 1));
    assert_eq!(gamma_pair(&c, 0, 1, &z, &w).unwrap(), g(&(&w / &z), &q, &t));
    assert_eq!(gamma_pair(&c, 2, 0, &z, &w).unwrap(), g(&(&z / &w), &q, &t));
    // letters 1 and 1bar at l = 2
    let printed = c.clone().with_reading(TableReading::AsPrinted);
    let s = t.pow(2) / q.pow(4);
    assert_eq!(gamma_pair(&printed, 0, 3, &z, &w).unwrap(), g(&(&w / &z), &q, &t) * g(&(&s * &w / &z), &q, &t));
    let s = t.pow(4) / q.pow(2);
    assert_eq!(gamma_pair(&c, 0, 3, &z, &w).unwrap(), g(&(&w / &z), &q, &t) * g(&(&s * &w / &z), &q, &t));
    assert_eq!(gamma_pair(&c, 3, 0, &z, &w).unwrap(), g(&(&z / &w), &q, &t) * g(&(&s * &z / &w), &q, &t));
    let s = q.pow(4) / t.pow(2);
    assert_eq!(gamma_pair(&printed, 3, 0, &z, &w).unwrap(), g(&(&z / &w), &q, &t) * g(&(&s * &z / &w), &q, &t));
    // type D: 2 and 2bar are incomparable but still a conjugate pair
    let d = GammaTable::new(Family::D, 2, q.clone(), t.clone());
    let s = q.pow(2) / t.pow(2);
    assert_eq!(gamma_pair(&d, 1, 2, &z, &w).unwrap(), g(&(&w / &z), &q, &t) * g(&(&s * &w / &z), &q, &t));
    assert_eq!(gamma_pair(&d, 1, 0, &z, &w).unwrap(), g(&(&z / &w), &q, &t));
}

#[test]
fn correlation_small_cases() {
    let (q, t) = (rat(2, 7), rat(3, 5));
    let spec = |z: Vec<BigRat>| CorrelationSpec { gamma: GammaTable::new(Family::C, 1, q.clone(), t.clone()), z };
    assert_eq!(correlation_f(&spec(vec![]), DEFAULT_BUDGET).unwrap(), LaurentPoly::one(1));
    let x = |k: i32| LaurentPoly::<BigRat>::var(1, 0, k);
    let f1 = correlation_f(&spec(vec![rat(3, 1)]), DEFAULT_BUDGET).unwrap();
    assert_eq!(f1, x(1).add(&x(-1)).unwrap());
    // four words: 11, 1 1bar, 1bar 1, 1bar 1bar
    let (z1, z2) = (rat(3, 1), rat(1, 2));
    let f2 = correlation_f(&spec(vec![z1.clone(), z2.clone()]), DEFAULT_BUDGET).unwrap();
    let (fw, bw) = (&z2 / &z1, &z1 / &z2);
    let s = t.pow(2);
    let c0 = g(&fw, &q, &t) * g(&(&s * &fw), &q, &t) + g(&bw, &q, &t) * g(&(&s * &bw), &q, &t);
    let want = LaurentPoly::from_terms(1, [(vec![2], rat(1, 1)), (vec![0], c0), (vec![-2], rat(1, 1))]);
    assert_eq!(f2, want);
}

#[test]
fn correlation_is_symmetric_in_z() {
    let (q, t) = (rat(2, 7), rat(3, 5));
    let zs = [rat(3, 1), rat(-1, 2), rat(5, 11)];
    for family in [Family::C, Family::D] {
        for l in 1..=3 {
            for r in 2..=3 {
                let gt = GammaTable::new(family, l, q.clone(), t.clone());
                let z: Vec<_> = zs[..r].to_vec();
                let f = correlation_f(&CorrelationSpec { gamma: gt.clone(), z: z.clone() }, DEFAULT_BUDGET).unwrap();
                for (a, b) in [(0, 1), (r - 2, r - 1)] {
                    let mut zz = z.clone();
                    zz.swap(a, b);
                    let swapped = correlation_f(&CorrelationSpec { gamma: gt.clone(), z: zz }, DEFAULT_BUDGET).unwrap();
                    assert_eq!(f, swapped, "{family} l={l} r={r}");
                }
            }
        }
        // the printed table is not symmetric
        let gt = GammaTable::new(family, 1, q.clone(), t.clone()).with_reading(TableReading::AsPrinted);
        let f = |z: Vec<BigRat>| correlation_f(&CorrelationSpec { gamma: gt.clone(), z }, DEFAULT_BUDGET).unwrap();
        assert_ne!(f(vec![zs[0].clone(), zs[1].clone()]), f(vec![zs[1].clone(), zs[0].clone()]));
    }
}

#[test]
fn soukan_grid_both_paths() {
    let b = Base::<Scalar>::symbolic();
    for family in [Family::C, Family::D] {
        for l in 1..=3 {
            for r in 0..=3 {
                let cfg = PhiConfig::default();
                assert!(soukan_residual(&b, family, l, r, cfg).unwrap().is_zero(), "{family} l={l} r={r}");
                let full = phi_principal(&b, family, l, r, cfg).unwrap();
                let short = phi_principal(&b, family, l, r, cfg.words(Words::Increasing)).unwrap();
                assert_eq!(full, short, "{family} l={l} r={r}");
            }
        }
    }
}

#[test]
fn printed_type_c_table_is_refuted() {
    let b = Base::<Scalar>::symbolic();
    let printed = PhiConfig { reading: TableReading::AsPrinted, ..PhiConfig::default() };
    assert!(!soukan_residual(&b, Family::C, 1, 2, printed).unwrap().is_zero());
    assert!(soukan_residual(&b, Family::C, 2, 1, printed).unwrap().is_zero());
    assert!(soukan_residual(&b, Family::D, 2, 3, printed).unwrap().is_zero());
}

#[test]
fn phi_low_rows() {
    let b = Base::<Scalar>::symbolic();
    for family in [Family::C, Family::D] {
        for l in 1..=3 {
            assert_eq!(phi_principal(&b, family, l, 0, PhiConfig::default()).unwrap(), LaurentPoly::one(l));
            assert_eq!(phi_principal(&b, family, l, 1, PhiConfig::default()).unwrap(), m1(l));
        }
    }
    let phi = phi_principal(&b, Family::D, 2, 2, PhiConfig::default()).unwrap();
    assert_eq!(phi, tableau_poly_d(&b, 2, 2).unwrap());
}

#[test]
fn surviving_words_are_tableaux() {
    let b = Base::<Scalar>::symbolic();
    for family in [Family::C, Family::D] {
        for l in 1..=3 {
            for r in 0..=3 {
                let support = phi_support(&b, family, l, r, PhiConfig::default()).unwrap();
                let tabs = enumerate(Alphabet::new(family, l), r);
                let words: BTreeSet<Vec<usize>> = tabs
                    .iter()
                    .map(|t| t.theta.iter().enumerate().flat_map(|(p, &k)| std::iter::repeat_n(p, k as usize)).collect())
                    .collect();
                assert_eq!(support, words, "{family} l={l} r={r}");
                let weights: BTreeSet<Vec<i32>> = tabs.iter().map(|t| t.weight()).collect();
                let phi = phi_principal(&b, family, l, r, PhiConfig::default()).unwrap();
                assert!(phi.support().into_iter().all(|e| weights.contains(&e)));
            }
        }
    }
}

#[test]
fn tableau_counts() {
    for family in [Family::C, Family::D] {
        for n in 1..=3 {
            for r in 0..=6 {
                let got = enumerate(Alphabet::new(family, n), r).len() as u64;
                assert_eq!(got, count_closed_form(family, n, r), "{family} n={n} r={r}");
            }
        }
    }
}

#[test]
fn budget_is_enforced() {
    let b = Base::<Scalar>::symbolic();
    match phi_principal(&b, Family::C, 3, 7, PhiConfig::default()) {
        Err(Error::Budget { needed, budget }) => {
            assert_eq!(needed, 6u128.pow(7));
            assert_eq!(budget, DEFAULT_BUDGET);
        }
        other => panic!("expected a budget error, got {other:?}"),
    }
    let small = PhiConfig { budget: 10, ..PhiConfig::default() };
    assert!(phi_principal(&b, Family::D, 2, 2, small).is_err());
    assert!(phi_principal(&b, Family::D, 2, 2, small.words(Words::Increasing)).is_ok());
}

//! One line per acceptance criterion. Runs without the libtest harness so the
//! report is always printed.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use onerow::arith::LaurentPoly;
use onerow::cli::{run, run_suite, Check, Suite, SuiteConfig};
use onerow::macdonald::koornwinder::{Koornwinder, KoornwinderParams};
use onerow::macdonald::Base;
use onerow::tableaux::{binomial, compositions, count_closed_form, enumerate, Alphabet, Family};
use onerow::walgebra::{phi_support, PhiConfig};
use onerow::Error;

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn Fn() -> Outcome>);

fn suites(list: &[Suite]) -> Outcome {
    filtered(list, |_| true)
}

fn filtered(list: &[Suite], keep: impl Fn(&str) -> bool) -> Outcome {
    let cfg = SuiteConfig::default();
    let mut n = 0;
    for &s in list {
        let mut checks: Vec<Check> = run_suite(s, &cfg).map_err(|e| e.to_string())?;
        checks.retain(|c| keep(&c.instance));
        if let Some(bad) = checks.iter().find(|c| !c.pass) {
            return Err(format!("{} failed {:?}", bad.instance, bad.error));
        }
        n += checks.len();
    }
    Ok(format!("{n} checks"))
}

fn counts() -> Outcome {
    let mut n = 0;
    for family in [Family::C, Family::D] {
        for rank in 1..=3usize {
            for r in 0..=6u32 {
                let got = enumerate(Alphabet::new(family, rank), r).len() as u64;
                if got != count_closed_form(family, rank, r) {
                    return Err(format!("{family} n={rank} r={r}: {got} tableaux"));
                }
                let comps = compositions(r, 2 * rank).len() as u64;
                if comps != binomial(r as u64 + 2 * rank as u64 - 1, r as u64) {
                    return Err(format!("weak compositions of {r} into {} parts: {comps}", 2 * rank));
                }
                n += 2;
            }
        }
    }
    let b = Base::symbolic();
    for family in [Family::C, Family::D] {
        for l in 1..=3usize {
            for r in 0..=3u32 {
                let support = phi_support(&b, family, l, r, PhiConfig::default()).map_err(|e| e.to_string())?;
                let words: BTreeSet<Vec<usize>> = enumerate(Alphabet::new(family, l), r)
                    .iter()
                    .map(|t| t.theta.iter().enumerate().flat_map(|(p, &k)| std::iter::repeat_n(p, k as usize)).collect())
                    .collect();
                if support != words {
                    return Err(format!("{family} l={l} r={r}: support differs from tableau words"));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} checks"))
}

fn negative_controls() -> Outcome {
    let args = |s: &str| -> Vec<String> {
        ["onerow", "verify", "--suite", s, "--count", "5", "--negative-control"].iter().map(|a| a.to_string()).collect()
    };
    let code = run(args("classical")).code;
    if code != 1 {
        return Err(format!("corrupted identity suite exited {code}"));
    }
    let b = Base::symbolic();
    let kp = KoornwinderParams::for_family(Family::D, None, b.q.clone(), b.t.clone()).map_err(|e| e.to_string())?;
    match Koornwinder::new(kp, 2).apply(&LaurentPoly::var(2, 0, 1)) {
        Err(Error::NotLaurent(_)) => Ok("verify exits 1, asymmetric input rejected".into()),
        Ok(_) => Err("x1 cleared its denominators".into()),
        Err(e) => Err(format!("unexpected error {e}")),
    }
}

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("type D tableau sum = Lassalle inverse", Box::new(|| suites(&[Suite::LassalleD]))),
        (
            "type C at t^2/q, both sums = Lassalle inverse",
            Box::new(|| filtered(&[Suite::LassalleC], |i| i.contains("/special/"))),
        ),
        (
            "type C general T Lassalle residual",
            Box::new(|| filtered(&[Suite::LassalleC], |i| !i.contains("/special/"))),
        ),
        ("Koornwinder eigenfunctions and triangularity", Box::new(|| suites(&[Suite::Eigen]))),
        ("principal specializations", Box::new(|| suites(&[Suite::Principal]))),
        (
            "hypergeometric identities and transformations",
            Box::new(|| suites(&[Suite::Classical, Suite::Thm22, Suite::TransformII, Suite::TransformIII])),
        ),
        ("W-algebra correlation functions", Box::new(|| suites(&[Suite::Soukan]))),
        ("tableau counts and correlator support", Box::new(counts)),
        ("negative controls", Box::new(negative_controls)),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(msg) => println!("criterion {}: PASS  {name} ({msg}, {secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({msg}, {secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Terminating basic hypergeometric sums checked exactly.

use onerow::arith::{BigRat, Field};
use onerow::qseries::sampler::{check_sampled, run_identity_suite};
use onerow::qseries::{qpoch_ratio, series_eval, HypSeriesSpec, IdentityId};

fn rat(a: i64, b: i64) -> BigRat {
    BigRat::new(a.into(), b.into())
}

fn main() -> onerow::Result<()> {
    // q-Saalschuetz by hand: 3phi2(q^-n, a, b; c, abq^{1-n}/c; q, q)
    let (q, a, b, c, n) = (rat(2, 7), rat(3, 5), rat(-4, 11), rat(5, 13), 4);
    let qn = q.powi(n)?;
    let spec = HypSeriesSpec::phi(
        vec![qn.inv()?, a.clone(), b.clone()],
        vec![c.clone(), a.mul(&b).mul(&q).div(&qn)?.div(&c)?],
        q.clone(),
        q.clone(),
    );
    let lhs = series_eval(&spec)?;
    let rhs = qpoch_ratio(&[c.div(&a)?, c.div(&b)?], &[c.clone(), c.div(&a.mul(&b))?], &q, n)?;
    println!("q-Saalschuetz at n={n}: {lhs} = {rhs}: {}", lhs == rhs);

    let report = check_sampled(IdentityId::Watson, 7, None);
    println!("\nWatson, seed 7: {}", report.residual_is_zero);
    for (k, v) in &report.params {
        println!("  {k} = {v}");
    }

    let reports = run_identity_suite(&IdentityId::ALL, 0, 10);
    let passed = reports.iter().filter(|r| r.residual_is_zero).count();
    println!("\n{passed} of {} sampled instances vanish", reports.len());
    Ok(())
}

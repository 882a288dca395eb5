//! Certifies P_(r) as an eigenfunction of the Koornwinder operator.

use onerow::arith::{LaurentPoly, Scalar};
use onerow::macdonald::koornwinder::Koornwinder;
use onerow::macdonald::{eigenvalue_pairs, tableau_poly, triangularity_check, Base, BigT, KoornwinderParams};
use onerow::tableaux::Family;

fn main() -> onerow::Result<()> {
    let b = Base::<Scalar>::symbolic();
    let n = 2;

    for (family, big_t) in [(Family::D, None), (Family::C, Some(Scalar::big_t()))] {
        let kp = KoornwinderParams::for_family(family, big_t.clone(), b.q.clone(), b.t.clone())?;
        let op = Koornwinder::new(kp.clone(), n);
        for r in 0..=3 {
            let bt = big_t.clone().map(BigT::Value);
            let p = tableau_poly(&b, family, n, r, bt.as_ref())?;
            let mut lambda = vec![0; n];
            lambda[0] = r;
            let d = eigenvalue_pairs(&lambda, &kp)?.d_lambda;
            let ok = op.apply(&p)? == p.scale(&d);
            println!("{family}_{n}, r={r}: D P = d P: {ok}, triangular: {}", triangularity_check(&p, r));
            if r == 1 {
                println!("  d_(1) = {}", d.to_text());
            }
        }
    }

    let kp = KoornwinderParams::for_family(Family::D, None, b.q.clone(), b.t.clone())?;
    match Koornwinder::new(kp, n).apply(&LaurentPoly::var(n, 0, 1)) {
        Ok(_) => println!("x1 was accepted"),
        Err(e) => println!("x1 is rejected: {e}"),
    }
    Ok(())
}

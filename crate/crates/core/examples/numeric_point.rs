//! The same polynomial computed over the rationals and symbolically, then
//! compared after specializing q and t.

use onerow::arith::{BigRat, Scalar};
use onerow::macdonald::{tableau_poly_d, Base};

fn rat(a: i64, b: i64) -> BigRat {
    BigRat::new(a.into(), b.into())
}

fn main() -> onerow::Result<()> {
    // symbolic coefficients live in q^{1/2}, t^{1/2}, so pick squares
    let (u, v) = (rat(2, 3), rat(3, 5));
    let (q, t) = (&u * &u, &v * &v);
    let (n, r) = (3, 3);

    let numeric = tableau_poly_d(&Base::new(q.clone(), t.clone()), n, r)?;
    let symbolic = tableau_poly_d(&Base::<Scalar>::symbolic(), n, r)?;
    let specialized = symbolic.try_map_into(|c| c.eval(&[u.clone(), v.clone(), rat(1, 1)]))?;

    println!("D_3, r=3 at q={q}, t={t}: {} terms", numeric.len());
    println!("coefficient of x1^3: {}", numeric.coeff(&[3, 0, 0]));
    println!("coefficient of x1 x2 x3: {}", numeric.coeff(&[1, 1, 1]));
    println!("matches the specialized symbolic polynomial: {}", numeric == specialized);
    Ok(())
}

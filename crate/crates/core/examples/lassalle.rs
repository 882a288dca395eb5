//! Both directions of Lassalle's relation between G_r and P_(r).

use onerow::arith::Scalar;
use onerow::macdonald::{g_series, lassalle_expand, lassalle_invert, tableau_poly, Base, BigT};
use onerow::tableaux::Family;

fn main() -> onerow::Result<()> {
    let b = Base::<Scalar>::symbolic();
    let n = 2;

    for r in 0..=3 {
        let tab = tableau_poly(&b, Family::D, n, r, None)?;
        let inv = lassalle_invert(&b, Family::D, n, r, None)?;
        println!("D_{n}, r={r}: tableau sum = inverse relation: {}", tab == inv);
    }

    let big_t = BigT::Value(Scalar::big_t());
    let ps = (0..=4).map(|r| tableau_poly(&b, Family::C, n, r, Some(&big_t))).collect::<onerow::Result<Vec<_>>>()?;
    for r in 0..=4 {
        let lhs = lassalle_expand(&b, Family::C, n, r, &ps, Some(&big_t))?;
        let residual = lhs.sub(&g_series(&b, n, r)?)?;
        println!("C_{n} at symbolic T, r={r}: expansion minus G_r is zero: {}", residual.is_zero());
    }

    println!("\nG_2 for n=1: {}", g_series(&b, 1, 2)?.to_text());
    Ok(())
}

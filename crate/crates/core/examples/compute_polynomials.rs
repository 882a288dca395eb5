//! One-row polynomials P_(r) of types D and C with symbolic q, t and T.

use onerow::arith::{Field, Scalar};
use onerow::macdonald::{tableau_poly, Base, BigT};
use onerow::tableaux::Family;

fn main() -> onerow::Result<()> {
    let b = Base::<Scalar>::symbolic();

    let d = tableau_poly(&b, Family::D, 2, 2, None)?;
    println!("D_2, r=2:\n  {}\n", d.to_text());

    let c = tableau_poly(&b, Family::C, 2, 2, Some(&BigT::Special))?;
    println!("C_2 at T = t^2/q, r=2:\n  {}\n", c.to_text());

    let general = tableau_poly(&b, Family::C, 2, 2, Some(&BigT::Value(Scalar::big_t())))?;
    println!("C_2 at symbolic T, r=2 (LaTeX):\n  {}\n", general.to_latex());

    // T = t^3 given as text
    let t3 = Scalar::parse("t^3")?;
    let p = tableau_poly(&b, Family::C, 2, 1, Some(&BigT::Value(t3)))?;
    println!("C_2 at T = t^3, r=1:\n  {}", p.to_text());
    Ok(())
}

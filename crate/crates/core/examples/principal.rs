//! Principal specializations against their closed products.

use onerow::arith::Scalar;
use onerow::macdonald::{principal_closed_form, principal_specialize, Base, BigT, ClosedForm};
use onerow::tableaux::Family;

fn main() -> onerow::Result<()> {
    let b = Base::<Scalar>::symbolic();
    let general = BigT::Value(Scalar::big_t());
    let cases = [("D", Family::D, None), ("C, T=t^2/q", Family::C, Some(&BigT::Special)), ("C, symbolic T", Family::C, Some(&general))];

    for (label, family, bt) in cases {
        for r in 0..=3 {
            let value = principal_specialize(&b, family, 3, r, bt)?;
            let closed = principal_closed_form(&b, family, 3, r, bt, ClosedForm::Consistent)?;
            println!("{label}, n=3, r={r}: {}", value == closed);
        }
    }

    let value = principal_specialize(&b, Family::C, 2, 1, Some(&general))?;
    println!("\nC_2, r=1 at the principal point: {}", value.to_text());
    let printed = principal_closed_form(&b, Family::C, 2, 1, Some(&general), ClosedForm::AsPrinted)?;
    println!("the T-form with (t^(2n-2) T)_r / (t^n T)_r agrees: {}", value == printed);
    Ok(())
}

//! Principal specializations and their closed product forms.

use super::formulas::tableau_poly;
use super::{Base, BigT};
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::tableaux::Family;

/// The point `(c tⁿ⁻¹, …, c t, c)` with `c = 1` (type D) or `c = T^{1/2}` (type C).
pub fn principal_point<F: Field>(base: &Base<F>, family: Family, n: usize, big_t: Option<&BigT<F>>) -> Result<Vec<F>> {
    let c = match family {
        Family::D => F::one(),
        Family::C => big_t.unwrap_or(&BigT::Special).value(base)?.sqrt()?,
    };
    (0..n).map(|i| Ok(c.mul(&base.t.powi((n - 1 - i) as i64)?))).collect()
}

/// `P_(r)` evaluated at the principal point.
pub fn principal_specialize<F: Field>(
    base: &Base<F>,
    family: Family,
    n: usize,
    r: u32,
    big_t: Option<&BigT<F>>,
) -> Result<F> {
    let p = tableau_poly(base, family, n, r, big_t)?;
    p.substitute(&principal_point(base, family, n, big_t)?)
}

/// Which closed product to evaluate for type C at general `T`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedForm {
    /// `T^{-r/2} t^{-r(n-1)} (tⁿ)_r (t^{2(n-1)}T²)_r / ((t)_r (tⁿ⁻¹T)_r)`, the form that
    /// reduces to the special-value product at `T = t²/q`.
    Consistent,
    /// `T^{-r/2} t^{-r(n-1)} (tⁿ)_r (t^{2(n-1)}T)_r / ((t)_r (tⁿT)_r)`.
    AsPrinted,
}

/// The closed product for the principal specialization.
pub fn principal_closed_form<F: Field>(
    base: &Base<F>,
    family: Family,
    n: usize,
    r: u32,
    big_t: Option<&BigT<F>>,
    form: ClosedForm,
) -> Result<F> {
    let (nn, rr) = (n as i64, r as i64);
    let t = &base.t;
    let ratio = |num: [F; 2], den: [F; 2]| -> Result<F> {
        let a = base.poch(&num[0], rr)?.mul(&base.poch(&num[1], rr)?);
        let b = base.poch(&den[0], rr)?.mul(&base.poch(&den[1], rr)?);
        if b.is_zero() {
            return Err(Error::Pole("closed form has a vanishing denominator".into()));
        }
        a.div(&b)
    };
    match (family, big_t) {
        (Family::D, _) => {
            if n < 2 && r > 0 {
                return Err(Error::Usage("the type D closed form needs n >= 2".into()));
            }
            let pre = t.powi(-rr * (nn - 1))?;
            Ok(pre.mul(&ratio(
                [base.tq(nn, 0)?, base.tq(2 * (nn - 1), 0)?],
                [t.clone(), base.tq(nn - 1, 0)?],
            )?))
        }
        (Family::C, None | Some(BigT::Special)) => {
            let pre = base.q.sqrt()?.powi(rr)?.mul(&t.powi(-rr * nn)?);
            Ok(pre.mul(&ratio(
                [base.tq(nn, 0)?, base.tq(2 * nn + 2, -2)?],
                [t.clone(), base.tq(nn + 1, -1)?],
            )?))
        }
        (Family::C, Some(BigT::Value(tt))) => {
            let pre = tt.sqrt()?.powi(-rr)?.mul(&t.powi(-rr * (nn - 1))?);
            let tn1 = base.tq(2 * (nn - 1), 0)?;
            let (num2, den2) = match form {
                ClosedForm::Consistent => (tn1.mul(tt).mul(tt), base.tq(nn - 1, 0)?.mul(tt)),
                ClosedForm::AsPrinted => (tn1.mul(tt), base.tq(nn, 0)?.mul(tt)),
            };
            Ok(pre.mul(&ratio([base.tq(nn, 0)?, num2], [t.clone(), den2])?))
        }
    }
}

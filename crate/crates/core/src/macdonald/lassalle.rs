//! Lassalle's triangular relations between `G_r` and `P_(r)`.

use super::formulas::g_series;
use super::{Base, BigT};
use crate::arith::{Field, LaurentPoly};
use crate::error::{Error, Result};
use crate::tableaux::Family;

fn t_value<F: Field>(base: &Base<F>, family: Family, big_t: Option<&BigT<F>>) -> Result<F> {
    match (family, big_t) {
        (Family::D, None) => Ok(F::one()),
        (Family::D, Some(_)) => Err(Error::Usage("type D takes no T".into())),
        (Family::C, Some(tt)) => tt.value(base),
        (Family::C, None) => BigT::Special.value(base),
    }
}

/// `Σ_i (t)_{r-2i}/(q)_{r-2i} P_(r-2i) T^i (t/T)_i (tⁿq^{r-2i})_i / ((q)_i (Ttⁿ⁻¹q^{r-2i+1})_i)`,
/// with `T = 1` for type D. `ps[k]` must hold `P_(k)` for `k = r, r-2, …`.
pub fn lassalle_expand<F: Field>(
    base: &Base<F>,
    family: Family,
    n: usize,
    r: u32,
    ps: &[LaurentPoly<F>],
    big_t: Option<&BigT<F>>,
) -> Result<LaurentPoly<F>> {
    let tt = t_value(base, family, big_t)?;
    let nn = n as i64;
    let t_over = base.t.div(&tt)?;
    let mut acc = LaurentPoly::zero(n);
    for i in 0..=(r / 2) as i64 {
        let k = r as i64 - 2 * i;
        let p = ps
            .get(k as usize)
            .ok_or_else(|| Error::Usage(format!("P_({k}) not supplied")))?;
        let num = base.ratio(k)?.mul(&tt.powi(i)?).mul(&base.poch(&t_over, i)?).mul(&base.ptq(nn, k, i)?);
        let den = base.poch(&base.q, i)?.mul(&base.poch(&tt.mul(&base.tq(nn - 1, k + 1)?), i)?);
        acc = acc.add(&p.scale(&num.div(&den)?))?;
    }
    Ok(acc)
}

/// `(q)_r/(t)_r Σ_i G_{r-2i} t^i (T/t)_i (tⁿq^{r-i})_i / ((q)_i (Ttⁿ⁻¹q^{r-i})_i) · (1-tⁿq^{r-2i})/(1-tⁿq^{r-i})`.
pub fn lassalle_invert<F: Field>(
    base: &Base<F>,
    family: Family,
    n: usize,
    r: u32,
    big_t: Option<&BigT<F>>,
) -> Result<LaurentPoly<F>> {
    let tt = t_value(base, family, big_t)?;
    let nn = n as i64;
    let rr = r as i64;
    let over_t = tt.div(&base.t)?;
    let one = F::one();
    let mut acc = LaurentPoly::zero(n);
    for i in 0..=(r / 2) as i64 {
        let g = g_series(base, n, (rr - 2 * i) as u32)?;
        let num = base
            .t
            .powi(i)?
            .mul(&base.poch(&over_t, i)?)
            .mul(&base.ptq(nn, rr - i, i)?)
            .mul(&one.sub(&base.tq(nn, rr - 2 * i)?));
        let den = base
            .poch(&base.q, i)?
            .mul(&base.poch(&tt.mul(&base.tq(nn - 1, rr - i)?), i)?)
            .mul(&one.sub(&base.tq(nn, rr - i)?));
        acc = acc.add(&g.scale(&num.div(&den)?))?;
    }
    Ok(acc.scale(&base.ratio(rr)?.inv()?))
}

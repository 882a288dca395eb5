//! Tableau sums for `P_(r)` and the coefficients `G_r`.

use super::{Base, BigT};
use crate::arith::{Field, LaurentPoly};
use crate::error::{Error, Result};
use crate::tableaux::{compositions, enumerate, weight_of, Alphabet, Family};

/// `Σ θ[k]` over positions `lo..=hi` (empty when `lo > hi`).
fn span(theta: &[u32], lo: usize, hi: isize) -> i64 {
    if hi < lo as isize {
        return 0;
    }
    theta[lo..=hi as usize].iter().map(|&k| k as i64).sum()
}

/// `(t^{a₁}q^{b₁})_k (t^{a₂}q^{b₂})_k / ((t^{a₃}q^{b₃})_k (t^{a₄}q^{b₄})_k)`.
fn quad<F: Field>(base: &Base<F>, f: [(i64, i64); 4], k: i64) -> Result<F> {
    if k == 0 {
        return Ok(F::one());
    }
    let num = base.ptq(f[0].0, f[0].1, k)?.mul(&base.ptq(f[1].0, f[1].1, k)?);
    let den = base.ptq(f[2].0, f[2].1, k)?.mul(&base.ptq(f[3].0, f[3].1, k)?);
    if den.is_zero() {
        return Err(Error::Pole("vanishing Pochhammer in a tableau coefficient".into()));
    }
    num.div(&den)
}

fn prefactor<F: Field>(base: &Base<F>, r: u32) -> Result<F> {
    base.ratio(r as i64)?.inv()
}

/// `G_r`: the sum over all occupancy vectors with `∏ (t)_θ/(q)_θ`.
pub fn g_series<F: Field>(base: &Base<F>, n: usize, r: u32) -> Result<LaurentPoly<F>> {
    let mut ratios = Vec::with_capacity(r as usize + 1);
    for k in 0..=r {
        ratios.push(base.ratio(k as i64)?);
    }
    let mut terms = Vec::new();
    for theta in compositions(r, 2 * n) {
        let c = F::product(&theta.iter().map(|&k| ratios[k as usize].clone()).collect::<Vec<_>>());
        terms.push((weight_of(&theta), c));
    }
    Ok(collect(n, terms))
}

fn collect<F: Field>(n: usize, terms: Vec<(Vec<i32>, F)>) -> LaurentPoly<F> {
    let mut grouped: std::collections::BTreeMap<Vec<i32>, Vec<F>> = Default::default();
    for (e, c) in terms {
        grouped.entry(e).or_default().push(c);
    }
    LaurentPoly::from_terms(n, grouped.into_iter().map(|(e, cs)| (e, F::sum_all(cs))))
}

/// Coefficient of one tableau, without the overall `(q)_r/(t)_r`.
pub fn tableau_coefficient<F: Field>(base: &Base<F>, family: Family, big_t: Option<&F>, theta: &[u32]) -> Result<F> {
    let n = theta.len() / 2;
    let bar = |l: usize| theta[2 * n - l] as i64;
    let nn = n as i64;
    // S(l) runs over letters l … (l+1)bar, S'(l) over l+1 … (l+1)bar
    let s = |l: usize| span(theta, l - 1, 2 * n as isize - l as isize - 1);
    let s1 = |l: usize| span(theta, l, 2 * n as isize - l as isize - 1);
    let mut acc = F::one();
    match (family, big_t) {
        (Family::D, _) => {
            for &k in theta {
                acc = acc.mul(&base.ratio(k as i64)?);
            }
            for l in 1..n {
                let ll = l as i64;
                let (a, b) = (s(l), s1(l));
                acc = acc.mul(&quad(
                    base,
                    [(nn - ll, b), (nn - ll - 1, a + 1), (nn - ll - 1, b + 1), (nn - ll, a)],
                    bar(l),
                )?);
            }
        }
        (Family::C, None) => {
            for &k in theta {
                acc = acc.mul(&base.ratio(k as i64)?);
            }
            for l in 1..=n {
                let ll = l as i64;
                let (a, b) = (s(l), s1(l));
                acc = acc.mul(&quad(
                    base,
                    [(nn - ll + 1, a), (nn - ll + 2, b - 1), (nn - ll + 2, a - 1), (nn - ll + 1, b)],
                    bar(l),
                )?);
            }
        }
        (Family::C, Some(tt)) => {
            let (tn, tnb) = (theta[n - 1] as i64, theta[n] as i64);
            let d = (tn - tnb).abs();
            let m = tn.min(tnb);
            let r: i64 = theta.iter().map(|&k| k as i64).sum();
            for (p, &k) in theta.iter().enumerate() {
                if p != n - 1 && p != n {
                    acc = acc.mul(&base.ratio(k as i64)?);
                }
            }
            acc = acc.mul(&base.ratio(d)?);
            // θ_n, θ_n̄ enter only through |θ_n − θ_n̄|
            let inner = |lo: usize, l: usize| {
                span(theta, lo, n as isize - 2) + d + span(theta, n + 1, 2 * n as isize - l as isize - 1)
            };
            for l in 1..n {
                let ll = l as i64;
                let (a, b) = (inner(l - 1, l), inner(l, l));
                acc = acc.mul(&quad(
                    base,
                    [(nn - ll - 1, a + 1), (nn - ll, b), (nn - ll, a), (nn - ll - 1, b + 1)],
                    bar(l),
                )?);
            }
            if m > 0 {
                let num = base.poch(tt, m)?.mul(&base.ptq(nn, r - 2 * m, 2 * m)?);
                let den = base
                    .poch(&base.q, m)?
                    .mul(&base.poch(&tt.mul(&base.tq(nn - 1, r - m)?), m)?)
                    .mul(&base.ptq(nn - 1, r - 2 * m + 1, m)?);
                if den.is_zero() {
                    return Err(Error::Pole("vanishing Pochhammer in the T-factor".into()));
                }
                acc = acc.mul(&num.div(&den)?);
            }
        }
    }
    Ok(acc)
}

fn tableau_sum<F: Field>(base: &Base<F>, family: Family, big_t: Option<&F>, n: usize, r: u32) -> Result<LaurentPoly<F>> {
    if n == 0 {
        return Err(Error::Usage("rank n must be at least 1".into()));
    }
    let pre = prefactor(base, r)?;
    let mut terms = Vec::new();
    for tab in enumerate(Alphabet::new(family, n), r) {
        let c = tableau_coefficient(base, family, big_t, &tab.theta)?;
        terms.push((tab.weight(), c.mul(&pre)));
    }
    Ok(collect(n, terms))
}

/// `P_(r)` of type `D_n`.
pub fn tableau_poly_d<F: Field>(base: &Base<F>, n: usize, r: u32) -> Result<LaurentPoly<F>> {
    tableau_sum(base, Family::D, None, n, r)
}

/// `P_(r)` of type `C_n` at `T = t²/q`.
pub fn tableau_poly_c_special<F: Field>(base: &Base<F>, n: usize, r: u32) -> Result<LaurentPoly<F>> {
    tableau_sum(base, Family::C, None, n, r)
}

/// `P_(r)` of type `C_n` at general `T`.
pub fn tableau_poly_c_general<F: Field>(base: &Base<F>, n: usize, r: u32, big_t: &F) -> Result<LaurentPoly<F>> {
    tableau_sum(base, Family::C, Some(big_t), n, r)
}

/// Dispatch on the family; for type C, `BigT::Special` uses the special-value sum.
pub fn tableau_poly<F: Field>(
    base: &Base<F>,
    family: Family,
    n: usize,
    r: u32,
    big_t: Option<&BigT<F>>,
) -> Result<LaurentPoly<F>> {
    match (family, big_t) {
        (Family::D, None) => tableau_poly_d(base, n, r),
        (Family::D, Some(_)) => Err(Error::Usage("type D takes no T".into())),
        (Family::C, None | Some(BigT::Special)) => tableau_poly_c_special(base, n, r),
        (Family::C, Some(BigT::Value(tt))) => tableau_poly_c_general(base, n, r, tt),
    }
}

/// For every type D tableau of size `r` and every `l`, the `l`-th ratio of the
/// tableau sum equals `(X)_{θl}(X)_{θl̄}(Y)_{θl+θl̄} / ((Y)_{θl}(Y)_{θl̄}(X)_{θl+θl̄})`
/// with `X = t^{n-l}q^{S'}`, `Y = t^{n-l-1}q^{S'+y}`, where `y` is the
/// supplied offset (1 makes it match).
pub fn rewriting_forms_agree<F: Field>(base: &Base<F>, n: usize, r: u32, y_offset: i64) -> Result<bool> {
    let nn = n as i64;
    for tab in enumerate(Alphabet::new(Family::D, n), r) {
        let th = &tab.theta;
        for l in 1..n {
            let ll = l as i64;
            let s1 = span(th, l, 2 * n as isize - l as isize - 1);
            let (a, b) = (th[l - 1] as i64, th[2 * n - l] as i64);
            let lhs = quad(base, [(nn - ll, s1), (nn - ll - 1, s1 + a + 1), (nn - ll - 1, s1 + 1), (nn - ll, s1 + a)], b)?;
            let x = base.tq(nn - ll, s1)?;
            let y = base.tq(nn - ll - 1, s1 + y_offset)?;
            let num = base.poch(&x, a)?.mul(&base.poch(&x, b)?).mul(&base.poch(&y, a + b)?);
            let den = base.poch(&y, a)?.mul(&base.poch(&y, b)?).mul(&base.poch(&x, a + b)?);
            if den.is_zero() || lhs != num.div(&den)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

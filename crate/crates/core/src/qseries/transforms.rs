//! Multi-sum transformations between one-row coefficient sums, checked by
//! brute-force enumeration of both sides.

use super::pochhammer::qpoch;
use crate::arith::Field;
use crate::error::{Error, Result};
use crate::tableaux::compositions;

struct Ctx<F> {
    q: F,
    t: F,
}

impl<F: Field> Ctx<F> {
    fn tq(&self, a: i64, b: i64) -> Result<F> {
        Ok(self.t.powi(a)?.mul(&self.q.powi(b)?))
    }

    fn p(&self, a: i64, b: i64, k: u32) -> Result<F> {
        qpoch(&self.tq(a, b)?, &self.q, k as i64)
    }

    /// `(t^a q^b)_k (t^c q^d)_k / ((t^e q^f)_k (t^g q^h)_k)`.
    fn frac(&self, num: [(i64, i64); 2], den: [(i64, i64); 2], k: u32) -> Result<F> {
        if k == 0 {
            return Ok(F::one());
        }
        let n = self.p(num[0].0, num[0].1, k)?.mul(&self.p(num[1].0, num[1].1, k)?);
        let d = self.p(den[0].0, den[0].1, k)?.mul(&self.p(den[1].0, den[1].1, k)?);
        if d.is_zero() {
            return Err(Error::Pole("vanishing denominator in a multi-sum term".into()));
        }
        n.div(&d)
    }

    /// `(t)_k / (q)_k`.
    fn w(&self, k: u32) -> Result<F> {
        self.p(1, 0, k)?.div(&self.p(0, 1, k)?)
    }

    /// `(t)_φ (t)_{φ+m} / ((q)_φ (q)_{φ+m})`.
    fn pair(&self, phi: u32, m: u32) -> Result<F> {
        Ok(self.w(phi)?.mul(&self.w(phi + m)?))
    }
}

fn suffix(v: &[u32]) -> Vec<i64> {
    let mut out = vec![0i64; v.len() + 1];
    for i in (0..v.len()).rev() {
        out[i] = out[i + 1] + v[i] as i64;
    }
    out
}

fn check(n: usize, m: &[u32]) -> Result<()> {
    if n < 2 {
        return Err(Error::Usage(format!("rank n = {n} must be at least 2")));
    }
    if m.len() != n {
        return Err(Error::Usage(format!("expected {n} values of m, got {}", m.len())));
    }
    Ok(())
}

/// The common right-hand side: `Σ_{φ₁+⋯+φₙ=K} ∏ (t)_{φⱼ}(t)_{φⱼ+mⱼ}/((q)_{φⱼ}(q)_{φⱼ+mⱼ})`.
pub fn pair_sum<F: Field>(k: u32, m: &[u32], q: &F, t: &F) -> Result<F> {
    let c = Ctx { q: q.clone(), t: t.clone() };
    let mut terms = Vec::new();
    for phi in compositions(k, m.len()) {
        let mut acc = F::one();
        for (p, mj) in phi.iter().zip(m) {
            acc = acc.mul(&c.pair(*p, *mj)?);
        }
        terms.push(acc);
    }
    Ok(F::sum_all(terms))
}

/// Left side of the type D transformation (sum over `φ₁..φ_{n-1}` and `i`).
pub fn transform_ii_lhs<F: Field>(n: usize, k: u32, m: &[u32], q: &F, t: &F) -> Result<F> {
    check(n, m)?;
    let c = Ctx { q: q.clone(), t: t.clone() };
    let ms = suffix(m);
    let n_ = n as i64;
    let mut terms = Vec::new();
    for comp in compositions(k, n) {
        let (phi, i) = (&comp[..n - 1], comp[n - 1]);
        let ps = suffix(phi);
        let mut acc = c.w(m[n - 1])?;
        for l in 1..n {
            let f = phi[l - 1];
            let fi = f as i64;
            let l_ = l as i64;
            let a = fi + 2 * ps[l] + ms[l - 1];
            let b = 2 * ps[l] + ms[l];
            acc = acc.mul(&c.pair(f, m[l - 1])?);
            acc = acc.mul(&c.frac(
                [(n_ - l_ - 1, a + 1), (n_ - l_, b)],
                [(n_ - l_, a), (n_ - l_ - 1, b + 1)],
                f,
            )?);
        }
        let r = 2 * k as i64 + ms[0] - 2 * i as i64;
        acc = acc.mul(&c.frac([(1, 0), (n_, r)], [(0, 1), (n_ - 1, r + 1)], i)?);
        terms.push(acc);
    }
    Ok(F::sum_all(terms))
}

/// `LHS − RHS` of the type D transformation.
#[allow(non_snake_case)]
pub fn verify_transform_II<F: Field>(n: usize, k: u32, m: &[u32], q: &F, t: &F) -> Result<F> {
    Ok(transform_ii_lhs(n, k, m, q, t)?.sub(&pair_sum(k, m, q, t)?))
}

/// How the `q`-exponent `φ_l + c·φ_{l+1,n} + m_{l,n}` of the type C
/// transformation is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TypeCReading {
    /// `c = 1`.
    AsPrinted,
    /// `c = 2`, matching the tableau exponent.
    Doubled,
}

/// Left side of the type C transformation (sum over `φ₁..φₙ` and `i`).
pub fn transform_iii_lhs<F: Field>(
    n: usize,
    k: u32,
    m: &[u32],
    q: &F,
    t: &F,
    reading: TypeCReading,
) -> Result<F> {
    check(n, m)?;
    let c = Ctx { q: q.clone(), t: t.clone() };
    let ms = suffix(m);
    let n_ = n as i64;
    let mult = match reading {
        TypeCReading::AsPrinted => 1,
        TypeCReading::Doubled => 2,
    };
    let t2q = t.mul(t).div(q)?;
    let qt = q.div(t)?;
    let mut terms = Vec::new();
    for comp in compositions(k, n + 1) {
        let (phi, i) = (&comp[..n], comp[n]);
        let ps = suffix(phi);
        let mut acc = F::one();
        for l in 1..=n {
            let f = phi[l - 1];
            let l_ = l as i64;
            let s = f as i64 + mult * ps[l] + ms[l - 1];
            let s2 = 2 * ps[l] + ms[l];
            acc = acc.mul(&c.pair(f, m[l - 1])?);
            acc = acc.mul(&c.frac(
                [(n_ - l_ + 1, s), (n_ - l_ + 2, s2 - 1)],
                [(n_ - l_ + 2, s - 1), (n_ - l_ + 1, s2)],
                f,
            )?);
        }
        let r = 2 * k as i64 + ms[0] - 2 * i as i64;
        let ii = i as i64;
        let num = t2q.powi(ii)?.mul(&qpoch(&qt, q, ii)?).mul(&c.p(n_, r, i)?);
        let den = c.p(0, 1, i)?.mul(&c.p(n_ + 1, r, i)?);
        if den.is_zero() {
            return Err(Error::Pole("vanishing denominator in a multi-sum term".into()));
        }
        terms.push(acc.mul(&num.div(&den)?));
    }
    Ok(F::sum_all(terms))
}

/// `LHS − RHS` of the type C transformation, under the given reading.
pub fn transform_iii_residual<F: Field>(
    n: usize,
    k: u32,
    m: &[u32],
    q: &F,
    t: &F,
    reading: TypeCReading,
) -> Result<F> {
    Ok(transform_iii_lhs(n, k, m, q, t, reading)?.sub(&pair_sum(k, m, q, t)?))
}

/// `LHS − RHS` of the type C transformation.
#[allow(non_snake_case)]
pub fn verify_transform_III<F: Field>(n: usize, k: u32, m: &[u32], q: &F, t: &F) -> Result<F> {
    transform_iii_residual(n, k, m, q, t, TypeCReading::Doubled)
}

/// The explicit two-variable case, written independently of the rank-n sum.
pub fn rank_two_residual<F: Field>(k: u32, m1: u32, m2: u32, q: &F, t: &F) -> Result<F> {
    let c = Ctx { q: q.clone(), t: t.clone() };
    let (m1_, m2_) = (m1 as i64, m2 as i64);
    let mut terms = Vec::new();
    for phi1 in 0..=k {
        let i = k - phi1;
        let f = phi1 as i64;
        let mut acc = c.w(m1 + phi1)?.mul(&c.w(m2)?).mul(&c.w(phi1)?);
        acc = acc.mul(&c.frac([(0, m1_ + m2_ + f + 1), (1, m2_)], [(1, m1_ + m2_ + f), (0, m2_ + 1)], phi1)?);
        let r = 2 * k as i64 + m1_ + m2_ - 2 * i as i64;
        acc = acc.mul(&c.frac([(1, 0), (2, r)], [(0, 1), (1, r + 1)], i)?);
        terms.push(acc);
    }
    Ok(F::sum_all(terms).sub(&pair_sum(k, &[m1, m2], q, t)?))
}

/// Two readings of the intermediate multi-sum in the inductive step of the
/// type D proof.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InductionReading {
    /// Exponents exactly as printed: `φ_{l,n}` in the `l`-product
    /// denominator and `m_{2,n-1}` in the `φ₂`-sum numerator.
    AsPrinted,
    /// `m_{l,n}` and `m_{2,n}` in those places.
    Corrected,
    /// Only the `l`-product denominator as printed; `m_{2,n}` in the `φ₂`-sum.
    PrintedDenominator,
}

/// The intermediate multi-sum of the type D induction step, obtained after
/// summing out `φ₁`; it should equal [`transform_ii_lhs`].
pub fn induction_step_sum<F: Field>(
    n: usize,
    k: u32,
    m: &[u32],
    q: &F,
    t: &F,
    reading: InductionReading,
) -> Result<F> {
    if n < 3 {
        return Err(Error::Usage("the induction step needs n >= 3".into()));
    }
    check(n, m)?;
    let c = Ctx { q: q.clone(), t: t.clone() };
    let ms = suffix(m);
    let n_ = n as i64;
    let mut terms = Vec::new();
    // parts: j, φ₂, …, φ_{n-1}, i
    for comp in compositions(k, n) {
        let j = comp[0];
        let i = comp[n - 1];
        // phi[l] = φ_l for l in 2..n, zero elsewhere
        let mut phi = vec![0u32; n + 1];
        phi[2..n].copy_from_slice(&comp[1..n - 1]);
        let ps = suffix(&phi[..n]);
        let mut acc = c.pair(j, m[0])?;
        for l in 3..n {
            let f = phi[l];
            let l_ = l as i64;
            let x = match reading {
                InductionReading::AsPrinted | InductionReading::PrintedDenominator => ps[l],
                InductionReading::Corrected => ms[l - 1],
            };
            acc = acc.mul(&c.pair(f, m[l - 1])?);
            acc = acc.mul(&c.frac(
                [(n_ - l_ - 1, f as i64 + 2 * ps[l + 1] + ms[l - 1] + 1), (n_ - l_, 2 * ps[l + 1] + ms[l])],
                [(n_ - l_, f as i64 + 2 * ps[l + 1] + x), (n_ - l_ - 1, 2 * ps[l + 1] + ms[l] + 1)],
                f,
            )?);
        }
        let f2 = phi[2];
        let y = match reading {
            InductionReading::AsPrinted => ms[1] - m[n - 1] as i64,
            InductionReading::Corrected | InductionReading::PrintedDenominator => ms[1],
        };
        acc = acc.mul(&c.w(f2 + m[1])?).mul(&c.w(m[n - 1])?).mul(&c.w(f2)?);
        acc = acc.mul(&c.frac([(n_ - 1, 2 * ps[2] + y), (1, 0)], [(n_ - 2, 2 * ps[2] + ms[1] + 1), (0, 1)], i)?);
        let f2_ = f2 as i64;
        acc = acc.mul(&c.frac(
            [(n_ - 2, 2 * ps[3] + ms[2]), (n_ - 3, f2_ + 2 * ps[3] + ms[1] + 1)],
            [(n_ - 3, 2 * ps[3] + ms[2] + 1), (n_ - 2, f2_ + 2 * ps[3] + ms[1])],
            f2,
        )?);
        terms.push(acc);
    }
    Ok(F::sum_all(terms))
}

/// `induction_step_sum − transform_ii_lhs` under the given reading.
pub fn induction_step_residual<F: Field>(
    n: usize,
    k: u32,
    m: &[u32],
    q: &F,
    t: &F,
    reading: InductionReading,
) -> Result<F> {
    Ok(induction_step_sum(n, k, m, q, t, reading)?.sub(&transform_ii_lhs(n, k, m, q, t)?))
}

//! q-shifted factorials.

use crate::arith::Field;
use crate::error::{Error, Result};

/// `(z;q)_k`. Negative `k` uses `1/∏_{j=1}^{-k}(1 - q^{-j} z)`.
pub fn qpoch<F: Field>(z: &F, q: &F, k: i64) -> Result<F> {
    if k >= 0 {
        let mut acc = F::one();
        let mut zq = z.clone();
        for _ in 0..k {
            acc = acc.mul(&F::one().sub(&zq));
            zq = zq.mul(q);
        }
        return Ok(acc);
    }
    let qi = q.inv()?;
    let mut den = F::one();
    let mut zq = z.mul(&qi);
    for _ in 0..(-k) {
        let f = F::one().sub(&zq);
        if f.is_zero() {
            return Err(Error::Pole(format!("(z;q)_{k} with z = {}", z.to_text())));
        }
        den = den.mul(&f);
        zq = zq.mul(&qi);
    }
    den.inv()
}

/// `(z₁, …, z_m; q)_k`.
pub fn qpoch_multi<F: Field>(zs: &[F], q: &F, k: i64) -> Result<F> {
    let mut acc = F::one();
    for z in zs {
        acc = acc.mul(&qpoch(z, q, k)?);
    }
    Ok(acc)
}

/// `(num…;q)_k / (den…;q)_k`, failing with a pole if the denominator vanishes.
pub fn qpoch_ratio<F: Field>(num: &[F], den: &[F], q: &F, k: i64) -> Result<F> {
    let n = qpoch_multi(num, q, k)?;
    let d = qpoch_multi(den, q, k)?;
    if d.is_zero() {
        return Err(Error::Pole(format!("vanishing denominator at length {k}")));
    }
    n.div(&d)
}

//! The coefficient field ℚ(q^{1/2}, t^{1/2}, T^{1/2}).
//!
//! A [`Scalar`] is `u^a v^b w^c · rest · ∏ num / ∏ den` where `a, b, c` may be
//! negative, `rest` is an expanded polynomial without monomial content, and
//! `num`/`den` are multisets of normalized polynomial factors. Binomials are
//! split into cyclotomic pieces on entry, so Pochhammer products cancel
//! factor-by-factor. No multivariate gcd is ever computed.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::cyclotomic::{cyclotomic, divisors};
use super::poly::{Mono, SparsePoly};
use super::BigRat;
use crate::error::{Error, Result};

/// A non-constant polynomial with coprime integer coefficients, positive
/// leading coefficient and no monomial content.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factor(Arc<SparsePoly>);

impl Factor {
    pub fn poly(&self) -> &SparsePoly {
        &self.0
    }
}

impl fmt::Debug for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})", self.0)
    }
}

type Multiset = BTreeMap<Factor, u32>;

#[derive(Clone)]
pub struct Scalar {
    mono: [i32; 3],
    rest: SparsePoly,
    num: Multiset,
    den: Multiset,
}

fn mono_pos(e: [i32; 3]) -> Mono {
    Mono::new([e[0].max(0) as u32, e[1].max(0) as u32, e[2].max(0) as u32])
}

fn mono_neg(e: [i32; 3]) -> Mono {
    Mono::new([(-e[0]).max(0) as u32, (-e[1]).max(0) as u32, (-e[2]).max(0) as u32])
}

fn expand(m: &Multiset) -> SparsePoly {
    let mut acc = SparsePoly::one();
    for (f, k) in m {
        for _ in 0..*k {
            acc = acc.mul(f.poly());
        }
    }
    acc
}

fn bump(m: &mut Multiset, f: Factor, k: u32) {
    if k > 0 {
        *m.entry(f).or_insert(0) += k;
    }
}

/// Splits a primitive, content-free polynomial into normalized factors.
///
/// Binomials `P^g - Q^g` and `P^g + Q^g` become products of homogenized
/// cyclotomic polynomials; anything else stays whole.
fn split(p: &SparsePoly) -> Vec<Factor> {
    if p.len() != 2 {
        return vec![Factor(Arc::new(p.clone()))];
    }
    let (m1, a) = &p.terms()[0];
    let (m2, b) = &p.terms()[1];
    let minus = *b == -a.clone();
    let plus = b == a;
    if !minus && !plus {
        return vec![Factor(Arc::new(p.clone()))];
    }
    let e1 = m1.exps();
    let e2 = m2.exps();
    let g = e1.iter().chain(e2.iter()).fold(0u32, |g, &x| g.gcd(&x));
    let root = |e: [u32; 3]| Mono::new([e[0] / g, e[1] / g, e[2] / g]);
    let (pm, qm) = (root(e1), root(e2));
    let ds: Vec<u32> = if minus {
        divisors(g)
    } else {
        divisors(2 * g).into_iter().filter(|d| g % d != 0).collect()
    };
    ds.into_iter()
        .map(|d| {
            let c = cyclotomic(d);
            let deg = c.len() - 1;
            let terms = c.iter().enumerate().filter(|(_, ck)| **ck != 0).map(|(k, ck)| {
                let pe = pm.exps();
                let qe = qm.exps();
                let j = (deg - k) as u32;
                let k = k as u32;
                let m = Mono::new([pe[0] * k + qe[0] * j, pe[1] * k + qe[1] * j, pe[2] * k + qe[2] * j]);
                (m, BigRat::from_integer((*ck).into()))
            });
            let f = SparsePoly::from_terms(terms);
            debug_assert!(f.lead().unwrap().1.is_positive());
            Factor(Arc::new(f))
        })
        .collect()
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { mono: [0; 3], rest: SparsePoly::zero(), num: Multiset::new(), den: Multiset::new() }
    }

    pub fn one() -> Self {
        Self::from_rat(BigRat::one())
    }

    pub fn from_rat(c: BigRat) -> Self {
        Scalar { mono: [0; 3], rest: SparsePoly::constant(c), num: Multiset::new(), den: Multiset::new() }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rat(BigRat::from_integer(n.into()))
    }

    /// The Laurent monomial `u^a v^b w^c`.
    pub fn monomial(e: [i32; 3]) -> Self {
        Scalar { mono: e, rest: SparsePoly::one(), num: Multiset::new(), den: Multiset::new() }
    }

    /// q^{1/2}
    pub fn u() -> Self {
        Self::monomial([1, 0, 0])
    }

    /// t^{1/2}
    pub fn v() -> Self {
        Self::monomial([0, 1, 0])
    }

    /// T^{1/2}
    pub fn w() -> Self {
        Self::monomial([0, 0, 1])
    }

    pub fn q() -> Self {
        Self::monomial([2, 0, 0])
    }

    pub fn t() -> Self {
        Self::monomial([0, 2, 0])
    }

    pub fn big_t() -> Self {
        Self::monomial([0, 0, 2])
    }

    pub fn from_poly(p: SparsePoly) -> Self {
        let mut s = Scalar { mono: [0; 3], rest: p, num: Multiset::new(), den: Multiset::new() };
        s.normalize();
        s
    }

    pub fn is_zero(&self) -> bool {
        self.rest.is_zero()
    }

    pub fn is_one(&self) -> bool {
        (self.mono == [0; 3] && self.num.is_empty() && self.den.is_empty() && self.rest.is_one())
            || self.sub(&Self::one()).is_zero()
    }

    /// Whether the value is a polynomial in u, v, w (no denominator at all).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty() && self.mono.iter().all(|&e| e >= 0)
    }

    pub fn as_rat(&self) -> Option<BigRat> {
        if self.mono == [0; 3] && self.num.is_empty() && self.den.is_empty() {
            self.rest.as_constant()
        } else if self.is_zero() {
            Some(BigRat::zero())
        } else {
            None
        }
    }

    pub fn den_factors(&self) -> impl Iterator<Item = (&Factor, u32)> {
        self.den.iter().map(|(f, k)| (f, *k))
    }

    fn normalize(&mut self) {
        if self.rest.is_zero() {
            *self = Self::zero();
            return;
        }
        let m = self.rest.monomial_content();
        if !m.is_one() {
            self.rest = self.rest.div_mono(m);
            let e = m.exps();
            for k in 0..3 {
                self.mono[k] += e[k] as i32;
            }
        }
        if self.rest.len() == 2 {
            let (c, prim) = self.rest.primitive_part();
            self.rest = SparsePoly::constant(c);
            for f in split(&prim) {
                bump(&mut self.num, f, 1);
            }
        }
        self.cancel();
    }

    fn cancel(&mut self) {
        self.cancel_factors();
        if self.rest.is_constant() || self.den.is_empty() {
            return;
        }
        let mut divided = false;
        let keys: Vec<Factor> = self.den.keys().cloned().collect();
        for f in keys {
            while self.den.get(&f).is_some_and(|k| *k > 0) {
                match self.rest.div_exact(f.poly()) {
                    Some(qt) => {
                        self.rest = qt;
                        divided = true;
                        let k = self.den.get_mut(&f).unwrap();
                        *k -= 1;
                        if *k == 0 {
                            self.den.remove(&f);
                        }
                    }
                    None => break,
                }
            }
        }
        if divided && self.rest.len() == 2 {
            let (c, prim) = self.rest.primitive_part();
            self.rest = SparsePoly::constant(c);
            for f in split(&prim) {
                bump(&mut self.num, f, 1);
            }
            self.cancel_factors();
        }
    }

    fn cancel_factors(&mut self) {
        if self.num.is_empty() || self.den.is_empty() {
            return;
        }
        let common: Vec<(Factor, u32)> = self
            .num
            .iter()
            .filter_map(|(f, a)| self.den.get(f).map(|b| (f.clone(), (*a).min(*b))))
            .collect();
        for (f, k) in common {
            for side in [&mut self.num, &mut self.den] {
                let e = side.get_mut(&f).unwrap();
                *e -= k;
                if *e == 0 {
                    side.remove(&f);
                }
            }
        }
    }

    pub fn neg(&self) -> Self {
        let mut s = self.clone();
        s.rest = s.rest.neg();
        s
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut s = Scalar {
            mono: [self.mono[0] + other.mono[0], self.mono[1] + other.mono[1], self.mono[2] + other.mono[2]],
            rest: self.rest.mul(&other.rest),
            num: self.num.clone(),
            den: self.den.clone(),
        };
        for (f, k) in &other.num {
            bump(&mut s.num, f.clone(), *k);
        }
        for (f, k) in &other.den {
            bump(&mut s.den, f.clone(), *k);
        }
        if self.rest.is_constant() || other.rest.is_constant() {
            // rest is still content-free and not a binomial
            s.cancel();
        } else {
            s.normalize();
        }
        s
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (c, prim) = self.rest.primitive_part();
        let mut s = Scalar {
            mono: [-self.mono[0], -self.mono[1], -self.mono[2]],
            rest: SparsePoly::constant(BigRat::one() / c),
            num: self.den.clone(),
            den: self.num.clone(),
        };
        if !prim.is_constant() {
            for f in split(&prim) {
                bump(&mut s.den, f, 1);
            }
        }
        s.cancel();
        Ok(s)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::sum_all([self.clone(), other.clone()])
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Sum of many terms over one common denominator.
    pub fn sum_all<I: IntoIterator<Item = Scalar>>(items: I) -> Self {
        let items: Vec<Scalar> = items.into_iter().filter(|s| !s.is_zero()).collect();
        match items.len() {
            0 => return Self::zero(),
            1 => return items.into_iter().next().unwrap(),
            _ => {}
        }
        // lcm of denominators, gcd of numerator factors, min of monomials
        let mut lcm = Multiset::new();
        let mut gcd = items[0].num.clone();
        let mut lo = items[0].mono;
        for s in &items {
            for (f, k) in &s.den {
                let e = lcm.entry(f.clone()).or_insert(0);
                *e = (*e).max(*k);
            }
            gcd.retain(|f, k| match s.num.get(f) {
                Some(j) => {
                    *k = (*k).min(*j);
                    true
                }
                None => false,
            });
            for k in 0..3 {
                lo[k] = lo[k].min(s.mono[k]);
            }
        }
        let mut acc = SparsePoly::zero();
        for s in &items {
            let mut extra = Multiset::new();
            for (f, k) in &s.num {
                let g = gcd.get(f).copied().unwrap_or(0);
                bump(&mut extra, f.clone(), k - g);
            }
            for (f, k) in &lcm {
                let d = s.den.get(f).copied().unwrap_or(0);
                bump(&mut extra, f.clone(), k - d);
            }
            let shift = Mono::new([
                (s.mono[0] - lo[0]) as u32,
                (s.mono[1] - lo[1]) as u32,
                (s.mono[2] - lo[2]) as u32,
            ]);
            let term = s.rest.mul_mono(shift).mul(&expand(&extra));
            acc = acc.add(&term);
        }
        if acc.is_zero() {
            return Self::zero();
        }
        // strip monomial content before trial division
        let m = acc.monomial_content();
        acc = acc.div_mono(m);
        let me = m.exps();
        let mut den = lcm;
        let keys: Vec<Factor> = den.keys().cloned().collect();
        for f in keys {
            loop {
                let k = den[&f];
                if k == 0 {
                    break;
                }
                match acc.div_exact(f.poly()) {
                    Some(qt) => {
                        acc = qt;
                        *den.get_mut(&f).unwrap() -= 1;
                    }
                    None => break,
                }
            }
            if den[&f] == 0 {
                den.remove(&f);
            }
        }
        let mut s = Scalar {
            mono: [lo[0] + me[0] as i32, lo[1] + me[1] as i32, lo[2] + me[2] as i32],
            rest: acc,
            num: gcd,
            den,
        };
        s.normalize();
        s
    }

    pub fn powi(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.powi(-k);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// Square root when it exists in the generator field by inspection:
    /// even monomial exponents, even factor multiplicities and a square
    /// polynomial part.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let fail = || Error::Usage(format!("no square root of {} in the coefficient field", self.to_text()));
        if self.mono.iter().any(|e| e % 2 != 0)
            || self.num.values().any(|k| k % 2 != 0)
            || self.den.values().any(|k| k % 2 != 0)
        {
            return Err(fail());
        }
        let r = self.rest.sqrt().ok_or_else(fail)?;
        Ok(Scalar {
            mono: [self.mono[0] / 2, self.mono[1] / 2, self.mono[2] / 2],
            rest: r,
            num: self.num.iter().map(|(f, k)| (f.clone(), k / 2)).collect(),
            den: self.den.iter().map(|(f, k)| (f.clone(), k / 2)).collect(),
        })
    }

    /// Expanded numerator and denominator polynomials; the denominator has a
    /// positive leading coefficient and coprime integer coefficients.
    pub fn num_den(&self) -> (SparsePoly, SparsePoly) {
        if self.is_zero() {
            return (SparsePoly::zero(), SparsePoly::one());
        }
        let n = self.rest.mul(&expand(&self.num)).mul_mono(mono_pos(self.mono));
        let d = expand(&self.den).mul_mono(mono_neg(self.mono));
        (n, d)
    }

    /// Exact value at rational (u, v, w).
    pub fn eval(&self, at: &[BigRat; 3]) -> Result<BigRat> {
        let (n, d) = self.num_den();
        let dv = d.eval(at);
        if dv.is_zero() {
            return Err(Error::Pole(format!("{} at ({}, {}, {})", self.to_text(), at[0], at[1], at[2])));
        }
        Ok(n.eval(at) / dv)
    }

    /// Substitutes rational values for some generators (None keeps it).
    pub fn specialize(&self, at: [Option<BigRat>; 3]) -> Result<Scalar> {
        let (n, d) = self.num_den();
        let sub = |p: &SparsePoly| {
            let terms = p.terms().iter().map(|(m, c)| {
                let e = m.exps();
                let mut c = c.clone();
                let mut keep = [0u32; 3];
                for k in 0..3 {
                    match &at[k] {
                        Some(x) => c *= num_traits::pow(x.clone(), e[k] as usize),
                        None => keep[k] = e[k],
                    }
                }
                (Mono::new(keep), c)
            });
            Scalar::from_poly(SparsePoly::from_terms(terms))
        };
        sub(&n).div(&sub(&d)).map_err(|_| Error::Pole("specialization hits a denominator zero".into()))
    }

    pub fn to_text(&self) -> String {
        let (n, d) = self.num_den();
        if d.is_one() {
            super::text::poly_to_text(&n)
        } else {
            format!("({})/({})", super::text::poly_to_text(&n), super::text::poly_to_text(&d))
        }
    }

    pub fn to_latex(&self) -> String {
        let (n, d) = self.num_den();
        if d.is_one() {
            super::text::poly_to_latex(&n)
        } else {
            format!("\\frac{{{}}}{{{}}}", super::text::poly_to_latex(&n), super::text::poly_to_latex(&d))
        }
    }
}

impl PartialEq for Scalar {
    /// Decided by cross-multiplication: the difference is formed over a
    /// common denominator and its numerator tested for zero.
    fn eq(&self, other: &Self) -> bool {
        if self.mono == other.mono && self.rest == other.rest && self.num == other.num && self.den == other.den {
            return true;
        }
        self.sub(other).is_zero()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.to_text())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    fn one_minus(s: &Scalar) -> Scalar {
        Scalar::one().sub(s)
    }

    #[test]
    fn binomials_split_into_cyclotomics() {
        let t = Scalar::t();
        let a = one_minus(&t.powi(6).unwrap());
        // 1 - v^12 = ∏_{d|12} Φ_d(v)
        assert_eq!(a.num.len(), 6);
        let b = one_minus(&t).mul(&Scalar::one().add(&t));
        assert_eq!(one_minus(&t.mul(&t)), b);
    }

    #[test]
    fn inverse_pair_cancels_to_one() {
        let q = Scalar::q();
        let t = Scalar::t();
        let x = one_minus(&t).div(&one_minus(&q)).unwrap();
        let y = one_minus(&q).div(&one_minus(&t)).unwrap();
        assert!(x.mul(&y).is_one());
    }

    #[test]
    fn cross_multiplication_equality() {
        let t = Scalar::t();
        let lhs = one_minus(&t.mul(&t)).div(&one_minus(&t)).unwrap();
        assert_eq!(lhs, Scalar::one().add(&t));
        assert!(lhs.is_polynomial());
    }

    #[test]
    fn sums_reduce_against_denominators() {
        // 1/(1-t) - t/(1-t) = 1
        let t = Scalar::t();
        let d = one_minus(&t);
        let s = Scalar::one().div(&d).unwrap().sub(&t.div(&d).unwrap());
        assert!(s.is_one());
    }

    #[test]
    fn sqrt_of_monomial_times_square() {
        let x = Scalar::from_rat(rat(9, 4)).mul(&Scalar::q());
        assert_eq!(x.sqrt().unwrap(), Scalar::from_rat(rat(3, 2)).mul(&Scalar::u()));
        assert!(Scalar::t().mul(&Scalar::from_i64(2)).sqrt().is_err());
    }

    #[test]
    fn eval_matches_rational_arithmetic() {
        let q = Scalar::q();
        let t = Scalar::t();
        let x = one_minus(&t).div(&one_minus(&q.mul(&t))).unwrap();
        let at = [rat(1, 2), rat(1, 3), int(1)];
        let want = (int(1) - rat(1, 9)) / (int(1) - rat(1, 36));
        assert_eq!(x.eval(&at).unwrap(), want);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().div(&Scalar::zero()), Err(Error::DivisionByZero));
    }
}

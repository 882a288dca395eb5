//! Laurent polynomials in x₁…xₙ over a [`Field`].

use std::collections::BTreeMap;
use std::fmt;

use super::field::Field;
use crate::error::{Error, Result};

pub type Exp = Vec<i32>;

#[derive(Clone, PartialEq)]
pub struct LaurentPoly<F: Field> {
    rank: usize,
    terms: BTreeMap<Exp, F>,
}

impl<F: Field> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly[{}]({})", self.rank, self.to_text())
    }
}

fn check_rank(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::Usage(format!("rank mismatch: {a} vs {b}")))
    }
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, F::one())
    }

    pub fn constant(rank: usize, c: F) -> Self {
        Self::monomial(vec![0; rank], c)
    }

    pub fn monomial(e: Exp, c: F) -> Self {
        let rank = e.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { rank, terms }
    }

    /// x_i^k (i is zero-based).
    pub fn var(rank: usize, i: usize, k: i32) -> Self {
        let mut e = vec![0; rank];
        e[i] = k;
        Self::monomial(e, F::one())
    }

    /// Collects (exponent, coefficient) pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (Exp, F)>>(rank: usize, it: I) -> Self {
        let mut buckets: BTreeMap<Exp, Vec<F>> = BTreeMap::new();
        for (e, c) in it {
            assert_eq!(e.len(), rank, "exponent length must equal rank");
            buckets.entry(e).or_default().push(c);
        }
        let terms = buckets
            .into_iter()
            .filter_map(|(e, cs)| {
                let c = if cs.len() == 1 { cs.into_iter().next().unwrap() } else { F::sum_all(cs) };
                (!c.is_zero()).then_some((e, c))
            })
            .collect();
        LaurentPoly { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lex order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exp, &F)> {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<Exp> {
        self.terms.keys().cloned().collect()
    }

    pub fn coeff(&self, e: &[i32]) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        check_rank(self.rank, o.rank)?;
        Ok(Self::from_terms(
            self.rank,
            self.terms.iter().chain(o.terms.iter()).map(|(e, c)| (e.clone(), c.clone())),
        ))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        self.map_coeffs(|a| a.mul(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(e, c)| {
                let d = f(c);
                (!d.is_zero()).then(|| (e.clone(), d))
            })
            .collect();
        LaurentPoly { rank: self.rank, terms }
    }

    /// Fallible coefficient map into another field.
    pub fn try_map_into<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<LaurentPoly<G>> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = f(c)?;
            if !d.is_zero() {
                terms.insert(e.clone(), d);
            }
        }
        Ok(LaurentPoly { rank: self.rank, terms })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        check_rank(self.rank, o.rank)?;
        let mut out = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Exp = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.push((e, ca.mul(cb)));
            }
        }
        Ok(Self::from_terms(self.rank, out))
    }

    /// Multiplies every exponent by the monomial x^e.
    pub fn shift(&self, e: &[i32]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(a, c)| (a.iter().zip(e).map(|(x, y)| x + y).collect(), c.clone()))
            .collect();
        LaurentPoly { rank: self.rank, terms }
    }

    /// The substitution x_i ↦ c·x_i.
    pub fn dilate(&self, i: usize, c: &F) -> Result<Self> {
        let mut cache: BTreeMap<i32, F> = BTreeMap::new();
        let mut terms = BTreeMap::new();
        for (e, a) in &self.terms {
            let k = e[i];
            let p = match cache.get(&k) {
                Some(p) => p.clone(),
                None => {
                    let p = c.powi(k as i64)?;
                    cache.insert(k, p.clone());
                    p
                }
            };
            terms.insert(e.clone(), a.mul(&p));
        }
        Ok(LaurentPoly { rank: self.rank, terms })
    }

    /// Evaluates at x_i = values[i].
    pub fn substitute(&self, values: &[F]) -> Result<F> {
        check_rank(self.rank, values.len())?;
        let mut parts = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            let mut acc = c.clone();
            for (x, k) in values.iter().zip(e) {
                if *k != 0 {
                    acc = acc.mul(&x.powi(*k as i64)?);
                }
            }
            parts.push(acc);
        }
        Ok(F::sum_all(parts))
    }

    /// Invariance under every x_i ↦ 1/x_i and every permutation of the
    /// variables, checked on the support.
    pub fn is_hyperoctahedral(&self) -> bool {
        for (e, c) in &self.terms {
            for i in 0..self.rank {
                let mut f = e.clone();
                f[i] = -f[i];
                if f != *e && self.terms.get(&f) != Some(c) {
                    return false;
                }
                if i + 1 < self.rank {
                    let mut g = e.clone();
                    g.swap(i, i + 1);
                    if g != *e && self.terms.get(&g) != Some(c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Exact quotient by the binomial `1 - c·x^e`, where `e` is
    /// lexicographically positive. Fails with [`Error::NotLaurent`] when the
    /// binomial does not divide.
    pub fn div_binomial(&self, c: &F, e: &[i32]) -> Result<Self> {
        debug_assert!(e.iter().find(|&&k| k != 0).is_some_and(|&k| k > 0));
        let Some(top) = self.terms.keys().next_back().cloned() else {
            return Ok(self.clone());
        };
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, a)) = rem.pop_first() {
            let next: Exp = m.iter().zip(e).map(|(x, y)| x + y).collect();
            if next > top {
                return Err(Error::NotLaurent(format!(
                    "remainder at exponent {:?} when dividing by 1 - ({})x^{:?}",
                    m,
                    c.to_text(),
                    e
                )));
            }
            let carry = a.mul(c);
            match rem.get_mut(&next) {
                Some(b) => {
                    *b = b.add(&carry);
                    if b.is_zero() {
                        rem.remove(&next);
                    }
                }
                None => {
                    if !carry.is_zero() {
                        rem.insert(next, carry);
                    }
                }
            }
            quot.insert(m, a);
        }
        Ok(LaurentPoly { rank: self.rank, terms: quot })
    }

    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let m = mono_text(e);
                match (c.is_one(), m.is_empty()) {
                    (true, true) => "1".to_string(),
                    (true, false) => m,
                    (false, true) => format!("{{{}}}", c.to_text()),
                    (false, false) => format!("{{{}}}*{}", c.to_text(), m),
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn to_latex(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let m: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k != 0)
                    .map(|(i, k)| if *k == 1 { format!("x_{{{}}}", i + 1) } else { format!("x_{{{}}}^{{{}}}", i + 1, k) })
                    .collect();
                let m = m.join(" ");
                match (c.is_one(), m.is_empty()) {
                    (true, true) => "1".to_string(),
                    (true, false) => m,
                    (false, true) => format!("\\left({}\\right)", c.to_latex()),
                    (false, false) => format!("\\left({}\\right) {}", c.to_latex(), m),
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(rank));
        }
        let mut out = Vec::new();
        let mut rest = s;
        loop {
            let (coef, after) = if let Some(body) = rest.strip_prefix('{') {
                let close = matching_brace(body).ok_or_else(|| Error::Parse(format!("unbalanced braces in `{s}`")))?;
                let c = F::parse(&body[..close])?;
                let after = &body[close + 1..];
                (c, after.strip_prefix('*').unwrap_or(after))
            } else {
                (F::one(), rest)
            };
            let end = after.find(" + ").unwrap_or(after.len());
            let e = parse_mono(rank, &after[..end])?;
            out.push((e, coef));
            if end == after.len() {
                break;
            }
            rest = &after[end + 3..];
        }
        Ok(Self::from_terms(rank, out))
    }
}

fn matching_brace(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '{' => depth += 1,
            '}' if depth == 0 => return Some(i),
            '}' => depth -= 1,
            _ => {}
        }
    }
    None
}

fn mono_text(e: &[i32]) -> String {
    e.iter()
        .enumerate()
        .filter(|(_, k)| **k != 0)
        .map(|(i, k)| if *k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
        .collect::<Vec<_>>()
        .join("*")
}

fn parse_mono(rank: usize, s: &str) -> Result<Exp> {
    let mut e = vec![0; rank];
    let s = s.trim();
    if s.is_empty() || s == "1" {
        return Ok(e);
    }
    for tok in s.split('*') {
        let bad = || Error::Parse(format!("bad monomial factor `{tok}`"));
        let body = tok.strip_prefix('x').ok_or_else(bad)?;
        let (i, k) = match body.split_once('^') {
            Some((i, k)) => (i, k.parse::<i32>().map_err(|_| bad())?),
            None => (body, 1),
        };
        let i: usize = i.parse().map_err(|_| bad())?;
        if i == 0 || i > rank {
            return Err(Error::Usage(format!("variable x{i} out of range for rank {rank}")));
        }
        e[i - 1] += k;
    }
    Ok(e)
}

/// The orbit sum m_λ of a dominant exponent under signed permutations.
pub fn orbit_sum<F: Field>(rank: usize, lambda: &[i32]) -> LaurentPoly<F> {
    let mut seen = std::collections::BTreeSet::new();
    let mut base: Vec<i32> = lambda.to_vec();
    base.resize(rank, 0);
    base.sort();
    loop {
        let nz: Vec<usize> = (0..rank).filter(|&i| base[i] != 0).collect();
        for mask in 0u32..(1 << nz.len()) {
            let mut e = base.clone();
            for (b, &i) in nz.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    e[i] = -e[i];
                }
            }
            seen.insert(e);
        }
        if !next_permutation(&mut base) {
            break;
        }
    }
    LaurentPoly::from_terms(rank, seen.into_iter().map(|e| (e, F::one())))
}

fn next_permutation(a: &mut [i32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Decreasing rearrangement of |e_i|.
pub fn dominant(e: &[i32]) -> Vec<i32> {
    let mut d: Vec<i32> = e.iter().map(|k| k.abs()).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;
    use crate::arith::scalar::Scalar;
    use crate::arith::BigRat;

    fn m1() -> LaurentPoly<BigRat> {
        LaurentPoly::var(1, 0, 1).add(&LaurentPoly::var(1, 0, -1)).unwrap()
    }

    #[test]
    fn binomial_square() {
        let p = m1().mul(&m1()).unwrap();
        assert_eq!(p.to_text(), "x1^2 + {2} + x1^-2");
        assert_eq!(p.coeff(&[0]), int(2));
    }

    #[test]
    fn rank_mismatch_is_usage() {
        let a: LaurentPoly<BigRat> = LaurentPoly::one(1);
        let b = LaurentPoly::one(2);
        assert!(matches!(a.add(&b), Err(Error::Usage(_))));
    }

    #[test]
    fn substitute_with_inverse_powers() {
        let t = Scalar::t();
        let p: LaurentPoly<Scalar> = LaurentPoly::var(1, 0, 1).add(&LaurentPoly::var(1, 0, -1)).unwrap();
        let v = p.substitute(std::slice::from_ref(&t)).unwrap();
        let want = Scalar::one().add(&t.mul(&t)).div(&t).unwrap();
        assert_eq!(v, want);
        assert!(p.substitute(&[Scalar::zero()]).is_err());
    }

    #[test]
    fn hyperoctahedral() {
        assert!(m1().is_hyperoctahedral());
        assert!(!LaurentPoly::<BigRat>::var(1, 0, 1).is_hyperoctahedral());
        let m: LaurentPoly<BigRat> = orbit_sum(2, &[2, 1]);
        assert_eq!(m.len(), 8);
        assert!(m.is_hyperoctahedral());
    }

    #[test]
    fn binomial_division() {
        // (1 - 2 x1 x2^-1)(x1 + 3)
        let b: LaurentPoly<BigRat> =
            LaurentPoly::one(2).sub(&LaurentPoly::monomial(vec![1, -1], int(2))).unwrap();
        let f = LaurentPoly::var(2, 0, 1).add(&LaurentPoly::constant(2, int(3))).unwrap();
        let p = b.mul(&f).unwrap();
        assert_eq!(p.div_binomial(&int(2), &[1, -1]).unwrap(), f);
        assert!(matches!(f.div_binomial(&int(2), &[1, -1]), Err(Error::NotLaurent(_))));
    }

    #[test]
    fn text_round_trip() {
        let t = Scalar::t();
        let p: LaurentPoly<Scalar> = LaurentPoly::from_terms(
            2,
            [
                (vec![1, 0], Scalar::one()),
                (vec![0, -1], Scalar::one().sub(&t).div(&Scalar::one().sub(&Scalar::q())).unwrap()),
                (vec![0, 0], t.clone()),
            ],
        );
        let s = p.to_text();
        assert_eq!(LaurentPoly::<Scalar>::parse(2, &s).unwrap(), p);
    }
}

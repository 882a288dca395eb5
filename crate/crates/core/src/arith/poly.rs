//! Sparse polynomials over ℚ in the three generators u = q^{1/2}, v = t^{1/2},
//! w = T^{1/2}.
//!
//! Terms are kept sorted in descending graded-lexicographic order (u > v > w),
//! which is also the serialization order.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::rat_sqrt;
use super::BigRat;

const FIELD_BITS: u32 = 16;
const FIELD_MASK: u64 = (1 << FIELD_BITS) - 1;

/// A monomial u^a v^b w^c with nonnegative exponents.
///
/// Packed as `[degree | a | b | c]` in 16-bit fields so that integer
/// comparison coincides with graded lex order and multiplication is addition.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono(u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    pub fn new(e: [u32; 3]) -> Mono {
        let deg = e[0] + e[1] + e[2];
        assert!(deg <= FIELD_MASK as u32, "monomial degree overflow");
        Mono(
            (deg as u64) << (3 * FIELD_BITS)
                | (e[0] as u64) << (2 * FIELD_BITS)
                | (e[1] as u64) << FIELD_BITS
                | e[2] as u64,
        )
    }

    pub fn exps(self) -> [u32; 3] {
        [
            ((self.0 >> (2 * FIELD_BITS)) & FIELD_MASK) as u32,
            ((self.0 >> FIELD_BITS) & FIELD_MASK) as u32,
            (self.0 & FIELD_MASK) as u32,
        ]
    }

    pub fn degree(self) -> u32 {
        (self.0 >> (3 * FIELD_BITS)) as u32
    }

    #[inline]
    pub fn mul(self, other: Mono) -> Mono {
        debug_assert!(self.degree() + other.degree() <= FIELD_MASK as u32);
        Mono(self.0 + other.0)
    }

    pub fn divides(self, other: Mono) -> bool {
        let a = self.exps();
        let b = other.exps();
        a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2]
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(self, other: Mono) -> Mono {
        Mono(other.0 - self.0)
    }

    pub fn gcd(self, other: Mono) -> Mono {
        let a = self.exps();
        let b = other.exps();
        Mono::new([a[0].min(b[0]), a[1].min(b[1]), a[2].min(b[2])])
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }
}

/// A polynomial in u, v, w with rational coefficients; never stores a zero
/// coefficient.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SparsePoly {
    terms: Vec<(Mono, BigRat)>,
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({})", super::text::poly_to_text(self))
    }
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn term(m: Mono, c: BigRat) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            SparsePoly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, BigRat)>>(it: I) -> Self {
        let mut acc: HashMap<Mono, BigRat> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(BigRat::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Mono, BigRat>) -> Self {
        let mut terms: Vec<(Mono, BigRat)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        SparsePoly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigRat)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigRat> {
        match self.terms.as_slice() {
            [] => Some(BigRat::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn lead(&self) -> Option<&(Mono, BigRat)> {
        self.terms.first()
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        SparsePoly {
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        // merge of two descending lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        SparsePoly { terms: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_mono(*m).scale(c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_mono(*m).scale(c);
        }
        let mut acc: HashMap<Mono, BigRat> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(*mb)) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += prod;
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.lead()?.clone();
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.len() == 1 {
            if !self.terms.iter().all(|(m, _)| dm.divides(*m)) {
                return None;
            }
            let inv = BigRat::one() / &dc;
            return Some(SparsePoly {
                terms: self.terms.iter().map(|(m, c)| (dm.quotient_of(*m), c * &inv)).collect(),
            });
        }
        // bounds: every quotient term must have degree <= deg(self) - deg(d)
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((rm, rc)) = rem.lead().cloned() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = dm.quotient_of(rm);
            let qc = rc / &dc;
            let step = d.mul_mono(qm).scale(&qc);
            rem = rem.sub(&step);
            quot.push((qm, qc));
        }
        Some(SparsePoly { terms: quot })
    }

    /// Exact square root with a positive leading coefficient, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        let half = |m: Mono| {
            let e = m.exps();
            e.iter().all(|k| k % 2 == 0).then(|| Mono::new([e[0] / 2, e[1] / 2, e[2] / 2]))
        };
        let Some((lm, lc)) = self.lead().cloned() else { return Some(Self::zero()) };
        let (tm, tc) = self.terms.last().cloned()?;
        let (top, top_c) = (half(lm)?, rat_sqrt(&lc)?);
        // the smallest term of a square is the square of the smallest term
        let floor = half(tm)?;
        rat_sqrt(&tc)?;
        let twice = &top_c * BigRat::from_integer(2.into());
        let mut root = Self::term(top, top_c);
        loop {
            let rem = self.sub(&root.mul(&root));
            let Some((rm, rc)) = rem.lead().cloned() else { return Some(root) };
            if !top.divides(rm) {
                return None;
            }
            let next = top.quotient_of(rm);
            if next < floor {
                return None;
            }
            root = root.add(&Self::term(next, rc / &twice));
        }
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some((m, _)) => it.fold(*m, |g, (m, _)| g.gcd(*m)),
        }
    }

    /// Divides every term by `m`, which must divide all of them.
    pub fn div_mono(&self, m: Mono) -> Self {
        if m.is_one() {
            return self.clone();
        }
        SparsePoly {
            terms: self.terms.iter().map(|(a, c)| (m.quotient_of(*a), c.clone())).collect(),
        }
    }

    /// Splits `self = content * primitive` where `primitive` has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn primitive_part(&self) -> (BigRat, SparsePoly) {
        if self.is_zero() {
            return (BigRat::zero(), Self::zero());
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRat::new(num_gcd, den_lcm);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        let inv = BigRat::one() / &content;
        (content, self.scale(&inv))
    }

    /// Evaluates at rational values of (u, v, w).
    pub fn eval(&self, at: &[BigRat; 3]) -> BigRat {
        let mut acc = BigRat::zero();
        for (m, c) in &self.terms {
            let e = m.exps();
            let mut t = c.clone();
            for k in 0..3 {
                if e[k] > 0 {
                    t *= num_traits::pow(at[k].clone(), e[k] as usize);
                }
            }
            acc += t;
        }
        acc
    }
}

//! The coefficient-field abstraction shared by the symbolic ([`Scalar`]) and
//! sampled ([`BigRat`]) regimes.

use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::{rat_sqrt, rat_text};
use super::scalar::Scalar;
use super::BigRat;
use crate::error::{Error, Result};

pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(r: BigRat) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self>;
    fn sqrt(&self) -> Result<Self>;
    fn to_text(&self) -> String;
    fn to_latex(&self) -> String;
    fn parse(s: &str) -> Result<Self>;

    fn from_i64(n: i64) -> Self {
        Self::from_rat(BigRat::from_integer(n.into()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    fn powi(&self, k: i64) -> Result<Self> {
        if k < 0 {
            return self.inv()?.powi(-k);
        }
        let mut acc = Self::one();
        let mut base = self.clone();
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

    fn sum_all(items: Vec<Self>) -> Self {
        items.iter().fold(Self::zero(), |a, b| a.add(b))
    }

    fn product(items: &[Self]) -> Self {
        items.iter().fold(Self::one(), |a, b| a.mul(b))
    }
}

impl Field for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rat(r: BigRat) -> Self {
        r
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self> {
        if Zero::is_zero(self) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn sqrt(&self) -> Result<Self> {
        rat_sqrt(self).ok_or_else(|| Error::Usage(format!("{} is not a rational square", rat_text(self))))
    }
    fn to_text(&self) -> String {
        rat_text(self)
    }
    fn to_latex(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn parse(s: &str) -> Result<Self> {
        super::rational::parse_rat(s)
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn from_rat(r: BigRat) -> Self {
        Scalar::from_rat(r)
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        Scalar::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        Scalar::mul(self, o)
    }
    fn neg(&self) -> Self {
        Scalar::neg(self)
    }
    fn inv(&self) -> Result<Self> {
        Scalar::inv(self)
    }
    fn sqrt(&self) -> Result<Self> {
        Scalar::sqrt(self)
    }
    fn to_text(&self) -> String {
        Scalar::to_text(self)
    }
    fn to_latex(&self) -> String {
        Scalar::to_latex(self)
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self) || *self == Scalar::one()
    }
    fn powi(&self, k: i64) -> Result<Self> {
        Scalar::powi(self, k)
    }
    fn sum_all(items: Vec<Self>) -> Self {
        Scalar::sum_all(items)
    }
    fn parse(s: &str) -> Result<Self> {
        super::text::parse_scalar(s)
    }
}

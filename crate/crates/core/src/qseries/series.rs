//! Terminating `φ` and very-well-poised `W` series.

use crate::arith::Field;
use crate::error::{Error, Result};

/// Upper or lower parameter. `PlusMinus(X)` stands for the pair `±X^{1/2}`,
/// whose joint Pochhammer `(X;q²)_k` needs no square root.
#[derive(Clone, Debug, PartialEq)]
pub enum Param<F> {
    One(F),
    PlusMinus(F),
}

impl<F: Field> Param<F> {
    fn width(&self) -> usize {
        match self {
            Param::One(_) => 1,
            Param::PlusMinus(_) => 2,
        }
    }

    /// Ratio factor between consecutive terms: `1 - x q^k` or `1 - X q^{2k}`.
    fn factor(&self, qk: &F) -> F {
        match self {
            Param::One(x) => F::one().sub(&x.mul(qk)),
            Param::PlusMinus(x) => F::one().sub(&x.mul(&qk.mul(qk))),
        }
    }

    /// Product of the parameters it stands for.
    fn value(&self) -> F {
        match self {
            Param::One(x) => x.clone(),
            Param::PlusMinus(x) => x.neg(),
        }
    }

    /// The well-poised partner `qa/p`.
    fn partner(&self, a: &F, q: &F) -> Result<Param<F>> {
        let qa = q.mul(a);
        Ok(match self {
            Param::One(x) => Param::One(qa.div(x)?),
            Param::PlusMinus(x) => Param::PlusMinus(qa.mul(&qa).div(x)?),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Phi,
    W,
}

/// A basic hypergeometric series. For `Kind::W`, `upper` is `[a₁, a₄, …]`
/// and `lower` is empty; the remaining parameters follow from well-poisedness.
#[derive(Clone, Debug)]
pub struct HypSeriesSpec<F> {
    pub upper: Vec<Param<F>>,
    pub lower: Vec<Param<F>>,
    pub base: F,
    pub argument: F,
    pub kind: Kind,
}

pub const MAX_TERMS: usize = 4096;

impl<F: Field> HypSeriesSpec<F> {
    pub fn phi(upper: Vec<F>, lower: Vec<F>, q: F, z: F) -> Self {
        HypSeriesSpec {
            upper: upper.into_iter().map(Param::One).collect(),
            lower: lower.into_iter().map(Param::One).collect(),
            base: q,
            argument: z,
            kind: Kind::Phi,
        }
    }

    /// `W(a; params; q, z)`.
    pub fn w(a: F, params: Vec<Param<F>>, q: F, z: F) -> Self {
        let mut upper = vec![Param::One(a)];
        upper.extend(params);
        HypSeriesSpec { upper, lower: Vec::new(), base: q, argument: z, kind: Kind::W }
    }

    /// The plain `φ` parameter lists.
    pub fn expanded(&self) -> Result<(Vec<Param<F>>, Vec<Param<F>>)> {
        match self.kind {
            Kind::Phi => Ok((self.upper.clone(), self.lower.clone())),
            Kind::W => {
                let a = match self.upper.first() {
                    Some(Param::One(a)) => a.clone(),
                    _ => return Err(Error::Usage("W series needs a leading parameter a".into())),
                };
                if !self.lower.is_empty() {
                    return Err(Error::Usage("W series takes no lower parameters".into()));
                }
                let q = &self.base;
                let q2a = q.mul(q).mul(&a);
                let mut up = vec![Param::One(a.clone()), Param::PlusMinus(q2a)];
                let mut lo = vec![Param::PlusMinus(a.clone())];
                for p in &self.upper[1..] {
                    up.push(p.clone());
                    lo.push(p.partner(&a, q)?);
                }
                Ok((up, lo))
            }
        }
    }

    /// Number of upper parameters in the `φ` form, counting pairs twice.
    pub fn upper_len(&self) -> Result<usize> {
        Ok(self.expanded()?.0.iter().map(Param::width).sum())
    }
}

/// Exact value of a terminating series.
pub fn series_eval<F: Field>(spec: &HypSeriesSpec<F>) -> Result<F> {
    let (up, lo) = spec.expanded()?;
    let q = &spec.base;
    let mut sum = F::one();
    let mut term = F::one();
    let mut qk = F::one();
    for _ in 0..MAX_TERMS {
        let mut num = spec.argument.clone();
        for p in &up {
            num = num.mul(&p.factor(&qk));
        }
        if num.is_zero() {
            return Ok(sum);
        }
        let qk1 = qk.mul(q);
        let mut den = F::one().sub(&qk1);
        for p in &lo {
            den = den.mul(&p.factor(&qk));
        }
        if den.is_zero() {
            return Err(Error::Pole("lower parameter Pochhammer vanishes".into()));
        }
        term = term.mul(&num).div(&den)?;
        sum = sum.add(&term);
        qk = qk1;
    }
    Err(Error::NonTerminating(MAX_TERMS))
}

/// Balancing condition `(a₄⋯a_{r+1}) z = (±(a₁q)^{1/2})^{r-3}` for a `W` series.
pub fn is_vwp_balanced<F: Field>(spec: &HypSeriesSpec<F>) -> bool {
    if spec.kind != Kind::W {
        return false;
    }
    let Some(Param::One(a)) = spec.upper.first() else { return false };
    let rest = &spec.upper[1..];
    let count: usize = rest.iter().map(Param::width).sum();
    if count == 0 {
        return false;
    }
    let lhs = rest.iter().fold(spec.argument.clone(), |acc, p| acc.mul(&p.value()));
    let aq = a.mul(&spec.base);
    let e = count as i64 - 1;
    let Ok(rhs) = aq.powi(e / 2) else { return false };
    if e % 2 == 0 {
        lhs == rhs
    } else {
        aq.powi(e).map(|r| lhs.mul(&lhs) == r).unwrap_or(false)
    }
}

//! Transformation and summation identities as residual computations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::pochhammer::qpoch_ratio;
use super::series::{series_eval, HypSeriesSpec, Param};
use crate::arith::Field;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "watson")]
    Watson,
    #[serde(rename = "saalschutz")]
    Saalschutz,
    #[serde(rename = "sears_III15")]
    SearsIII15,
    #[serde(rename = "sears_III16")]
    SearsIII16,
    #[serde(rename = "sears_2_10_4")]
    Sears2104,
    #[serde(rename = "sum_6phi5")]
    Sum6phi5,
    #[serde(rename = "ns_lemma")]
    NsLemma,
    #[serde(rename = "thm_2_2")]
    Thm22,
    #[serde(rename = "thm_2_2_sum")]
    Thm22Sum,
}

impl IdentityId {
    pub const ALL: [IdentityId; 9] = [
        IdentityId::Watson,
        IdentityId::Saalschutz,
        IdentityId::SearsIII15,
        IdentityId::SearsIII16,
        IdentityId::Sears2104,
        IdentityId::Sum6phi5,
        IdentityId::NsLemma,
        IdentityId::Thm22,
        IdentityId::Thm22Sum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Watson => "watson",
            IdentityId::Saalschutz => "saalschutz",
            IdentityId::SearsIII15 => "sears_III15",
            IdentityId::SearsIII16 => "sears_III16",
            IdentityId::Sears2104 => "sears_2_10_4",
            IdentityId::Sum6phi5 => "sum_6phi5",
            IdentityId::NsLemma => "ns_lemma",
            IdentityId::Thm22 => "thm_2_2",
            IdentityId::Thm22Sum => "thm_2_2_sum",
        }
    }

    /// Free rational parameters, besides `q`, that a sampler must supply.
    pub fn free_values(self) -> &'static [&'static str] {
        match self {
            IdentityId::Watson => &["a", "b", "c", "d", "e"],
            IdentityId::Saalschutz | IdentityId::Sum6phi5 => &["a", "b", "c"],
            IdentityId::SearsIII15 | IdentityId::SearsIII16 | IdentityId::Sears2104 => {
                &["a", "b", "c", "d", "e"]
            }
            IdentityId::NsLemma => &["a", "f", "z", "b1", "b2"],
            IdentityId::Thm22 | IdentityId::Thm22Sum => &["a", "f", "a2"],
        }
    }

    /// Name of the integer that sets the series length.
    pub fn length_name(self) -> &'static str {
        match self {
            IdentityId::NsLemma | IdentityId::Thm22 | IdentityId::Thm22Sum => "theta",
            _ => "n",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "6phi5" {
            return Ok(IdentityId::Sum6phi5);
        }
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown identity `{s}`")))
    }
}

/// An identity together with concrete parameter values.
#[derive(Clone, Debug)]
pub struct TransformInstance<F> {
    pub id: IdentityId,
    pub values: BTreeMap<String, F>,
    pub ints: BTreeMap<String, i64>,
}

impl<F: Field> TransformInstance<F> {
    pub fn new(id: IdentityId) -> Self {
        TransformInstance { id, values: BTreeMap::new(), ints: BTreeMap::new() }
    }

    pub fn with(mut self, name: &str, v: F) -> Self {
        self.values.insert(name.to_string(), v);
        self
    }

    pub fn with_int(mut self, name: &str, k: i64) -> Self {
        self.ints.insert(name.to_string(), k);
        self
    }

    fn get(&self, name: &str) -> Result<F> {
        self.values
            .get(name)
            .cloned()
            .ok_or_else(|| Error::Usage(format!("{}: missing parameter `{name}`", self.id)))
    }

    fn int(&self, name: &str) -> Result<i64> {
        match self.ints.get(name) {
            Some(&k) if k >= 0 => Ok(k),
            Some(&k) => Err(Error::Usage(format!("{}: `{name}` = {k} is negative", self.id))),
            None => Err(Error::Usage(format!("{}: missing integer `{name}`", self.id))),
        }
    }

    /// Extra parameters `b1, b2, …` of the lemma, in index order.
    fn extras(&self) -> Vec<F> {
        let mut keyed: Vec<(usize, F)> = self
            .values
            .iter()
            .filter_map(|(k, v)| k.strip_prefix('b')?.parse::<usize>().ok().map(|i| (i, v.clone())))
            .collect();
        keyed.sort_by_key(|(i, _)| *i);
        keyed.into_iter().map(|(_, v)| v).collect()
    }
}

fn phi43<F: Field>(up: [F; 4], lo: [F; 3], q: &F, z: F) -> Result<F> {
    series_eval(&HypSeriesSpec::phi(up.to_vec(), lo.to_vec(), q.clone(), z))
}

/// `LHS − RHS` of the tagged identity.
pub fn verify_identity<F: Field>(inst: &TransformInstance<F>) -> Result<F> {
    let (l, r) = sides(inst)?;
    Ok(l.sub(&r))
}

/// Both sides of the tagged identity.
pub fn sides<F: Field>(inst: &TransformInstance<F>) -> Result<(F, F)> {
    let q = inst.get("q")?;
    match inst.id {
        IdentityId::Watson => {
            let [a, b, c, d, e] = ["a", "b", "c", "d", "e"].map(|k| inst.get(k));
            let (a, b, c, d, e) = (a?, b?, c?, d?, e?);
            let n = inst.int("n")?;
            let qn = q.powi(n)?;
            let qmn = qn.inv()?;
            let z = a.mul(&a).mul(&q.powi(n + 2)?).div(&b.mul(&c).mul(&d).mul(&e))?;
            let ps = [&b, &c, &d, &e, &qmn].map(|x| Param::One(x.clone()));
            let lhs = series_eval(&HypSeriesSpec::w(a.clone(), ps.to_vec(), q.clone(), z))?;
            let aq = a.mul(&q);
            let pre = qpoch_ratio(
                &[aq.clone(), aq.div(&d.mul(&e))?],
                &[aq.div(&d)?, aq.div(&e)?],
                &q,
                n,
            )?;
            let phi = phi43(
                [qmn.clone(), d.clone(), e.clone(), aq.div(&b.mul(&c))?],
                [aq.div(&b)?, aq.div(&c)?, d.mul(&e).mul(&qmn).div(&a)?],
                &q,
                q.clone(),
            )?;
            Ok((lhs, pre.mul(&phi)))
        }
        IdentityId::Saalschutz => {
            let (a, b, c) = (inst.get("a")?, inst.get("b")?, inst.get("c")?);
            let n = inst.int("n")?;
            let qmn = q.powi(-n)?;
            let lower2 = a.mul(&b).mul(&q).mul(&qmn).div(&c)?;
            let lhs = series_eval(&HypSeriesSpec::phi(
                vec![a.clone(), b.clone(), qmn],
                vec![c.clone(), lower2],
                q.clone(),
                q.clone(),
            ))?;
            let rhs = qpoch_ratio(&[c.div(&a)?, c.div(&b)?], &[c.clone(), c.div(&a.mul(&b))?], &q, n)?;
            Ok((lhs, rhs))
        }
        IdentityId::SearsIII15 | IdentityId::SearsIII16 | IdentityId::Sears2104 => {
            let [a, b, c, d, e] = ["a", "b", "c", "d", "e"].map(|k| inst.get(k));
            let (a, b, c, d, e) = (a?, b?, c?, d?, e?);
            let n = inst.int("n")?;
            let qmn = q.powi(-n)?;
            let q1n = q.mul(&qmn);
            let f = a.mul(&b).mul(&c).mul(&q1n).div(&d.mul(&e))?;
            let lhs = phi43(
                [qmn.clone(), a.clone(), b.clone(), c.clone()],
                [d.clone(), e.clone(), f.clone()],
                &q,
                q.clone(),
            )?;
            let rhs = match inst.id {
                IdentityId::Sears2104 => {
                    let pre = a.powi(n)?.mul(&qpoch_ratio(
                        &[e.div(&a)?, f.div(&a)?],
                        &[e.clone(), f.clone()],
                        &q,
                        n,
                    )?);
                    let aq1n = a.mul(&q1n);
                    pre.mul(&phi43(
                        [qmn, a.clone(), d.div(&b)?, d.div(&c)?],
                        [d.clone(), aq1n.div(&e)?, aq1n.div(&f)?],
                        &q,
                        q.clone(),
                    )?)
                }
                IdentityId::SearsIII15 => {
                    let ef = e.mul(&f);
                    let efab = ef.div(&a.mul(&b))?;
                    let efac = ef.div(&a.mul(&c))?;
                    let efabc = efab.div(&c)?;
                    let pre = qpoch_ratio(
                        &[a.clone(), efab.clone(), efac.clone()],
                        &[e.clone(), f.clone(), efabc.clone()],
                        &q,
                        n,
                    )?;
                    pre.mul(&phi43(
                        [qmn, e.div(&a)?, f.div(&a)?, efabc],
                        [efab, efac, q1n.div(&a)?],
                        &q,
                        q.clone(),
                    )?)
                }
                _ => {
                    let debc = d.mul(&e).div(&b.mul(&c))?;
                    let pre = qpoch_ratio(
                        &[e.div(&a)?, debc.clone()],
                        &[e.clone(), debc.div(&a)?],
                        &q,
                        n,
                    )?;
                    pre.mul(&phi43(
                        [qmn, a.clone(), d.div(&b)?, d.div(&c)?],
                        [d.clone(), debc, a.mul(&q1n).div(&e)?],
                        &q,
                        q.clone(),
                    )?)
                }
            };
            Ok((lhs, rhs))
        }
        IdentityId::Sum6phi5 => {
            let (a, b, c) = (inst.get("a")?, inst.get("b")?, inst.get("c")?);
            let n = inst.int("n")?;
            let qmn = q.powi(-n)?;
            let z = a.mul(&q.powi(n + 1)?).div(&b.mul(&c))?;
            let ps = vec![Param::One(b.clone()), Param::One(c.clone()), Param::One(qmn)];
            let lhs = series_eval(&HypSeriesSpec::w(a.clone(), ps, q.clone(), z))?;
            let aq = a.mul(&q);
            let rhs = qpoch_ratio(
                &[aq.clone(), aq.div(&b.mul(&c))?],
                &[aq.div(&b)?, aq.div(&c)?],
                &q,
                n,
            )?;
            Ok((lhs, rhs))
        }
        IdentityId::NsLemma => {
            let (a, f, z) = (inst.get("a")?, inst.get("f")?, inst.get("z")?);
            let theta = inst.int("theta")?;
            let extra = inst.extras();
            let aq = a.mul(&q);
            let qt = q.powi(theta)?;
            let qmt = qt.inv()?;
            let mut ps = vec![Param::One(qmt.clone()), Param::One(qt.mul(&a).mul(&f))];
            ps.extend(extra.iter().cloned().map(Param::One));
            ps.push(Param::PlusMinus(aq.div(&f)?));
            ps.push(Param::PlusMinus(aq.mul(&q).div(&f)?));
            let lhs = series_eval(&HypSeriesSpec::w(a.clone(), ps, q.clone(), z.clone()))?;
            let f2q = f.mul(&f).div(&q)?;
            let pre = qpoch_ratio(&[aq.clone(), f2q.clone()], &[a.mul(&f), f.clone()], &q, theta)?;
            let qf = q.div(&f)?;
            let aqf = aq.div(&f)?;
            let low = qmt.div(&f2q)?.mul(&q);
            let mut terms = Vec::new();
            for m in 0..=theta {
                let coef = qpoch_ratio(
                    &[qf.clone(), qmt.clone(), aqf.clone()],
                    &[q.clone(), low.clone(), aq.clone()],
                    &q,
                    m,
                )?;
                if coef.is_zero() {
                    continue;
                }
                let qm = q.powi(m)?;
                let mut inner = vec![Param::One(qm.inv()?), Param::One(qm.mul(&aqf))];
                inner.extend(extra.iter().cloned().map(Param::One));
                let w = series_eval(&HypSeriesSpec::w(a.clone(), inner, q.clone(), z.clone()))?;
                terms.push(coef.mul(&qm).mul(&w));
            }
            Ok((lhs, pre.mul(&F::sum_all(terms))))
        }
        IdentityId::Thm22 | IdentityId::Thm22Sum => {
            let (a, f, a2) = (inst.get("a")?, inst.get("f")?, inst.get("a2")?);
            let af = a.mul(&f);
            let a3 = af.div(&a2)?;
            if let Some(given) = inst.values.get("a3") {
                if *given != a3 {
                    return Err(Error::Usage("thm_2_2 requires af = a2*a3".into()));
                }
            }
            let theta = inst.int("theta")?;
            let lhs = thm22_lhs(&a, &f, &a2, &a3, &q, theta)?;
            let aq = a.mul(&q);
            let rhs = if inst.id == IdentityId::Thm22 {
                let qmt = q.powi(-theta)?;
                let pre = qpoch_ratio(&[aq.clone(), af.div(&a2)?], &[af.clone(), aq.div(&a2)?], &q, theta)?;
                let q1t = qmt.mul(&q);
                pre.mul(&phi43(
                    [qmt.clone(), qmt.mul(&a2).div(&a)?, f.clone(), a2.clone()],
                    [q1t.mul(&a2).div(&af)?, q1t.div(&f)?, aq.div(&a3)?],
                    &q,
                    q.mul(&q).div(&f.mul(&f))?,
                )?)
            } else {
                let pre = qpoch_ratio(&[aq.clone(), q.clone()], &[af.clone(), f.clone()], &q, theta)?;
                let afa2 = af.div(&a2)?;
                let aqa2 = aq.div(&a2)?;
                let aqa3 = aq.div(&a3)?;
                let mut terms = Vec::new();
                for j in 0..=theta {
                    let x = qpoch_ratio(&[afa2.clone(), f.clone()], &[aqa2.clone(), q.clone()], &q, theta - j)?;
                    let y = qpoch_ratio(&[f.clone(), a2.clone()], &[q.clone(), aqa3.clone()], &q, j)?;
                    terms.push(x.mul(&y));
                }
                pre.mul(&F::sum_all(terms))
            };
            Ok((lhs, rhs))
        }
    }
}

/// The balanced `₁₂W₁₁` on the left of the theorem.
pub fn thm22_spec<F: Field>(a: &F, f: &F, a2: &F, a3: &F, q: &F, theta: i64) -> Result<HypSeriesSpec<F>> {
    let aq = a.mul(q);
    let qt = q.powi(theta)?;
    let ps = vec![
        Param::One(qt.inv()?),
        Param::One(qt.mul(a).mul(f)),
        Param::One(f.clone()),
        Param::One(a2.clone()),
        Param::One(a3.clone()),
        Param::PlusMinus(aq.div(f)?),
        Param::PlusMinus(aq.mul(q).div(f)?),
    ];
    Ok(HypSeriesSpec::w(a.clone(), ps, q.clone(), q.div(f)?))
}

fn thm22_lhs<F: Field>(a: &F, f: &F, a2: &F, a3: &F, q: &F, theta: i64) -> Result<F> {
    series_eval(&thm22_spec(a, f, a2, a3, q, theta)?)
}

impl<F: Field> TransformInstance<F> {
    /// Parameters as text, for reports.
    pub fn params_text(&self) -> BTreeMap<String, String> {
        let mut out: BTreeMap<String, String> =
            self.values.iter().map(|(k, v)| (k.clone(), v.to_text())).collect();
        out.extend(self.ints.iter().map(|(k, v)| (k.clone(), v.to_string())));
        out
    }
}


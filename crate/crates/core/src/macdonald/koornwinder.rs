//! Koornwinder's q-difference operator as an eigenfunction oracle.

use std::collections::BTreeMap;
use std::sync::Mutex;

use crate::arith::laurent::{dominant, orbit_sum};
use crate::arith::{Exp, Field, LaurentPoly};
use crate::error::{Error, Result};
use crate::tableaux::Family;

/// The six Koornwinder parameters, kept as `α = (abcd/q)^{1/2}` and the
/// elementary symmetric functions `e₁…e₄` of `(a, b, c, d)`; the individual
/// values are kept when known.
#[derive(Clone, Debug)]
pub struct KoornwinderParams<F> {
    pub q: F,
    pub t: F,
    pub alpha: F,
    pub e: [F; 4],
    pub abcd: Option<[F; 4]>,
}

impl<F: Field> KoornwinderParams<F> {
    pub fn new(a: F, b: F, c: F, d: F, q: F, t: F) -> Result<Self> {
        let prod = a.mul(&b).mul(&c).mul(&d);
        let alpha = prod.div(&q)?.sqrt()?;
        let e1 = F::sum_all(vec![a.clone(), b.clone(), c.clone(), d.clone()]);
        let e2 = F::sum_all(vec![a.mul(&b), a.mul(&c), a.mul(&d), b.mul(&c), b.mul(&d), c.mul(&d)]);
        let e3 = F::sum_all(vec![a.mul(&b).mul(&c), a.mul(&b).mul(&d), a.mul(&c).mul(&d), b.mul(&c).mul(&d)]);
        Ok(KoornwinderParams { q, t, alpha, e: [e1, e2, e3, prod], abcd: Some([a, b, c, d]) })
    }

    /// The `(a, b) = (1, b)` specialization without square roots: the
    /// quartic is `(1 - b y²)(1 - qb y²)` and `α = b`.
    pub fn bc_one(b: F, q: F, t: F) -> Self {
        let e2 = b.mul(&F::one().add(&q)).neg();
        let e4 = q.mul(&b).mul(&b);
        KoornwinderParams { alpha: b, e: [F::zero(), e2, F::zero(), e4], abcd: None, q, t }
    }

    /// Parameters for `P^{(D_n)}` (`b = 1`) or `P^{(C_n)}` (`b = T`).
    pub fn for_family(family: Family, big_t: Option<F>, q: F, t: F) -> Result<Self> {
        match (family, big_t) {
            (Family::D, None) => Ok(Self::bc_one(F::one(), q, t)),
            (Family::C, Some(b)) => Ok(Self::bc_one(b, q, t)),
            (Family::D, Some(_)) => Err(Error::Usage("type D takes no T".into())),
            (Family::C, None) => Err(Error::Usage("type C needs T".into())),
        }
    }

    /// `∏ (1 - a y)` at `y`, as coefficients of `y⁰…y⁴`.
    fn quartic(&self) -> [F; 5] {
        let [e1, e2, e3, e4] = &self.e;
        [F::one(), e1.neg(), e2.clone(), e3.neg(), e4.clone()]
    }
}

/// `(a,b,c,d) = (-b^{1/2}, ab^{1/2}, -q^{1/2}b^{1/2}, q^{1/2}ab^{1/2})`.
pub fn bc_specialize<F: Field>(a: F, b: F, q: F, t: F) -> Result<KoornwinderParams<F>> {
    let s = b.sqrt()?;
    let u = q.sqrt()?;
    KoornwinderParams::new(s.neg(), a.mul(&s), u.mul(&s).neg(), u.mul(&a).mul(&s), q, t)
}

#[derive(Clone, Debug)]
pub struct EigenvalueData<F> {
    pub d_lambda: F,
    /// `s_j = α t^{n-j} q^{λ_j}`.
    pub s: Vec<F>,
}

/// `d_λ = Σ_j ⟨α t^{n-j} q^{λ_j}; α t^{n-j}⟩`.
pub fn eigenvalue_pairs<F: Field>(lambda: &[u32], kp: &KoornwinderParams<F>) -> Result<EigenvalueData<F>> {
    let n = lambda.len() as i64;
    let mut terms = Vec::new();
    let mut s = Vec::new();
    for (j, &lj) in lambda.iter().enumerate() {
        let z = kp.alpha.mul(&kp.t.powi(n - 1 - j as i64)?);
        let y = z.mul(&kp.q.powi(lj as i64)?);
        terms.push(y.add(&y.inv()?).sub(&z).sub(&z.inv()?));
        s.push(y);
    }
    Ok(EigenvalueData { d_lambda: F::sum_all(terms), s })
}

fn bracket<F: Field>(x: &F) -> Result<F> {
    let r = x.sqrt()?;
    Ok(r.sub(&r.inv()?))
}

/// `d_λ = Σ_j ⟨abcd q^{-1} t^{2n-2j} q^{λ_j}⟩⟨q^{λ_j}⟩`, with `⟨x⟩ = x^{1/2} - x^{-1/2}`.
pub fn eigenvalue_bracket<F: Field>(lambda: &[u32], kp: &KoornwinderParams<F>) -> Result<F> {
    let n = lambda.len() as i64;
    let a2 = kp.alpha.mul(&kp.alpha);
    let mut terms = Vec::new();
    for (j, &lj) in lambda.iter().enumerate() {
        let ql = kp.q.powi(lj as i64)?;
        let x = a2.mul(&kp.t.powi(2 * (n - 1 - j as i64))?).mul(&ql);
        terms.push(bracket(&x)?.mul(&bracket(&ql)?));
    }
    Ok(F::sum_all(terms))
}

fn unit(n: usize, i: usize, k: i32) -> Exp {
    let mut e = vec![0; n];
    e[i] = k;
    e
}

fn plus(a: &[i32], b: &[i32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn lex_positive(e: &[i32]) -> bool {
    e.iter().find(|&&k| k != 0).is_some_and(|&k| k > 0)
}

/// `1 - c x^e`.
fn binomial<F: Field>(n: usize, c: &F, e: Exp) -> LaurentPoly<F> {
    LaurentPoly::from_terms(n, [(vec![0; n], F::one()), (e, c.neg())])
}

struct Summand<F: Field> {
    numer: LaurentPoly<F>,
    keys: Vec<(F, Exp)>,
    shift: F,
    var: usize,
}

/// The operator for one parameter set, caching its action on orbit sums.
pub struct Koornwinder<F: Field> {
    kp: KoornwinderParams<F>,
    n: usize,
    cache: Mutex<BTreeMap<Vec<i32>, LaurentPoly<F>>>,
}

impl<F: Field> Koornwinder<F> {
    pub fn new(kp: KoornwinderParams<F>, n: usize) -> Self {
        Koornwinder { kp, n, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn params(&self) -> &KoornwinderParams<F> {
        &self.kp
    }

    /// The `2n` summands as (numerator, canonical denominator binomials).
    fn summands(&self) -> Result<Vec<Summand<F>>> {
        let n = self.n;
        let kp = &self.kp;
        let scale = kp.alpha.mul(&kp.t.powi(n as i64 - 1)?).inv()?;
        let quartic = self.kp.quartic();
        let mut out = Vec::new();
        for i in 0..n {
            for sigma in [1i32, -1] {
                let xi = |k: i32| unit(n, i, sigma * k);
                let mut numer = LaurentPoly::from_terms(
                    n,
                    quartic.iter().enumerate().map(|(k, c)| (xi(k as i32), c.clone())),
                )
                .scale(&scale);
                let mut raw: Vec<(F, Exp)> = vec![(F::one(), xi(2)), (kp.q.clone(), xi(2))];
                for j in (0..n).filter(|&j| j != i) {
                    for s in [1, -1] {
                        let e = plus(&xi(1), &unit(n, j, s));
                        numer = numer.mul(&binomial(n, &kp.t, e.clone()))?;
                        raw.push((F::one(), e));
                    }
                }
                let mut keys = Vec::new();
                for (c, e) in raw {
                    if lex_positive(&e) {
                        keys.push((c, e));
                    } else {
                        // 1/(1 - c x^e) = -c⁻¹x^{-e} / (1 - c⁻¹x^{-e})
                        let ci = c.inv()?;
                        let ne: Exp = e.iter().map(|k| -k).collect();
                        numer = numer.shift(&ne).scale(&ci.neg());
                        keys.push((ci, ne));
                    }
                }
                let shift = if sigma == 1 { kp.q.clone() } else { kp.q.inv()? };
                out.push(Summand { numer, keys, shift, var: i });
            }
        }
        Ok(out)
    }

    /// Direct application to any Laurent polynomial, clearing denominators
    /// by exact division. Fails with `NotLaurent` if they do not clear.
    pub fn apply_direct(&self, p: &LaurentPoly<F>) -> Result<LaurentPoly<F>> {
        if p.rank() != self.n {
            return Err(Error::Usage(format!("rank {} input for a rank {} operator", p.rank(), self.n)));
        }
        let summands = self.summands()?;
        let mut common: Vec<(F, Exp)> = Vec::new();
        for s in &summands {
            for k in &s.keys {
                let need = s.keys.iter().filter(|x| *x == k).count();
                let have = common.iter().filter(|x| *x == k).count();
                for _ in have..need {
                    common.push(k.clone());
                }
            }
        }
        let mut total = LaurentPoly::zero(self.n);
        for s in &summands {
            let delta = p.dilate(s.var, &s.shift)?.sub(p)?;
            if delta.is_zero() {
                continue;
            }
            let mut rest = s.keys.clone();
            let mut factor = s.numer.clone();
            for k in &common {
                if let Some(pos) = rest.iter().position(|x| x == k) {
                    rest.swap_remove(pos);
                } else {
                    factor = factor.mul(&binomial(self.n, &k.0, k.1.clone()))?;
                }
            }
            total = total.add(&factor.mul(&delta)?)?;
        }
        for (c, e) in &common {
            total = total.div_binomial(c, e)?;
        }
        Ok(total)
    }

    /// Application to a hyperoctahedrally symmetric input, one orbit sum at
    /// a time; other inputs go through [`Self::apply_direct`].
    pub fn apply(&self, p: &LaurentPoly<F>) -> Result<LaurentPoly<F>> {
        if !p.is_hyperoctahedral() {
            return self.apply_direct(p);
        }
        let mut orbits: BTreeMap<Vec<i32>, F> = BTreeMap::new();
        for (e, c) in p.terms() {
            let mu = dominant(e);
            orbits.entry(mu).or_insert_with(|| c.clone());
        }
        let mut total = LaurentPoly::zero(self.n);
        for (mu, c) in orbits {
            let cached = self.cache.lock().expect("cache lock").get(&mu).cloned();
            let image = match cached {
                Some(img) => img,
                None => {
                    let img = self.apply_direct(&orbit_sum(self.n, &mu))?;
                    self.cache.lock().expect("cache lock").insert(mu.clone(), img.clone());
                    img
                }
            };
            total = total.add(&image.scale(&c))?;
        }
        Ok(total)
    }
}

/// `D_x p` for the given parameters.
pub fn koornwinder_apply<F: Field>(p: &LaurentPoly<F>, kp: &KoornwinderParams<F>) -> Result<LaurentPoly<F>> {
    Koornwinder::new(kp.clone(), p.rank()).apply(p)
}

/// Monic at `(r, 0, …, 0)`, and every other exponent `e` has
/// `Σ|e_i| ≤ r` with `r - Σ|e_i|` even.
pub fn triangularity_check<F: Field>(p: &LaurentPoly<F>, r: u32) -> bool {
    let n = p.rank();
    let mut top = vec![0; n];
    if n > 0 {
        top[0] = r as i32;
    }
    if !p.coeff(&top).is_one() {
        return false;
    }
    p.terms().all(|(e, _)| {
        let d: i32 = e.iter().map(|k| k.abs()).sum();
        d <= r as i32 && (r as i32 - d) % 2 == 0
    })
}

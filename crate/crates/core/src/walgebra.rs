//! Correlation functions of the deformed W algebras of types C and D, from
//! the closed γ-product form, and their principal specialization.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::arith::{Exp, Field, LaurentPoly};
use crate::error::{Error, Result};
use crate::macdonald::{tableau_poly_c_special, tableau_poly_d, Base};
use crate::tableaux::{compositions, weight_of, Alphabet, Family};

/// Default cap on the number of words in the full sum.
pub const DEFAULT_BUDGET: u128 = 50_000;

/// `(numerator, denominator)` of a rational value, kept apart so that
/// vanishing terms can be dropped before any division.
type Frac<F> = (F, F);

fn gamma_frac<F: Field>(z: &F, q: &F, t: &F) -> Result<Frac<F>> {
    let one = F::one();
    let t2 = t.mul(t);
    let q2 = q.mul(q);
    let num = one.sub(&t2.mul(z)).mul(&one.sub(&z.div(&q2)?));
    let den = one.sub(z).mul(&one.sub(&z.mul(&t2).div(&q2)?));
    Ok((num, den))
}

/// `γ(z) = (1 - t²z)(1 - z/q²) / ((1 - z)(1 - zt²/q²))`.
pub fn gamma_base<F: Field>(z: &F, q: &F, t: &F) -> Result<F> {
    let (num, den) = gamma_frac(z, q, t)?;
    if den.is_zero() {
        return Err(Error::Pole(format!("γ has a pole at z = {}", z.to_text())));
    }
    num.div(&den)
}

/// The second factor `γ(s·w/z)` (`i ≺ ī`) or `γ(s'·z/w)` (`ī ≻ i`) of the
/// conjugate-pair entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TableReading {
    /// `s' = s`, with `s = q^{2i-2l}t^{-2i+2l+2}` (C) or
    /// `q^{2i-2l+2}t^{-2i+2l-2}` (D). Makes `F` symmetric in the `z`'s.
    #[default]
    Corrected,
    /// `s' = 1/s`, with `s = q^{2i-2l-2}t^{-2i+2l}` (C) or
    /// `q^{2i-2l+2}t^{-2i+2l-2}` (D).
    AsPrinted,
}

/// The structure functions `γ_{ij}` of one family and rank, with base
/// parameters `q`, `t`.
#[derive(Clone, Debug)]
pub struct GammaTable<F> {
    pub family: Family,
    pub l: usize,
    pub q: F,
    pub t: F,
    pub reading: TableReading,
}

impl<F: Field> GammaTable<F> {
    pub fn new(family: Family, l: usize, q: F, t: F) -> Self {
        GammaTable { family, l, q, t, reading: TableReading::default() }
    }

    pub fn with_reading(mut self, reading: TableReading) -> Self {
        self.reading = reading;
        self
    }

    fn alphabet(&self) -> Alphabet {
        Alphabet::new(self.family, self.l)
    }

    fn tq(&self, a: i64, b: i64) -> Result<F> {
        Ok(self.t.powi(a)?.mul(&self.q.powi(b)?))
    }

    /// `γ_{ij}(z_i, z_j)` as factors `(num, den)`, letters given by position.
    fn pair_frac(&self, i: usize, j: usize, zi: &F, zj: &F) -> Result<Vec<Frac<F>>> {
        if i == j {
            return Ok(Vec::new());
        }
        let alpha = self.alphabet();
        let (a, b) = (alpha.letter(i), alpha.letter(j));
        let g = |z: &F| gamma_frac(z, &self.q, &self.t);
        let fwd = zj.div(zi)?;
        let bwd = zi.div(zj)?;
        if a.conjugate() != b {
            let z = if alpha.precedes(a, b) { fwd } else { bwd };
            return Ok(vec![g(&z)?]);
        }
        let (k, l) = (a.index() as i64, self.l as i64);
        // the unbarred-first shift q^a t^b
        let (a, b) = match (self.family, self.reading) {
            (Family::C, TableReading::Corrected) => (2 * k - 2 * l, -2 * k + 2 * l + 2),
            (Family::C, TableReading::AsPrinted) => (2 * k - 2 * l - 2, -2 * k + 2 * l),
            (Family::D, _) => (2 * k - 2 * l + 2, -2 * k + 2 * l - 2),
        };
        let (shift, z) = match (i < j, self.reading) {
            (true, _) => (self.tq(b, a)?, fwd),
            (false, TableReading::Corrected) => (self.tq(b, a)?, bwd),
            (false, TableReading::AsPrinted) => (self.tq(-b, -a)?, bwd),
        };
        Ok(vec![g(&z)?, g(&shift.mul(&z))?])
    }
}

/// `γ_{ij}(z_i, z_j)` for letters at positions `i`, `j` of `1 … l, l̄ … 1̄`.
pub fn gamma_pair<F: Field>(gt: &GammaTable<F>, i: usize, j: usize, zi: &F, zj: &F) -> Result<F> {
    let mut acc = F::one();
    for (num, den) in gt.pair_frac(i, j, zi, zj)? {
        if den.is_zero() {
            return Err(Error::Pole("γ_ij has a pole".into()));
        }
        acc = acc.mul(&num.div(&den)?);
    }
    Ok(acc)
}

#[derive(Clone, Debug)]
pub struct CorrelationSpec<F> {
    pub gamma: GammaTable<F>,
    pub z: Vec<F>,
}

/// Options for the principal specialization.
#[derive(Clone, Copy, Debug)]
pub struct PhiConfig {
    pub words: Words,
    pub budget: u128,
    pub reading: TableReading,
}

impl Default for PhiConfig {
    fn default() -> Self {
        PhiConfig { words: Words::All, budget: DEFAULT_BUDGET, reading: TableReading::default() }
    }
}

impl PhiConfig {
    pub fn words(self, words: Words) -> Self {
        PhiConfig { words, ..self }
    }
}

/// Which words to sum over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Words {
    /// All `(2l)^r` words.
    All,
    /// Weakly increasing words only.
    Increasing,
}

fn word_weight(l: usize, word: &[usize]) -> Exp {
    let mut theta = vec![0u32; 2 * l];
    for &p in word {
        theta[p] += 1;
    }
    weight_of(&theta)
}

/// The contribution of one word, or `None` if some γ factor vanishes.
fn word_term<F: Field>(spec: &CorrelationSpec<F>, word: &[usize]) -> Result<Option<(Exp, F)>> {
    let mut nums = Vec::new();
    let mut dens = Vec::new();
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            for (num, den) in spec.gamma.pair_frac(word[a], word[b], &spec.z[a], &spec.z[b])? {
                if num.is_zero() {
                    return Ok(None);
                }
                nums.push(num);
                dens.push(den);
            }
        }
    }
    let den = F::product(&dens);
    if den.is_zero() {
        return Err(Error::Pole(format!("word {word:?} meets a γ pole")));
    }
    Ok(Some((word_weight(spec.gamma.l, word), F::product(&nums).div(&den)?)))
}

fn words(l: usize, r: usize, which: Words, budget: u128) -> Result<Vec<Vec<usize>>> {
    let m = 2 * l;
    match which {
        Words::All => {
            let needed = (m as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
            if needed > budget {
                return Err(Error::Budget { needed, budget });
            }
            let mut out = Vec::with_capacity(needed as usize);
            for mut code in 0..needed {
                let mut w = vec![0; r];
                for slot in w.iter_mut().rev() {
                    *slot = (code % m as u128) as usize;
                    code /= m as u128;
                }
                out.push(w);
            }
            Ok(out)
        }
        Words::Increasing => Ok(compositions(r as u32, m)
            .into_iter()
            .map(|theta| theta.iter().enumerate().flat_map(|(p, &k)| std::iter::repeat_n(p, k as usize)).collect())
            .collect()),
    }
}

fn collect_terms<F: Field>(l: usize, terms: Vec<(Exp, F)>) -> LaurentPoly<F> {
    let mut groups: BTreeMap<Exp, Vec<F>> = BTreeMap::new();
    for (e, c) in terms {
        groups.entry(e).or_default().push(c);
    }
    LaurentPoly::from_terms(l, groups.into_iter().map(|(e, cs)| (e, F::sum_all(cs))))
}

fn nonvanishing<F: Field>(spec: &CorrelationSpec<F>, which: Words, budget: u128) -> Result<Vec<(Exp, F)>> {
    let ws = words(spec.gamma.l, spec.z.len(), which, budget)?;
    let terms: Vec<Option<(Exp, F)>> = ws.par_iter().map(|w| word_term(spec, w)).collect::<Result<_>>()?;
    Ok(terms.into_iter().flatten().collect())
}

/// `Σ_ε x_{ε₁}⋯x_{ε_r} ∏_{i<j} γ_{εᵢεⱼ}(zᵢ, zⱼ)` over all words.
pub fn correlation_f<F: Field>(spec: &CorrelationSpec<F>, budget: u128) -> Result<LaurentPoly<F>> {
    Ok(collect_terms(spec.gamma.l, nonvanishing(spec, Words::All, budget)?))
}

/// The principal specialization: `z = (q^{r-1}, …, 1)` and base
/// parameters `(q^{1/2}, q^{1/2}t^{-1/2})`.
pub fn principal_spec<F: Field>(
    base: &Base<F>,
    family: Family,
    l: usize,
    r: u32,
    reading: TableReading,
) -> Result<CorrelationSpec<F>> {
    let qh = base.q.sqrt()?;
    let th = qh.div(&base.t.sqrt()?)?;
    let z = (0..r).map(|i| base.q.powi((r - 1 - i) as i64)).collect::<Result<_>>()?;
    Ok(CorrelationSpec { gamma: GammaTable::new(family, l, qh, th).with_reading(reading), z })
}

/// `Φ_r`.
pub fn phi_principal<F: Field>(base: &Base<F>, family: Family, l: usize, r: u32, cfg: PhiConfig) -> Result<LaurentPoly<F>> {
    let spec = principal_spec(base, family, l, r, cfg.reading)?;
    Ok(collect_terms(l, nonvanishing(&spec, cfg.words, cfg.budget)?))
}

/// The words whose principal-specialized term survives, as positions in
/// `1 … l, l̄ … 1̄`.
pub fn phi_support<F: Field>(base: &Base<F>, family: Family, l: usize, r: u32, cfg: PhiConfig) -> Result<BTreeSet<Vec<usize>>> {
    let spec = principal_spec(base, family, l, r, cfg.reading)?;
    let ws = words(l, r as usize, cfg.words, cfg.budget)?;
    let mut out = BTreeSet::new();
    for w in ws {
        if word_term(&spec, &w)?.is_some() {
            out.insert(w);
        }
    }
    Ok(out)
}

/// `Φ_r - P_(r)`, with `P` of type `C_l` at `T = t²/q` or of type `D_l`.
pub fn soukan_residual<F: Field>(base: &Base<F>, family: Family, l: usize, r: u32, cfg: PhiConfig) -> Result<LaurentPoly<F>> {
    let phi = phi_principal(base, family, l, r, cfg)?;
    let p = match family {
        Family::C => tableau_poly_c_special(base, l, r)?,
        Family::D => tableau_poly_d(base, l, r)?,
    };
    phi.sub(&p)
}

//! Text and LaTeX forms of polynomials and scalars, plus the parsers that
//! invert the text form.
//!
//! Grammar: terms in canonical order joined by ` + ` / ` - `; a term is an
//! optional `num/den` coefficient and generator powers joined by `*`, where a
//! generator power is `q`, `q^3` or `q^{3/2}` (likewise `t`, `T`). A scalar
//! with a nontrivial denominator prints as `(N)/(D)`.

use num_traits::{One, Signed};

use super::poly::{Mono, SparsePoly};
use super::rational::{parse_rat, rat_text};
use super::scalar::Scalar;
use super::BigRat;
use crate::error::{Error, Result};

const GENS: [&str; 3] = ["q", "t", "T"];

fn half_power(name: &str, k: u32, latex: bool) -> String {
    if k == 2 {
        name.to_string()
    } else if k.is_multiple_of(2) {
        if latex {
            format!("{name}^{{{}}}", k / 2)
        } else {
            format!("{name}^{}", k / 2)
        }
    } else {
        format!("{name}^{{{k}/2}}")
    }
}

fn mono_text(m: Mono, latex: bool) -> String {
    let e = m.exps();
    let parts: Vec<String> = (0..3).filter(|&i| e[i] > 0).map(|i| half_power(GENS[i], e[i], latex)).collect();
    parts.join(if latex { " " } else { "*" })
}

fn join_terms(terms: Vec<String>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    out
}

pub fn poly_to_text(p: &SparsePoly) -> String {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            if m.is_one() {
                rat_text(c)
            } else if c.is_one() {
                mono_text(*m, false)
            } else if (-c).is_one() {
                format!("-{}", mono_text(*m, false))
            } else {
                format!("{}*{}", rat_text(c), mono_text(*m, false))
            }
        })
        .collect();
    join_terms(terms)
}

fn rat_latex(c: &BigRat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else if c.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -c.numer(), c.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

pub fn poly_to_latex(p: &SparsePoly) -> String {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            if m.is_one() {
                rat_latex(c)
            } else if c.is_one() {
                mono_text(*m, true)
            } else if (-c).is_one() {
                format!("-{}", mono_text(*m, true))
            } else {
                format!("{} {}", rat_latex(c), mono_text(*m, true))
            }
        })
        .collect();
    join_terms(terms)
}

fn parse_gen(tok: &str) -> Result<(usize, u32)> {
    let bad = || Error::Parse(format!("bad generator power `{tok}`"));
    let (name, pow) = match tok.split_once('^') {
        Some((n, p)) => (n, Some(p)),
        None => (tok, None),
    };
    let idx = GENS.iter().position(|g| *g == name).ok_or_else(bad)?;
    let half = match pow {
        None => 2,
        Some(p) => {
            if let Some(inner) = p.strip_prefix('{').and_then(|s| s.strip_suffix('}')) {
                match inner.split_once('/') {
                    Some((a, "2")) => a.parse::<u32>().map_err(|_| bad())?,
                    Some(_) => return Err(bad()),
                    None => 2 * inner.parse::<u32>().map_err(|_| bad())?,
                }
            } else {
                2 * p.parse::<u32>().map_err(|_| bad())?
            }
        }
    };
    Ok((idx, half))
}

fn parse_term(s: &str) -> Result<(Mono, BigRat)> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let mut coef = BigRat::one();
    let mut e = [0u32; 3];
    for (i, tok) in body.split('*').enumerate() {
        let tok = tok.trim();
        let numeric = tok.starts_with(|c: char| c.is_ascii_digit());
        if i == 0 && numeric {
            coef = parse_rat(tok)?;
        } else {
            let (k, h) = parse_gen(tok)?;
            e[k] += h;
        }
    }
    if neg {
        coef = -coef;
    }
    Ok((Mono::new(e), coef))
}

pub fn parse_poly(s: &str) -> Result<SparsePoly> {
    let s = s.trim();
    if s == "0" {
        return Ok(SparsePoly::zero());
    }
    let normalized = s.replace(" - ", " + -");
    let terms = normalized.split(" + ").map(parse_term).collect::<Result<Vec<_>>>()?;
    Ok(SparsePoly::from_terms(terms))
}

pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    if let Some(body) = s.strip_prefix('(') {
        let (n, d) = body
            .split_once(")/(")
            .ok_or_else(|| Error::Parse(format!("bad scalar `{s}`")))?;
        let d = d.strip_suffix(')').ok_or_else(|| Error::Parse(format!("bad scalar `{s}`")))?;
        let n = Scalar::from_poly(parse_poly(n)?);
        let d = Scalar::from_poly(parse_poly(d)?);
        return n.div(&d);
    }
    Ok(Scalar::from_poly(parse_poly(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn prints_half_powers() {
        let p = SparsePoly::from_terms([
            (Mono::new([3, 0, 0]), rat(-3, 2)),
            (Mono::new([0, 2, 0]), rat(1, 1)),
            (Mono::new([0, 0, 4]), rat(-1, 1)),
            (Mono::ONE, rat(7, 1)),
        ]);
        let s = poly_to_text(&p);
        assert_eq!(s, "-T^2 - 3/2*q^{3/2} + t + 7");
        assert_eq!(parse_poly(&s).unwrap(), p);
    }

    #[test]
    fn scalar_round_trip() {
        let t = Scalar::t();
        let x = Scalar::one().sub(&t).div(&Scalar::one().sub(&Scalar::q().mul(&t))).unwrap();
        let s = x.to_text();
        assert_eq!(s, "(t - 1)/(q*t - 1)");
        assert_eq!(parse_scalar(&s).unwrap(), x);
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(poly_to_text(&SparsePoly::zero()), "0");
        assert!(parse_scalar("0").unwrap().is_zero());
    }
}

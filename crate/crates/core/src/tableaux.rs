//! One-row Kashiwara–Nakashima tableaux of types C and D, stored as letter
//! occupancy vectors.
//!
//! Letters are indexed by position in the alphabet `1, 2, …, n, n̄, …, 1̄`:
//! letter `l` sits at position `l - 1` and `l̄` at position `2n - l`.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    C,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::C => "C",
            Family::D => "D",
        })
    }
}

impl std::str::FromStr for Family {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            _ => Err(crate::Error::Usage(format!("unknown family `{s}` (expected C or D)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    pub family: Family,
    pub n: usize,
}

/// A letter of the alphabet: `Plain(l)` is `l`, `Bar(l)` is `l̄`, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Plain(usize),
    Bar(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::Plain(l) | Letter::Bar(l) => l,
        }
    }

    pub fn conjugate(self) -> Letter {
        match self {
            Letter::Plain(l) => Letter::Bar(l),
            Letter::Bar(l) => Letter::Plain(l),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Plain(l) => write!(f, "{l}"),
            Letter::Bar(l) => write!(f, "{l}bar"),
        }
    }
}

impl Alphabet {
    pub fn new(family: Family, n: usize) -> Self {
        assert!(n >= 1, "rank must be at least 1");
        Alphabet { family, n }
    }

    pub fn size(&self) -> usize {
        2 * self.n
    }

    pub fn letter(&self, pos: usize) -> Letter {
        if pos < self.n {
            Letter::Plain(pos + 1)
        } else {
            Letter::Bar(2 * self.n - pos)
        }
    }

    pub fn position(&self, l: Letter) -> usize {
        match l {
            Letter::Plain(k) => k - 1,
            Letter::Bar(k) => 2 * self.n - k,
        }
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.size()).map(|p| self.letter(p)).collect()
    }

    /// Strict order `a ≺ b`. In type D the letters n and n̄ are incomparable.
    pub fn precedes(&self, a: Letter, b: Letter) -> bool {
        let (pa, pb) = (self.position(a), self.position(b));
        if self.family == Family::D && pa.min(pb) == self.n - 1 && pa.max(pb) == self.n {
            return false;
        }
        pa < pb
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneRowTableau {
    pub alphabet: Alphabet,
    pub theta: Vec<u32>,
}

impl OneRowTableau {
    pub fn new(alphabet: Alphabet, theta: Vec<u32>) -> Self {
        assert_eq!(theta.len(), alphabet.size());
        OneRowTableau { alphabet, theta }
    }

    pub fn size(&self) -> u32 {
        self.theta.iter().sum()
    }

    pub fn weight(&self) -> Vec<i32> {
        weight_of(&self.theta)
    }

    pub fn is_valid(&self, r: u32) -> bool {
        let n = self.alphabet.n;
        self.theta.len() == 2 * n
            && self.size() == r
            && !(self.alphabet.family == Family::D && self.theta[n - 1] > 0 && self.theta[n] > 0)
    }

    /// The weakly increasing filling as a word.
    pub fn word(&self) -> Vec<Letter> {
        self.theta
            .iter()
            .enumerate()
            .flat_map(|(p, k)| std::iter::repeat_n(self.alphabet.letter(p), *k as usize))
            .collect()
    }
}

pub fn weight_of(theta: &[u32]) -> Vec<i32> {
    let n = theta.len() / 2;
    (0..n).map(|i| theta[i] as i32 - theta[2 * n - 1 - i] as i32).collect()
}

/// All weak compositions of `r` into `parts` parts, descending lex order.
pub fn compositions(r: u32, parts: usize) -> Vec<Vec<u32>> {
    fn go(r: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            cur.push(r);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for k in (0..=r).rev() {
            cur.push(k);
            go(r - k, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if r == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(r, parts, &mut Vec::with_capacity(parts), &mut out);
    out
}

/// Every tableau of shape (r), occupancy vectors in descending lex order.
pub fn enumerate(alpha: Alphabet, r: u32) -> Vec<OneRowTableau> {
    compositions(r, alpha.size())
        .into_iter()
        .map(|theta| OneRowTableau::new(alpha, theta))
        .filter(|t| t.is_valid(r))
        .collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Closed-form tableau count: weak compositions, minus in type D those with
/// both θₙ ≥ 1 and θ_n̄ ≥ 1.
pub fn count_closed_form(family: Family, n: usize, r: u32) -> u64 {
    let m = 2 * n as u64;
    let all = binomial(r as u64 + m - 1, m - 1);
    match family {
        Family::C => all,
        Family::D if r >= 2 => all - binomial(r as u64 - 2 + m - 1, m - 1),
        Family::D => all,
    }
}

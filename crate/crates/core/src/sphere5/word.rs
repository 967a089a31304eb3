//! Words in the half-twists `h1..h4` and the reflection `r`.
//!
//! Text form: `h1`..`h4` for half-twists, `H1`..`H4` for their inverses,
//! `r` for the reflection; letters are concatenated, e.g. `h1H2r`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("malformed word {0:?}")]
pub struct ParseWordError(pub String);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// Half-twist `h_i` (`i` in `1..=4`), inverted when `inv`.
    H { i: u8, inv: bool },
    R,
}

impl Letter {
    pub const ALL: [Letter; 9] = [
        Letter::H { i: 1, inv: false },
        Letter::H { i: 1, inv: true },
        Letter::H { i: 2, inv: false },
        Letter::H { i: 2, inv: true },
        Letter::H { i: 3, inv: false },
        Letter::H { i: 3, inv: true },
        Letter::H { i: 4, inv: false },
        Letter::H { i: 4, inv: true },
        Letter::R,
    ];

    pub fn h(i: u8) -> Self {
        Letter::H { i, inv: false }
    }

    pub fn hinv(i: u8) -> Self {
        Letter::H { i, inv: true }
    }

    pub fn inverse(self) -> Self {
        match self {
            Letter::H { i, inv } => Letter::H { i, inv: !inv },
            Letter::R => Letter::R,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::H { i, inv: false } => write!(f, "h{i}"),
            Letter::H { i, inv: true } => write!(f, "H{i}"),
            Letter::R => f.write_str("r"),
        }
    }
}

/// A freely reduced word; `w = g1 g2 ... gn` acts as `g1(g2(...gn(c)))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends on the right (applied before the existing letters).
    pub fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    /// `l * self`, applied after the existing letters.
    pub fn prepend(&self, l: Letter) -> Self {
        let mut w = Word::empty();
        w.push(l);
        for &x in &self.0 {
            w.push(x);
        }
        w
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut w = self.clone();
        for &x in &other.0 {
            w.push(x);
        }
        w
    }

    pub fn inverse(&self) -> Self {
        Self(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Uniform random freely reduced word of exactly `len` letters.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Self {
        let mut w = Word::empty();
        while w.len() < len {
            let l = Letter::ALL[rng.gen_range(0..Letter::ALL.len())];
            if w.0.last() != Some(&l.inverse()) {
                w.0.push(l);
            }
        }
        w
    }

    /// All freely reduced words of length at most `bound`, shortlex order.
    pub fn all_up_to(bound: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &layer {
                for l in Letter::ALL {
                    if w.0.last() == Some(&l.inverse()) {
                        continue;
                    }
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        let mut w = Word::empty();
        for l in v {
            w.push(l);
        }
        w
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseWordError(s.to_string());
        let mut letters = Vec::new();
        let mut chars = s.chars().peekable();
        while let Some(c) = chars.next() {
            let l = match c {
                'r' => Letter::R,
                'h' | 'H' => {
                    let d = chars.next().and_then(|d| d.to_digit(10)).ok_or_else(err)?;
                    if !(1..=4).contains(&d) {
                        return Err(err());
                    }
                    Letter::H { i: d as u8, inv: c == 'H' }
                }
                _ => return Err(err()),
            };
            letters.push(l);
        }
        Ok(Word::from(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_reduces() {
        let w: Word = "h1H1h2rr".parse().unwrap();
        assert_eq!(w.to_string(), "h2");
        assert!("h5".parse::<Word>().is_err());
        assert!("x".parse::<Word>().is_err());
    }

    #[test]
    fn word_counts() {
        // 9 letters, each with exactly one inverse among them.
        assert_eq!(Word::all_up_to(2).len(), 1 + 9 + 9 * 8);
    }

    #[test]
    fn inverse_cancels() {
        let w: Word = "h1h2rh3".parse().unwrap();
        assert!(w.concat(&w.inverse()).is_empty());
    }
}

//! Finite samples of the normal closure of `A^K` in `GL(2, Z)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{FareyError, IntMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosureError {
    #[error("base matrix {0} is not hyperbolic (|trace| <= 2)")]
    NotHyperbolic(IntMatrix),
    #[error("power must be positive")]
    ZeroPower,
    #[error("product depth must be positive")]
    ZeroDepth,
    #[error(transparent)]
    Farey(#[from] FareyError),
}

/// Conjugator alphabet: `u = [[1,1],[0,1]]`, `l = [[1,0],[1,1]]`, their
/// inverses `U`, `L`, and the orientation-reversing involution `j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FareyLetter {
    U,
    UInv,
    L,
    LInv,
    J,
}

impl FareyLetter {
    pub const ALL: [FareyLetter; 5] = [FareyLetter::U, FareyLetter::UInv, FareyLetter::L, FareyLetter::LInv, FareyLetter::J];

    pub fn matrix(self) -> IntMatrix {
        match self {
            FareyLetter::U => IntMatrix { a: 1, b: 1, c: 0, d: 1 },
            FareyLetter::UInv => IntMatrix { a: 1, b: -1, c: 0, d: 1 },
            FareyLetter::L => IntMatrix { a: 1, b: 0, c: 1, d: 1 },
            FareyLetter::LInv => IntMatrix { a: 1, b: 0, c: -1, d: 1 },
            FareyLetter::J => IntMatrix { a: 0, b: 1, c: 1, d: 0 },
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            FareyLetter::U => FareyLetter::UInv,
            FareyLetter::UInv => FareyLetter::U,
            FareyLetter::L => FareyLetter::LInv,
            FareyLetter::LInv => FareyLetter::L,
            FareyLetter::J => FareyLetter::J,
        }
    }

    fn symbol(self) -> char {
        match self {
            FareyLetter::U => 'u',
            FareyLetter::UInv => 'U',
            FareyLetter::L => 'l',
            FareyLetter::LInv => 'L',
            FareyLetter::J => 'j',
        }
    }
}

/// Freely reduced word in the conjugator alphabet.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyWord(pub Vec<FareyLetter>);

impl FareyWord {
    pub fn matrix(&self) -> IntMatrix {
        self.0.iter().fold(IntMatrix::IDENTITY, |m, l| m.mul(&l.matrix()).expect("short words fit"))
    }

    pub fn inverse(&self) -> Self {
        FareyWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// All reduced words of length at most `n`, shortlex.
    pub fn all_up_to(n: usize) -> Vec<FareyWord> {
        let mut out = vec![FareyWord::default()];
        let mut layer = vec![FareyWord::default()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &layer {
                for l in FareyLetter::ALL {
                    if w.0.last() == Some(&l.inverse()) {
                        continue;
                    }
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(FareyWord(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl fmt::Display for FareyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "{}", l.symbol())?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureSpec {
    pub base: IntMatrix,
    pub power: u32,
    pub conjugator_length: usize,
    pub product_depth: usize,
}

/// One sampled element: a defining word (`a` is the base, `A` its inverse)
/// and its matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureElement {
    pub word: String,
    pub matrix: IntMatrix,
}

/// Products of at most `product_depth` conjugates `w A^{+-K} w^-1`, with `w`
/// of length at most `conjugator_length`; deduplicated up to sign (the
/// scalar `-I` acts trivially), scalars excluded. Sorted by (word length,
/// word, matrix); each class keeps its shortest word.
pub fn sample_closure(spec: &ClosureSpec) -> Result<Vec<ClosureElement>, ClosureError> {
    if !spec.base.is_hyperbolic() {
        return Err(ClosureError::NotHyperbolic(spec.base));
    }
    if spec.power == 0 {
        return Err(ClosureError::ZeroPower);
    }
    if spec.product_depth == 0 {
        return Err(ClosureError::ZeroDepth);
    }
    let k = spec.power as i64;
    let pos = spec.base.pow(k)?;
    let neg = spec.base.pow(-k)?;
    let mut conjugates: BTreeMap<IntMatrix, (String, IntMatrix)> = BTreeMap::new();
    for w in FareyWord::all_up_to(spec.conjugator_length) {
        let (wm, wi) = (w.matrix(), w.inverse().matrix());
        for (sym, base) in [('a', pos), ('A', neg)] {
            let m = wm.mul(&base)?.mul(&wi)?;
            let word = format!("{w}{sym}^{k}{}", w.inverse());
            insert_shortest(&mut conjugates, m, word);
        }
    }
    let gens: Vec<(String, IntMatrix)> = conjugates.values().cloned().collect();
    let mut all = conjugates.clone();
    let mut layer = gens.clone();
    for _ in 1..spec.product_depth {
        let mut next = Vec::new();
        for (w1, m1) in &layer {
            for (w2, m2) in &gens {
                let m = m1.mul(m2)?;
                let word = format!("{w1}.{w2}");
                next.push((word.clone(), m));
                insert_shortest(&mut all, m, word);
            }
        }
        layer = next;
    }
    let mut out: Vec<ClosureElement> = all
        .into_values()
        .filter(|(_, m)| !m.is_scalar())
        .map(|(word, matrix)| ClosureElement { word, matrix })
        .collect();
    out.sort_by(|x, y| (x.word.len(), &x.word, x.matrix).cmp(&(y.word.len(), &y.word, y.matrix)));
    Ok(out)
}

fn insert_shortest(map: &mut BTreeMap<IntMatrix, (String, IntMatrix)>, m: IntMatrix, word: String) {
    let key = m.projective();
    match map.get(&key) {
        Some((w, _)) if (w.len(), w.as_str()) <= (word.len(), word.as_str()) => {}
        _ => {
            map.insert(key, (word, m));
        }
    }
}

//! The Farey graph with the action of `GL(2, Z)`.

mod closure;
mod distance;
mod window;

pub use closure::{sample_closure, ClosureElement, ClosureError, ClosureSpec, FareyLetter, FareyWord};
pub use distance::{bfs_distance, farey_distance, farey_distance_from_infinity};
pub use window::{build_window, window_displacement, Displacement, FareyWindow, INSTANCE};

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FareyError {
    #[error("malformed slope {0:?}")]
    ParseSlope(String),
    #[error("malformed matrix {0:?}")]
    ParseMatrix(String),
    #[error("0/0 is not a slope")]
    ZeroSlope,
    #[error("determinant {0} is not +-1")]
    Determinant(i128),
    #[error("integer overflow")]
    Overflow,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended gcd: `(g, x, y)` with `a x + b y = g >= 0`.
pub(crate) fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1, mut s0, mut s1, mut t0, mut t1) = (a, b, 1i128, 0i128, 0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// A reduced fraction `p/q` with `q >= 0`; infinity is `1/0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    pub const INFINITY: Slope = Slope { p: 1, q: 0 };

    pub fn new(p: i64, q: i64) -> Result<Self, FareyError> {
        Self::from_wide(p as i128, q as i128)
    }

    pub(crate) fn from_wide(p: i128, q: i128) -> Result<Self, FareyError> {
        if p == 0 && q == 0 {
            return Err(FareyError::ZeroSlope);
        }
        let g = gcd(p, q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope {
            p: i64::try_from(p).map_err(|_| FareyError::Overflow)?,
            q: i64::try_from(q).map_err(|_| FareyError::Overflow)?,
        })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn is_infinity(self) -> bool {
        self.q == 0
    }

    /// `max(|p|, q)`.
    pub fn height(self) -> i64 {
        self.p.abs().max(self.q)
    }
}

/// Numerical order with infinity last.
impl Ord for Slope {
    fn cmp(&self, o: &Self) -> Ordering {
        match (self.q == 0, o.q == 0) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (self.p as i128 * o.q as i128).cmp(&(o.p as i128 * self.q as i128)),
        }
    }
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl FromStr for Slope {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FareyError::ParseSlope(s.to_string());
        let (p, q) = match s.trim().split_once('/') {
            Some((p, q)) => (p.trim().parse::<i64>().map_err(|_| bad())?, q.trim().parse::<i64>().map_err(|_| bad())?),
            None => (s.trim().parse::<i64>().map_err(|_| bad())?, 1),
        };
        Slope::new(p, q).map_err(|_| bad())
    }
}

impl Serialize for Slope {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

pub fn adjacent(s: Slope, t: Slope) -> bool {
    (s.p as i128 * t.q as i128 - s.q as i128 * t.p as i128).abs() == 1
}

/// Row-major `[[a, b], [c, d]]` with determinant `+-1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct IntMatrix {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl IntMatrix {
    pub const IDENTITY: IntMatrix = IntMatrix { a: 1, b: 0, c: 0, d: 1 };

    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, FareyError> {
        let m = IntMatrix { a, b, c, d };
        let det = m.det();
        if det.abs() != 1 {
            return Err(FareyError::Determinant(det));
        }
        Ok(m)
    }

    fn from_wide(a: i128, b: i128, c: i128, d: i128) -> Result<Self, FareyError> {
        let n = |x: i128| i64::try_from(x).map_err(|_| FareyError::Overflow);
        Ok(IntMatrix { a: n(a)?, b: n(b)?, c: n(c)?, d: n(d)? })
    }

    pub fn det(&self) -> i128 {
        self.a as i128 * self.d as i128 - self.b as i128 * self.c as i128
    }

    pub fn trace(&self) -> i128 {
        self.a as i128 + self.d as i128
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.trace().abs() > 2
    }

    pub fn mul(&self, o: &IntMatrix) -> Result<IntMatrix, FareyError> {
        let (a, b, c, d) = (self.a as i128, self.b as i128, self.c as i128, self.d as i128);
        let (e, f, g, h) = (o.a as i128, o.b as i128, o.c as i128, o.d as i128);
        IntMatrix::from_wide(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
    }

    pub fn inverse(&self) -> IntMatrix {
        // det = +-1, so the adjugate divided by det stays integral.
        let s = self.det() as i64;
        IntMatrix { a: s * self.d, b: -s * self.b, c: -s * self.c, d: s * self.a }
    }

    pub fn pow(&self, n: i64) -> Result<IntMatrix, FareyError> {
        let base = if n < 0 { self.inverse() } else { *self };
        let mut acc = IntMatrix::IDENTITY;
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    /// Sign-normalised representative of `{m, -m}` (first nonzero entry positive).
    pub fn projective(&self) -> IntMatrix {
        let first = [self.a, self.b, self.c, self.d].into_iter().find(|&x| x != 0).unwrap_or(1);
        if first < 0 {
            IntMatrix { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
        } else {
            *self
        }
    }

    /// Acts trivially on slopes.
    pub fn is_scalar(&self) -> bool {
        self.b == 0 && self.c == 0 && self.a == self.d
    }

    pub fn apply(&self, s: Slope) -> Slope {
        self.try_apply(s).expect("slope image fits in i64")
    }

    pub fn try_apply(&self, s: Slope) -> Result<Slope, FareyError> {
        let (p, q) = (s.p as i128, s.q as i128);
        Slope::from_wide(self.a as i128 * p + self.b as i128 * q, self.c as i128 * p + self.d as i128 * q)
    }

    pub fn entries(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for IntMatrix {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse::<i64>()).collect();
        match parts.as_deref() {
            Ok([a, b, c, d]) => IntMatrix::new(*a, *b, *c, *d),
            _ => Err(FareyError::ParseMatrix(s.to_string())),
        }
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.entries().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b, c, e] = <[i64; 4]>::deserialize(d)?;
        IntMatrix::new(a, b, c, e).map_err(serde::de::Error::custom)
    }
}

/// All slopes of height at most `h`, sorted.
pub fn slopes_up_to(h: i64) -> Vec<Slope> {
    let mut out = vec![Slope::INFINITY];
    for q in 1..=h {
        for p in -h..=h {
            if gcd(p as i128, q as i128) == 1 {
                out.push(Slope { p, q });
            }
        }
    }
    out.sort();
    out
}

/// Neighbours of `s` of height at most `h`, sorted.
pub fn neighbors_within(s: Slope, h: i64) -> Vec<Slope> {
    let mut out = Vec::new();
    if s.is_infinity() {
        out.extend((-h..=h).map(|n| Slope { p: n, q: 1 }));
        return out;
    }
    let (p, q) = (s.p as i128, s.q as i128);
    // p u - q r = 1 has solutions (r, u) = (r0 + k p, u0 + k q).
    let (_, x, y) = ext_gcd(p, -q);
    let (u0, r0) = (x, y);
    let h = h as i128;
    let lo = (-h - u0).div_euclid(q) - 1;
    let hi = (h - u0).div_euclid(q) + 1;
    for k in lo..=hi {
        let (r, u) = (r0 + k * p, u0 + k * q);
        if r.abs() <= h && u.abs() <= h {
            let t = Slope::from_wide(r, u).expect("coprime");
            out.push(t);
        }
    }
    out.sort();
    out.dedup();
    out
}

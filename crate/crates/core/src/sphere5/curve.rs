//! Normal curves: validity, connectivity and the puncture split.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::encoding::Coords;
use super::triangulation::{HalfEdge, Triangulation, NUM_EDGES, NUM_PUNCTURES};
use super::word::{ParseWordError, Word};
use crate::union_find::UnionFind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurveError {
    #[error("negative coordinate on edge {0}")]
    Negative(usize),
    #[error("odd weight sum in triangle {0}")]
    Parity(usize),
    #[error("negative corner in triangle {0}")]
    Corner(usize),
    #[error("empty curve")]
    Empty,
    #[error("normal multicurve has {0} components")]
    Disconnected(usize),
    #[error("curve is peripheral (splits punctures {0}|{1})")]
    Peripheral(usize, usize),
    #[error("curve has no provenance witness")]
    MissingWitness,
    #[error("bad witness: {0}")]
    Witness(#[from] ParseWordError),
}

/// Provenance: `word` applied to base curve `base` (0-based index into the
/// base pentagon).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub word: Word,
    pub base: usize,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:c{}", self.word, self.base + 1)
    }
}

impl FromStr for Witness {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (w, c) = s.rsplit_once(':').ok_or_else(|| ParseWordError(s.to_string()))?;
        let base = c
            .strip_prefix('c')
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&d| (1..=5).contains(&d))
            .ok_or_else(|| ParseWordError(s.to_string()))?;
        Ok(Witness { word: w.parse()?, base: base - 1 })
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Witness {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An essential simple closed curve, by its weights on the base triangulation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NormalCurve {
    pub coords: Coords,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

// Isotopy class is the coordinate vector; the witness is bookkeeping.
impl PartialEq for NormalCurve {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl Eq for NormalCurve {}

impl std::hash::Hash for NormalCurve {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.coords.hash(h)
    }
}

impl NormalCurve {
    pub fn new(coords: Coords) -> Self {
        Self { coords, witness: None }
    }

    pub fn with_witness(coords: Coords, witness: Witness) -> Self {
        Self { coords, witness: Some(witness) }
    }

    /// Checks the curve is a valid essential curve on `t`.
    pub fn validate(&self, t: &Triangulation) -> Result<(), CurveError> {
        validate_coords(t, &self.coords).map(|_| ())
    }
}

/// Corner counts per triangle: `k[i]` arcs cut off the corner at the head of
/// the `i`-th half-edge.
pub fn corners(t: &Triangulation, x: &Coords) -> Result<Vec<[i64; 3]>, CurveError> {
    if let Some(e) = x.iter().position(|&v| v < 0) {
        return Err(CurveError::Negative(e));
    }
    let mut out = Vec::with_capacity(t.triangles().len());
    for (ti, tri) in t.triangles().iter().enumerate() {
        let w = tri.map(|h| x[h.edge as usize]);
        let mut k = [0; 3];
        for i in 0..3 {
            let s = w[i] + w[(i + 1) % 3] - w[(i + 2) % 3];
            if s % 2 != 0 {
                return Err(CurveError::Parity(ti));
            }
            if s < 0 {
                return Err(CurveError::Corner(ti));
            }
            k[i] = s / 2;
        }
        out.push(k);
    }
    Ok(out)
}

fn edge_pos(h: HalfEdge, t: i64, w: i64) -> i64 {
    if h.reversed {
        w - 1 - t
    } else {
        t
    }
}

/// Number of connected components of the normal multicurve.
pub fn component_count(t: &Triangulation, x: &Coords) -> Result<usize, CurveError> {
    let ks = corners(t, x)?;
    let mut offset = [0usize; NUM_EDGES + 1];
    for e in 0..NUM_EDGES {
        offset[e + 1] = offset[e] + x[e] as usize;
    }
    let total = offset[NUM_EDGES];
    if total == 0 {
        return Ok(0);
    }
    let mut uf = UnionFind::new(total);
    let point = |h: HalfEdge, pos: i64| {
        let w = x[h.edge as usize];
        offset[h.edge as usize] + edge_pos(h, pos, w) as usize
    };
    for (tri, k) in t.triangles().iter().zip(&ks) {
        for i in 0..3 {
            let (hi, hn) = (tri[i], tri[(i + 1) % 3]);
            let wi = x[hi.edge as usize];
            for j in 0..k[i] {
                uf.union(point(hi, wi - 1 - j), point(hn, j));
            }
        }
    }
    Ok(uf.count())
}

/// Sizes of the two sides of a single curve, as puncture bitmasks
/// `(smaller side, other side)`; ties broken by lower mask first.
pub fn puncture_split(t: &Triangulation, x: &Coords) -> Result<(u8, u8), CurveError> {
    let ks = corners(t, x)?;
    // Segments on each edge, numbered along +e: 0..=w.
    let mut offset = [0usize; NUM_EDGES + 1];
    for e in 0..NUM_EDGES {
        offset[e + 1] = offset[e] + x[e] as usize + 1;
    }
    let mut uf = UnionFind::new(offset[NUM_EDGES]);
    let seg = |h: HalfEdge, s: i64| {
        let w = x[h.edge as usize];
        let s = if h.reversed { w - s } else { s };
        offset[h.edge as usize] + s as usize
    };
    for (tri, k) in t.triangles().iter().zip(&ks) {
        for i in 0..3 {
            let (hi, hn) = (tri[i], tri[(i + 1) % 3]);
            let wi = x[hi.edge as usize];
            for j in 0..=k[i] {
                uf.union(seg(hi, wi - j), seg(hn, j));
            }
        }
    }
    let tails = t.tails();
    let mut region_of = [usize::MAX; NUM_PUNCTURES];
    for i in 0..2 * NUM_EDGES {
        let h = HalfEdge::from_index(i);
        region_of[tails[i]] = uf.find(seg(h, 0));
    }
    let first = region_of[0];
    let mut a = 0u8;
    let mut b = 0u8;
    for (v, &r) in region_of.iter().enumerate() {
        if r == first {
            a |= 1 << v;
        } else {
            b |= 1 << v;
        }
    }
    if a.count_ones() < b.count_ones() || (a.count_ones() == b.count_ones() && a < b) {
        Ok((a, b))
    } else {
        Ok((b, a))
    }
}

/// Full validity check; returns the twice-punctured side as a bitmask.
pub fn validate_coords(t: &Triangulation, x: &Coords) -> Result<u8, CurveError> {
    let n = component_count(t, x)?;
    if n == 0 {
        return Err(CurveError::Empty);
    }
    if n > 1 {
        return Err(CurveError::Disconnected(n));
    }
    let (small, big) = puncture_split(t, x)?;
    if small.count_ones() != 2 {
        return Err(CurveError::Peripheral(small.count_ones() as usize, big.count_ones() as usize));
    }
    Ok(small)
}

/// The boundary of a regular neighbourhood of edge `e` (distinct endpoints).
pub fn edge_curve(t: &Triangulation, e: u8) -> Coords {
    let tails = t.tails();
    let (p, q) = (tails[HalfEdge::pos(e).index()], tails[HalfEdge::neg(e).index()]);
    let mut x = [0; NUM_EDGES];
    for f in 0..NUM_EDGES as u8 {
        if f == e {
            continue;
        }
        for v in [tails[HalfEdge::pos(f).index()], tails[HalfEdge::neg(f).index()]] {
            if v == p || v == q {
                x[f as usize] += 1;
            }
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere5::triangulation::base_triangulation;

    #[test]
    fn edge_curves_are_essential() {
        let t = base_triangulation();
        let tails = t.tails();
        for e in 0..NUM_EDGES as u8 {
            let x = edge_curve(&t, e);
            let side = validate_coords(&t, &x).unwrap();
            let (p, q) = (tails[HalfEdge::pos(e).index()], tails[HalfEdge::neg(e).index()]);
            assert_eq!(side, (1 << p) | (1 << q));
        }
    }

    #[test]
    fn vertex_link_is_peripheral() {
        let t = base_triangulation();
        // The link of a puncture crosses each edge once per endpoint there.
        for v in 0..NUM_PUNCTURES {
            let mut x = [0; NUM_EDGES];
            for f in 0..NUM_EDGES as u8 {
                let (a, b) = t.endpoints(f);
                x[f as usize] = (a == v) as i64 + (b == v) as i64;
            }
            assert_eq!(validate_coords(&t, &x), Err(CurveError::Peripheral(1, 4)));
        }
    }

    #[test]
    fn doubled_curve_is_disconnected() {
        let t = base_triangulation();
        let x = edge_curve(&t, 0).map(|v| 2 * v);
        assert_eq!(component_count(&t, &x).unwrap(), 2);
        assert_eq!(validate_coords(&t, &x), Err(CurveError::Disconnected(2)));
    }

    #[test]
    fn parity_violation_detected() {
        let t = base_triangulation();
        let mut x = edge_curve(&t, 0);
        x[0] += 1;
        assert!(corners(&t, &x).is_err());
    }

    #[test]
    fn witness_text_roundtrip() {
        let w: Witness = "h1H2r:c3".parse().unwrap();
        assert_eq!(w.base, 2);
        assert_eq!(w.to_string(), "h1H2r:c3");
        assert!("h1:c6".parse::<Witness>().is_err());
        let e: Witness = ":c1".parse().unwrap();
        assert!(e.word.is_empty());
    }
}

//! Combinatorial ideal triangulations of the five-punctured sphere.
//!
//! A triangulation is a list of triangles, each a counter-clockwise triple of
//! oriented half-edges. Edge `e` has two half-edges, `+e` (tail to head) and
//! `-e`; every half-edge occurs in exactly one triangle.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const NUM_EDGES: usize = 9;
pub const NUM_TRIANGLES: usize = 6;
pub const NUM_PUNCTURES: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("half-edge {0} appears {1} times (expected exactly once)")]
    HalfEdgeCount(HalfEdge, usize),
    #[error("edge {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("euler characteristic {0} (expected 2 for the sphere)")]
    Euler(i64),
    #[error("expected {expected} punctures, found {found}")]
    PunctureCount { expected: usize, found: usize },
    #[error("edge {0} is not flippable (both sides lie in one triangle)")]
    NotFlippable(usize),
    #[error("recorded square of edge {0} does not match the triangulation")]
    SquareMismatch(usize),
}

/// An oriented half of an edge.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfEdge {
    pub edge: u8,
    pub reversed: bool,
}

impl HalfEdge {
    pub const fn pos(edge: u8) -> Self {
        Self { edge, reversed: false }
    }

    pub const fn neg(edge: u8) -> Self {
        Self { edge, reversed: true }
    }

    pub fn rev(self) -> Self {
        Self { edge: self.edge, reversed: !self.reversed }
    }

    /// Dense index in `0..2 * num_edges`.
    pub fn index(self) -> usize {
        2 * self.edge as usize + self.reversed as usize
    }

    pub fn from_index(i: usize) -> Self {
        Self { edge: (i / 2) as u8, reversed: i % 2 == 1 }
    }
}

impl fmt::Debug for HalfEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", if self.reversed { '-' } else { '+' }, self.edge)
    }
}

impl fmt::Display for HalfEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The four sides of the square around a flippable edge, in cyclic order.
///
/// Before the flip the two triangles are `(+e, a, b)` and `(-e, c, d)`; after
/// it they are `(+e, b, c)` and `(-e, d, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Square {
    pub a: HalfEdge,
    pub b: HalfEdge,
    pub c: HalfEdge,
    pub d: HalfEdge,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Triangulation {
    triangles: Vec<[HalfEdge; 3]>,
    num_edges: usize,
}

/// A combinatorial isomorphism between two labelled triangulations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    /// Image of each half-edge, indexed by [`HalfEdge::index`].
    pub half_edges: Vec<HalfEdge>,
    pub orientation_preserving: bool,
}

impl Isomorphism {
    /// Edge permutation induced on labels: `edge_map()[e]` is the image of `e`.
    pub fn edge_map(&self) -> Vec<u8> {
        (0..self.half_edges.len() / 2)
            .map(|e| self.half_edges[2 * e].edge)
            .collect()
    }
}

impl Triangulation {
    pub fn new(triangles: Vec<[HalfEdge; 3]>) -> Result<Self, TriangulationError> {
        let num_edges = triangles.len() * 3 / 2;
        let mut seen = vec![0usize; 2 * num_edges];
        for h in triangles.iter().flatten() {
            if h.edge as usize >= num_edges {
                return Err(TriangulationError::EdgeOutOfRange(h.edge as usize));
            }
            seen[h.index()] += 1;
        }
        if let Some(i) = seen.iter().position(|&c| c != 1) {
            return Err(TriangulationError::HalfEdgeCount(HalfEdge::from_index(i), seen[i]));
        }
        Ok(Self { triangles, num_edges })
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn triangles(&self) -> &[[HalfEdge; 3]] {
        &self.triangles
    }

    /// Triangle index and corner position holding `h`.
    pub fn locate(&self, h: HalfEdge) -> (usize, usize) {
        for (t, tri) in self.triangles.iter().enumerate() {
            if let Some(i) = tri.iter().position(|&x| x == h) {
                return (t, i);
            }
        }
        unreachable!("validated triangulation is missing half-edge {h}")
    }

    pub fn is_flippable(&self, edge: u8) -> bool {
        let (t1, _) = self.locate(HalfEdge::pos(edge));
        let (t2, _) = self.locate(HalfEdge::neg(edge));
        t1 != t2
    }

    pub fn square(&self, edge: u8) -> Result<Square, TriangulationError> {
        if edge as usize >= self.num_edges {
            return Err(TriangulationError::EdgeOutOfRange(edge as usize));
        }
        let (t1, i1) = self.locate(HalfEdge::pos(edge));
        let (t2, i2) = self.locate(HalfEdge::neg(edge));
        if t1 == t2 {
            return Err(TriangulationError::NotFlippable(edge as usize));
        }
        let x = self.triangles[t1];
        let y = self.triangles[t2];
        Ok(Square {
            a: x[(i1 + 1) % 3],
            b: x[(i1 + 2) % 3],
            c: y[(i2 + 1) % 3],
            d: y[(i2 + 2) % 3],
        })
    }

    pub fn flip(&mut self, edge: u8) -> Result<Square, TriangulationError> {
        let sq = self.square(edge)?;
        let (t1, _) = self.locate(HalfEdge::pos(edge));
        let (t2, _) = self.locate(HalfEdge::neg(edge));
        self.triangles[t1] = [HalfEdge::pos(edge), sq.b, sq.c];
        self.triangles[t2] = [HalfEdge::neg(edge), sq.d, sq.a];
        Ok(sq)
    }

    /// Tail vertex of every half-edge, indexed by [`HalfEdge::index`]; vertex
    /// ids are dense and numbered in order of first appearance.
    pub fn tails(&self) -> Vec<usize> {
        let n = 2 * self.num_edges;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for tri in &self.triangles {
            for i in 0..3 {
                // head(h_i) = tail(h_{i+1}) and head(h) = tail(-h)
                let a = find(&mut parent, tri[(i + 1) % 3].index());
                let b = find(&mut parent, tri[i].rev().index());
                parent[a] = b;
            }
        }
        let mut ids = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for i in 0..n {
            let r = find(&mut parent, i);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            out[i] = ids[r];
        }
        out
    }

    pub fn num_vertices(&self) -> usize {
        self.tails().into_iter().max().map_or(0, |m| m + 1)
    }

    /// `(tail, head)` punctures of an edge.
    pub fn endpoints(&self, edge: u8) -> (usize, usize) {
        let tails = self.tails();
        (
            tails[HalfEdge::pos(edge).index()],
            tails[HalfEdge::neg(edge).index()],
        )
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.tails().into_iter().filter(|&v| v == vertex).count()
    }

    pub fn validate_sphere(&self, punctures: usize) -> Result<(), TriangulationError> {
        let v = self.num_vertices() as i64;
        let chi = v - self.num_edges as i64 + self.triangles.len() as i64;
        if chi != 2 {
            return Err(TriangulationError::Euler(chi));
        }
        if v as usize != punctures {
            return Err(TriangulationError::PunctureCount { expected: punctures, found: v as usize });
        }
        Ok(())
    }

    /// Renames edge `f` to `perm[f]`, keeping orientations.
    pub fn relabeled(&self, perm: &[u8]) -> Self {
        let triangles = self
            .triangles
            .iter()
            .map(|tri| tri.map(|h| HalfEdge { edge: perm[h.edge as usize], reversed: h.reversed }))
            .collect();
        Self { triangles, num_edges: self.num_edges }
    }

    /// True when both describe the same set of oriented triangles.
    pub fn same_as(&self, other: &Triangulation) -> bool {
        fn canon(t: &Triangulation) -> Vec<[HalfEdge; 3]> {
            let mut v: Vec<_> = t
                .triangles
                .iter()
                .map(|&tri| {
                    let k = (0..3).min_by_key(|&i| tri[i]).unwrap();
                    [tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]]
                })
                .collect();
            v.sort();
            v
        }
        canon(self) == canon(other)
    }

    /// True when an orientation-preserving isomorphism fixes every edge label
    /// (edge directions may differ).
    pub fn same_labels_as(&self, other: &Triangulation) -> bool {
        let id: Vec<u8> = (0..self.num_edges as u8).collect();
        self.isomorphisms_to(other)
            .iter()
            .any(|i| i.orientation_preserving && i.edge_map() == id)
    }

    /// The same surface with the opposite orientation.
    pub fn mirror(&self) -> Self {
        let triangles = self
            .triangles
            .iter()
            .map(|&[a, b, c]| [c.rev(), b.rev(), a.rev()])
            .collect();
        Self { triangles, num_edges: self.num_edges }
    }

    /// All isomorphisms `self -> other`, orientation-preserving first.
    pub fn isomorphisms_to(&self, other: &Triangulation) -> Vec<Isomorphism> {
        let mut out = Vec::new();
        if self.num_edges != other.num_edges || self.triangles.len() != other.triangles.len() {
            return out;
        }
        for (preserving, target) in [(true, other.clone()), (false, other.mirror())] {
            for maps in self.preserving_isos(&target) {
                // For the mirrored target, half-edge h of the mirror is the
                // reversal of h in `other`; translate back.
                let half_edges = if preserving { maps } else { maps.into_iter().map(HalfEdge::rev).collect() };
                out.push(Isomorphism { half_edges, orientation_preserving: preserving });
            }
        }
        out
    }

    fn preserving_isos(&self, other: &Triangulation) -> Vec<Vec<HalfEdge>> {
        let n = 2 * self.num_edges;
        let mut found = Vec::new();
        let start = self.triangles[0][0];
        for tri in &other.triangles {
            for &target in tri {
                let mut map: Vec<Option<HalfEdge>> = vec![None; n];
                let mut queue = VecDeque::new();
                map[start.index()] = Some(target);
                queue.push_back(start);
                let mut ok = true;
                while let Some(h) = queue.pop_front() {
                    let img = map[h.index()].unwrap();
                    let (t, i) = self.locate(h);
                    let (t2, j) = other.locate(img);
                    let mut pairs = Vec::with_capacity(4);
                    for k in 1..3 {
                        pairs.push((self.triangles[t][(i + k) % 3], other.triangles[t2][(j + k) % 3]));
                    }
                    pairs.push((h.rev(), img.rev()));
                    for (x, y) in pairs {
                        match map[x.index()] {
                            Some(prev) if prev != y => {
                                ok = false;
                                break;
                            }
                            Some(_) => {}
                            None => {
                                map[x.index()] = Some(y);
                                queue.push_back(x);
                            }
                        }
                    }
                    if !ok {
                        break;
                    }
                }
                if !ok || map.iter().any(Option::is_none) {
                    continue;
                }
                let map: Vec<HalfEdge> = map.into_iter().map(Option::unwrap).collect();
                let mut hit = vec![false; n];
                if map.iter().all(|h| !std::mem::replace(&mut hit[h.index()], true)) {
                    found.push(map);
                }
            }
        }
        found
    }
}

/// Punctures `0..5` sit on an equator in cyclic order. Edges `0..5` are the
/// equator arcs `[i, i+1]`; edges 5, 6 are the upper diagonals `0-2`, `0-3`,
/// and edges 7, 8 the lower diagonals `0-2`, `0-3`.
pub fn base_triangulation() -> Triangulation {
    use HalfEdge as H;
    let p = H::pos;
    let n = H::neg;
    let triangles = vec![
        // upper hemisphere
        [p(0), p(1), n(5)],
        [p(5), p(2), n(6)],
        [p(6), p(3), p(4)],
        // lower hemisphere
        [p(7), n(1), n(0)],
        [p(8), n(2), n(7)],
        [n(4), n(3), n(8)],
    ];
    Triangulation::new(triangles).expect("base triangulation is well formed")
}

/// Equator arcs, indexed by their first puncture.
pub const EQUATOR: [u8; 5] = [0, 1, 2, 3, 4];

/// The reflection through the equator: fixes the equator arcs, swaps the
/// upper and lower diagonals.
pub const REFLECTION_EDGE_MAP: [u8; NUM_EDGES] = [0, 1, 2, 3, 4, 7, 8, 5, 6];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_is_a_five_punctured_sphere() {
        let t = base_triangulation();
        t.validate_sphere(NUM_PUNCTURES).unwrap();
        assert_eq!(t.num_edges(), NUM_EDGES);
        assert_eq!(t.triangles().len(), NUM_TRIANGLES);
        // Equator arcs join consecutive punctures.
        let tails = t.tails();
        let mut seen_pairs = Vec::new();
        for e in 0..5u8 {
            let (a, b) = (tails[HalfEdge::pos(e).index()], tails[HalfEdge::neg(e).index()]);
            assert_ne!(a, b);
            seen_pairs.push((a, b));
        }
        for w in 0..5 {
            assert_eq!(seen_pairs[w].1, seen_pairs[(w + 1) % 5].0);
        }
    }

    #[test]
    fn reflection_is_an_orientation_reversing_automorphism() {
        let t = base_triangulation();
        let isos = t.isomorphisms_to(&t);
        let refl: Vec<_> = isos
            .iter()
            .filter(|i| !i.orientation_preserving && i.edge_map() == REFLECTION_EDGE_MAP.to_vec())
            .collect();
        assert_eq!(refl.len(), 1);
        // The identity is the only orientation-preserving self-map fixing every edge.
        let ids = isos
            .iter()
            .filter(|i| i.orientation_preserving && i.edge_map() == (0..9).collect::<Vec<u8>>())
            .count();
        assert_eq!(ids, 1);
    }

    #[test]
    fn flip_twice_restores_triangulation_up_to_rotation() {
        let base = base_triangulation();
        for e in 0..NUM_EDGES as u8 {
            let mut t = base.clone();
            t.flip(e).unwrap();
            t.validate_sphere(NUM_PUNCTURES).unwrap();
            t.flip(e).unwrap();
            // The diagonal comes back with its direction reversed.
            assert!(!t.same_as(&base));
            assert!(t.same_labels_as(&base));
        }
    }

    #[test]
    fn degree_one_puncture_gives_self_folded_edge() {
        let mut t = base_triangulation();
        // Puncture 1 has degree 2; flipping e01 leaves it with degree 1.
        t.flip(0).unwrap();
        t.validate_sphere(NUM_PUNCTURES).unwrap();
        let tails = t.tails();
        let deg1: Vec<usize> = (0..NUM_PUNCTURES).filter(|&v| tails.iter().filter(|&&x| x == v).count() == 1).collect();
        assert_eq!(deg1.len(), 1);
        let folded = (0..NUM_EDGES as u8).filter(|&e| !t.is_flippable(e)).count();
        assert_eq!(folded, 1);
        let e = (0..NUM_EDGES as u8).find(|&e| !t.is_flippable(e)).unwrap();
        assert_eq!(t.square(e), Err(TriangulationError::NotFlippable(e as usize)));
    }
}

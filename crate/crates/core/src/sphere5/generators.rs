//! Flip encodings of the half-twists and the reflection.
//!
//! The half-twist about the curve surrounding edge `E` is built in a
//! triangulation where both endpoints of `E` have degree three: there the
//! four triangles around `E` form a twice-punctured disk, flipping the edges
//! that follow `+E` and `-E` rotates it by a half turn, and a relabeling
//! returns to the same combinatorics. Conjugating by the flips that reach
//! such a triangulation gives the half-twist in base coordinates.

use std::collections::{HashSet, VecDeque};
use std::sync::OnceLock;

use thiserror::Error;

use super::encoding::{flip_move, relabel_move, Coords, Encoding, Move};
use super::triangulation::{
    base_triangulation, HalfEdge, Triangulation, TriangulationError, NUM_EDGES, REFLECTION_EDGE_MAP,
};
use super::word::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneratorError {
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
    #[error("edge {0}: endpoints do not both have degree 3 after adapting flips")]
    NotAdapted(u8),
    #[error("edge {0}: {1} candidate relabelings after the half turn (expected 1)")]
    Relabel(u8, usize),
    #[error("edge {0}: encoding does not return to the base triangulation")]
    NotClosed(u8),
    #[error("edge {0}: no adapting flip sequence within depth {1}")]
    NoAdaptingSequence(u8, usize),
}

/// Flips (never touching the twist edge) that make both endpoints of the
/// twist edge trivalent, per equator edge `e01, e12, e23, e34, e40`.
pub const ADAPTING_FLIPS: [&[u8]; 5] = [&[4, 5, 8], &[5], &[1, 3], &[6], &[0, 5, 6]];

fn both_trivalent(t: &Triangulation, edge: u8) -> bool {
    let tails = t.tails();
    let (p, q) = (tails[HalfEdge::pos(edge).index()], tails[HalfEdge::neg(edge).index()]);
    let deg = |v: usize| tails.iter().filter(|&&x| x == v).count();
    p != q && deg(p) == 3 && deg(q) == 3
}

fn label_key(t: &Triangulation) -> Vec<[u8; 3]> {
    let mut v: Vec<[u8; 3]> = t
        .triangles()
        .iter()
        .map(|tri| {
            let e = tri.map(|h| h.edge);
            let k = (0..3).min_by_key(|&i| e[i]).unwrap();
            [e[k], e[(k + 1) % 3], e[(k + 2) % 3]]
        })
        .collect();
    v.sort();
    v
}

/// Shortest flip sequence avoiding `edge` after which `edge` is adapted;
/// ties broken by first-found in increasing edge order.
pub fn find_adapting_flips(base: &Triangulation, edge: u8, max_depth: usize) -> Result<Vec<u8>, GeneratorError> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(label_key(base));
    queue.push_back((base.clone(), Vec::<u8>::new()));
    while let Some((t, path)) = queue.pop_front() {
        if both_trivalent(&t, edge) {
            return Ok(path);
        }
        if path.len() == max_depth {
            continue;
        }
        for f in 0..base.num_edges() as u8 {
            if f == edge || !t.is_flippable(f) {
                continue;
            }
            let mut next = t.clone();
            next.flip(f)?;
            if seen.insert(label_key(&next)) {
                let mut p = path.clone();
                p.push(f);
                queue.push_back((next, p));
            }
        }
    }
    Err(GeneratorError::NoAdaptingSequence(edge, max_depth))
}

/// The half-twist about the curve around `edge`, as an encoding on `base`.
pub fn build_half_twist(base: &Triangulation, edge: u8, adapting: &[u8]) -> Result<Encoding, GeneratorError> {
    let mut t = base.clone();
    let mut moves = Vec::new();
    for &f in adapting {
        let sq = t.flip(f)?;
        moves.push(flip_move(f, sq));
    }
    if !both_trivalent(&t, edge) {
        return Err(GeneratorError::NotAdapted(edge));
    }
    let adapted = t.clone();
    let sq = t.square(edge)?;
    // The edges following +E and -E in their triangles.
    for f in [sq.a.edge, sq.c.edge] {
        let s = t.flip(f)?;
        moves.push(flip_move(f, s));
    }
    let square = [sq.a.edge, sq.b.edge, sq.c.edge, sq.d.edge];
    let candidates: Vec<_> = t
        .isomorphisms_to(&adapted)
        .into_iter()
        .filter(|iso| {
            let m = iso.edge_map();
            iso.orientation_preserving
                && m[edge as usize] == edge
                && (0..NUM_EDGES as u8).all(|f| square.contains(&f) || m[f as usize] == f)
        })
        .collect();
    if candidates.len() != 1 {
        return Err(GeneratorError::Relabel(edge, candidates.len()));
    }
    moves.push(relabel_move(&candidates[0]));
    let mut t = adapted;
    for &f in adapting.iter().rev() {
        let sq = t.flip(f)?;
        moves.push(flip_move(f, sq));
    }
    if !t.same_labels_as(base) {
        return Err(GeneratorError::NotClosed(edge));
    }
    let enc = Encoding { moves };
    if !enc.replay(base)?.same_labels_as(base) {
        return Err(GeneratorError::NotClosed(edge));
    }
    Ok(enc)
}

pub fn reflection() -> Encoding {
    Encoding { moves: vec![Move::Relabel(REFLECTION_EDGE_MAP)] }
}

/// Generator tables, built and checked once.
pub struct Generators {
    pub triangulation: Triangulation,
    /// Half-twists about the equator edges `e01, e12, e23, e34, e40`.
    pub twists: [Encoding; 5],
    pub twist_inverses: [Encoding; 5],
    pub reflection: Encoding,
}

static GENERATORS: OnceLock<Generators> = OnceLock::new();

impl Generators {
    pub fn build() -> Result<Self, GeneratorError> {
        let t = base_triangulation();
        t.validate_sphere(super::triangulation::NUM_PUNCTURES)?;
        let mut twists = Vec::with_capacity(5);
        for (e, phi) in ADAPTING_FLIPS.iter().enumerate() {
            twists.push(build_half_twist(&t, e as u8, phi)?);
        }
        let twists: [Encoding; 5] = twists.try_into().expect("five twists");
        let twist_inverses = twists.clone().map(|h| h.inverse());
        Ok(Self { triangulation: t, twists, twist_inverses, reflection: reflection() })
    }

    pub fn get() -> &'static Generators {
        GENERATORS.get_or_init(|| Self::build().expect("generator tables are consistent"))
    }

    pub fn letter(&self, l: Letter) -> &Encoding {
        match l {
            Letter::H { i, inv: false } => &self.twists[i as usize - 1],
            Letter::H { i, inv: true } => &self.twist_inverses[i as usize - 1],
            Letter::R => &self.reflection,
        }
    }

    pub fn apply_letter(&self, l: Letter, x: &Coords) -> Coords {
        self.letter(l).apply(x)
    }

    /// `w(x)`: the last letter acts first.
    pub fn apply_word(&self, w: &Word, x: &Coords) -> Coords {
        w.letters().iter().rev().fold(*x, |acc, &l| self.apply_letter(l, &acc))
    }

    /// Half-twist about the base curve around equator edge `e`, or its inverse.
    pub fn base_twist(&self, e: usize, sign: i8) -> &Encoding {
        if sign >= 0 {
            &self.twists[e]
        } else {
            &self.twist_inverses[e]
        }
    }
}


#[cfg(test)]
mod relation_tests {
    use super::*;
    use crate::sphere5::base::base_coords;
    use crate::sphere5::curve::validate_coords;
    use rand::SeedableRng;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn sample_curves() -> Vec<Coords> {
        let g = Generators::get();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        (0..100).map(|k| g.apply_word(&Word::random(&mut rng, 1 + k % 8), &base_coords(k % 5))).collect()
    }

    #[test]
    fn relations_hold() {
        let g = Generators::get();
        let t = base_triangulation();
        let cs = sample_curves();
        let pairs = [
            ("h1h2h1", "h2h1h2"),
            ("h2h3h2", "h3h2h3"),
            ("h3h4h3", "h4h3h4"),
            ("h1h3", "h3h1"),
            ("h1h4", "h4h1"),
            ("h2h4", "h4h2"),
            ("rr", ""),
            ("rh1r", "H1"),
            ("rh3r", "H3"),
            ("h1h2h3h4h4h3h2h1", ""),
            ("h1h2h3h4h1h2h3h4h1h2h3h4h1h2h3h4h1h2h3h4", ""),
        ];
        for c in (0..5).map(base_coords).chain(cs) {
            validate_coords(&t, &c).unwrap();
            for (a, b) in pairs {
                let (x, y) = (g.apply_word(&w(a), &c), g.apply_word(&w(b), &c));
                assert_eq!(x, y, "{a} vs {b} on {c:?}");
            }
        }
    }

    #[test]
    fn reflection_fixes_base() {
        let g = Generators::get();
        for j in 0..5 {
            assert_eq!(g.reflection.apply(&base_coords(j)), base_coords(j));
        }
    }

    #[test]
    fn twists_are_nontrivial_and_fix_their_curve() {
        let g = Generators::get();
        for e in 0..5 {
            let c = crate::sphere5::curve::edge_curve(&base_triangulation(), e as u8);
            assert_eq!(g.twists[e].apply(&c), c);
            let moved = (0..5).any(|j| g.twists[e].apply(&base_coords(j)) != base_coords(j));
            assert!(moved);
        }
    }
}

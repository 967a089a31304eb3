//! Mapping classes as sequences of flips and relabelings acting on edge
//! weight vectors.

use super::triangulation::{Isomorphism, Square, Triangulation, TriangulationError, NUM_EDGES};

pub type Coords = [i64; NUM_EDGES];

/// One elementary move on weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    /// Flip `edge`, whose square has sides `sides = [a, b, c, d]` (edge labels).
    Flip { edge: u8, sides: [u8; 4] },
    /// `y[perm[f]] = x[f]`.
    Relabel([u8; NUM_EDGES]),
}

impl Move {
    pub fn apply(&self, x: &mut Coords) {
        match *self {
            Move::Flip { edge, sides: [a, b, c, d] } => {
                let (a, b, c, d) = (a as usize, b as usize, c as usize, d as usize);
                let e = edge as usize;
                x[e] = (x[a] + x[c]).max(x[b] + x[d]) - x[e];
            }
            Move::Relabel(perm) => {
                let old = *x;
                for f in 0..NUM_EDGES {
                    x[perm[f] as usize] = old[f];
                }
            }
        }
    }

    pub fn inverse(&self) -> Move {
        match *self {
            // Flipping back sees the square (b, c, d, a) and the same formula.
            Move::Flip { .. } => *self,
            Move::Relabel(perm) => {
                let mut inv = [0u8; NUM_EDGES];
                for f in 0..NUM_EDGES {
                    inv[perm[f] as usize] = f as u8;
                }
                Move::Relabel(inv)
            }
        }
    }
}

fn same_pairing(x: [u8; 4], y: [u8; 4]) -> bool {
    let pairs = |s: [u8; 4]| {
        let mut p = [[s[0].min(s[2]), s[0].max(s[2])], [s[1].min(s[3]), s[1].max(s[3])]];
        p.sort();
        p
    };
    pairs(x) == pairs(y)
}

pub fn flip_move(edge: u8, sq: Square) -> Move {
    Move::Flip { edge, sides: [sq.a.edge, sq.b.edge, sq.c.edge, sq.d.edge] }
}

pub fn relabel_move(iso: &Isomorphism) -> Move {
    let map = iso.edge_map();
    let mut perm = [0u8; NUM_EDGES];
    perm.copy_from_slice(&map);
    Move::Relabel(perm)
}

/// A mapping class given by moves applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Encoding {
    pub moves: Vec<Move>,
}

impl Encoding {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn apply(&self, x: &Coords) -> Coords {
        let mut y = *x;
        for m in &self.moves {
            m.apply(&mut y);
        }
        y
    }

    pub fn inverse(&self) -> Self {
        Self { moves: self.moves.iter().rev().map(Move::inverse).collect() }
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Encoding) -> Self {
        let mut moves = self.moves.clone();
        moves.extend_from_slice(&other.moves);
        Self { moves }
    }

    /// Replays the moves on `start`, checking each flip is legal and records
    /// the square it claims; returns the final triangulation.
    pub fn replay(&self, start: &Triangulation) -> Result<Triangulation, TriangulationError> {
        let mut t = start.clone();
        for m in &self.moves {
            match *m {
                Move::Flip { edge, sides } => {
                    let sq = t.flip(edge)?;
                    // Only the opposite-side pairings enter the formula, and
                    // relabelings may reverse edge directions.
                    let got = [sq.a.edge, sq.b.edge, sq.c.edge, sq.d.edge];
                    if !same_pairing(got, sides) {
                        return Err(TriangulationError::SquareMismatch(edge as usize));
                    }
                }
                Move::Relabel(perm) => t = t.relabeled(&perm),
            }
        }
        Ok(t)
    }
}

//! The base pentagon `c1..c5`.

use super::curve::{edge_curve, NormalCurve, Witness};
use super::encoding::Coords;
use super::triangulation::base_triangulation;
use super::word::Word;

/// Equator edge surrounded by `c_j`: `c1..c5` surround the punctures
/// `{1,2}, {3,4}, {5,1}, {2,3}, {4,5}` (1-based labels).
pub const BASE_EDGES: [u8; 5] = [0, 2, 4, 1, 3];

pub fn base_coords(j: usize) -> Coords {
    edge_curve(&base_triangulation(), BASE_EDGES[j])
}

pub fn base_curve(j: usize) -> NormalCurve {
    NormalCurve::with_witness(base_coords(j), Witness { word: Word::empty(), base: j })
}

pub fn base_pentagon() -> [NormalCurve; 5] {
    std::array::from_fn(base_curve)
}

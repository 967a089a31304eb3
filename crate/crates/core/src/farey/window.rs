//! Height windows of the Farey graph and window displacement.

use serde::{Deserialize, Serialize};

use super::{farey_distance, neighbors_within, slopes_up_to, IntMatrix, Slope};
use crate::graph::Graph;
use crate::window::Window;

pub const INSTANCE: &str = "farey";

pub type FareyWindow = Window<Slope>;

/// All slopes with `max(|p|, q) <= height`, based at `1/0`.
pub fn build_window(height: i64) -> FareyWindow {
    let vertices = slopes_up_to(height);
    let mut g = Graph::new(vertices.len());
    let index = |s: &Slope| vertices.binary_search(s).expect("neighbour inside window");
    for (i, &v) in vertices.iter().enumerate() {
        for u in neighbors_within(v, height) {
            let j = index(&u);
            if i < j {
                g.add_edge(i, j);
            }
        }
    }
    let words = vec![None; vertices.len()];
    Window::new(INSTANCE, Slope::INFINITY, height as u64, vertices, words, g).expect("sorted slopes")
}

/// Minimum of `d(v, e v)` over window vertices, first minimiser in key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Displacement {
    pub word: String,
    pub min: u64,
    pub argmin: String,
}

pub fn window_displacement(e: &IntMatrix, w: &FareyWindow) -> (u64, Slope) {
    let mut best = (u64::MAX, w.basepoint);
    for &v in &w.vertices {
        let d = farey_distance(v, e.apply(v));
        if d < best.0 {
            best = (d, v);
            if d == 0 {
                break;
            }
        }
    }
    best
}

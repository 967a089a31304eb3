//! Windows of the curve graph generated by short words applied to the base
//! pentagon.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::base::{base_coords, BASE_EDGES};
use super::curve::{NormalCurve, Witness};
use super::encoding::Coords;
use super::generators::Generators;
use super::word::Word;
use crate::graph::Graph;
use crate::window::Window;

pub const INSTANCE: &str = "s5";

pub type CurveWindow = Window<Coords>;

/// All curves `w(c_j)` with `|w| <= word_bound`, keyed by coordinates; each
/// keeps the shortlex-first witness that reaches it.
pub fn window_curves(word_bound: usize) -> Vec<NormalCurve> {
    let g = Generators::get();
    let mut seen: BTreeMap<Coords, Witness> = BTreeMap::new();
    for w in Word::all_up_to(word_bound) {
        for j in 0..5 {
            let x = g.apply_word(&w, &base_coords(j));
            seen.entry(x).or_insert_with(|| Witness { word: w.clone(), base: j });
        }
    }
    seen.into_iter().map(|(x, w)| NormalCurve::with_witness(x, w)).collect()
}

/// Disjointness graph on curves with witnesses.
pub fn disjointness_graph(curves: &[NormalCurve]) -> Graph {
    let g = Generators::get();
    let rows: Vec<Vec<usize>> = curves
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let w = a.witness.as_ref().expect("window curves carry witnesses");
            let inv = w.word.inverse();
            let e = BASE_EDGES[w.base] as usize;
            (i + 1..curves.len())
                .filter(|&j| g.apply_word(&inv, &curves[j].coords)[e] == 0)
                .collect()
        })
        .collect();
    Graph::from_edges(curves.len(), rows.into_iter().enumerate().flat_map(|(i, r)| r.into_iter().map(move |j| (i, j))))
}

pub fn window_from_curves(curves: Vec<NormalCurve>, bound: u64) -> CurveWindow {
    let mut curves = curves;
    curves.sort_by_key(|c| c.coords);
    curves.dedup();
    let graph = disjointness_graph(&curves);
    let words = curves.iter().map(|c| c.witness.as_ref().map(|w| w.to_string())).collect();
    let keys = curves.iter().map(|c| c.coords).collect();
    Window::new(INSTANCE, base_coords(0), bound, keys, words, graph).expect("sorted distinct keys")
}

pub fn build_window(word_bound: usize) -> CurveWindow {
    window_from_curves(window_curves(word_bound), word_bound as u64)
}

/// The curve at `id` with its witness.
pub fn curve_at(w: &CurveWindow, id: usize) -> NormalCurve {
    let witness = w.words[id].as_deref().and_then(|s| s.parse().ok());
    NormalCurve { coords: w.vertices[id], witness }
}

pub fn key_label(x: &Coords) -> String {
    let parts: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_zero_is_the_base_pentagon() {
        let w = build_window(0);
        assert_eq!(w.len(), 5);
        assert_eq!(w.graph.edge_count(), 5);
        assert_eq!(w.graph.pentagons().len(), 1);
    }
}

//! Extending a pentagon-to-pentagon map across detected half-twist images,
//! using only the graph.
//!
//! For an ordered non-adjacent pair `(a, b)` of a pentagon, `D(a, b)` is the
//! two-pentagon detection set (the two half-twist images of `a` about `b`).
//! An automorphism carries `D(a, b)` onto `D(f a, f b)`, and two rules pin
//! down the bijection:
//!
//! - if one element of `D(a, b)` is already mapped, the other goes to the
//!   other element;
//! - if `D(a, b)` is mapped and `a'` is the other vertex of the pentagon not
//!   adjacent to `b`, each `y` in `D(a', b)` is adjacent to exactly one
//!   element `x` of `D(a, b)` (the twist of the same orientation), and goes
//!   to the element of `D(f a', f b)` adjacent to `f x`.
//!
//! The only free choice is the matching of `D` for one pair of the seed,
//! which is the orientation of the extension.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use serde_json::json;

use crate::graph::{detect_two_pentagon, Graph, PentagonIndex};

#[derive(Clone, Debug, Default, Serialize)]
pub struct Propagation {
    /// Extended partial vertex map.
    pub map: BTreeMap<usize, usize>,
    /// Vertices of pairs whose detection sets were cut by the window.
    pub frontier: BTreeSet<usize>,
    /// Inconsistent extensions; empty when propagation is sound.
    pub conflicts: Vec<serde_json::Value>,
    pub rounds: usize,
}

struct State<'a> {
    g: &'a Graph,
    idx: &'a PentagonIndex,
    detections: HashMap<(usize, usize), Vec<usize>>,
    out: Propagation,
    taken: HashMap<usize, usize>,
}

impl State<'_> {
    fn detect(&mut self, a: usize, b: usize) -> Vec<usize> {
        let (g, idx) = (self.g, self.idx);
        self.detections
            .entry((a, b))
            .or_insert_with(|| detect_two_pentagon(g, idx, a, b).into_iter().map(|d| d.gamma).collect())
            .clone()
    }

    /// Records `v -> img`; returns true if new.
    fn set(&mut self, v: usize, img: usize, why: &str) -> bool {
        if let Some(&old) = self.out.map.get(&v) {
            if old != img {
                self.out.conflicts.push(json!({ "kind": "disagreement", "vertex": v, "images": [old, img], "rule": why }));
            }
            return false;
        }
        if let Some(&other) = self.taken.get(&img) {
            self.out.conflicts.push(json!({ "kind": "not-injective", "vertices": [other, v], "image": img, "rule": why }));
            return false;
        }
        self.out.map.insert(v, img);
        self.taken.insert(img, v);
        true
    }

    fn image(&self, v: usize) -> Option<usize> {
        self.out.map.get(&v).copied()
    }

    /// Both detection sets, or `None` (marking the frontier) when either is
    /// not a pair.
    fn pair(&mut self, a: usize, b: usize, fa: usize, fb: usize) -> Option<(Vec<usize>, Vec<usize>)> {
        let (d, d2) = (self.detect(a, b), self.detect(fa, fb));
        if d.len() == 2 && d2.len() == 2 {
            Some((d, d2))
        } else {
            self.out.frontier.extend([a, b]);
            None
        }
    }
}

/// The two candidate matchings of `D(seed[0], seed[2])` onto
/// `D(image[0], image[2])`, straight (key order) first.
pub fn seed_matchings(g: &Graph, idx: &PentagonIndex, seed: [usize; 5], image: [usize; 5]) -> Option<[[(usize, usize); 2]; 2]> {
    let d: Vec<usize> = detect_two_pentagon(g, idx, seed[0], seed[2]).into_iter().map(|d| d.gamma).collect();
    let d2: Vec<usize> = detect_two_pentagon(g, idx, image[0], image[2]).into_iter().map(|d| d.gamma).collect();
    if d.len() != 2 || d2.len() != 2 {
        return None;
    }
    Some([[(d[0], d2[0]), (d[1], d2[1])], [(d[0], d2[1]), (d[1], d2[0])]])
}

/// Propagates `seed[i] -> image[i]` together with the matching `first` of
/// the detection set of `(seed[0], seed[2])`, until nothing changes.
pub fn propagate_pentagon_map(
    g: &Graph,
    idx: &PentagonIndex,
    seed: [usize; 5],
    image: [usize; 5],
    first: [(usize, usize); 2],
) -> Propagation {
    let mut st = State { g, idx, detections: HashMap::new(), out: Propagation::default(), taken: HashMap::new() };
    for i in 0..5 {
        st.set(seed[i], image[i], "seed");
    }
    for (v, img) in first {
        st.set(v, img, "seed");
    }
    loop {
        st.out.rounds += 1;
        let mut changed = false;
        for p in idx.pentagons.iter() {
            let Some(fp) = p.iter().map(|&v| st.image(v)).collect::<Option<Vec<usize>>>() else { continue };
            let fp: [usize; 5] = fp.try_into().expect("five vertices");
            if !g.is_pentagon(&fp) {
                st.out.conflicts.push(json!({ "kind": "image-not-pentagon", "pentagon": p, "image": fp }));
                continue;
            }
            for i in 0..5 {
                for (ia, ib) in [(i, (i + 2) % 5), ((i + 2) % 5, i)] {
                    changed |= step(&mut st, p, &fp, ia, ib);
                }
            }
        }
        if !changed || !st.out.conflicts.is_empty() {
            break;
        }
    }
    st.out
}

/// Applies both rules to the pair `(p[ia], p[ib])`; returns true if the map grew.
fn step(st: &mut State<'_>, p: &[usize; 5], fp: &[usize; 5], ia: usize, ib: usize) -> bool {
    let (a, b, fa, fb) = (p[ia], p[ib], fp[ia], fp[ib]);
    let Some((d, d2)) = st.pair(a, b, fa, fb) else { return false };
    let mut changed = false;
    // Rule 1: complete a half-known matching.
    for k in 0..2 {
        if let Some(img) = st.image(d[k]) {
            match d2.iter().position(|&y| y == img) {
                Some(j) => changed |= st.set(d[1 - k], d2[1 - j], "complete"),
                None => st.out.conflicts.push(json!({
                    "kind": "detection-not-preserved",
                    "pair": [a, b],
                    "vertex": d[k],
                    "image": img,
                    "expected": d2,
                })),
            }
        }
    }
    // Rule 2: transfer to the other non-neighbour of b.
    let (Some(x0), Some(x1)) = (st.image(d[0]), st.image(d[1])) else { return changed };
    let ia2 = (2 * ib + 5 - ia) % 5;
    let (a2, fa2) = (p[ia2], fp[ia2]);
    let Some((e, e2)) = st.pair(a2, b, fa2, fb) else { return changed };
    for &y in &e {
        let partners: Vec<usize> = d.iter().copied().filter(|&x| st.g.adjacent(x, y)).collect();
        if partners.len() != 1 {
            st.out.frontier.insert(y);
            continue;
        }
        let fx = if partners[0] == d[0] { x0 } else { x1 };
        let targets: Vec<usize> = e2.iter().copied().filter(|&y2| st.g.adjacent(y2, fx)).collect();
        if targets.len() != 1 {
            st.out.conflicts.push(json!({ "kind": "partner-ambiguous", "pair": [a2, b], "vertex": y, "targets": targets }));
            continue;
        }
        changed |= st.set(y, targets[0], "partner");
    }
    changed
}

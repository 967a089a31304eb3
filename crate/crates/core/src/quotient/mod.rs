//! Quotients of windows by finite samples of a normal subgroup, and the
//! local checks run on them.

mod instance;
mod propagate;
mod report;
mod suites;

pub use instance::{Distance, FareyInstance, Instance, S5Instance};
pub use propagate::{propagate_pentagon_map, seed_matchings, Propagation};
pub use report::{Report, Status};
pub use suites::{
    check_simplicial, check_support_sets, detect_half_twists_quotient, transfer_pentagons, verify_ball2_isometry,
    verify_lipschitz_and_lifting, verify_local_covering, verify_unique_lift_orbit, Eligibility, LiftTarget,
    HT_THRESHOLD, LARGE_THRESHOLD, SIMPLICIAL_THRESHOLD,
};

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::window::Window;

#[derive(Debug, Error)]
pub enum QuotientError {
    #[error("instance mismatch: window {window:?}, sample {sample:?}")]
    Instance { window: String, sample: String },
    #[error("element composition overflowed while transporting class {0}")]
    Overflow(usize),
}

/// One sampled element with its defining word.
#[derive(Clone, Debug)]
pub struct SampleElement<E> {
    pub word: String,
    pub element: E,
}

/// Finite proxy for a normal subgroup; identity excluded, closed under
/// inverses.
#[derive(Clone, Debug)]
pub struct ClosureSample<E> {
    pub instance: String,
    pub elements: Vec<SampleElement<E>>,
}

impl<E> ClosureSample<E> {
    pub fn empty(instance: &str) -> Self {
        Self { instance: instance.to_string(), elements: Vec::new() }
    }
}

/// Per-element window displacement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisplacementEntry {
    pub word: String,
    /// Minimum of `d(v, n v)` over window vertices (a lower bound when
    /// `exact` is false).
    pub min: u64,
    pub argmin: String,
    pub exact: bool,
}

/// A window vertex identified with another by a sampled element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    pub from: usize,
    pub to: usize,
    pub element: usize,
}

#[derive(Clone, Debug)]
pub struct QuotientWindow<E> {
    /// Member ids per class, sorted; classes ordered by representative
    /// (smallest id, hence smallest key).
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// Quotient graph on class indices (loops dropped, see `loops`).
    pub graph: Graph,
    /// Window edges whose endpoints are identified.
    pub loops: Vec<(usize, usize)>,
    pub identifications: Vec<Identification>,
    /// Vertices fixed by some sampled element, with the element index.
    pub fixed: Vec<(usize, usize)>,
    /// `transport[v]` carries the representative of `v`'s class to `v`.
    pub transport: Vec<E>,
    pub displacement: Vec<DisplacementEntry>,
}

impl<E: Clone> QuotientWindow<E> {
    pub fn rep(&self, class: usize) -> usize {
        self.classes[class][0]
    }

    /// Smallest sampled displacement, `None` for the empty sample.
    pub fn min_displacement(&self) -> Option<(u64, bool)> {
        self.displacement.iter().map(|d| (d.min, d.exact)).min_by_key(|x| x.0)
    }

    /// Element carrying `a` to `b` for `a`, `b` in one class.
    pub fn transport_between<I: Instance<Element = E>>(&self, inst: &I, a: usize, b: usize) -> Option<E> {
        inst.compose(&self.transport[b], &inst.inverse(&self.transport[a]))
    }
}

/// Identify `v ~ n v` for every sampled `n` with both ends in the window.
pub fn build_quotient<I: Instance>(
    inst: &I,
    w: &Window<I::Key>,
    s: &ClosureSample<I::Element>,
) -> Result<QuotientWindow<I::Element>, QuotientError> {
    if w.instance != s.instance {
        return Err(QuotientError::Instance { window: w.instance.clone(), sample: s.instance.clone() });
    }
    let n = w.len();
    let mut identifications = Vec::new();
    let mut fixed = Vec::new();
    for (ei, e) in s.elements.iter().enumerate() {
        for (v, key) in w.vertices.iter().enumerate() {
            let Some(img) = inst.apply(&e.element, key) else { continue };
            match w.index_of(&img) {
                Some(u) if u == v => fixed.push((v, ei)),
                Some(u) => identifications.push(Identification { from: v, to: u, element: ei }),
                None => {}
            }
        }
    }
    // Spanning forest of the identification graph, rooted at minimum ids.
    let mut links: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); n];
    for id in &identifications {
        links[id.from].push((id.to, id.element, true));
        links[id.to].push((id.from, id.element, false));
    }
    let mut class_of = vec![usize::MAX; n];
    let mut transport: Vec<Option<I::Element>> = vec![None; n];
    let mut classes = Vec::new();
    for root in 0..n {
        if class_of[root] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut members = vec![root];
        class_of[root] = c;
        transport[root] = Some(inst.identity());
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let tv = transport[v].clone().expect("visited");
            for &(u, ei, forward) in &links[v] {
                if class_of[u] != usize::MAX {
                    continue;
                }
                let g = &s.elements[ei].element;
                let step = if forward { g.clone() } else { inst.inverse(g) };
                let tu = inst.compose(&step, &tv).ok_or(QuotientError::Overflow(c))?;
                class_of[u] = c;
                transport[u] = Some(tu);
                members.push(u);
                queue.push_back(u);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    let mut graph = Graph::new(classes.len());
    let mut loops = Vec::new();
    for (a, b) in w.graph.edges() {
        let (ca, cb) = (class_of[a], class_of[b]);
        if ca == cb {
            loops.push((a, b));
        } else {
            graph.add_edge(ca, cb);
        }
    }
    let displacement = s
        .elements
        .iter()
        .map(|e| {
            let (min, argmin, exact) = inst.window_displacement(&e.element, w);
            DisplacementEntry { word: e.word.clone(), min, argmin: inst.label(&w.vertices[argmin]), exact }
        })
        .collect();
    Ok(QuotientWindow {
        classes,
        class_of,
        graph,
        loops,
        identifications,
        fixed,
        transport: transport.into_iter().map(|t| t.expect("every vertex visited")).collect(),
        displacement,
    })
}

/// Orbits by repeated sweeps of sample x vertices until stable; the
/// independent check on the forest construction above.
pub fn brute_force_classes<I: Instance>(inst: &I, w: &Window<I::Key>, s: &ClosureSample<I::Element>) -> Vec<Vec<usize>> {
    let n = w.len();
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for e in &s.elements {
            for v in 0..n {
                if let Some(u) = inst.apply(&e.element, &w.vertices[v]).and_then(|k| w.index_of(&k)) {
                    let m = label[v].min(label[u]);
                    if label[v] != m || label[u] != m {
                        let (old1, old2) = (label[v], label[u]);
                        for l in label.iter_mut() {
                            if *l == old1 || *l == old2 {
                                *l = m;
                            }
                        }
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for v in 0..n {
        let l = label[v];
        if slot[l] == usize::MAX {
            slot[l] = out.len();
            out.push(Vec::new());
        }
        out[slot[l]].push(v);
    }
    out
}

/// Window JSON extended by classes and displacement.
pub fn quotient_json<K, E>(w: &Window<K>, q: &QuotientWindow<E>) -> serde_json::Value
where
    K: Clone + Ord + std::hash::Hash + Serialize + serde::de::DeserializeOwned,
{
    let mut v = w.to_json_value();
    let obj = v.as_object_mut().expect("window json is an object");
    obj.insert("classes".into(), serde_json::to_value(&q.classes).expect("serializable"));
    obj.insert("displacement".into(), serde_json::to_value(&q.displacement).expect("serializable"));
    obj.insert(
        "quotient_edges".into(),
        serde_json::to_value(q.graph.edges().into_iter().map(|(a, b)| [a, b]).collect::<Vec<_>>()).expect("serializable"),
    );
    v
}

/// The Farey closure sample as a quotient sample.
pub fn farey_sample(spec: &crate::farey::ClosureSpec) -> Result<ClosureSample<crate::farey::IntMatrix>, crate::farey::ClosureError> {
    let elements = crate::farey::sample_closure(spec)?
        .into_iter()
        .map(|e| SampleElement { word: e.word, element: e.matrix })
        .collect();
    Ok(ClosureSample { instance: crate::farey::INSTANCE.to_string(), elements })
}

/// Conjugates `w f^{+-K} w^-1` for words `w` of length at most
/// `conjugator_length`, deduplicated by reduced word; trivial words dropped.
pub fn s5_sample(f: &crate::sphere5::word::Word, power: u32, conjugator_length: usize) -> ClosureSample<crate::sphere5::word::Word> {
    use crate::sphere5::word::Word;
    let mut fk = Word::empty();
    for _ in 0..power {
        fk = fk.concat(f);
    }
    let mut seen = std::collections::BTreeMap::new();
    for w in Word::all_up_to(conjugator_length) {
        for base in [fk.clone(), fk.inverse()] {
            let e = w.concat(&base).concat(&w.inverse());
            if !e.is_empty() {
                seen.entry(e.to_string()).or_insert(e);
            }
        }
    }
    let elements = seen.into_iter().map(|(word, element)| SampleElement { word, element }).collect();
    ClosureSample { instance: crate::sphere5::window::INSTANCE.to_string(), elements }
}

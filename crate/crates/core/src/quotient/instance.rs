use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::farey::{adjacent, farey_distance, IntMatrix, Slope};
use crate::sphere5::curve::{NormalCurve, Witness};
use crate::sphere5::encoding::Coords;
use crate::sphere5::generators::Generators;
use crate::sphere5::intersection::intersection_number;
use crate::sphere5::window::{key_label, CurveWindow};
use crate::sphere5::word::Word;
use crate::window::Window;

/// Distance certificate between two vertices of the ambient graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distance {
    Exact(u64),
    AtLeast(u64),
}

impl Distance {
    pub fn exact(self) -> Option<u64> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::AtLeast(_) => None,
        }
    }

    pub fn lower(self) -> u64 {
        match self {
            Distance::Exact(d) | Distance::AtLeast(d) => d,
        }
    }
}

/// An ambient graph with a group acting on it by automorphisms.
pub trait Instance: Sync {
    type Key: Clone + Ord + Hash + Debug + Send + Sync + serde::Serialize + serde::de::DeserializeOwned;
    type Element: Clone + Debug + Send + Sync;

    fn tag(&self) -> &'static str;
    fn identity(&self) -> Self::Element;
    /// `a` after `b`; `None` when the product cannot be represented.
    fn compose(&self, a: &Self::Element, b: &Self::Element) -> Option<Self::Element>;
    fn inverse(&self, a: &Self::Element) -> Self::Element;
    /// `None` when the image cannot be represented.
    fn apply(&self, e: &Self::Element, k: &Self::Key) -> Option<Self::Key>;
    fn adjacent(&self, a: &Self::Key, b: &Self::Key) -> bool;
    fn distance(&self, a: &Self::Key, b: &Self::Key) -> Distance;
    fn label(&self, k: &Self::Key) -> String;

    /// `(min, argmin id, exact)` of `d(v, e v)` over window vertices.
    fn window_displacement(&self, e: &Self::Element, w: &Window<Self::Key>) -> (u64, usize, bool) {
        let mut best = (u64::MAX, 0, true);
        for (i, v) in w.vertices.iter().enumerate() {
            let Some(img) = self.apply(e, v) else { continue };
            let d = self.distance(v, &img);
            if d.lower() < best.0 {
                best = (d.lower(), i, d.exact().is_some());
            }
        }
        best
    }
}

/// Farey graph under `GL(2, Z)`; elements act projectively.
#[derive(Clone, Copy, Debug, Default)]
pub struct FareyInstance;

impl Instance for FareyInstance {
    type Key = Slope;
    type Element = IntMatrix;

    fn tag(&self) -> &'static str {
        crate::farey::INSTANCE
    }

    fn identity(&self) -> IntMatrix {
        IntMatrix::IDENTITY
    }

    fn compose(&self, a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
        a.mul(b).ok()
    }

    fn inverse(&self, a: &IntMatrix) -> IntMatrix {
        a.inverse()
    }

    fn apply(&self, e: &IntMatrix, k: &Slope) -> Option<Slope> {
        e.try_apply(*k).ok()
    }

    fn adjacent(&self, a: &Slope, b: &Slope) -> bool {
        adjacent(*a, *b)
    }

    fn distance(&self, a: &Slope, b: &Slope) -> Distance {
        Distance::Exact(farey_distance(*a, *b))
    }

    fn label(&self, k: &Slope) -> String {
        k.to_string()
    }
}

/// Curve graph of the five-punctured sphere under the mapping class group,
/// elements given as words.
///
/// Distances are certified only up to 2: equal, disjoint, or meeting twice
/// (the non-adjacent pairs of a pentagon). Everything else is reported as
/// at least 2.
#[derive(Clone, Debug, Default)]
pub struct S5Instance {
    witnesses: HashMap<Coords, Witness>,
}

impl S5Instance {
    pub fn new() -> Self {
        Self::default()
    }

    /// Reuses the witness words stored in the window.
    pub fn for_window(w: &CurveWindow) -> Self {
        let witnesses = w
            .vertices
            .iter()
            .zip(&w.words)
            .filter_map(|(k, s)| Some((*k, s.as_deref()?.parse().ok()?)))
            .collect();
        Self { witnesses }
    }

    fn curve(&self, x: &Coords) -> NormalCurve {
        NormalCurve { coords: *x, witness: self.witnesses.get(x).cloned() }
    }

    /// `i(a, b)`, or `None` when neither curve admits a witness.
    pub fn intersection(&self, a: &Coords, b: &Coords) -> Option<i64> {
        let (ca, cb) = (self.curve(a), self.curve(b));
        let (ca, cb) = if ca.witness.is_none() && cb.witness.is_some() { (cb, ca) } else { (ca, cb) };
        intersection_number(&ca, &cb).ok()
    }
}

impl Instance for S5Instance {
    type Key = Coords;
    type Element = Word;

    fn tag(&self) -> &'static str {
        crate::sphere5::window::INSTANCE
    }

    fn identity(&self) -> Word {
        Word::empty()
    }

    fn compose(&self, a: &Word, b: &Word) -> Option<Word> {
        Some(a.concat(b))
    }

    fn inverse(&self, a: &Word) -> Word {
        a.inverse()
    }

    fn apply(&self, e: &Word, k: &Coords) -> Option<Coords> {
        Some(Generators::get().apply_word(e, k))
    }

    fn adjacent(&self, a: &Coords, b: &Coords) -> bool {
        a != b && self.intersection(a, b) == Some(0)
    }

    fn distance(&self, a: &Coords, b: &Coords) -> Distance {
        if a == b {
            return Distance::Exact(0);
        }
        match self.intersection(a, b) {
            Some(0) => Distance::Exact(1),
            Some(2) => Distance::Exact(2),
            Some(_) => Distance::AtLeast(2),
            None => Distance::AtLeast(1),
        }
    }

    fn label(&self, k: &Coords) -> String {
        key_label(k)
    }
}

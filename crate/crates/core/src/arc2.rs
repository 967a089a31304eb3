//! The arc complex of the five-punctured sphere seen through curves.
//!
//! Every curve `y` cuts off a twice-punctured disk containing a unique arc
//! `a(y)`; the arc's endpoints are the two punctures on the small side. Two
//! arcs with `s` shared endpoints and `k` interior crossings have curves
//! meeting `4k + 2s` times, so interiors are disjoint exactly when
//! `i = 2s`.
//!
//! Triangles of the arc complex whose arcs pairwise share an endpoint come
//! in four endpoint patterns. Each pair determines a connector arc
//! `eps_ij`, the unique arc with distinct endpoints missing both, whose
//! curve is the unique curve disjoint from both. The six curves
//! `x_i, eps_ij` form a loop which is filled here by pentagons found by
//! bounded search.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;
use crate::sphere5::curve::{puncture_split, CurveError, NormalCurve};
use crate::sphere5::encoding::Coords;
use crate::sphere5::intersection::intersection_number;
use crate::sphere5::triangulation::base_triangulation;
use crate::sphere5::window::{curve_at, CurveWindow};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Arc2Error {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error("arcs have disjoint endpoints; their curves are adjacent and need no connector")]
    DisjointEndpoints,
    #[error("arcs cross (curves meet {0} times)")]
    Crossing(i64),
    #[error("repeated arc")]
    Repeated,
    #[error("{0} connector candidates in the search window (expected exactly one)")]
    Connector(usize),
    #[error("connector endpoints {0:05b} meet the arcs")]
    ConnectorEndpoints(u8),
    #[error("curve not in the search window")]
    OutsideWindow,
}

/// Bitmask of the puncture pair cut off by `x`.
pub fn endpoints(x: &Coords) -> Result<u8, CurveError> {
    Ok(puncture_split(&base_triangulation(), x)?.0)
}

pub fn shared_endpoints(a: u8, b: u8) -> u32 {
    (a & b).count_ones()
}

/// A vertex of the arc complex, carried by its curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc2Vertex {
    pub curve: NormalCurve,
    pub endpoints: u8,
}

impl Arc2Vertex {
    pub fn new(curve: NormalCurve) -> Result<Self, CurveError> {
        let endpoints = endpoints(&curve.coords)?;
        Ok(Self { curve, endpoints })
    }

    /// Puncture labels in increasing order.
    pub fn endpoint_labels(&self) -> [u8; 2] {
        let a = self.endpoints.trailing_zeros() as u8;
        let b = 7 - (self.endpoints.leading_zeros() as u8);
        [a, b]
    }
}

/// Interiors disjoint (distinct arcs are allowed to share endpoints).
pub fn interiors_disjoint(x: &Arc2Vertex, y: &Arc2Vertex) -> Result<bool, CurveError> {
    let i = intersection_number(&x.curve, &y.curve)?;
    Ok(i == 2 * shared_endpoints(x.endpoints, y.endpoints) as i64)
}

/// Curves of a search window with their arc endpoints and adjacency.
pub struct ArcSearch<'a> {
    pub window: &'a CurveWindow,
    pub endpoints: Vec<u8>,
}

impl<'a> ArcSearch<'a> {
    pub fn new(window: &'a CurveWindow) -> Result<Self, CurveError> {
        let endpoints = window.vertices.iter().map(endpoints).collect::<Result<_, _>>()?;
        Ok(Self { window, endpoints })
    }

    pub fn graph(&self) -> &Graph {
        &self.window.graph
    }

    pub fn id(&self, x: &Arc2Vertex) -> Result<usize, Arc2Error> {
        self.window.index_of(&x.curve.coords).ok_or(Arc2Error::OutsideWindow)
    }

    pub fn vertex(&self, id: usize) -> Arc2Vertex {
        Arc2Vertex { curve: curve_at(self.window, id), endpoints: self.endpoints[id] }
    }

    /// `eps(x, y)` for arcs sharing at least one endpoint: all window
    /// curves disjoint from both, which must be exactly one.
    pub fn epsilon_arc(&self, x: usize, y: usize) -> Result<usize, Arc2Error> {
        if shared_endpoints(self.endpoints[x], self.endpoints[y]) == 0 {
            return Err(Arc2Error::DisjointEndpoints);
        }
        let g = self.graph();
        let common: Vec<usize> = g.neighbors(x).iter().copied().filter(|&z| g.adjacent(z, y)).collect();
        match common.as_slice() {
            [z] if self.endpoints[*z] & (self.endpoints[x] | self.endpoints[y]) == 0 => Ok(*z),
            [z] => Err(Arc2Error::ConnectorEndpoints(self.endpoints[*z])),
            _ => Err(Arc2Error::Connector(common.len())),
        }
    }

    /// Triples of `ids` (window ids, sorted within each triple) whose arcs
    /// pairwise have disjoint interiors.
    pub fn triangles(&self, ids: &[usize]) -> Result<Vec<[usize; 3]>, CurveError> {
        let n = ids.len();
        let curves: Vec<Arc2Vertex> = ids.iter().map(|&v| self.vertex(v)).collect();
        let mut ok = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let d = interiors_disjoint(&curves[i], &curves[j])? && ids[i] != ids[j];
                ok[i][j] = d;
                ok[j][i] = d;
            }
        }
        let mut out = Vec::new();
        for i in 0..n {
            for j in (i + 1..n).filter(|&j| ok[i][j]) {
                for k in (j + 1..n).filter(|&k| ok[i][k] && ok[j][k]) {
                    let mut t = [ids[i], ids[j], ids[k]];
                    t.sort_unstable();
                    out.push(t);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

pub fn epsilon_arc(search: &ArcSearch<'_>, x: &Arc2Vertex, y: &Arc2Vertex) -> Result<Arc2Vertex, Arc2Error> {
    Ok(search.vertex(search.epsilon_arc(search.id(x)?, search.id(y)?)?))
}

/// Endpoint pattern of three arcs that pairwise share an endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pattern {
    /// `pa, pb, pc`: one common endpoint.
    Star,
    /// `ab, bc, ca`.
    Cycle,
    /// `ab, ab, ac`.
    Double,
    /// `ab, ab, ab`.
    Triple,
}

/// Configuration class of an arc triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    /// Cycle pattern with coinciding connectors: a tripod.
    Case1,
    /// Star pattern: one auxiliary curve, two pentagons.
    Case2,
    /// Double pattern with coinciding connectors: a tripod.
    Case3,
    /// Double pattern with distinct connectors: one auxiliary curve, two
    /// pentagons.
    Case4,
    /// Triple pattern: four auxiliary curves, four pentagons.
    Case5,
    /// Cycle pattern with distinct connectors (the complementary punctures
    /// separated by the triangle); not among the listed cases.
    CycleSeparated,
    /// One pair with disjoint endpoints: a five-vertex loop.
    Pentagon,
    /// Two pairs with disjoint endpoints: the loop backtracks.
    Degenerate,
}

impl Kind {
    /// Number of pentagons the listed construction uses.
    pub fn prescribed_pentagons(self) -> Option<usize> {
        match self {
            Kind::Case1 | Kind::Case3 => Some(0),
            Kind::Case2 | Kind::Case4 => Some(2),
            Kind::Case5 => Some(4),
            Kind::Pentagon => Some(1),
            Kind::Degenerate => Some(0),
            Kind::CycleSeparated => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleConfig {
    /// Window ids of `x_0, x_1, x_2`.
    pub arcs: [usize; 3],
    pub pattern: Option<Pattern>,
    pub kind: Kind,
    /// Connectors `eps_01, eps_02, eps_12` where defined.
    pub epsilons: [Option<usize>; 3],
}

fn pair_index(i: usize, j: usize) -> usize {
    match (i.min(j), i.max(j)) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => panic!("pair ({i}, {j}) out of range"),
    }
}

impl TriangleConfig {
    pub fn epsilon(&self, i: usize, j: usize) -> Option<usize> {
        self.epsilons[pair_index(i, j)]
    }
}

/// Classifies three window curves whose arcs form a triangle.
pub fn classify(search: &ArcSearch<'_>, arcs: [usize; 3]) -> Result<TriangleConfig, Arc2Error> {
    let [x0, x1, x2] = arcs;
    if x0 == x1 || x0 == x2 || x1 == x2 {
        return Err(Arc2Error::Repeated);
    }
    let e = |v: usize| search.endpoints[v];
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let (a, b) = (search.vertex(arcs[i]), search.vertex(arcs[j]));
        if !interiors_disjoint(&a, &b)? {
            return Err(Arc2Error::Crossing(intersection_number(&a.curve, &b.curve)?));
        }
    }
    let shares = [shared_endpoints(e(x0), e(x1)), shared_endpoints(e(x0), e(x2)), shared_endpoints(e(x1), e(x2))];
    let mut epsilons = [None; 3];
    for (k, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
        if shares[k] > 0 {
            epsilons[k] = Some(search.epsilon_arc(arcs[i], arcs[j])?);
        }
    }
    let disjoint_pairs = shares.iter().filter(|&&s| s == 0).count();
    if disjoint_pairs > 0 {
        let kind = if disjoint_pairs == 1 { Kind::Pentagon } else { Kind::Degenerate };
        return Ok(TriangleConfig { arcs, pattern: None, kind, epsilons });
    }
    let common = (e(x0) & e(x1) & e(x2)).count_ones();
    let doubles = shares.iter().filter(|&&s| s == 2).count();
    let pattern = match (doubles, common) {
        (0, 1) => Pattern::Star,
        (0, _) => Pattern::Cycle,
        (1, _) => Pattern::Double,
        _ => Pattern::Triple,
    };
    let coincide = epsilons[0] == epsilons[1] && epsilons[1] == epsilons[2];
    let kind = match (pattern, coincide) {
        (Pattern::Cycle, true) => Kind::Case1,
        (Pattern::Cycle, false) => Kind::CycleSeparated,
        (Pattern::Star, _) => Kind::Case2,
        (Pattern::Double, true) => Kind::Case3,
        (Pattern::Double, false) => Kind::Case4,
        (Pattern::Triple, _) => Kind::Case5,
    };
    Ok(TriangleConfig { arcs, pattern: Some(pattern), kind, epsilons })
}

/// Cyclic order making `set` a pentagon of `g`, if any (canonical rotation,
/// smallest id first and smaller second neighbour).
pub fn pentagon_order(g: &Graph, set: [usize; 5]) -> Option<[usize; 5]> {
    let mut s = set;
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let v0 = s[0];
    let nb: Vec<usize> = s[1..].iter().copied().filter(|&v| g.adjacent(v0, v)).collect();
    if nb.len() != 2 {
        return None;
    }
    let (v1, v4) = (nb[0].min(nb[1]), nb[0].max(nb[1]));
    let rest: Vec<usize> = s[1..].iter().copied().filter(|&v| v != v1 && v != v4).collect();
    for (v2, v3) in [(rest[0], rest[1]), (rest[1], rest[0])] {
        let c = [v0, v1, v2, v3, v4];
        if g.is_pentagon(&c) {
            return Some(c);
        }
    }
    None
}

/// Embeddedness: cyclically adjacent curves disjoint, all others
/// intersecting, checked with intersection numbers.
pub fn validate_pentagon(search: &ArcSearch<'_>, p: &[usize; 5]) -> Result<bool, CurveError> {
    for i in 0..5 {
        for j in i + 1..5 {
            let (a, b) = (curve_at(search.window, p[i]), curve_at(search.window, p[j]));
            let n = intersection_number(&a, &b)?;
            let consecutive = j == i + 1 || (i == 0 && j == 4);
            if consecutive != (n == 0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filling {
    pub kind: Kind,
    /// The loop `x_0, eps_01, x_1, eps_12, x_2, eps_02` with repeats
    /// dropped.
    pub boundary: Vec<usize>,
    /// Auxiliary curves by name (`z` or `a`..`d`).
    pub auxiliary: BTreeMap<String, usize>,
    pub pentagons: Vec<[usize; 5]>,
    /// Apex relabeling used, `sigma[i]` is the original index of `x_i`.
    pub relabeling: [usize; 3],
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FillError {
    #[error(transparent)]
    Arc(#[from] Arc2Error),
    #[error("no filling of the prescribed shape for {0:?} in the search window")]
    NotFound(Kind),
}

const PERMUTATIONS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

/// Fills the loop of a triangle with the construction of its class.
///
/// Auxiliary curves come from `search`, which should contain the triangle,
/// its connectors and room around them.
pub fn fill_triangle(search: &ArcSearch<'_>, t: &TriangleConfig) -> Result<Filling, FillError> {
    let g = search.graph();
    let mut boundary = Vec::new();
    for v in [Some(t.arcs[0]), t.epsilon(0, 1), Some(t.arcs[1]), t.epsilon(1, 2), Some(t.arcs[2]), t.epsilon(0, 2)]
        .into_iter()
        .flatten()
    {
        if !boundary.contains(&v) {
            boundary.push(v);
        }
    }
    let base = |sigma: [usize; 3]| Filling {
        kind: t.kind,
        boundary: boundary.clone(),
        auxiliary: BTreeMap::new(),
        pentagons: Vec::new(),
        relabeling: sigma,
    };
    match t.kind {
        Kind::Case1 | Kind::Case3 | Kind::Degenerate => Ok(base([0, 1, 2])),
        Kind::Pentagon => {
            let set: [usize; 5] = boundary.clone().try_into().map_err(|_| FillError::NotFound(t.kind))?;
            let p = pentagon_order(g, set).ok_or(FillError::NotFound(t.kind))?;
            Ok(Filling { pentagons: vec![p], ..base([0, 1, 2]) })
        }
        Kind::Case2 | Kind::Case4 => {
            for sigma in PERMUTATIONS {
                let x = |i: usize| t.arcs[sigma[i]];
                let eps = |i: usize, j: usize| t.epsilon(sigma[i], sigma[j]).expect("six-vertex loop");
                let (e01, e02, e12) = (eps(0, 1), eps(0, 2), eps(1, 2));
                for z in 0..search.window.len() {
                    let p1 = pentagon_order(g, [x(0), x(1), z, e01, e12]);
                    let p2 = pentagon_order(g, [x(0), x(2), z, e02, e12]);
                    if let (Some(p1), Some(p2)) = (p1, p2) {
                        let mut f = base(sigma);
                        f.auxiliary.insert("z".into(), z);
                        f.pentagons = vec![p1, p2];
                        return Ok(f);
                    }
                }
            }
            Err(FillError::NotFound(t.kind))
        }
        Kind::Case5 => fill_four(search, t, base).ok_or(FillError::NotFound(t.kind)),
        Kind::CycleSeparated => {
            let pentagons = fill_loop(g, &boundary, 4).ok_or(FillError::NotFound(t.kind))?;
            let mut f = base([0, 1, 2]);
            let mut aux: Vec<usize> = pentagons.iter().flatten().copied().filter(|v| !boundary.contains(v)).collect();
            aux.sort_unstable();
            aux.dedup();
            for (k, v) in aux.into_iter().enumerate() {
                f.auxiliary.insert(((b'a' + k as u8) as char).to_string(), v);
            }
            f.pentagons = pentagons;
            Ok(f)
        }
    }
}

/// The four-pentagon construction `{x0, a, e01, e02, b}`,
/// `{x2, a, e12, e02, c}`, `{x1, a, e12, d, c}`, `{x1, a, e01, d, b}` under
/// some relabeling, `a` lying in all four.
fn fill_four(search: &ArcSearch<'_>, t: &TriangleConfig, base: impl Fn([usize; 3]) -> Filling) -> Option<Filling> {
    let g = search.graph();
    for sigma in PERMUTATIONS {
        let x = |i: usize| t.arcs[sigma[i]];
        let eps = |i: usize, j: usize| t.epsilon(sigma[i], sigma[j]).expect("six-vertex loop");
        let (e01, e02, e12) = (eps(0, 1), eps(0, 2), eps(1, 2));
        // b, c, d are neighbours of a in the cells they share with it
        for a in 0..search.window.len() {
            let bs: Vec<(usize, [usize; 5])> =
                g.neighbors(a).iter().filter_map(|&b| pentagon_order(g, [x(0), a, e01, e02, b]).map(|p| (b, p))).collect();
            if bs.is_empty() {
                continue;
            }
            let cs: Vec<(usize, [usize; 5])> =
                g.neighbors(a).iter().filter_map(|&c| pentagon_order(g, [x(2), a, e12, e02, c]).map(|p| (c, p))).collect();
            for &(c, p2) in &cs {
                for &d in g.neighbors(a) {
                    let Some(p3) = pentagon_order(g, [x(1), a, e12, d, c]) else { continue };
                    for &(b, p1) in &bs {
                        let aux = [a, b, c, d];
                        if (0..4).any(|i| (i + 1..4).any(|j| aux[i] == aux[j])) {
                            continue;
                        }
                        if let Some(p4) = pentagon_order(g, [x(1), a, e01, d, b]) {
                            let mut f = base(sigma);
                            for (k, v) in [("a", a), ("b", b), ("c", c), ("d", d)] {
                                f.auxiliary.insert(k.into(), v);
                            }
                            f.pentagons = vec![p1, p2, p3, p4];
                            return Some(f);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Shrinks `loop` by cancelling backtracks `u v u`.
fn reduce(mut l: Vec<usize>) -> Vec<usize> {
    loop {
        let n = l.len();
        if n < 3 {
            return Vec::new();
        }
        let Some(i) = (0..n).find(|&i| l[i] == l[(i + 2) % n]) else { return l };
        let (j, k) = ((i + 1) % n, (i + 2) % n);
        // drop l[j] and one copy of l[i]
        let mut drop = [j, k];
        drop.sort_unstable();
        l.remove(drop[1]);
        l.remove(drop[0]);
    }
}

fn rotate_min(l: &[usize]) -> Vec<usize> {
    let n = l.len();
    let mut best: Option<Vec<usize>> = None;
    for r in 0..n {
        for rev in [false, true] {
            let c: Vec<usize> =
                (0..n).map(|i| if rev { l[(r + n - i) % n] } else { l[(r + i) % n] }).collect();
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    best.unwrap_or_default()
}

/// Fills a closed edge path of `g` with at most `max_faces` pentagons.
///
/// Each step glues a pentagon along a run of 1 to 3 consecutive loop edges
/// and recurses on the new loop. The result is a list of pentagons in
/// cyclic order; see [`chain_boundary`] for an independent check.
pub fn fill_loop(g: &Graph, l: &[usize], max_faces: usize) -> Option<Vec<[usize; 5]>> {
    let mut failed = std::collections::HashSet::new();
    fill_rec(g, reduce(l.to_vec()), max_faces, &mut failed)
}

fn fill_rec(
    g: &Graph,
    l: Vec<usize>,
    faces: usize,
    failed: &mut std::collections::HashSet<(Vec<usize>, usize)>,
) -> Option<Vec<[usize; 5]>> {
    let n = l.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if faces == 0 || 5 * faces < n || (faces + n) % 2 == 1 {
        return None;
    }
    let key = (rotate_min(&l), faces);
    if failed.contains(&key) {
        return None;
    }
    // a run of s edges l[r..=r+s] closed by a path of 5 - s new edges
    for s in (1..=3usize.min(n - 1)).rev() {
        for r in 0..n {
            let run: Vec<usize> = (0..=s).map(|i| l[(r + i) % n]).collect();
            let (u, v) = (run[0], run[s]);
            for path in paths(g, v, u, 5 - s) {
                let mut cycle = run.clone();
                cycle.extend_from_slice(&path[1..path.len() - 1]);
                let Ok(c) = <[usize; 5]>::try_from(cycle.as_slice()) else { continue };
                let Some(p) = pentagon_order(g, c) else { continue };
                // the rest of the loop from v round to u, then back through the new path
                let mut next: Vec<usize> = (s..=n).map(|i| l[(r + i) % n]).collect();
                next.extend(path[1..path.len() - 1].iter().rev());
                if let Some(mut rest) = fill_rec(g, reduce(next), faces - 1, failed) {
                    rest.insert(0, p);
                    return Some(rest);
                }
            }
        }
    }
    failed.insert(key);
    None
}

/// Simple paths of exactly `len` edges from `a` to `b`.
fn paths(g: &Graph, a: usize, b: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![a];
    fn go(g: &Graph, b: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *cur.last().unwrap();
        if cur.len() == len + 1 {
            if last == b {
                out.push(cur.clone());
            }
            return;
        }
        if cur.len() == len {
            if g.adjacent(last, b) && !cur[1..].contains(&b) {
                cur.push(b);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        for &x in g.neighbors(last) {
            if x != b && !cur.contains(&x) {
                cur.push(x);
                go(g, b, len, cur, out);
                cur.pop();
            }
        }
    }
    go(g, b, len, &mut cur, &mut out);
    out
}

/// Edges (as sorted pairs) with odd multiplicity in the pentagons.
pub fn chain_boundary(pentagons: &[[usize; 5]]) -> std::collections::BTreeSet<(usize, usize)> {
    let mut odd = std::collections::BTreeSet::new();
    for p in pentagons {
        for i in 0..5 {
            let (a, b) = (p[i], p[(i + 1) % 5]);
            let e = (a.min(b), a.max(b));
            if !odd.remove(&e) {
                odd.insert(e);
            }
        }
    }
    odd
}

/// Edges of a closed path with odd multiplicity.
pub fn loop_edges(l: &[usize]) -> std::collections::BTreeSet<(usize, usize)> {
    let mut odd = std::collections::BTreeSet::new();
    for i in 0..l.len() {
        let (a, b) = (l[i], l[(i + 1) % l.len()]);
        let e = (a.min(b), a.max(b));
        if !odd.remove(&e) {
            odd.insert(e);
        }
    }
    odd
}

/// Independent check of a filling: every cell is an embedded pentagon by
/// intersection numbers, and the cells' mod-2 boundary is the loop.
pub fn certify(search: &ArcSearch<'_>, f: &Filling) -> Result<(), String> {
    for p in &f.pentagons {
        if !validate_pentagon(search, p).map_err(|e| e.to_string())? {
            return Err(format!("cell {p:?} fails the intersection pattern"));
        }
    }
    let expected = if f.boundary.len() < 5 { Default::default() } else { loop_edges(&f.boundary) };
    let got = chain_boundary(&f.pentagons);
    if got != expected {
        return Err(format!("cell boundary {got:?} differs from the loop {expected:?}"));
    }
    if let Some(n) = f.kind.prescribed_pentagons() {
        if n != f.pentagons.len() {
            return Err(format!("{} cells where the construction uses {n}", f.pentagons.len()));
        }
    }
    Ok(())
}

/// JSON with curve ids replaced by labels from the window.
pub fn filling_json(search: &ArcSearch<'_>, t: &TriangleConfig, f: &Filling) -> serde_json::Value {
    let label = |v: usize| serde_json::Value::String(crate::sphere5::window::key_label(&search.window.vertices[v]));
    serde_json::json!({
        "kind": t.kind,
        "pattern": t.pattern,
        "arcs": t.arcs,
        "endpoints": t.arcs.map(|v| search.vertex(v).endpoint_labels()),
        "epsilons": t.epsilons,
        "boundary": f.boundary,
        "auxiliary": f.auxiliary,
        "pentagons": f.pentagons,
        "relabeling": f.relabeling,
        "labels": f.boundary.iter().chain(f.auxiliary.values()).map(|&v| (v.to_string(), label(v))).collect::<serde_json::Map<_, _>>(),
    })
}

//! Finite simple graphs on `0..n`, pentagons and the two-pentagon pattern.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

/// Sorted adjacency lists.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::new(n);
        for (a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    /// Adds `{a, b}`; ignores loops and duplicates.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        if let Err(i) = self.adj[a].binary_search(&b) {
            self.adj[a].insert(i, b);
            let j = self.adj[b].binary_search(&a).unwrap_err();
            self.adj[b].insert(j, a);
        }
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a].binary_search(&b).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, ns) in self.adj.iter().enumerate() {
            for &b in ns {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Breadth-first distances from `s`, `None` where unreachable.
    pub fn distances(&self, s: usize) -> Vec<Option<usize>> {
        let mut d = vec![None; self.len()];
        d[s] = Some(0);
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            let dv = d[v].unwrap();
            for &u in &self.adj[v] {
                if d[u].is_none() {
                    d[u] = Some(dv + 1);
                    q.push_back(u);
                }
            }
        }
        d
    }

    /// `(vertex, distance)` for every vertex within `r` of `s`, in BFS order.
    pub fn bounded_distances(&self, s: usize, r: usize) -> Vec<(usize, usize)> {
        let mut seen = HashMap::from([(s, 0usize)]);
        let mut out = vec![(s, 0)];
        let mut i = 0;
        while i < out.len() {
            let (v, dv) = out[i];
            i += 1;
            if dv == r {
                continue;
            }
            for &u in &self.adj[v] {
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(u) {
                    e.insert(dv + 1);
                    out.push((u, dv + 1));
                }
            }
        }
        out
    }

    /// Vertices at distance at most `r` from `s`, sorted.
    pub fn ball(&self, s: usize, r: usize) -> Vec<usize> {
        let mut b: Vec<usize> = self.bounded_distances(s, r).into_iter().map(|(v, _)| v).collect();
        b.sort_unstable();
        b
    }

    /// All chordless 5-cycles, each as `[v0, v1, v2, v3, v4]` in cyclic order
    /// with `v0` minimal and `v1 < v4`; sorted.
    pub fn pentagons(&self) -> Vec<[usize; 5]> {
        let mut out = Vec::new();
        for v0 in 0..self.len() {
            for &v1 in &self.adj[v0] {
                if v1 < v0 {
                    continue;
                }
                for &v2 in &self.adj[v1] {
                    if v2 <= v0 || v2 == v1 || self.adjacent(v2, v0) {
                        continue;
                    }
                    for &v3 in &self.adj[v2] {
                        if v3 <= v0 || v3 == v1 || self.adjacent(v3, v0) || self.adjacent(v3, v1) {
                            continue;
                        }
                        for &v4 in &self.adj[v3] {
                            if v4 <= v1
                                || v4 == v2
                                || !self.adjacent(v4, v0)
                                || self.adjacent(v4, v1)
                                || self.adjacent(v4, v2)
                            {
                                continue;
                            }
                            out.push([v0, v1, v2, v3, v4]);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Is `c` a chordless 5-cycle in this graph (in the given cyclic order)?
    pub fn is_pentagon(&self, c: &[usize; 5]) -> bool {
        let distinct: BTreeSet<_> = c.iter().collect();
        if distinct.len() != 5 {
            return false;
        }
        (0..5).all(|i| self.adjacent(c[i], c[(i + 1) % 5]) && !self.adjacent(c[i], c[(i + 2) % 5]))
    }
}

/// Canonical rotation/reflection of a 5-cycle.
pub fn canonical_cycle(c: [usize; 5]) -> [usize; 5] {
    let k = (0..5).min_by_key(|&i| c[i]).unwrap();
    let fwd: [usize; 5] = std::array::from_fn(|i| c[(k + i) % 5]);
    let bwd: [usize; 5] = std::array::from_fn(|i| c[(k + 5 - i) % 5]);
    fwd.min(bwd)
}

/// Index from consecutive triples `(x, y, z)` (path `x - y - z`) to the
/// pentagons containing them.
pub struct PentagonIndex {
    by_path: HashMap<(usize, usize, usize), Vec<usize>>,
    pub pentagons: Vec<[usize; 5]>,
}

impl PentagonIndex {
    pub fn new(pentagons: Vec<[usize; 5]>) -> Self {
        let mut by_path: HashMap<(usize, usize, usize), Vec<usize>> = HashMap::new();
        for (pi, p) in pentagons.iter().enumerate() {
            for i in 0..5 {
                let (x, y, z) = (p[i], p[(i + 1) % 5], p[(i + 2) % 5]);
                by_path.entry((x, y, z)).or_default().push(pi);
                by_path.entry((z, y, x)).or_default().push(pi);
            }
        }
        Self { by_path, pentagons }
    }

    pub fn through(&self, x: usize, y: usize, z: usize) -> &[usize] {
        self.by_path.get(&(x, y, z)).map_or(&[], Vec::as_slice)
    }
}

/// One detecting configuration: pentagons `P'` through `alpha - delta - gamma`
/// and `P''` through `beta - delta - gamma`, sharing the edge `delta gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Detection {
    pub gamma: usize,
    pub delta: usize,
    pub p1: [usize; 5],
    pub p2: [usize; 5],
}

/// All `gamma` detected from `(alpha, beta)`, with one witness configuration
/// each (the first in vertex order).
///
/// Pattern: `delta` is a common neighbour of `alpha` and `beta`; `gamma` is a
/// neighbour of `delta` adjacent to neither; some pentagon `P'` contains the
/// path `alpha - delta - gamma` and some pentagon `P''` contains
/// `beta - delta - gamma`, so that `P'` and `P''` share the edge `delta gamma`.
pub fn detect_two_pentagon(g: &Graph, idx: &PentagonIndex, alpha: usize, beta: usize) -> Vec<Detection> {
    let mut out: Vec<Detection> = Vec::new();
    for &delta in g.neighbors(alpha) {
        if !g.adjacent(delta, beta) {
            continue;
        }
        for &gamma in g.neighbors(delta) {
            if gamma == alpha || gamma == beta || g.adjacent(gamma, alpha) || g.adjacent(gamma, beta) {
                continue;
            }
            if out.iter().any(|d| d.gamma == gamma) {
                continue;
            }
            let first = idx.through(alpha, delta, gamma);
            let second = idx.through(beta, delta, gamma);
            for &p in first {
                // P' and P'' must be distinct pentagons.
                if let Some(&q) = second.iter().find(|&&q| q != p) {
                    out.push(Detection { gamma, delta, p1: idx.pentagons[p], p2: idx.pentagons[q] });
                    break;
                }
            }
        }
    }
    out.sort_by_key(|d| d.gamma);
    out
}

//! Verification suites over a window and its quotient.
//!
//! Relations between members of one class are checked through the
//! transport elements, which are genuine elements of the subgroup, so a
//! reported violation at an eligible site is a violation of the statement
//! for the subgroup generated by the sample.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde_json::json;

use super::instance::{Instance, S5Instance};
use super::report::Report;
use super::QuotientWindow;
use crate::graph::{canonical_cycle, detect_two_pentagon, Graph, PentagonIndex};
use crate::sphere5::halftwist::half_twist_of;
use crate::sphere5::window::{curve_at, CurveWindow};
use crate::window::Window;

pub const SIMPLICIAL_THRESHOLD: u64 = 3;
pub const LARGE_THRESHOLD: u64 = 8;
pub const HT_THRESHOLD: u64 = 8;

/// Sites whose radius-`r` window ball is seen in full by every
/// identification touching it.
///
/// `x` is eligible when for every `y` in `B(x, r)` and every other member
/// `y'` of its class, the element `g` carrying `y` to `y'` maps `B(x, r)`
/// onto `B(g x, r)` inside the window. Otherwise some translate of the ball
/// is cut by the window boundary and the quotient near `x` is not fully
/// visible.
#[derive(Clone, Debug)]
pub struct Eligibility {
    pub radius: usize,
    pub eligible: Vec<bool>,
}

impl Eligibility {
    pub fn compute<I: Instance>(inst: &I, w: &Window<I::Key>, q: &QuotientWindow<I::Element>, radius: usize) -> Self {
        let eligible = (0..w.len())
            .into_par_iter()
            .map(|x| {
                let ball = w.graph.ball(x, radius);
                for &y in &ball {
                    let class = &q.classes[q.class_of[y]];
                    if class.len() == 1 {
                        continue;
                    }
                    for &y2 in class {
                        if y2 == y {
                            continue;
                        }
                        let Some(g) = q.transport_between(inst, y, y2) else { return false };
                        let Some(gx) = inst.apply(&g, &w.vertices[x]).and_then(|k| w.index_of(&k)) else {
                            return false;
                        };
                        let mut image = Vec::with_capacity(ball.len());
                        for &b in &ball {
                            match inst.apply(&g, &w.vertices[b]).and_then(|k| w.index_of(&k)) {
                                Some(i) => image.push(i),
                                None => return false,
                            }
                        }
                        image.sort_unstable();
                        if image != w.graph.ball(gx, radius) {
                            return false;
                        }
                    }
                }
                true
            })
            .collect();
        Self { radius, eligible }
    }

    pub fn count(&self) -> usize {
        self.eligible.iter().filter(|&&e| e).count()
    }

    pub fn truncated(&self) -> usize {
        self.eligible.len() - self.count()
    }
}

/// No loops and no parallel edges.
///
/// Two window edges with the same pair of end classes are parallel in the
/// quotient unless the element carrying one tail to the other also carries
/// the heads; with trivial stabilisers that element is unique.
pub fn check_simplicial<I: Instance>(inst: &I, w: &Window<I::Key>, q: &QuotientWindow<I::Element>) -> Report {
    let mut witnesses = Vec::new();
    for &(a, b) in &q.loops {
        witnesses.push(json!({
            "kind": "loop",
            "edge": [inst.label(&w.vertices[a]), inst.label(&w.vertices[b])],
            "class": q.class_of[a],
        }));
    }
    for &(v, e) in &q.fixed {
        witnesses.push(json!({
            "kind": "fixed-vertex",
            "vertex": inst.label(&w.vertices[v]),
            "element": q.displacement[e].word,
        }));
    }
    let groups = edge_groups(w, q);
    let mut edges_checked = 0;
    for lifts in groups.values() {
        edges_checked += 1;
        let orbits = lift_orbits(inst, w, q, lifts);
        if orbits.len() > 1 {
            let shown: Vec<_> = orbits.iter().map(|o| labels(inst, w, &lifts[o[0]])).collect();
            witnesses.push(json!({ "kind": "parallel-edges", "lifts": shown }));
        }
    }
    Report::conclude("simplicial", Some(SIMPLICIAL_THRESHOLD), q.min_displacement(), edges_checked, 0, witnesses)
        .with_count("loops", q.loops.len())
        .with_count("classes", q.classes.len())
        .with_count("identifications", q.identifications.len())
}

/// (a) window edges map to edges; (b) at every eligible vertex each
/// quotient edge at its class lifts to an edge at the vertex, and class
/// members see translated neighbourhoods (so paths of any length lift edge
/// by edge while they stay among eligible vertices); (c) quotient geodesics
/// of length 2 lift to paths whose endpoints are at true distance 2.
pub fn verify_lipschitz_and_lifting<I: Instance>(
    inst: &I,
    w: &Window<I::Key>,
    q: &QuotientWindow<I::Element>,
) -> Report {
    let mut witnesses: Vec<serde_json::Value> = q
        .loops
        .iter()
        .map(|&(a, b)| json!({ "kind": "edge-collapsed", "edge": [inst.label(&w.vertices[a]), inst.label(&w.vertices[b])] }))
        .collect();
    let star = Eligibility::compute(inst, w, q, 1);
    let ball = Eligibility::compute(inst, w, q, 2);
    let per_site: Vec<Vec<serde_json::Value>> = (0..w.len())
        .into_par_iter()
        .map(|x| {
            let mut out = Vec::new();
            let cx = q.class_of[x];
            if star.eligible[x] {
                for &c in q.graph.neighbors(cx) {
                    if !w.graph.neighbors(x).iter().any(|&y| q.class_of[y] == c) {
                        out.push(json!({
                            "kind": "edge-not-lifted",
                            "vertex": inst.label(&w.vertices[x]),
                            "class": c,
                        }));
                    }
                }
                for &x2 in &q.classes[cx] {
                    if x2 == x {
                        continue;
                    }
                    let Some(g) = q.transport_between(inst, x, x2) else { continue };
                    for &y in w.graph.neighbors(x) {
                        let gy = inst.apply(&g, &w.vertices[y]).and_then(|k| w.index_of(&k));
                        if !gy.is_some_and(|gy| w.graph.adjacent(x2, gy) && q.class_of[gy] == q.class_of[y]) {
                            out.push(json!({
                                "kind": "lift-not-translated",
                                "from": inst.label(&w.vertices[x]),
                                "to": inst.label(&w.vertices[x2]),
                                "neighbour": inst.label(&w.vertices[y]),
                            }));
                        }
                    }
                }
            }
            if ball.eligible[x] {
                out.extend(lift_length_two_geodesics(inst, w, q, x));
            }
            out
        })
        .collect();
    witnesses.extend(per_site.into_iter().flatten());
    Report::conclude("lift", Some(LARGE_THRESHOLD), q.min_displacement(), star.count(), star.truncated(), witnesses)
        .with_count("geodesic-sites", ball.count())
}

fn lift_length_two_geodesics<I: Instance>(
    inst: &I,
    w: &Window<I::Key>,
    q: &QuotientWindow<I::Element>,
    x: usize,
) -> Vec<serde_json::Value> {
    let mut out = Vec::new();
    let cx = q.class_of[x];
    let near: HashSet<usize> = q.graph.bounded_distances(cx, 1).into_iter().map(|(c, _)| c).collect();
    let mut done = HashSet::new();
    for &cy in q.graph.neighbors(cx) {
        for &cz in q.graph.neighbors(cy) {
            if near.contains(&cz) || !done.insert(cz) {
                continue;
            }
            // Lift edge by edge from x.
            let lifted = w
                .graph
                .neighbors(x)
                .iter()
                .filter(|&&y| q.class_of[y] == cy)
                .find_map(|&y| w.graph.neighbors(y).iter().find(|&&z| q.class_of[z] == cz).copied());
            match lifted {
                None => out.push(json!({
                    "kind": "geodesic-not-lifted",
                    "start": inst.label(&w.vertices[x]),
                    "end-class": cz,
                })),
                Some(z) => {
                    let d = inst.distance(&w.vertices[x], &w.vertices[z]);
                    if d.lower() != 2 {
                        out.push(json!({
                            "kind": "geodesic-lift-short",
                            "start": inst.label(&w.vertices[x]),
                            "end": inst.label(&w.vertices[z]),
                            "distance": d.lower(),
                        }));
                    }
                }
            }
        }
    }
    out
}

/// Injectivity on `B(x, 2)` and no quotient shortcut between its points.
///
/// The projection of a window path bounds quotient distance from above and
/// window distance bounds true distance from above, so the only possible
/// violation is a pair whose quotient distance is below its window
/// distance; for those the true distance is computed and compared.
pub fn verify_ball2_isometry<I: Instance>(inst: &I, w: &Window<I::Key>, q: &QuotientWindow<I::Element>) -> Report {
    const CAP: usize = 4;
    let el = Eligibility::compute(inst, w, q, 2);
    let window_rows = capped_rows(&w.graph, CAP);
    let quotient_rows = capped_rows(&q.graph, CAP);
    let per_site: Vec<Vec<serde_json::Value>> = (0..w.len())
        .into_par_iter()
        .filter(|&x| el.eligible[x])
        .map(|x| {
            let mut out = Vec::new();
            let ball = w.graph.ball(x, 2);
            let mut seen: HashMap<usize, usize> = HashMap::new();
            for &y in &ball {
                if let Some(&y0) = seen.get(&q.class_of[y]) {
                    out.push(json!({
                        "kind": "collapse",
                        "site": inst.label(&w.vertices[x]),
                        "pair": [inst.label(&w.vertices[y0]), inst.label(&w.vertices[y])],
                    }));
                } else {
                    seen.insert(q.class_of[y], y);
                }
            }
            for (i, &y) in ball.iter().enumerate() {
                let (wr, qr) = (&window_rows[y], &quotient_rows[q.class_of[y]]);
                for &z in &ball[i + 1..] {
                    let dq = qr[q.class_of[z]];
                    if dq >= wr[z] {
                        continue;
                    }
                    let d = inst.distance(&w.vertices[y], &w.vertices[z]).lower();
                    if (dq as u64) < d {
                        out.push(json!({
                            "kind": "shortcut",
                            "site": inst.label(&w.vertices[x]),
                            "pair": [inst.label(&w.vertices[y]), inst.label(&w.vertices[z])],
                            "distance": d,
                            "quotient-distance": dq,
                        }));
                    }
                }
            }
            out
        })
        .collect();
    Report::conclude(
        "ball2",
        Some(LARGE_THRESHOLD),
        q.min_displacement(),
        el.count(),
        el.truncated(),
        per_site.into_iter().flatten().collect(),
    )
}

/// Distances capped at `cap + 1` from every vertex.
fn capped_rows(g: &Graph, cap: usize) -> Vec<Vec<u8>> {
    (0..g.len())
        .into_par_iter()
        .map(|s| {
            let mut row = vec![(cap + 1) as u8; g.len()];
            for (v, d) in g.bounded_distances(s, cap) {
                row[v] = d as u8;
            }
            row
        })
        .collect()
}

/// The star of each eligible vertex (neighbours and adjacent pairs of
/// neighbours) maps isomorphically onto the star of its class.
pub fn verify_local_covering<I: Instance>(inst: &I, w: &Window<I::Key>, q: &QuotientWindow<I::Element>) -> Report {
    let el = Eligibility::compute(inst, w, q, 1);
    let per_site: Vec<Vec<serde_json::Value>> = (0..w.len())
        .into_par_iter()
        .filter(|&x| el.eligible[x])
        .map(|x| {
            let mut out = Vec::new();
            let site = inst.label(&w.vertices[x]);
            let cx = q.class_of[x];
            let nbrs = w.graph.neighbors(x);
            let img: BTreeSet<usize> = nbrs.iter().map(|&y| q.class_of[y]).collect();
            if img.len() != nbrs.len() || img.contains(&cx) {
                let mut by_class: BTreeMap<usize, Vec<String>> = BTreeMap::new();
                for &y in nbrs {
                    by_class.entry(q.class_of[y]).or_default().push(inst.label(&w.vertices[y]));
                }
                let collapsed: Vec<_> = by_class.into_values().filter(|v| v.len() > 1).collect();
                out.push(json!({ "kind": "star-collapse", "site": site, "collapsed": collapsed }));
            }
            let qn: BTreeSet<usize> = q.graph.neighbors(cx).iter().copied().collect();
            if qn != img {
                let extra: Vec<usize> = qn.difference(&img).copied().collect();
                out.push(json!({ "kind": "extra-quotient-neighbour", "site": site, "classes": extra }));
            }
            for (i, &y) in nbrs.iter().enumerate() {
                for &z in &nbrs[i + 1..] {
                    let (cy, cz) = (q.class_of[y], q.class_of[z]);
                    if cy != cz && w.graph.adjacent(y, z) != q.graph.adjacent(cy, cz) {
                        out.push(json!({
                            "kind": "triangle-mismatch",
                            "site": site,
                            "pair": [inst.label(&w.vertices[y]), inst.label(&w.vertices[z])],
                        }));
                    }
                }
            }
            out
        })
        .collect();
    Report::conclude(
        "covering",
        Some(LARGE_THRESHOLD),
        q.min_displacement(),
        el.count(),
        el.truncated(),
        per_site.into_iter().flatten().collect(),
    )
}

/// Quotient subgraphs of diameter at most 2 whose lifts are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftTarget {
    Vertices,
    Edges,
    Triangles,
    Pentagons,
}

/// All in-window lifts of each tested quotient subgraph lie in one orbit.
pub fn verify_unique_lift_orbit<I: Instance>(
    inst: &I,
    w: &Window<I::Key>,
    q: &QuotientWindow<I::Element>,
    targets: &[LiftTarget],
) -> Report {
    let mut witnesses = Vec::new();
    let mut checked = 0;
    let mut truncated = 0;
    let mut report_counts = BTreeMap::new();
    for &t in targets {
        let (name, groups): (&str, BTreeMap<Vec<usize>, Vec<Vec<usize>>>) = match t {
            LiftTarget::Vertices => {
                ("vertices", q.classes.iter().enumerate().map(|(c, m)| (vec![c], m.iter().map(|&v| vec![v]).collect())).collect())
            }
            LiftTarget::Edges => ("edges", edge_groups(w, q)),
            LiftTarget::Triangles => ("triangles", group_by_projection(q, window_triangles(&w.graph))),
            LiftTarget::Pentagons => {
                let ups = w.graph.pentagons().into_iter().map(|p| p.to_vec()).collect();
                let groups = group_by_projection(q, ups);
                let down = q.graph.pentagons().len();
                truncated += down.saturating_sub(groups.len());
                ("pentagons", groups)
            }
        };
        let mut orbit_total = 0;
        for (key, lifts) in &groups {
            checked += 1;
            let orbits = lift_orbits(inst, w, q, lifts);
            orbit_total += orbits.len();
            if orbits.len() > 1 {
                witnesses.push(json!({
                    "kind": name,
                    "classes": key,
                    "orbits": orbits.iter().map(|o| labels(inst, w, &lifts[o[0]])).collect::<Vec<_>>(),
                }));
            }
        }
        report_counts.insert(format!("{name}-classes"), groups.len());
        report_counts.insert(format!("{name}-orbits"), orbit_total);
    }
    let mut r = Report::conclude("unique-lift", Some(LARGE_THRESHOLD), q.min_displacement(), checked, truncated, witnesses);
    r.counts = report_counts;
    r
}

/// Window pentagons project to quotient pentagons; quotient pentagons with
/// a radius-2 eligible member lift.
pub fn transfer_pentagons<I: Instance>(inst: &I, w: &Window<I::Key>, q: &QuotientWindow<I::Element>) -> Report {
    let mut witnesses = Vec::new();
    let ups = w.graph.pentagons();
    let mut lifted: BTreeMap<[usize; 5], Vec<Vec<usize>>> = BTreeMap::new();
    for p in &ups {
        let img = p.map(|v| q.class_of[v]);
        if !q.graph.is_pentagon(&img) {
            witnesses.push(json!({ "kind": "projection-not-pentagon", "pentagon": labels(inst, w, p) }));
            continue;
        }
        lifted.entry(canonical_cycle(img)).or_default().push(p.to_vec());
    }
    let el = Eligibility::compute(inst, w, q, 2);
    let downs = q.graph.pentagons();
    let (mut eligible, mut truncated, mut orbits) = (0, 0, 0);
    for d in &downs {
        let see = d.iter().any(|&c| q.classes[c].iter().any(|&v| el.eligible[v]));
        match lifted.get(d) {
            Some(lifts) => {
                eligible += 1;
                orbits += lift_orbits(inst, w, q, lifts).len();
            }
            None if see => {
                eligible += 1;
                witnesses.push(json!({ "kind": "pentagon-not-lifted", "classes": d }));
            }
            None => truncated += 1,
        }
    }
    if orbits != lifted.len() {
        witnesses.push(json!({ "kind": "orbit-count", "lift-orbits": orbits, "lifted-pentagons": lifted.len() }));
    }
    Report::conclude("transfer", Some(LARGE_THRESHOLD), q.min_displacement(), eligible, truncated, witnesses)
        .with_count("window-pentagons", ups.len())
        .with_count("quotient-pentagons", downs.len())
        .with_count("lift-orbits", orbits)
}

/// Two-pentagon detection in the quotient graph compared with the projected
/// half-twist images of lifts.
///
/// For a quotient pentagon with an in-window lift and an ordered
/// non-adjacent pair `(a, b)` in it, the expected set is the classes of
/// `H_b(a)` and `H_b^-1(a)`. A detected class outside that set is a
/// violation; an expected class that is missing (pentagons cut by the
/// window) makes the configuration truncated.
pub fn detect_half_twists_quotient(
    inst: &S5Instance,
    w: &CurveWindow,
    q: &QuotientWindow<<S5Instance as Instance>::Element>,
) -> Report {
    let qidx = PentagonIndex::new(q.graph.pentagons());
    let uidx = PentagonIndex::new(w.graph.pentagons());
    let ups = w.graph.pentagons();
    let mut lift_of: BTreeMap<[usize; 5], [usize; 5]> = BTreeMap::new();
    for p in &ups {
        let img = p.map(|v| q.class_of[v]);
        if q.graph.is_pentagon(&img) {
            lift_of.entry(canonical_cycle(img)).or_insert(*p);
        }
    }
    let configs: Vec<(usize, usize)> = lift_of
        .values()
        .flat_map(|p| (0..5).flat_map(move |i| [(p[i], p[(i + 2) % 5]), (p[(i + 2) % 5], p[i])]))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let results: Vec<(bool, Vec<serde_json::Value>)> = configs
        .par_iter()
        .map(|&(a, b)| {
            let mut out = Vec::new();
            let (ca, cb) = (q.class_of[a], q.class_of[b]);
            let detected: BTreeSet<usize> = detect_two_pentagon(&q.graph, &qidx, ca, cb).iter().map(|d| d.gamma).collect();
            let upstairs: BTreeSet<usize> = detect_two_pentagon(&w.graph, &uidx, a, b).iter().map(|d| q.class_of[d.gamma]).collect();
            let (alpha, beta) = (curve_at(w, a), curve_at(w, b));
            let mut expected = BTreeSet::new();
            let mut complete = true;
            for sign in [1, -1] {
                match half_twist_of(&beta, &alpha, sign) {
                    Ok(c) => match w.index_of(&c.coords) {
                        Some(i) => {
                            expected.insert(q.class_of[i]);
                        }
                        None => complete = false,
                    },
                    Err(e) => out.push(json!({ "kind": "half-twist-error", "pair": [a, b], "error": e.to_string() })),
                }
            }
            let label = |v: usize| inst.label(&w.vertices[v]);
            if complete && expected.len() != 2 {
                out.push(json!({ "kind": "twists-collapse", "alpha": label(a), "beta": label(b) }));
            }
            if !detected.is_subset(&expected) {
                out.push(json!({
                    "kind": "unexpected-detection",
                    "alpha": label(a),
                    "beta": label(b),
                    "detected": detected,
                    "expected": expected,
                }));
            }
            if !upstairs.is_subset(&detected) {
                out.push(json!({ "kind": "upstairs-not-projected", "alpha": label(a), "beta": label(b) }));
            }
            (complete && detected == expected, out)
        })
        .collect();
    let eligible = results.iter().filter(|r| r.0).count();
    let truncated = results.len() - eligible;
    let witnesses = results.into_iter().flat_map(|r| r.1).collect();
    Report::conclude("ht-quotient", Some(HT_THRESHOLD), q.min_displacement(), eligible, truncated, witnesses)
        .with_count("configurations", configs.len())
}

/// Complexity-two structure of the window.
///
/// (a) no three pairwise disjoint curves; (b) every quotient edge has
/// adjacent representatives; (c) distinct vertices have distinct in-window
/// links, coincidences counted as truncation; (d) every curve has two
/// distinct neighbours, giving two pants decompositions meeting exactly in
/// it (counted as truncated when the window shows fewer).
pub fn check_support_sets<I: Instance>(inst: &I, w: &Window<I::Key>, q: &QuotientWindow<I::Element>) -> Report {
    let mut witnesses = Vec::new();
    for t in window_triangles(&w.graph) {
        witnesses.push(json!({ "kind": "three-disjoint", "curves": labels(inst, w, &t) }));
    }
    for (a, b) in q.graph.edges() {
        let ok = q.classes[a].iter().any(|&x| w.graph.neighbors(x).iter().any(|&y| q.class_of[y] == b));
        if !ok {
            witnesses.push(json!({ "kind": "orthogonal-without-representatives", "classes": [a, b] }));
        }
    }
    let mut links: HashMap<&[usize], usize> = HashMap::new();
    let mut shared_links = 0;
    for x in 0..w.len() {
        if let Some(_other) = links.insert(w.graph.neighbors(x), x) {
            shared_links += 1;
        }
    }
    let thin = (0..w.len()).filter(|&x| w.graph.neighbors(x).len() < 2).count();
    Report::conclude("support", None, q.min_displacement(), w.len() - thin, thin, witnesses)
        .with_count("shared-links", shared_links)
        .with_count("pants-decompositions", w.graph.edge_count())
}

fn labels<I: Instance>(inst: &I, w: &Window<I::Key>, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| inst.label(&w.vertices[v])).collect()
}

fn window_triangles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for &c in g.neighbors(b) {
            if c > b && g.adjacent(a, c) {
                out.push(vec![a, b, c]);
            }
        }
    }
    out
}

/// Window edges grouped by their sorted pair of end classes.
fn edge_groups<K, E: Clone>(w: &Window<K>, q: &QuotientWindow<E>) -> BTreeMap<Vec<usize>, Vec<Vec<usize>>> {
    let edges = w.graph.edges().into_iter().filter(|&(a, b)| q.class_of[a] != q.class_of[b]).map(|(a, b)| vec![a, b]).collect();
    group_by_projection(q, edges)
}

fn group_by_projection<E: Clone>(q: &QuotientWindow<E>, lifts: Vec<Vec<usize>>) -> BTreeMap<Vec<usize>, Vec<Vec<usize>>> {
    let mut groups: BTreeMap<Vec<usize>, Vec<Vec<usize>>> = BTreeMap::new();
    for l in lifts {
        let mut key: Vec<usize> = l.iter().map(|&v| q.class_of[v]).collect();
        key.sort_unstable();
        key.dedup();
        if key.len() == l.len() {
            groups.entry(key).or_default().push(l);
        }
    }
    groups
}

/// Partition of lifts (vertex lists with the same class multiset) into
/// orbits; each orbit lists indices into `lifts`.
fn lift_orbits<I: Instance>(inst: &I, w: &Window<I::Key>, q: &QuotientWindow<I::Element>, lifts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for (i, l) in lifts.iter().enumerate() {
        let found = orbits.iter_mut().find(|o| related(inst, w, q, &lifts[o[0]], l));
        match found {
            Some(o) => o.push(i),
            None => orbits.push(vec![i]),
        }
    }
    orbits
}

fn related<I: Instance>(inst: &I, w: &Window<I::Key>, q: &QuotientWindow<I::Element>, a: &[usize], b: &[usize]) -> bool {
    let a0 = a[0];
    let Some(&b0) = b.iter().find(|&&v| q.class_of[v] == q.class_of[a0]) else { return false };
    let Some(g) = q.transport_between(inst, a0, b0) else { return false };
    let mut img = Vec::with_capacity(a.len());
    for &v in a {
        match inst.apply(&g, &w.vertices[v]).and_then(|k| w.index_of(&k)) {
            Some(i) => img.push(i),
            None => return false,
        }
    }
    img.sort_unstable();
    let mut bs = b.to_vec();
    bs.sort_unstable();
    img == bs
}

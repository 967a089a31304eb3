use std::collections::BTreeMap;
use std::sync::OnceLock;

use curvelab::arc2::*;
use curvelab::sphere5::base::{base_coords, base_curve};
use curvelab::sphere5::encoding::Coords;
use curvelab::sphere5::generators::Generators;
use curvelab::sphere5::intersection::intersection_number;
use curvelab::sphere5::window::{build_window, curve_at, CurveWindow};
use curvelab::sphere5::word::{Letter, Word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn search_window() -> &'static CurveWindow {
    static W: OnceLock<CurveWindow> = OnceLock::new();
    W.get_or_init(|| build_window(5))
}

fn small_ids() -> Vec<usize> {
    let big = search_window();
    build_window(2).vertices.iter().map(|k| big.index_of(k).unwrap()).collect()
}

fn id(c: Coords) -> usize {
    search_window().index_of(&c).expect("curve in the search window")
}

#[test]
fn base_endpoints_form_a_five_cycle() {
    let masks: Vec<u8> = (0..5).map(|j| endpoints(&base_coords(j)).unwrap()).collect();
    assert_eq!(masks, vec![0b00011, 0b01100, 0b10001, 0b00110, 0b11000]);
    for j in 0..5 {
        assert_eq!(shared_endpoints(masks[j], masks[(j + 1) % 5]), 0);
        assert_eq!(shared_endpoints(masks[j], masks[(j + 2) % 5]), 1);
    }
    let mut punctures = [0; 5];
    for m in masks {
        for (p, count) in punctures.iter_mut().enumerate() {
            *count += (m >> p) & 1;
        }
    }
    assert_eq!(punctures, [2; 5]);
}

fn puncture_permutation(l: Letter) -> [u8; 5] {
    let g = Generators::get();
    let before: Vec<u8> = (0..5).map(|j| endpoints(&base_coords(j)).unwrap()).collect();
    let after: Vec<u8> = (0..5).map(|j| endpoints(&g.apply_letter(l, &base_coords(j))).unwrap()).collect();
    std::array::from_fn(|p| {
        let hits: Vec<usize> = (0..5).filter(|&j| before[j] >> p & 1 == 1).collect();
        let common = after[hits[0]] & after[hits[1]];
        assert_eq!(common.count_ones(), 1);
        common.trailing_zeros() as u8
    })
}

#[test]
fn endpoints_are_equivariant() {
    let g = Generators::get();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for l in Letter::ALL {
        let pi = puncture_permutation(l);
        let mut seen = pi;
        seen.sort_unstable();
        assert_eq!(seen, [0, 1, 2, 3, 4]);
        for _ in 0..40 {
            let w = Word::random(&mut rng, 6);
            let c = g.apply_word(&w, &base_coords(rand::Rng::gen_range(&mut rng, 0..5)));
            let m = endpoints(&c).unwrap();
            let moved = (0..5).filter(|&p| m >> p & 1 == 1).fold(0u8, |acc, p| acc | 1 << pi[p]);
            assert_eq!(endpoints(&g.apply_letter(l, &c)).unwrap(), moved, "{l} on {c:?}");
        }
    }
}

#[test]
fn disjoint_curves_have_different_endpoints() {
    let w = build_window(2);
    let masks: Vec<u8> = w.vertices.iter().map(|c| endpoints(c).unwrap()).collect();
    for (a, b) in w.graph.edges() {
        assert_ne!(masks[a], masks[b]);
    }
}

#[test]
fn disjoint_interiors_match_the_intersection_count() {
    // i = 4k + 2s, so i is congruent to 2s mod 4 for every pair
    let w = build_window(2);
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            let (x, y) = (Arc2Vertex::new(curve_at(&w, a)).unwrap(), Arc2Vertex::new(curve_at(&w, b)).unwrap());
            let i = intersection_number(&x.curve, &y.curve).unwrap();
            let s = shared_endpoints(x.endpoints, y.endpoints) as i64;
            assert!(i >= 2 * s && (i - 2 * s) % 4 == 0, "{a} {b}: i = {i}, s = {s}");
        }
    }
}

#[test]
fn epsilon_is_unique_symmetric_and_disjoint() {
    let s = ArcSearch::new(search_window()).unwrap();
    let ids = small_ids();
    let mut checked = 0;
    for (k, &a) in ids.iter().enumerate() {
        for &b in &ids[k + 1..] {
            let (x, y) = (s.vertex(a), s.vertex(b));
            if !interiors_disjoint(&x, &y).unwrap() {
                continue;
            }
            if shared_endpoints(x.endpoints, y.endpoints) == 0 {
                assert_eq!(s.epsilon_arc(a, b), Err(Arc2Error::DisjointEndpoints));
                continue;
            }
            let e = s.epsilon_arc(a, b).unwrap();
            assert_eq!(s.epsilon_arc(b, a), Ok(e));
            let ev = s.vertex(e);
            assert_eq!(intersection_number(&ev.curve, &x.curve).unwrap(), 0);
            assert_eq!(intersection_number(&ev.curve, &y.curve).unwrap(), 0);
            assert_eq!(ev.endpoints & (x.endpoints | y.endpoints), 0);
            checked += 1;
        }
    }
    // 291 pairs share one endpoint (i = 2) and 47 share both (i = 4)
    assert_eq!(checked, 338);
}

#[test]
fn epsilon_of_base_pair_is_the_middle_curve() {
    // c1 and c3 meet twice; c2 is their only common neighbour
    let s = ArcSearch::new(search_window()).unwrap();
    let (x, y) = (Arc2Vertex::new(base_curve(0)).unwrap(), Arc2Vertex::new(base_curve(2)).unwrap());
    let e = epsilon_arc(&s, &x, &y).unwrap();
    assert_eq!(e.curve.coords, base_coords(1));
}

fn survey() -> &'static BTreeMap<Kind, Vec<(TriangleConfig, Filling)>> {
    static S: OnceLock<BTreeMap<Kind, Vec<(TriangleConfig, Filling)>>> = OnceLock::new();
    S.get_or_init(|| {
        let s = ArcSearch::new(search_window()).unwrap();
        let mut out: BTreeMap<Kind, Vec<_>> = BTreeMap::new();
        for t in s.triangles(&small_ids()).unwrap() {
            let c = classify(&s, t).unwrap();
            let f = fill_triangle(&s, &c).unwrap();
            out.entry(c.kind).or_default().push((c, f));
        }
        out
    })
}

#[test]
fn window_two_triangles_by_kind() {
    let counts: BTreeMap<Kind, usize> = survey().iter().map(|(k, v)| (*k, v.len())).collect();
    let expected = BTreeMap::from([
        (Kind::Case1, 94),
        (Kind::Case2, 356),
        (Kind::Case3, 94),
        (Kind::Case4, 338),
        (Kind::Case5, 16),
        (Kind::CycleSeparated, 84),
        (Kind::Pentagon, 733),
        (Kind::Degenerate, 264),
    ]);
    assert_eq!(counts, expected);
}

#[test]
fn every_filling_certifies() {
    let s = ArcSearch::new(search_window()).unwrap();
    for (kind, items) in survey() {
        for (c, f) in items {
            certify(&s, f).unwrap_or_else(|e| panic!("{kind:?} {:?}: {e}", c.arcs));
            let unique: std::collections::BTreeSet<usize> = f.boundary.iter().copied().collect();
            assert_eq!(unique.len(), f.boundary.len());
            match kind {
                Kind::Case1 | Kind::Case3 => assert_eq!(f.boundary.len(), 4),
                Kind::Pentagon => assert_eq!(f.boundary.len(), 5),
                Kind::Degenerate => assert!(f.boundary.len() <= 4),
                _ => assert_eq!(f.boundary.len(), 6),
            }
        }
    }
}

#[test]
fn tripods_have_a_single_connector() {
    for kind in [Kind::Case1, Kind::Case3] {
        for (c, f) in &survey()[&kind] {
            assert!(c.epsilons[0].is_some() && c.epsilons.iter().all(|e| *e == c.epsilons[0]));
            assert!(f.pentagons.is_empty());
            let centre = c.epsilons[0].unwrap();
            for x in c.arcs {
                assert!(search_window().graph.adjacent(centre, x));
            }
        }
    }
}

#[test]
fn two_pentagon_fillings_share_two_edges() {
    for kind in [Kind::Case2, Kind::Case4] {
        for (_, f) in &survey()[&kind] {
            let z = f.auxiliary["z"];
            let [p, q] = [f.pentagons[0], f.pentagons[1]];
            let common: Vec<usize> = p.iter().copied().filter(|v| q.contains(v)).collect();
            assert_eq!(common.len(), 3);
            assert!(common.contains(&z));
        }
    }
}

#[test]
fn four_pentagon_filling_has_the_listed_membership() {
    for (c, f) in &survey()[&Kind::Case5] {
        let x = |i: usize| c.arcs[f.relabeling[i]];
        let e = |i: usize, j: usize| c.epsilon(f.relabeling[i], f.relabeling[j]).unwrap();
        let aux = |k: &str| f.auxiliary[k];
        let expected = [
            [x(0), aux("a"), e(0, 1), e(0, 2), aux("b")],
            [x(2), aux("a"), e(1, 2), e(0, 2), aux("c")],
            [x(1), aux("a"), e(1, 2), aux("d"), aux("c")],
            [x(1), aux("a"), e(0, 1), aux("d"), aux("b")],
        ];
        for (p, want) in f.pentagons.iter().zip(expected) {
            let (mut p, mut want) = (*p, want);
            p.sort_unstable();
            want.sort_unstable();
            assert_eq!(p, want);
        }
    }
}

fn coords(v: [i64; 9]) -> Coords {
    v
}

#[test]
fn frozen_auxiliary_curves() {
    let s = ArcSearch::new(search_window()).unwrap();
    let fill = |arcs: [[i64; 9]; 3]| {
        let t = classify(&s, arcs.map(|a| id(coords(a)))).unwrap();
        let f = fill_triangle(&s, &t).unwrap();
        let aux: BTreeMap<String, Coords> =
            f.auxiliary.iter().map(|(k, v)| (k.clone(), search_window().vertices[*v])).collect();
        (t.kind, aux)
    };
    let (kind, aux) = fill([
        [0, 0, 1, 0, 1, 0, 1, 0, 1],
        [0, 1, 0, 1, 0, 1, 1, 1, 1],
        [1, 0, 1, 1, 1, 1, 0, 1, 2],
    ]);
    assert_eq!(kind, Kind::Case2);
    assert_eq!(aux["z"], [1, 1, 1, 0, 1, 0, 1, 2, 1]);
    let (kind, aux) = fill([
        [0, 0, 1, 0, 1, 0, 1, 0, 1],
        [0, 1, 0, 1, 0, 1, 1, 1, 1],
        [2, 1, 2, 1, 0, 1, 1, 3, 1],
    ]);
    assert_eq!(kind, Kind::Case4);
    assert_eq!(aux["z"], [1, 0, 1, 0, 0, 1, 0, 1, 0]);
    let (kind, aux) = fill([
        [0, 1, 0, 1, 0, 1, 1, 1, 1],
        [0, 1, 2, 1, 2, 1, 1, 1, 3],
        [2, 1, 2, 1, 0, 3, 1, 1, 1],
    ]);
    assert_eq!(kind, Kind::Case5);
    assert_eq!(aux["a"], [1, 0, 1, 0, 0, 1, 0, 1, 0]);
    assert_eq!(aux["b"], [0, 0, 1, 0, 1, 0, 1, 0, 1]);
    assert_eq!(aux["c"], [1, 0, 1, 1, 1, 1, 0, 1, 2]);
    assert_eq!(aux["d"], [1, 0, 2, 1, 2, 1, 1, 1, 3]);
}

#[test]
fn kind_is_invariant_under_mapping_classes() {
    let g = Generators::get();
    let s = ArcSearch::new(search_window()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut tested = 0;
    for (kind, items) in survey() {
        for (c, _) in items.iter().take(4) {
            let l = Letter::ALL[rand::Rng::gen_range(&mut rng, 0..9)];
            let moved = c.arcs.map(|v| search_window().index_of(&g.apply_letter(l, &search_window().vertices[v])));
            let [Some(a), Some(b), Some(d)] = moved else { continue };
            let Ok(t) = classify(&s, [a, b, d]) else { continue };
            assert_eq!(t.kind, *kind, "{l} on {:?}", c.arcs);
            tested += 1;
        }
    }
    assert!(tested >= 16, "{tested}");
}

#[test]
fn rejects_crossing_and_repeated_arcs() {
    let s = ArcSearch::new(search_window()).unwrap();
    let c = |j| id(base_coords(j));
    assert_eq!(classify(&s, [c(0), c(0), c(1)]), Err(Arc2Error::Repeated));
    let ids = small_ids();
    let crossing = ids
        .iter()
        .flat_map(|&a| ids.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| a != b && !interiors_disjoint(&s.vertex(a), &s.vertex(b)).unwrap())
        .unwrap();
    let third = s.graph().neighbors(crossing.0)[0];
    assert!(matches!(classify(&s, [crossing.0, crossing.1, third]), Err(Arc2Error::Crossing(_))));
}

#[test]
fn loop_filler_handles_short_loops() {
    let s = ArcSearch::new(search_window()).unwrap();
    let p: Vec<usize> = (0..5).map(|j| id(base_coords(j))).collect();
    let f = fill_loop(s.graph(), &p, 1).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!(chain_boundary(&f), loop_edges(&p));
    assert_eq!(fill_loop(s.graph(), &[p[0], p[1], p[0]], 0), Some(vec![]));
    assert_eq!(fill_loop(s.graph(), &p, 0), None);
}

use std::sync::OnceLock;

use curvelab::farey::{self, ClosureSpec, FareyWindow, IntMatrix};
use curvelab::graph::PentagonIndex;
use curvelab::quotient::*;
use curvelab::sphere5::base::base_coords;
use curvelab::sphere5::generators::Generators;
use curvelab::sphere5::window::{build_window, CurveWindow};
use curvelab::sphere5::word::Word;

fn spec(power: u32) -> ClosureSpec {
    ClosureSpec { base: "2,1,1,1".parse().unwrap(), power, conjugator_length: 2, product_depth: 1 }
}

fn farey_window() -> &'static FareyWindow {
    static W: OnceLock<FareyWindow> = OnceLock::new();
    W.get_or_init(|| farey::build_window(55))
}

fn farey_quotient(power: u32) -> QuotientWindow<IntMatrix> {
    build_quotient(&FareyInstance, farey_window(), &farey_sample(&spec(power)).unwrap()).unwrap()
}

fn k8() -> &'static QuotientWindow<IntMatrix> {
    static Q: OnceLock<QuotientWindow<IntMatrix>> = OnceLock::new();
    Q.get_or_init(|| farey_quotient(8))
}

#[test]
fn farey_k8_structure() {
    let q = k8();
    assert_eq!(farey_window().len(), 3760);
    assert_eq!(q.classes.len(), 3742);
    assert_eq!(q.identifications.len(), 36);
    assert!(q.fixed.is_empty());
    assert!(q.loops.is_empty());
    assert_eq!(q.min_displacement(), Some((8, true)));
}

#[test]
fn farey_k8_classes_match_brute_force() {
    let s = farey_sample(&spec(8)).unwrap();
    let mut brute = brute_force_classes(&FareyInstance, farey_window(), &s);
    let mut got = k8().classes.clone();
    brute.sort();
    got.sort();
    assert_eq!(got, brute);
}

#[test]
fn farey_transports_carry_representatives() {
    let q = k8();
    let w = farey_window();
    for (c, members) in q.classes.iter().enumerate() {
        let rep = w.vertices[q.rep(c)];
        for &v in members {
            assert_eq!(FareyInstance.apply(&q.transport[v], &rep), Some(w.vertices[v]));
        }
    }
}

#[test]
fn farey_k8_suites_pass() {
    let (inst, w, q) = (&FareyInstance, farey_window(), k8());
    let simplicial = check_simplicial(inst, w, q);
    assert_eq!(simplicial.status, Status::Pass, "{simplicial:?}");
    assert_eq!(simplicial.eligible, 7501);

    let lift = verify_lipschitz_and_lifting(inst, w, q);
    assert_eq!(lift.status, Status::Pass, "{:?}", lift.witnesses);
    assert_eq!((lift.eligible, lift.truncated), (3656, 104));
    assert_eq!(lift.counts["geodesic-sites"], 3440);

    let ball = verify_ball2_isometry(inst, w, q);
    assert_eq!(ball.status, Status::Pass, "{:?}", ball.witnesses);
    assert_eq!((ball.eligible, ball.truncated), (3440, 320));

    let cover = verify_local_covering(inst, w, q);
    assert_eq!(cover.status, Status::Pass, "{:?}", cover.witnesses);
    assert_eq!((cover.eligible, cover.truncated), (3656, 104));
}

#[test]
fn farey_k8_lifts_form_single_orbits() {
    let r = verify_unique_lift_orbit(&FareyInstance, farey_window(), k8(), &[LiftTarget::Vertices, LiftTarget::Edges, LiftTarget::Triangles]);
    assert_eq!(r.status, Status::Pass, "{:?}", r.witnesses);
    for (name, n) in [("vertices", 3742), ("edges", 7501), ("triangles", 3752)] {
        assert_eq!(r.counts[&format!("{name}-classes")], n);
        assert_eq!(r.counts[&format!("{name}-orbits")], n);
    }
}

#[test]
fn farey_small_powers_are_out_of_hypothesis() {
    let w = farey_window();
    let q1 = farey_quotient(1);
    assert_eq!(q1.classes.len(), 1);
    assert_eq!(q1.loops.len(), 7517);
    let r1 = check_simplicial(&FareyInstance, w, &q1);
    assert_eq!(r1.status, Status::OutOfHypothesis);
    assert_eq!(r1.min_displacement, Some(1));
    assert!(r1.witnesses.iter().any(|x| x["kind"] == "loop"));

    let q2 = farey_quotient(2);
    assert_eq!(q2.classes.len(), 904);
    let r2 = check_simplicial(&FareyInstance, w, &q2);
    assert_eq!(r2.status, Status::OutOfHypothesis);
    assert_eq!(r2.min_displacement, Some(2));
    assert_eq!(r2.witnesses.len(), 6);
    assert!(r2.witnesses.iter().all(|x| x["kind"] == "parallel-edges"));
}

#[test]
fn farey_k3_is_the_first_simplicial_power() {
    let w = farey_window();
    let q = farey_quotient(3);
    assert_eq!(q.classes.len(), 2448);
    assert_eq!(check_simplicial(&FareyInstance, w, &q).status, Status::Pass);
    assert_eq!(verify_local_covering(&FareyInstance, w, &q).status, Status::OutOfHypothesis);
}

#[test]
fn reflection_sample_collapses_stars() {
    // x -> -x preserves every height window, fixes 0 and infinity, and
    // folds the star of 0 onto itself
    let w = farey::build_window(13);
    let j: IntMatrix = "1,0,0,-1".parse().unwrap();
    let s = ClosureSample { instance: farey::INSTANCE.to_string(), elements: vec![SampleElement { word: "j".into(), element: j }] };
    let q = build_quotient(&FareyInstance, &w, &s).unwrap();
    let zero = w.index_of(&farey::Slope::new(0, 1).unwrap()).unwrap();
    assert!(q.fixed.iter().any(|&(v, _)| v == w.basepoint_index()));
    assert!(q.fixed.iter().any(|&(v, _)| v == zero));
    assert_eq!(q.min_displacement(), Some((0, true)));
    let r = verify_local_covering(&FareyInstance, &w, &q);
    assert_eq!(r.status, Status::OutOfHypothesis);
    assert!(!r.witnesses.is_empty());
    assert_eq!(check_simplicial(&FareyInstance, &w, &q).status, Status::OutOfHypothesis);
}

#[test]
fn parabolic_sample_fixes_infinity() {
    let w = farey::build_window(13);
    let u: IntMatrix = "1,1,0,1".parse().unwrap();
    let s = ClosureSample {
        instance: farey::INSTANCE.to_string(),
        elements: vec![
            SampleElement { word: "u".into(), element: u },
            SampleElement { word: "U".into(), element: u.inverse() },
        ],
    };
    let q = build_quotient(&FareyInstance, &w, &s).unwrap();
    assert!(q.fixed.iter().any(|&(v, _)| v == w.basepoint_index()));
    assert_eq!(q.min_displacement(), Some((0, true)));
    // the neighbours of infinity all fall into one class
    let inf = w.basepoint_index();
    let classes: std::collections::BTreeSet<usize> = w.graph.neighbors(inf).iter().map(|&v| q.class_of[v]).collect();
    assert_eq!(classes.len(), 1);
}

#[test]
fn instance_mismatch_is_an_error() {
    let w = farey::build_window(3);
    let s: ClosureSample<IntMatrix> = ClosureSample::empty("s5");
    assert!(matches!(build_quotient(&FareyInstance, &w, &s), Err(QuotientError::Instance { .. })));
}

fn s5(bound: usize) -> &'static CurveWindow {
    static W3: OnceLock<CurveWindow> = OnceLock::new();
    static W4: OnceLock<CurveWindow> = OnceLock::new();
    match bound {
        3 => W3.get_or_init(|| build_window(3)),
        4 => W4.get_or_init(|| build_window(4)),
        _ => unreachable!(),
    }
}

#[test]
fn s5_empty_sample_passes_everything() {
    let w = s5(3);
    let inst = S5Instance::for_window(w);
    let q = build_quotient(&inst, w, &ClosureSample::empty("s5")).unwrap();
    assert_eq!((w.len(), w.graph.edge_count()), (119, 283));
    assert_eq!(q.classes.len(), 119);
    assert_eq!(q.min_displacement(), None);
    for r in [
        check_simplicial(&inst, w, &q),
        verify_lipschitz_and_lifting(&inst, w, &q),
        verify_ball2_isometry(&inst, w, &q),
        verify_local_covering(&inst, w, &q),
        verify_unique_lift_orbit(&inst, w, &q, &[LiftTarget::Vertices, LiftTarget::Edges, LiftTarget::Pentagons]),
        check_support_sets(&inst, w, &q),
    ] {
        assert_eq!(r.status, Status::Pass, "{}: {:?}", r.suite, r.witnesses);
    }
    let t = transfer_pentagons(&inst, w, &q);
    assert_eq!(t.status, Status::Pass, "{:?}", t.witnesses);
    assert_eq!(t.counts["window-pentagons"], 379);
    assert_eq!(t.counts["quotient-pentagons"], 379);
    let h = detect_half_twists_quotient(&inst, w, &q);
    assert_eq!(h.status, Status::Pass, "{:?}", h.witnesses);
    assert_eq!((h.eligible, h.truncated), (418, 1132));
}

#[test]
fn s5_support_sets_at_bound_four() {
    let w = s5(4);
    let inst = S5Instance::for_window(w);
    let q = build_quotient(&inst, w, &ClosureSample::empty("s5")).unwrap();
    assert_eq!(w.len(), 361);
    let r = check_support_sets(&inst, w, &q);
    assert_eq!(r.status, Status::Pass, "{:?}", r.witnesses);
    assert_eq!(r.counts["pants-decompositions"], 929);
}

#[test]
fn s5_distance_certificates() {
    let inst = S5Instance::new();
    let c = base_coords;
    assert_eq!(inst.distance(&c(0), &c(0)), Distance::Exact(0));
    assert_eq!(inst.distance(&c(0), &c(1)), Distance::Exact(1));
    assert_eq!(inst.distance(&c(0), &c(2)), Distance::Exact(2));
    let far = Generators::get().apply_word(&"h2h2h2".parse::<Word>().unwrap(), &c(0));
    assert!(matches!(inst.distance(&c(0), &far), Distance::AtLeast(2) | Distance::Exact(2)));
}

fn base_ids(w: &CurveWindow) -> [usize; 5] {
    std::array::from_fn(|j| w.index_of(&base_coords(j)).unwrap())
}

#[test]
fn propagation_recovers_identity_and_reflection() {
    for (bound, n) in [(3, 119), (4, 361)] {
        let w = s5(bound);
        let idx = PentagonIndex::new(w.graph.pentagons());
        let seed = base_ids(w);
        let [straight, crossed] = seed_matchings(&w.graph, &idx, seed, seed).unwrap();
        let id = propagate_pentagon_map(&w.graph, &idx, seed, seed, straight);
        assert!(id.conflicts.is_empty(), "{:?}", id.conflicts);
        assert_eq!(id.map.len(), n);
        assert!(id.map.iter().all(|(a, b)| a == b));

        let r = propagate_pentagon_map(&w.graph, &idx, seed, seed, crossed);
        assert!(r.conflicts.is_empty());
        assert_eq!(r.map.len(), n);
        let g = Generators::get();
        for (&a, &b) in &r.map {
            assert_eq!(g.reflection.apply(&w.vertices[a]), w.vertices[b]);
        }
    }
}

#[test]
fn propagation_recovers_a_mapping_class() {
    let w = s5(3);
    let gens = Generators::get();
    let g: Word = "h2H3".parse().unwrap();
    let idx = PentagonIndex::new(w.graph.pentagons());
    let seed = base_ids(w);
    let image = seed.map(|v| w.index_of(&gens.apply_word(&g, &w.vertices[v])).unwrap());
    let matchings = seed_matchings(&w.graph, &idx, seed, image).unwrap();
    let runs: Vec<Propagation> = matchings.iter().map(|m| propagate_pentagon_map(&w.graph, &idx, seed, image, *m)).collect();
    let agrees = |p: &Propagation| p.map.iter().all(|(&a, &b)| gens.apply_word(&g, &w.vertices[a]) == w.vertices[b]);
    assert!(runs.iter().all(|p| p.conflicts.is_empty()));
    let good: Vec<&Propagation> = runs.iter().filter(|p| agrees(p)).collect();
    assert_eq!(good.len(), 1);
    assert_eq!(good[0].map.len(), 47);
    let other = runs.iter().find(|p| !agrees(p)).unwrap();
    let gr = g.concat(&"r".parse().unwrap());
    for (&a, &b) in &other.map {
        assert_eq!(gens.apply_word(&gr, &w.vertices[a]), w.vertices[b]);
    }
}

#[test]
fn quotient_json_is_stable() {
    let w = s5(3);
    let inst = S5Instance::for_window(w);
    let q = build_quotient(&inst, w, &ClosureSample::empty("s5")).unwrap();
    let a = serde_json::to_string(&quotient_json(w, &q)).unwrap();
    let b = serde_json::to_string(&quotient_json(w, &build_quotient(&inst, w, &ClosureSample::empty("s5")).unwrap())).unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["classes"].as_array().unwrap().len(), 119);
}

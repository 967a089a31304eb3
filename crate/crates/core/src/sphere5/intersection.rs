//! Geometric intersection numbers.
//!
//! Every curve with a witness `w: c_j -> a` is the image of the boundary of a
//! neighbourhood of a base edge `E_j`, so `i(a, b) = i(c_j, w^-1 b) =
//! 2 * (w^-1 b)[E_j]`. Curves without a witness get one by descending the
//! total weight with generators. [`intersection_by_interleaving`] is the
//! direct minimisation over endpoint orders and serves as a cross-check.

use super::base::{base_coords, BASE_EDGES};
use super::curve::{corners, CurveError, NormalCurve, Witness};
use super::encoding::Coords;
use super::generators::Generators;
use super::triangulation::{HalfEdge, Triangulation, NUM_EDGES};
use super::word::{Letter, Word};

fn weight(x: &Coords) -> i64 {
    x.iter().sum()
}

/// `i(w(c_j), b)`.
pub fn intersection_with_witness(w: &Witness, b: &Coords) -> i64 {
    let g = Generators::get();
    let pulled = g.apply_word(&w.word.inverse(), b);
    2 * pulled[BASE_EDGES[w.base] as usize]
}

/// Searches for a word carrying a base curve to `x`, by greedy weight
/// descent with a short breadth-first lookahead when no letter helps.
pub fn find_witness(x: &Coords, max_steps: usize) -> Option<Witness> {
    let g = Generators::get();
    let bases: Vec<Coords> = (0..5).map(base_coords).collect();
    let mut cur = *x;
    // `undo` carries the current curve back to `x`.
    let mut undo = Word::empty();
    for _ in 0..max_steps {
        if let Some(j) = bases.iter().position(|b| *b == cur) {
            return Some(Witness { word: undo, base: j });
        }
        let w0 = weight(&cur);
        let mut best: Option<(i64, Word, Coords)> = None;
        let mut frontier = vec![(Word::empty(), cur)];
        for _depth in 0..3 {
            let mut next = Vec::new();
            for (path, c) in &frontier {
                for l in Letter::ALL {
                    let y = g.apply_letter(l, c);
                    let p = path.prepend(l);
                    let wy = weight(&y);
                    if wy < w0 && best.as_ref().is_none_or(|(bw, _, _)| wy < *bw) {
                        best = Some((wy, p.clone(), y));
                    }
                    next.push((p, y));
                }
            }
            if best.is_some() {
                break;
            }
            frontier = next;
        }
        let (_, p, y) = best?;
        // y = p(cur), so cur = p^-1(y) and x = undo(p^-1(y)).
        undo = undo.concat(&p.inverse());
        cur = y;
    }
    None
}

/// `i(a, b)`, using whichever witness is available.
pub fn intersection_number(a: &NormalCurve, b: &NormalCurve) -> Result<i64, CurveError> {
    if a.coords == b.coords {
        return Ok(0);
    }
    if let Some(w) = &a.witness {
        return Ok(intersection_with_witness(w, &b.coords));
    }
    if let Some(w) = &b.witness {
        return Ok(intersection_with_witness(w, &a.coords));
    }
    let w = find_witness(&a.coords, 64).ok_or(CurveError::MissingWitness)?;
    Ok(intersection_with_witness(&w, &b.coords))
}

struct Arc {
    ends: [(usize, usize); 2], // (half-edge slot in triangle, position along it)
}

fn triangle_arcs(tri: &[HalfEdge; 3], k: &[i64; 3], x: &Coords) -> Vec<Arc> {
    let mut out = Vec::new();
    for i in 0..3 {
        let wi = x[tri[i].edge as usize];
        for j in 0..k[i] {
            out.push(Arc { ends: [(i, (wi - 1 - j) as usize), ((i + 1) % 3, j as usize)] });
        }
    }
    out
}

/// Exhaustive minimum over interleavings of the endpoints of `a` and `b`
/// along every edge, with both curves drawn as chords in each triangle.
/// Returns `None` when more than `budget` partial assignments would be
/// explored.
pub fn intersection_by_interleaving(t: &Triangulation, a: &Coords, b: &Coords, budget: u64) -> Result<Option<i64>, CurveError> {
    let ka = corners(t, a)?;
    let kb = corners(t, b)?;
    let tris = t.triangles();
    let arcs_a: Vec<Vec<Arc>> = tris.iter().zip(&ka).map(|(tri, k)| triangle_arcs(tri, k, a)).collect();
    let arcs_b: Vec<Vec<Arc>> = tris.iter().zip(&kb).map(|(tri, k)| triangle_arcs(tri, k, b)).collect();

    // Per edge, the candidate merges: for each, the merged index of the a
    // points and of the b points (along +e).
    let mut merges: Vec<Vec<(Vec<usize>, Vec<usize>)>> = Vec::with_capacity(NUM_EDGES);
    for e in 0..NUM_EDGES {
        let (na, nb) = (a[e] as usize, b[e] as usize);
        let mut all = Vec::new();
        let mut pick = Vec::new();
        fn rec(n: usize, na: usize, start: usize, pick: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if pick.len() == na {
                out.push(pick.clone());
                return;
            }
            for s in start..n {
                if n - s < na - pick.len() {
                    break;
                }
                pick.push(s);
                rec(n, na, s + 1, pick, out);
                pick.pop();
            }
        }
        let mut picks = Vec::new();
        rec(na + nb, na, 0, &mut pick, &mut picks);
        for pa in picks {
            let pb: Vec<usize> = (0..na + nb).filter(|i| !pa.contains(i)).collect();
            all.push((pa, pb));
        }
        merges.push(all);
    }
    // Triangles complete once their last edge (in search order) is assigned.
    let order: Vec<usize> = {
        let mut o: Vec<usize> = (0..NUM_EDGES).collect();
        o.sort_by_key(|&e| merges[e].len());
        o
    };
    let rank: Vec<usize> = {
        let mut r = vec![0; NUM_EDGES];
        for (i, &e) in order.iter().enumerate() {
            r[e] = i;
        }
        r
    };
    let mut completes: Vec<Vec<usize>> = vec![Vec::new(); NUM_EDGES];
    for (ti, tri) in tris.iter().enumerate() {
        let last = tri.iter().map(|h| rank[h.edge as usize]).max().unwrap();
        completes[last].push(ti);
    }

    struct Ctx<'a> {
        tris: &'a [[HalfEdge; 3]],
        a: &'a Coords,
        b: &'a Coords,
        arcs_a: &'a [Vec<Arc>],
        arcs_b: &'a [Vec<Arc>],
        merges: &'a [Vec<(Vec<usize>, Vec<usize>)>],
        order: &'a [usize],
        completes: &'a [Vec<usize>],
        choice: [usize; NUM_EDGES],
        best: i64,
        visited: u64,
        budget: u64,
    }

    impl Ctx<'_> {
        fn param(&self, tri: &[HalfEdge; 3], slot: usize, pos: usize, is_a: bool) -> usize {
            let h = tri[slot];
            let e = h.edge as usize;
            let (x, n) = (if is_a { self.a } else { self.b }, (self.a[e] + self.b[e]) as usize);
            let own = x[e] as usize;
            let k = if h.reversed { own - 1 - pos } else { pos };
            let (pa, pb) = &self.merges[e][self.choice[e]];
            let m = if is_a { pa[k] } else { pb[k] };
            let along = if h.reversed { n - 1 - m } else { m };
            slot * 1_000_000 + along
        }

        fn crossings(&self, ti: usize) -> i64 {
            let tri = &self.tris[ti];
            let mut c = 0;
            for x in &self.arcs_a[ti] {
                let p = [self.param(tri, x.ends[0].0, x.ends[0].1, true), self.param(tri, x.ends[1].0, x.ends[1].1, true)];
                let (lo, hi) = (p[0].min(p[1]), p[0].max(p[1]));
                for y in &self.arcs_b[ti] {
                    let q0 = self.param(tri, y.ends[0].0, y.ends[0].1, false);
                    let q1 = self.param(tri, y.ends[1].0, y.ends[1].1, false);
                    let in0 = lo < q0 && q0 < hi;
                    let in1 = lo < q1 && q1 < hi;
                    if in0 != in1 {
                        c += 1;
                    }
                }
            }
            c
        }

        fn search(&mut self, depth: usize, acc: i64) -> bool {
            self.visited += 1;
            if self.visited > self.budget {
                return false;
            }
            if acc >= self.best {
                return true;
            }
            if depth == self.order.len() {
                self.best = acc;
                return true;
            }
            let e = self.order[depth];
            for m in 0..self.merges[e].len() {
                self.choice[e] = m;
                let extra: i64 = self.completes[depth].iter().map(|&ti| self.crossings(ti)).sum();
                if !self.search(depth + 1, acc + extra) {
                    return false;
                }
            }
            true
        }
    }

    let mut ctx = Ctx {
        tris,
        a,
        b,
        arcs_a: &arcs_a,
        arcs_b: &arcs_b,
        merges: &merges,
        order: &order,
        completes: &completes,
        choice: [0; NUM_EDGES],
        best: i64::MAX,
        visited: 0,
        budget,
    };
    if !ctx.search(0, 0) {
        return Ok(None);
    }
    Ok(Some(ctx.best))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sphere5::base::base_curve;
    use crate::sphere5::triangulation::base_triangulation;

    #[test]
    fn base_pentagon_pattern() {
        for j in 0..5 {
            for k in 0..5 {
                let i = intersection_number(&base_curve(j), &base_curve(k)).unwrap();
                let d = (j + 5 - k) % 5;
                let expect = match d {
                    0 | 1 | 4 => 0,
                    _ => 2,
                };
                assert_eq!(i, expect, "c{} c{}", j + 1, k + 1);
            }
        }
    }

    #[test]
    fn interleaving_agrees_on_base_pairs() {
        let t = base_triangulation();
        for j in 0..5 {
            for k in 0..5 {
                let brute = intersection_by_interleaving(&t, &base_coords(j), &base_coords(k), 1 << 22).unwrap().unwrap();
                let fast = intersection_number(&base_curve(j), &base_curve(k)).unwrap();
                assert_eq!(brute, fast);
            }
        }
    }

    #[test]
    fn witness_recovery() {
        let g = Generators::get();
        let w: Word = "h1H3h2".parse().unwrap();
        let x = g.apply_word(&w, &base_coords(1));
        let found = find_witness(&x, 32).unwrap();
        assert_eq!(g.apply_word(&found.word, &base_coords(found.base)), x);
    }
}

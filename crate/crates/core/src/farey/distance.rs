//! Exact distances in the Farey graph.
//!
//! `d(inf, x)` follows the Stern-Brocot descent toward `x`: the starting pair
//! `floor(x), floor(x) + 1` is at distance 1, and every mediant `m` of a
//! Farey pair `(l, r)` is separated from infinity by the edge `l r`, so
//! `d(m) = 1 + min(d(l), d(r))`. Runs of mediants with a fixed endpoint are
//! collapsed, one per partial quotient. For general `s` a matrix carrying
//! `s` to infinity reduces to that case.

use std::collections::{HashMap, VecDeque};

use super::{ext_gcd, neighbors_within, Slope};

/// Distance after `n >= 1` mediant steps toward a fixed pivot.
fn run(d_moving: u64, d_pivot: u64, n: i128) -> u64 {
    debug_assert!(n >= 1);
    if d_pivot <= d_moving {
        d_pivot + 1
    } else if n == 1 {
        // d_moving = d_pivot - 1
        d_pivot
    } else {
        d_pivot + 1
    }
}

/// `d(1/0, p/q)` for a reduced fraction with `q >= 0` (wide integers).
fn from_infinity_wide(p: i128, q: i128) -> u64 {
    if q == 0 {
        return 0;
    }
    if q == 1 {
        return 1;
    }
    let fl = p.div_euclid(q);
    let (mut lp, mut lq, mut rp, mut rq) = (fl, 1i128, fl + 1, 1i128);
    let (mut dl, mut dr) = (1u64, 1u64);
    loop {
        // Move the left end with the right end as pivot.
        let a = p * lq - q * lp;
        let b = q * rp - p * rq;
        if a % b == 0 {
            return run(dl, dr, a / b);
        }
        let k = a / b;
        if k > 0 {
            dl = run(dl, dr, k);
            lp += k * rp;
            lq += k * rq;
        }
        // Move the right end with the left end as pivot.
        let a = q * rp - p * rq;
        let b = p * lq - q * lp;
        if a % b == 0 {
            return run(dr, dl, a / b);
        }
        let k = a / b;
        if k > 0 {
            dr = run(dr, dl, k);
            rp += k * lp;
            rq += k * lq;
        }
    }
}

pub fn farey_distance_from_infinity(x: Slope) -> u64 {
    from_infinity_wide(x.p() as i128, x.q() as i128)
}

/// Exact Farey distance.
pub fn farey_distance(s: Slope, t: Slope) -> u64 {
    if s == t {
        return 0;
    }
    let (p, q) = (s.p() as i128, s.q() as i128);
    // [[a, b], [-q, p]] with a p + b q = 1 sends s to infinity.
    let (_, a, b) = ext_gcd(p, q);
    let (tp, tq) = (t.p() as i128, t.q() as i128);
    let (mut np, mut nq) = (a * tp + b * tq, -q * tp + p * tq);
    if nq < 0 || (nq == 0 && np < 0) {
        np = -np;
        nq = -nq;
    }
    from_infinity_wide(np, nq)
}

/// Breadth-first distance inside the window of height
/// `max(height(s), height(t))`.
pub fn bfs_distance(s: Slope, t: Slope) -> u64 {
    let h = s.height().max(t.height());
    if s == t {
        return 0;
    }
    let mut dist: HashMap<Slope, u64> = HashMap::from([(s, 0)]);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let dv = dist[&v];
        for u in neighbors_within(v, h) {
            if u == t {
                return dv + 1;
            }
            if let std::collections::hash_map::Entry::Vacant(e) = dist.entry(u) {
                e.insert(dv + 1);
                queue.push_back(u);
            }
        }
    }
    unreachable!("height windows are connected")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::farey::slopes_up_to;

    fn s(x: &str) -> Slope {
        x.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(farey_distance(s("0/1"), s("0/1")), 0);
        assert_eq!(farey_distance(s("1/2"), s("1/0")), 2);
        assert_eq!(farey_distance(s("2/5"), s("1/0")), 3);
        assert_eq!(bfs_distance(s("2/5"), s("1/0")), 3);
    }

    #[test]
    fn agrees_with_bfs_small() {
        let all = slopes_up_to(8);
        for &a in &all {
            for &b in &all {
                assert_eq!(farey_distance(a, b), bfs_distance(a, b), "{a} {b}");
            }
        }
    }

    #[test]
    fn fibonacci_ratios_grow_slowly() {
        // F(n+1)/F(n) has partial quotients all 1.
        let (mut a, mut b) = (1i64, 1i64);
        let mut last = 0;
        for _ in 0..40 {
            (a, b) = (a + b, a);
            let d = farey_distance(Slope::new(a, b).unwrap(), Slope::INFINITY);
            assert!(d >= last && d <= last + 1);
            last = d;
        }
        assert!(last >= 15);
    }
}

//! Enumeration of the justifying pair sets of a 2-hook permutation, two ways:
//! the arc-break closure of the construction's placement solution, and an
//! exhaustive subset search used as ground truth.
//!
//! The two methods are intentionally kept side by side. The closure restricts
//! breaks to marked middle vertices and — by a desk check at n = 4 — can miss
//! justifying sets that contain path edges; after filtering to a graph that
//! contains the path the two methods have agreed in every tested case. The
//! exhaustive search is therefore the default source of coefficients, and the
//! closure runs in comparison mode.

use std::collections::BTreeSet;

use crate::construction::ConstructionResult;
use crate::error::{Error, Result};
use crate::hook::{two_hook_base, ExponentVector, GraphSpec, Pair, PairSet};

/// Replaces arc `(a, c)` by the two arcs `(a, b)`, `(b, c)`. The shift vector
/// of the set is preserved.
pub fn break_arc(set: &PairSet, arc: Pair, mid: usize) -> Result<PairSet> {
    let (a, c) = arc;
    if !set.contains(arc) {
        return Err(Error::ArcBreak(format!("arc ({a},{c}) is not in {set:?}")));
    }
    if !(a < mid && mid < c) {
        return Err(Error::ArcBreak(format!("{mid} is not strictly between {a} and {c}")));
    }
    if set.contains((a, mid)) {
        return Err(Error::ArcBreak(format!("({a},{mid}) is already present")));
    }
    if set.contains((mid, c)) {
        return Err(Error::ArcBreak(format!("({mid},{c}) is already present")));
    }
    let pairs = set
        .iter()
        .filter(|&p| p != arc)
        .chain([(a, mid), (mid, c)])
        .collect::<Vec<_>>();
    PairSet::new(pairs)
}

/// All pair sets reachable from the placement solution by breaking arcs over
/// marked vertices, the solution itself included. Every member justifies the
/// result's permutation. Output is in canonical order.
pub fn arc_break_closure(result: &ConstructionResult) -> Vec<PairSet> {
    let mut seen: BTreeSet<PairSet> = BTreeSet::new();
    let mut queue = vec![result.solution.clone()];
    seen.insert(result.solution.clone());
    while let Some(set) = queue.pop() {
        for (a, c) in set.iter() {
            for &b in &result.marks {
                if a < b && b < c && !set.contains((a, b)) && !set.contains((b, c)) {
                    let broken = break_arc(&set, (a, c), b).expect("preconditions checked");
                    if seen.insert(broken.clone()) {
                        queue.push(broken);
                    }
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Largest `n` the exhaustive search accepts by default.
pub const BRUTE_FORCE_MAX_N: usize = 7;

/// Every subset of `allowed` whose shift vector moves `2-hook + staircase`
/// onto `t`. Depth-first over the pairs in lexicographic order, cutting a
/// branch as soon as some entry can no longer reach its target with the
/// remaining pairs. Output is in canonical order.
pub fn justifying_sets_among(t: &ExponentVector, allowed: &PairSet) -> Result<Vec<PairSet>> {
    let n = t.len();
    let target = &(t - &two_hook_base(n)?);
    allowed.delta(n)?; // range check
    let pairs = allowed.pairs();
    let m = pairs.len();

    // rem_starts[k][i] / rem_ends[k][i]: how many of pairs[k..] start / end
    // at index i+1. These bound what the undecided pairs can still add.
    let mut rem_starts = vec![vec![0i64; n]; m + 1];
    let mut rem_ends = vec![vec![0i64; n]; m + 1];
    for k in (0..m).rev() {
        rem_starts[k] = rem_starts[k + 1].clone();
        rem_ends[k] = rem_ends[k + 1].clone();
        let (a, b) = pairs[k];
        rem_starts[k][a - 1] += 1;
        rem_ends[k][b - 1] += 1;
    }

    struct Search<'a> {
        pairs: &'a [Pair],
        target: &'a [i64],
        rem_starts: &'a [Vec<i64>],
        rem_ends: &'a [Vec<i64>],
        shift: Vec<i64>,
        chosen: Vec<Pair>,
        found: Vec<PairSet>,
    }

    impl Search<'_> {
        fn reachable(&self, k: usize) -> bool {
            self.shift.iter().zip(self.target).enumerate().all(|(i, (&v, &d))| {
                v - self.rem_starts[k][i] <= d && d <= v + self.rem_ends[k][i]
            })
        }

        fn run(&mut self, k: usize) {
            if !self.reachable(k) {
                return;
            }
            if k == self.pairs.len() {
                if self.shift == self.target {
                    self.found.push(
                        PairSet::new(self.chosen.iter().copied()).expect("chosen pairs valid"),
                    );
                }
                return;
            }
            self.run(k + 1);
            let (a, b) = self.pairs[k];
            self.shift[a - 1] -= 1;
            self.shift[b - 1] += 1;
            self.chosen.push((a, b));
            self.run(k + 1);
            self.chosen.pop();
            self.shift[a - 1] += 1;
            self.shift[b - 1] -= 1;
        }
    }

    let mut search = Search {
        pairs,
        target: target.entries(),
        rem_starts: &rem_starts,
        rem_ends: &rem_ends,
        shift: vec![0; n],
        chosen: Vec::new(),
        found: Vec::new(),
    };
    search.run(0);
    let mut found = search.found;
    found.sort();
    Ok(found)
}

/// Exhaustive search over all of `E_n`, bounded by [`BRUTE_FORCE_MAX_N`].
pub fn brute_force_justifying(t: &ExponentVector) -> Result<Vec<PairSet>> {
    brute_force_justifying_bounded(t, BRUTE_FORCE_MAX_N)
}

/// Exhaustive search over all of `E_n` with an explicit size bound.
pub fn brute_force_justifying_bounded(t: &ExponentVector, max_n: usize) -> Result<Vec<PairSet>> {
    let n = t.len();
    if n > max_n {
        return Err(Error::ResourceBound { size: n, bound: max_n });
    }
    justifying_sets_among(t, &PairSet::all_pairs(n))
}

/// Keeps the sets that avoid every edge of `graph`, i.e. the sets contained
/// in `E_n - E(G)`.
pub fn filter_by_graph(sets: &[PairSet], graph: &GraphSpec) -> Vec<PairSet> {
    let edges = graph.edges();
    sets.iter().filter(|s| s.is_disjoint(&edges)).cloned().collect()
}

//! The 2-hook construction: a state machine that places the values
//! `n-1, n-2, ..., 1` one at a time onto an initially empty tuple headed by
//! `n`, accumulating a pair set that justifies the finished permutation.
//!
//! A state carries the partial tuple `p`, the accumulated pair set `E`, the
//! set of marked indices, and the budget vector `2-hook + staircase + v(E)`.
//! The budget dominates the partial tuple entrywise throughout, and the two
//! agree exactly when the construction completes — that equality is what makes
//! the final pair set a justifying set.

use crate::error::{Error, Result};
use crate::hook::{
    is_two_hook_permutation, justifies, two_hook, two_hook_base, ExponentVector, Pair, PairSet,
};

/// Boundary indices of the empty region of a partial tuple.
///
/// The occupied indices of a valid partial tuple form either one run
/// containing index 1 (`unbroken`), or two runs of which the first contains
/// index 1 (`broken`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RunBounds {
    /// First empty index after the run containing index 1.
    pub after_first: usize,
    /// Empty index immediately left of the second run; 0 when unbroken.
    pub before_second: usize,
    /// First empty index after the second run; 0 when unbroken.
    pub after_second: usize,
}

impl RunBounds {
    pub fn is_broken(&self) -> bool {
        self.before_second != 0
    }
}

/// Computes the run structure of a partial tuple. Errors if the support is
/// not one or two runs with the first run containing index 1, or if there is
/// no empty index left.
pub fn run_bounds(p: &ExponentVector) -> Result<RunBounds> {
    let n = p.len();
    let occupied: Vec<bool> = p.entries().iter().map(|&e| e != 0).collect();
    if n == 0 || !occupied[0] {
        return Err(Error::domain("partial tuple must occupy index 1"));
    }
    let mut runs: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < n {
        if occupied[i] {
            let start = i;
            while i < n && occupied[i] {
                i += 1;
            }
            runs.push((start + 1, i)); // 1-based inclusive
        } else {
            i += 1;
        }
    }
    match runs.as_slice() {
        [(1, e)] => {
            if *e == n {
                Err(Error::domain("partial tuple has no empty index"))
            } else {
                Ok(RunBounds { after_first: e + 1, before_second: 0, after_second: 0 })
            }
        }
        [(1, e1), (s2, e2)] => Ok(RunBounds {
            after_first: e1 + 1,
            before_second: s2 - 1,
            after_second: e2 + 1,
        }),
        _ => Err(Error::domain(format!("support of {p:?} is not one or two runs from index 1"))),
    }
}

/// Indices legal for the next placement under the weak rules, in increasing
/// order.
///
/// While some index below `n` is still empty: an unbroken tuple accepts any
/// empty index below `n`; a broken tuple accepts only empty indices below `n`
/// adjacent to an occupied one. Once exactly index `n` is empty, it is the
/// unique legal spot.
pub fn weak_legal_placements(p: &ExponentVector) -> Vec<usize> {
    let n = p.len();
    let occupied = |i: usize| p.entries()[i - 1] != 0;
    let empty_below_n = (1..n).filter(|&i| !occupied(i)).count();
    if empty_below_n == 0 {
        return if occupied(n) { Vec::new() } else { vec![n] };
    }
    let Ok(bounds) = run_bounds(p) else {
        return Vec::new();
    };
    if !bounds.is_broken() {
        (bounds.after_first..n).collect()
    } else {
        let mut spots = vec![bounds.after_first, bounds.before_second, bounds.after_second];
        spots.dedup();
        spots.retain(|&i| i < n);
        spots
    }
}

/// What a placement at a given index would do: the value placed, whether the
/// index gets marked, the bound the value is checked against, and the pairs
/// joined to the accumulated set (empty when marking).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlacementDecision {
    pub value: i64,
    pub index: usize,
    pub marked: bool,
    pub bound: i64,
    pub added_pairs: PairSet,
}

/// One state of the strong construction. Immutable: placements return new
/// states.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstructionState {
    n: usize,
    partial: ExponentVector,
    pairs: PairSet,
    marks: Vec<usize>,
    budget: ExponentVector,
}

impl ConstructionState {
    /// The starting state: `(n, 0, ..., 0)` with an empty pair set.
    pub fn initial(n: usize) -> Result<Self> {
        let budget = two_hook_base(n)?;
        let mut entries = vec![0i64; n];
        entries[0] = n as i64;
        Ok(Self {
            n,
            partial: ExponentVector::new(entries)?,
            pairs: PairSet::empty(),
            marks: Vec::new(),
            budget,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partial(&self) -> &ExponentVector {
        &self.partial
    }

    pub fn pair_set(&self) -> &PairSet {
        &self.pairs
    }

    pub fn marks(&self) -> &[usize] {
        &self.marks
    }

    /// The budget vector `2-hook + staircase + v(E)`, an entrywise upper
    /// bound for the partial tuple.
    pub fn budget(&self) -> &ExponentVector {
        &self.budget
    }

    /// The next value to place: `n` minus the number of occupied indices.
    pub fn next_value(&self) -> i64 {
        let placed = self.partial.entries().iter().filter(|&&e| e != 0).count();
        self.n as i64 - placed as i64
    }

    pub fn is_complete(&self) -> bool {
        self.partial.entries().iter().all(|&e| e != 0)
    }

    /// Pairs `(i, k)` for every `i <= k - 2` whose budget is not yet consumed
    /// by the partial tuple. Unmarking index `k` joins exactly these pairs.
    pub fn candidate_pairs(&self, k: usize) -> PairSet {
        assert!(k >= 1 && k <= self.n, "index {k} out of range for n={}", self.n);
        if k <= 2 {
            return PairSet::empty();
        }
        let deficit = &self.budget - &self.partial;
        let pairs: Vec<Pair> = (1..=k - 2)
            .filter(|&i| deficit.entries()[i - 1] != 0)
            .map(|i| (i, k))
            .collect();
        PairSet::new(pairs).expect("pairs built in order")
    }

    /// Placement bound when marking index `k`: the current budget there.
    pub fn mark_bound(&self, k: usize) -> i64 {
        self.budget.entries()[k - 1]
    }

    /// Placement bound when unmarking index `k`: the budget after joining the
    /// candidate pairs, each of which ends at `k` and raises it by one.
    pub fn unmark_bound(&self, k: usize) -> i64 {
        self.budget.entries()[k - 1] + self.candidate_pairs(k).len() as i64
    }

    /// Decides mark status and bound for placing the next value at `k`
    /// without changing the state. Errors if `k` is not weak-legal.
    pub fn placement_decision(&self, k: usize) -> Result<PlacementDecision> {
        let value = self.next_value();
        if value < 1 {
            return Err(Error::Placement {
                value,
                index: k,
                reason: "construction already complete".into(),
            });
        }
        let legal = weak_legal_placements(&self.partial);
        if !legal.contains(&k) {
            return Err(Error::Placement {
                value,
                index: k,
                reason: format!("legal placements are {legal:?}"),
            });
        }
        let marked = if value == 1 {
            // Exactly index n is empty; the final value is always unmarked.
            false
        } else {
            let bounds = run_bounds(&self.partial)?;
            if !bounds.is_broken() {
                k == bounds.after_first
            } else if k == bounds.after_first {
                true
            } else if k == bounds.before_second || k == bounds.after_second {
                false
            } else {
                unreachable!("weak-legal broken placement outside run bounds");
            }
        };
        let (bound, added_pairs) = if marked {
            (self.mark_bound(k), PairSet::empty())
        } else {
            (self.unmark_bound(k), self.candidate_pairs(k))
        };
        Ok(PlacementDecision { value, index: k, marked, bound, added_pairs })
    }

    /// Places the next value at index `k`, applying the mark/unmark rule for
    /// that position and checking the corresponding bound.
    pub fn place(&self, k: usize) -> Result<ConstructionState> {
        let decision = self.placement_decision(k)?;
        if decision.value > decision.bound {
            return Err(Error::StrongLegality {
                value: decision.value,
                index: k,
                bound: decision.bound,
            });
        }
        let mut entries = self.partial.entries().to_vec();
        entries[k - 1] = decision.value;
        let partial = ExponentVector::new(entries)?;
        let budget = &self.budget + &decision.added_pairs.delta(self.n)?;
        let pairs = self.pairs.union(&decision.added_pairs);
        let mut marks = self.marks.clone();
        if decision.marked {
            marks.push(k);
            marks.sort_unstable();
        }
        debug_assert!(
            partial.entries().iter().zip(budget.entries()).all(|(p, s)| p <= s),
            "partial exceeds budget after placing {} at {k}",
            decision.value
        );
        Ok(ConstructionState { n: self.n, partial, pairs, marks, budget })
    }
}

/// A finished run of the strong construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ConstructionResult {
    /// The 2-hook permutation found.
    pub permutation: ExponentVector,
    /// The pair set accumulated along the way; it justifies `permutation`.
    pub solution: PairSet,
    /// Indices marked along the way, in increasing order.
    pub marks: Vec<usize>,
}

impl ConstructionResult {
    fn from_state(state: &ConstructionState) -> Self {
        Self {
            permutation: state.partial.clone(),
            solution: state.pairs.clone(),
            marks: state.marks.to_vec(),
        }
    }
}

/// Depth-first traversal of every legal placement sequence from the initial
/// state. Returns one result per sequence, sorted by permutation; each
/// permutation occurs exactly once and its solution justifies it.
///
/// A strong-legality failure anywhere in the tree is surfaced as an error:
/// the construction guarantees there are none.
pub fn enumerate_constructions(n: usize) -> Result<Vec<ConstructionResult>> {
    let mut out = Vec::new();
    let mut stack = vec![ConstructionState::initial(n)?];
    while let Some(state) = stack.pop() {
        if state.is_complete() {
            out.push(ConstructionResult::from_state(&state));
            continue;
        }
        for k in weak_legal_placements(state.partial()) {
            stack.push(state.place(k)?);
        }
    }
    out.sort();
    if out.windows(2).any(|w| w[0].permutation == w[1].permutation) {
        return Err(Error::domain(
            "two placement sequences produced the same permutation",
        ));
    }
    Ok(out)
}

/// One step of a deterministic replay.
#[derive(Clone, Debug)]
pub struct ReplayStep {
    pub decision: PlacementDecision,
    /// The state after this placement.
    pub state: ConstructionState,
}

/// A full deterministic replay towards a target permutation.
#[derive(Clone, Debug)]
pub struct ReplayTrace {
    pub start: ConstructionState,
    pub steps: Vec<ReplayStep>,
    pub result: ConstructionResult,
}

/// Replays the construction towards `t`, placing each value `n-1, ..., 1` at
/// the unique index where `t` holds it. The placement sequence for a target
/// is unique, so the marks and solution are well-defined per target.
///
/// A placement error means `t` is not reachable, which certifies that no pair
/// set justifies it.
pub fn replay_trace(t: &ExponentVector) -> Result<ReplayTrace> {
    if !is_two_hook_permutation(t) {
        return Err(Error::domain(format!(
            "{t:?} is not a permutation of [n] with first entry n and last entry 1"
        )));
    }
    let n = t.len();
    let start = ConstructionState::initial(n)?;
    let mut state = start.clone();
    let mut steps = Vec::with_capacity(n - 1);
    for value in (1..n as i64).rev() {
        let index = t
            .entries()
            .iter()
            .position(|&e| e == value)
            .expect("permutation entries cover 1..=n")
            + 1;
        let decision = state.placement_decision(index)?;
        state = state.place(index)?;
        steps.push(ReplayStep { decision, state: state.clone() });
    }
    debug_assert_eq!(state.partial(), t);
    debug_assert!(justifies(state.pair_set(), t, &two_hook(n)?)?);
    let result = ConstructionResult::from_state(&state);
    Ok(ReplayTrace { start, steps, result })
}

/// [`replay_trace`] without the intermediate states.
pub fn replay_for(t: &ExponentVector) -> Result<ConstructionResult> {
    Ok(replay_trace(t)?.result)
}

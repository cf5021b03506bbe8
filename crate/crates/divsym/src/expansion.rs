//! The Schur-basis expansion of the divided symmetrization, assembled from
//! the construction's permutations with signed justifying-set counts, plus an
//! independent oracle that expands the defining polynomial product directly.
//!
//! One correction to note: a term with exponent vector `t` contributes to the
//! Schur bucket of its sorted form weighted by the parity of the sorting
//! permutation — the alternant picks up that sign when its columns are put in
//! decreasing order. Dropping the sign is detectably wrong: the expansion for
//! the bare path would no longer match either the polynomial oracle or the
//! known monomial-basis form.

use std::collections::BTreeMap;

use num::{BigInt, One, ToPrimitive, Zero};

use crate::construction::{enumerate_constructions, replay_for, ConstructionResult};
use crate::error::{Error, Result};
use crate::hook::{
    is_two_hook_permutation, schur_label, two_hook, two_hook_base, ExponentVector, GraphSpec,
    Partition,
};
use crate::justify::{arc_break_closure, filter_by_graph, justifying_sets_among};

/// How per-term coefficients are enumerated.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    /// Exhaustive subset search restricted to the graph's free pairs. Exact
    /// by construction; the default.
    Brute,
    /// Arc-break closure of the placement solution over marked vertices,
    /// filtered to the graph's free pairs. Runs in comparison mode; see the
    /// module notes in [`crate::justify`].
    Closure,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Closure => "closure",
        }
    }
}

/// A finite integer combination of Schur functions, keyed by partition.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurExpansion {
    n: usize,
    terms: BTreeMap<Partition, i64>,
}

impl SchurExpansion {
    pub fn new(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Partition, i64> {
        &self.terms
    }

    pub fn coefficient_of(&self, partition: &Partition) -> i64 {
        self.terms.get(partition).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, partition: Partition, coeff: i64) -> Result<()> {
        if partition.len() != self.n {
            return Err(Error::domain(format!(
                "partition {partition:?} has wrong length for n={}",
                self.n
            )));
        }
        let entry = self.terms.entry(partition.clone()).or_insert(0);
        *entry = entry.checked_add(coeff).ok_or(Error::Overflow)?;
        if *entry == 0 {
            self.terms.remove(&partition);
        }
        Ok(())
    }
}

fn signed_count(sets: &[crate::hook::PairSet]) -> Result<i64> {
    let mut total = 0i64;
    for set in sets {
        let term = if set.len() % 2 == 0 { 1 } else { -1 };
        total = total.checked_add(term).ok_or(Error::Overflow)?;
    }
    Ok(total)
}

fn coefficient_from_result(result: &ConstructionResult, graph: &GraphSpec, method: Method) -> Result<i64> {
    match method {
        Method::Brute => {
            let sets = justifying_sets_among(&result.permutation, &graph.free_pairs())?;
            signed_count(&sets)
        }
        Method::Closure => {
            let sets = arc_break_closure(result);
            signed_count(&filter_by_graph(&sets, graph))
        }
    }
}

/// The signed count of justifying pair sets for `t` avoiding the graph's
/// edges: each set of even size contributes `+1`, each of odd size `-1`.
/// The base vector `2-hook + staircase` is justified by the empty set alone
/// and always has coefficient 1.
pub fn coefficient(t: &ExponentVector, graph: &GraphSpec, method: Method) -> Result<i64> {
    let n = t.len();
    if graph.n() != n {
        return Err(Error::domain(format!("graph on {} vertices, target length {n}", graph.n())));
    }
    if t == &two_hook_base(n)? {
        return Ok(1);
    }
    if !is_two_hook_permutation(t) {
        return Err(Error::domain(format!("{t:?} is neither the base vector nor a 2-hook permutation")));
    }
    coefficient_from_result(&replay_for(t)?, graph, method)
}

/// Builds the full expansion: for every permutation found by the construction
/// (plus the base vector), the signed coefficient count is accumulated into
/// the Schur bucket of its sorted form, weighted by the sorting sign.
pub fn schur_expansion(n: usize, graph: &GraphSpec, method: Method) -> Result<SchurExpansion> {
    if graph.n() != n {
        return Err(Error::domain(format!("graph on {} vertices, expected {n}", graph.n())));
    }
    let mut expansion = SchurExpansion::new(n);
    expansion.add_term(two_hook(n)?, 1)?;
    for result in enumerate_constructions(n)? {
        let c = coefficient_from_result(&result, graph, method)?;
        if c == 0 {
            continue;
        }
        let (partition, sign) = schur_label(&result.permutation)?;
        expansion.add_term(partition, sign.checked_mul(c).ok_or(Error::Overflow)?)?;
    }
    Ok(expansion)
}

/// A sparse multivariate polynomial with arbitrary-precision integer
/// coefficients, keyed by exponent vector. Zero coefficients are dropped.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePolynomial {
    n: usize,
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl SparsePolynomial {
    pub fn monomial(exponents: ExponentVector, coeff: BigInt) -> Self {
        let n = exponents.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exponents, coeff);
        }
        Self { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, BigInt> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients, i.e. the value at `x = (1, ..., 1)`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Multiplies by the binomial `x_i - x_j` (1-based indices).
    pub fn times_difference(&self, i: usize, j: usize) -> SparsePolynomial {
        assert!(i >= 1 && j >= 1 && i <= self.n && j <= self.n && i != j);
        let mut terms: BTreeMap<ExponentVector, BigInt> = BTreeMap::new();
        for (exp, coeff) in &self.terms {
            let mut bump = |idx: usize, c: BigInt| {
                let mut entries = exp.entries().to_vec();
                entries[idx - 1] += 1;
                let key = ExponentVector::new(entries).expect("nonempty");
                let slot = terms.entry(key.clone()).or_insert_with(BigInt::zero);
                *slot += c;
                if slot.is_zero() {
                    terms.remove(&key);
                }
            };
            bump(i, coeff.clone());
            bump(j, -coeff.clone());
        }
        SparsePolynomial { n: self.n, terms }
    }
}

/// Largest number of binomial factors the oracle expands by default.
pub const ORACLE_MAX_FACTORS: usize = 21;

/// Independent route to the expansion: expand the monomial
/// `x^(2-hook + out-degrees)` times the product of `(x_i - x_j)` over all
/// pairs missing from the graph, discard repeated-exponent terms, and convert
/// each survivor through its sorted form with the sorting sign. Nothing from
/// the construction modules is consulted.
pub fn direct_expansion_oracle(graph: &GraphSpec) -> Result<SchurExpansion> {
    direct_expansion_oracle_bounded(graph, ORACLE_MAX_FACTORS)
}

/// [`direct_expansion_oracle`] with an explicit factor-count bound.
pub fn direct_expansion_oracle_bounded(graph: &GraphSpec, max_factors: usize) -> Result<SchurExpansion> {
    let n = graph.n();
    let free = graph.free_pairs();
    if free.len() > max_factors {
        return Err(Error::ResourceBound { size: free.len(), bound: max_factors });
    }
    let exponents = &two_hook(n)?.to_exponents() + &graph.out_degrees();
    let mut poly = SparsePolynomial::monomial(exponents, BigInt::one());
    for (i, j) in free.iter() {
        poly = poly.times_difference(i, j);
    }
    let mut expansion = SchurExpansion::new(n);
    for (t, coeff) in poly.terms() {
        if !t.has_distinct_entries() {
            continue;
        }
        let (partition, sign) = schur_label(t)?;
        let c = coeff.to_i64().ok_or(Error::Overflow)?;
        expansion.add_term(partition, sign.checked_mul(c).ok_or(Error::Overflow)?)?;
    }
    Ok(expansion)
}

/// The number of semistandard Young tableaux of the given shape and content:
/// rows weakly increase, columns strictly increase, and value `v` appears
/// `content_v` times. Counted by backtracking over cells in row-major order.
pub fn kostka(shape: &Partition, content: &Partition) -> Result<i64> {
    if shape.total() != content.total() {
        return Err(Error::domain(format!(
            "shape total {} differs from content total {}",
            shape.total(),
            content.total()
        )));
    }
    let rows: Vec<usize> = shape.parts().iter().filter(|&&p| p > 0).map(|&p| p as usize).collect();
    let mut remaining: Vec<i64> = content.parts().to_vec();
    if rows.is_empty() {
        return Ok(1);
    }
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&w| vec![0; w]).collect();

    fn fill(
        rows: &[usize],
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<i64>,
        r: usize,
        c: usize,
    ) -> i64 {
        if r == rows.len() {
            return 1;
        }
        let (next_r, next_c) = if c + 1 < rows[r] { (r, c + 1) } else { (r + 1, 0) };
        let min_left = if c > 0 { grid[r][c - 1] } else { 1 };
        let min_above = if r > 0 && c < rows[r - 1] { grid[r - 1][c] + 1 } else { 1 };
        let lo = min_left.max(min_above);
        let mut count = 0;
        for v in lo..=remaining.len() {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            grid[r][c] = v;
            count += fill(rows, grid, remaining, next_r, next_c);
            remaining[v - 1] += 1;
        }
        count
    }

    Ok(fill(&rows, &mut grid, &mut remaining, 0, 0))
}

/// All partitions of `n`, zero-padded to ambient length `n`, in increasing
/// lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: i64, max_part: i64, acc: &mut Vec<i64>, n: usize, out: &mut Vec<Partition>) {
        if remaining == 0 {
            let mut parts = acc.clone();
            parts.resize(n, 0);
            out.push(Partition::new(parts).expect("built decreasing"));
            return;
        }
        if acc.len() == n {
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            acc.push(part);
            go(remaining - part, part, acc, n, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(n as i64, n as i64, &mut Vec::new(), n, &mut out);
    out.sort();
    out
}

/// Converts a Schur combination to monomial-basis coefficients through the
/// Kostka matrix: the coefficient of `m_mu` is the sum over shapes of
/// `coeff(shape) * K(shape, mu)`.
pub fn to_monomial_basis(expansion: &SchurExpansion) -> Result<BTreeMap<Partition, i64>> {
    let n = expansion.n();
    let mut out = BTreeMap::new();
    for mu in partitions_of(n) {
        let mut total = 0i64;
        for (shape, &coeff) in expansion.terms() {
            let k = kostka(shape, &mu)?;
            total = total
                .checked_add(coeff.checked_mul(k).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
        if total != 0 {
            out.insert(mu, total);
        }
    }
    Ok(out)
}

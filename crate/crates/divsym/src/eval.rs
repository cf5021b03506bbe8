//! End-to-end numeric verification with exact rational arithmetic: evaluate
//! the divided-symmetrization definition at distinct-integer points and
//! compare against the claimed Schur expansion evaluated through the
//! bialternant formula.
//!
//! The full sum over all n! permutations is the reference semantics here. No
//! shortcut is taken on purpose: this module exists to be slow but obviously
//! correct.

use itertools::Itertools;
use num::{BigInt, BigRational, One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::expansion::{schur_expansion, Method, SchurExpansion};
use crate::hook::{two_hook, ExponentVector, GraphSpec, Partition};

/// Exact rational values, always in canonical form (coprime numerator and
/// denominator, positive denominator).
pub type ExactRational = BigRational;

/// Largest `n` the permutation-sum evaluator accepts by default (8! terms).
pub const EVAL_MAX_N: usize = 8;

fn check_distinct(point: &ExponentVector) -> Result<()> {
    if !point.has_distinct_entries() {
        return Err(Error::SingularPoint(point.entries().to_vec()));
    }
    Ok(())
}

fn big(x: i64) -> BigInt {
    BigInt::from(x)
}

fn pow_big(base: i64, exp: i64) -> BigInt {
    debug_assert!(exp >= 0);
    num::pow::pow(big(base), exp as usize)
}

/// The divided symmetrization at a concrete point: the sum over all
/// permutations `d` of `x_d^(lambda + out-degrees) / prod over edges of
/// (x_d(i) - x_d(j))`, computed exactly.
pub fn eval_divsym(
    lambda: &Partition,
    graph: &GraphSpec,
    point: &ExponentVector,
) -> Result<ExactRational> {
    eval_divsym_bounded(lambda, graph, point, EVAL_MAX_N)
}

/// [`eval_divsym`] with an explicit size bound.
pub fn eval_divsym_bounded(
    lambda: &Partition,
    graph: &GraphSpec,
    point: &ExponentVector,
    max_n: usize,
) -> Result<ExactRational> {
    let n = graph.n();
    if point.len() != n || lambda.len() != n {
        return Err(Error::domain(format!(
            "expected length {n}, got point {} and partition {}",
            point.len(),
            lambda.len()
        )));
    }
    if n > max_n {
        return Err(Error::ResourceBound { size: n, bound: max_n });
    }
    check_distinct(point)?;
    let exponents = &lambda.to_exponents() + &graph.out_degrees();
    let edges = graph.edges();
    let xs = point.entries();
    let mut total = BigRational::zero();
    for perm in (0..n).permutations(n) {
        let mut numer = BigInt::one();
        for (pos, &image) in perm.iter().enumerate() {
            numer *= pow_big(xs[image], exponents.entries()[pos]);
        }
        let mut denom = BigInt::one();
        for (a, b) in edges.iter() {
            denom *= big(xs[perm[a - 1]]) - big(xs[perm[b - 1]]);
        }
        total += BigRational::new(numer, denom);
    }
    Ok(total)
}

/// Fraction-free determinant of an integer matrix (Bareiss elimination with
/// row pivoting). Intermediate values stay integral.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// The Schur function of the given shape at a concrete point, by the
/// bialternant: `det(x_i^(shape_j + n - j))` divided by the Vandermonde
/// product. The quotient is checked to be an integer, as it must be.
pub fn eval_schur(shape: &Partition, point: &ExponentVector) -> Result<ExactRational> {
    let n = point.len();
    if shape.len() != n {
        return Err(Error::domain(format!(
            "shape length {} does not match point length {n}",
            shape.len()
        )));
    }
    check_distinct(point)?;
    let xs = point.entries();
    let matrix: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| pow_big(xs[i], shape.parts()[j] + (n - 1 - j) as i64))
                .collect()
        })
        .collect();
    let alternant = bareiss_determinant(matrix);
    let mut vandermonde = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            vandermonde *= big(xs[i]) - big(xs[j]);
        }
    }
    let value = BigRational::new(alternant, vandermonde);
    if !value.is_integer() {
        return Err(Error::domain(format!(
            "alternant for {shape:?} at {point:?} is not divisible by the Vandermonde"
        )));
    }
    Ok(value)
}

/// Draws `count` points with `n` pairwise-distinct coordinates each from
/// `{1, ..., 1000}`, deterministically from the seed.
pub fn sample_points(n: usize, count: usize, seed: u64) -> Vec<ExponentVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    while points.len() < count {
        let mut coords: Vec<i64> = Vec::with_capacity(n);
        while coords.len() < n {
            let c = rng.gen_range(1..=1000);
            if !coords.contains(&c) {
                coords.push(c);
            }
        }
        points.push(ExponentVector::new(coords).expect("n >= 1"));
    }
    points
}

/// Draws `count` graphs on `n` vertices containing the path, each non-path
/// pair included independently, deterministically from the seed.
pub fn sample_supergraphs(n: usize, count: usize, seed: u64) -> Vec<GraphSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates: Vec<_> = GraphSpec::path(n)
        .expect("n >= 1")
        .free_pairs()
        .iter()
        .collect();
    (0..count)
        .map(|_| {
            let extra: Vec<_> = candidates
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            GraphSpec::new(n, extra).expect("candidates avoid path edges")
        })
        .collect()
}

/// Outcome of one point comparison.
#[derive(Clone, Debug)]
pub struct PointCheck {
    pub point: ExponentVector,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
    pub matched: bool,
}

/// Per-point results of a verification run.
#[derive(Clone, Debug)]
pub struct PointCheckReport {
    pub n: usize,
    pub checks: Vec<PointCheck>,
}

impl PointCheckReport {
    pub fn all_matched(&self) -> bool {
        self.checks.iter().all(|c| c.matched)
    }
}

/// Compares the divided symmetrization against a claimed expansion at the
/// given points. A mismatch is an error carrying the point and both values.
pub fn verify_expansion_at_points(
    expansion: &SchurExpansion,
    graph: &GraphSpec,
    points: &[ExponentVector],
) -> Result<PointCheckReport> {
    let n = graph.n();
    let lambda = two_hook(n)?;
    let mut checks = Vec::with_capacity(points.len());
    for point in points {
        let lhs = eval_divsym(&lambda, graph, point)?;
        let mut rhs = BigRational::zero();
        for (shape, &coeff) in expansion.terms() {
            rhs += BigRational::from(big(coeff)) * eval_schur(shape, point)?;
        }
        let matched = lhs == rhs;
        checks.push(PointCheck { point: point.clone(), lhs: lhs.clone(), rhs: rhs.clone(), matched });
        if !matched {
            return Err(Error::Verification {
                point: point.entries().to_vec(),
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
    }
    Ok(PointCheckReport { n, checks })
}

/// Builds the expansion for the 2-hook on `n` and checks it at `count` seeded
/// points.
pub fn verify_at_points(
    n: usize,
    graph: &GraphSpec,
    count: usize,
    seed: u64,
) -> Result<PointCheckReport> {
    let expansion = schur_expansion(n, graph, Method::Brute)?;
    let points = sample_points(n, count, seed);
    verify_expansion_at_points(&expansion, graph, &points)
}

use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// An exponent vector has two equal entries, so its Schur term vanishes.
    #[error("repeated exponent entries in {0:?}")]
    RepeatedExponent(Vec<i64>),

    /// A placement request was not legal under the weak construction rules.
    #[error("illegal placement of value {value} at index {index}: {reason}")]
    Placement {
        value: i64,
        index: usize,
        reason: String,
    },

    /// A weak-legal placement violated its strong bound. The construction
    /// guarantees this can never happen, so seeing it means a broken invariant.
    #[error("strong legality violated: value {value} at index {index} exceeds bound {bound}")]
    StrongLegality { value: i64, index: usize, bound: i64 },

    /// An arc break was requested whose preconditions do not hold.
    #[error("arc break rejected: {0}")]
    ArcBreak(String),

    /// An instance is larger than the configured bound for an exhaustive method.
    #[error("instance size {size} exceeds configured bound {bound}")]
    ResourceBound { size: usize, bound: usize },

    /// An evaluation point has two equal coordinates, making a denominator zero.
    #[error("evaluation point {0:?} has repeated coordinates")]
    SingularPoint(Vec<i64>),

    /// A numeric identity check failed at a concrete point.
    #[error("verification mismatch at point {point:?}: lhs {lhs} != rhs {rhs}")]
    Verification {
        point: Vec<i64>,
        lhs: String,
        rhs: String,
    },

    /// The three count routes disagreed at some size.
    #[error("counting disagreement at n={n}: direct {direct}, closed form {closed_form}, recurrence {recurrence}")]
    CountMismatch {
        n: usize,
        direct: i64,
        closed_form: i64,
        recurrence: i64,
    },

    /// Exact integer arithmetic left the range of the coefficient type.
    #[error("integer coefficient overflow")]
    Overflow,
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

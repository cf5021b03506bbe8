//! Schur-basis expansions of divided symmetrizations for 2-hook partitions.
//!
//! The library builds the expansion two independent ways — a combinatorial
//! state-machine construction with per-term signed coefficient counts, and a
//! direct sparse-polynomial expansion — and verifies both against exact
//! rational evaluation at concrete points. Everything is exact integer or
//! rational arithmetic; there is no floating point anywhere.

pub mod construction;
pub mod counting;
pub mod error;
pub mod eval;
pub mod expansion;
pub mod hook;
pub mod justify;

pub use error::{Error, Result};

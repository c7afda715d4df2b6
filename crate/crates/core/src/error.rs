//! Crate-wide error type.

use thiserror::Error as ThisError;

#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    /// Malformed permutation text or word. `pos` is the 1-based token position.
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// The minor does not belong to any essential cell of the permutation.
    #[error("{minor} is not an essential minor of w = {w}")]
    NotEssential { minor: String, w: String },

    /// The minor is essential but attends a lower-rank essential cell, so it
    /// is dispensable as a generator.
    #[error("{minor} is not elusive for w = {w}: it attends ({i},{j})")]
    NotElusive {
        minor: String,
        w: String,
        i: usize,
        j: usize,
    },

    #[error("invalid shift: {msg}")]
    InvalidShift { msg: String },

    #[error("cell ({i},{j}) is not in the Rothe diagram of w = {w}")]
    NotInDiagram { i: usize, j: usize, w: String },

    /// Diagonal-order claims are only verified for vexillary permutations.
    #[error("diagonal term order requires a vexillary permutation; w = {w} contains 2143 at positions {positions:?}")]
    DiagonalOrderRequiresVexillary { w: String, positions: Vec<usize> },

    #[error("limits exceeded: {msg}")]
    LimitsExceeded { msg: String },

    /// A mathematical invariant the library relies on failed to hold. This is
    /// never a user error; it comes with full diagnostics for reproduction.
    #[error("internal invariant violation: {msg}")]
    InvariantViolation { msg: String },
}

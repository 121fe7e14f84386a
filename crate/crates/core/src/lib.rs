//! Sprague-Grundy workbench for seven impartial games.
//!
//! * [`engine`]: game-agnostic solver (Grundy values, outcome search,
//!   engine move choice, periodicity detection).
//! * [`pile`]: Chocolate Stones, Demon Money, Sum-from-Product, No-Factor.
//! * [`grid`]: Diamond (line removal) and Remove-a-Square.
//! * [`graph`]: Remove-an-Edge with domino-covering and edge-delete
//!   cross-checks.
//! * [`oeis`]: b-file snapshots and sequence diffs.
//! * [`play`]: a uniform, serializable front over all seven games.
//! * [`service`]: JSON-over-HTTP play API; [`cli`]: the command-line tool.

pub mod cli;
pub mod engine;
pub mod graph;
pub mod grid;
pub mod oeis;
pub mod pile;
pub mod play;
pub mod service;

pub use engine::{mex, nim_sum, Grundy, Outcome, Position, SolveCache, SolveError, Solver};

/// Rejected game parameters.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct ParamError(pub String);

impl ParamError {
    pub fn new(msg: impl Into<String>) -> Self {
        Self(msg.into())
    }
}

//! Reidemeister-type moves as rewrites of Gauss codes, and the passes that
//! bring a code to the sheet-free, helix-free, end-trimmed form used for
//! coloring.
//!
//! Moves are purely syntactic. They keep codes well formed and keep coloring
//! counts unchanged, but nothing checks that a move is realizable in a
//! planar projection.

mod moves;
mod normalize;
mod trace;
mod twist;

use thiserror::Error;

pub use moves::{apply_move, candidate_moves, MoveSpec};
pub use normalize::{normalize, normalize_helices, reduce_ends, segment_sheets, HelixMode};
pub use trace::{snapshot_hash, RewriteTrace, TraceStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("move not applicable: {0}")]
    NotApplicable(String),
    #[error("malformed code: {}", .0.join(", "))]
    MalformedCode(Vec<&'static str>),
    #[error("trace step {step}: expected hash {expected}, found {found}")]
    TraceMismatch { step: usize, expected: String, found: String },
    #[error("unreadable trace: {0}")]
    BadTrace(String),
}

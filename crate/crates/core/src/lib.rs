//! Multi-pile generalizations of the two-pile game one-or-one-or-one-of-both.
//!
//! Three rule sets are supported:
//!
//! * Version A: take one token from each pile of any nonempty set of piles.
//! * Version B: take one token from a single pile, or one from every pile.
//! * Version C: take one token from a single pile, or one from each of two piles.
//!
//! The crate provides an exact memoized solver, closed-form P-position rules
//! for each version, and sweeps that compare every rule against the solver
//! over bounded regions of positions.

pub mod classify;
pub mod cli;
pub mod error;
pub mod game;
pub mod pattern;
pub mod position;
pub mod region;
pub mod solver;
pub mod verify;

pub use error::Error;
pub use game::{options, Outcome, Variant};
pub use pattern::{MatchMode, ParityPattern, Slot};
pub use position::{Position, SizeCounts};
pub use region::Region;
pub use classify::{Applicability, ClassifierId};
pub use solver::MemoTable;
pub use verify::{Status, SweepOptions, VerificationReport};

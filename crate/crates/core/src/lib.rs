//! Exact combinatorics of Motzkin paths and their connection to Fibonacci
//! numbers.
//!
//! Every Motzkin number splits into an even component and an odd component,
//! counting the Motzkin paths with an even or odd number of up steps. The
//! difference of the two components is the *shadow* of the Motzkin number,
//! and reverting the shadow generating function lands in the Fibonacci
//! family. This crate computes each link of that chain in exact arithmetic
//! and cross-checks it against independent oracles:
//!
//! - [`series`]: truncated formal power series over exact rationals, with
//!   square root, composition, reversion, and sign inversion
//! - [`motzkin`]: recurrences, closed-form expansions, functional equations,
//!   and the binomial-Catalan formula
//! - [`paths`]: explicit path enumeration and a parity-counting dynamic
//!   program, the combinatorial ground truth
//! - [`sequence`]: offset-indexed integer sequences and the nine cluster ids
//! - [`chain`]: the assembled pipeline, forward and backward, by both routes
//!
//! ```
//! use motzkin_shadows::chain::{self, ChainRoute};
//! use motzkin_shadows::sequence::SequenceId;
//!
//! let shadows = chain::generate(SequenceId::A343773, 6);
//! let heads: Vec<i64> = shadows.terms().iter().map(|t| t.try_into().unwrap()).collect();
//! assert_eq!(heads, [1, 1, 0, -2, -3, 1]);
//!
//! let fib = chain::run_forward(ChainRoute::InvertThenReverse, 6);
//! let heads: Vec<i64> = fib.terms().iter().map(|t| t.try_into().unwrap()).collect();
//! assert_eq!(heads, [1, 1, 2, 3, 5, 8]);
//! ```

pub mod chain;
pub mod motzkin;
pub mod paths;
pub mod sequence;
pub mod series;

pub use chain::ChainRoute;
pub use motzkin::{ClosedForm, EngineError, FunctionalEquationKind};
pub use paths::{MotzkinPath, Parity, PathError, Step};
pub use sequence::{IntegerSequence, SequenceId, UnknownSequenceId};
pub use series::{ExactRational, PowerSeries, SeriesError};

//! Exact counts of the set partitions of an m x n grid of cells under the
//! symmetries of a rectangle (identity, the two mirror reflections and the
//! half turn).
//!
//! Three independent routes produce the same numbers:
//!
//! * generating functions evaluated with exact truncated power series
//!   ([`counts`], [`generating`], [`series`]),
//! * closed summation formulas ([`counts::closed_sum_h_even`] and friends),
//! * brute-force enumeration of every partition ([`oracle`]).

pub mod counts;
pub mod error;
pub mod foundation;
pub mod generating;
pub mod oracle;
pub mod series;
pub mod symmetry;

pub use counts::{count_report, fixed_partition_count, CountReport, SymmetryClasses};
pub use error::{Error, Result};
pub use foundation::{bell, binomial, factorial, stirling2, CombinatoricTables};
pub use oracle::{fixed_count_recurrence, Oracle, SetPartition, Survey};
pub use series::{SeriesSpace, TruncatedSeries};
pub use symmetry::{GridShape, InvolutionProfile, KleinOrbits, SymmetryElement};

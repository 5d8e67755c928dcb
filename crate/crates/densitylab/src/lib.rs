//! Exact subgraph counting, extremal constructions, and step-graphon
//! functionals for graph density problems.
//!
//! The crate has three layers:
//!
//! * exact combinatorics over small and medium graphs: bit-row adjacency,
//!   unbounded-integer counts, reduced-rational densities
//!   ([`graph_core`], [`counting`], [`constructions`], [`ordered_moves`]);
//! * closed-form asymptotic density formulas and their crossing points
//!   ([`formulas`]);
//! * a step-graphon engine for degree functionals, corner operators and the
//!   density-preserving perturbation move ([`graphon`]).
//!
//! The [`oracle`] module certifies the extremal statements exhaustively at
//! desk scale and fuels the randomized property suites. Everything is wired
//! into the `densitylab` command line tool (see [`cli`]).

pub mod cli;
pub mod constructions;
pub mod counting;
pub mod formulas;
pub mod graph_core;
pub mod graphon;
pub mod oracle;
pub mod ordered_moves;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

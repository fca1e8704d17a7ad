//! Exact models of general `n`-adic grid systems in `R^d` and decision
//! procedures for their adjacency.
//!
//! * [`exact`]: rationals, scale matching, lattice distances, primitive roots.
//! * [`grid`]: grid representations, location functions and cube queries.
//! * [`criteria`]: far-number and far-pair verdicts, adjacency certificates,
//!   base compatibility.
//! * [`covering`]: the direct covering oracle, adversarial cubes and
//!   empirical comparability constants.
//! * [`io`]: the JSON family format and report writers.
//! * [`cli`]: the `dyadic-atlas` command line.

pub mod cli;
pub mod covering;
pub mod criteria;
pub mod error;
pub mod exact;
pub mod grid;
pub mod io;

pub use error::{Error, Result};

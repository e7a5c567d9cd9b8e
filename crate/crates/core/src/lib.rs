//! Explicit bounds for the Chebyshev functions psi and theta.
//!
//! The crate computes zeta zeros on the critical line, turns sums over
//! them into certified bounds, assembles those into the epsilon and eta
//! tables for `|psi(x) - x|`, and checks the results against exact values
//! obtained by sieving.

pub mod chebyshev_compute;
pub mod cli;
pub mod epsilon_engine;
pub mod error;
pub mod quad;
pub mod rounding;
pub mod special_fns;
pub mod zero_sum_bounds;
pub mod zeta_zeros;

pub use error::{Error, Result};

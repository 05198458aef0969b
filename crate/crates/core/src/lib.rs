//! Analysis toolkit for single transmit antenna selection over Rayleigh fading.
//!
//! The selection gain `X_(m)` is the largest of `m` i.i.d. Gamma(n, 1) channel
//! norms. This crate provides its exact law ([`order_stats`]), Gumbel
//! extreme-value approximations ([`gumbel`]), outage and ergodic capacity
//! ([`capacity`]), greedy vs. round-robin scheduling gains ([`scheduling`]),
//! an open-loop MIMO baseline ([`mimo`]) and an independent Monte Carlo
//! oracle that simulates the physical channel ([`oracle`]).
//!
//! Monte Carlo work runs on rayon when the `parallel` feature is enabled
//! (default). Results are bit-identical across thread counts and with the
//! feature disabled, see [`exec`].

// `!(x > 0.0)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod capacity;
pub mod error;
pub mod exec;
pub mod gumbel;
pub mod mimo;
pub mod oracle;
pub mod order_stats;
pub mod quadrature;
pub mod rng;
pub mod scheduling;
pub mod special;

pub use capacity::{CapacityResult, LinkParams, Method, OutageMode};
pub use error::{Error, Result};
pub use exec::Execution;
pub use gumbel::{GumbelFit, Strategy};
pub use oracle::{EmpiricalSummary, McConfig, McRun};
pub use order_stats::{SelectionConfig, TailValue};
pub use scheduling::{GainMode, GainReport, SchedulingScenario};

/// Euler–Mascheroni constant, the mean of the standard Gumbel law.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

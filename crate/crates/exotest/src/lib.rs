//! Exogeneity tests for categorical treatments in right-censored duration data.
//!
//! The library estimates censored conditional ranks through stratified
//! Kaplan-Meier fits, compares the rank distribution across instrument and
//! covariate cells with Kolmogorov-Smirnov and Cramér-von Mises statistics,
//! and calibrates critical values by resampling. A Monte Carlo harness
//! reproduces size and power studies for the tests.
//!
//! Modules follow the processing pipeline:
//!
//! - [`dataset`]: observation model, CSV ingestion, per-cell audits
//! - [`survival`]: product-limit estimation, quantiles, log-rank utility
//! - [`ranks`]: estimated conditional ranks and their distribution estimators
//! - [`teststats`]: the KS and CM statistics on an explicit evaluation grid
//! - [`bootstrap`]: resampling schemes A/B and p-value computation
//! - [`montecarlo`]: data-generating process and warp-speed power studies
//! - [`cli`]: batch command-line front end

pub mod bootstrap;
pub mod cli;
pub mod dataset;
pub mod montecarlo;
pub mod ranks;
pub mod rng;
pub mod survival;
pub mod teststats;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Malformed input file; `line` is 1-based.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A contract violation in arguments or configuration.
    #[error("{0}")]
    InvalidInput(String),
    /// Data too degenerate for the requested computation.
    #[error("degenerate data: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

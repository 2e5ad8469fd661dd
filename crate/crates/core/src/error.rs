//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Errors produced by grid construction, path building, feasibility
/// searches and collar construction.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Invalid grid/spectral configuration or mismatched field dimensions.
    Config(String),
    /// Poisson right-hand side violates the solvability condition.
    Solvability { residual: f64, tolerance: f64 },
    /// A parameter left its admissible domain (c <= 0, theta outside (0,1/3), ...).
    Domain(String),
    /// No feasible constant was found in the search range.
    Infeasible(String),
    /// A stated hypothesis of a construction failed; the message names it.
    Hypothesis(String),
    /// A side condition of a closed-form estimate failed.
    SideCondition(String),
    /// Input configuration not supported by this operation.
    Unsupported(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Config(msg) => write!(f, "configuration error: {msg}"),
            Error::Solvability { residual, tolerance } => write!(
                f,
                "poisson solvability violated: mean residual {residual:e} exceeds tolerance {tolerance:e}"
            ),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Infeasible(msg) => write!(f, "infeasible: {msg}"),
            Error::Hypothesis(msg) => write!(f, "hypothesis failed: {msg}"),
            Error::SideCondition(msg) => write!(f, "side condition violated: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported configuration: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

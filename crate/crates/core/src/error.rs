use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("alpha_m undefined for n={n}, m={m}: 1/m must lie below the mode value of the chi-square density")]
    AlphaUndefined { n: u32, m: u64 },

    #[error("{strategy} constants unavailable for n={n}, m={m}: {reason}")]
    StrategyUnavailable {
        strategy: &'static str,
        n: u32,
        m: u64,
        reason: &'static str,
    },

    #[error("{what} did not converge after {iterations} iterations (last estimate {estimate})")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
        estimate: f64,
    },

    #[error(
        "quadrature did not reach tolerance {tolerance:e}: estimate {estimate}, error {error:e}"
    )]
    Quadrature {
        estimate: f64,
        error: f64,
        tolerance: f64,
    },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for solver/quadrature faults, false for rejected inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NoConvergence { .. } | Error::Quadrature { .. })
    }
}

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] antsel::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 3 for numerical diagnostics, 2 for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_numerical() => 3,
            _ => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Core(e) => match e {
                antsel::Error::InvalidParameter { .. } => "invalid-parameter",
                antsel::Error::AlphaUndefined { .. } => "alpha-undefined",
                antsel::Error::StrategyUnavailable { .. } => "strategy-unavailable",
                antsel::Error::NoConvergence { .. } => "no-convergence",
                antsel::Error::Quadrature { .. } => "quadrature",
            },
            CliError::Io(_) | CliError::Csv(_) => "io",
        }
    }

    /// Single-line report: `error: kind=<kind> exit=<code> message="<text>"`.
    pub fn report_line(&self) -> String {
        format!(
            "error: kind={} exit={} message={:?}",
            self.kind(),
            self.exit_code(),
            self.to_string()
        )
    }
}

use thiserror::Error;
use token_spectra::Error as CoreError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("output: {0}")]
    Output(String),
}

/// Process exit status.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Ok = 0,
    Input = 1,
    Guard = 2,
    Theorem = 3,
}

/// How a core error affects one item of a batch.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Severity {
    /// Hypotheses not met for this graph; the item is skipped.
    Skip,
    Guard,
    /// An asserted identity or numeric invariant failed.
    Invariant,
}

pub fn severity(e: &CoreError) -> Severity {
    match e {
        CoreError::GuardExceeded { .. } => Severity::Guard,
        CoreError::ContainmentFailure { .. }
        | CoreError::IdentityViolated { .. }
        | CoreError::NumericHealth(_)
        | CoreError::NoConvergence { .. }
        | CoreError::NotSymmetric { .. }
        | CoreError::CheckFailed(_)
        | CoreError::NotEquitable { .. } => Severity::Invariant,
        _ => Severity::Skip,
    }
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Core(e) => match severity(e) {
                Severity::Skip => Exit::Input,
                Severity::Guard => Exit::Guard,
                Severity::Invariant => Exit::Theorem,
            },
            _ => Exit::Input,
        }
    }
}

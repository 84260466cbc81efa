use std::path::PathBuf;

use proxi_core::Error;

/// Exit statuses of the `proxi` binary.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const GEOMETRY: i32 = 3;
    pub const ORACLE_GUARD: i32 = 4;
    pub const MISMATCH: i32 = 5;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Input { path: PathBuf, source: Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Csv(_) => exit::IO,
            CliError::Input { source, .. } | CliError::Core(source) => core_code(source),
            CliError::Usage(_) => exit::PARSE,
            CliError::Mismatch(_) => exit::MISMATCH,
        }
    }
}

fn core_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::InvalidGraph(_) | Error::CoordinateRange(_) | Error::BetaOutOfRange(_) => {
            exit::PARSE
        }
        Error::OracleLimit { .. } => exit::ORACLE_GUARD,
        Error::Internal(_) => exit::IO,
        // Planarity, general position and the forest requirement.
        _ => exit::GEOMETRY,
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

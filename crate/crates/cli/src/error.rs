use std::io;

use harmonic_shear::ShearError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error(transparent)]
    Numeric(#[from] ShearError),
    #[error("{0} point(s) did not converge; pass --allow-sentinels to accept them")]
    Unconverged(usize),
}

impl CliError {
    /// 2 usage, 3 I/O, 4 no oracle / not liftable / other numerical refusal,
    /// 5 unconverged points without `--allow-sentinels`.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Numeric(ShearError::InvalidArgument(_)) => 2,
            CliError::Numeric(_) => 4,
            CliError::Unconverged(_) => 5,
        }
    }

    pub fn io(path: impl Into<String>, source: io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }
}

use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] lincomp_core::Error),

    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    /// The fast result disagreed with a reference computation.
    #[error("verification failed: {0}")]
    Mismatch(String),
}

impl CliError {
    /// Process exit status: 2 for verification mismatches, 1 for everything
    /// the user can fix by changing the input or flags.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 2,
            _ => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

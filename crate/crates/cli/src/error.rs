use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] priestley::Error),
}

impl CliError {
    /// 2 for anything the user has to fix in the invocation or input file,
    /// 1 for a well-formed request the library refused.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(_) | CliError::Write { .. } => 1,
            CliError::Read { .. } | CliError::Parse(_) | CliError::Usage(_) => 2,
        }
    }
}

use std::path::PathBuf;

use pursuit_core::Mode;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("config file not found: {0}")]
    MissingFile(PathBuf),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("line {line}: expected `key=value`, got `{content}`")]
    Syntax { line: usize, content: String },

    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },

    #[error("line {line}: key `{key}` given more than once")]
    DuplicateKey { line: usize, key: String },

    #[error("malformed value for `{key}`: `{value}` ({expected})")]
    Malformed { key: String, value: String, expected: &'static str },

    #[error("invalid `{key}`: {reason}")]
    Invalid { key: String, reason: String },

    #[error("trace line {line}: {reason}")]
    TraceFormat { line: usize, reason: String },

    #[error("trace has no steps")]
    EmptyTrace,

    #[error("{mode} dt={dt} run {run} (seed {seed}): {source}")]
    Episode { mode: Mode, dt: f64, run: u64, seed: u64, source: pursuit_core::Error },

    #[error(transparent)]
    Core(#[from] pursuit_core::Error),
}

impl HarnessError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        HarnessError::Io { path: path.into(), source }
    }

    /// Process exit code: 1 for usage and configuration problems, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::MissingFile(_)
            | HarnessError::Syntax { .. }
            | HarnessError::UnknownKey { .. }
            | HarnessError::DuplicateKey { .. }
            | HarnessError::Malformed { .. }
            | HarnessError::Invalid { .. } => 1,
            HarnessError::Core(pursuit_core::Error::InvalidConfig { .. }) => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;

use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Failures surfaced by the workbench and mapped to process exit codes.
#[derive(Debug, Error)]
pub enum WorkbenchError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("{0}")]
    Input(ugg_core::Error),
    #[error("size {n} exceeds cap {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("{0}")]
    Failed(String),
}

impl WorkbenchError {
    pub fn malformed(line: usize, msg: impl Into<String>) -> Self {
        WorkbenchError::Malformed {
            line,
            msg: msg.into(),
        }
    }

    /// 1 for a failed check, 2 for bad input, 3 for a size cap.
    pub fn exit_code(&self) -> i32 {
        match self {
            WorkbenchError::Failed(_) => 1,
            WorkbenchError::Io { .. } | WorkbenchError::Malformed { .. } | WorkbenchError::Input(_) => 2,
            WorkbenchError::SizeCap { .. } => 3,
        }
    }
}

impl From<ugg_core::Error> for WorkbenchError {
    fn from(e: ugg_core::Error) -> Self {
        match e {
            ugg_core::Error::SizeTooLarge { n, cap } => WorkbenchError::SizeCap { n, cap },
            ugg_core::Error::InternalInvariantBroken(why) => WorkbenchError::Failed(why),
            other => WorkbenchError::Input(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, WorkbenchError>;

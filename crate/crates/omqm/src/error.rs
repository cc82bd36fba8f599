use std::path::PathBuf;

/// Everything the front end can fail with.
#[derive(Debug, thiserror::Error)]
pub enum AppError {
    #[error(transparent)]
    Core(#[from] omqm_core::Error),

    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    FileFormat {
        path: PathBuf,
        source: omqm_core::Error,
    },

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("{0}")]
    Argument(String),
}

impl AppError {
    /// 0 success, 2 argument, 3 resource, 4 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Core(e) | AppError::FileFormat { source: e, .. } => {
                if e.is_resource_error() {
                    3
                } else if e.is_numerical_error() {
                    4
                } else {
                    2
                }
            }
            AppError::Read { .. } | AppError::Write { .. } => 3,
            AppError::Config { .. } | AppError::Argument(_) => 2,
        }
    }
}

pub type AppResult<T> = Result<T, AppError>;

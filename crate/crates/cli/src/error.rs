use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("b-file line {line}: expected `index value`, got {content:?}")]
    MalformedLine { line: usize, content: String },

    #[error("b-file line {line}: index {got} does not follow {previous}")]
    NonContiguous {
        line: usize,
        previous: i64,
        got: i64,
    },

    #[error("b-file {id} has no entries")]
    EmptyBfile { id: String },

    #[error("table parse error: {0}")]
    TableFormat(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Core(#[from] polygram_core::Error),

    #[error("{0}")]
    Usage(String),
}

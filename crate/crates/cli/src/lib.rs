//! Library side of the `optcs` command-line tool: instance files, result
//! documents and command execution.

pub mod app;
pub mod instance;
pub mod report;

use thiserror::Error;

pub use app::{run, Cli};
pub use instance::{parse_instance, serialize_instance};
pub use report::{verify, ResultFile};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Solver(#[from] optcs::Error),
    #[error("output failed verification: {0}")]
    Verification(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// 2 when the instance is valid but beyond the solvers' reach, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        use optcs::Error as E;
        match self {
            CliError::Solver(E::Unsolvable { .. } | E::TooManyPlayers { .. } | E::IntractableEvaluation { .. }) => 2,
            _ => 1,
        }
    }
}

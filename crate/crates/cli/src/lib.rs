//! Library half of the `specbounds` command-line tool: curve tables, CSV and
//! SVG emission, model-space name parsing, and the command implementations.

pub mod commands;
pub mod spaces;
pub mod svg;
pub mod table;

/// Command failures mapped onto the process exit contract:
/// 2 usage, 3 numerical, 4 invariant violation (bound fell below exact).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(String),
    Invariant(String),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numerical(m) => write!(f, "numerical failure: {m}"),
            CliError::Invariant(m) => write!(f, "invariant violation: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Invariant(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

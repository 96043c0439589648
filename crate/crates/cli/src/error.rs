use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed SCX: {0}")]
    Scx(normpm::Error),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] normpm::Error),
}

impl CliError {
    pub fn syntax(line: usize, message: impl Into<String>) -> Self {
        CliError::Syntax { line, message: message.into() }
    }
}

//! Text formats: the scalar expression grammar, `.axalg` algebra documents
//! and `.axet` axet documents, both JSON with every scalar as a string.

mod document;
mod expr;

use thiserror::Error;

pub use document::{
    field_from_json, field_to_json, parse_algebra, parse_axet, serialize_algebra, serialize_axet, AlgebraDocument,
};
pub use expr::parse_scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable {name:?} at position {position}")]
    UnknownVariable { name: String, position: usize },
    #[error("division by zero at position {position}")]
    DivisionByZero { position: usize },
    #[error("invalid JSON at line {line}, column {column}: {message}")]
    Json { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
}

impl IoError {
    /// Where the problem is: a character position, a line and column, or a JSON path.
    pub fn location(&self) -> String {
        match self {
            IoError::Syntax { position, .. }
            | IoError::UnknownVariable { position, .. }
            | IoError::DivisionByZero { position } => format!("position {position}"),
            IoError::Json { line, column, .. } => format!("line {line}, column {column}"),
            IoError::Schema { path, .. } => path.clone(),
        }
    }
}

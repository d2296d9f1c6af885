use thiserror::Error;

use crate::herg::ValidationReport;

#[derive(Debug, Error)]
pub enum HergError {
    #[error("invalid graph: {0}")]
    Invalid(ValidationReport),
    #[error("unknown edge {0}")]
    UnknownEdge(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("vertex {0} is not a leaf")]
    NotALeaf(String),
    #[error("leaf {0} carries a half-ribbon")]
    LeafCarriesHalf(String),
    #[error("edge at leaf {0} is twisted")]
    TwistedLeafEdge(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {message}")]
    Semantic { line: usize, message: String },
    #[error("cannot place {0} edges or half-ribbons on zero vertices")]
    ImpossibleCounts(usize),
}

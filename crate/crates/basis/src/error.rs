use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BasisError {
    #[error("invalid index for {family}: {constraint} violated")]
    InvalidIndex {
        family: &'static str,
        constraint: &'static str,
    },
    #[error("{family} index needs {expected} components, got {got}")]
    Arity {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{family} point needs {expected} coordinates, got {got}")]
    Dimension {
        family: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("argument {name} = {value} outside {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
    #[error("laguerre alpha must exceed -1, got {0}")]
    InvalidAlpha(f64),
    #[error("unknown family tag '{0}'")]
    UnknownFamily(String),
    #[error("cannot read '{0}' as an integer or half-integer")]
    BadHalfInteger(String),
    #[error("degree {degree} outside supported range (max {max})")]
    Unsupported { degree: i64, max: i64 },
}

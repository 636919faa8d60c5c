use thiserror::Error;

use crate::paracomplex::ParaComplex;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ZmcError {
    /// Division by a para-complex number on (or within tolerance of) the null cone.
    #[error("division by non-invertible para-complex number {divisor}")]
    NonInvertible { divisor: ParaComplex },

    /// A function that is undefined on the null cone (log, argh) was given a null argument.
    #[error("{op} is undefined on the null cone (argument {arg})")]
    NullConeArgument { op: &'static str, arg: ParaComplex },

    #[error("domain violation: {0}")]
    DomainViolation(String),

    /// Two independent integration paths disagreed.
    #[error("line integral is path dependent (paths differ by {discrepancy:e})")]
    PathDependent { discrepancy: f64 },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),

    /// An evaluation error tagged with the sub-expression that raised it.
    #[error("in `{node}`: {source}")]
    AtNode {
        node: String,
        #[source]
        source: Box<ZmcError>,
    },
}

impl ZmcError {
    /// Strips any [`ZmcError::AtNode`] wrappers.
    pub fn root_cause(&self) -> &ZmcError {
        match self {
            ZmcError::AtNode { source, .. } => source.root_cause(),
            other => other,
        }
    }

    /// The offending sub-expression, when the error came out of expression evaluation.
    pub fn node(&self) -> Option<&str> {
        match self {
            ZmcError::AtNode { node, .. } => Some(node),
            _ => None,
        }
    }
}

impl From<std::io::Error> for ZmcError {
    fn from(e: std::io::Error) -> Self {
        ZmcError::Io(e.to_string())
    }
}

pub type Result<T, E = ZmcError> = std::result::Result<T, E>;

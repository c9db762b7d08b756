use thiserror::Error;

use crate::diagram::WireSignature;

/// Errors raised while building or evaluating diagrams.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("phase vector has {got} entries, dimension {dim} needs {}", dim - 1)]
    PhaseLength { dim: usize, got: usize },

    #[error("{name} requires wire dimension >= {min}, got {dim}")]
    DimensionTooSmall {
        name: &'static str,
        min: usize,
        dim: usize,
    },

    #[error("sequential composition mismatch: upper codomain {upper} != lower domain {lower}")]
    SeqMismatch {
        upper: WireSignature,
        lower: WireSignature,
    },

    #[error("interpretation would allocate {entries} matrix entries (limit {limit})")]
    MatrixTooLarge { entries: usize, limit: usize },

    #[error("generator {name} is not part of the {calculus} calculus")]
    ForeignGenerator {
        name: &'static str,
        calculus: &'static str,
    },

    #[error(
        "rule {rule}: LHS signature {lhs_dom}->{lhs_cod} does not match RHS {rhs_dom}->{rhs_cod}"
    )]
    RuleSignatureMismatch {
        rule: String,
        lhs_dom: WireSignature,
        lhs_cod: WireSignature,
        rhs_dom: WireSignature,
        rhs_cod: WireSignature,
    },

    #[error("rule {rule} has no parameter named {name}")]
    MissingParameter { rule: String, name: &'static str },

    #[error("diagram mixes wire dimensions ({0} vs {1}) and cannot be printed in single-dimension syntax")]
    MixedDimensions(usize, usize),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl Error {
    /// Byte offset for parse errors, if this is one.
    pub fn position(&self) -> Option<usize> {
        match self {
            Error::Parse { position, .. } => Some(*position),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

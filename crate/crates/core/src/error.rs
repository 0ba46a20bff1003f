use thiserror::Error;

use crate::tree::OrderKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} is outside the supported range 1..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("degree {degree} exceeds the {what} cap of {cap}")]
    CapExceeded {
        what: &'static str,
        degree: usize,
        cap: usize,
    },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("cannot parse {input:?} at byte {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },

    #[error("invalid label {0:?}; labels match [a-z0-9_]+")]
    InvalidLabel(String),

    #[error("a single vertex has no left Butcher decomposition")]
    SingleVertex,

    #[error("the {0} order is only defined on planar trees")]
    PlanarOrderRequired(OrderKind),

    #[error("vertex {0} does not belong to the tree")]
    InvalidVertex(String),

    #[error("section maps {tree} to {image}, which forgets to {projected}")]
    SectionMismatch {
        tree: String,
        image: String,
        projected: String,
    },

    #[error("section covers degree {degree} but has no entry for {missing}")]
    SectionIncomplete { degree: usize, missing: String },

    #[error("section has two entries for {0}")]
    SectionDuplicate(String),

    #[error("section does not cover {0}")]
    NotCovered(String),

    #[error("monomials are not tree-grounded (missing: [{}], duplicated: [{}])", .missing.join(", "), .duplicated.join(", "))]
    NotTreeGrounded {
        missing: Vec<String>,
        duplicated: Vec<String>,
    },

    #[error("operation needs a single-generator basis, got {0} generators")]
    MultipleGenerators(usize),

    #[error("{context}, line {line}: {message}")]
    File {
        context: String,
        line: usize,
        message: String,
    },

    #[error("json: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(input: &str, position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}

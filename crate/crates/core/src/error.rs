use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("duplicate atom label `{0}`")]
    DuplicateAtom(String),
    #[error("{what} count {count} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        count: usize,
        bound: usize,
    },
    #[error("element {element} is outside a carrier of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("the trivial Boolean algebra has no ultrafilters")]
    TrivialAlgebra,
    #[error("malformed structure: {0}")]
    Malformed(String),
    #[error("expected the {expected} signature")]
    SignatureMismatch { expected: &'static str },
    #[error("precondition violated: {what}")]
    Precondition {
        what: String,
        report: Option<Box<AxiomReport>>,
    },
    #[error("tuple {0:?} violates its invariant")]
    InvalidTuple(Vec<u32>),
    #[error("closed form for {what} disagrees with the transported operation at {tuple:?}")]
    ClosedFormMismatch { what: String, tuple: Vec<u32> },
    #[error("subset is not closed under {0}")]
    NotClosed(String),
    #[error("ideal sequence is not symmetric: I_{i} != I_{j}")]
    AsymmetricIdeals { i: usize, j: usize },
    #[error("open family is not symmetric: O_{i} != O_{j}")]
    AsymmetricOpens { i: usize, j: usize },
    #[error("verification failed: {what}")]
    Verification {
        what: String,
        report: Option<Box<AxiomReport>>,
    },
    #[error("term {term} expects {expected} argument(s), got {got}")]
    Arity {
        term: &'static str,
        expected: usize,
        got: usize,
    },
}

impl Error {
    pub(crate) fn precondition(what: impl Into<String>, report: AxiomReport) -> Self {
        Error::Precondition {
            what: what.into(),
            report: Some(Box::new(report)),
        }
    }

    pub(crate) fn verification(what: impl Into<String>, report: AxiomReport) -> Self {
        Error::Verification {
            what: what.into(),
            report: Some(Box::new(report)),
        }
    }

    /// The report that triggered this error, if one was attached.
    pub fn report(&self) -> Option<&AxiomReport> {
        match self {
            Error::Precondition { report, .. } | Error::Verification { report, .. } => {
                report.as_deref()
            }
            _ => None,
        }
    }
}

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("{what}: size {actual} exceeds cap {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("graph is not chordal")]
    NotChordal,
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn cap(what: &'static str, limit: usize, actual: usize) -> Error {
        Error::CapExceeded {
            what,
            limit,
            actual,
        }
    }

    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

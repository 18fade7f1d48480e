use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element id {id} is out of range for a ground set of size {size}")]
    ElementOutOfRange { id: usize, size: usize },

    #[error("unknown element label `{0}`")]
    UnknownElement(String),

    #[error("{what} has {size} items, above the enumeration bound of {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("invalid circuit family: {0}")]
    InvalidCircuits(String),

    #[error("invalid basis family: {0}")]
    InvalidBases(String),

    #[error("invalid matroid description: {0}")]
    InvalidMatroid(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{0} is not a flat")]
    NotAFlat(String),

    #[error("{0} is not a modular hyperplane")]
    NotModularHyperplane(String),

    #[error("element {0} lies in the hyperplane")]
    ElementInHyperplane(String),

    #[error("elements {0} and {1} are parallel (or one is a loop)")]
    ParallelElements(String, String),

    #[error("{0} is not a circuit")]
    NotACircuit(String),

    #[error("graph is not chordal")]
    NotChordal,

    #[error("input is disconnected; analyze each connected component separately")]
    Disconnected,

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("weighting is not legitimate: {0}")]
    IllegitimateWeighting(String),

    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("internal invariant failed: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

use thiserror::Error;

use crate::digraph::VertexCycle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(usize),
    #[error("digraph is not strongly connected")]
    NotStrong,
    #[error("input must have at least two vertices")]
    TrivialInput,
    #[error("a cycle of length {residue} (mod {modulus}) exists: {witness:?}")]
    HypothesisViolated {
        modulus: usize,
        residue: usize,
        witness: VertexCycle,
    },
    #[error("instance has {n} vertices, above the exact-search bound {bound}")]
    OracleBound { n: usize, bound: usize },
    #[error("cycle enumeration exceeded the cap of {0} cycles")]
    CycleCapExceeded(usize),
    #[error("ear search exceeded the cap of {0} explored paths")]
    EarCapExceeded(usize),
    #[error("vertices {u} and {v} are not adjacent")]
    NotAdjacent { u: usize, v: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A fact the construction guarantees turned out false. Either the
    /// hypothesis was skipped and does not hold, or there is a bug.
    #[error("internal defect: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;

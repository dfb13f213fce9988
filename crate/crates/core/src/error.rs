use thiserror::Error;

use crate::convexity::Kind;
use crate::graph::{Side, Vertex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(Vertex),
    #[error("partition violation: {0}")]
    PartitionViolation(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("terminal set is empty")]
    EmptyTerminals,
    #[error("budget {budget} exceeds the number of vertices {order}")]
    BudgetTooLarge { budget: usize, order: usize },
    #[error("layout does not cover the {side} side exactly: {detail}")]
    LayoutMismatch { side: Side, detail: String },
    #[error("malformed layout: {0}")]
    MalformedLayout(String),
    #[error("vertex {0} has an empty neighborhood")]
    EmptyNeighborhood(Vertex),
    #[error("instance is not {kind}-convex on {side}")]
    NotConvex { kind: Kind, side: Side },
    #[error("solver expects a {expected} structure, instance declares {found}")]
    StructureMismatch { expected: String, found: String },
    #[error("terminal set must equal the independent set; normalize first")]
    TerminalsNotI,
    #[error("independent vertex {vertex} has degree {degree} > {bound}")]
    DegreeBoundViolated {
        vertex: Vertex,
        degree: usize,
        bound: usize,
    },
    #[error("budget exhausted by forced picks: {forced} forced, budget {budget}")]
    BudgetExhausted { forced: usize, budget: usize },
    #[error("instance has {order} vertices, oracle cap is {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("no feasible solution exists: {0}")]
    Infeasible(String),
    #[error("kernelization proves a no-instance at budget {0}")]
    NoInstance(usize),
    #[error("corrupt certificate: {0}")]
    CorruptCertificate(String),
    #[error("malformed X3C instance: {0}")]
    MalformedX3C(String),
    #[error("malformed vertex cover instance: {0}")]
    MalformedVC(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

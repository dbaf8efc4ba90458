use thiserror::Error;

use crate::conditions::FeasibilityReport;

/// Errors shared across the crate.
///
/// Input errors mean the caller handed over malformed data; capacity errors
/// mean an exhaustive scan was asked to exceed its configured limit; internal
/// consistency errors flag states the underlying theory rules out, so they
/// always indicate a bug or a violated precondition.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("graph needs at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceed the supported maximum of 64")]
    TooManyVertices(usize),
    #[error("loop at vertex `{0}`: edges and arcs need two distinct endpoints")]
    LoopAt(String),
    #[error("vertex index {index} out of range for {count} vertices")]
    VertexIndex { index: usize, count: usize },
    #[error("{kind} index {index} out of range")]
    ElementIndex { index: usize, kind: &'static str },
    #[error("arc {index} is not a valid growth candidate: {reason}")]
    BadCandidate { index: usize, reason: &'static str },
    #[error("subpartition blocks must be nonempty and pairwise disjoint")]
    InvalidSubpartition,
    #[error("k must be positive")]
    ZeroK,
    #[error("root bounds need f(v) <= g(v) everywhere, violated at vertex index {0}")]
    BoundsOrder(usize),
    #[error("root bounds cover {bounds} vertices but the graph has {graph}")]
    BoundsMismatch { bounds: usize, graph: usize },
    #[error("enumeration over {n} vertices exceeds the limit of {limit}")]
    EnumerationLimit { n: usize, limit: usize },
    #[error("oracle caps exceeded: {0}")]
    OracleCaps(String),
    #[error("expected a digraph but the graph has undirected edges")]
    EdgesPresent,
    #[error("expected an undirected graph but the graph has arcs")]
    ArcsPresent,
    #[error("family members {i} and {j} do not properly intersect")]
    NotProperlyIntersecting { i: usize, j: usize },
    #[error("family members must be pairwise disjoint")]
    FamilyNotDisjoint,
    #[error("feasibility conditions do not hold: {0}")]
    ConditionsViolated(Box<FeasibilityReport>),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

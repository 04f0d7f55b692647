//! Crate-wide error type.

/// Errors produced by instance construction, sampling, algorithms, exact
/// solvers, and the text-format parsers.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("node {node} out of range, instance has {node_count} nodes")]
    NodeOutOfRange { node: usize, node_count: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("self-arc at node {0}")]
    SelfArc(usize),
    #[error("weight {value} at index {index} is negative or not finite")]
    BadWeight { index: usize, value: f64 },
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("arc list contains a directed cycle")]
    CyclicInput,
    #[error("hyperedge {0} is empty")]
    EmptyHyperedge(usize),
    #[error("hyperedge {0} repeats node {1}")]
    RepeatedMember(usize, usize),
    #[error("hyperedge {index} has color {color}, valid colors are 1..={color_count}")]
    ColorOutOfRange {
        index: usize,
        color: usize,
        color_count: usize,
    },
    #[error("weight list is empty")]
    EmptyWeights,
    #[error("cannot shuffle zero items")]
    ZeroItems,
    #[error("sequence is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("permutation has length {got}, expected {expected}")]
    PermutationLength { expected: usize, got: usize },
    #[error("edge order is not an ordering of the graph's edge set")]
    InvalidEdgeOrder,
    #[error("node {0} has no cluster assigned")]
    UnassignedNode(usize),
    #[error("cluster indices are not contiguous starting at 1")]
    NonContiguousClusters,
    #[error("assignment has length {got}, expected {expected}")]
    AssignmentLength { expected: usize, got: usize },
    #[error("weak edge ({0}, {1}) is not an edge of the graph")]
    WeakEdgeNotInGraph(usize, usize),
    #[error("new edge ({0}, {1}) is already an edge of the graph")]
    NewEdgeInGraph(usize, usize),
    #[error("instance too large for exact search: {what} is {actual}, limit is {limit}; use a smaller instance")]
    GuardExceeded {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("need at least {min} runs, got {got}")]
    TooFewRuns { min: usize, got: usize },
    #[error("algorithm {algo} does not apply to this instance kind")]
    AlgorithmInstanceMismatch { algo: &'static str },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

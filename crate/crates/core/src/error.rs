use std::fmt;

use thiserror::Error;

use crate::Vertex;

/// A single reason why raw quiver data was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("the valued graph is not connected")]
    Disconnected,
    #[error("symmetrizability fails on edge {{{0},{1}}}: d_{0}*b_{0}{1} != d_{1}*b_{1}{0}")]
    SymmetrizabilityViolated(Vertex, Vertex),
    #[error("oriented cycle {0:?}")]
    OrientedCycle(Vec<Vertex>),
    #[error("loop edge at vertex {0}")]
    LoopEdge(Vertex),
    #[error("a valued graph needs at least two vertices")]
    SingleVertex,
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("duplicate vertex {0}")]
    DuplicateVertex(Vertex),
    #[error("edge {{{0},{1}}} listed more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("edge {{{0},{1}}} has a zero valuation entry")]
    ZeroValuation(Vertex, Vertex),
    #[error("vertex {0} has no positive symmetrizer weight d")]
    MissingWeight(Vertex),
    #[error("edge {{{0},{1}}} has no arrow")]
    UnorientedEdge(Vertex, Vertex),
    #[error("arrow {0}->{1} does not lie on an edge")]
    ArrowWithoutEdge(Vertex, Vertex),
    #[error("edge {{{0},{1}}} has more than one arrow")]
    DoublyOrientedEdge(Vertex, Vertex),
}

/// The full list of violations found while validating a quiver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violations(pub Vec<Violation>);

impl fmt::Display for Violations {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("; "))
    }
}

impl std::error::Error for Violations {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    Invalid(#[from] Violations),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("reflecting at {vertex} creates the oriented cycle {cycle:?}")]
    CycleCreated { vertex: Vertex, cycle: Vec<Vertex> },
    #[error("vertex {0} is not a sink")]
    NotASink(Vertex),
    #[error("vertex {0} is not a source")]
    NotASource(Vertex),
    #[error("sequence {0:?} is not (+)-admissible")]
    NotAdmissible(Vec<Vertex>),
    #[error("sequences live on different base quivers")]
    BaseMismatch,
    #[error("vertex set {0:?} is not a filter")]
    NotAFilter(Vec<Vertex>),
    #[error("layer {0} is not a filter")]
    LayerNotAFilter(usize),
    #[error("layer {0} is empty")]
    EmptyLayer(usize),
    #[error("layers {0} and {next} violate the hull condition", next = .0 + 1)]
    HullConditionViolated(usize),
    #[error("the second sequence does not precede the first")]
    NotAPrefix,
    #[error("the operation needs a nonempty sequence")]
    EmptySequence,
    #[error("sequence is not tight")]
    NotTight,
    #[error("size must be positive")]
    ZeroSize,
    #[error("representations need b_ij = b_ji and d = 1 (edge {{{0},{1}}} or its weights differ)")]
    NonSymmetricValuation(Vertex, Vertex),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dimension reflection at {0} goes negative")]
    KillsAtX(Vertex),
    #[error("no annihilating sequence of length <= {0}")]
    NotPreprojective(usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

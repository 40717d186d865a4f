//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

use crate::topology::{EdgeId, NodeId};

/// Everything that can go wrong while building or querying the domain values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A node label was referenced but never declared.
    UnknownNode(NodeId),
    /// An edge id was referenced but does not exist in the topology at hand.
    UnknownEdge(EdgeId),
    /// Two edges in one topology share the same id.
    DuplicateEdge(EdgeId),
    /// An edge endpoint is not a member of the node set.
    DanglingEndpoint { edge: EdgeId, node: NodeId },
    /// A self-loop in a layer that must be a simple graph.
    SelfLoop(EdgeId),
    /// A parallel edge in a layer that must be a simple graph.
    ParallelEdge { edge: EdgeId, existing: EdgeId },
    /// A logical node is absent from the physical node set.
    NodeNotPhysical(NodeId),
    /// An input layer is disconnected.
    DisconnectedLayer(&'static str),
    /// An edge sequence is not contiguous (consecutive edges share no node).
    BrokenWalk { edge: EdgeId },
    /// A walk does not start/end at the declared endpoints.
    EndpointMismatch {
        expected: (NodeId, NodeId),
        found: (NodeId, NodeId),
    },
    /// A walk revisits a node, so it is not a simple path.
    NotSimple(EdgeId),
    /// A path between distinct nodes cannot be empty; between equal nodes it must be.
    BadEmptyPath { from: NodeId, to: NodeId },
    /// No path exists between the requested nodes.
    NoPath { from: NodeId, to: NodeId },
    /// Two mappings assign different lightpaths to the same logical edge.
    MergeConflict(EdgeId),
    /// A logical edge of the checked subgraph has no lightpath assigned.
    UnmappedEdge(EdgeId),
    /// The checked subgraph is disconnected; survivability is only defined on
    /// connected subgraphs.
    DisconnectedSubgraph,
    /// k must be at least 1.
    InvalidK(usize),
    /// A search cap or budget that must be positive was zero.
    ZeroCap(&'static str),
    /// A subgraph refers to nodes or edges outside its host graph.
    NotASubgraph(String),
    /// A failure set had the wrong cardinality.
    BadFailureSetSize { expected: usize, found: usize },
    /// Vulnerability tracing was requested on a converged outcome.
    NotStuck,
    /// Self-loop completion was requested before the contraction converged.
    NotConverged,
    /// An internal verification (run with verify enabled) failed. This means
    /// a produced mapping did not pass its independent re-check.
    VerificationFailed(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownNode(n) => write!(f, "unknown node `{n}`"),
            Error::UnknownEdge(e) => write!(f, "unknown edge `{e}`"),
            Error::DuplicateEdge(e) => write!(f, "duplicate edge id `{e}`"),
            Error::DanglingEndpoint { edge, node } => {
                write!(f, "edge `{edge}` has undeclared endpoint `{node}`")
            }
            Error::SelfLoop(e) => write!(f, "self-loop `{e}` not allowed in a simple layer"),
            Error::ParallelEdge { edge, existing } => {
                write!(f, "edge `{edge}` parallel to `{existing}` in a simple layer")
            }
            Error::NodeNotPhysical(n) => {
                write!(f, "logical node `{n}` is absent from the physical layer")
            }
            Error::DisconnectedLayer(layer) => write!(f, "{layer} layer is disconnected"),
            Error::BrokenWalk { edge } => {
                write!(f, "edge `{edge}` does not continue the walk")
            }
            Error::EndpointMismatch { expected, found } => write!(
                f,
                "walk connects `{}`..`{}` but `{}`..`{}` was required",
                found.0, found.1, expected.0, expected.1
            ),
            Error::NotSimple(n) => write!(f, "walk revisits `{n}`, not a simple path"),
            Error::BadEmptyPath { from, to } => write!(
                f,
                "path between `{from}` and `{to}` has the wrong emptiness (empty iff endpoints coincide)"
            ),
            Error::NoPath { from, to } => write!(f, "no path between `{from}` and `{to}`"),
            Error::MergeConflict(e) => {
                write!(f, "mappings assign different lightpaths to `{e}`")
            }
            Error::UnmappedEdge(e) => write!(f, "logical edge `{e}` has no lightpath"),
            Error::DisconnectedSubgraph => {
                write!(f, "survivability is undefined on a disconnected subgraph")
            }
            Error::InvalidK(k) => write!(f, "k must be >= 1, got {k}"),
            Error::ZeroCap(which) => write!(f, "{which} must be >= 1"),
            Error::NotASubgraph(why) => write!(f, "not a subgraph: {why}"),
            Error::BadFailureSetSize { expected, found } => {
                write!(f, "failure set must contain exactly {expected} edges, got {found}")
            }
            Error::NotStuck => write!(f, "outcome converged; there is no vulnerable area to trace"),
            Error::NotConverged => {
                write!(f, "self-loop completion requires a single-vertex contraction")
            }
            Error::VerificationFailed(what) => write!(f, "verification failed: {what}"),
        }
    }
}

impl core::error::Error for Error {}

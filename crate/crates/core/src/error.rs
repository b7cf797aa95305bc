use thiserror::Error;

use crate::id::{EdgeId, HyperedgeId, VertexId};

#[derive(Debug, Error)]
pub enum Error {
    #[error("no edges")]
    NoEdges,

    #[error("loop edge {0}{1} rejected: graphs here are loopless")]
    LoopRejected(VertexId, VertexId),

    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),

    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),

    #[error("unknown hyperedge {0}")]
    UnknownHyperedge(HyperedgeId),

    #[error("vertex subset is not contained in the vertex set")]
    InvalidSubset,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("hyperedge {0} does not contain vertex {1}")]
    DetachMissingVertex(HyperedgeId, VertexId),

    #[error("switch precondition violated at {0}: {1}")]
    SwitchPrecondition(VertexId, String),

    #[error("{what} exceeds the desk-scale bound ({actual} > {limit})")]
    DeskScaleExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("not essentially 3-edge-connected: witnessing cut {cut:?} of size {size}")]
    NotEssentiallyConnected { cut: Vec<EdgeId>, size: usize },

    #[error("edge {0} collapses under reduction: {1}")]
    EdgeCollapses(EdgeId, String),

    #[error("skeletal search exhausted without witness: theorem falsified at this scale")]
    TheoremFalsified,

    #[error("spanning-trail search exhausted: proposition falsified at this scale")]
    PropositionFalsified,

    #[error("counting not applicable: {0}")]
    CountingNotApplicable(String),

    #[error("association ill-defined: class {0} has more than one associated hyperedge")]
    AssociationIllDefined(VertexId),

    #[error("pipeline exhausted all routes for pair ({0}, {1})")]
    PipelineExhausted(EdgeId, EdgeId),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid trail: {0}")]
    InvalidTrail(String),
}

pub type Result<T> = std::result::Result<T, Error>;

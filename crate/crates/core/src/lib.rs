//! Verification toolkit for Hamilton-connectivity of line graphs through
//! dominating trails.
//!
//! The pipeline reduces a multigraph to its core, the core to a 3-hypergraph,
//! and spanning-trail questions in the hypergraph's incidence graph back to
//! internally dominating trails in the original graph. Around the pipeline
//! sit exact desk-scale oracles (Hamilton-path DP, trail DFS, spanning-tree
//! packing, subset enumeration) so every step can be cross-checked, plus a
//! counting certificate and an exact-rational discharging engine.

pub mod canon;
pub mod certify;
pub mod connectivity;
pub mod endgame;
pub mod error;
pub mod gen;
pub mod hypergraph;
pub mod id;
pub mod io;
pub mod multigraph;
pub mod quasigraph;
pub mod reduction;
pub mod report;
pub mod skeletal;
pub mod trails;
pub mod trees;

pub use error::{Error, Result};
pub use id::{EdgeId, HyperedgeId, VertexId};

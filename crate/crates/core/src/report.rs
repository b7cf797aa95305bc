//! Versioned JSON reports: instance metadata with stable content hashes, a
//! connectivity profile computed on both sides of the line-graph
//! correspondence, and per-pair endgame outcomes.

use serde::{Deserialize, Serialize};

use crate::connectivity::{
    edge_connectivity, essential_vertex_connectivity, is_essentially_k_connected,
    r_essential_edge_connectivity, vertex_connectivity, Connectivity,
};
use crate::endgame::EndgameTranscript;
use crate::error::Result;
use crate::gen::instance_hash;
use crate::id::EdgeId;
use crate::multigraph::{line_graph, Multigraph};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceMeta {
    pub name: String,
    pub vertices: usize,
    pub edges: usize,
    /// canonical-form hash, stable under relabeling
    pub hash: String,
}

impl InstanceMeta {
    pub fn new(name: impl Into<String>, g: &Multigraph) -> Self {
        Self {
            name: name.into(),
            vertices: g.num_vertices(),
            edges: g.num_edges(),
            hash: format!("{:016x}", instance_hash(g)),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LineGraphProfile {
    pub vertices: usize,
    pub vertex_connectivity: usize,
    pub essential_connectivity: Connectivity,
    pub essentially_9_connected: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ConnectivityProfile {
    pub edge_connectivity: Connectivity,
    pub essential_edge_connectivity: Connectivity,
    pub two_essential_edge_connectivity: Connectivity,
    /// computed directly on the line graph when it fits the exact regime
    pub line_graph: Option<LineGraphProfile>,
}

/// Both-sided connectivity profile. The direct line-graph computation is
/// skipped above 60 line-graph vertices.
pub fn connectivity_profile(g: &Multigraph) -> Result<ConnectivityProfile> {
    let profile = ConnectivityProfile {
        edge_connectivity: edge_connectivity(g),
        essential_edge_connectivity: r_essential_edge_connectivity(g, 1)?,
        two_essential_edge_connectivity: r_essential_edge_connectivity(g, 2)?,
        line_graph: if g.num_edges() >= 1 && g.num_edges() <= 60 {
            let lg = line_graph(g)?;
            Some(LineGraphProfile {
                vertices: lg.num_vertices(),
                vertex_connectivity: vertex_connectivity(&lg),
                essential_connectivity: essential_vertex_connectivity(&lg),
                essentially_9_connected: is_essentially_k_connected(&lg, 9),
            })
        } else {
            None
        },
    };
    Ok(profile)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairOutcome {
    pub e1: EdgeId,
    pub e2: EdgeId,
    pub transcript: EndgameTranscript,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub instance: InstanceMeta,
    pub profile: ConnectivityProfile,
    pub pairs: Vec<PairOutcome>,
    pub elapsed_ms: u64,
}

impl RunReport {
    pub fn all_verified(&self) -> bool {
        self.pairs.iter().all(|p| p.transcript.verified)
    }
}

//! Reduction pipeline: graph core, vertex classification, the associated
//! 3-hypergraph and the hyperedge image of every original edge.
//!
//! The core deletes leaves and suppresses degree-2 vertices while recording,
//! for every surviving edge, the path of original edges it stands for. On
//! top of the core, a maximal independent set of unprotected degree-3
//! vertices is absorbed into hyperedges, and every original edge is mapped to
//! the hyperedge that now carries it (or to nothing, for edges swallowed by
//! the reduction).

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::connectivity::{is_r_essential_cut, r_essential_edge_connectivity, Connectivity};
use crate::error::{Error, Result};
use crate::hypergraph::{boundary_h, detach, Hypergraph3};
use crate::id::{EdgeId, HyperedgeId, VertexId};
use crate::multigraph::{boundary, Multigraph};

/// Path of original edges represented by one core edge, listed endpoint to
/// endpoint. `vertices` has one more entry than `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl EdgePath {
    fn single(e: EdgeId, u: VertexId, v: VertexId) -> Self {
        Self {
            vertices: vec![u, v],
            edges: vec![e],
        }
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    fn reversed(&self) -> Self {
        Self {
            vertices: self.vertices.iter().rev().copied().collect(),
            edges: self.edges.iter().rev().copied().collect(),
        }
    }

    /// Orients the path to begin at `from`.
    pub fn oriented_from(&self, from: VertexId) -> Self {
        if self.start() == from {
            self.clone()
        } else {
            debug_assert_eq!(self.end(), from);
            self.reversed()
        }
    }

    fn join(first: &EdgePath, via: VertexId, second: &EdgePath) -> Self {
        let a = if first.end() == via {
            first.clone()
        } else {
            first.reversed()
        };
        let b = if second.start() == via {
            second.clone()
        } else {
            second.reversed()
        };
        debug_assert_eq!(a.end(), via);
        debug_assert_eq!(b.start(), via);
        let mut vertices = a.vertices;
        vertices.extend_from_slice(&b.vertices[1..]);
        let mut edges = a.edges;
        edges.extend_from_slice(&b.edges);
        Self { vertices, edges }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoreResult {
    pub core: Multigraph,
    /// Core edge -> the path of original edges it replaces.
    pub suppressed: BTreeMap<EdgeId, EdgePath>,
    pub deleted_leaves: BTreeSet<VertexId>,
    /// Vertices of the original graph missing from the core.
    pub transient: BTreeSet<VertexId>,
    /// Degree-3 core vertices adjacent in the original graph to a transient
    /// vertex.
    pub protected: BTreeSet<VertexId>,
    pub trivial: bool,
    /// Edge paths that closed into loops during suppression and were
    /// discarded together with their original edges.
    pub discarded_loops: Vec<EdgePath>,
}

impl CoreResult {
    /// Original edge -> surviving core edge, if any.
    pub fn core_edge_of(&self, e: EdgeId) -> Option<EdgeId> {
        self.reverse_index().get(&e).copied()
    }

    fn reverse_index(&self) -> BTreeMap<EdgeId, EdgeId> {
        let mut out = BTreeMap::new();
        for (&core_edge, path) in &self.suppressed {
            for &orig in &path.edges {
                out.insert(orig, core_edge);
            }
        }
        out
    }
}

/// Deletes degree-1 vertices, then suppresses degree-2 vertices in ascending
/// id order until none remain. Requires a connected, essentially
/// 3-edge-connected input; the error names a witnessing cut otherwise.
pub fn compute_core(g: &Multigraph) -> Result<CoreResult> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    if !g.is_connected() {
        return Err(Error::PreconditionFailed("graph is not connected".into()));
    }
    match r_essential_edge_connectivity(g, 1)? {
        Connectivity::Finite(c) if c < 3 => {
            let cut = find_small_essential_cut(g, c)?;
            return Err(Error::NotEssentiallyConnected {
                size: cut.len(),
                cut,
            });
        }
        _ => {}
    }

    let leaves: BTreeSet<VertexId> = g.vertices().filter(|&v| g.degree(v) == 1).collect();
    let keep: BTreeSet<VertexId> = g.vertices().filter(|v| !leaves.contains(v)).collect();

    let mut work = g.induced(&keep);
    let mut paths: BTreeMap<EdgeId, EdgePath> = work
        .edges()
        .map(|(e, u, v)| (e, EdgePath::single(e, u, v)))
        .collect();
    let mut discarded_loops = Vec::new();

    if work.num_vertices() <= 1 || work.num_edges() == 0 {
        // a star (or an edge): the core is a single vertex
        let center = keep
            .iter()
            .next()
            .copied()
            .unwrap_or_else(|| g.vertices().next().expect("nonempty graph"));
        let mut core = Multigraph::new();
        core.add_vertex(center);
        let transient: BTreeSet<VertexId> = g.vertices().filter(|&v| v != center).collect();
        return Ok(CoreResult {
            core,
            suppressed: BTreeMap::new(),
            deleted_leaves: leaves,
            transient,
            protected: BTreeSet::new(),
            trivial: true,
            discarded_loops,
        });
    }

    loop {
        let Some(v) = work.vertices().find(|&v| work.degree(v) == 2) else {
            break;
        };
        let incident: Vec<EdgeId> = work.incident_edges(v).to_vec();
        let (a, b) = (incident[0], incident[1]);
        let p = work.other_end(a, v);
        let q = work.other_end(b, v);
        // contract the lower-id edge a; edge b survives spanning p..q
        let joined = EdgePath::join(&paths[&a].oriented_from(p), v, &paths[&b]);
        paths.remove(&a);
        if p == q {
            // contraction made b a loop: drop it and its whole path
            paths.remove(&b);
            discarded_loops.push(joined);
            let mut next = work.without_vertex(v);
            if next.num_vertices() == 1 && next.num_edges() == 0 && paths.is_empty() {
                work = next;
                break;
            }
            // removing v drops exactly edges a and b since d(v) = 2
            next = rebuild(&work, v, None);
            work = next;
        } else {
            paths.insert(b, joined);
            work = rebuild(&work, v, Some((b, p, q)));
        }
    }

    if work.num_vertices() > 1 {
        if let Some(v) = work.vertices().find(|&v| work.degree(v) < 3) {
            return Err(Error::PreconditionFailed(format!(
                "suppression left {v} with degree {} in a nontrivial core",
                work.degree(v)
            )));
        }
    }

    let trivial = work.num_vertices() <= 1;
    let core_vertices: BTreeSet<VertexId> = work.vertices().collect();
    let transient: BTreeSet<VertexId> = g
        .vertices()
        .filter(|v| !core_vertices.contains(v))
        .collect();
    let protected: BTreeSet<VertexId> = work
        .vertices()
        .filter(|&v| work.degree(v) == 3 && g.neighbors(v).iter().any(|u| transient.contains(u)))
        .collect();
    let suppressed = paths
        .into_iter()
        .filter(|(_, p)| !p.edges.is_empty())
        .collect();
    Ok(CoreResult {
        core: work,
        suppressed,
        deleted_leaves: leaves,
        transient,
        protected,
        trivial,
        discarded_loops,
    })
}

/// Rebuilds the working graph with `v` removed; `moved` relocates one of v's
/// former edges to new endpoints.
fn rebuild(work: &Multigraph, v: VertexId, moved: Option<(EdgeId, VertexId, VertexId)>) -> Multigraph {
    let mut next = Multigraph::new();
    for u in work.vertices() {
        if u != v {
            next.add_vertex(u);
        }
    }
    for (e, a, b) in work.edges() {
        if let Some((id, p, q)) = moved {
            if e == id {
                next.add_edge_with_id(e, p, q).expect("relocated edge");
                continue;
            }
        }
        if a != v && b != v {
            next.add_edge_with_id(e, a, b).expect("kept edge");
        }
    }
    next
}

/// A 1-essential cut of size `target`, for error reporting.
fn find_small_essential_cut(g: &Multigraph, target: usize) -> Result<Vec<EdgeId>> {
    let n = g.num_vertices();
    if n <= 22 {
        let vs: Vec<VertexId> = g.vertices().collect();
        for mask in 1u64..(1 << n.saturating_sub(1)) {
            let x: BTreeSet<VertexId> = (0..n - 1)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vs[i])
                .collect();
            let cut = boundary(g, &x)?;
            if cut.size() == target && is_r_essential_cut(g, &x, 1)? {
                return Ok(cut.edges.into_iter().collect());
            }
        }
    }
    Ok(Vec::new())
}

/// Closure of a core vertex set: adds every missing vertex all of whose
/// neighbours lie inside the set.
pub fn xcore(g: &Multigraph, core: &CoreResult, x: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
    let mut out = x.clone();
    for y in &core.transient {
        let nbrs = g.neighbors(*y);
        if !nbrs.is_empty() && nbrs.iter().all(|u| x.contains(u)) {
            out.insert(*y);
        }
    }
    out
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObsCutsReport {
    pub degree_core: usize,
    pub degree_original: usize,
    pub degrees_equal: bool,
    /// For r in 0..=2: whether r-essentiality transfers from the core cut to
    /// the original cut (vacuously true when the core cut is not
    /// r-essential).
    pub essential_transfer: Vec<(usize, bool)>,
}

impl ObsCutsReport {
    pub fn holds(&self) -> bool {
        self.degrees_equal && self.essential_transfer.iter().all(|&(_, ok)| ok)
    }
}

pub fn check_obs_cuts(
    g: &Multigraph,
    core: &CoreResult,
    x: &BTreeSet<VertexId>,
) -> Result<ObsCutsReport> {
    let degree_core = boundary(&core.core, x)?.size();
    let lifted = xcore(g, core, x);
    let degree_original = boundary(g, &lifted)?.size();
    let mut essential_transfer = Vec::new();
    for r in 0..=2 {
        let core_essential = is_r_essential_cut(&core.core, x, r)?;
        let ok = !core_essential || is_r_essential_cut(g, &lifted, r)?;
        essential_transfer.push((r, ok));
    }
    Ok(ObsCutsReport {
        degree_core,
        degree_original,
        degrees_equal: degree_core == degree_original,
        essential_transfer,
    })
}

/// The three connectivity properties a qualifying core must have.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CoreProperties {
    pub three_edge_connected: bool,
    pub essentially_4_edge_connected: bool,
    pub two_essentially_9_edge_connected: bool,
}

impl CoreProperties {
    pub fn all(self) -> bool {
        self.three_edge_connected
            && self.essentially_4_edge_connected
            && self.two_essentially_9_edge_connected
    }
}

pub fn check_core_properties(core: &CoreResult) -> Result<CoreProperties> {
    if core.trivial {
        return Ok(CoreProperties {
            three_edge_connected: true,
            essentially_4_edge_connected: true,
            two_essentially_9_edge_connected: true,
        });
    }
    Ok(CoreProperties {
        three_edge_connected: r_essential_edge_connectivity(&core.core, 0)?.at_least(3),
        essentially_4_edge_connected: r_essential_edge_connectivity(&core.core, 1)?.at_least(4),
        two_essentially_9_edge_connected: r_essential_edge_connectivity(&core.core, 2)?
            .at_least(9),
    })
}

/// Greedy maximal independent set among unprotected degree-3 core vertices.
/// The scan order is ascending id, or a seeded permutation of it.
pub fn select_w(core: &CoreResult, seed: Option<u64>) -> BTreeSet<VertexId> {
    let mut candidates: Vec<VertexId> = core
        .core
        .vertices()
        .filter(|&v| core.core.degree(v) == 3 && !core.protected.contains(&v))
        .collect();
    if let Some(seed) = seed {
        shuffle(&mut candidates, seed);
    }
    let mut chosen: BTreeSet<VertexId> = BTreeSet::new();
    for v in candidates {
        if core
            .core
            .neighbors(v)
            .iter()
            .all(|u| !chosen.contains(u))
        {
            chosen.insert(v);
        }
    }
    chosen
}

/// splitmix64-driven Fisher-Yates; deterministic across platforms.
fn shuffle<T>(items: &mut [T], seed: u64) {
    let mut state = seed;
    let mut next = || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for i in (1..items.len()).rev() {
        let j = (next() % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

/// Where a hyperedge of the reduction came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HyperedgeOrigin {
    /// A core edge between two permanent vertices; carries the core edge id.
    CoreEdge(EdgeId),
    /// The neighbourhood hyperedge of an absorbed temporary vertex.
    Temporary(VertexId),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HyperReduction {
    pub h0: Hypergraph3,
    /// The absorbed (temporary) vertices.
    pub temporary: BTreeSet<VertexId>,
    /// Temporary vertex -> its neighbourhood hyperedge.
    pub h_of: BTreeMap<VertexId, HyperedgeId>,
    /// Temporary vertices whose neighbourhood had fewer than two distinct
    /// vertices; their hyperedge is omitted and the event logged here.
    pub omitted: Vec<VertexId>,
    /// Core edge between permanent vertices -> its 2-hyperedge.
    pub hyperedge_of_core_edge: BTreeMap<EdgeId, HyperedgeId>,
    pub origin: BTreeMap<HyperedgeId, HyperedgeOrigin>,
}

impl HyperReduction {
    pub fn permanent(&self) -> &BTreeSet<VertexId> {
        self.h0.vertex_set()
    }
}

/// Builds the 3-hypergraph: core edges between permanent vertices become
/// 2-hyperedges under the same numeric id, and each temporary vertex w is
/// replaced by a hyperedge on its distinct neighbours (size 2 or 3). A w
/// with fewer than two distinct neighbours contributes nothing but is
/// logged.
pub fn build_h0(core: &CoreResult, w: &BTreeSet<VertexId>) -> Result<HyperReduction> {
    let mut h0 = Hypergraph3::new();
    for v in core.core.vertices() {
        if !w.contains(&v) {
            h0.add_vertex(v);
        }
    }
    let mut hyperedge_of_core_edge = BTreeMap::new();
    let mut origin = BTreeMap::new();
    let mut max_id = 0u32;
    for (e, u, v) in core.core.edges() {
        if !w.contains(&u) && !w.contains(&v) {
            let hid = HyperedgeId(e.0);
            h0.add_hyperedge_with_id(hid, &[u, v])?;
            hyperedge_of_core_edge.insert(e, hid);
            origin.insert(hid, HyperedgeOrigin::CoreEdge(e));
            max_id = max_id.max(e.0 + 1);
        } else {
            max_id = max_id.max(e.0 + 1);
        }
    }
    let mut h_of = BTreeMap::new();
    let mut omitted = Vec::new();
    for &wv in w {
        let nbrs: Vec<VertexId> = core.core.neighbors(wv).into_iter().collect();
        if nbrs.len() < 2 {
            omitted.push(wv);
            continue;
        }
        let hid = HyperedgeId(max_id);
        max_id += 1;
        h0.add_hyperedge_with_id(hid, &nbrs)?;
        h_of.insert(wv, hid);
        origin.insert(hid, HyperedgeOrigin::Temporary(wv));
    }
    Ok(HyperReduction {
        h0,
        temporary: w.clone(),
        h_of,
        omitted,
        hyperedge_of_core_edge,
        origin,
    })
}

/// Closure of a hypergraph vertex set inside the core: adds each temporary
/// vertex with at least two core edges (counting parallels) into the set.
pub fn xhyper(
    core: &CoreResult,
    reduction: &HyperReduction,
    y: &BTreeSet<VertexId>,
) -> BTreeSet<VertexId> {
    let mut out = y.clone();
    for &w in &reduction.temporary {
        let edges_into: usize = core
            .core
            .incident_edges(w)
            .iter()
            .filter(|&&e| y.contains(&core.core.other_end(e, w)))
            .count();
        if edges_into >= 2 {
            out.insert(w);
        }
    }
    out
}

/// Degree identity between a hypergraph vertex set and its core closure.
pub fn check_xhyper_degree(
    core: &CoreResult,
    reduction: &HyperReduction,
    y: &BTreeSet<VertexId>,
) -> Result<(usize, usize)> {
    let d_h = boundary_h(&reduction.h0, y)?.len();
    let lifted = xhyper(core, reduction, y);
    let d_core = boundary(&core.core, &lifted)?.size();
    Ok((d_h, d_core))
}

/// Image of an original edge in the reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum KImage {
    /// The edge vanishes: it touches a leaf, or its whole suppressed path
    /// collapsed, or its temporary vertex had no hyperedge.
    Empty(String),
    Hyperedge(HyperedgeId),
}

impl KImage {
    pub fn hyperedge(&self) -> Option<HyperedgeId> {
        match self {
            KImage::Hyperedge(h) => Some(*h),
            KImage::Empty(_) => None,
        }
    }
}

/// Two-stage map from an original edge to its hyperedge: first to a core
/// edge (nothing for leaf edges; the suppressed image for edges through a
/// suppressed vertex), then from the core edge to a hyperedge (the
/// neighbourhood hyperedge when an endpoint is temporary).
pub fn k_map(
    g: &Multigraph,
    core: &CoreResult,
    reduction: &HyperReduction,
    e: EdgeId,
) -> Result<KImage> {
    let (u, v) = g.try_endpoints(e)?;
    if core.deleted_leaves.contains(&u) || core.deleted_leaves.contains(&v) {
        return Ok(KImage::Empty("incident with a deleted leaf".into()));
    }
    let core_edge = if core.core.has_edge(e) && core.core.is_incident(e, u) {
        e
    } else {
        match core.core_edge_of(e) {
            Some(f) => f,
            None => {
                return Ok(KImage::Empty(
                    "suppressed path collapsed into a discarded loop".into(),
                ))
            }
        }
    };
    let (p, q) = core.core.endpoints(core_edge);
    let temp_end = [p, q]
        .into_iter()
        .find(|t| reduction.temporary.contains(t));
    match temp_end {
        Some(w) => match reduction.h_of.get(&w) {
            Some(&h) => Ok(KImage::Hyperedge(h)),
            None => Ok(KImage::Empty(format!(
                "temporary vertex {w} has no hyperedge"
            ))),
        },
        None => Ok(KImage::Hyperedge(
            reduction.hyperedge_of_core_edge[&core_edge],
        )),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LemmaVerdict {
    pub holds: bool,
    pub witness: Option<EdgeId>,
}

/// Every original edge must keep at least one permanent endpoint.
pub fn check_lemma_permanent(g: &Multigraph, reduction: &HyperReduction) -> LemmaVerdict {
    let permanent = reduction.permanent();
    for (e, u, v) in g.edges() {
        if !permanent.contains(&u) && !permanent.contains(&v) {
            return LemmaVerdict {
                holds: false,
                witness: Some(e),
            };
        }
    }
    LemmaVerdict {
        holds: true,
        witness: None,
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum DetachEvent {
    Applied { hyperedge: HyperedgeId, at: VertexId },
    AlreadyGone { hyperedge: HyperedgeId, at: VertexId },
    AnchorNotMember { hyperedge: HyperedgeId, at: VertexId },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AnchoredHypergraph {
    pub he: Hypergraph3,
    pub anchors: (VertexId, VertexId),
    pub source_edges: (EdgeId, EdgeId),
    pub k_images: (HyperedgeId, HyperedgeId),
    pub detach_log: Vec<DetachEvent>,
}

/// Detaches the images of the two chosen edges at permanent anchor
/// endpoints. Anchors prefer to be distinct, then smallest.
pub fn build_he(
    g: &Multigraph,
    core: &CoreResult,
    reduction: &HyperReduction,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<AnchoredHypergraph> {
    if e1 == e2 {
        return Err(Error::PreconditionFailed(
            "the two edges must be distinct".into(),
        ));
    }
    let k1 = k_map(g, core, reduction, e1)?;
    let k2 = k_map(g, core, reduction, e2)?;
    let (k1, k2) = match (k1, k2) {
        (KImage::Hyperedge(a), KImage::Hyperedge(b)) => (a, b),
        (KImage::Empty(reason), _) => return Err(Error::EdgeCollapses(e1, reason)),
        (_, KImage::Empty(reason)) => return Err(Error::EdgeCollapses(e2, reason)),
    };
    let permanent = reduction.permanent();
    let perm_ends = |e: EdgeId| -> Vec<VertexId> {
        let (u, v) = g.endpoints(e);
        let mut out: Vec<VertexId> = [u, v]
            .into_iter()
            .filter(|x| permanent.contains(x))
            .collect();
        out.dedup();
        out
    };
    let cands1 = perm_ends(e1);
    let cands2 = perm_ends(e2);
    if cands1.is_empty() || cands2.is_empty() {
        return Err(Error::PreconditionFailed(
            "an edge has no permanent endpoint".into(),
        ));
    }
    let mut best: Option<(VertexId, VertexId)> = None;
    for &a1 in &cands1 {
        for &a2 in &cands2 {
            let cand = (a1, a2);
            let better = match best {
                None => true,
                Some(cur) => {
                    let cand_key = (cand.0 == cand.1, cand.0, cand.1);
                    let cur_key = (cur.0 == cur.1, cur.0, cur.1);
                    cand_key < cur_key
                }
            };
            if better {
                best = Some(cand);
            }
        }
    }
    let anchors = best.expect("anchor candidates");

    let mut he = reduction.h0.clone();
    let mut detach_log = Vec::new();
    for (hid, at) in [(k1, anchors.0), (k2, anchors.1)] {
        if !he.has_hyperedge(hid) {
            detach_log.push(DetachEvent::AlreadyGone { hyperedge: hid, at });
            continue;
        }
        if !he.members(hid).contains(&at) {
            detach_log.push(DetachEvent::AnchorNotMember { hyperedge: hid, at });
            continue;
        }
        he = detach(&he, hid, at)?;
        detach_log.push(DetachEvent::Applied { hyperedge: hid, at });
    }
    Ok(AnchoredHypergraph {
        he,
        anchors,
        source_edges: (e1, e2),
        k_images: (k1, k2),
        detach_log,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn e(i: u32) -> EdgeId {
        EdgeId(i)
    }

    fn k4() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn star_core_is_trivial() {
        let star = Multigraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let core = compute_core(&star).unwrap();
        assert!(core.trivial);
        assert_eq!(core.core.num_vertices(), 1);
        assert!(core.core.has_vertex(v(0)));
        assert_eq!(core.transient.len(), 4);
    }

    #[test]
    fn pendant_is_removed() {
        let mut g = k4();
        let leaf = g.fresh_vertex();
        g.add_edge(v(0), leaf).unwrap();
        let core = compute_core(&g).unwrap();
        assert!(!core.trivial);
        assert_eq!(core.core.num_vertices(), 4);
        assert_eq!(core.core.num_edges(), 6);
        assert_eq!(core.deleted_leaves, BTreeSet::from([leaf]));
        // vertex 0 has core degree 3 and a transient neighbour: protected
        assert_eq!(core.protected, BTreeSet::from([v(0)]));
    }

    #[test]
    fn subdivision_is_suppressed() {
        // K4 with edge {2,3} subdivided through vertex 4
        let g = Multigraph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)],
        )
        .unwrap();
        let core = compute_core(&g).unwrap();
        assert_eq!(core.core.num_vertices(), 4);
        assert_eq!(core.core.num_edges(), 6);
        assert!(core.transient.contains(&v(4)));
        // the surviving edge stands for the two-edge path through 4
        let (path_edge, path) = core
            .suppressed
            .iter()
            .find(|(_, p)| p.edges.len() == 2)
            .expect("suppressed path");
        let (a, b) = core.core.endpoints(*path_edge);
        assert_eq!(BTreeSet::from([a, b]), BTreeSet::from([v(2), v(3)]));
        assert_eq!(path.vertices.len(), 3);
        assert_eq!(path.vertices[1], v(4));
        // protected: 2 and 3 have degree 3 and a transient neighbour
        assert_eq!(core.protected, BTreeSet::from([v(2), v(3)]));
    }

    #[test]
    fn core_requires_essential_connectivity() {
        let p4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        match compute_core(&p4) {
            Err(Error::NotEssentiallyConnected { cut, size }) => {
                assert_eq!(size, 1);
                assert_eq!(cut.len(), 1);
            }
            other => panic!("expected essential-connectivity error, got {other:?}"),
        }
    }

    #[test]
    fn provenance_round_trips() {
        let g = Multigraph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)],
        )
        .unwrap();
        let core = compute_core(&g).unwrap();
        for (&ce, path) in &core.suppressed {
            let (a, b) = core.core.endpoints(ce);
            assert_eq!(BTreeSet::from([path.start(), path.end()]), BTreeSet::from([a, b]));
            // interior path vertices are transient degree-2 vertices
            for inner in &path.vertices[1..path.vertices.len() - 1] {
                assert!(core.transient.contains(inner));
                assert_eq!(g.degree(*inner), 2);
            }
            // consecutive incidence in the original graph
            for (i, &edge) in path.edges.iter().enumerate() {
                let (x, y) = g.endpoints(edge);
                assert_eq!(
                    BTreeSet::from([x, y]),
                    BTreeSet::from([path.vertices[i], path.vertices[i + 1]])
                );
            }
        }
    }

    #[test]
    fn xcore_examples() {
        let mut g = k4();
        let leaf = g.fresh_vertex();
        g.add_edge(v(0), leaf).unwrap();
        let core = compute_core(&g).unwrap();
        assert_eq!(
            xcore(&g, &core, &BTreeSet::new()),
            BTreeSet::new()
        );
        let all_core: BTreeSet<VertexId> = core.core.vertices().collect();
        assert_eq!(xcore(&g, &core, &all_core), g.vertex_set().clone());
        assert_eq!(
            xcore(&g, &core, &BTreeSet::from([v(0)])),
            BTreeSet::from([v(0), leaf])
        );
    }

    #[test]
    fn obs_cuts_on_subdivided_instance() {
        let g = Multigraph::from_edges(
            5,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)],
        )
        .unwrap();
        let core = compute_core(&g).unwrap();
        let vs: Vec<VertexId> = core.core.vertices().collect();
        for mask in 0u32..(1 << vs.len()) {
            let x: BTreeSet<VertexId> = (0..vs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| vs[i])
                .collect();
            let report = check_obs_cuts(&g, &core, &x).unwrap();
            assert!(report.holds(), "x = {x:?}: {report:?}");
        }
    }

    #[test]
    fn select_w_on_k4_is_single_lowest() {
        let core = compute_core(&k4()).unwrap();
        let w = select_w(&core, None);
        assert_eq!(w, BTreeSet::from([v(0)]));
        // maximality: every other degree-3 vertex is adjacent to 0
        for u in core.core.vertices() {
            if !w.contains(&u) {
                assert!(core.core.neighbors(u).iter().any(|x| w.contains(x)));
            }
        }
        // a seeded order still gives a maximal independent set
        let w2 = select_w(&core, Some(42));
        assert_eq!(w2.len(), 1);
    }

    #[test]
    fn build_h0_on_k4() {
        let core = compute_core(&k4()).unwrap();
        let w = select_w(&core, None);
        let red = build_h0(&core, &w).unwrap();
        assert_eq!(red.h0.num_vertices(), 3);
        assert_eq!(red.h0.num_hyperedges(), 4);
        assert_eq!(red.h0.hyperedges_of_size(2).count(), 3);
        assert_eq!(red.h0.hyperedges_of_size(3).count(), 1);
        let hw = red.h_of[&v(0)];
        assert_eq!(red.h0.members(hw), &[v(1), v(2), v(3)]);
    }

    #[test]
    fn build_h0_with_parallel_neighbours_gives_pair() {
        // w = vertex 0 with degree 3: two parallel edges to 1, one to 2;
        // plus enough structure to make the rest 3-connected-ish is not
        // needed for build_h0 itself.
        let g = Multigraph::from_edges(3, &[(0, 1), (0, 1), (0, 2), (1, 2), (1, 2)]).unwrap();
        let core = CoreResult {
            core: g.clone(),
            suppressed: BTreeMap::new(),
            deleted_leaves: BTreeSet::new(),
            transient: BTreeSet::new(),
            protected: BTreeSet::new(),
            trivial: false,
            discarded_loops: Vec::new(),
        };
        let red = build_h0(&core, &BTreeSet::from([v(0)])).unwrap();
        let hw = red.h_of[&v(0)];
        assert_eq!(red.h0.members(hw), &[v(1), v(2)]);
    }

    #[test]
    fn empty_w_keeps_core_as_pairs() {
        let core = compute_core(&k4()).unwrap();
        let red = build_h0(&core, &BTreeSet::new()).unwrap();
        assert_eq!(red.h0.num_hyperedges(), 6);
        assert!(red.h0.hyperedges_of_size(3).next().is_none());
    }

    #[test]
    fn xhyper_on_k4_reduction() {
        let core = compute_core(&k4()).unwrap();
        let w = select_w(&core, None);
        let red = build_h0(&core, &w).unwrap();
        let y = BTreeSet::from([v(1), v(2)]);
        assert_eq!(
            xhyper(&core, &red, &y),
            BTreeSet::from([v(0), v(1), v(2)])
        );
        let (dh, dc) = check_xhyper_degree(&core, &red, &y).unwrap();
        assert_eq!(dh, dc);
        assert_eq!(xhyper(&core, &red, &BTreeSet::new()), BTreeSet::new());
        let all: BTreeSet<VertexId> = red.h0.vertices().collect();
        let lifted = xhyper(&core, &red, &all);
        assert_eq!(lifted, core.core.vertex_set().clone());
    }

    #[test]
    fn k_map_cases() {
        // K4 + pendant at 0 + subdivided edge (2,3) through 5
        let g = Multigraph::from_edges(
            6,
            &[
                (0, 1), // 0
                (0, 2), // 1
                (0, 3), // 2
                (1, 2), // 3
                (1, 3), // 4
                (2, 5), // 5 subdivision half
                (5, 3), // 6 subdivision half
                (0, 4), // 7 pendant
            ],
        )
        .unwrap();
        let core = compute_core(&g).unwrap();
        // protected: 2 and 3 (adjacent to suppressed 5); 0 is adjacent to
        // leaf 4 but has core degree 3 too
        let w = select_w(&core, None);
        let red = build_h0(&core, &w).unwrap();

        // pendant edge vanishes
        assert!(matches!(
            k_map(&g, &core, &red, e(7)).unwrap(),
            KImage::Empty(_)
        ));
        // subdivision halves map to the surviving core edge's hyperedge
        let k5 = k_map(&g, &core, &red, e(5)).unwrap();
        let k6 = k_map(&g, &core, &red, e(6)).unwrap();
        assert_eq!(k5, k6);
        assert!(k5.hyperedge().is_some());
        // an untouched edge maps to its own 2-hyperedge unless an endpoint
        // became temporary
        let k3 = k_map(&g, &core, &red, e(3)).unwrap();
        match k3 {
            KImage::Hyperedge(h) => {
                if w.contains(&v(1)) || w.contains(&v(2)) {
                    assert!(red.h_of.values().any(|&x| x == h));
                } else {
                    assert_eq!(red.hyperedge_of_core_edge[&e(3)], h);
                }
            }
            KImage::Empty(_) => panic!("edge 3 should have an image"),
        }
    }

    #[test]
    fn lemma_permanent_on_reduced_k4() {
        let g = k4();
        let core = compute_core(&g).unwrap();
        let w = select_w(&core, None);
        let red = build_h0(&core, &w).unwrap();
        assert!(check_lemma_permanent(&g, &red).holds);
    }

    #[test]
    fn build_he_detaches_both_images() {
        let g = k4();
        let core = compute_core(&g).unwrap();
        let red = build_h0(&core, &BTreeSet::new()).unwrap();
        // edges (1,2) and (1,3): anchors distinct, both pairs removed
        let anchored = build_he(&g, &core, &red, e(3), e(4)).unwrap();
        assert_eq!(anchored.he.num_hyperedges(), 4);
        assert_ne!(anchored.anchors.0, anchored.anchors.1);
        assert!(matches!(anchored.detach_log[0], DetachEvent::Applied { .. }));
        assert!(matches!(anchored.detach_log[1], DetachEvent::Applied { .. }));
    }

    #[test]
    fn build_he_on_triple_image() {
        let g = k4();
        let core = compute_core(&g).unwrap();
        let w = select_w(&core, None); // {0}
        let red = build_h0(&core, &w).unwrap();
        // edge (0,1) maps to the neighbourhood triple {1,2,3}; detaching at
        // anchor 1 shrinks it to the pair {2,3}
        let anchored = build_he(&g, &core, &red, e(0), e(3)).unwrap();
        let hw = red.h_of[&v(0)];
        assert_eq!(anchored.k_images.0, hw);
        assert_eq!(anchored.he.members(hw).len(), 2);
    }

    #[test]
    fn build_he_rejects_leaf_edges() {
        let mut g = k4();
        let leaf = g.fresh_vertex();
        g.add_edge(v(0), leaf).unwrap();
        let pendant = EdgeId(6);
        let core = compute_core(&g).unwrap();
        let w = select_w(&core, None);
        let red = build_h0(&core, &w).unwrap();
        assert!(matches!(
            build_he(&g, &core, &red, pendant, e(3)),
            Err(Error::EdgeCollapses(_, _))
        ));
    }
}

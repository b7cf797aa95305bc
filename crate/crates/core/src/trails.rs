//! Trails and the exact oracles around them: constrained trail search,
//! internal domination and spanning checks, the bitmask Hamilton-path solver,
//! the Hamilton-connectivity / dominating-trail crosscheck, and lifting a
//! trail from an incidence graph back to the original graph.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::IncidenceGraph;
use crate::id::{EdgeId, VertexId};
use crate::multigraph::{line_graph, Multigraph, SimpleGraph};
use crate::reduction::{AnchoredHypergraph, CoreResult, HyperReduction, HyperedgeOrigin};

/// Alternating vertex/edge sequence without repeated edges. Vertices may
/// repeat; the two endpoints may coincide. Serializes as a single flat array
/// of alternating vertex and edge ids, `[v0, e1, v1, ..., eL, vL]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trail {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Serialize for Trail {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut flat = Vec::with_capacity(self.vertices.len() + self.edges.len());
        for (i, v) in self.vertices.iter().enumerate() {
            flat.push(v.0);
            if i < self.edges.len() {
                flat.push(self.edges[i].0);
            }
        }
        flat.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Trail {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let flat: Vec<u32> = Vec::deserialize(d)?;
        if flat.len().is_multiple_of(2) {
            return Err(serde::de::Error::custom(
                "alternating trail array must have odd length",
            ));
        }
        let mut vertices = Vec::with_capacity(flat.len() / 2 + 1);
        let mut edges = Vec::with_capacity(flat.len() / 2);
        for (i, &x) in flat.iter().enumerate() {
            if i % 2 == 0 {
                vertices.push(VertexId(x));
            } else {
                edges.push(EdgeId(x));
            }
        }
        Ok(Trail { vertices, edges })
    }
}

impl Trail {
    pub fn trivial(v: VertexId) -> Self {
        Self {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn first_vertex(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last_vertex(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    pub fn first_edge(&self) -> Option<EdgeId> {
        self.edges.first().copied()
    }

    pub fn last_edge(&self) -> Option<EdgeId> {
        self.edges.last().copied()
    }

    /// Vertices occurring at a position other than the two ends.
    pub fn internal_vertices(&self) -> BTreeSet<VertexId> {
        if self.vertices.len() <= 2 {
            return BTreeSet::new();
        }
        self.vertices[1..self.vertices.len() - 1]
            .iter()
            .copied()
            .collect()
    }

    pub fn visited(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }

    pub fn validate(&self, g: &Multigraph) -> Result<()> {
        if self.vertices.len() != self.edges.len() + 1 {
            return Err(Error::InvalidTrail("length mismatch".into()));
        }
        let mut seen = BTreeSet::new();
        for (i, &e) in self.edges.iter().enumerate() {
            if !seen.insert(e) {
                return Err(Error::InvalidTrail(format!("edge {e} repeated")));
            }
            let (u, v) = g.try_endpoints(e)?;
            let expect = BTreeSet::from([self.vertices[i], self.vertices[i + 1]]);
            if BTreeSet::from([u, v]) != expect {
                return Err(Error::InvalidTrail(format!(
                    "edge {e} does not join positions {i} and {}",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

/// Every edge of the graph must touch an internal trail vertex.
pub fn is_internally_dominating(t: &Trail, g: &Multigraph) -> bool {
    let internal = t.internal_vertices();
    g.edges()
        .all(|(_, u, v)| internal.contains(&u) || internal.contains(&v))
}

/// Every vertex of the graph must appear internally.
pub fn is_internally_spanning(t: &Trail, g: &Multigraph) -> bool {
    let internal = t.internal_vertices();
    g.vertices().all(|v| internal.contains(&v))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailConstraints {
    pub first_edge: Option<EdgeId>,
    pub last_edge: Option<EdgeId>,
    /// Vertices the trail must visit (ends count as visited).
    pub span: Option<BTreeSet<VertexId>>,
    pub internally_dominating: bool,
    pub internally_spanning: bool,
}

const TRAIL_EDGE_LIMIT: usize = 30;

/// Deterministic DFS for the lexicographically first `a`-to-`b` trail meeting
/// the constraints, exhaustive up to 30 edges. Returns `None` when no trail
/// exists. Failed (position, used-set) states are memoized, which keeps the
/// search polynomial-ish in practice; correctness of the memo rests on the
/// fact that acceptance depends only on the used-edge set, the fixed start
/// and the current end.
pub fn find_trail(
    g: &Multigraph,
    a: VertexId,
    b: VertexId,
    constraints: &TrailConstraints,
) -> Result<Option<Trail>> {
    if g.num_edges() > TRAIL_EDGE_LIMIT {
        return Err(Error::DeskScaleExceeded {
            what: "trail search edge count",
            limit: TRAIL_EDGE_LIMIT,
            actual: g.num_edges(),
        });
    }
    if !g.has_vertex(a) {
        return Err(Error::UnknownVertex(a));
    }
    if !g.has_vertex(b) {
        return Err(Error::UnknownVertex(b));
    }

    let vertex_ids: Vec<VertexId> = g.vertices().collect();
    let vpos: BTreeMap<VertexId, usize> =
        vertex_ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edge_ids: Vec<EdgeId> = g.edge_ids().collect();
    let epos: BTreeMap<EdgeId, usize> = edge_ids.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let endpoints: Vec<(usize, usize)> = edge_ids
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            (vpos[&u], vpos[&v])
        })
        .collect();
    // incident edge indices per vertex, ascending edge id
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); vertex_ids.len()];
    for (i, &(u, v)) in endpoints.iter().enumerate() {
        incident[u].push(i);
        if u != v {
            incident[v].push(i);
        }
    }
    let mut span_mask = 0u64;
    if let Some(span) = &constraints.span {
        for v in span {
            let &i = vpos.get(v).ok_or(Error::UnknownVertex(*v))?;
            span_mask |= 1 << i;
        }
    }
    let first_edge = match constraints.first_edge {
        Some(e) => Some(*epos.get(&e).ok_or(Error::UnknownEdge(e))?),
        None => None,
    };
    let last_edge = match constraints.last_edge {
        Some(e) => Some(*epos.get(&e).ok_or(Error::UnknownEdge(e))?),
        None => None,
    };
    let mut search = IndexedTrailSearch {
        endpoints,
        incident,
        b: vpos[&b],
        first_edge,
        last_edge,
        span_mask,
        dominating: constraints.internally_dominating,
        spanning: constraints.internally_spanning,
        all_vertices_mask: if vertex_ids.len() >= 64 {
            return Err(Error::DeskScaleExceeded {
                what: "trail search vertex count",
                limit: 63,
                actual: vertex_ids.len(),
            });
        } else {
            (1u64 << vertex_ids.len()) - 1
        },
        dead: DeadSet::default(),
        trail_vertices: vec![vpos[&a]],
        trail_edges: Vec::new(),
        visited_mask: 1 << vpos[&a],
        internal_mask: 0,
    };
    let found = search.dfs(vpos[&a], 0);
    Ok(found.map(|(vs, es)| Trail {
        vertices: vs.into_iter().map(|i| vertex_ids[i]).collect(),
        edges: es.into_iter().map(|i| edge_ids[i]).collect(),
    }))
}

/// Multiply-xor hasher for the dead-state set; the keys are already
/// well-mixed bit masks.
#[derive(Default)]
struct MixHasher(u64);

impl std::hash::Hasher for MixHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ b as u64).wrapping_mul(0x9e3779b97f4a7c15);
        }
    }
    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0 ^ x).wrapping_mul(0x9e3779b97f4a7c15);
        self.0 ^= self.0 >> 29;
    }
    fn write_u8(&mut self, x: u8) {
        self.write_u64(x as u64);
    }
}

type DeadSet = HashSet<(u8, u64), std::hash::BuildHasherDefault<MixHasher>>;

struct IndexedTrailSearch {
    endpoints: Vec<(usize, usize)>,
    incident: Vec<Vec<usize>>,
    b: usize,
    first_edge: Option<usize>,
    last_edge: Option<usize>,
    span_mask: u64,
    dominating: bool,
    spanning: bool,
    all_vertices_mask: u64,
    dead: DeadSet,
    trail_vertices: Vec<usize>,
    trail_edges: Vec<usize>,
    visited_mask: u64,
    /// vertices occurring at a non-end position
    internal_mask: u64,
}

impl IndexedTrailSearch {
    fn accepts(&self, current: usize) -> bool {
        if current != self.b {
            return false;
        }
        if let Some(first) = self.first_edge {
            if self.trail_edges.first() != Some(&first) {
                return false;
            }
        }
        if let Some(last) = self.last_edge {
            if self.trail_edges.last() != Some(&last) {
                return false;
            }
        }
        if self.visited_mask & self.span_mask != self.span_mask {
            return false;
        }
        // internal_mask collects vertices the moment they stop being the
        // trail's end, so it is exactly the internal-occurrence set
        let internal = self.internal_mask;
        if self.dominating {
            for &(u, v) in &self.endpoints {
                if internal >> u & 1 == 0 && internal >> v & 1 == 0 {
                    return false;
                }
            }
        }
        if self.spanning && internal & self.all_vertices_mask != self.all_vertices_mask {
            return false;
        }
        true
    }

    /// Unused-edge reachability from the current vertex; prunes when the goal
    /// or a required unvisited vertex is cut off.
    fn reachable_ok(&self, current: usize, used: u64) -> bool {
        let mut seen = 1u64 << current;
        let mut stack = vec![current];
        while let Some(v) = stack.pop() {
            for &e in &self.incident[v] {
                if used >> e & 1 == 1 {
                    continue;
                }
                let (x, y) = self.endpoints[e];
                let w = if x == v { y } else { x };
                if seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        if current != self.b && seen >> self.b & 1 == 0 {
            return false;
        }
        // required vertices not yet visited must still be reachable
        let missing = self.span_mask & !self.visited_mask;
        missing & !seen == 0
    }

    fn dfs(&mut self, current: usize, used: u64) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.accepts(current) {
            return Some((self.trail_vertices.clone(), self.trail_edges.clone()));
        }
        let key = (current as u8, used);
        if self.dead.contains(&key) {
            return None;
        }
        if !self.reachable_ok(current, used) {
            self.dead.insert(key);
            return None;
        }
        for idx in 0..self.incident[current].len() {
            let e = self.incident[current][idx];
            if used >> e & 1 == 1 {
                continue;
            }
            if self.trail_edges.is_empty() {
                if let Some(first) = self.first_edge {
                    if e != first {
                        continue;
                    }
                }
            }
            let (x, y) = self.endpoints[e];
            let w = if x == current { y } else { x };
            let completing_only = self.last_edge == Some(e);
            if completing_only && w != self.b {
                continue;
            }
            // push: the old end becomes an internal position unless it is
            // the start
            let prev_internal = self.internal_mask;
            if self.trail_vertices.len() >= 2 {
                self.internal_mask |= 1 << current;
            }
            self.trail_edges.push(e);
            self.trail_vertices.push(w);
            let prev_visited = self.visited_mask;
            self.visited_mask |= 1 << w;

            let found = if completing_only {
                self.accepts(w)
                    .then(|| (self.trail_vertices.clone(), self.trail_edges.clone()))
            } else {
                self.dfs(w, used | (1 << e))
            };

            // pop
            self.visited_mask = prev_visited;
            self.trail_vertices.pop();
            self.trail_edges.pop();
            self.internal_mask = prev_internal;

            if found.is_some() {
                return found;
            }
        }
        self.dead.insert(key);
        None
    }
}

/// Searches for an internally dominating trail whose first and last edges are
/// the given pair, over all endpoint orientations.
pub fn find_dominating_pair_trail(
    g: &Multigraph,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<Option<Trail>> {
    let (a1, b1) = g.try_endpoints(e1)?;
    let (a2, b2) = g.try_endpoints(e2)?;
    let constraints = TrailConstraints {
        first_edge: Some(e1),
        last_edge: Some(e2),
        internally_dominating: true,
        ..TrailConstraints::default()
    };
    let mut ends1 = vec![a1, b1];
    let mut ends2 = vec![a2, b2];
    ends1.dedup();
    ends2.dedup();
    for &start in &ends1 {
        for &end in &ends2 {
            if let Some(t) = find_trail(g, start, end, &constraints)? {
                return Ok(Some(t));
            }
        }
    }
    Ok(None)
}

const HAM_VERTEX_LIMIT: usize = 24;

/// Exact Hamilton-path decision by subset dynamic programming, up to 24
/// vertices. Optional fixed endpoints.
pub fn ham_path_exists(g: &SimpleGraph, a: Option<VertexId>, b: Option<VertexId>) -> Result<bool> {
    let mg = g.graph();
    let n = mg.num_vertices();
    if n > HAM_VERTEX_LIMIT {
        return Err(Error::DeskScaleExceeded {
            what: "Hamilton path subset DP",
            limit: HAM_VERTEX_LIMIT,
            actual: n,
        });
    }
    if n == 0 {
        return Ok(false);
    }
    let ids: Vec<VertexId> = mg.vertices().collect();
    let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    if n == 1 {
        return Ok(true);
    }
    let adj: Vec<u32> = ids
        .iter()
        .map(|&v| {
            let mut mask = 0u32;
            for u in mg.neighbors(v) {
                mask |= 1 << pos[&u];
            }
            mask
        })
        .collect();
    let a_idx = match a {
        Some(x) => Some(*pos.get(&x).ok_or(Error::UnknownVertex(x))?),
        None => None,
    };
    let b_idx = match b {
        Some(x) => Some(*pos.get(&x).ok_or(Error::UnknownVertex(x))?),
        None => None,
    };
    // dp[mask] = possible trailing vertices of a path covering exactly mask
    let full = (1usize << n) - 1;
    let mut dp = vec![0u32; 1 << n];
    for i in 0..n {
        if a_idx.is_none() || a_idx == Some(i) {
            dp[1 << i] = 1 << i;
        }
    }
    for mask in 1..=full {
        let ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let mut rest = ends;
        while rest != 0 {
            let last = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut nexts = adj[last] & !(mask as u32);
            while nexts != 0 {
                let nv = nexts.trailing_zeros() as usize;
                nexts &= nexts - 1;
                dp[mask | (1 << nv)] |= 1 << nv;
            }
        }
    }
    let ends = dp[full];
    Ok(match b_idx {
        Some(i) => ends >> i & 1 == 1,
        None => ends != 0,
    })
}

/// End vertices of Hamilton paths starting at `a`, from one DP run.
pub fn ham_path_ends_from(g: &SimpleGraph, a: VertexId) -> Result<BTreeSet<VertexId>> {
    let mg = g.graph();
    let n = mg.num_vertices();
    if n > HAM_VERTEX_LIMIT {
        return Err(Error::DeskScaleExceeded {
            what: "Hamilton path subset DP",
            limit: HAM_VERTEX_LIMIT,
            actual: n,
        });
    }
    let ids: Vec<VertexId> = mg.vertices().collect();
    let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let a_idx = *pos.get(&a).ok_or(Error::UnknownVertex(a))?;
    if n == 1 {
        return Ok(BTreeSet::from([a]));
    }
    let adj: Vec<u32> = ids
        .iter()
        .map(|&v| {
            let mut mask = 0u32;
            for u in mg.neighbors(v) {
                mask |= 1 << pos[&u];
            }
            mask
        })
        .collect();
    let full = (1usize << n) - 1;
    let mut dp = vec![0u32; 1 << n];
    dp[1 << a_idx] = 1 << a_idx;
    for mask in 1..=full {
        let ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let mut rest = ends;
        while rest != 0 {
            let last = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let mut nexts = adj[last] & !(mask as u32);
            while nexts != 0 {
                let nv = nexts.trailing_zeros() as usize;
                nexts &= nexts - 1;
                dp[mask | (1 << nv)] |= 1 << nv;
            }
        }
    }
    let ends = dp[full];
    Ok(ids
        .iter()
        .enumerate()
        .filter(|(i, _)| ends >> i & 1 == 1)
        .map(|(_, &v)| v)
        .collect())
}

/// Hamilton-connected: every pair of distinct vertices is joined by a
/// Hamilton path. One DP per start vertex; paths reverse, so each start only
/// answers for the vertices above it.
pub fn ham_connected(g: &SimpleGraph) -> Result<bool> {
    let ids: Vec<VertexId> = g.vertices().collect();
    if ids.len() < 2 {
        return Ok(false);
    }
    for (i, &a) in ids.iter().enumerate() {
        if i + 1 == ids.len() {
            break;
        }
        let ends = ham_path_ends_from(g, a)?;
        if ids[i + 1..].iter().any(|b| !ends.contains(b)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub line_graph_ham_connected: bool,
    pub all_pairs_have_dominating_trails: bool,
    /// First pair with no internally dominating trail, if any.
    pub failing_pair: Option<(EdgeId, EdgeId)>,
}

impl CrosscheckReport {
    pub fn agree(&self) -> bool {
        self.line_graph_ham_connected == self.all_pairs_have_dominating_trails
    }
}

/// The central equivalence oracle: the line graph is Hamilton-connected
/// exactly when every pair of distinct edges carries an internally
/// dominating trail.
pub fn crosscheck_preimage(g: &Multigraph) -> Result<CrosscheckReport> {
    if g.num_edges() < 3 {
        return Err(Error::PreconditionFailed(
            "crosscheck needs at least 3 edges".into(),
        ));
    }
    let lg = line_graph(g)?;
    let line_graph_ham_connected = ham_connected(&lg)?;
    let edge_ids: Vec<EdgeId> = g.edge_ids().collect();
    let mut failing_pair = None;
    'outer: for i in 0..edge_ids.len() {
        for j in i + 1..edge_ids.len() {
            if find_dominating_pair_trail(g, edge_ids[i], edge_ids[j])?.is_none() {
                failing_pair = Some((edge_ids[i], edge_ids[j]));
                break 'outer;
            }
        }
    }
    Ok(CrosscheckReport {
        line_graph_ham_connected,
        all_pairs_have_dominating_trails: failing_pair.is_none(),
        failing_pair,
    })
}

/// Lifts a trail in the incidence graph of the anchored hypergraph back to an
/// internally dominating trail of the original graph: incidence edges expand
/// to core-level passages (through absorbed vertices where needed), core
/// edges expand along their suppressed paths, and the two source edges are
/// glued on at the anchors. The result is validated before it is returned.
pub fn lift_trail(
    te: &Trail,
    g: &Multigraph,
    core: &CoreResult,
    reduction: &HyperReduction,
    anchored: &AnchoredHypergraph,
    incidence: &IncidenceGraph,
) -> Result<Trail> {
    te.validate(&incidence.graph)?;
    if te.first_vertex() != anchored.anchors.0 || te.last_vertex() != anchored.anchors.1 {
        return Err(Error::PreconditionFailed(
            "trail ends do not match the anchors".into(),
        ));
    }
    let spanned = te.visited();
    for v in anchored.he.vertices() {
        if !spanned.contains(&v) {
            return Err(Error::PreconditionFailed(format!(
                "trail does not span hypergraph vertex {v}"
            )));
        }
    }

    // 1) contract hyperedge-node passages into core-level steps
    let mut core_steps: Vec<(VertexId, HyperedgeOrigin, VertexId)> = Vec::new();
    let mut i = 0;
    while i < te.edges.len() {
        let u = te.vertices[i];
        let mid = te.vertices[i + 1];
        let origin_id = incidence.origin_of_edge[&te.edges[i]];
        if incidence.is_triple_node(mid) {
            if i + 1 >= te.edges.len() {
                return Err(Error::InvalidTrail("trail ends on a hyperedge node".into()));
            }
            let w = te.vertices[i + 2];
            let second_origin = incidence.origin_of_edge[&te.edges[i + 1]];
            if second_origin != origin_id {
                return Err(Error::InvalidTrail("passage mixes hyperedges".into()));
            }
            core_steps.push((u, reduction.origin[&origin_id], w));
            i += 2;
        } else {
            core_steps.push((u, reduction.origin[&origin_id], mid));
            i += 1;
        }
    }

    // 2) expand each step into original-graph edges
    fn extend_with_core_edge(
        g: &Multigraph,
        core: &CoreResult,
        from: VertexId,
        core_edge: EdgeId,
        vertices: &mut Vec<VertexId>,
        edges: &mut Vec<EdgeId>,
    ) {
        if let Some(path) = core.suppressed.get(&core_edge) {
            let oriented = path.oriented_from(from);
            edges.extend_from_slice(&oriented.edges);
            vertices.extend_from_slice(&oriented.vertices[1..]);
        } else {
            let to = g.other_end(core_edge, from);
            edges.push(core_edge);
            vertices.push(to);
        }
    }
    let mut vertices = vec![te.first_vertex()];
    let mut edges = Vec::new();
    for (from, origin, to) in core_steps {
        match origin {
            HyperedgeOrigin::CoreEdge(ce) => {
                extend_with_core_edge(g, core, from, ce, &mut vertices, &mut edges);
            }
            HyperedgeOrigin::Temporary(w) => {
                // pass through the absorbed vertex: lowest edge on each side
                let first = core.core.edges_between(from, w);
                let second = core.core.edges_between(w, to);
                let (Some(&fe), Some(&se)) = (first.first(), second.first()) else {
                    return Err(Error::InvalidTrail(format!(
                        "no core edges through absorbed vertex {w}"
                    )));
                };
                let se = if fe == se { second[1] } else { se };
                extend_with_core_edge(g, core, from, fe, &mut vertices, &mut edges);
                extend_with_core_edge(g, core, w, se, &mut vertices, &mut edges);
            }
        }
        if *vertices.last().unwrap() != to {
            return Err(Error::InvalidTrail("expansion endpoint mismatch".into()));
        }
    }

    // 3) glue the source edges onto the anchors
    let (e1, e2) = anchored.source_edges;
    let z1 = g.other_end(e1, anchored.anchors.0);
    let z2 = g.other_end(e2, anchored.anchors.1);
    let mut full_vertices = vec![z1];
    full_vertices.extend(vertices);
    full_vertices.push(z2);
    let mut full_edges = vec![e1];
    full_edges.extend(edges);
    full_edges.push(e2);
    let trail = Trail {
        vertices: full_vertices,
        edges: full_edges,
    };
    trail.validate(g)?;
    if !is_internally_dominating(&trail, g) {
        return Err(Error::InvalidTrail(
            "lifted trail is not internally dominating".into(),
        ));
    }
    Ok(trail)
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
    fn trail_on_path() {
        let p3 = Multigraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let t = find_trail(&p3, v(0), v(2), &TrailConstraints::default())
            .unwrap()
            .unwrap();
        assert_eq!(t.edges, vec![e(0), e(1)]);
        t.validate(&p3).unwrap();
    }

    #[test]
    fn closed_spanning_trail_in_k4() {
        let g = k4();
        let all: BTreeSet<VertexId> = g.vertices().collect();
        let c = TrailConstraints {
            span: Some(all),
            ..TrailConstraints::default()
        };
        let t = find_trail(&g, v(0), v(0), &c).unwrap().unwrap();
        assert_eq!(t.first_vertex(), t.last_vertex());
        t.validate(&g).unwrap();
        assert_eq!(t.visited().len(), 4);
    }

    #[test]
    fn no_trail_across_components() {
        let g = Multigraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(find_trail(&g, v(0), v(3), &TrailConstraints::default())
            .unwrap()
            .is_none());
    }

    #[test]
    fn internal_vertex_checks() {
        let star = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let t = Trail {
            vertices: vec![v(1), v(0), v(2)],
            edges: vec![e(0), e(1)],
        };
        t.validate(&star).unwrap();
        // internal vertex 0 touches every edge
        assert!(is_internally_dominating(&t, &star));
        assert!(!is_internally_spanning(&t, &star));

        // a single-edge trail has no internal vertices
        let single = Trail {
            vertices: vec![v(0), v(1)],
            edges: vec![e(0)],
        };
        assert!(!is_internally_dominating(&single, &star));
    }

    #[test]
    fn spanning_k4_trail_dominates_and_spans() {
        // A spanning trail revisiting its start, e.g. 0-1-2-0-3-2, has all
        // four vertices internal; it passes both checks.
        let g = k4();
        let all: BTreeSet<VertexId> = g.vertices().collect();
        let c = TrailConstraints {
            span: Some(all),
            internally_dominating: true,
            internally_spanning: true,
            ..TrailConstraints::default()
        };
        let t = find_trail(&g, v(0), v(2), &c).unwrap().unwrap();
        assert!(is_internally_dominating(&t, &g));
        assert!(is_internally_spanning(&t, &g));

        // In a closed K4 trail the shared endpoint has used-degree 2, so it
        // sits only at the two end positions and is never internal.
        let closed = find_trail(
            &g,
            v(0),
            v(0),
            &TrailConstraints {
                span: Some(g.vertices().collect()),
                internally_dominating: true,
                ..TrailConstraints::default()
            },
        )
        .unwrap()
        .unwrap();
        assert!(is_internally_dominating(&closed, &g));
        assert!(!closed.internal_vertices().contains(&v(0)));
    }

    #[test]
    fn ham_path_small_cases() {
        let k3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(ham_path_exists(&k3, Some(v(0)), Some(v(1))).unwrap());
        let claw = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!ham_path_exists(&claw, None, None).unwrap());
        let c6 = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
            .unwrap();
        assert!(ham_path_exists(&c6, Some(v(0)), Some(v(1))).unwrap());
        assert!(!ham_path_exists(&c6, Some(v(0)), Some(v(2))).unwrap());
    }

    #[test]
    fn ham_connected_cases() {
        let k4s = SimpleGraph::from_multigraph(k4()).unwrap();
        assert!(ham_connected(&k4s).unwrap());
        // Hamilton paths in a cycle only run between adjacent vertices, so no
        // cycle on 4+ vertices is Hamilton-connected.
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!ham_connected(&c5).unwrap());
        assert!(ham_path_exists(&c5, Some(v(0)), Some(v(1))).unwrap());
        assert!(!ham_path_exists(&c5, Some(v(0)), Some(v(2))).unwrap());
        let c6 = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
            .unwrap();
        assert!(!ham_connected(&c6).unwrap());
        let w5 = SimpleGraph::from_edges(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)],
        )
        .unwrap();
        assert!(ham_connected(&w5).unwrap());
    }

    #[test]
    fn crosscheck_on_small_graphs() {
        // triangle with a pendant edge
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let report = crosscheck_preimage(&g).unwrap();
        assert!(report.agree());

        let report_k4 = crosscheck_preimage(&k4()).unwrap();
        assert!(report_k4.agree());
        assert!(report_k4.line_graph_ham_connected);
    }

    #[test]
    fn dominating_pair_trail_in_k4() {
        let g = k4();
        let t = find_dominating_pair_trail(&g, e(0), e(5)).unwrap().unwrap();
        assert_eq!(t.first_edge(), Some(e(0)));
        assert_eq!(t.last_edge(), Some(e(5)));
        assert!(is_internally_dominating(&t, &g));
    }

    #[test]
    fn trail_serializes_as_alternating_array() {
        let t = Trail {
            vertices: vec![v(1), v(0), v(2)],
            edges: vec![e(0), e(1)],
        };
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, "[1,0,0,1,2]");
        let back: Trail = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<Trail>("[1,2]").is_err());
    }

    #[test]
    fn trail_search_rejects_oversized_inputs() {
        let mut g = Multigraph::new();
        let a = g.add_vertex(v(0));
        let b = g.add_vertex(v(1));
        for _ in 0..31 {
            g.add_edge(a, b).unwrap();
        }
        assert!(matches!(
            find_trail(&g, a, b, &TrailConstraints::default()),
            Err(Error::DeskScaleExceeded { .. })
        ));
    }
}

//! Loopless multigraphs with stable vertex and edge identifiers.
//!
//! Parallel edges are allowed and kept apart by their [`EdgeId`]s. All
//! iteration is in ascending id order, so every algorithm built on top is
//! deterministic. Values are immutable once built; transformations return
//! new graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::id::{EdgeId, VertexId};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeMap<EdgeId, (VertexId, VertexId)>,
    adjacency: BTreeMap<VertexId, Vec<EdgeId>>,
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph on vertices `0..n` from endpoint pairs; edge ids follow
    /// input order.
    pub fn from_edges(n: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut g = Self::new();
        for v in 0..n {
            g.add_vertex(VertexId(v));
        }
        for &(u, v) in pairs {
            g.add_edge(VertexId(u), VertexId(v))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) -> VertexId {
        self.vertices.insert(v);
        self.adjacency.entry(v).or_default();
        v
    }

    pub fn fresh_vertex(&mut self) -> VertexId {
        let id = VertexId(self.vertices.iter().next_back().map_or(0, |v| v.0 + 1));
        self.add_vertex(id)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let id = EdgeId(self.edges.keys().next_back().map_or(0, |e| e.0 + 1));
        self.add_edge_with_id(id, u, v)?;
        Ok(id)
    }

    pub fn add_edge_with_id(&mut self, id: EdgeId, u: VertexId, v: VertexId) -> Result<()> {
        if u == v {
            return Err(Error::LoopRejected(u, v));
        }
        assert!(
            !self.edges.contains_key(&id),
            "edge id {id} already present"
        );
        self.add_vertex(u);
        self.add_vertex(v);
        self.edges.insert(id, (u, v));
        self.adjacency.get_mut(&u).unwrap().push(id);
        self.adjacency.get_mut(&v).unwrap().push(id);
        self.adjacency.get_mut(&u).unwrap().sort_unstable();
        self.adjacency.get_mut(&v).unwrap().sort_unstable();
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn has_edge(&self, e: EdgeId) -> bool {
        self.edges.contains_key(&e)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges.iter().map(|(&e, &(u, v))| (e, u, v))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.keys().copied()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[&e]
    }

    pub fn try_endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.edges.get(&e).copied().ok_or(Error::UnknownEdge(e))
    }

    /// The endpoint of `e` other than `v`.
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn is_incident(&self, e: EdgeId, v: VertexId) -> bool {
        let (a, b) = self.endpoints(e);
        a == v || b == v
    }

    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        self.adjacency.get(&v).map_or(&[], |edges| edges.as_slice())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident_edges(v).len()
    }

    /// Distinct neighbours of `v`, each listed once regardless of multiplicity.
    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.incident_edges(v)
            .iter()
            .map(|&e| self.other_end(e, v))
            .collect()
    }

    /// Edges joining `u` and `v`, ascending.
    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.incident_edges(u)
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u) == v)
            .collect()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.incident_edges(u)
            .iter()
            .any(|&e| self.other_end(e, u) == v)
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for &e in self.incident_edges(v) {
                let w = self.other_end(e, v);
                if seen.insert(w) {
                    queue.push(w);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// Connected components as vertex sets, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut remaining: BTreeSet<VertexId> = self.vertices.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::from([start]);
            let mut queue = vec![start];
            remaining.remove(&start);
            while let Some(v) = queue.pop() {
                for &e in self.incident_edges(v) {
                    let w = self.other_end(e, v);
                    if remaining.remove(&w) {
                        comp.insert(w);
                        queue.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Induced sub-multigraph on `keep`, retaining ids.
    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> Multigraph {
        let mut g = Multigraph::new();
        for &v in keep {
            if self.vertices.contains(&v) {
                g.add_vertex(v);
            }
        }
        for (e, u, v) in self.edges() {
            if keep.contains(&u) && keep.contains(&v) {
                g.add_edge_with_id(e, u, v).expect("induced edge");
            }
        }
        g
    }

    /// Copy without the listed edges; vertices stay.
    pub fn without_edges(&self, drop: &BTreeSet<EdgeId>) -> Multigraph {
        let mut g = Multigraph::new();
        for v in self.vertices() {
            g.add_vertex(v);
        }
        for (e, u, v) in self.edges() {
            if !drop.contains(&e) {
                g.add_edge_with_id(e, u, v).expect("kept edge");
            }
        }
        g
    }

    /// Copy without a vertex and its incident edges.
    pub fn without_vertex(&self, v: VertexId) -> Multigraph {
        let keep: BTreeSet<VertexId> = self.vertices().filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Whether the edge set is a matching (max degree at most one).
    pub fn is_matching(&self) -> bool {
        self.vertices().all(|v| self.degree(v) <= 1)
    }

    /// Sum of edge multiplicities per unordered vertex pair.
    pub fn edge_multiset(&self) -> BTreeMap<(VertexId, VertexId), usize> {
        let mut out = BTreeMap::new();
        for (_, u, v) in self.edges() {
            let key = if u <= v { (u, v) } else { (v, u) };
            *out.entry(key).or_insert(0) += 1;
        }
        out
    }
}

/// An edge cut: the boundary of a vertex subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCut {
    pub side: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeId>,
}

impl EdgeCut {
    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

/// Edges of `g` with exactly one endpoint in `x`.
pub fn boundary(g: &Multigraph, x: &BTreeSet<VertexId>) -> Result<EdgeCut> {
    if !x.iter().all(|v| g.has_vertex(*v)) {
        return Err(Error::InvalidSubset);
    }
    let edges = g
        .edges()
        .filter(|&(_, u, v)| x.contains(&u) != x.contains(&v))
        .map(|(e, _, _)| e)
        .collect();
    Ok(EdgeCut {
        side: x.clone(),
        edges,
    })
}

/// A multigraph that happens to be simple: no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph(Multigraph);

impl SimpleGraph {
    pub fn from_multigraph(g: Multigraph) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (_, u, v) in g.edges() {
            let key = if u <= v { (u, v) } else { (v, u) };
            if !seen.insert(key) {
                return Err(Error::PreconditionFailed(format!(
                    "parallel edge between {u} and {v} in a simple graph"
                )));
            }
        }
        Ok(Self(g))
    }

    pub fn from_edges(n: u32, pairs: &[(u32, u32)]) -> Result<Self> {
        Self::from_multigraph(Multigraph::from_edges(n, pairs)?)
    }

    pub fn graph(&self) -> &Multigraph {
        &self.0
    }

    pub fn num_vertices(&self) -> usize {
        self.0.num_vertices()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.0.vertices()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.0.adjacent(u, v)
    }

    pub fn neighbors(&self, v: VertexId) -> BTreeSet<VertexId> {
        self.0.neighbors(v)
    }
}

/// Line graph: one vertex per edge of `g` (ids carried over), adjacency
/// between edges sharing an endpoint. Simple even when `g` has parallel
/// edges.
pub fn line_graph(g: &Multigraph) -> Result<SimpleGraph> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let mut lg = Multigraph::new();
    for e in g.edge_ids() {
        lg.add_vertex(VertexId(e.0));
    }
    let mut pairs = BTreeSet::new();
    for v in g.vertices() {
        let inc = g.incident_edges(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                pairs.insert((inc[i], inc[j]));
            }
        }
    }
    for (a, b) in pairs {
        lg.add_edge(VertexId(a.0), VertexId(b.0))?;
    }
    SimpleGraph::from_multigraph(lg)
}

/// Whether `g` contains no induced claw (a vertex with three pairwise
/// non-adjacent neighbours).
pub fn is_claw_free(g: &SimpleGraph) -> bool {
    for v in g.vertices() {
        let nbrs: Vec<VertexId> = g.neighbors(v).into_iter().collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if g.adjacent(nbrs[i], nbrs[j]) {
                    continue;
                }
                for k in j + 1..nbrs.len() {
                    if !g.adjacent(nbrs[i], nbrs[k]) && !g.adjacent(nbrs[j], nbrs[k]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Adds every missing edge between neighbours of `x`, turning its
/// neighbourhood into a clique. Idempotent.
pub fn local_completion(g: &SimpleGraph, x: VertexId) -> Result<SimpleGraph> {
    if !g.graph().has_vertex(x) {
        return Err(Error::UnknownVertex(x));
    }
    let mut out = g.graph().clone();
    let nbrs: Vec<VertexId> = g.neighbors(x).into_iter().collect();
    for i in 0..nbrs.len() {
        for j in i + 1..nbrs.len() {
            if !out.adjacent(nbrs[i], nbrs[j]) {
                out.add_edge(nbrs[i], nbrs[j])?;
            }
        }
    }
    SimpleGraph::from_multigraph(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::multigraphs_isomorphic;

    fn triangle() -> Multigraph {
        Multigraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    #[test]
    fn line_graph_of_triangle_is_triangle() {
        let lg = line_graph(&triangle()).unwrap();
        assert!(multigraphs_isomorphic(lg.graph(), &triangle()));
    }

    #[test]
    fn line_graph_of_claw_is_triangle() {
        let star = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let lg = line_graph(&star).unwrap();
        assert!(multigraphs_isomorphic(lg.graph(), &triangle()));
    }

    #[test]
    fn line_graph_of_parallel_pair_is_single_edge() {
        let g = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let lg = line_graph(&g).unwrap();
        assert_eq!(lg.num_vertices(), 2);
        assert_eq!(lg.graph().num_edges(), 1);
    }

    #[test]
    fn line_graph_requires_edges() {
        let mut g = Multigraph::new();
        g.add_vertex(VertexId(0));
        assert!(matches!(line_graph(&g), Err(Error::NoEdges)));
    }

    #[test]
    fn boundary_on_cycle() {
        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let cut = boundary(&c4, &BTreeSet::from([VertexId(0), VertexId(1)])).unwrap();
        assert_eq!(cut.size(), 2);
        assert_eq!(cut.edges, BTreeSet::from([EdgeId(1), EdgeId(3)]));
    }

    #[test]
    fn boundary_of_everything_is_empty() {
        let g = triangle();
        let all: BTreeSet<VertexId> = g.vertices().collect();
        assert_eq!(boundary(&g, &all).unwrap().size(), 0);
    }

    #[test]
    fn boundary_of_singleton_is_degree() {
        let k4 = Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        let cut = boundary(&k4, &BTreeSet::from([VertexId(0)])).unwrap();
        assert_eq!(cut.size(), 3);
    }

    #[test]
    fn boundary_rejects_foreign_vertices() {
        let g = triangle();
        assert!(boundary(&g, &BTreeSet::from([VertexId(9)])).is_err());
    }

    #[test]
    fn loops_are_rejected() {
        let mut g = Multigraph::new();
        g.add_vertex(VertexId(0));
        assert!(g.add_edge(VertexId(0), VertexId(0)).is_err());
    }

    #[test]
    fn claw_detection() {
        let claw = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_claw_free(&claw));
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(is_claw_free(&c5));
    }

    #[test]
    fn line_graphs_are_claw_free() {
        for g in [
            Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap(),
            Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2)]).unwrap(),
            Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap(),
        ] {
            assert!(is_claw_free(&line_graph(&g).unwrap()));
        }
    }

    #[test]
    fn local_completion_of_claw_center_gives_k4() {
        let claw = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let done = local_completion(&claw, VertexId(0)).unwrap();
        assert_eq!(done.graph().num_edges(), 6);
        let again = local_completion(&done, VertexId(0)).unwrap();
        assert_eq!(again.graph().num_edges(), 6);
    }

    #[test]
    fn local_completion_path_center_gives_triangle() {
        let p3 = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let done = local_completion(&p3, VertexId(1)).unwrap();
        assert!(multigraphs_isomorphic(done.graph(), &triangle()));
    }
}

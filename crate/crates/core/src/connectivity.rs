//! Edge and vertex connectivity, essential and r-essential variants.
//!
//! The r-essential edge connectivity of a graph is the minimum size of an
//! edge cut whose removal leaves at least two components with at least r
//! edges each. For r <= 2 this is computed exactly in polynomial time by
//! separating witnesses: a component with >= 1 edge contains an edge, and a
//! connected component with >= 2 edges contains two edges sharing a vertex,
//! so it suffices to take the minimum cut between all suitable witness pairs.
//! A subset-enumeration oracle cross-checks at desk scale.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::id::{EdgeId, VertexId};
use crate::multigraph::{boundary, line_graph, Multigraph, SimpleGraph};

/// A connectivity value: `Infinite` means no qualifying cut exists at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Connectivity {
    Finite(usize),
    Infinite,
}

impl Connectivity {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Connectivity::Finite(v) => v >= k,
            Connectivity::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Connectivity::Finite(v) => Some(v),
            Connectivity::Infinite => None,
        }
    }
}

impl PartialOrd for Connectivity {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Connectivity {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use Connectivity::*;
        match (self, other) {
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

/// Dense max-flow on a small graph; capacities are edge multiplicities.
struct Flow {
    n: usize,
    cap: Vec<Vec<i64>>,
}

impl Flow {
    fn new(n: usize) -> Self {
        Self {
            n,
            cap: vec![vec![0; n]; n],
        }
    }

    fn add_undirected(&mut self, u: usize, v: usize, c: i64) {
        self.cap[u][v] += c;
        self.cap[v][u] += c;
    }

    fn add_directed(&mut self, u: usize, v: usize, c: i64) {
        self.cap[u][v] += c;
    }

    #[allow(clippy::needless_range_loop)] // parallel index into two tables
    fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut total = 0;
        loop {
            let mut parent = vec![usize::MAX; self.n];
            parent[s] = s;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..self.n {
                    if parent[v] == usize::MAX && self.cap[u][v] > 0 {
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
            if parent[t] == usize::MAX {
                return total;
            }
            let mut bottleneck = i64::MAX;
            let mut v = t;
            while v != s {
                let u = parent[v];
                bottleneck = bottleneck.min(self.cap[u][v]);
                v = u;
            }
            let mut v = t;
            while v != s {
                let u = parent[v];
                self.cap[u][v] -= bottleneck;
                self.cap[v][u] += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }
}

fn vertex_positions(g: &Multigraph) -> (Vec<VertexId>, BTreeMap<VertexId, usize>) {
    let ids: Vec<VertexId> = g.vertices().collect();
    let pos = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    (ids, pos)
}

/// Minimum number of edges separating `s_side` from `t_side`. `None` when the
/// two sides intersect.
pub fn min_edge_cut_between(
    g: &Multigraph,
    s_side: &BTreeSet<VertexId>,
    t_side: &BTreeSet<VertexId>,
) -> Option<usize> {
    if s_side.intersection(t_side).next().is_some() {
        return None;
    }
    let (_, pos) = vertex_positions(g);
    let n = g.num_vertices();
    let mut flow = Flow::new(n + 2);
    let (src, snk) = (n, n + 1);
    for (_, u, v) in g.edges() {
        flow.add_undirected(pos[&u], pos[&v], 1);
    }
    let inf = g.num_edges() as i64 + 1;
    for v in s_side {
        flow.add_directed(src, pos[v], inf);
    }
    for v in t_side {
        flow.add_directed(pos[v], snk, inf);
    }
    Some(flow.max_flow(src, snk) as usize)
}

/// Plain edge connectivity; `Infinite` on a single vertex.
pub fn edge_connectivity(g: &Multigraph) -> Connectivity {
    let vs: Vec<VertexId> = g.vertices().collect();
    if vs.len() < 2 {
        return Connectivity::Infinite;
    }
    if !g.is_connected() {
        return Connectivity::Finite(0);
    }
    let first = BTreeSet::from([vs[0]]);
    let mut best = usize::MAX;
    for &t in &vs[1..] {
        let cut = min_edge_cut_between(g, &first, &BTreeSet::from([t])).expect("disjoint");
        best = best.min(cut);
    }
    Connectivity::Finite(best)
}

/// Unordered pairs of distinct edges sharing at least one endpoint
/// (including parallel pairs), with their joint vertex set.
fn adjacent_edge_pairs(g: &Multigraph) -> Vec<(BTreeSet<VertexId>, EdgeId, EdgeId)> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for v in g.vertices() {
        let inc = g.incident_edges(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                if seen.insert((inc[i], inc[j])) {
                    let (a, b) = g.endpoints(inc[i]);
                    let (c, d) = g.endpoints(inc[j]);
                    out.push((BTreeSet::from([a, b, c, d]), inc[i], inc[j]));
                }
            }
        }
    }
    out
}

/// Exact r-essential edge connectivity for r <= 2.
pub fn r_essential_edge_connectivity(g: &Multigraph, r: usize) -> Result<Connectivity> {
    match r {
        0 => Ok(edge_connectivity(g)),
        1 => {
            let edges: Vec<(EdgeId, VertexId, VertexId)> = g.edges().collect();
            let mut best = Connectivity::Infinite;
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    let (_, a, b) = edges[i];
                    let (_, c, d) = edges[j];
                    let s = BTreeSet::from([a, b]);
                    let t = BTreeSet::from([c, d]);
                    if let Some(cut) = min_edge_cut_between(g, &s, &t) {
                        best = best.min(Connectivity::Finite(cut));
                    }
                }
            }
            Ok(best)
        }
        2 => {
            let pairs = adjacent_edge_pairs(g);
            let mut best = Connectivity::Infinite;
            for i in 0..pairs.len() {
                for j in i + 1..pairs.len() {
                    if pairs[i].0.intersection(&pairs[j].0).next().is_some() {
                        continue;
                    }
                    if let Some(cut) = min_edge_cut_between(g, &pairs[i].0, &pairs[j].0) {
                        best = best.min(Connectivity::Finite(cut));
                    }
                }
            }
            Ok(best)
        }
        _ => Err(Error::DeskScaleExceeded {
            what: "r-essential edge connectivity (polynomial algorithm covers r <= 2)",
            limit: 2,
            actual: r,
        }),
    }
}

/// Whether the boundary of `x` is an r-essential edge cut: removing it leaves
/// at least two components with at least r edges each.
pub fn is_r_essential_cut(g: &Multigraph, x: &BTreeSet<VertexId>, r: usize) -> Result<bool> {
    let cut = boundary(g, x)?;
    let rest = g.without_edges(&cut.edges);
    let comps = rest.components();
    let rich = comps
        .iter()
        .filter(|c| rest.induced(c).num_edges() >= r)
        .count();
    Ok(rich >= 2)
}

/// Subset-enumeration oracle for r-essential edge connectivity. Any r.
/// Index-based so exhaustive sweeps stay cheap.
#[allow(clippy::needless_range_loop)]
pub fn r_essential_edge_connectivity_oracle(g: &Multigraph, r: usize) -> Result<Connectivity> {
    let n = g.num_vertices();
    if n > 22 {
        return Err(Error::DeskScaleExceeded {
            what: "r-essential subset enumeration",
            limit: 22,
            actual: n,
        });
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    let pos: BTreeMap<VertexId, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let edges: Vec<(usize, usize)> = g.edges().map(|(_, u, v)| (pos[&u], pos[&v])).collect();
    let mut best = Connectivity::Infinite;
    let mut parent = vec![0usize; n];
    let mut edge_count = vec![0usize; n];
    fn find(parent: &mut [usize], mut v: usize) -> usize {
        while parent[v] != v {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        v
    }
    for mask in 1u64..(1u64 << n.saturating_sub(1)) {
        let mut cut = 0usize;
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i;
        }
        // union the kept edges, count the crossing ones
        for &(u, v) in &edges {
            if (mask >> u & 1) != (mask >> v & 1) {
                cut += 1;
            } else {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                if ru != rv {
                    parent[ru] = rv;
                }
            }
        }
        if Connectivity::Finite(cut) >= best {
            continue;
        }
        edge_count.iter_mut().for_each(|c| *c = 0);
        for &(u, v) in &edges {
            if (mask >> u & 1) == (mask >> v & 1) {
                edge_count[find(&mut parent, u)] += 1;
            }
        }
        let mut rich = 0;
        for i in 0..n {
            if find(&mut parent, i) == i && edge_count[i] >= r {
                rich += 1;
            }
        }
        if rich >= 2 {
            best = Connectivity::Finite(cut);
        }
    }
    Ok(best)
}

/// Minimum vertex cut separating `s_side` from `t_side` while avoiding both;
/// `None` when no such cut exists (some edge joins the sides, or they meet).
pub fn min_vertex_cut_between(
    g: &Multigraph,
    s_side: &BTreeSet<VertexId>,
    t_side: &BTreeSet<VertexId>,
) -> Option<usize> {
    if s_side.intersection(t_side).next().is_some() {
        return None;
    }
    for (_, u, v) in g.edges() {
        if (s_side.contains(&u) && t_side.contains(&v))
            || (s_side.contains(&v) && t_side.contains(&u))
        {
            return None;
        }
    }
    let (ids, pos) = vertex_positions(g);
    let n = ids.len();
    // split vertices: in-node i, out-node n+i
    let mut flow = Flow::new(2 * n + 2);
    let (src, snk) = (2 * n, 2 * n + 1);
    let inf = n as i64 + 1;
    for (i, v) in ids.iter().enumerate() {
        let c = if s_side.contains(v) || t_side.contains(v) {
            inf
        } else {
            1
        };
        flow.add_directed(i, n + i, c);
    }
    for (_, u, v) in g.edges() {
        flow.add_directed(n + pos[&u], pos[&v], inf);
        flow.add_directed(n + pos[&v], pos[&u], inf);
    }
    for v in s_side {
        flow.add_directed(src, pos[v], inf);
    }
    for v in t_side {
        flow.add_directed(n + pos[v], snk, inf);
    }
    let f = flow.max_flow(src, snk);
    if f >= inf {
        None
    } else {
        Some(f as usize)
    }
}

/// Minimum size of an essential vertex cut: one leaving at least two
/// components with more than one vertex. Computed over pairs of
/// vertex-disjoint edges as witnesses.
pub fn essential_vertex_connectivity(g: &SimpleGraph) -> Connectivity {
    let mg = g.graph();
    let edges: Vec<(EdgeId, VertexId, VertexId)> = mg.edges().collect();
    let mut best = Connectivity::Infinite;
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (_, a, b) = edges[i];
            let (_, c, d) = edges[j];
            let s = BTreeSet::from([a, b]);
            let t = BTreeSet::from([c, d]);
            if s.intersection(&t).next().is_some() {
                continue;
            }
            if let Some(cut) = min_vertex_cut_between(mg, &s, &t) {
                best = best.min(Connectivity::Finite(cut));
            }
        }
    }
    best
}

/// Definition-level oracle: enumerate all vertex subsets and look for
/// essential cuts directly. Desk scale.
pub fn essential_vertex_connectivity_oracle(g: &SimpleGraph) -> Result<Connectivity> {
    let mg = g.graph();
    let n = mg.num_vertices();
    if n > 18 {
        return Err(Error::DeskScaleExceeded {
            what: "essential vertex connectivity subset enumeration",
            limit: 18,
            actual: n,
        });
    }
    let vs: Vec<VertexId> = mg.vertices().collect();
    let mut best = Connectivity::Infinite;
    for mask in 0u64..(1 << n) {
        let x: BTreeSet<VertexId> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| vs[i]).collect();
        if x.len() >= n.saturating_sub(1) {
            continue;
        }
        let keep: BTreeSet<VertexId> = vs.iter().copied().filter(|v| !x.contains(v)).collect();
        let rest = mg.induced(&keep);
        let nontrivial = rest.components().iter().filter(|c| c.len() > 1).count();
        if nontrivial >= 2 {
            best = best.min(Connectivity::Finite(x.len()));
        }
    }
    Ok(best)
}

/// More than `k` vertices and no essential vertex cut smaller than `k`.
pub fn is_essentially_k_connected(g: &SimpleGraph, k: usize) -> bool {
    g.num_vertices() > k && essential_vertex_connectivity(g).at_least(k)
}

/// Vertex connectivity of a simple graph (n-1 for complete graphs).
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let mg = g.graph();
    let n = mg.num_vertices();
    if n < 2 {
        return 0;
    }
    let vs: Vec<VertexId> = mg.vertices().collect();
    let mut best = n - 1;
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if mg.adjacent(vs[i], vs[j]) {
                continue;
            }
            let s = BTreeSet::from([vs[i]]);
            let t = BTreeSet::from([vs[j]]);
            if let Some(cut) = min_vertex_cut_between(mg, &s, &t) {
                best = best.min(cut);
            }
        }
    }
    best
}

/// Both sides of the degree-two essential-connectivity equivalence, for
/// cross-validation: the line graph is essentially k-connected exactly when
/// the base graph is 2-essentially k-edge-connected with more than k edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObsComparison {
    pub line_graph_side: bool,
    pub edge_side: bool,
}

impl ObsComparison {
    pub fn agree(self) -> bool {
        self.line_graph_side == self.edge_side
    }
}

pub fn check_obs_2ess(g: &Multigraph, k: usize) -> Result<ObsComparison> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let lg = line_graph(g)?;
    let line_graph_side = is_essentially_k_connected(&lg, k);
    let edge_side = r_essential_edge_connectivity(g, 2)?.at_least(k) && g.num_edges() > k;
    Ok(ObsComparison {
        line_graph_side,
        edge_side,
    })
}

/// Applies local completions in order, checking essential k-connectivity
/// after every step. Errors name the violated premise.
pub fn check_lemma_ess(
    g: &SimpleGraph,
    completion_sequence: &[VertexId],
    k: usize,
) -> Result<bool> {
    if !g.graph().is_connected() {
        return Err(Error::PreconditionFailed("graph is not connected".into()));
    }
    if !crate::multigraph::is_claw_free(g) {
        return Err(Error::PreconditionFailed("graph is not claw-free".into()));
    }
    if !is_essentially_k_connected(g, k) {
        return Err(Error::PreconditionFailed(format!(
            "graph is not essentially {k}-connected"
        )));
    }
    let mut current = g.clone();
    for &x in completion_sequence {
        current = crate::multigraph::local_completion(&current, x)?;
        if !is_essentially_k_connected(&current, k) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: u32) -> Multigraph {
        let pairs: Vec<(u32, u32)> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Multigraph::from_edges(n, &pairs).unwrap()
    }

    fn cycle(n: u32) -> Multigraph {
        let pairs: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph::from_edges(n, &pairs).unwrap()
    }

    fn k4() -> Multigraph {
        Multigraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn r_essential_on_p4() {
        let g = path(4);
        assert_eq!(
            r_essential_edge_connectivity(&g, 1).unwrap(),
            Connectivity::Finite(1)
        );
        assert_eq!(
            r_essential_edge_connectivity(&g, 2).unwrap(),
            Connectivity::Infinite
        );
    }

    #[test]
    fn r_essential_on_c6() {
        let g = cycle(6);
        assert_eq!(
            r_essential_edge_connectivity(&g, 2).unwrap(),
            Connectivity::Finite(2)
        );
    }

    #[test]
    fn r_essential_on_k4() {
        let g = k4();
        assert_eq!(
            r_essential_edge_connectivity(&g, 1).unwrap(),
            Connectivity::Finite(4)
        );
        assert_eq!(
            r_essential_edge_connectivity(&g, 2).unwrap(),
            Connectivity::Infinite
        );
    }

    #[test]
    fn polynomial_matches_oracle_on_small_graphs() {
        let graphs = vec![
            path(4),
            path(5),
            cycle(5),
            cycle(6),
            k4(),
            Multigraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0)]).unwrap(),
            Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap(),
        ];
        for g in &graphs {
            for r in 0..=2 {
                assert_eq!(
                    r_essential_edge_connectivity(g, r).unwrap(),
                    r_essential_edge_connectivity_oracle(g, r).unwrap(),
                    "graph {g:?} r={r}"
                );
            }
        }
    }

    #[test]
    fn essential_vertex_connectivity_cases() {
        // K5 has no essential cuts at all.
        let k5 = SimpleGraph::from_edges(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (1, 3),
                (1, 4),
                (2, 3),
                (2, 4),
                (3, 4),
            ],
        )
        .unwrap();
        assert!(is_essentially_k_connected(&k5, 4));

        // Two triangles sharing one vertex: {v} is an essential 1-cut.
        let bowtie =
            SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(!is_essentially_k_connected(&bowtie, 2));

        // P5: the middle vertex is an essential 1-cut, so the graph is
        // essentially 1-connected but not essentially 2-connected.
        let p5 = SimpleGraph::from_multigraph(path(5)).unwrap();
        assert!(is_essentially_k_connected(&p5, 1));
        assert!(!is_essentially_k_connected(&p5, 2));
        assert_eq!(essential_vertex_connectivity(&p5), Connectivity::Finite(1));
    }

    #[test]
    fn essential_vertex_matches_oracle() {
        let graphs = vec![
            SimpleGraph::from_multigraph(path(5)).unwrap(),
            SimpleGraph::from_multigraph(cycle(6)).unwrap(),
            SimpleGraph::from_multigraph(k4()).unwrap(),
            SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap(),
            SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
                .unwrap(),
        ];
        for g in &graphs {
            assert_eq!(
                essential_vertex_connectivity(g),
                essential_vertex_connectivity_oracle(g).unwrap(),
                "graph {g:?}"
            );
        }
    }

    #[test]
    fn obs_2ess_spot_checks() {
        assert!(check_obs_2ess(&k4(), 3).unwrap().agree());
        assert!(check_obs_2ess(&path(4), 1).unwrap().agree());
        for k in 1..=9 {
            assert!(check_obs_2ess(&cycle(6), k).unwrap().agree());
        }
    }

    #[test]
    fn lemma_ess_identity_and_clique() {
        let k4s = SimpleGraph::from_multigraph(k4()).unwrap();
        assert!(check_lemma_ess(&k4s, &[], 2).unwrap());
        assert!(check_lemma_ess(&k4s, &[VertexId(0)], 2).unwrap());
    }

    #[test]
    fn lemma_ess_reports_which_premise_failed() {
        let claw = SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let err = check_lemma_ess(&claw, &[], 1).unwrap_err();
        assert!(err.to_string().contains("claw-free"));
    }
}

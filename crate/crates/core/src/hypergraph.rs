//! 3-hypergraphs: every hyperedge has exactly 2 or 3 distinct vertices.
//!
//! Hyperedge ids are stable across detachment and quotients, which is what
//! lets the reduction pipeline trace a hyperedge through all of its
//! transformations without explicit provenance tables.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::canon::hypergraph_canonical_form;
use crate::error::{Error, Result};
use crate::id::{EdgeId, HyperedgeId, VertexId};
use crate::multigraph::Multigraph;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph3 {
    vertices: BTreeSet<VertexId>,
    hyperedges: BTreeMap<HyperedgeId, Vec<VertexId>>,
}

impl Hypergraph3 {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.vertices.insert(v);
    }

    pub fn add_hyperedge(&mut self, members: &[VertexId]) -> Result<HyperedgeId> {
        let id = HyperedgeId(self.hyperedges.keys().next_back().map_or(0, |h| h.0 + 1));
        self.add_hyperedge_with_id(id, members)?;
        Ok(id)
    }

    pub fn add_hyperedge_with_id(&mut self, id: HyperedgeId, members: &[VertexId]) -> Result<()> {
        let mut sorted: Vec<VertexId> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != members.len() || !(2..=3).contains(&sorted.len()) {
            return Err(Error::PreconditionFailed(format!(
                "hyperedge must have 2 or 3 distinct vertices, got {members:?}"
            )));
        }
        assert!(
            !self.hyperedges.contains_key(&id),
            "hyperedge id {id} already present"
        );
        for &v in &sorted {
            self.vertices.insert(v);
        }
        self.hyperedges.insert(id, sorted);
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_hyperedges(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn hyperedges(&self) -> impl Iterator<Item = (HyperedgeId, &[VertexId])> + '_ {
        self.hyperedges.iter().map(|(&h, m)| (h, m.as_slice()))
    }

    pub fn hyperedge_ids(&self) -> impl Iterator<Item = HyperedgeId> + '_ {
        self.hyperedges.keys().copied()
    }

    pub fn members(&self, h: HyperedgeId) -> &[VertexId] {
        &self.hyperedges[&h]
    }

    pub fn try_members(&self, h: HyperedgeId) -> Result<&[VertexId]> {
        self.hyperedges
            .get(&h)
            .map(Vec::as_slice)
            .ok_or(Error::UnknownHyperedge(h))
    }

    pub fn has_hyperedge(&self, h: HyperedgeId) -> bool {
        self.hyperedges.contains_key(&h)
    }

    pub fn size(&self, h: HyperedgeId) -> usize {
        self.hyperedges[&h].len()
    }

    /// Hyperedges incident with `v`, ascending.
    pub fn incident(&self, v: VertexId) -> Vec<HyperedgeId> {
        self.hyperedges
            .iter()
            .filter(|(_, m)| m.contains(&v))
            .map(|(&h, _)| h)
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.hyperedges.values().filter(|m| m.contains(&v)).count()
    }

    /// Sum of vertex degrees, equal to the sum of hyperedge sizes.
    pub fn degree_sum(&self) -> usize {
        self.hyperedges.values().map(Vec::len).sum()
    }

    pub fn hyperedges_of_size(&self, size: usize) -> impl Iterator<Item = HyperedgeId> + '_ {
        self.hyperedges
            .iter()
            .filter(move |(_, m)| m.len() == size)
            .map(|(&h, _)| h)
    }

    /// Removes `v`, shrinking incident hyperedges and dropping those that
    /// fall below size 2.
    pub fn without_vertex(&self, v: VertexId) -> Hypergraph3 {
        let mut out = Hypergraph3::new();
        for u in self.vertices() {
            if u != v {
                out.add_vertex(u);
            }
        }
        for (h, members) in self.hyperedges() {
            let rest: Vec<VertexId> = members.iter().copied().filter(|&u| u != v).collect();
            if rest.len() >= 2 {
                out.add_hyperedge_with_id(h, &rest).expect("shrunk hyperedge");
            }
        }
        out
    }
}

/// Hyperedges intersecting `x` but not contained in it.
pub fn boundary_h(h: &Hypergraph3, x: &BTreeSet<VertexId>) -> Result<BTreeSet<HyperedgeId>> {
    if !x.iter().all(|v| h.has_vertex(*v)) {
        return Err(Error::InvalidSubset);
    }
    Ok(h.hyperedges()
        .filter(|(_, m)| {
            let inside = m.iter().filter(|v| x.contains(v)).count();
            inside > 0 && inside < m.len()
        })
        .map(|(id, _)| id)
        .collect())
}

pub fn degree_h(h: &Hypergraph3, x: &BTreeSet<VertexId>) -> Result<usize> {
    Ok(boundary_h(h, x)?.len())
}

/// Detaches hyperedge `e` from vertex `v`: a 3-hyperedge shrinks to the
/// remaining pair (same id), a 2-hyperedge is removed entirely.
pub fn detach(h: &Hypergraph3, e: HyperedgeId, v: VertexId) -> Result<Hypergraph3> {
    let members = h.try_members(e)?;
    if !members.contains(&v) {
        return Err(Error::DetachMissingVertex(e, v));
    }
    let mut out = Hypergraph3::new();
    for u in h.vertices() {
        out.add_vertex(u);
    }
    for (id, m) in h.hyperedges() {
        if id != e {
            out.add_hyperedge_with_id(id, m)?;
        } else if m.len() == 3 {
            let rest: Vec<VertexId> = m.iter().copied().filter(|&u| u != v).collect();
            out.add_hyperedge_with_id(id, &rest)?;
        }
    }
    Ok(out)
}

/// A partition of a vertex set into disjoint nonempty classes. Class order is
/// by smallest member, so class indices are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    classes: Vec<BTreeSet<VertexId>>,
    index: BTreeMap<VertexId, usize>,
}

impl Partition {
    pub fn new(ground: &BTreeSet<VertexId>, classes: Vec<BTreeSet<VertexId>>) -> Result<Self> {
        let mut classes = classes;
        classes.retain(|c| !c.is_empty());
        classes.sort_by_key(|c| *c.iter().next().expect("nonempty class"));
        let mut index = BTreeMap::new();
        for (i, class) in classes.iter().enumerate() {
            for &v in class {
                if index.insert(v, i).is_some() {
                    return Err(Error::InvalidPartition(format!("{v} in two classes")));
                }
            }
        }
        if index.len() != ground.len() || !ground.iter().all(|v| index.contains_key(v)) {
            return Err(Error::InvalidPartition(
                "classes do not cover the ground set".into(),
            ));
        }
        Ok(Self { classes, index })
    }

    pub fn singletons(ground: &BTreeSet<VertexId>) -> Self {
        let classes = ground.iter().map(|&v| BTreeSet::from([v])).collect();
        Self::new(ground, classes).expect("singleton partition")
    }

    pub fn whole(ground: &BTreeSet<VertexId>) -> Self {
        Self::new(ground, vec![ground.clone()]).expect("one-class partition")
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[BTreeSet<VertexId>] {
        &self.classes
    }

    pub fn class_of(&self, v: VertexId) -> usize {
        self.index[&v]
    }

    pub fn try_class_of(&self, v: VertexId) -> Result<usize> {
        self.index.get(&v).copied().ok_or(Error::UnknownVertex(v))
    }

    /// Class indices met by the given vertices.
    pub fn classes_met(&self, vs: &[VertexId]) -> BTreeSet<usize> {
        vs.iter().map(|&v| self.class_of(v)).collect()
    }

    /// Whether the vertices touch at least two classes.
    pub fn crossing(&self, vs: &[VertexId]) -> bool {
        self.classes_met(vs).len() > 1
    }
}

/// Quotient hypergraph: classes become vertices `0..k`, and every crossing
/// hyperedge survives under its own id with members replaced by the classes
/// it meets. Non-crossing hyperedges vanish. Two crossing hyperedges with the
/// same image stay distinct.
pub fn quotient(h: &Hypergraph3, p: &Partition) -> Result<Hypergraph3> {
    for v in h.vertices() {
        p.try_class_of(v)?;
    }
    let mut out = Hypergraph3::new();
    for i in 0..p.num_classes() {
        out.add_vertex(VertexId(i as u32));
    }
    for (id, members) in h.hyperedges() {
        let met = p.classes_met(members);
        if met.len() > 1 {
            let image: Vec<VertexId> = met.into_iter().map(|i| VertexId(i as u32)).collect();
            out.add_hyperedge_with_id(id, &image)?;
        }
    }
    Ok(out)
}

/// Incidence graph of a 3-hypergraph, with the maps needed to walk trails
/// back and forth.
///
/// Hypergraph vertices keep their ids; each 3-hyperedge becomes a fresh node
/// joined to its three members; each 2-hyperedge becomes a single graph edge,
/// so parallel 2-hyperedges yield parallel edges.
#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    pub graph: Multigraph,
    /// Graph node standing for a 3-hyperedge.
    pub node_of_triple: BTreeMap<HyperedgeId, VertexId>,
    pub triple_of_node: BTreeMap<VertexId, HyperedgeId>,
    /// Hyperedge that produced each graph edge.
    pub origin_of_edge: BTreeMap<EdgeId, HyperedgeId>,
}

impl IncidenceGraph {
    pub fn is_triple_node(&self, v: VertexId) -> bool {
        self.triple_of_node.contains_key(&v)
    }
}

pub fn incidence_graph(h: &Hypergraph3) -> IncidenceGraph {
    let mut graph = Multigraph::new();
    for v in h.vertices() {
        graph.add_vertex(v);
    }
    let base = h.vertex_set().iter().next_back().map_or(0, |v| v.0 + 1);
    let mut node_of_triple = BTreeMap::new();
    let mut triple_of_node = BTreeMap::new();
    for (rank, t) in h.hyperedges_of_size(3).enumerate() {
        let node = VertexId(base + rank as u32);
        graph.add_vertex(node);
        node_of_triple.insert(t, node);
        triple_of_node.insert(node, t);
    }
    let mut origin_of_edge = BTreeMap::new();
    for (id, members) in h.hyperedges() {
        match members {
            [u, v] => {
                let e = graph.add_edge(*u, *v).expect("pair edge");
                origin_of_edge.insert(e, id);
            }
            [a, b, c] => {
                let node = node_of_triple[&id];
                for &v in [a, b, c].iter() {
                    let e = graph.add_edge(node, *v).expect("triple spoke");
                    origin_of_edge.insert(e, id);
                }
            }
            _ => unreachable!("hyperedge size invariant"),
        }
    }
    IncidenceGraph {
        graph,
        node_of_triple,
        triple_of_node,
        origin_of_edge,
    }
}

/// Local exchange at a vertex incident with exactly two 2-hyperedges
/// `{u,x}`, `{u,y}` and one 3-hyperedge `{u,a,b}`: afterwards the pairs are
/// `{u,a}`, `{u,b}` and the triple is `{u,x,y}`. Preserves every vertex
/// degree and the incidence graph up to isomorphism.
pub fn switch(h: &Hypergraph3, u: VertexId) -> Result<Hypergraph3> {
    let incident = h.incident(u);
    let pairs: Vec<HyperedgeId> = incident
        .iter()
        .copied()
        .filter(|&e| h.size(e) == 2)
        .collect();
    let triples: Vec<HyperedgeId> = incident
        .iter()
        .copied()
        .filter(|&e| h.size(e) == 3)
        .collect();
    if pairs.len() != 2 || triples.len() != 1 {
        return Err(Error::SwitchPrecondition(
            u,
            format!(
                "needs two 2-hyperedges and one 3-hyperedge, found {} and {}",
                pairs.len(),
                triples.len()
            ),
        ));
    }
    let x = *h.members(pairs[0]).iter().find(|&&v| v != u).unwrap();
    let y = *h.members(pairs[1]).iter().find(|&&v| v != u).unwrap();
    if x == y {
        return Err(Error::SwitchPrecondition(
            u,
            "the two 2-hyperedges share both vertices".into(),
        ));
    }
    let ab: Vec<VertexId> = h
        .members(triples[0])
        .iter()
        .copied()
        .filter(|&v| v != u)
        .collect();
    let mut out = Hypergraph3::new();
    for v in h.vertices() {
        out.add_vertex(v);
    }
    for (id, members) in h.hyperedges() {
        if id == pairs[0] {
            out.add_hyperedge_with_id(id, &[u, ab[0]])?;
        } else if id == pairs[1] {
            out.add_hyperedge_with_id(id, &[u, ab[1]])?;
        } else if id == triples[0] {
            out.add_hyperedge_with_id(id, &[u, x, y])?;
        } else {
            out.add_hyperedge_with_id(id, members)?;
        }
    }
    Ok(out)
}

/// Vertices where a switch is currently possible.
pub fn switchable_vertices(h: &Hypergraph3) -> Vec<VertexId> {
    h.vertices()
        .filter(|&u| {
            let incident = h.incident(u);
            let pairs: Vec<_> = incident.iter().filter(|&&e| h.size(e) == 2).collect();
            let triples = incident.iter().filter(|&&e| h.size(e) == 3).count();
            if pairs.len() != 2 || triples != 1 {
                return false;
            }
            let x = h.members(*pairs[0]).iter().find(|&&v| v != u).unwrap();
            let y = h.members(*pairs[1]).iter().find(|&&v| v != u).unwrap();
            x != y
        })
        .collect()
}

/// Hypergraphs reachable from `h` by at most `max_depth` switches, paired
/// with the switch sequence that produced them. Deduplicated up to
/// isomorphism; breadth-first, so shorter sequences come first.
pub fn related_hypergraphs(h: &Hypergraph3, max_depth: usize) -> Vec<(Vec<VertexId>, Hypergraph3)> {
    let mut seen = BTreeSet::from([hypergraph_canonical_form(h)]);
    let mut out = vec![(Vec::new(), h.clone())];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let (seq, current) = out[i].clone();
        if seq.len() >= max_depth {
            continue;
        }
        for u in switchable_vertices(&current) {
            let next = switch(&current, u).expect("switchable");
            if seen.insert(hypergraph_canonical_form(&next)) {
                let mut next_seq = seq.clone();
                next_seq.push(u);
                out.push((next_seq, next));
                queue.push_back(out.len() - 1);
            }
        }
    }
    out
}

/// Searches for a switch sequence turning `h1` into something isomorphic to
/// `h2`. Returns the witnessing sequence, or `None` within the depth bound.
pub fn related_search(
    h1: &Hypergraph3,
    h2: &Hypergraph3,
    max_depth: usize,
) -> Option<Vec<VertexId>> {
    let target = hypergraph_canonical_form(h2);
    for (seq, candidate) in related_hypergraphs(h1, max_depth) {
        if hypergraph_canonical_form(&candidate) == target {
            return Some(seq);
        }
    }
    None
}

/// Minimum of `d_H(X)` over nonempty proper vertex subsets, by subset
/// enumeration. Desk scale only.
pub fn hyper_edge_connectivity(h: &Hypergraph3) -> Result<usize> {
    let n = h.num_vertices();
    if n < 2 {
        return Err(Error::PreconditionFailed(
            "hyperedge connectivity needs at least two vertices".into(),
        ));
    }
    if n > 22 {
        return Err(Error::DeskScaleExceeded {
            what: "hyperedge connectivity subset enumeration",
            limit: 22,
            actual: n,
        });
    }
    let vs: Vec<VertexId> = h.vertices().collect();
    let mut best = usize::MAX;
    // Fixing the last vertex outside X halves the work and skips complements.
    for mask in 1u64..(1 << (n - 1)) {
        let x: BTreeSet<VertexId> = (0..n - 1)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| vs[i])
            .collect();
        best = best.min(degree_h(h, &x)?);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::hypergraphs_isomorphic;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn triangle_pairs() -> Hypergraph3 {
        let mut h = Hypergraph3::new();
        h.add_hyperedge(&[v(0), v(1)]).unwrap();
        h.add_hyperedge(&[v(1), v(2)]).unwrap();
        h.add_hyperedge(&[v(0), v(2)]).unwrap();
        h
    }

    #[test]
    fn incidence_of_single_pair_is_k2() {
        let mut h = Hypergraph3::new();
        h.add_hyperedge(&[v(0), v(1)]).unwrap();
        let inc = incidence_graph(&h);
        assert_eq!(inc.graph.num_vertices(), 2);
        assert_eq!(inc.graph.num_edges(), 1);
    }

    #[test]
    fn incidence_of_single_triple_is_claw() {
        let mut h = Hypergraph3::new();
        h.add_hyperedge(&[v(0), v(1), v(2)]).unwrap();
        let inc = incidence_graph(&h);
        assert_eq!(inc.graph.num_vertices(), 4);
        assert_eq!(inc.graph.num_edges(), 3);
        let node = inc.node_of_triple[&HyperedgeId(0)];
        assert_eq!(inc.graph.degree(node), 3);
    }

    #[test]
    fn incidence_edge_count_is_pairs_plus_three_per_triple() {
        // One triple {a,b,c} and one pair {a,b}: 4 nodes, 1 + 3 edges.
        let mut h = Hypergraph3::new();
        h.add_hyperedge(&[v(0), v(1), v(2)]).unwrap();
        h.add_hyperedge(&[v(0), v(1)]).unwrap();
        let inc = incidence_graph(&h);
        assert_eq!(inc.graph.num_vertices(), 4);
        assert_eq!(inc.graph.num_edges(), 4);
    }

    #[test]
    fn boundary_membership() {
        let mut h = Hypergraph3::new();
        let e = h.add_hyperedge(&[v(0), v(1), v(2)]).unwrap();
        let b = boundary_h(&h, &BTreeSet::from([v(0)])).unwrap();
        assert!(b.contains(&e));
        let all = boundary_h(&h, &BTreeSet::from([v(0), v(1), v(2)])).unwrap();
        assert!(all.is_empty());
    }

    #[test]
    fn boundary_on_pair_triangle() {
        let h = triangle_pairs();
        let b = boundary_h(&h, &BTreeSet::from([v(0), v(1)])).unwrap();
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn detach_shrinks_triple_and_drops_pair() {
        let mut h = Hypergraph3::new();
        let t = h.add_hyperedge(&[v(0), v(1), v(2)]).unwrap();
        let shrunk = detach(&h, t, v(0)).unwrap();
        assert_eq!(shrunk.members(t), &[v(1), v(2)]);

        let mut h2 = Hypergraph3::new();
        let p = h2.add_hyperedge(&[v(0), v(1)]).unwrap();
        let gone = detach(&h2, p, v(0)).unwrap();
        assert!(!gone.has_hyperedge(p));
        assert!(gone.has_vertex(v(0)));

        assert!(detach(&h, t, v(7)).is_err());
    }

    #[test]
    fn quotient_images() {
        let mut h = Hypergraph3::new();
        let t = h.add_hyperedge(&[v(0), v(1), v(2)]).unwrap();
        let ground = h.vertex_set().clone();

        let p = Partition::singletons(&ground);
        let q = quotient(&h, &p).unwrap();
        assert_eq!(q.size(t), 3);

        let p2 = Partition::new(
            &ground,
            vec![BTreeSet::from([v(0), v(1)]), BTreeSet::from([v(2)])],
        )
        .unwrap();
        let q2 = quotient(&h, &p2).unwrap();
        assert_eq!(q2.size(t), 2);

        let mut h3 = Hypergraph3::new();
        let pair = h3.add_hyperedge(&[v(0), v(1)]).unwrap();
        h3.add_vertex(v(2));
        let q3 = quotient(&h3, &p2).unwrap();
        assert!(!q3.has_hyperedge(pair));
    }

    #[test]
    fn quotient_composes() {
        let mut h = Hypergraph3::new();
        h.add_hyperedge(&[v(0), v(1), v(2)]).unwrap();
        h.add_hyperedge(&[v(2), v(3)]).unwrap();
        h.add_hyperedge(&[v(1), v(3)]).unwrap();
        let ground = h.vertex_set().clone();
        let p = Partition::new(
            &ground,
            vec![
                BTreeSet::from([v(0), v(1)]),
                BTreeSet::from([v(2)]),
                BTreeSet::from([v(3)]),
            ],
        )
        .unwrap();
        let q1 = quotient(&h, &p).unwrap();
        let inner = Partition::new(
            q1.vertex_set(),
            vec![BTreeSet::from([v(0), v(1)]), BTreeSet::from([v(2)])],
        )
        .unwrap();
        let q2 = quotient(&q1, &inner).unwrap();

        // same as quotienting h by the composed partition {0,1,2},{3}
        let composed = Partition::new(
            &ground,
            vec![BTreeSet::from([v(0), v(1), v(2)]), BTreeSet::from([v(3)])],
        )
        .unwrap();
        let direct = quotient(&h, &composed).unwrap();
        assert!(hypergraphs_isomorphic(&q2, &direct));
    }

    fn switch_instance() -> Hypergraph3 {
        let mut h = Hypergraph3::new();
        h.add_hyperedge(&[v(0), v(1)]).unwrap(); // {u,x}
        h.add_hyperedge(&[v(0), v(2)]).unwrap(); // {u,y}
        h.add_hyperedge(&[v(0), v(3), v(4)]).unwrap(); // {u,a,b}
        h
    }

    #[test]
    fn switch_preserves_degrees_and_incidence_graph() {
        let h = switch_instance();
        let s = switch(&h, v(0)).unwrap();
        for u in h.vertices() {
            assert_eq!(h.degree(u), s.degree(u), "degree of {u}");
        }
        let gi_before = incidence_graph(&h).graph;
        let gi_after = incidence_graph(&s).graph;
        assert!(crate::canon::multigraphs_isomorphic(&gi_before, &gi_after));
    }

    #[test]
    fn double_switch_is_identity_up_to_isomorphism() {
        let h = switch_instance();
        let twice = switch(&switch(&h, v(0)).unwrap(), v(0)).unwrap();
        assert!(hypergraphs_isomorphic(&h, &twice));
    }

    #[test]
    fn switch_rejects_wrong_degree_pattern() {
        let mut h = Hypergraph3::new();
        h.add_hyperedge(&[v(0), v(1)]).unwrap();
        h.add_hyperedge(&[v(0), v(2)]).unwrap();
        h.add_hyperedge(&[v(0), v(3)]).unwrap();
        assert!(switch(&h, v(0)).is_err());
    }

    #[test]
    fn related_search_basics() {
        let h = switch_instance();
        assert_eq!(related_search(&h, &h, 3), Some(vec![]));
        // The minimal switch instance is isomorphic to its own switch, so the
        // empty sequence already witnesses it.
        let s = switch(&h, v(0)).unwrap();
        assert_eq!(related_search(&h, &s, 3), Some(vec![]));

        // A pendant pair at x breaks the symmetry; one switch is needed.
        let mut asym = switch_instance();
        asym.add_hyperedge(&[v(1), v(5)]).unwrap();
        let switched = switch(&asym, v(0)).unwrap();
        assert_eq!(related_search(&asym, &switched, 3), Some(vec![v(0)]));

        let mut other = Hypergraph3::new();
        other.add_hyperedge(&[v(0), v(1)]).unwrap();
        assert_eq!(related_search(&h, &other, 3), None);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(hyper_edge_connectivity(&triangle_pairs()).unwrap(), 2);
        let mut h = Hypergraph3::new();
        h.add_hyperedge(&[v(0), v(1), v(2)]).unwrap();
        assert_eq!(hyper_edge_connectivity(&h).unwrap(), 1);
        let mut single = Hypergraph3::new();
        single.add_vertex(v(0));
        assert!(hyper_edge_connectivity(&single).is_err());
    }

    #[test]
    fn detach_degree_drop() {
        let mut h = Hypergraph3::new();
        let t = h.add_hyperedge(&[v(0), v(1), v(2)]).unwrap();
        h.add_hyperedge(&[v(0), v(1)]).unwrap();
        let before: Vec<usize> = [0, 1, 2].iter().map(|&i| h.degree(v(i))).collect();
        let after = detach(&h, t, v(0)).unwrap();
        assert_eq!(after.degree(v(0)), before[0] - 1);
        assert_eq!(after.degree(v(1)), before[1]);
        assert_eq!(after.degree(v(2)), before[2]);
    }
}

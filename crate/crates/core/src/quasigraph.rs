//! Quasigraphs: a per-hyperedge choice of a 2-subset (or nothing) inside a
//! 3-hypergraph, together with the calculus built on that choice —
//! quasicycles, connectedness and anticonnectedness, quotients, complements,
//! skeletal partitions, rooted orientations and bad leaves.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{quotient, Hypergraph3, Partition};
use crate::id::{HyperedgeId, VertexId};
use crate::multigraph::Multigraph;

/// How an unused hyperedge counts when testing anticonnectedness: the default
/// reads "the empty set is contained in one class" as vacuously true, so an
/// unused crossing hyperedge witnesses a partition. The strict mode requires
/// an actual pair inside a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum AnticonnectednessMode {
    #[default]
    EmptyContained,
    EmptyNotContained,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quasigraph {
    host: Hypergraph3,
    /// Used hyperedges only; absence means the empty choice.
    assignment: BTreeMap<HyperedgeId, (VertexId, VertexId)>,
}

impl Quasigraph {
    pub fn empty(host: Hypergraph3) -> Self {
        Self {
            host,
            assignment: BTreeMap::new(),
        }
    }

    pub fn new(
        host: Hypergraph3,
        assignment: BTreeMap<HyperedgeId, (VertexId, VertexId)>,
    ) -> Result<Self> {
        for (&h, &(u, v)) in &assignment {
            let members = host.try_members(h)?;
            if u == v || !members.contains(&u) || !members.contains(&v) {
                return Err(Error::PreconditionFailed(format!(
                    "assignment for {h} is not a 2-subset of the hyperedge"
                )));
            }
        }
        Ok(Self { host, assignment })
    }

    pub fn host(&self) -> &Hypergraph3 {
        &self.host
    }

    pub fn assignment(&self) -> &BTreeMap<HyperedgeId, (VertexId, VertexId)> {
        &self.assignment
    }

    pub fn choice(&self, h: HyperedgeId) -> Option<(VertexId, VertexId)> {
        self.assignment.get(&h).copied()
    }

    pub fn uses(&self, h: HyperedgeId) -> bool {
        self.assignment.contains_key(&h)
    }

    pub fn used_count(&self) -> usize {
        self.assignment.len()
    }

    /// The multigraph on the host's vertices with one edge per used
    /// hyperedge; edge ids equal the hyperedge ids.
    pub fn pi_star(&self) -> Multigraph {
        let mut g = Multigraph::new();
        for v in self.host.vertices() {
            g.add_vertex(v);
        }
        for (&h, &(u, v)) in &self.assignment {
            g.add_edge_with_id(crate::id::EdgeId(h.0), u, v)
                .expect("valid pair");
        }
        g
    }

    /// Forest test on the selection multigraph. Two hyperedges selecting the
    /// same pair already form a cycle.
    pub fn is_acyclic(&self) -> bool {
        let vertices: Vec<VertexId> = self.host.vertices().collect();
        let mut dsu = Dsu::new(&vertices);
        for &(u, v) in self.assignment.values() {
            if !dsu.union(u, v) {
                return false;
            }
        }
        true
    }

    /// Whether the selection graph is exactly one circuit plus isolated
    /// vertices.
    pub fn is_quasicycle(&self) -> bool {
        let star = self.pi_star();
        if star.num_edges() < 2 {
            return false;
        }
        let busy: BTreeSet<VertexId> = star.vertices().filter(|&v| star.degree(v) > 0).collect();
        if busy.iter().any(|&v| star.degree(v) != 2) {
            return false;
        }
        if star.num_edges() != busy.len() {
            return false;
        }
        star.induced(&busy).is_connected()
    }

    /// Induced subgraph of the selection graph on `x` is connected.
    pub fn connected_on(&self, x: &BTreeSet<VertexId>) -> bool {
        if x.len() <= 1 {
            return true;
        }
        self.pi_star().induced(x).is_connected()
    }

    pub fn anticonnected_on(&self, x: &BTreeSet<VertexId>) -> Result<bool> {
        self.anticonnected_on_with(x, AnticonnectednessMode::default())
    }

    /// Every nontrivial partition of `x` must be crossed by some hyperedge
    /// whose selection sits inside a single class (or is empty, depending on
    /// the mode). Enumerates all partitions of `x`, so |x| is capped at 12.
    pub fn anticonnected_on_with(
        &self,
        x: &BTreeSet<VertexId>,
        mode: AnticonnectednessMode,
    ) -> Result<bool> {
        if x.len() > 12 {
            return Err(Error::DeskScaleExceeded {
                what: "anticonnectedness partition enumeration",
                limit: 12,
                actual: x.len(),
            });
        }
        if x.len() <= 1 {
            return Ok(true);
        }
        let items: Vec<VertexId> = x.iter().copied().collect();
        let index: BTreeMap<VertexId, usize> =
            items.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let hyperedges: Vec<(HyperedgeId, Vec<VertexId>)> = self
            .host
            .hyperedges()
            .map(|(h, m)| (h, m.to_vec()))
            .collect();
        let mut ok = true;
        for_each_partition(items.len(), &mut |labels, num_classes| {
            if num_classes < 2 {
                return true;
            }
            let class_of = |u: VertexId| -> Option<usize> { index.get(&u).map(|&i| labels[i]) };
            let witnessed = hyperedges.iter().any(|(h, members)| {
                let met: BTreeSet<usize> = members.iter().filter_map(|&u| class_of(u)).collect();
                if met.len() < 2 {
                    return false;
                }
                match self.choice(*h) {
                    None => mode == AnticonnectednessMode::EmptyContained,
                    Some((a, b)) => match (class_of(a), class_of(b)) {
                        (Some(ca), Some(cb)) => ca == cb,
                        _ => false,
                    },
                }
            });
            if !witnessed {
                ok = false;
                return false;
            }
            true
        });
        Ok(ok)
    }

    /// Quotient quasigraph: a crossing hyperedge keeps its id, and its image
    /// selection is the class pair when the original selection crosses,
    /// otherwise empty.
    pub fn quotient(&self, p: &Partition) -> Result<Quasigraph> {
        let host = quotient(&self.host, p)?;
        let mut assignment = BTreeMap::new();
        for h in host.hyperedge_ids() {
            if let Some((u, v)) = self.choice(h) {
                let cu = p.class_of(u);
                let cv = p.class_of(v);
                if cu != cv {
                    assignment.insert(h, (VertexId(cu as u32), VertexId(cv as u32)));
                }
            }
        }
        Quasigraph::new(host, assignment)
    }

    /// Sub-hypergraph of the unused hyperedges, on the full vertex set.
    pub fn complement(&self) -> Hypergraph3 {
        let mut out = Hypergraph3::new();
        for v in self.host.vertices() {
            out.add_vertex(v);
        }
        for (h, members) in self.host.hyperedges() {
            if !self.uses(h) {
                out.add_hyperedge_with_id(h, members).expect("valid copy");
            }
        }
        out
    }

    /// Restriction to the host with one vertex deleted: selections touching
    /// the vertex or living on dropped hyperedges are cleared.
    pub fn restrict_without_vertex(&self, v: VertexId) -> Quasigraph {
        let host = self.host.without_vertex(v);
        let mut assignment = BTreeMap::new();
        for (&h, &(a, b)) in &self.assignment {
            if host.has_hyperedge(h) && a != v && b != v {
                assignment.insert(h, (a, b));
            }
        }
        Quasigraph::new(host, assignment).expect("restricted assignment")
    }
}

/// Whether the hypergraph admits no quasicycle: no circuit can be assembled
/// from candidate pairs, at most one per hyperedge.
pub fn hypergraph_is_acyclic(h: &Hypergraph3) -> bool {
    let mut cands: Vec<(HyperedgeId, VertexId, VertexId)> = Vec::new();
    for (id, members) in h.hyperedges() {
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                cands.push((id, members[i], members[j]));
            }
        }
    }
    // A circuit is a simple cycle with pairwise distinct hyperedge labels.
    // DFS from each anchor, never descending below it.
    for start in h.vertices() {
        let mut used_h: BTreeSet<HyperedgeId> = BTreeSet::new();
        let mut path: Vec<VertexId> = vec![start];
        if cycle_dfs(start, start, &cands, &mut used_h, &mut path) {
            return false;
        }
    }
    true
}

fn cycle_dfs(
    anchor: VertexId,
    current: VertexId,
    cands: &[(HyperedgeId, VertexId, VertexId)],
    used_h: &mut BTreeSet<HyperedgeId>,
    path: &mut Vec<VertexId>,
) -> bool {
    for &(h, a, b) in cands {
        if used_h.contains(&h) {
            continue;
        }
        let next = if a == current {
            b
        } else if b == current {
            a
        } else {
            continue;
        };
        if next == anchor && path.len() >= 2 {
            return true;
        }
        if next <= anchor || path.contains(&next) {
            continue;
        }
        used_h.insert(h);
        path.push(next);
        if cycle_dfs(anchor, next, cands, used_h, path) {
            return true;
        }
        path.pop();
        used_h.remove(&h);
    }
    false
}

/// Exhaustive cross-check of [`hypergraph_is_acyclic`] by enumerating every
/// assignment. Test oracle; exponential in the hyperedge count.
pub fn hypergraph_is_acyclic_oracle(h: &Hypergraph3) -> Result<bool> {
    if h.num_hyperedges() > 12 {
        return Err(Error::DeskScaleExceeded {
            what: "acyclicity assignment enumeration",
            limit: 12,
            actual: h.num_hyperedges(),
        });
    }
    let ids: Vec<HyperedgeId> = h.hyperedge_ids().collect();
    let options: Vec<Vec<Option<(VertexId, VertexId)>>> = ids
        .iter()
        .map(|&id| {
            let m = h.members(id);
            let mut opts = vec![None];
            for i in 0..m.len() {
                for j in i + 1..m.len() {
                    opts.push(Some((m[i], m[j])));
                }
            }
            opts
        })
        .collect();
    let mut counters = vec![0usize; ids.len()];
    loop {
        let mut assignment = BTreeMap::new();
        for (i, &id) in ids.iter().enumerate() {
            if let Some(pair) = options[i][counters[i]] {
                assignment.insert(id, pair);
            }
        }
        let q = Quasigraph::new(h.clone(), assignment)?;
        if q.is_quasicycle() {
            return Ok(false);
        }
        let mut i = 0;
        loop {
            if i == ids.len() {
                return Ok(true);
            }
            counters[i] += 1;
            if counters[i] < options[i].len() {
                break;
            }
            counters[i] = 0;
            i += 1;
        }
    }
}

/// Calls `f(labels, num_classes)` for every set partition of `0..n`, encoded
/// as restricted-growth labels. `f` returns false to stop.
pub fn for_each_partition(n: usize, f: &mut dyn FnMut(&[usize], usize) -> bool) {
    fn rec(
        labels: &mut Vec<usize>,
        max: usize,
        n: usize,
        f: &mut dyn FnMut(&[usize], usize) -> bool,
    ) -> bool {
        if labels.len() == n {
            return f(labels, max + 1);
        }
        for c in 0..=max + 1 {
            labels.push(c);
            if !rec(labels, max.max(c), n, f) {
                labels.pop();
                return false;
            }
            labels.pop();
        }
        true
    }
    if n == 0 {
        f(&[], 0);
        return;
    }
    let mut labels = vec![0usize];
    rec(&mut labels, 0, n, f);
}

/// Rooted orientation of an acyclic quasigraph: one root per component of
/// the selection forest, edges directed toward the root. A used hyperedge is
/// associated with the tail of its selection; every vertex tails at most one
/// edge and so owns at most one hyperedge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedOrientation {
    pub roots: BTreeSet<VertexId>,
    /// tail vertex -> its associated hyperedge
    pub association: BTreeMap<VertexId, HyperedgeId>,
    /// used hyperedge -> (tail, head)
    pub oriented: BTreeMap<HyperedgeId, (VertexId, VertexId)>,
}

impl RootedOrientation {
    pub fn associated_with(&self, v: VertexId) -> Option<HyperedgeId> {
        self.association.get(&v).copied()
    }
}

pub fn rooted_orientation(q: &Quasigraph, roots: &[VertexId]) -> Result<RootedOrientation> {
    if !q.is_acyclic() {
        return Err(Error::PreconditionFailed(
            "rooted orientation needs an acyclic quasigraph".into(),
        ));
    }
    let star = q.pi_star();
    let comps = star.components();
    if comps.len() != roots.len() {
        return Err(Error::PreconditionFailed(format!(
            "expected one root per component ({} components, {} roots)",
            comps.len(),
            roots.len()
        )));
    }
    let root_set: BTreeSet<VertexId> = roots.iter().copied().collect();
    let mut association = BTreeMap::new();
    let mut oriented = BTreeMap::new();
    for comp in &comps {
        let these: Vec<VertexId> = roots.iter().copied().filter(|r| comp.contains(r)).collect();
        if these.len() != 1 {
            return Err(Error::PreconditionFailed(
                "each component needs exactly one root".into(),
            ));
        }
        let root = these[0];
        // BFS from the root; each non-root vertex tails its parent edge.
        let mut seen = BTreeSet::from([root]);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &e in star.incident_edges(v) {
                let w = star.other_end(e, v);
                if seen.insert(w) {
                    let h = HyperedgeId(e.0);
                    association.insert(w, h);
                    oriented.insert(h, (w, v));
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(RootedOrientation {
        roots: root_set,
        association,
        oriented,
    })
}

/// Bad leaves under a fixed orientation: selection-forest leaves incident
/// with exactly three hyperedges, exactly one of size 3, with that
/// 3-hyperedge associated to them.
pub fn bad_leaves(q: &Quasigraph, orientation: &RootedOrientation) -> BTreeSet<VertexId> {
    let star = q.pi_star();
    let mut out = BTreeSet::new();
    for u in q.host().vertices() {
        if star.degree(u) != 1 {
            continue;
        }
        let incident = q.host().incident(u);
        if incident.len() != 3 {
            continue;
        }
        let triples: Vec<HyperedgeId> = incident
            .iter()
            .copied()
            .filter(|&h| q.host().size(h) == 3)
            .collect();
        if triples.len() != 1 {
            continue;
        }
        if orientation.associated_with(u) == Some(triples[0]) {
            out.insert(u);
        }
    }
    out
}

/// Whether some choice of roots produces a bad leaf. Bad leaves in one
/// component depend only on that component's root, so components are scanned
/// independently.
pub fn has_bad_leaf_any_roots(q: &Quasigraph) -> Result<bool> {
    if !q.is_acyclic() {
        return Err(Error::PreconditionFailed(
            "bad-leaf scan needs an acyclic quasigraph".into(),
        ));
    }
    let star = q.pi_star();
    let comps = star.components();
    let default_roots: Vec<VertexId> = comps
        .iter()
        .map(|c| *c.iter().next().expect("nonempty component"))
        .collect();
    for (i, comp) in comps.iter().enumerate() {
        for &root in comp.iter() {
            let mut roots = default_roots.clone();
            roots[i] = root;
            let orientation = rooted_orientation(q, &roots)?;
            if bad_leaves(q, &orientation).iter().any(|u| comp.contains(u)) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Transcript of a skeletal check: per-class connectedness and
/// anticonnectedness, plus acyclicity of the complement of the quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletalTranscript {
    pub class_connected: Vec<bool>,
    pub class_anticonnected: Vec<bool>,
    pub complement_quotient_acyclic: bool,
}

impl SkeletalTranscript {
    pub fn holds(&self) -> bool {
        self.class_connected.iter().all(|&b| b)
            && self.class_anticonnected.iter().all(|&b| b)
            && self.complement_quotient_acyclic
    }
}

pub fn is_skeletal(q: &Quasigraph, p: &Partition) -> Result<SkeletalTranscript> {
    is_skeletal_with(q, p, AnticonnectednessMode::default())
}

pub fn is_skeletal_with(
    q: &Quasigraph,
    p: &Partition,
    mode: AnticonnectednessMode,
) -> Result<SkeletalTranscript> {
    let mut class_connected = Vec::new();
    let mut class_anticonnected = Vec::new();
    for class in p.classes() {
        class_connected.push(q.connected_on(class));
        class_anticonnected.push(q.anticonnected_on_with(class, mode)?);
    }
    let quotient_q = q.quotient(p)?;
    let complement_quotient_acyclic = hypergraph_is_acyclic(&quotient_q.complement());
    Ok(SkeletalTranscript {
        class_connected,
        class_anticonnected,
        complement_quotient_acyclic,
    })
}

/// Union-find over vertex ids.
pub(crate) struct Dsu {
    parent: BTreeMap<VertexId, VertexId>,
}

impl Dsu {
    pub(crate) fn new(vertices: &[VertexId]) -> Self {
        Self {
            parent: vertices.iter().map(|&v| (v, v)).collect(),
        }
    }

    pub(crate) fn find(&mut self, v: VertexId) -> VertexId {
        let p = self.parent[&v];
        if p == v {
            return v;
        }
        let root = self.find(p);
        self.parent.insert(v, root);
        root
    }

    /// Returns false when both ends were already connected.
    pub(crate) fn union(&mut self, u: VertexId, v: VertexId) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent.insert(ru, rv);
        true
    }
}

//! Canonical labeling for multigraphs and 3-hypergraphs.
//!
//! Iterative colour refinement followed by brute-force individualization:
//! at each search node the first non-singleton colour class is split on every
//! member and the minimum leaf encoding wins. Exact at desk scale; the leaf
//! encoding captures the whole structure, so refinement quality only affects
//! speed, never correctness.

use std::collections::BTreeMap;

use crate::hypergraph::Hypergraph3;
use crate::id::VertexId;
use crate::multigraph::Multigraph;

/// Relabeling-invariant fingerprint. Equal forms mean isomorphic structures.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u32>);

trait CanonInput {
    fn n(&self) -> usize;
    /// Invariant signature of vertex `v` under the current colouring.
    fn signature(&self, v: usize, colors: &[u32]) -> Vec<u32>;
    /// Full structure encoding once `position[v]` is a bijection to `0..n`.
    fn encode(&self, position: &[u32]) -> Vec<u32>;
}

fn refine(input: &dyn CanonInput, colors: &mut Vec<u32>) {
    loop {
        let mut keyed: Vec<(u32, Vec<u32>, usize)> = (0..input.n())
            .map(|v| (colors[v], input.signature(v, colors), v))
            .collect();
        keyed.sort();
        let mut next = vec![0u32; input.n()];
        let mut rank = 0u32;
        for i in 0..keyed.len() {
            if i > 0 && (keyed[i].0, &keyed[i].1) != (keyed[i - 1].0, &keyed[i - 1].1) {
                rank += 1;
            }
            next[keyed[i].2] = rank;
        }
        if next == *colors {
            return;
        }
        *colors = next;
    }
}

fn canon_search(input: &dyn CanonInput, colors: &mut Vec<u32>, best: &mut Option<Vec<u32>>) {
    refine(input, colors);
    let n = input.n();
    let mut cell_start: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (v, &color) in colors.iter().enumerate().take(n) {
        cell_start.entry(color).or_default().push(v);
    }
    if let Some((_, cell)) = cell_start.iter().find(|(_, members)| members.len() > 1) {
        for &v in cell {
            let mut child = colors.clone();
            child[v] = n as u32; // fresh colour, re-ranked by refinement
            canon_search(input, &mut child, best);
        }
        return;
    }
    let encoding = input.encode(colors);
    if best.as_ref().is_none_or(|b| encoding < *b) {
        *best = Some(encoding);
    }
}

fn canonical_form(input: &dyn CanonInput) -> CanonicalForm {
    let mut colors = vec![0u32; input.n()];
    let mut best = None;
    canon_search(input, &mut colors, &mut best);
    CanonicalForm(best.unwrap_or_default())
}

struct GraphInput {
    n: usize,
    // multiplicity-labelled adjacency, indices in 0..n
    adj: Vec<Vec<(usize, u32)>>,
}

impl GraphInput {
    fn from_graph(g: &Multigraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut mult: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (_, u, v) in g.edges() {
            let (a, b) = (pos[&u].min(pos[&v]), pos[&u].max(pos[&v]));
            *mult.entry((a, b)).or_insert(0) += 1;
        }
        let mut adj = vec![Vec::new(); ids.len()];
        for (&(a, b), &m) in &mult {
            adj[a].push((b, m));
            adj[b].push((a, m));
        }
        Self { n: ids.len(), adj }
    }
}

impl CanonInput for GraphInput {
    fn n(&self) -> usize {
        self.n
    }

    fn signature(&self, v: usize, colors: &[u32]) -> Vec<u32> {
        let mut sig: Vec<u32> = self.adj[v]
            .iter()
            .flat_map(|&(u, m)| [colors[u], m])
            .collect();
        // sort as (colour, multiplicity) pairs
        let mut pairs: Vec<(u32, u32)> = sig.chunks(2).map(|c| (c[0], c[1])).collect();
        pairs.sort_unstable();
        sig = pairs.into_iter().flat_map(|(c, m)| [c, m]).collect();
        sig
    }

    fn encode(&self, position: &[u32]) -> Vec<u32> {
        let mut triples: Vec<(u32, u32, u32)> = Vec::new();
        for v in 0..self.n {
            for &(u, m) in &self.adj[v] {
                if v < u {
                    let (a, b) = (position[v].min(position[u]), position[v].max(position[u]));
                    triples.push((a, b, m));
                }
            }
        }
        triples.sort_unstable();
        let mut out = vec![self.n as u32];
        out.extend(triples.into_iter().flat_map(|(a, b, m)| [a, b, m]));
        out
    }
}

/// Canonical form computed per connected component; the sorted component
/// encodings avoid the factorial blowup of individualizing across many
/// isomorphic components.
pub fn multigraph_canonical_form(g: &Multigraph) -> CanonicalForm {
    let comps = g.components();
    if comps.len() <= 1 {
        return canonical_form(&GraphInput::from_graph(g));
    }
    let mut encodings: Vec<Vec<u32>> = comps
        .iter()
        .map(|c| canonical_form(&GraphInput::from_graph(&g.induced(c))).0)
        .collect();
    encodings.sort();
    let mut out = vec![comps.len() as u32];
    for enc in encodings {
        out.push(enc.len() as u32);
        out.extend(enc);
    }
    CanonicalForm(out)
}

pub fn multigraphs_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.num_vertices() == b.num_vertices()
        && a.num_edges() == b.num_edges()
        && multigraph_canonical_form(a) == multigraph_canonical_form(b)
}

struct HypergraphInput {
    n: usize,
    // hyperedges as sorted index lists
    hedges: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>, // vertex -> hyperedge indices
}

impl HypergraphInput {
    fn from_hypergraph(h: &Hypergraph3) -> Self {
        let ids: Vec<VertexId> = h.vertices().collect();
        let pos: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut hedges: Vec<Vec<usize>> = h
            .hyperedges()
            .map(|(_, m)| {
                let mut e: Vec<usize> = m.iter().map(|v| pos[v]).collect();
                e.sort_unstable();
                e
            })
            .collect();
        hedges.sort();
        let mut incident = vec![Vec::new(); ids.len()];
        for (i, e) in hedges.iter().enumerate() {
            for &v in e {
                incident[v].push(i);
            }
        }
        Self {
            n: ids.len(),
            hedges,
            incident,
        }
    }
}

impl CanonInput for HypergraphInput {
    fn n(&self) -> usize {
        self.n
    }

    fn signature(&self, v: usize, colors: &[u32]) -> Vec<u32> {
        let mut sigs: Vec<Vec<u32>> = self.incident[v]
            .iter()
            .map(|&ei| {
                let e = &self.hedges[ei];
                let mut others: Vec<u32> = e
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| colors[u])
                    .collect();
                others.sort_unstable();
                let mut s = vec![e.len() as u32];
                s.extend(others);
                s
            })
            .collect();
        sigs.sort();
        sigs.into_iter().flatten().collect()
    }

    fn encode(&self, position: &[u32]) -> Vec<u32> {
        let mut relabeled: Vec<Vec<u32>> = self
            .hedges
            .iter()
            .map(|e| {
                let mut img: Vec<u32> = e.iter().map(|&v| position[v]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        relabeled.sort();
        let mut out = vec![self.n as u32];
        for e in relabeled {
            out.push(e.len() as u32);
            out.extend(e);
        }
        out
    }
}

pub fn hypergraph_canonical_form(h: &Hypergraph3) -> CanonicalForm {
    canonical_form(&HypergraphInput::from_hypergraph(h))
}

pub fn hypergraphs_isomorphic(a: &Hypergraph3, b: &Hypergraph3) -> bool {
    a.num_vertices() == b.num_vertices()
        && a.num_hyperedges() == b.num_hyperedges()
        && hypergraph_canonical_form(a) == hypergraph_canonical_form(b)
}

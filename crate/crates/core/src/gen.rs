//! Instance generators: the two counterexample families, named small graphs
//! and multipliers, exhaustive isomorphism-free enumeration of multigraphs
//! and 3-hypergraphs, and the search for graphs whose line graphs meet the
//! headline connectivity profile.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::canon::{hypergraph_canonical_form, multigraph_canonical_form, CanonicalForm};
use crate::connectivity::{r_essential_edge_connectivity, Connectivity};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph3;
use crate::id::{EdgeId, VertexId};
use crate::multigraph::Multigraph;

/// Four hub vertices, every hub pair joined by `q` internally disjoint paths
/// of length 3. The line graph is 2-connected but never 3-connected, and its
/// essential connectivity grows as 3q.
pub fn gen_fig1b(q: u32) -> Result<Multigraph> {
    if q == 0 || q.is_multiple_of(2) {
        return Err(Error::PreconditionFailed(format!(
            "the path count must be odd and positive, got {q}"
        )));
    }
    let mut g = Multigraph::new();
    let hubs: Vec<VertexId> = (0..4).map(|i| g.add_vertex(VertexId(i))).collect();
    for i in 0..4 {
        for j in i + 1..4 {
            for _ in 0..q {
                let x = g.fresh_vertex();
                let y = g.fresh_vertex();
                g.add_edge(hubs[i], x)?;
                g.add_edge(x, y)?;
                g.add_edge(y, hubs[j])?;
            }
        }
    }
    Ok(g)
}

/// One new leaf per existing vertex.
pub fn gen_pendant(base: &Multigraph) -> Multigraph {
    let mut g = base.clone();
    for v in base.vertices().collect::<Vec<_>>() {
        let leaf = g.fresh_vertex();
        g.add_edge(v, leaf).expect("pendant edge");
    }
    g
}

/// One pendant leaf at a single vertex.
pub fn gen_pendant_at(g: &Multigraph, v: VertexId) -> Multigraph {
    let mut out = g.clone();
    let leaf = out.fresh_vertex();
    out.add_edge(v, leaf).expect("pendant");
    out
}

pub fn complete(n: u32) -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    Multigraph::from_edges(n, &pairs).expect("complete graph")
}

pub fn cycle(n: u32) -> Multigraph {
    let pairs: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Multigraph::from_edges(n, &pairs).expect("cycle")
}

pub fn complete_multipartite(sizes: &[u32]) -> Multigraph {
    let mut offsets = Vec::new();
    let mut total = 0;
    for &s in sizes {
        offsets.push(total);
        total += s;
    }
    let part_of = |v: u32| -> usize {
        offsets
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &o)| v >= o)
            .map(|(i, _)| i)
            .unwrap()
    };
    let mut pairs = Vec::new();
    for u in 0..total {
        for v in u + 1..total {
            if part_of(u) != part_of(v) {
                pairs.push((u, v));
            }
        }
    }
    Multigraph::from_edges(total, &pairs).expect("multipartite")
}

/// Triangular prism: two triangles joined by a perfect matching.
pub fn prism() -> Multigraph {
    Multigraph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .expect("prism")
}

/// Octahedron: the complete tripartite graph on three pairs.
pub fn octahedron() -> Multigraph {
    complete_multipartite(&[2, 2, 2])
}

/// Every edge replaced by `t` parallel copies.
pub fn multiply_edges(g: &Multigraph, t: u32) -> Multigraph {
    let mut out = Multigraph::new();
    for v in g.vertices() {
        out.add_vertex(v);
    }
    for (_, u, v) in g.edges() {
        for _ in 0..t {
            out.add_edge(u, v).expect("copy");
        }
    }
    out
}

/// Replaces one edge by a two-edge path through a fresh vertex.
pub fn subdivide_edge(g: &Multigraph, e: EdgeId) -> Result<Multigraph> {
    let (u, v) = g.try_endpoints(e)?;
    let mut out = Multigraph::new();
    for w in g.vertices() {
        out.add_vertex(w);
    }
    let mid = out.fresh_vertex();
    for (id, a, b) in g.edges() {
        if id != e {
            out.add_edge_with_id(id, a, b)?;
        }
    }
    out.add_edge(u, mid)?;
    out.add_edge(mid, v)?;
    Ok(out)
}

/// Adds a new vertex joined by single edges to the given vertices.
pub fn attach_vertex(g: &Multigraph, to: &[u32]) -> Multigraph {
    let mut out = g.clone();
    let w = out.fresh_vertex();
    for &t in to {
        out.add_edge(VertexId(t), w).expect("attachment");
    }
    out
}

#[derive(Debug, Clone, Copy)]
pub struct EnumOptions {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Cap on parallel copies per vertex pair; 0 means unbounded.
    pub max_multiplicity: usize,
    pub connected_only: bool,
}

/// All multigraphs without isolated vertices up to isomorphism, grown one
/// edge at a time with canonical-form deduplication. Deterministic order,
/// grouped by edge count.
pub fn enumerate_multigraphs(opts: EnumOptions) -> Vec<Multigraph> {
    let mut out: Vec<Multigraph> = Vec::new();
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let seed = Multigraph::from_edges(2, &[(0, 1)]).expect("single edge");
    let mut level = vec![seed.clone()];
    seen.insert(multigraph_canonical_form(&seed));
    out.push(seed);
    for _ in 1..opts.max_edges {
        let mut next = Vec::new();
        for g in &level {
            for candidate in augmentations(g, &opts) {
                let form = multigraph_canonical_form(&candidate);
                if seen.insert(form) {
                    out.push(candidate.clone());
                    next.push(candidate);
                }
            }
        }
        level = next;
    }
    if opts.connected_only {
        out.retain(|g| g.is_connected());
    }
    out
}

fn augmentations(g: &Multigraph, opts: &EnumOptions) -> Vec<Multigraph> {
    let mut out = Vec::new();
    let vs: Vec<VertexId> = g.vertices().collect();
    // a new edge between existing vertices
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            let mult = g.edges_between(vs[i], vs[j]).len();
            if opts.max_multiplicity > 0 && mult >= opts.max_multiplicity {
                continue;
            }
            let mut h = g.clone();
            h.add_edge(vs[i], vs[j]).expect("new parallel");
            out.push(h);
        }
    }
    // a pendant edge to one new vertex
    if vs.len() < opts.max_vertices {
        for &v in &vs {
            let mut h = g.clone();
            let w = h.fresh_vertex();
            h.add_edge(v, w).expect("pendant");
            out.push(h);
        }
    }
    // a fresh disjoint edge
    if vs.len() + 2 <= opts.max_vertices {
        let mut h = g.clone();
        let a = h.fresh_vertex();
        let b = h.fresh_vertex();
        h.add_edge(a, b).expect("disjoint edge");
        out.push(h);
    }
    out
}

/// All 3-hypergraphs on exactly `n` labelled vertices with up to `max_edges`
/// hyperedges (with repetition), up to isomorphism. Isolated vertices are
/// allowed; the ground set is always all `n` vertices.
pub fn enumerate_hypergraphs(n: usize, max_edges: usize) -> Vec<Hypergraph3> {
    let vs: Vec<VertexId> = (0..n as u32).map(VertexId).collect();
    let mut shapes: Vec<Vec<VertexId>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            shapes.push(vec![vs[i], vs[j]]);
            for k in j + 1..n {
                shapes.push(vec![vs[i], vs[j], vs[k]]);
            }
        }
    }
    shapes.sort();

    fn rec(
        shapes: &[Vec<VertexId>],
        vs: &[VertexId],
        start: usize,
        left: usize,
        picked: &mut Vec<usize>,
        seen: &mut BTreeSet<CanonicalForm>,
        out: &mut Vec<Hypergraph3>,
    ) {
        let mut h = Hypergraph3::new();
        for &v in vs {
            h.add_vertex(v);
        }
        for &i in picked.iter() {
            h.add_hyperedge(&shapes[i]).expect("shape");
        }
        if seen.insert(hypergraph_canonical_form(&h)) {
            out.push(h);
        }
        if left == 0 {
            return;
        }
        for i in start..shapes.len() {
            picked.push(i);
            rec(shapes, vs, i, left - 1, picked, seen, out);
            picked.pop();
        }
    }

    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    let mut picked = Vec::new();
    rec(&shapes, &vs, 0, max_edges, &mut picked, &mut seen, &mut out);
    out
}

/// Deterministic pseudo-random 3-hypergraph for sampling suites.
pub fn random_hypergraph(n: u32, edges: usize, seed: u64) -> Hypergraph3 {
    let mut state = seed ^ 0xd1b54a32d192ed03;
    let mut next = move || {
        state = state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    let mut h = Hypergraph3::new();
    for i in 0..n {
        h.add_vertex(VertexId(i));
    }
    let mut added = 0;
    while added < edges {
        let size = if next() % 2 == 0 { 2 } else { 3 };
        let mut members = BTreeSet::new();
        while members.len() < size {
            members.insert(VertexId((next() % n as u64) as u32));
        }
        let members: Vec<VertexId> = members.into_iter().collect();
        if h.add_hyperedge(&members).is_ok() {
            added += 1;
        }
    }
    h
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QualifyingProfile {
    pub edges: usize,
    pub vertices: usize,
    /// essential edge-connectivity value (r = 1)
    pub essential_value: Connectivity,
    /// 2-essential value (r = 2)
    pub two_essential_value: Connectivity,
    pub line_graph_vertices: usize,
}

/// Whether the line graph of `g` is 3-connected and essentially 9-connected,
/// decided on the edge side: essentially 3-edge-connected with more than 3
/// edges, and 2-essentially 9-edge-connected with more than 9 edges.
pub fn qualifies(g: &Multigraph) -> Result<Option<QualifyingProfile>> {
    if !g.is_connected() || g.num_edges() <= 9 {
        return Ok(None);
    }
    let essential_value = r_essential_edge_connectivity(g, 1)?;
    if !essential_value.at_least(3) {
        return Ok(None);
    }
    let two_essential_value = r_essential_edge_connectivity(g, 2)?;
    if !two_essential_value.at_least(9) {
        return Ok(None);
    }
    Ok(Some(QualifyingProfile {
        edges: g.num_edges(),
        vertices: g.num_vertices(),
        essential_value,
        two_essential_value,
        line_graph_vertices: g.num_edges(),
    }))
}

/// Curated families searched for qualifying instances: multiplied complete
/// and complete multipartite graphs, multiplied cubic graphs, and decorated
/// variants (an attached degree-3 vertex, a pendant leaf, one subdivision).
/// Deterministic order; every hit is named.
pub fn find_qualifying_instances(
    max_edges: usize,
) -> Result<Vec<(String, Multigraph, QualifyingProfile)>> {
    let mut candidates: Vec<(String, Multigraph)> = Vec::new();
    for n in 3..=6u32 {
        for t in 1..=3u32 {
            candidates.push((format!("K{n}x{t}"), multiply_edges(&complete(n), t)));
        }
    }
    for t in 1..=3u32 {
        candidates.push((
            format!("K33x{t}"),
            multiply_edges(&complete_multipartite(&[3, 3]), t),
        ));
        candidates.push((format!("prismx{t}"), multiply_edges(&prism(), t)));
        candidates.push((format!("octahedronx{t}"), multiply_edges(&octahedron(), t)));
        candidates.push((
            format!("C5x{}", 2 * t + 1),
            multiply_edges(&cycle(5), 2 * t + 1),
        ));
    }
    // decorations over the doubled K5: an absorbed degree-3 vertex, its
    // protected variant, a pendant leaf and a subdivision
    let k5x2 = multiply_edges(&complete(5), 2);
    candidates.push(("K5x2+w".into(), attach_vertex(&k5x2, &[0, 1, 2])));
    candidates.push((
        "K5x2+w+leaf_at_w".into(),
        gen_pendant_at(&attach_vertex(&k5x2, &[0, 1, 2]), VertexId(5)),
    ));
    candidates.push(("K5x2+leaf".into(), gen_pendant_at(&k5x2, VertexId(0))));
    candidates.push(("K5x2+subdiv".into(), subdivide_edge(&k5x2, EdgeId(0))?));
    let k4x3 = multiply_edges(&complete(4), 3);
    candidates.push(("K4x3+w".into(), attach_vertex(&k4x3, &[0, 1, 2])));

    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (name, g) in candidates {
        if g.num_edges() > max_edges {
            continue;
        }
        if let Some(profile) = qualifies(&g)? {
            if seen.insert(multigraph_canonical_form(&g)) {
                out.push((name, g, profile));
            }
        }
    }
    Ok(out)
}

/// FNV-1a over the canonical edge encoding; stable across platforms, used to
/// key reports.
pub fn instance_hash(g: &Multigraph) -> u64 {
    fnv(&multigraph_canonical_form(g).0)
}

/// Stable content hash for hypergraphs.
pub fn hypergraph_hash(h: &Hypergraph3) -> u64 {
    fnv(&hypergraph_canonical_form(h).0)
}

fn fnv(words: &[u32]) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for x in words {
        for b in x.to_le_bytes() {
            hash ^= b as u64;
            hash = hash.wrapping_mul(0x100000001b3);
        }
    }
    hash
}

//! Input and output formats: graph6 and sparse6 for simple and sparse
//! graphs, a plain edge-list text format (`u v` per line, repeated lines for
//! parallel edges), and the hyperedge-per-line text format for 3-hypergraphs.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph3;
use crate::id::VertexId;
use crate::multigraph::Multigraph;

fn parse_graph_size(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph data".into()));
    }
    let b = bytes[0];
    if (63..=125).contains(&b) && b != 126 {
        return Ok(((b - 63) as usize, 1));
    }
    if b == 126 {
        if bytes.len() >= 4 && bytes[1] != 126 {
            let mut n = 0usize;
            for &c in &bytes[1..4] {
                if !(63..=126).contains(&c) {
                    return Err(Error::Parse("bad size byte".into()));
                }
                n = (n << 6) | (c - 63) as usize;
            }
            return Ok((n, 4));
        }
        if bytes.len() >= 8 && bytes[1] == 126 {
            let mut n = 0usize;
            for &c in &bytes[2..8] {
                n = (n << 6) | (c - 63) as usize;
            }
            return Ok((n, 8));
        }
    }
    Err(Error::Parse("bad graph6 size header".into()))
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl BitReader<'_> {
    fn take(&mut self, k: usize) -> Result<u64> {
        let mut out = 0u64;
        for _ in 0..k {
            let byte_idx = self.pos / 6;
            if byte_idx >= self.bytes.len() {
                return Err(Error::Parse("unexpected end of bit data".into()));
            }
            let b = self.bytes[byte_idx];
            if !(63..=126).contains(&b) {
                return Err(Error::Parse(format!("bad data byte {b}")));
            }
            let bit = (b - 63) >> (5 - self.pos % 6) & 1;
            out = (out << 1) | bit as u64;
            self.pos += 1;
        }
        Ok(out)
    }

    fn exhausted(&self) -> bool {
        self.pos / 6 >= self.bytes.len()
    }
}

/// Parses the graph6 format for simple graphs. The optional `>>graph6<<`
/// header is accepted.
pub fn parse_graph6(input: &str) -> Result<Multigraph> {
    let line = input.trim().trim_start_matches(">>graph6<<");
    let bytes = line.as_bytes();
    let (n, consumed) = parse_graph_size(bytes)?;
    let mut g = Multigraph::new();
    for i in 0..n {
        g.add_vertex(VertexId(i as u32));
    }
    let mut bits = BitReader {
        bytes: &bytes[consumed..],
        pos: 0,
    };
    // upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in 1..n {
        for i in 0..j {
            if bits.take(1)? == 1 {
                g.add_edge(VertexId(i as u32), VertexId(j as u32))?;
            }
        }
    }
    Ok(g)
}

/// Parses the sparse6 format (leading `:`), which supports parallel edges.
/// Loops are rejected because all graphs here are loopless.
pub fn parse_sparse6(input: &str) -> Result<Multigraph> {
    let line = input.trim().trim_start_matches(">>sparse6<<");
    let Some(rest) = line.strip_prefix(':') else {
        return Err(Error::Parse("sparse6 data must start with ':'".into()));
    };
    let bytes = rest.as_bytes();
    let (n, consumed) = parse_graph_size(bytes)?;
    let mut g = Multigraph::new();
    for i in 0..n {
        g.add_vertex(VertexId(i as u32));
    }
    if n <= 1 {
        return Ok(g);
    }
    let k = (usize::BITS - (n - 1).leading_zeros()) as usize;
    let mut bits = BitReader {
        bytes: &bytes[consumed..],
        pos: 0,
    };
    let mut v = 0usize;
    loop {
        if bits.exhausted() {
            break;
        }
        let b = match bits.take(1) {
            Ok(b) => b,
            Err(_) => break,
        };
        let x = match bits.take(k) {
            Ok(x) => x as usize,
            Err(_) => break,
        };
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break; // padding
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(Error::Parse("sparse6 loop rejected".into()));
        } else {
            g.add_edge(VertexId(x as u32), VertexId(v as u32))?;
        }
    }
    Ok(g)
}

/// Parses either graph6 or sparse6, keyed on the leading `:`.
pub fn parse_graph6_or_sparse6(input: &str) -> Result<Multigraph> {
    let trimmed = input
        .trim()
        .trim_start_matches(">>graph6<<")
        .trim_start_matches(">>sparse6<<");
    if trimmed.starts_with(':') {
        parse_sparse6(trimmed)
    } else {
        parse_graph6(trimmed)
    }
}

/// Edge list: one `u v` pair per line, parallel edges by repetition. Blank
/// lines and `#` comments are skipped. An optional first line `vertices k`
/// declares isolated vertices up to id k-1.
pub fn parse_edge_list(input: &str) -> Result<Multigraph> {
    let mut g = Multigraph::new();
    for line in input.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(count) = line.strip_prefix("vertices ") {
            let k: u32 = count
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex count: {line}")))?;
            for i in 0..k {
                g.add_vertex(VertexId(i));
            }
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::Parse(format!("expected 'u v', got: {line}")));
        };
        let u: u32 = a
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex id: {a}")))?;
        let v: u32 = b
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex id: {b}")))?;
        g.add_edge(VertexId(u), VertexId(v))?;
    }
    Ok(g)
}

pub fn write_edge_list(g: &Multigraph) -> String {
    let mut out = String::new();
    let covered: std::collections::BTreeSet<VertexId> = g
        .edges()
        .flat_map(|(_, u, v)| [u, v])
        .collect();
    if covered.len() != g.num_vertices() {
        out.push_str(&format!(
            "vertices {}\n",
            g.vertex_set().iter().next_back().map_or(0, |v| v.0 + 1)
        ));
    }
    for (_, u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u.0, v.0));
    }
    out
}

/// Hypergraph text format: one hyperedge per line, 2 or 3 ids. Blank lines
/// and `#` comments are skipped; `vertices k` declares the ground set.
pub fn parse_hypergraph(input: &str) -> Result<Hypergraph3> {
    let mut h = Hypergraph3::new();
    for line in input.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(count) = line.strip_prefix("vertices ") {
            let k: u32 = count
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex count: {line}")))?;
            for i in 0..k {
                h.add_vertex(VertexId(i));
            }
            continue;
        }
        let members: Vec<VertexId> = line
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map(VertexId)
                    .map_err(|_| Error::Parse(format!("bad vertex id: {t}")))
            })
            .collect::<Result<_>>()?;
        h.add_hyperedge(&members)?;
    }
    Ok(h)
}

pub fn write_hypergraph(h: &Hypergraph3) -> String {
    let mut out = String::new();
    let covered: std::collections::BTreeSet<VertexId> =
        h.hyperedges().flat_map(|(_, m)| m.to_vec()).collect();
    if covered.len() != h.num_vertices() {
        out.push_str(&format!(
            "vertices {}\n",
            h.vertex_set().iter().next_back().map_or(0, |v| v.0 + 1)
        ));
    }
    for (_, members) in h.hyperedges() {
        let ids: Vec<String> = members.iter().map(|v| v.0.to_string()).collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{hypergraphs_isomorphic, multigraphs_isomorphic};

    #[test]
    fn graph6_known_vectors() {
        // triangle
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.num_vertices(), 3);
        assert_eq!(k3.num_edges(), 3);
        // complete graphs
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4.num_edges(), 6);
        let k5 = parse_graph6("D~{").unwrap();
        assert_eq!(k5.num_vertices(), 5);
        assert_eq!(k5.num_edges(), 10);
    }

    #[test]
    fn sparse6_known_vector() {
        // 7 vertices, edges 01 02 12 56
        let g = parse_sparse6(":Fa@x^").unwrap();
        assert_eq!(g.num_vertices(), 7);
        assert_eq!(g.num_edges(), 4);
        assert!(g.adjacent(VertexId(0), VertexId(1)));
        assert!(g.adjacent(VertexId(0), VertexId(2)));
        assert!(g.adjacent(VertexId(1), VertexId(2)));
        assert!(g.adjacent(VertexId(5), VertexId(6)));
    }

    #[test]
    fn format_dispatch() {
        assert_eq!(parse_graph6_or_sparse6(":Fa@x^").unwrap().num_edges(), 4);
        assert_eq!(parse_graph6_or_sparse6("Bw").unwrap().num_edges(), 3);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Multigraph::from_edges(4, &[(0, 1), (0, 1), (1, 2), (2, 3)]).unwrap();
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert!(multigraphs_isomorphic(&g, &back));
        assert_eq!(back.edges_between(VertexId(0), VertexId(1)).len(), 2);
    }

    #[test]
    fn edge_list_keeps_isolated_vertices() {
        let mut g = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        g.add_vertex(VertexId(5));
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.num_vertices(), 6);
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(parse_edge_list("0 1 2").is_err());
        assert!(parse_edge_list("a b").is_err());
        assert!(parse_edge_list("0 0").is_err()); // loop
    }

    #[test]
    fn hypergraph_round_trip() {
        let mut h = Hypergraph3::new();
        h.add_hyperedge(&[VertexId(0), VertexId(1), VertexId(2)]).unwrap();
        h.add_hyperedge(&[VertexId(0), VertexId(3)]).unwrap();
        h.add_hyperedge(&[VertexId(0), VertexId(3)]).unwrap();
        let text = write_hypergraph(&h);
        let back = parse_hypergraph(&text).unwrap();
        assert!(hypergraphs_isomorphic(&h, &back));
    }
}

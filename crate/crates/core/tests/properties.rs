//! Property suites over randomly generated instances.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use quasitrail_core::canon::{hypergraphs_isomorphic, multigraph_canonical_form};
use quasitrail_core::certify::{discharge, QuotientAssociation};
use quasitrail_core::connectivity::r_essential_edge_connectivity;
use quasitrail_core::hypergraph::{quotient, switch, switchable_vertices, Hypergraph3, Partition};
use quasitrail_core::id::{EdgeId, HyperedgeId, VertexId};
use quasitrail_core::io::{parse_edge_list, parse_hypergraph, write_edge_list, write_hypergraph};
use quasitrail_core::multigraph::{boundary, is_claw_free, line_graph, local_completion, Multigraph};
use quasitrail_core::quasigraph::{rooted_orientation, Quasigraph};
use quasitrail_core::skeletal::for_each_acyclic_sigma_desc;
use quasitrail_core::trails::{find_trail, TrailConstraints};

fn arb_multigraph(max_n: u32, max_m: usize) -> impl Strategy<Value = Multigraph> {
    (2..=max_n)
        .prop_flat_map(move |n| {
            (
                Just(n),
                proptest::collection::vec((0..n, 0..n), 1..=max_m),
            )
        })
        .prop_map(|(n, raw)| {
            let mut g = Multigraph::new();
            for i in 0..n {
                g.add_vertex(VertexId(i));
            }
            for (u, v) in raw {
                if u != v {
                    let _ = g.add_edge(VertexId(u), VertexId(v));
                }
            }
            g
        })
        .prop_filter("needs an edge", |g| g.num_edges() >= 1)
}

fn arb_hypergraph(max_n: u32, max_m: usize) -> impl Strategy<Value = Hypergraph3> {
    (3..=max_n)
        .prop_flat_map(move |n| {
            (
                Just(n),
                proptest::collection::vec((0..n, 0..n, 0..n, proptest::bool::ANY), 1..=max_m),
            )
        })
        .prop_map(|(n, raw)| {
            let mut h = Hypergraph3::new();
            for i in 0..n {
                h.add_vertex(VertexId(i));
            }
            for (a, b, c, triple) in raw {
                let mut m: BTreeSet<VertexId> =
                    [VertexId(a), VertexId(b)].into_iter().collect();
                if triple {
                    m.insert(VertexId(c));
                }
                let m: Vec<VertexId> = m.into_iter().collect();
                let _ = h.add_hyperedge(&m);
            }
            h
        })
        .prop_filter("needs a hyperedge", |h| h.num_hyperedges() >= 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_is_complement_symmetric(g in arb_multigraph(7, 12), mask in any::<u64>()) {
        let vs: Vec<VertexId> = g.vertices().collect();
        let x: BTreeSet<VertexId> = vs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let rest: BTreeSet<VertexId> = vs.iter().copied().filter(|v| !x.contains(v)).collect();
        prop_assert_eq!(
            boundary(&g, &x).unwrap().size(),
            boundary(&g, &rest).unwrap().size()
        );
    }

    #[test]
    fn line_graphs_are_claw_free(g in arb_multigraph(6, 10)) {
        prop_assert!(is_claw_free(&line_graph(&g).unwrap()));
    }

    #[test]
    fn r_essential_is_antitone_in_r(g in arb_multigraph(6, 10)) {
        let values: Vec<_> = (0..=2)
            .map(|r| r_essential_edge_connectivity(&g, r).unwrap())
            .collect();
        prop_assert!(values[0] <= values[1]);
        prop_assert!(values[1] <= values[2]);
    }

    #[test]
    fn polynomial_r_essential_matches_subset_oracle(g in arb_multigraph(6, 9), r in 0usize..=2) {
        let fast = r_essential_edge_connectivity(&g, r).unwrap();
        let slow =
            quasitrail_core::connectivity::r_essential_edge_connectivity_oracle(&g, r).unwrap();
        prop_assert_eq!(fast, slow);
    }

    #[test]
    fn local_completion_is_idempotent_and_grows_degrees(g in arb_multigraph(6, 8)) {
        // simple part of the graph only
        let simple = {
            let mut s = Multigraph::new();
            for v in g.vertices() { s.add_vertex(v); }
            for ((u, v), _) in g.edge_multiset() {
                s.add_edge(u, v).unwrap();
            }
            quasitrail_core::multigraph::SimpleGraph::from_multigraph(s).unwrap()
        };
        let x = simple.vertices().next().unwrap();
        let once = local_completion(&simple, x).unwrap();
        let twice = local_completion(&once, x).unwrap();
        prop_assert_eq!(&once, &twice);
        for v in simple.vertices() {
            prop_assert!(once.graph().degree(v) >= simple.graph().degree(v));
        }
    }

    #[test]
    fn switches_preserve_degrees_and_incidence(h in arb_hypergraph(6, 7)) {
        for u in switchable_vertices(&h) {
            let s = switch(&h, u).unwrap();
            for v in h.vertices() {
                prop_assert_eq!(h.degree(v), s.degree(v));
            }
            let a = quasitrail_core::hypergraph::incidence_graph(&h).graph;
            let b = quasitrail_core::hypergraph::incidence_graph(&s).graph;
            prop_assert!(quasitrail_core::canon::multigraphs_isomorphic(&a, &b));
            // a second switch at the same vertex is an isomorphism back
            let back = switch(&s, u).unwrap();
            prop_assert!(hypergraphs_isomorphic(&h, &back));
        }
    }

    #[test]
    fn quotients_compose(h in arb_hypergraph(6, 6), labels in proptest::collection::vec(0usize..3, 6), merge in any::<bool>()) {
        let vs: Vec<VertexId> = h.vertices().collect();
        let mut classes: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
        for (i, &v) in vs.iter().enumerate() {
            classes.entry(labels[i % labels.len()]).or_default().insert(v);
        }
        let p = Partition::new(h.vertex_set(), classes.into_values().collect()).unwrap();
        let q1 = quotient(&h, &p).unwrap();
        // merge the first two classes of the quotient (if it has two)
        if q1.num_vertices() >= 2 && merge {
            let qvs: Vec<VertexId> = q1.vertices().collect();
            let mut inner_classes = vec![BTreeSet::from([qvs[0], qvs[1]])];
            for &v in &qvs[2..] {
                inner_classes.push(BTreeSet::from([v]));
            }
            let inner = Partition::new(q1.vertex_set(), inner_classes).unwrap();
            let two_step = quotient(&q1, &inner).unwrap();
            // the composed partition merges the underlying classes
            let mut composed = vec![BTreeSet::new()];
            let mut rest = Vec::new();
            for (i, class) in p.classes().iter().enumerate() {
                if i <= 1 {
                    composed[0].extend(class.iter().copied());
                } else {
                    rest.push(class.clone());
                }
            }
            composed.extend(rest);
            let pc = Partition::new(h.vertex_set(), composed).unwrap();
            let direct = quotient(&h, &pc).unwrap();
            prop_assert!(hypergraphs_isomorphic(&two_step, &direct));
        }
    }

    #[test]
    fn found_trails_are_valid(g in arb_multigraph(6, 10), a in 0u32..6, b in 0u32..6) {
        let a = VertexId(a % g.num_vertices() as u32);
        let b = VertexId(b % g.num_vertices() as u32);
        if g.has_vertex(a) && g.has_vertex(b) {
            if let Some(t) = find_trail(&g, a, b, &TrailConstraints::default()).unwrap() {
                t.validate(&g).unwrap();
                prop_assert_eq!(t.first_vertex(), a);
                prop_assert_eq!(t.last_vertex(), b);
            }
        }
    }

    #[test]
    fn edge_list_round_trips(g in arb_multigraph(7, 12)) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(
            multigraph_canonical_form(&g),
            multigraph_canonical_form(&back)
        );
    }

    #[test]
    fn hypergraph_text_round_trips(h in arb_hypergraph(7, 8)) {
        let text = write_hypergraph(&h);
        let back = parse_hypergraph(&text).unwrap();
        prop_assert!(hypergraphs_isomorphic(&h, &back));
    }

    #[test]
    fn discharge_conserves_on_random_quotients(h in arb_hypergraph(6, 8), seed in any::<u64>()) {
        // take the densest acyclic selection as the quotient quasigraph
        let mut first: Option<BTreeMap<HyperedgeId, (VertexId, VertexId)>> = None;
        for_each_acyclic_sigma_desc(&h, &mut |a| {
            first = Some(a.clone());
            false
        });
        let tau0 = Quasigraph::new(h.clone(), first.unwrap()).unwrap();
        let star = tau0.pi_star();
        let comps = star.components();
        let roots: Vec<VertexId> = comps
            .iter()
            .map(|c| {
                let items: Vec<VertexId> = c.iter().copied().collect();
                items[(seed as usize) % items.len()]
            })
            .collect();
        let orientation = rooted_orientation(&tau0, &roots).unwrap();
        let s = Partition::singletons(h.vertex_set());
        let assoc = QuotientAssociation::from_orientation(&orientation, &s, &tau0).unwrap();
        let ledger = discharge(&h, &tau0, &assoc).unwrap();
        prop_assert!(ledger.conserved());
        for t in &ledger.transfers {
            prop_assert!(t.amount.0 == 15 || t.amount.0 == 3 || t.amount.0 == 5);
        }
    }

    #[test]
    fn pi_star_edge_count_is_used_count(h in arb_hypergraph(6, 7), picks in any::<u64>()) {
        let mut assignment = BTreeMap::new();
        for (i, (id, members)) in h.hyperedges().enumerate() {
            if picks >> (i % 64) & 1 == 1 {
                assignment.insert(id, (members[0], members[1]));
            }
        }
        let q = Quasigraph::new(h.clone(), assignment).unwrap();
        prop_assert_eq!(q.pi_star().num_edges(), q.used_count());
        let _ = EdgeId(0);
    }
}

mod common;

use koenig_core::{emit_graph6, parse_graph6, Graph, VertexSet};
use proptest::prelude::*;

/// Component count of `G \ S` by a plain depth-first traversal of the
/// relabelled graph returned by `delete_vertices`.
fn traversal_components(g: &Graph, s: VertexSet) -> usize {
    let (h, _) = g.delete_vertices(s).unwrap();
    let n = h.order();
    let mut seen = vec![false; n + 1];
    let mut count = 0;
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for u in (1..=n).filter(|&u| h.has_edge(u, v)) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    count
}

#[test]
fn corpus_sizes_match_known_counts() {
    let per_order: Vec<usize> = (1..=7)
        .map(|n| {
            common::all_graphs(n).len()
                - if n > 1 {
                    common::all_graphs(n - 1).len()
                } else {
                    0
                }
        })
        .collect();
    assert_eq!(per_order, [1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn component_count_agrees_with_traversal_on_all_small_graphs() {
    for (line, g) in common::all_graphs(7) {
        for bits in 0..1u64 << g.order() {
            let s = VertexSet::from_bits(bits);
            assert_eq!(
                g.component_count(s).unwrap(),
                traversal_components(&g, s),
                "{line} minus {s}"
            );
        }
    }
}

#[test]
fn graph6_round_trips_on_all_small_graphs() {
    for (line, g) in common::all_graphs(7) {
        assert_eq!(emit_graph6(&g), line);
        assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }
}

#[test]
fn deletion_maps_edges_faithfully() {
    for (_, g) in common::all_graphs(6) {
        for bits in 0..1u64 << g.order() {
            let (h, map) = g.delete_vertices(VertexSet::from_bits(bits)).unwrap();
            for u in 1..=h.order() {
                for v in 1..=h.order() {
                    let (ou, ov) = (map.original(u).unwrap(), map.original(v).unwrap());
                    assert_eq!(h.has_edge(u, v), g.has_edge(ou, ov));
                }
            }
        }
    }
}

fn arb_graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (0..=max_order).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 2..=n {
                for u in 1..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn graph6_round_trip(g in arb_graph(10)) {
        prop_assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in arb_graph(12)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let (same, _) = g.delete_vertices(VertexSet::empty()).unwrap();
        prop_assert_eq!(same, g);
    }
}

#![allow(dead_code)]

use koenig_core::{parse_graph6, Graph};

const ALL: [&str; 7] = [
    include_str!("../../../../corpus/all-1.g6"),
    include_str!("../../../../corpus/all-2.g6"),
    include_str!("../../../../corpus/all-3.g6"),
    include_str!("../../../../corpus/all-4.g6"),
    include_str!("../../../../corpus/all-5.g6"),
    include_str!("../../../../corpus/all-6.g6"),
    include_str!("../../../../corpus/all-7.g6"),
];

/// Every graph on `1..=max_order` vertices up to isomorphism, as graph6 lines.
pub fn all_graphs(max_order: usize) -> Vec<(&'static str, Graph)> {
    ALL[..max_order]
        .iter()
        .flat_map(|text| text.lines())
        .map(|line| (line, parse_graph6(line).expect("corpus line parses")))
        .collect()
}

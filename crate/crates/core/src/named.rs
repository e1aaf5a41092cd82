//! Small named graphs used throughout the tests and the CLI examples.
//!
//! All constructors panic if the requested order exceeds [`MAX_ORDER`].

use crate::graph::{Graph, MAX_ORDER};

fn build(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    assert!(order <= MAX_ORDER, "order {order} exceeds {MAX_ORDER}");
    Graph::from_edges(order, edges).expect("named graph edges are in range")
}

/// `P_m` with edges `{i, i + 1}`.
pub fn path(m: usize) -> Graph {
    build(m, (1..m).map(|i| (i, i + 1)))
}

/// `C_m` with edges `{i, i + 1}` and `{1, m}`. Panics for `m < 3`.
pub fn cycle(m: usize) -> Graph {
    assert!(m >= 3, "a cycle needs at least three vertices");
    build(
        m,
        (1..m).map(|i| (i, i + 1)).chain(core::iter::once((1, m))),
    )
}

/// `K_m`.
pub fn complete(m: usize) -> Graph {
    build(m, (1..=m).flat_map(|u| (u + 1..=m).map(move |v| (u, v))))
}

/// `K_{1,leaves}` with centre 1.
pub fn star(leaves: usize) -> Graph {
    build(leaves + 1, (2..=leaves + 1).map(|v| (1, v)))
}

/// The net: triangle `1, 2, 3` with pendant vertices `4 - 1`, `5 - 2`, `6 - 3`.
pub fn net() -> Graph {
    build(6, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 5), (3, 6)])
}

//! Edge-subset search for the largest linear forest.
//!
//! This is the cross-check for [`super::max_linear_forest`]: it never looks
//! at path covers, only at edge sets that are acyclic with maximum degree
//! two. Branches that already break either condition are cut.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::InvariantError;
use crate::graph::Graph;

pub const MAX_FOREST_EDGES: usize = 24;

/// `LF(G)` by exhaustive search over edge subsets.
pub fn brute_force_linear_forest(g: &Graph) -> Result<usize, InvariantError> {
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (u - 1, v - 1)).collect();
    if edges.len() > MAX_FOREST_EDGES {
        return Err(InvariantError::EdgeBudget {
            edges: edges.len(),
            limit: MAX_FOREST_EDGES,
        });
    }
    let mut search = Search {
        edges: &edges,
        degree: vec![0; g.order()],
        chosen: vec![0; g.order()],
        best: 0,
    };
    search.run(0, 0);
    Ok(search.best)
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    degree: Vec<u8>,
    chosen: Vec<u64>,
    best: usize,
}

impl Search<'_> {
    fn run(&mut self, next: usize, taken: usize) {
        if taken > self.best {
            self.best = taken;
        }
        if next == self.edges.len() || taken + (self.edges.len() - next) <= self.best {
            return;
        }
        let (u, v) = self.edges[next];
        if self.degree[u] < 2 && self.degree[v] < 2 && !self.connected(u, v) {
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.chosen[u] |= 1 << v;
            self.chosen[v] |= 1 << u;
            self.run(next + 1, taken + 1);
            self.degree[u] -= 1;
            self.degree[v] -= 1;
            self.chosen[u] &= !(1 << v);
            self.chosen[v] &= !(1 << u);
        }
        self.run(next + 1, taken);
    }

    fn connected(&self, u: usize, v: usize) -> bool {
        let mut seen = 1u64 << u;
        let mut frontier = seen;
        while frontier != 0 {
            let i = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.chosen[i] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen & (1 << v) != 0
    }
}

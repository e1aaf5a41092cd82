//! Asteroidal triples and weakly closed orderings.
//!
//! Three pairwise non-adjacent vertices form an asteroidal triple when each
//! pair is joined by a path avoiding the closed neighbourhood of the third.
//! A graph is weakly closed when some ordering `σ` of its vertices satisfies:
//! for all positions `i < j < k`, if `σ(i)σ(k)` is an edge then so is
//! `σ(i)σ(j)` or `σ(j)σ(k)`. Weakly closed graphs are exactly the
//! cocomparability graphs, which [`is_cocomparability_oracle`] decides
//! independently by searching for a transitive orientation of the complement.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::RecognitionError;
use crate::graph::Graph;

/// Default node budget for [`find_weakly_closed_ordering`].
pub const DEFAULT_ORDERING_BUDGET: u64 = 50_000_000;

/// Default node budget for [`is_cocomparability_oracle`].
pub const DEFAULT_ORIENTATION_BUDGET: u64 = 10_000_000;

/// A path between two vertices that avoids `N[avoided]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidingPath {
    pub avoided: usize,
    pub path: Vec<usize>,
}

/// Three independent vertices `a < b < c` with, for each of them, a path
/// joining the other two outside its closed neighbourhood.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsteroidalTriple {
    pub vertices: [usize; 3],
    /// `certificates[t]` avoids `N[vertices[t]]` and joins the other two.
    pub certificates: [AvoidingPath; 3],
}

impl AsteroidalTriple {
    /// Re-checks independence and every certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let [a, b, c] = self.vertices;
        if [a, b, c].iter().any(|&v| v == 0 || v > g.order())
            || a == b
            || b == c
            || a == c
            || g.has_edge(a, b)
            || g.has_edge(b, c)
            || g.has_edge(a, c)
        {
            return false;
        }
        (0..3).all(|t| {
            let cert = &self.certificates[t];
            let (x, y) = match t {
                0 => (b, c),
                1 => (a, c),
                _ => (a, b),
            };
            let Ok(forbidden) = g.closed_neighborhood(self.vertices[t]) else {
                return false;
            };
            cert.avoided == self.vertices[t]
                && cert.path.first() == Some(&x)
                && cert.path.last() == Some(&y)
                && cert
                    .path
                    .iter()
                    .all(|&v| v >= 1 && v <= g.order() && !forbidden.contains(v))
                && cert.path.windows(2).all(|w| g.has_edge(w[0], w[1]))
        })
    }
}

/// Returns the lexicographically smallest asteroidal triple, if any.
///
/// For each vertex `w` the components of `G - N[w]` are labelled once; a
/// triple is asteroidal iff each pair shares a component after removing the
/// closed neighbourhood of the third.
pub fn find_asteroidal_triple(g: &Graph) -> Option<AsteroidalTriple> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let full = g.full_mask();
    const OUTSIDE: u8 = u8::MAX;
    // label[w][v]: component of v in G - N[w]
    let label: Vec<Vec<u8>> = (0..n)
        .map(|w| {
            let alive = full & !(g.row(w) | 1 << w);
            let mut row = vec![OUTSIDE; n];
            for (k, comp) in g.component_masks_within(alive).into_iter().enumerate() {
                let mut bits = comp;
                while bits != 0 {
                    row[bits.trailing_zeros() as usize] = k as u8;
                    bits &= bits - 1;
                }
            }
            row
        })
        .collect();
    let together =
        |w: usize, x: usize, y: usize| label[w][x] != OUTSIDE && label[w][x] == label[w][y];

    for a in 0..n {
        let non_a = full & !(g.row(a) | 1 << a);
        for b in (a + 1)..n {
            if non_a & (1 << b) == 0 {
                continue;
            }
            for c in (b + 1)..n {
                if non_a & (1 << c) == 0 || g.row(b) & (1 << c) != 0 {
                    continue;
                }
                if together(a, b, c) && together(b, a, c) && together(c, a, b) {
                    let cert = |w: usize, x: usize, y: usize| {
                        let alive = full & !(g.row(w) | 1 << w);
                        AvoidingPath {
                            avoided: w + 1,
                            path: shortest_path_within(g, x, y, alive)
                                .expect("vertices share a component"),
                        }
                    };
                    return Some(AsteroidalTriple {
                        vertices: [a + 1, b + 1, c + 1],
                        certificates: [cert(a, b, c), cert(b, a, c), cert(c, a, b)],
                    });
                }
            }
        }
    }
    None
}

pub fn is_at_free(g: &Graph) -> bool {
    find_asteroidal_triple(g).is_none()
}

/// BFS path between 0-based `from` and `to` using only `alive` vertices,
/// expanding neighbours in ascending order. Returns 1-indexed labels.
fn shortest_path_within(g: &Graph, from: usize, to: usize, alive: u64) -> Option<Vec<usize>> {
    let n = g.order();
    let mut parent = vec![usize::MAX; n];
    let mut queue = vec![from];
    let mut seen = 1u64 << from;
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        if v == to {
            let mut path = vec![to + 1];
            let mut cur = to;
            while cur != from {
                cur = parent[cur];
                path.push(cur + 1);
            }
            path.reverse();
            return Some(path);
        }
        let mut next = g.row(v) & alive & !seen;
        seen |= next;
        while next != 0 {
            let u = next.trailing_zeros() as usize;
            next &= next - 1;
            parent[u] = v;
            queue.push(u);
        }
    }
    None
}

/// A vertex ordering witnessing that a graph is weakly closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeaklyClosedOrdering {
    /// `ordering[p]` is the vertex placed at position `p + 1`.
    pub ordering: Vec<usize>,
}

impl WeaklyClosedOrdering {
    /// Checks the defining condition over every triple of positions.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        let mut sorted = self.ordering.clone();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return false;
        }
        let s = &self.ordering;
        for i in 0..n {
            for k in (i + 2)..n {
                if !g.has_edge(s[i], s[k]) {
                    continue;
                }
                if (i + 1..k).any(|j| !g.has_edge(s[i], s[j]) && !g.has_edge(s[j], s[k])) {
                    return false;
                }
            }
        }
        true
    }

    /// The relabelling the ordering induces: `labels[v - 1]` is the new
    /// label of vertex `v`.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.ordering.len()];
        for (p, &v) in self.ordering.iter().enumerate() {
            labels[v - 1] = p + 1;
        }
        labels
    }
}

/// Searches for a weakly closed ordering with the default node budget.
pub fn find_weakly_closed_ordering(
    g: &Graph,
) -> Result<Option<WeaklyClosedOrdering>, RecognitionError> {
    find_weakly_closed_ordering_with_budget(g, DEFAULT_ORDERING_BUDGET)
}

/// Backtracking search that grows the ordering left to right, trying
/// vertices in ascending label order.
///
/// A candidate `v` for the next position is rejected if it would be the
/// right end of an uncovered edge, or if it would sit strictly between a
/// placed vertex `u` and an unplaced neighbour `x` of `u` while adjacent to
/// neither.
pub fn find_weakly_closed_ordering_with_budget(
    g: &Graph,
    node_limit: u64,
) -> Result<Option<WeaklyClosedOrdering>, RecognitionError> {
    let mut search = OrderingSearch {
        g,
        placed: Vec::with_capacity(g.order()),
        nodes: 0,
        limit: node_limit,
    };
    if search.extend(g.full_mask())? {
        Ok(Some(WeaklyClosedOrdering {
            ordering: search.placed.iter().map(|&v| v + 1).collect(),
        }))
    } else {
        Ok(None)
    }
}

struct OrderingSearch<'a> {
    g: &'a Graph,
    placed: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl OrderingSearch<'_> {
    fn extend(&mut self, unplaced: u64) -> Result<bool, RecognitionError> {
        if unplaced == 0 {
            return Ok(true);
        }
        let mut candidates = unplaced;
        while candidates != 0 {
            let v = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(RecognitionError::BudgetExceeded { limit: self.limit });
            }
            let rest = unplaced & !(1 << v);
            if self.admits(v, rest) {
                self.placed.push(v);
                if self.extend(rest)? {
                    return Ok(true);
                }
                self.placed.pop();
            }
        }
        Ok(false)
    }

    fn admits(&self, v: usize, rest: u64) -> bool {
        let adj_v = self.g.row(v);
        let mut after = 0u64;
        // walk placed vertices right to left, `after` = vertices placed later
        for &u in self.placed.iter().rev() {
            let adj_u = self.g.row(u);
            if adj_u & (1 << v) != 0 {
                if after & !adj_u & !adj_v != 0 {
                    return false;
                }
            } else if adj_u & rest & !adj_v != 0 {
                return false;
            }
            after |= 1 << u;
        }
        true
    }
}

/// Decides cocomparability by searching for a transitive orientation of the
/// complement, with the default node budget. Kept independent of the
/// ordering search so the two can be compared.
pub fn is_cocomparability_oracle(g: &Graph) -> Result<bool, RecognitionError> {
    is_cocomparability_oracle_with_budget(g, DEFAULT_ORIENTATION_BUDGET)
}

pub fn is_cocomparability_oracle_with_budget(
    g: &Graph,
    node_limit: u64,
) -> Result<bool, RecognitionError> {
    let h = g.complement();
    let n = h.order();
    let edges: Vec<(usize, usize)> = h.edges().map(|(u, v)| (u - 1, v - 1)).collect();
    let mut search = OrientationSearch {
        h: &h,
        edges: &edges,
        nodes: 0,
        limit: node_limit,
    };
    // arcs[a] holds b when a -> b
    search.solve(vec![0u64; n], 0)
}

struct OrientationSearch<'a> {
    h: &'a Graph,
    edges: &'a [(usize, usize)],
    nodes: u64,
    limit: u64,
}

impl OrientationSearch<'_> {
    fn solve(&mut self, arcs: Vec<u64>, from: usize) -> Result<bool, RecognitionError> {
        let Some(k) = (from..self.edges.len()).find(|&k| {
            let (a, b) = self.edges[k];
            arcs[a] & (1 << b) == 0 && arcs[b] & (1 << a) == 0
        }) else {
            return Ok(true);
        };
        let (a, b) = self.edges[k];
        for (x, y) in [(a, b), (b, a)] {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(RecognitionError::BudgetExceeded { limit: self.limit });
            }
            let mut next = arcs.clone();
            if self.force(&mut next, x, y) && self.solve(next, k + 1)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Adds `x -> y` and every arc transitivity then demands.
    fn force(&self, arcs: &mut [u64], x: usize, y: usize) -> bool {
        let mut work = vec![(x, y)];
        while let Some((a, b)) = work.pop() {
            if arcs[b] & (1 << a) != 0 {
                return false;
            }
            if arcs[a] & (1 << b) != 0 {
                continue;
            }
            arcs[a] |= 1 << b;
            // a -> b -> c needs a -> c
            let mut out = arcs[b];
            while out != 0 {
                let c = out.trailing_zeros() as usize;
                out &= out - 1;
                if c == a || self.h.row(a) & (1 << c) == 0 {
                    return false;
                }
                work.push((a, c));
            }
            // c -> a -> b needs c -> b
            for (c, &arc) in arcs.iter().enumerate() {
                if arc & (1 << a) != 0 {
                    if c == b || self.h.row(c) & (1 << b) == 0 {
                        return false;
                    }
                    work.push((c, b));
                }
            }
        }
        true
    }
}

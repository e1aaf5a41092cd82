//! Exact path covering number by subset dynamic programming.
//!
//! Each connected component is solved on its own. For a component of order
//! `k` the table holds, for every covered subset and every vertex `e` of it,
//! the fewest paths that cover exactly that subset with `e` as the endpoint
//! of the path currently being grown. A step either extends that path to an
//! uncovered neighbour of `e` or starts a new path at any uncovered vertex.
//! Cost is `O(2^k k^2)` time and `2^k k` bytes.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::InvariantError;
use crate::graph::Graph;

/// Default largest component order the DP accepts.
pub const DEFAULT_COMPONENT_LIMIT: usize = 20;

// keeps 2^k * k inside usize and the table allocation sane
const HARD_COMPONENT_LIMIT: usize = 28;

const UNREACHED: u8 = u8::MAX;

/// A minimum set of vertex-disjoint paths covering every vertex.
///
/// Each path is a vertex sequence oriented so that its first label is no
/// larger than its last; paths are sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCover {
    paths: Vec<Vec<usize>>,
}

impl PathCover {
    /// `π(G)`.
    pub fn count(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn into_paths(self) -> Vec<Vec<usize>> {
        self.paths
    }

    /// Edges used by the cover, `n - π(G)` of them.
    pub fn edge_count(&self) -> usize {
        self.paths.iter().map(|p| p.len() - 1).sum()
    }

    /// Checks that the paths are vertex-disjoint, cover `1..=n` and only use
    /// edges of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = 0u64;
        for path in &self.paths {
            if path.is_empty() {
                return false;
            }
            for &v in path {
                if v == 0 || v > g.order() || seen & (1 << (v - 1)) != 0 {
                    return false;
                }
                seen |= 1 << (v - 1);
            }
            if path.windows(2).any(|w| !g.has_edge(w[0], w[1])) {
                return false;
            }
        }
        seen == g.full_mask()
    }
}

/// `π(G)` with an optimal cover, using [`DEFAULT_COMPONENT_LIMIT`].
pub fn path_cover_number(g: &Graph) -> Result<PathCover, InvariantError> {
    path_cover_number_with_limit(g, DEFAULT_COMPONENT_LIMIT)
}

/// `π(G)` with an optimal cover; fails if some component has more than
/// `component_limit` vertices.
pub fn path_cover_number_with_limit(
    g: &Graph,
    component_limit: usize,
) -> Result<PathCover, InvariantError> {
    if g.order() == 0 {
        return Err(InvariantError::TooFewVertices {
            order: 0,
            required: 1,
        });
    }
    let limit = component_limit.min(HARD_COMPONENT_LIMIT);
    let components = g.component_masks_within(g.full_mask());
    if let Some(big) = components.iter().find(|c| c.count_ones() as usize > limit) {
        return Err(InvariantError::ComponentTooLarge {
            size: big.count_ones() as usize,
            limit,
        });
    }

    let mut paths = Vec::new();
    for comp in components {
        paths.extend(cover_component(g, comp));
    }
    for p in &mut paths {
        if p.first() > p.last() {
            p.reverse();
        }
    }
    paths.sort();
    Ok(PathCover { paths })
}

/// `LF(G) = n - π(G)`.
pub fn max_linear_forest(g: &Graph) -> Result<usize, InvariantError> {
    Ok(g.order() - path_cover_number(g)?.count())
}

fn cover_component(g: &Graph, comp: u64) -> Vec<Vec<usize>> {
    // local index -> 0-based global index, ascending
    let verts: Vec<usize> = crate::graph::VertexSet::from_bits(comp)
        .iter()
        .map(|v| v - 1)
        .collect();
    let k = verts.len();
    if k == 1 {
        return vec![vec![verts[0] + 1]];
    }
    let local_adj: Vec<u32> = verts
        .iter()
        .map(|&gi| {
            let row = g.row(gi);
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &gj)| row & (1 << gj) != 0)
                .fold(0u32, |acc, (j, _)| acc | 1 << j)
        })
        .collect();

    let states = 1usize << k;
    let full = states - 1;
    let mut dp = vec![UNREACHED; states * k];
    for v in 0..k {
        dp[(1 << v) * k + v] = 1;
    }
    for mask in 1..states {
        for end in 0..k {
            let cur = dp[mask * k + end];
            if cur == UNREACHED {
                continue;
            }
            let mut free = !mask & full;
            while free != 0 {
                let u = free.trailing_zeros() as usize;
                free &= free - 1;
                let step = if local_adj[end] & (1 << u) != 0 { 0 } else { 1 };
                let slot = &mut dp[(mask | 1 << u) * k + u];
                if cur + step < *slot {
                    *slot = cur + step;
                }
            }
        }
    }

    // walk back from the cheapest final endpoint, smallest label on ties
    let (mut end, mut cost) = (0..k)
        .map(|e| (e, dp[full * k + e]))
        .min_by_key(|&(e, c)| (c, e))
        .expect("component is non-empty");
    let mut mask = full;
    let mut paths = Vec::new();
    let mut current = Vec::new();
    loop {
        current.push(verts[end] + 1);
        let prev = mask & !(1 << end);
        if prev == 0 {
            debug_assert_eq!(cost, 1);
            break;
        }
        let (p, extends) = (0..k)
            .filter(|&p| prev & (1 << p) != 0)
            .find_map(|p| {
                let before = dp[prev * k + p];
                if before == UNREACHED {
                    return None;
                }
                let adjacent = local_adj[p] & (1 << end) != 0;
                if adjacent && before == cost {
                    Some((p, true))
                } else if !adjacent && before + 1 == cost {
                    Some((p, false))
                } else {
                    None
                }
            })
            .expect("every reached state has a predecessor");
        if !extends {
            // `end` started its path; the walk went from last vertex to first
            current.reverse();
            paths.push(core::mem::take(&mut current));
            cost -= 1;
        }
        mask = prev;
        end = p;
    }
    current.reverse();
    paths.push(current);
    paths
}

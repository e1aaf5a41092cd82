//! Simple undirected graphs on vertices `1..=n` with bitmask adjacency.

use alloc::vec::Vec;
use core::fmt;

use crate::error::GraphError;

/// Largest supported order; one `u64` row per vertex and the single-byte
/// graph6 order header both stop here.
pub const MAX_ORDER: usize = 62;

/// A set of vertex labels drawn from `1..=MAX_ORDER`.
///
/// Bit `v - 1` of the mask is set when vertex `v` is a member. Whether the
/// members belong to a particular graph is checked by the graph operations
/// that consume the set.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet(0)
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order: n });
        }
        Ok(VertexSet(low_mask(n)))
    }

    pub fn from_labels<I: IntoIterator<Item = usize>>(labels: I) -> Result<Self, GraphError> {
        let mut bits = 0u64;
        for label in labels {
            if label == 0 || label > MAX_ORDER {
                return Err(GraphError::InvalidLabel { label });
            }
            bits |= 1 << (label - 1);
        }
        Ok(VertexSet(bits))
    }

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_ORDER).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > MAX_ORDER {
            return Err(GraphError::InvalidLabel { label: v });
        }
        self.0 |= 1 << (v - 1);
        Ok(())
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Members in ascending label order.
    pub fn iter(self) -> Labels {
        Labels(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending label sequences, so that
    /// `{1, 4} < {2}` and `{1} < {1, 2}`.
    pub fn cmp_lex(self, other: VertexSet) -> core::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Labels;

    fn into_iter(self) -> Labels {
        self.iter()
    }
}

/// Ascending iterator over the labels of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Labels(u64);

impl Iterator for Labels {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let low = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(low + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Labels {}

/// Maps the compact labels of a vertex-deleted graph back to the labels of
/// the graph it was taken from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relabelling {
    original: Vec<usize>,
}

impl Relabelling {
    /// Original label of compact vertex `v` (1-indexed).
    pub fn original(&self, v: usize) -> Option<usize> {
        v.checked_sub(1).and_then(|i| self.original.get(i).copied())
    }

    /// Compact label of original vertex `v`, if it survived the deletion.
    pub fn compact(&self, v: usize) -> Option<usize> {
        self.original.binary_search(&v).ok().map(|i| i + 1)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.original
    }
}

/// An immutable finite simple undirected graph on `1..=order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    // row i holds the neighbours of vertex i + 1 as bits 0..order
    adj: Vec<u64>,
}

pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// The edgeless graph on `order` vertices. `Graph::empty(0)` is `K_0`.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge { order });
        }
        Ok(Graph {
            order,
            adj: alloc::vec![0; order],
        })
    }

    /// Builds a graph from 1-indexed edge pairs. Repeated edges are merged.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            g.adj[u - 1] |= 1 << (v - 1);
            g.adj[v - 1] |= 1 << (u - 1);
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows. Callers guarantee a
    /// symmetric, irreflexive relation confined to the low `rows.len()` bits.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_ORDER);
        debug_assert!(adj.iter().enumerate().all(|(i, &row)| {
            row & (1 << i) == 0
                && row & !low_mask(adj.len()) == 0
                && (0..adj.len()).all(|j| (row >> j) & 1 == (adj[j] >> i) & 1)
        }));
        Graph {
            order: adj.len(),
            adj,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|row| row.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet(self.full_mask())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1
            && u <= self.order
            && v >= 1
            && v <= self.order
            && self.adj[u - 1] & (1 << (v - 1)) != 0
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |i| {
            let above = self.adj[i] & !low_mask(i + 1);
            Labels(above).map(move |v| (i + 1, v))
        })
    }

    /// Open neighbourhood of `v`.
    pub fn neighbors(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v - 1]))
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.neighbors(v).map(VertexSet::len)
    }

    /// `N[v]`: the vertex together with its neighbours.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet(self.adj[v - 1] | 1 << (v - 1)))
    }

    pub fn complement(&self) -> Graph {
        let full = self.full_mask();
        let adj = (0..self.order)
            .map(|i| !self.adj[i] & full & !(1 << i))
            .collect();
        Graph::from_rows(adj)
    }

    /// Induced subgraph on `V \ s`, relabelled to `1..=n - |s|` in the
    /// original label order.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<(Graph, Relabelling), GraphError> {
        self.check_subset(s)?;
        let kept: Vec<usize> = self.vertices().difference(s).to_vec();
        let adj = kept
            .iter()
            .map(|&v| {
                let row = self.adj[v - 1];
                kept.iter()
                    .enumerate()
                    .filter(|&(_, &u)| row & (1 << (u - 1)) != 0)
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok((Graph::from_rows(adj), Relabelling { original: kept }))
    }

    /// `c_G(s)`: the number of connected components of `G \ s`.
    pub fn component_count(&self, s: VertexSet) -> Result<usize, GraphError> {
        self.check_subset(s)?;
        Ok(self.count_components_within(self.full_mask() & !s.0))
    }

    /// Vertex sets of the components of `G \ s`, ordered by smallest member.
    pub fn components(&self, s: VertexSet) -> Result<Vec<VertexSet>, GraphError> {
        self.check_subset(s)?;
        Ok(self
            .component_masks_within(self.full_mask() & !s.0)
            .into_iter()
            .map(VertexSet)
            .collect())
    }

    /// True for `K_1` and every larger connected graph; `K_0` is not connected.
    pub fn is_connected(&self) -> bool {
        self.count_components_within(self.full_mask()) == 1
    }

    pub(crate) fn full_mask(&self) -> u64 {
        low_mask(self.order)
    }

    /// Adjacency row of the vertex with 0-based index `i`.
    pub(crate) fn row(&self, i: usize) -> u64 {
        self.adj[i]
    }

    /// Vertices reachable from the 0-based vertex `start` inside `alive`.
    pub(crate) fn reach_within(&self, start: usize, alive: u64) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let i = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[i];
            }
            frontier = next & alive & !seen;
            seen |= frontier;
        }
        seen
    }

    pub(crate) fn count_components_within(&self, alive: u64) -> usize {
        let mut rest = alive;
        let mut count = 0;
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            rest &= !self.reach_within(start, alive);
            count += 1;
        }
        count
    }

    pub(crate) fn component_masks_within(&self, alive: u64) -> Vec<u64> {
        let mut rest = alive;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let comp = self.reach_within(start, alive);
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.order {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            });
        }
        Ok(())
    }

    fn check_subset(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            Some(vertex) => Err(GraphError::VertexOutOfRange {
                vertex,
                order: self.order,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

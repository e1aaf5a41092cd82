//! Path covering number, scattering numbers, linear forests and the
//! ideal-theoretic numbers they determine.
//!
//! The binomial edge ideal `J(G)` of a graph on `n` vertices has one minimal
//! prime for each `S ∈ C(G)`, of height `|S| + n - c_G(S)`. Its height (and
//! grade) is therefore `n - sc*(G)`, and since `LF(G) = n - π(G)` the ideal is
//! of König type exactly when `π(G) = sc*(G)`.

mod cuts;
mod linear_forest;
mod path_cover;

pub use cuts::{
    cut_sets, ideal_height, is_unmixed, scattering_number, unrestricted_scattering_number, CutSet,
    CutSetFamily, MAX_SUBSET_ORDER,
};
pub use linear_forest::{brute_force_linear_forest, MAX_FOREST_EDGES};
pub use path_cover::{
    max_linear_forest, path_cover_number, path_cover_number_with_limit, PathCover,
    DEFAULT_COMPONENT_LIMIT,
};

pub(crate) use cuts::SubsetTable;

use crate::error::InvariantError;
use crate::graph::{Graph, VertexSet};

/// Every invariant of one graph.
///
/// The ideal-facing fields are `None` for graphs on fewer than two vertices,
/// where the polynomial ring is not set up. `koenig_type` is the graph-side
/// criterion `π = sc*` and is filled in for every order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub order: usize,
    pub edges: usize,
    /// `π(G)`
    pub path_cover: usize,
    /// `sc(G)`
    pub scattering: i64,
    /// `sc*(G)`
    pub unrestricted_scattering: usize,
    /// `LF(G)`
    pub linear_forest_edges: usize,
    /// `hgt J(G)`, equal to its grade
    pub ideal_height: Option<usize>,
    /// `dim R/J(G) = 2n - hgt J(G)`
    pub quotient_dim: Option<usize>,
    pub koenig_type: bool,
    pub unmixed: Option<bool>,
    /// `|C(G)|`, the number of minimal primes
    pub cut_set_count: usize,
    /// A member of `C(G)` attaining `sc*`.
    pub witness_set: VertexSet,
    pub witness_cover: PathCover,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Result<Self, InvariantError> {
        Self::compute_with_limit(g, DEFAULT_COMPONENT_LIMIT)
    }

    /// Computes the report with a custom path-cover component limit.
    ///
    /// Panics if `sc*(G) > π(G)`, which would mean one of the two routines is
    /// wrong.
    pub fn compute_with_limit(g: &Graph, component_limit: usize) -> Result<Self, InvariantError> {
        let n = g.order();
        if n == 0 {
            return Err(InvariantError::TooFewVertices {
                order: 0,
                required: 1,
            });
        }
        let cover = path_cover_number_with_limit(g, component_limit)?;
        let table = SubsetTable::build(g)?;
        let family = table.cut_sets();
        let scattering = table.scattering();
        let best = family.best_excess();
        let sc_star = best.excess() as usize;
        let pi = cover.count();

        assert_eq!(
            sc_star as i64,
            scattering.max(1),
            "sc* must equal max(1, sc)"
        );
        assert!(sc_star <= pi, "sc* = {sc_star} exceeds π = {pi} for {g:?}");
        assert_eq!(cover.edge_count(), n - pi);

        let (ideal_height, quotient_dim, unmixed) = if n >= 2 {
            let h = cuts::height_of(&family);
            (Some(h), Some(2 * n - h), Some(family.heights_equal()))
        } else {
            (None, None, None)
        };

        Ok(InvariantReport {
            order: n,
            edges: g.edge_count(),
            path_cover: pi,
            scattering,
            unrestricted_scattering: sc_star,
            linear_forest_edges: n - pi,
            ideal_height,
            quotient_dim,
            koenig_type: pi == sc_star,
            unmixed,
            cut_set_count: family.len(),
            witness_set: best.set,
            witness_cover: cover,
        })
    }
}

/// Decides whether `J(G)` is of König type, i.e. `grade J(G) = LF(G)`,
/// through the equivalent condition `π(G) = sc*(G)`.
pub fn is_koenig_type(g: &Graph) -> Result<(bool, InvariantReport), InvariantError> {
    if g.order() < 2 {
        return Err(InvariantError::TooFewVertices {
            order: g.order(),
            required: 2,
        });
    }
    let report = InvariantReport::compute(g)?;
    Ok((report.koenig_type, report))
}

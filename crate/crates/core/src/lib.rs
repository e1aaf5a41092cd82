//! Combinatorial invariants of binomial edge ideals.
//!
//! Everything here is computed from the graph alone: the minimal primes of
//! the binomial edge ideal are indexed by the cut-set family `C(G)`, so the
//! height, dimension and unmixedness of the ideal reduce to component
//! counting, and the König-type property reduces to comparing the path
//! covering number with the unrestricted scattering number.
//!
//! Graphs are stored as bitmask adjacency rows, which caps the order at
//! [`MAX_ORDER`] (the single-byte graph6 regime). The invariant algorithms
//! are exponential; exact computation is practical up to roughly twenty
//! vertices and every exponential routine checks its budget up front.
//!
//! Vertices are labelled `1..=n` in every public API.
//!
//! This crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod named;
pub mod recognition;

pub use error::{Graph6Error, GraphError, InvariantError, RecognitionError};
pub use graph::{Graph, Relabelling, VertexSet, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6};
pub use invariants::{is_koenig_type, InvariantReport};

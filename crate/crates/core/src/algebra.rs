//! Index-level description of a binomial edge ideal and its minimal primes.
//!
//! Nothing is expanded into polynomials. `J(G)` is the list of edges
//! `{i, j}` standing for `x_i y_j - x_j y_i`; the minimal prime `P_S(G)` is
//! the pair (`S`, components of `G \ S`). Polynomial arithmetic is left to
//! the Macaulay2 script from [`emit_algebra_script`], which re-derives the
//! codimension, the number of minimal primes and their heights.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use crate::error::InvariantError;
use crate::graph::{Graph, VertexSet};
use crate::graph6::emit_graph6;
use crate::invariants::SubsetTable;

/// `δ_{i,j} = x_i y_j - x_j y_i` for an edge `{i, j}` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinomialGenerator {
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for BinomialGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = (self.i, self.j);
        write!(f, "x_{i}*y_{j} - x_{j}*y_{i}")
    }
}

/// `P_S(G) = (x_i, y_i : i ∈ S) + J(K_{G_1}) + ... + J(K_{G_c})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalPrime {
    pub cut_set: VertexSet,
    /// Components of `G \ S`, ordered by smallest vertex.
    pub components: Vec<VertexSet>,
    /// `|S| + n - c_G(S)`
    pub height: usize,
}

fn require_ring(g: &Graph) -> Result<(), InvariantError> {
    if g.order() < 2 {
        return Err(InvariantError::TooFewVertices {
            order: g.order(),
            required: 2,
        });
    }
    Ok(())
}

/// Generators of `J(G)`, one per edge, sorted lexicographically.
pub fn binomial_generators(g: &Graph) -> Result<Vec<BinomialGenerator>, InvariantError> {
    require_ring(g)?;
    Ok(g.edges().map(|(i, j)| BinomialGenerator { i, j }).collect())
}

/// The minimal primes of `J(G)`, sorted by height, then `|S|`, then `S`
/// lexicographically.
pub fn minimal_primes(g: &Graph) -> Result<Vec<MinimalPrime>, InvariantError> {
    require_ring(g)?;
    let n = g.order();
    let family = SubsetTable::build(g)?.cut_sets();
    let mut primes: Vec<MinimalPrime> = family
        .iter()
        .map(|c| MinimalPrime {
            cut_set: c.set,
            components: g.components(c.set).expect("cut set lies inside V(G)"),
            height: c.prime_height(n),
        })
        .collect();
    primes.sort_by(|a, b| {
        a.height
            .cmp(&b.height)
            .then(a.cut_set.len().cmp(&b.cut_set.len()))
            .then_with(|| a.cut_set.cmp_lex(b.cut_set))
    });
    Ok(primes)
}

fn m2_set(s: VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| format!("{v}")).collect();
    format!("{{{}}}", items.join(", "))
}

/// A Macaulay2 script that rebuilds `J(G)` and asserts the combinatorial
/// predictions: its codimension, the number of minimal primes, the multiset
/// of their codimensions and whether the ideal is unmixed.
///
/// Output depends only on the graph, so it can be checked in as a fixture.
pub fn emit_algebra_script(g: &Graph) -> Result<String, InvariantError> {
    let generators = binomial_generators(g)?;
    let primes = minimal_primes(g)?;
    let n = g.order();
    let height = primes[0].height;
    let unmixed = primes.iter().all(|p| p.height == height);
    let heights: Vec<String> = primes.iter().map(|p| format!("{}", p.height)).collect();

    let mut out = String::new();
    // writes into a String cannot fail
    let _ = writeln!(
        out,
        "-- binomial edge ideal of graph6 {} (n = {}, |E| = {})",
        emit_graph6(g),
        n,
        generators.len()
    );
    for p in &primes {
        let comps: Vec<String> = p.components.iter().map(|&c| m2_set(c)).collect();
        let _ = writeln!(
            out,
            "-- prime S = {}, components {}, height {}",
            m2_set(p.cut_set),
            if comps.is_empty() {
                String::from("none")
            } else {
                comps.join(" ")
            },
            p.height
        );
    }
    let _ = writeln!(out, "R = QQ[x_1..x_{n}, y_1..y_{n}];");
    if generators.is_empty() {
        let _ = writeln!(out, "J = ideal(0_R);");
    } else {
        let gens: Vec<String> = generators.iter().map(|d| format!("{d}")).collect();
        let _ = writeln!(out, "J = ideal({});", gens.join(", "));
    }
    let _ = writeln!(out, "assert(codim J == {height});");
    let _ = writeln!(out, "P = minimalPrimes J;");
    let _ = writeln!(out, "assert(#P == {});", primes.len());
    let _ = writeln!(
        out,
        "assert(sort apply(P, codim) == {{{}}});",
        heights.join(", ")
    );
    if unmixed {
        let _ = writeln!(out, "assert(#(unique apply(P, codim)) == 1);");
    } else {
        let _ = writeln!(out, "assert(#(unique apply(P, codim)) > 1);");
    }
    Ok(out)
}

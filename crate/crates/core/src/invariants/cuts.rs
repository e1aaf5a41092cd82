//! The cut-set family `C(G)` and everything derived from component counts:
//! scattering numbers, the height of the binomial edge ideal and unmixedness.

use alloc::vec::Vec;

use crate::error::InvariantError;
use crate::graph::{Graph, VertexSet};

/// Largest order for which the `2^n` component-count table is built.
pub const MAX_SUBSET_ORDER: usize = 24;

/// `c_G(S)` for every `S ⊆ V(G)`, indexed by the bitmask of `S`.
pub(crate) struct SubsetTable {
    order: usize,
    counts: Vec<u8>,
}

impl SubsetTable {
    pub(crate) fn build(g: &Graph) -> Result<Self, InvariantError> {
        let n = g.order();
        if n > MAX_SUBSET_ORDER {
            return Err(InvariantError::SubsetBudget {
                order: n,
                limit: MAX_SUBSET_ORDER,
            });
        }
        let full = g.full_mask();
        let counts = (0..1u64 << n)
            .map(|s| g.count_components_within(full & !s) as u8)
            .collect();
        Ok(SubsetTable { order: n, counts })
    }

    pub(crate) fn count(&self, s: u64) -> usize {
        self.counts[s as usize] as usize
    }

    /// Membership test for `C(G)`, verbatim: `S = ∅`, or removing any single
    /// vertex from `S` strictly lowers the component count.
    pub(crate) fn is_cut_set(&self, s: u64) -> bool {
        let c = self.count(s);
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            if self.count(s ^ bit) >= c {
                return false;
            }
        }
        true
    }

    /// Members of `C(G)` by ascending size, then lexicographically.
    pub(crate) fn cut_sets(&self) -> CutSetFamily {
        let mut sets: Vec<CutSet> = (0..1u64 << self.order)
            .filter(|&s| self.is_cut_set(s))
            .map(|s| CutSet {
                set: VertexSet::from_bits(s),
                components: self.count(s),
            })
            .collect();
        sets.sort_by(|a, b| {
            a.set
                .len()
                .cmp(&b.set.len())
                .then_with(|| a.set.cmp_lex(b.set))
        });
        CutSetFamily {
            order: self.order,
            sets,
        }
    }

    /// `sc(G)`; the full vertex set always qualifies since it leaves no
    /// components.
    pub(crate) fn scattering(&self) -> i64 {
        (0..1u64 << self.order)
            .filter(|&s| self.count(s) != 1)
            .map(|s| self.count(s) as i64 - s.count_ones() as i64)
            .max()
            .expect("S = V(G) always qualifies")
    }
}

/// One member `S` of `C(G)` with `c_G(S)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CutSet {
    pub set: VertexSet,
    pub components: usize,
}

impl CutSet {
    /// `c_G(S) - |S|`.
    pub fn excess(&self) -> i64 {
        self.components as i64 - self.set.len() as i64
    }

    /// `|S| + n - c_G(S)`, the height of the minimal prime indexed by `S`.
    pub fn prime_height(&self, order: usize) -> usize {
        self.set.len() + order - self.components
    }
}

/// The family `C(G)`. The empty set is always the first member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutSetFamily {
    order: usize,
    sets: Vec<CutSet>,
}

impl CutSetFamily {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, CutSet> {
        self.sets.iter()
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.sets.iter().any(|c| c.set == s)
    }

    /// First member attaining `max c_G(S) - |S|`, i.e. the smallest such set
    /// in family order.
    pub fn best_excess(&self) -> &CutSet {
        let mut best = &self.sets[0];
        for c in &self.sets[1..] {
            if c.excess() > best.excess() {
                best = c;
            }
        }
        best
    }

    /// `min |S| + n - c_G(S)` over the family.
    pub fn min_prime_height(&self) -> usize {
        self.sets
            .iter()
            .map(|c| c.prime_height(self.order))
            .min()
            .expect("the empty set is always a member")
    }

    pub fn heights_equal(&self) -> bool {
        let first = self.sets[0].prime_height(self.order);
        self.sets
            .iter()
            .all(|c| c.prime_height(self.order) == first)
    }
}

impl<'a> IntoIterator for &'a CutSetFamily {
    type Item = &'a CutSet;
    type IntoIter = core::slice::Iter<'a, CutSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}

fn require_order(g: &Graph, required: usize) -> Result<(), InvariantError> {
    if g.order() < required {
        return Err(InvariantError::TooFewVertices {
            order: g.order(),
            required,
        });
    }
    Ok(())
}

/// `C(G)` with the component count of each member.
pub fn cut_sets(g: &Graph) -> Result<CutSetFamily, InvariantError> {
    require_order(g, 1)?;
    Ok(SubsetTable::build(g)?.cut_sets())
}

/// `sc(G) = max { c_G(S) - |S| : S ⊆ V(G), c_G(S) ≠ 1 }`.
pub fn scattering_number(g: &Graph) -> Result<i64, InvariantError> {
    require_order(g, 1)?;
    Ok(SubsetTable::build(g)?.scattering())
}

/// `sc*(G)`, maximised over `C(G)` only, with the set attaining it.
pub fn unrestricted_scattering_number(g: &Graph) -> Result<(usize, VertexSet), InvariantError> {
    let family = cut_sets(g)?;
    let best = family.best_excess();
    Ok((best.excess() as usize, best.set))
}

/// Height of the binomial edge ideal, `n - sc*(G)`.
///
/// Also evaluated as the minimum prime height over `C(G)`; the two must agree.
pub fn ideal_height(g: &Graph) -> Result<usize, InvariantError> {
    require_order(g, 2)?;
    let family = cut_sets(g)?;
    Ok(height_of(&family))
}

pub(crate) fn height_of(family: &CutSetFamily) -> usize {
    let via_scattering = family.order - family.best_excess().excess() as usize;
    let via_primes = family.min_prime_height();
    assert_eq!(
        via_scattering, via_primes,
        "n - sc* disagrees with the minimum minimal-prime height"
    );
    via_scattering
}

/// Whether every minimal prime has the same height.
pub fn is_unmixed(g: &Graph) -> Result<bool, InvariantError> {
    require_order(g, 2)?;
    Ok(cut_sets(g)?.heights_equal())
}

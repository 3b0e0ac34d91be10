//! Exact branch-and-bound minimisation and exhaustive maximisation over
//! minimal sets, both on 64-bit masks.

use serde::Serialize;

use super::{DominationError, Variant};
use crate::budget::{Budget, Meter};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
    pub pruned_by_prefix: u64,
}

/// Open and closed neighbourhood masks.
#[derive(Debug, Clone)]
pub(crate) struct Masks {
    pub all: u64,
    pub open: Vec<u64>,
    pub closed: Vec<u64>,
}

impl Masks {
    pub fn new(g: &Graph) -> Result<Masks, DominationError> {
        let open = g.neighbor_masks().ok_or(DominationError::TooLarge(g.n()))?;
        let closed = open.iter().enumerate().map(|(v, m)| m | 1 << v).collect();
        Ok(Masks {
            all: full_mask(g.n()),
            open,
            closed,
        })
    }

    pub fn closed_cover(&self, set: u64) -> u64 {
        bits(set).fold(0, |acc, v| acc | self.closed[v])
    }

    pub fn open_cover(&self, set: u64) -> u64 {
        bits(set).fold(0, |acc, v| acc | self.open[v])
    }

    pub fn dominates(&self, set: u64) -> bool {
        self.closed_cover(set) == self.all
    }

    pub fn totally_dominates(&self, set: u64) -> bool {
        self.open_cover(set) == self.all
    }

    /// Perfect matching of the subgraph induced by `set`.
    pub fn matches(&self, set: u64) -> bool {
        if set == 0 {
            return true;
        }
        let u = set.trailing_zeros() as usize;
        let rest = set & !(1 << u);
        bits(self.open[u] & rest).any(|w| self.matches(rest & !(1 << w)))
    }

    pub fn minimal_dominating(&self, set: u64) -> bool {
        bits(set).all(|v| !self.dominates(set & !(1 << v)))
    }

    pub fn minimal_total_dominating(&self, set: u64) -> bool {
        bits(set).all(|v| !self.totally_dominates(set & !(1 << v)))
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

/// Minimum cardinality of a `variant` set, with a witness.
///
/// Sizes are tried in increasing order; at each size the search branches on
/// the lowest vertex not yet handled, over the vertices that could handle
/// it, and prunes when the remaining picks cannot cover what is left even
/// at maximum degree.
pub fn min_parameter(
    g: &Graph,
    variant: Variant,
    budget: Budget,
) -> Result<SolveReport, DominationError> {
    let masks = Masks::new(g)?;
    if let Some(v) = g.isolated_vertex() {
        match variant {
            Variant::Dominating => {}
            Variant::TotalDominating => return Err(DominationError::IsolatedVertex(v)),
            Variant::PairedDominating => return Err(DominationError::NoSolution(variant)),
        }
    }
    let mut search = MinSearch {
        masks: &masks,
        variant,
        delta: g.max_degree() as u32,
        meter: budget.meter(),
    };
    let step = if variant == Variant::PairedDominating {
        2
    } else {
        1
    };
    let mut cap = 0;
    while cap <= g.n() {
        if let Some(found) = search.run(0, 0, 0, cap as u32)? {
            return Ok(SolveReport {
                value: found.count_ones() as usize,
                witness: VertexSet::from_mask(g.n(), found),
                nodes_explored: search.meter.nodes(),
                pruned_by_prefix: 0,
            });
        }
        cap += step;
    }
    Err(DominationError::NoSolution(variant))
}

struct MinSearch<'a> {
    masks: &'a Masks,
    variant: Variant,
    delta: u32,
    meter: Meter,
}

impl MinSearch<'_> {
    fn run(
        &mut self,
        chosen: u64,
        covered: u64,
        count: u32,
        cap: u32,
    ) -> Result<Option<u64>, DominationError> {
        self.meter.tick()?;
        let missing = self.masks.all & !covered;
        if missing == 0 {
            return Ok(Some(chosen));
        }
        let left = cap - count;
        let reach = match self.variant {
            Variant::Dominating => left * (self.delta + 1),
            Variant::TotalDominating => left * self.delta,
            // Each pair covers at most 2 * delta vertices.
            Variant::PairedDominating => left / 2 * 2 * self.delta,
        };
        if missing.count_ones() > reach {
            return Ok(None);
        }
        let u = missing.trailing_zeros() as usize;
        match self.variant {
            Variant::Dominating => {
                for w in bits(self.masks.closed[u]) {
                    let next = self.run(
                        chosen | 1 << w,
                        covered | self.masks.closed[w],
                        count + 1,
                        cap,
                    )?;
                    if next.is_some() {
                        return Ok(next);
                    }
                }
            }
            Variant::TotalDominating => {
                for w in bits(self.masks.open[u]) {
                    let next = self.run(
                        chosen | 1 << w,
                        covered | self.masks.open[w],
                        count + 1,
                        cap,
                    )?;
                    if next.is_some() {
                        return Ok(next);
                    }
                }
            }
            Variant::PairedDominating => {
                let near = self.masks.closed[u];
                for w in bits(near) {
                    for p in bits(self.masks.open[w] & !chosen) {
                        // A pair with both ends near u is met from its smaller end.
                        if near & 1 << p != 0 && p < w {
                            continue;
                        }
                        let pair = 1 << w | 1 << p;
                        let reach = self.masks.closed[w] | self.masks.closed[p];
                        let next = self.run(chosen | pair, covered | reach, count + 2, cap)?;
                        if next.is_some() {
                            return Ok(next);
                        }
                    }
                }
            }
        }
        Ok(None)
    }
}

/// Largest minimal dominating (`Γ`) or minimal total dominating (`Γ_t`) set.
///
/// Subsets are enumerated by decreasing size, so the first minimal set found
/// is a maximum one.
pub fn max_minimal_parameter(
    g: &Graph,
    variant: Variant,
    budget: Budget,
) -> Result<SolveReport, DominationError> {
    let masks = Masks::new(g)?;
    let accept: fn(&Masks, u64) -> bool = match variant {
        Variant::Dominating => |m, s| m.dominates(s) && m.minimal_dominating(s),
        Variant::TotalDominating => {
            if let Some(v) = g.isolated_vertex() {
                return Err(DominationError::IsolatedVertex(v));
            }
            |m, s| m.totally_dominates(s) && m.minimal_total_dominating(s)
        }
        Variant::PairedDominating => return Err(DominationError::UnsupportedVariant(variant)),
    };
    let mut meter = budget.meter();
    for size in (0..=g.n()).rev() {
        for set in subsets_of_size(g.n(), size) {
            meter.tick()?;
            if accept(&masks, set) {
                return Ok(SolveReport {
                    value: size,
                    witness: VertexSet::from_mask(g.n(), set),
                    nodes_explored: meter.nodes(),
                    pruned_by_prefix: 0,
                });
            }
        }
    }
    Err(DominationError::NoSolution(variant))
}

/// All `size`-subsets of `0..n` as masks, in increasing numeric order.
pub(crate) fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = u64> {
    let limit: u128 = 1 << n;
    let mut next: u128 = if size == 0 { 0 } else { (1 << size) - 1 };
    let mut done = size > n;
    std::iter::from_fn(move || {
        if done || next >= limit {
            return None;
        }
        let current = next;
        if current == 0 {
            done = true;
        } else {
            // Gosper's hack.
            let low = current & current.wrapping_neg();
            let ripple = current + low;
            next = (((ripple ^ current) >> 2) / low) | ripple;
        }
        Some(current as u64)
    })
}

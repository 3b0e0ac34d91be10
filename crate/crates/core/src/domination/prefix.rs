//! Searches restricted to sets whose per-part values meet a prefix bound.
//!
//! The partition must come with an automorphism shifting part `i` onto part
//! `i + 1`; every set can then be rotated so that its valid rotation starts
//! at the first part, and only that rotation needs searching.

use serde::Serialize;

use super::solve::{bits, Masks};
use super::{DominationError, Variant};
use crate::budget::{Budget, Meter};
use crate::cyclic::{check_epsilon, scan_rotation, CyclicList, Direction, RotationCertificate};
use crate::graph::{verify_cyclic_symmetry, CyclicSymmetry, Graph, VertexPartition, VertexSet};
use crate::rational::Rational;

/// Largest part whose subsets are enumerated explicitly.
pub const MAX_PART_SIZE: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetKind {
    Dominating,
    TotalDominating,
    PairedDominating,
    MinimalDominating,
    MinimalTotalDominating,
}

impl From<Variant> for SetKind {
    fn from(v: Variant) -> SetKind {
        match v {
            Variant::Dominating => SetKind::Dominating,
            Variant::TotalDominating => SetKind::TotalDominating,
            Variant::PairedDominating => SetKind::PairedDominating,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrefixSearchReport {
    pub witness: Option<VertexSet>,
    pub nodes_explored: u64,
    pub pruned_by_prefix: u64,
}

/// Outcome of deciding `parameter == h` from two prefix searches: a witness
/// below `h + eps` must exist and no set may get below `h - eps` (mirrored
/// for the upper parameters).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryDecision {
    pub holds: bool,
    pub witness: Option<VertexSet>,
    /// Rotation certificate of the witness' per-part values, always `k = 1`.
    pub certificate: Option<RotationCertificate>,
    /// A set beating the bound on the wrong side, if one exists.
    pub counterexample: Option<VertexSet>,
    pub nodes_explored: u64,
    pub pruned_by_prefix: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Weight {
    Count,
    Redomination,
}

#[derive(Debug, Clone)]
pub struct CyclicInstance<'a> {
    graph: &'a Graph,
    partition: &'a VertexPartition,
    symmetry: &'a CyclicSymmetry,
    masks: Masks,
    part_masks: Vec<u64>,
    /// Vertices whose closed neighbourhood is fully decided once parts
    /// `0..=j` are, and not earlier.
    settled_at: Vec<u64>,
}

impl<'a> CyclicInstance<'a> {
    pub fn new(
        graph: &'a Graph,
        partition: &'a VertexPartition,
        symmetry: &'a CyclicSymmetry,
    ) -> Result<Self, DominationError> {
        verify_cyclic_symmetry(graph, partition, symmetry)?;
        let masks = Masks::new(graph)?;
        if let Some(part) = partition.parts().iter().find(|p| p.len() > MAX_PART_SIZE) {
            return Err(DominationError::PartTooLarge(part.len()));
        }
        let part_masks: Vec<u64> = partition
            .parts()
            .iter()
            .map(|p| p.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let owner = partition.owners();
        let mut settled_at = vec![0u64; partition.len()];
        for u in 0..graph.n() {
            let last = bits(masks.closed[u])
                .map(|x| owner[x])
                .max()
                .expect("closed set is nonempty");
            settled_at[last] |= 1 << u;
        }
        Ok(CyclicInstance {
            graph,
            partition,
            symmetry,
            masks,
            part_masks,
            settled_at,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn partition(&self) -> &VertexPartition {
        self.partition
    }

    /// Number of parts.
    pub fn t(&self) -> usize {
        self.partition.len()
    }

    /// `|s ∩ V_i|` for each part.
    pub fn part_counts(&self, s: &VertexSet) -> Vec<i64> {
        self.partition
            .parts()
            .iter()
            .map(|p| p.iter().filter(|&&v| s.contains(v)).count() as i64)
            .collect()
    }

    /// `rd_s(V_i)` for each part.
    pub fn part_redominations(&self, s: &VertexSet) -> Vec<i64> {
        self.partition
            .parts()
            .iter()
            .map(|p| super::rd_set(self.graph, s, p))
            .collect()
    }

    /// Applies the shift so that part `k` (1-based) of `s` lands on the
    /// first part.
    pub fn align_to_first_part(&self, s: &VertexSet, k: usize) -> VertexSet {
        let t = self.t();
        self.symmetry.power((t - (k - 1) % t) % t).apply(s)
    }

    /// A `kind` set whose part counts keep every prefix strictly on the
    /// `direction` side of `j * total / t`, or `None` when no such set
    /// exists with its rotation starting at the first part.
    pub fn prefix_pruned_search(
        &self,
        kind: SetKind,
        total: Rational,
        direction: Direction,
        budget: Budget,
    ) -> Result<PrefixSearchReport, DominationError> {
        self.run(kind, Weight::Count, total, direction, budget)
    }

    /// A dominating set whose per-part re-domination sums stay strictly
    /// below `j * total / t`. The graph must be regular.
    pub fn rd_prefix_pruned_search(
        &self,
        total: Rational,
        budget: Budget,
    ) -> Result<PrefixSearchReport, DominationError> {
        if self.graph.regular_degree().is_none() {
            return Err(DominationError::NotRegular);
        }
        self.run(
            SetKind::Dominating,
            Weight::Redomination,
            total,
            Direction::Below,
            budget,
        )
    }

    /// Decides `gamma_x(G) == h` for a minimisation parameter.
    pub fn decide_parameter(
        &self,
        variant: Variant,
        h: i64,
        epsilon: Rational,
        budget: Budget,
    ) -> Result<CorollaryDecision, DominationError> {
        check_epsilon(epsilon)?;
        let h = Rational::from_integer(h);
        let kind = SetKind::from(variant);
        let found = self.prefix_pruned_search(kind, h + epsilon, Direction::Below, budget)?;
        let beaten = self.prefix_pruned_search(kind, h - epsilon, Direction::Below, budget)?;
        let certificate = found.witness.as_ref().and_then(|s| {
            first_part_certificate(&self.part_counts(s), h + epsilon, Direction::Below)
        });
        Ok(decision(found, beaten, certificate))
    }

    /// Decides `Gamma(G) == h` or `Gamma_t(G) == h`: a minimal set above
    /// `h - eps` must exist and none above `h + eps`.
    pub fn decide_upper_parameter(
        &self,
        variant: Variant,
        h: i64,
        epsilon: Rational,
        budget: Budget,
    ) -> Result<CorollaryDecision, DominationError> {
        check_epsilon(epsilon)?;
        let kind = match variant {
            Variant::Dominating => SetKind::MinimalDominating,
            Variant::TotalDominating => SetKind::MinimalTotalDominating,
            Variant::PairedDominating => return Err(DominationError::UnsupportedVariant(variant)),
        };
        let h = Rational::from_integer(h);
        let found = self.prefix_pruned_search(kind, h - epsilon, Direction::Above, budget)?;
        let beaten = self.prefix_pruned_search(kind, h + epsilon, Direction::Above, budget)?;
        let certificate = found.witness.as_ref().and_then(|s| {
            first_part_certificate(&self.part_counts(s), h - epsilon, Direction::Above)
        });
        Ok(decision(found, beaten, certificate))
    }

    /// Decides `gamma(G) == h` on a `k`-regular graph through the
    /// re-domination identity `rd(G) = (k + 1)|D| - |V|`.
    pub fn decide_domination_via_rd(
        &self,
        h: i64,
        epsilon: Rational,
        budget: Budget,
    ) -> Result<CorollaryDecision, DominationError> {
        check_epsilon(epsilon)?;
        let k = self
            .graph
            .regular_degree()
            .ok_or(DominationError::NotRegular)? as i64;
        let target = Rational::from_integer((k + 1) * h - self.graph.n() as i64);
        let found = self.rd_prefix_pruned_search(target + epsilon, budget)?;
        let beaten = self.rd_prefix_pruned_search(target - epsilon, budget)?;
        let certificate = found.witness.as_ref().and_then(|s| {
            first_part_certificate(
                &self.part_redominations(s),
                target + epsilon,
                Direction::Below,
            )
        });
        Ok(decision(found, beaten, certificate))
    }

    fn run(
        &self,
        kind: SetKind,
        weight: Weight,
        total: Rational,
        direction: Direction,
        budget: Budget,
    ) -> Result<PrefixSearchReport, DominationError> {
        let t = self.t();
        // Strict integer thresholds on the prefix after parts 0..=j.
        let limits: Vec<i64> = (1..=t as i64)
            .map(|j| {
                let bound = total * j / Rational::from_integer(t as i64);
                match direction {
                    Direction::Below => bound.ceil() - 1,
                    Direction::Above => bound.floor() + 1,
                }
            })
            .collect();
        let subsets = self
            .part_masks
            .iter()
            .map(|&part| {
                let mut subs = submasks(part);
                match direction {
                    Direction::Below => subs.sort_by_key(|s| s.count_ones()),
                    Direction::Above => subs.sort_by_key(|s| std::cmp::Reverse(s.count_ones())),
                }
                subs
            })
            .collect();
        let mut search = Search {
            inst: self,
            kind,
            weight,
            direction,
            limits,
            subsets,
            meter: budget.meter(),
            pruned: 0,
        };
        let found = search.dfs(0, 0, 0)?;
        Ok(PrefixSearchReport {
            witness: found.map(|m| VertexSet::from_mask(self.graph.n(), m)),
            nodes_explored: search.meter.nodes(),
            pruned_by_prefix: search.pruned,
        })
    }
}

fn decision(
    found: PrefixSearchReport,
    beaten: PrefixSearchReport,
    certificate: Option<RotationCertificate>,
) -> CorollaryDecision {
    CorollaryDecision {
        holds: found.witness.is_some() && beaten.witness.is_none(),
        witness: found.witness,
        certificate,
        counterexample: beaten.witness,
        nodes_explored: found.nodes_explored + beaten.nodes_explored,
        pruned_by_prefix: found.pruned_by_prefix + beaten.pruned_by_prefix,
    }
}

fn first_part_certificate(
    values: &[i64],
    total: Rational,
    direction: Direction,
) -> Option<RotationCertificate> {
    let list = CyclicList::from_integers(values.iter().copied()).ok()?;
    let cert = scan_rotation(&list, total, direction)?;
    (cert.k == 1).then_some(cert)
}

fn submasks(part: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << part.count_ones());
    let mut sub = part;
    loop {
        out.push(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & part;
    }
    out
}

struct Search<'s, 'a> {
    inst: &'s CyclicInstance<'a>,
    kind: SetKind,
    weight: Weight,
    direction: Direction,
    limits: Vec<i64>,
    subsets: Vec<Vec<u64>>,
    meter: Meter,
    pruned: u64,
}

impl Search<'_, '_> {
    fn within(&self, j: usize, prefix: i64) -> bool {
        match self.direction {
            Direction::Below => prefix <= self.limits[j],
            Direction::Above => prefix >= self.limits[j],
        }
    }

    fn dfs(&mut self, j: usize, chosen: u64, prefix: i64) -> Result<Option<u64>, DominationError> {
        let t = self.inst.t();
        if j == t {
            return Ok(self.accepts(chosen).then_some(chosen));
        }
        let subsets = std::mem::take(&mut self.subsets[j]);
        let result = self.try_part(j, chosen, prefix, &subsets);
        self.subsets[j] = subsets;
        result
    }

    fn try_part(
        &mut self,
        j: usize,
        chosen: u64,
        prefix: i64,
        subsets: &[u64],
    ) -> Result<Option<u64>, DominationError> {
        for (idx, &sub) in subsets.iter().enumerate() {
            self.meter.tick()?;
            let next = chosen | sub;
            let mut next_prefix = prefix;
            if self.weight == Weight::Count {
                next_prefix += sub.count_ones() as i64;
                if !self.within(j, next_prefix) {
                    // Subsets are ordered so every later one fails too.
                    self.pruned += (subsets.len() - idx) as u64;
                    break;
                }
                if self.direction == Direction::Above && !self.reachable_above(j, next_prefix) {
                    self.pruned += 1;
                    continue;
                }
            }
            if !self.settled_ok(j, next) {
                continue;
            }
            if self.weight == Weight::Redomination && !self.rd_bound_ok(next) {
                self.pruned += 1;
                continue;
            }
            if let Some(found) = self.dfs(j + 1, next, next_prefix)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Taking every remaining vertex must still clear each later threshold.
    fn reachable_above(&self, j: usize, prefix: i64) -> bool {
        let mut best = prefix;
        for later in j + 1..self.inst.t() {
            best += self.inst.part_masks[later].count_ones() as i64;
            if best < self.limits[later] {
                return false;
            }
        }
        true
    }

    fn settled_ok(&self, j: usize, set: u64) -> bool {
        let m = &self.inst.masks;
        bits(self.inst.settled_at[j]).all(|u| match self.kind {
            SetKind::Dominating | SetKind::MinimalDominating => m.closed[u] & set != 0,
            SetKind::TotalDominating | SetKind::MinimalTotalDominating => m.open[u] & set != 0,
            SetKind::PairedDominating => {
                m.closed[u] & set != 0 && (set & 1 << u == 0 || m.open[u] & set != 0)
            }
        })
    }

    /// Lower bounds `max(0, |N[u] ∩ set| - 1)` on the final re-domination of
    /// every vertex, summed per part, checked against every threshold.
    fn rd_bound_ok(&self, set: u64) -> bool {
        let m = &self.inst.masks;
        let mut prefix = 0;
        for (j, &part) in self.inst.part_masks.iter().enumerate() {
            prefix += bits(part)
                .map(|u| ((m.closed[u] & set).count_ones() as i64 - 1).max(0))
                .sum::<i64>();
            if prefix > self.limits[j] {
                return false;
            }
        }
        true
    }

    fn accepts(&self, set: u64) -> bool {
        let m = &self.inst.masks;
        match self.kind {
            SetKind::Dominating => m.dominates(set),
            SetKind::TotalDominating => m.totally_dominates(set),
            SetKind::PairedDominating => m.dominates(set) && m.matches(set),
            SetKind::MinimalDominating => m.dominates(set) && m.minimal_dominating(set),
            SetKind::MinimalTotalDominating => {
                m.totally_dominates(set) && m.minimal_total_dominating(set)
            }
        }
    }
}

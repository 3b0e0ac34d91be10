//! Domination predicates, private neighbourhoods, re-domination counts and
//! exact solvers.
//!
//! Sets are [`VertexSet`]s over the graph's vertex ids. The solvers in
//! [`solve`] and [`prefix`] work on 64-bit masks and accept graphs with at
//! most 64 vertices.

pub mod prefix;
pub mod solve;
pub mod torus;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::budget::BudgetExceeded;
use crate::cyclic::CyclicError;
use crate::graph::{Graph, GraphError, VertexSet};

pub use prefix::{CorollaryDecision, CyclicInstance, PrefixSearchReport, SetKind};
pub use solve::{max_minimal_parameter, min_parameter, SolveReport};
pub use torus::{
    h_pair, paired_lower_bound, reproduce_n4, reproduce_t1, verify_theorem_n4, verify_theorem_t1,
    ReproductionRow,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("vertex {0} is not in the set")]
    NotInSet(usize),
    #[error("the set is not dominating")]
    NotDominating,
    #[error("the set is not a total dominating set")]
    NotTotalDominating,
    #[error("graph is not regular")]
    NotRegular,
    #[error("exact solvers handle at most 64 vertices, got {0}")]
    TooLarge(usize),
    #[error("a part has {0} vertices; prefix searches allow at most 20")]
    PartTooLarge(usize),
    #[error("no {0:?} set exists in this graph")]
    NoSolution(Variant),
    #[error("variant {0:?} is not supported here")]
    UnsupportedVariant(Variant),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Dominating,
    TotalDominating,
    PairedDominating,
}

impl Variant {
    pub fn accepts(self, g: &Graph, s: &VertexSet) -> Result<bool, DominationError> {
        match self {
            Variant::Dominating => Ok(is_dominating(g, s)),
            Variant::TotalDominating => is_total_dominating(g, s),
            Variant::PairedDominating => Ok(is_paired_dominating(g, s)),
        }
    }
}

fn has_neighbor_in(g: &Graph, v: usize, s: &VertexSet) -> bool {
    g.neighbors(v).iter().any(|&w| s.contains(w))
}

/// Every vertex outside `d` has a neighbour in `d`.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> bool {
    (0..g.n()).all(|u| d.contains(u) || has_neighbor_in(g, u, d))
}

/// Every vertex, members included, has a neighbour in `s`.
pub fn is_total_dominating(g: &Graph, s: &VertexSet) -> Result<bool, DominationError> {
    if let Some(v) = g.isolated_vertex() {
        return Err(DominationError::IsolatedVertex(v));
    }
    Ok((0..g.n()).all(|u| has_neighbor_in(g, u, s)))
}

/// Whether `G[s]` has a perfect matching (backtracking on the lowest
/// unmatched vertex).
pub fn induced_perfect_matching_exists(g: &Graph, s: &VertexSet) -> bool {
    if s.len() % 2 == 1 {
        return false;
    }
    let members = s.to_vec();
    let mut matched = vec![false; g.n()];
    match_rest(g, s, &members, &mut matched)
}

fn match_rest(g: &Graph, s: &VertexSet, members: &[usize], matched: &mut [bool]) -> bool {
    let Some(&u) = members.iter().find(|&&v| !matched[v]) else {
        return true;
    };
    matched[u] = true;
    for &w in g.neighbors(u) {
        if s.contains(w) && !matched[w] {
            matched[w] = true;
            if match_rest(g, s, members, matched) {
                return true;
            }
            matched[w] = false;
        }
    }
    matched[u] = false;
    false
}

/// Dominating and `G[s]` has a perfect matching.
pub fn is_paired_dominating(g: &Graph, s: &VertexSet) -> bool {
    is_dominating(g, s) && induced_perfect_matching_exists(g, s)
}

/// Open private neighbourhood: vertices whose only neighbour in `s` is `v`.
pub fn pn(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet, DominationError> {
    if !s.contains(v) {
        return Err(DominationError::NotInSet(v));
    }
    let mut out = VertexSet::new(g.n());
    for w in 0..g.n() {
        let mut in_s = g.neighbors(w).iter().filter(|&&x| s.contains(x));
        if in_s.next() == Some(&v) && in_s.next().is_none() {
            out.insert(w);
        }
    }
    Ok(out)
}

/// Private neighbours of `v` outside `s`.
pub fn epn(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet, DominationError> {
    let mut out = pn(g, s, v)?;
    for w in s.iter() {
        out.remove(w);
    }
    Ok(out)
}

/// Private neighbours of `v` inside `s`.
pub fn ipn(g: &Graph, s: &VertexSet, v: usize) -> Result<VertexSet, DominationError> {
    let all = pn(g, s, v)?;
    VertexSet::from_ids(g.n(), all.iter().filter(|&w| s.contains(w))).map_err(Into::into)
}

/// Minimality of a TD-set through private neighbours: every member needs
/// a nonempty internal or external private neighbourhood.
pub fn is_minimal_total_dominating(g: &Graph, s: &VertexSet) -> Result<bool, DominationError> {
    if !is_total_dominating(g, s)? {
        return Err(DominationError::NotTotalDominating);
    }
    for v in s.iter() {
        if ipn(g, s, v)?.is_empty() && epn(g, s, v)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No single removal leaves a dominating set.
pub fn is_minimal_dominating(g: &Graph, d: &VertexSet) -> Result<bool, DominationError> {
    if !is_dominating(g, d) {
        return Err(DominationError::NotDominating);
    }
    Ok(d.iter().all(|v| !is_dominating(g, &d.without(v))))
}

/// `|N[u] ∩ s| - 1`; equals `-1` when `u` is not dominated.
pub fn rd_vertex(g: &Graph, s: &VertexSet, u: usize) -> i64 {
    let inside =
        g.neighbors(u).iter().filter(|&&w| s.contains(w)).count() + usize::from(s.contains(u));
    inside as i64 - 1
}

pub fn rd_set(g: &Graph, s: &VertexSet, vertices: &[usize]) -> i64 {
    vertices.iter().map(|&u| rd_vertex(g, s, u)).sum()
}

pub fn rd_graph(g: &Graph, s: &VertexSet) -> i64 {
    (0..g.n()).map(|u| rd_vertex(g, s, u)).sum()
}

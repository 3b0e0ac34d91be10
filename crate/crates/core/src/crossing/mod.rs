//! Combinatorial drawings: which pairs of edges cross, and nothing else.
//!
//! Realizability is never checked; the Jordan parity screen can only refute
//! it. All weights are kept doubled so that half crossings stay integral.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::cyclic::{
    check_epsilon, find_rotation, CyclicError, CyclicList, Direction, RotationCertificate,
};
use crate::graph::{
    canonical_periodic_decomposition, normalize, tile_close, Cycle, Edge, EdgeDecomposition, Graph,
    GraphError, Tile,
};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossingError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error("edge {0}-{1} is not in the graph")]
    UnknownEdge(usize, usize),
    #[error("edge {0}-{1} is on both sides")]
    Overlap(usize, usize),
    #[error("the cycles share vertex {0}")]
    CyclesNotDisjoint(usize),
    #[error("the drawing is not of the closed tile graph")]
    GraphMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractDrawing {
    graph: Graph,
    surface: String,
    /// Edge-id pairs `(a, b)` with `a <= b`, as supplied (duplicates kept so
    /// that validation can report them).
    crossings: Vec<(usize, usize)>,
}

impl AbstractDrawing {
    pub fn new(
        graph: Graph,
        surface: impl Into<String>,
        crossings: impl IntoIterator<Item = (Edge, Edge)>,
    ) -> Result<AbstractDrawing, CrossingError> {
        let id = |(u, v): Edge| graph.edge_id(u, v).ok_or(CrossingError::UnknownEdge(u, v));
        let crossings = crossings
            .into_iter()
            .map(|(e, f)| {
                let (a, b) = (id(e)?, id(f)?);
                Ok((a.min(b), a.max(b)))
            })
            .collect::<Result<Vec<_>, CrossingError>>()?;
        Ok(AbstractDrawing {
            graph,
            surface: surface.into(),
            crossings,
        })
    }

    /// A plane drawing with no crossings.
    pub fn embedding(graph: Graph) -> AbstractDrawing {
        AbstractDrawing {
            graph,
            surface: "plane".into(),
            crossings: Vec::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn surface(&self) -> &str {
        &self.surface
    }

    pub fn crossing_ids(&self) -> &[(usize, usize)] {
        &self.crossings
    }

    /// Crossing pairs as vertex pairs, in input order.
    pub fn crossing_edges(&self) -> Vec<(Edge, Edge)> {
        let e = self.graph.edges();
        self.crossings.iter().map(|&(a, b)| (e[a], e[b])).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    /// An edge listed as crossing itself.
    #[serde(rename = "self")]
    SelfCrossing,
    Adjacent,
    Multiplicity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub first: Edge,
    pub second: Edge,
}

/// Every good-drawing constraint that the crossing list breaks.
pub fn validate_drawing(d: &AbstractDrawing) -> Vec<Violation> {
    let edges = d.graph.edges();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &(a, b) in &d.crossings {
        let (first, second) = (edges[a], edges[b]);
        let rule = if a == b {
            Some(Rule::SelfCrossing)
        } else if shares_endpoint(first, second) {
            Some(Rule::Adjacent)
        } else if !seen.insert((a, b)) {
            Some(Rule::Multiplicity)
        } else {
            None
        };
        if let Some(rule) = rule {
            out.push(Violation {
                rule,
                first,
                second,
            });
        }
    }
    out
}

fn shares_endpoint((a, b): Edge, (c, d): Edge) -> bool {
    a == c || a == d || b == c || b == d
}

pub fn cr_total(d: &AbstractDrawing) -> usize {
    d.crossings.len()
}

fn edge_mask(d: &AbstractDrawing, side: &[Edge]) -> Result<Vec<bool>, CrossingError> {
    let mut mask = vec![false; d.graph.m()];
    for &(u, v) in side {
        let id = d
            .graph
            .edge_id(u, v)
            .ok_or(CrossingError::UnknownEdge(u, v))?;
        mask[id] = true;
    }
    Ok(mask)
}

/// Crossings with both edges in `a`.
pub fn cr_within(d: &AbstractDrawing, a: &[Edge]) -> Result<usize, CrossingError> {
    let mask = edge_mask(d, a)?;
    Ok(d.crossings
        .iter()
        .filter(|&&(x, y)| mask[x] && mask[y])
        .count())
}

/// Crossings with one edge in `a` and the other in `b`.
pub fn cr_between(d: &AbstractDrawing, a: &[Edge], b: &[Edge]) -> Result<usize, CrossingError> {
    let ma = edge_mask(d, a)?;
    let mb = edge_mask(d, b)?;
    if let Some(id) = (0..ma.len()).find(|&i| ma[i] && mb[i]) {
        let (u, v) = d.graph.edges()[id];
        return Err(CrossingError::Overlap(u, v));
    }
    Ok(d.crossings
        .iter()
        .filter(|&&(x, y)| (ma[x] && mb[y]) || (ma[y] && mb[x]))
        .count())
}

/// Per-piece weights `W_i = 2 cr(H_i) + cr(H_i, rest)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubledWeightList {
    pub weights: Vec<u64>,
}

impl DoubledWeightList {
    pub fn total(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// The actual weights `W_i / 2`.
    pub fn halves(&self) -> Result<CyclicList, CrossingError> {
        let values = self
            .weights
            .iter()
            .map(|&w| Rational::from_integer(w as i64) * Rational::HALF)
            .collect();
        Ok(CyclicList::new(values)?)
    }
}

pub fn decomposition_weights(
    d: &AbstractDrawing,
    decomp: &EdgeDecomposition,
) -> Result<DoubledWeightList, CrossingError> {
    decomp.validate(&d.graph)?;
    let owner = decomp.edge_owners(&d.graph);
    let mut weights = vec![0u64; decomp.len()];
    for &(a, b) in &d.crossings {
        weights[owner[a]] += 1;
        weights[owner[b]] += 1;
    }
    Ok(DoubledWeightList { weights })
}

/// Vertices on a circle in the given order, edges as straight chords.
pub fn convex_drawing(g: &Graph, order: &[usize]) -> Result<AbstractDrawing, CrossingError> {
    crate::graph::check_permutation(order, g.n())?;
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let edges = g.edges();
    let mut crossings = Vec::new();
    for a in 0..edges.len() {
        let (lo, hi) = span(edges[a], &pos);
        let inside = |v: usize| lo < pos[v] && pos[v] < hi;
        for b in a + 1..edges.len() {
            let (c, d) = edges[b];
            if !shares_endpoint(edges[a], edges[b]) && inside(c) != inside(d) {
                crossings.push((a, b));
            }
        }
    }
    Ok(AbstractDrawing {
        graph: g.clone(),
        surface: "plane".into(),
        crossings,
    })
}

fn span((u, v): Edge, pos: &[usize]) -> (usize, usize) {
    (pos[u].min(pos[v]), pos[u].max(pos[v]))
}

/// Rotation certificate on `W_i / 2` against `h + eps` (below) or `h - eps`
/// (above). Below with `h = 0` certifies an embedding.
pub fn prefix_cr_certificate(
    weights: &DoubledWeightList,
    h: i64,
    epsilon: Rational,
    direction: Direction,
) -> Result<Option<RotationCertificate>, CrossingError> {
    check_epsilon(epsilon)?;
    let h = Rational::from_integer(h);
    let bound = match direction {
        Direction::Below => h + epsilon,
        Direction::Above => h - epsilon,
    };
    Ok(find_rotation(&weights.halves()?, bound, direction))
}

/// Below-certificate for a drawing of the closed tile graph, weighted by the
/// canonical periodic decomposition.
pub fn periodic_prefix_certificate(
    tile: &Tile,
    t: usize,
    d: &AbstractDrawing,
    h: i64,
    epsilon: Rational,
) -> Result<Option<RotationCertificate>, CrossingError> {
    if tile_close(tile, t)? != d.graph {
        return Err(CrossingError::GraphMismatch);
    }
    let decomp = canonical_periodic_decomposition(tile, t)?;
    let weights = decomposition_weights(d, &decomp)?;
    prefix_cr_certificate(&weights, h, epsilon, Direction::Below)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Parity of the crossings between two vertex-disjoint cycles. In a plane
/// drawing it is always even, so `Odd` proves the drawing unrealizable.
pub fn jordan_parity_screen(
    d: &AbstractDrawing,
    c1: &Cycle,
    c2: &Cycle,
) -> Result<Parity, CrossingError> {
    if let Some(&v) = c1.vertices().iter().find(|v| c2.vertices().contains(v)) {
        return Err(CrossingError::CyclesNotDisjoint(v));
    }
    let count = cr_between(d, &c1.edges(), &c2.edges())?;
    Ok(if count % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    })
}

/// Edge pairs that a good drawing may cross: distinct and non-adjacent.
pub fn crossable_pairs(g: &Graph) -> Vec<(Edge, Edge)> {
    let edges = g.edges();
    let mut out = Vec::new();
    for a in 0..edges.len() {
        for b in a + 1..edges.len() {
            if !shares_endpoint(edges[a], edges[b]) {
                out.push((edges[a], edges[b]));
            }
        }
    }
    out
}

/// Normalises both edges of a crossing pair and orders the pair.
pub fn normalize_pair(e: Edge, f: Edge) -> (Edge, Edge) {
    let (e, f) = (normalize(e.0, e.1), normalize(f.0, f.1));
    (e.min(f), e.max(f))
}

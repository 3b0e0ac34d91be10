//! Cyclically ordered vertex partitions and edge decompositions, and the
//! window test for transitivity.
//!
//! A window of length `L` starting at `i` is the union of parts (pieces)
//! `i, i+1, .., i+L-1`, indices mod `t`. A structure is transitive when, for
//! every length `1 <= L <= t`, all `t` windows of that length are isomorphic:
//! induced subgraphs for partitions, declared vertex sets plus piece edges
//! for decompositions.

use std::collections::BTreeSet;

use super::{iso::isomorphic, normalize, Edge, Graph, GraphError};
use crate::budget::Budget;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    n: usize,
    parts: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// Checks that the parts are nonempty, disjoint and cover `0..n`.
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<VertexPartition, GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidPartition(msg));
        if parts.is_empty() {
            return bad("no parts".into());
        }
        let mut owner = vec![usize::MAX; n];
        let mut parts = parts;
        for (i, part) in parts.iter_mut().enumerate() {
            if part.is_empty() {
                return bad(format!("part {i} is empty"));
            }
            part.sort_unstable();
            for &v in part.iter() {
                if v >= n {
                    return bad(format!("vertex {v} out of range"));
                }
                if owner[v] != usize::MAX {
                    return bad(format!("vertex {v} is in parts {} and {i}", owner[v]));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return bad(format!("vertex {v} is in no part"));
        }
        Ok(VertexPartition { n, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        if self.n != g.n() {
            return Err(GraphError::InvalidPartition(format!(
                "partition covers {} vertices, graph has {}",
                self.n,
                g.n()
            )));
        }
        Ok(())
    }

    /// Part index of every vertex.
    pub fn owners(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                owner[v] = i;
            }
        }
        owner
    }

    /// Sorted union of `len` consecutive parts starting at `start`.
    pub fn window(&self, start: usize, len: usize) -> Vec<usize> {
        let t = self.len();
        let mut vs: Vec<usize> = (0..len.min(t))
            .flat_map(|j| self.parts[(start + j) % t].iter().copied())
            .collect();
        vs.sort_unstable();
        vs
    }
}

/// Subgraph of a decomposition: a declared vertex set and its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub vertices: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl Piece {
    pub fn new(vertices: Vec<usize>, edges: Vec<Edge>) -> Piece {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        let mut edges: Vec<Edge> = edges.into_iter().map(|(u, v)| normalize(u, v)).collect();
        edges.sort_unstable();
        Piece {
            vertices: vertices.into_iter().collect(),
            edges,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeDecomposition {
    pieces: Vec<Piece>,
}

impl EdgeDecomposition {
    pub fn new(pieces: Vec<Piece>) -> EdgeDecomposition {
        EdgeDecomposition { pieces }
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    /// Every edge of `g` in exactly one piece, every piece edge inside its
    /// declared vertex set.
    pub fn validate(&self, g: &Graph) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidDecomposition(msg));
        if self.pieces.is_empty() {
            return bad("no pieces".into());
        }
        let mut owner = vec![usize::MAX; g.m()];
        for (i, piece) in self.pieces.iter().enumerate() {
            if let Some(&v) = piece.vertices.iter().find(|&&v| v >= g.n()) {
                return bad(format!("piece {i} declares vertex {v} out of range"));
            }
            for &(u, v) in &piece.edges {
                let Some(id) = g.edge_id(u, v) else {
                    return bad(format!("piece {i} has edge {u}-{v} not in the graph"));
                };
                if piece.vertices.binary_search(&u).is_err()
                    || piece.vertices.binary_search(&v).is_err()
                {
                    return bad(format!("piece {i} edge {u}-{v} leaves its vertex set"));
                }
                if owner[id] != usize::MAX {
                    return bad(format!("edge {u}-{v} is in pieces {} and {i}", owner[id]));
                }
                owner[id] = i;
            }
        }
        if let Some(id) = owner.iter().position(|&o| o == usize::MAX) {
            let (u, v) = g.edges()[id];
            return bad(format!("edge {u}-{v} is in no piece"));
        }
        Ok(())
    }

    /// Piece index of every edge id of `g` (assumes a valid decomposition).
    pub fn edge_owners(&self, g: &Graph) -> Vec<usize> {
        let mut owner = vec![usize::MAX; g.m()];
        for (i, piece) in self.pieces.iter().enumerate() {
            for &(u, v) in &piece.edges {
                if let Some(id) = g.edge_id(u, v) {
                    owner[id] = i;
                }
            }
        }
        owner
    }

    /// Union of `len` consecutive pieces starting at `start`.
    pub fn window(&self, start: usize, len: usize) -> Piece {
        let t = self.len();
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for j in 0..len.min(t) {
            let piece = &self.pieces[(start + j) % t];
            vertices.extend(piece.vertices.iter().copied());
            edges.extend(piece.edges.iter().copied());
        }
        Piece {
            vertices: vertices.into_iter().collect(),
            edges: edges.into_iter().collect(),
        }
    }
}

/// Window test on a vertex partition (induced subgraphs).
pub fn is_transitive_partition(g: &Graph, p: &VertexPartition) -> Result<bool, GraphError> {
    p.validate(g)?;
    windows_all_isomorphic(p.len(), |start, len| Ok(g.induced(&p.window(start, len))))
}

/// Window test on an edge decomposition (declared vertex sets kept, so
/// isolated declared vertices count).
pub fn is_transitive_decomposition(g: &Graph, d: &EdgeDecomposition) -> Result<bool, GraphError> {
    d.validate(g)?;
    windows_all_isomorphic(d.len(), |start, len| {
        let w = d.window(start, len);
        g.subgraph(&w.vertices, &w.edges)
    })
}

fn windows_all_isomorphic<F>(t: usize, window: F) -> Result<bool, GraphError>
where
    F: Fn(usize, usize) -> Result<Graph, GraphError>,
{
    for len in 1..=t {
        let base = window(0, len)?;
        for start in 1..t {
            if !isomorphic(&base, &window(start, len)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exhaustive search for a transitive partition into `t` cyclically ordered
/// parts. Vertex 0 is pinned to the first part, which removes rotations.
///
/// Single-part windows must be isomorphic, so the parts of a transitive
/// partition have equal size and `t` must divide `|V|`.
pub fn find_transitive_partition(
    g: &Graph,
    t: usize,
    budget: Budget,
) -> Result<Option<VertexPartition>, GraphError> {
    let n = g.n();
    if t == 0 || t > n {
        return Err(GraphError::Size(format!("need 1 <= t <= {n}, got {t}")));
    }
    if !n.is_multiple_of(t) {
        return Ok(None);
    }
    let mut search = PartitionSearch {
        g,
        t,
        capacity: n / t,
        assignment: vec![usize::MAX; n],
        fill: vec![0; t],
        meter: budget.meter(),
    };
    search.assign(0)
}

struct PartitionSearch<'a> {
    g: &'a Graph,
    t: usize,
    capacity: usize,
    assignment: Vec<usize>,
    fill: Vec<usize>,
    meter: crate::budget::Meter,
}

impl PartitionSearch<'_> {
    fn assign(&mut self, v: usize) -> Result<Option<VertexPartition>, GraphError> {
        self.meter.tick()?;
        let n = self.g.n();
        if v == n {
            let mut parts = vec![Vec::new(); self.t];
            for (u, &p) in self.assignment.iter().enumerate() {
                parts[p].push(u);
            }
            let candidate = VertexPartition::new(n, parts)?;
            return Ok(is_transitive_partition(self.g, &candidate)?.then_some(candidate));
        }
        let choices = if v == 0 { 0..1 } else { 0..self.t };
        for part in choices {
            if self.fill[part] == self.capacity {
                continue;
            }
            self.assignment[v] = part;
            self.fill[part] += 1;
            let found = self.assign(v + 1)?;
            self.fill[part] -= 1;
            if found.is_some() {
                return Ok(found);
            }
        }
        self.assignment[v] = usize::MAX;
        Ok(None)
    }
}

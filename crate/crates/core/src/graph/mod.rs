//! Simple undirected graphs and the structures built on them.

mod cycles;
mod generators;
mod iso;
mod structure;
mod symmetry;
mod tile;
mod vertex_set;

use thiserror::Error;

use crate::budget::BudgetExceeded;

pub use cycles::{simple_cycles_up_to, Cycle};
pub use generators::{
    cartesian_cycles, circulant, circulant14_decomposition, columns_partition, complete,
    complete_bipartite, cycle, star_decomposition_bipartite, star_decomposition_complete,
    torus_vertex,
};
pub use iso::{isomorphic, isomorphic_with_budget, DEFAULT_ISO_NODES};
pub use structure::{
    find_transitive_partition, is_transitive_decomposition, is_transitive_partition,
    EdgeDecomposition, Piece, VertexPartition,
};
pub use symmetry::{column_shift_symmetry, verify_cyclic_symmetry, CyclicSymmetry};
pub use tile::{
    canonical_periodic_decomposition, periodic_closure, tile_close, tile_concat, tile_power,
    PeriodicClosure, Tile,
};
pub use vertex_set::VertexSet;

/// An undirected edge stored as `(min, max)`.
pub type Edge = (usize, usize);

pub fn normalize(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("invalid size: {0}")]
    Size(String),
    #[error("tile widths differ: {0} vs {1}")]
    WidthMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("not a permutation of the vertex set")]
    NotPermutation,
    #[error("not an automorphism: edge {0}-{1} maps to a non-edge")]
    NotAutomorphism(usize, usize),
    #[error("not a cyclic shift: part {0} does not map onto part {1}")]
    NotPartShift(usize, usize),
    #[error(transparent)]
    Budget(#[from] BudgetExceeded),
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are kept sorted; an edge's position in [`Graph::edges`] is its id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edges: Vec::new(),
        }
    }

    /// Builds a graph, rejecting loops, repeated edges and unknown vertices.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            list.push(normalize(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::ParallelEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph { adj, edges: list })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&normalize(u, v)).ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|row| row.len() == k).then_some(k)
    }

    pub fn isolated_vertex(&self) -> Option<usize> {
        self.adj.iter().position(Vec::is_empty)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable();
        d
    }

    /// Open neighbourhoods as bit masks; `None` above 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|row| row.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect(),
        )
    }

    /// Induced subgraph on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::from_edges(vertices.len(), edges).expect("induced subgraph of a simple graph")
    }

    /// Graph on the declared `vertices` carrying the given edges, relabelled
    /// in the order of `vertices`.
    pub fn subgraph(&self, vertices: &[usize], edges: &[Edge]) -> Result<Graph, GraphError> {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n(),
                });
            }
            index[v] = i;
        }
        let mut relabelled = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if !self.has_edge(u, v) {
                return Err(GraphError::MissingEdge(u, v));
            }
            if index[u] == usize::MAX || index[v] == usize::MAX {
                return Err(GraphError::InvalidDecomposition(format!(
                    "edge {u}-{v} has an endpoint outside its vertex set"
                )));
            }
            relabelled.push((index[u], index[v]));
        }
        Graph::from_edges(vertices.len(), relabelled)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.has_edge(u, v));
        Graph::from_edges(n, edges).expect("complement of a simple graph")
    }

    /// Image of the graph under `perm` (vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        check_permutation(perm, self.n())?;
        Graph::from_edges(
            self.n(),
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<(), GraphError> {
    if perm.len() != n {
        return Err(GraphError::NotPermutation);
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return Err(GraphError::NotPermutation);
        }
    }
    Ok(())
}

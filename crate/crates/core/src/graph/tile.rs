//! Tiles `(G, L, R)` and the periodic graphs obtained by closing `t` copies
//! into a ring.
//!
//! Only simple graphs are supported: a composition that would create a loop
//! or a repeated edge is rejected instead of being simplified.

use super::{CyclicSymmetry, EdgeDecomposition, Graph, GraphError, Piece, VertexPartition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    graph: Graph,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Tile {
    pub fn new(graph: Graph, left: Vec<usize>, right: Vec<usize>) -> Result<Tile, GraphError> {
        if left.len() != right.len() {
            return Err(GraphError::WidthMismatch(left.len(), right.len()));
        }
        for &v in left.iter().chain(&right) {
            graph.check_vertex(v)?;
        }
        Ok(Tile { graph, left, right })
    }

    pub fn width(&self) -> usize {
        self.left.len()
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn left(&self) -> &[usize] {
        &self.left
    }

    pub fn right(&self) -> &[usize] {
        &self.right
    }
}

/// `Q1 Q2`: disjoint union (ids of `Q1` first) plus edges `R1[j] - L2[j]`.
pub fn tile_concat(first: &Tile, second: &Tile) -> Result<Tile, GraphError> {
    if first.width() != second.width() {
        return Err(GraphError::WidthMismatch(first.width(), second.width()));
    }
    let offset = first.graph.n();
    let edges = first
        .graph
        .edges()
        .iter()
        .copied()
        .chain(
            second
                .graph
                .edges()
                .iter()
                .map(|&(u, v)| (u + offset, v + offset)),
        )
        .chain(
            first
                .right
                .iter()
                .zip(&second.left)
                .map(|(&r, &l)| (r, l + offset)),
        );
    let graph = Graph::from_edges(offset + second.graph.n(), edges)?;
    Tile::new(
        graph,
        first.left.clone(),
        second.right.iter().map(|&r| r + offset).collect(),
    )
}

/// `Q^t` for `t >= 1`.
pub fn tile_power(tile: &Tile, t: usize) -> Result<Tile, GraphError> {
    if t == 0 {
        return Err(GraphError::Size("tile power needs t >= 1".into()));
    }
    let mut acc = tile.clone();
    for _ in 1..t {
        acc = tile_concat(&acc, tile)?;
    }
    Ok(acc)
}

/// The periodic graph: `Q^t` plus the closing edges `L1[j] - R_t[j]`.
pub fn tile_close(tile: &Tile, t: usize) -> Result<Graph, GraphError> {
    if t < 2 {
        return Err(GraphError::Size(format!(
            "closing a tile needs t >= 2, got {t}"
        )));
    }
    let power = tile_power(tile, t)?;
    let closing = power.left.iter().zip(&power.right).map(|(&l, &r)| (l, r));
    Graph::from_edges(
        power.graph.n(),
        power.graph.edges().iter().copied().chain(closing),
    )
}

/// A closed ring of tile copies with its canonical structures.
#[derive(Debug, Clone)]
pub struct PeriodicClosure {
    pub graph: Graph,
    /// Piece `i`: copy `i` plus the external edges from copy `i` to `i + 1`.
    pub decomposition: EdgeDecomposition,
    /// Part `i`: the vertices of copy `i`.
    pub copies: VertexPartition,
    /// Shift of every vertex to the same vertex in the next copy.
    pub shift: CyclicSymmetry,
}

pub fn periodic_closure(tile: &Tile, t: usize) -> Result<PeriodicClosure, GraphError> {
    if t < 2 {
        return Err(GraphError::Size(format!(
            "closing a tile needs t >= 2, got {t}"
        )));
    }
    let size = tile.graph.n();
    let at = |copy: usize, v: usize| (copy % t) * size + v;
    let mut pieces = Vec::with_capacity(t);
    for copy in 0..t {
        let mut vertices: Vec<usize> = (0..size).map(|v| at(copy, v)).collect();
        let mut edges: Vec<_> = tile
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| (at(copy, u), at(copy, v)))
            .collect();
        for (&r, &l) in tile.right.iter().zip(&tile.left) {
            vertices.push(at(copy + 1, l));
            edges.push((at(copy, r), at(copy + 1, l)));
        }
        pieces.push(Piece::new(vertices, edges));
    }
    let graph = Graph::from_edges(
        t * size,
        pieces.iter().flat_map(|p| p.edges.iter().copied()),
    )?;
    let copies = VertexPartition::new(
        t * size,
        (0..t)
            .map(|c| (0..size).map(|v| at(c, v)).collect())
            .collect(),
    )?;
    let shift = CyclicSymmetry::new((0..t * size).map(|x| at(x / size + 1, x % size)).collect())?;
    Ok(PeriodicClosure {
        graph,
        decomposition: EdgeDecomposition::new(pieces),
        copies,
        shift,
    })
}

/// The decomposition `G_1^+, .., G_t^+` of the closure of `Q^t`.
pub fn canonical_periodic_decomposition(
    tile: &Tile,
    t: usize,
) -> Result<EdgeDecomposition, GraphError> {
    periodic_closure(tile, t).map(|c| c.decomposition)
}

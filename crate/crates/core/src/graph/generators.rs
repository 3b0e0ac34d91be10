//! Standard graph families and their natural partitions/decompositions.

use std::collections::BTreeSet;

use super::{normalize, EdgeDecomposition, Graph, GraphError, Piece, VertexPartition};

fn size_error(msg: impl Into<String>) -> GraphError {
    GraphError::Size(msg.into())
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(size_error(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(size_error("complete graph needs n >= 1"));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{m,n}` with side `U = 0..m` and side `W = m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m == 0 || n == 0 {
        return Err(size_error(format!(
            "K_{{m,n}} needs m, n >= 1, got {m}, {n}"
        )));
    }
    Graph::from_edges(m + n, (0..m).flat_map(|u| (0..n).map(move |j| (u, m + j))))
}

/// Id of `u_{i,j}` in `C_m [] C_n`.
pub fn torus_vertex(i: usize, j: usize, n: usize) -> usize {
    i * n + j
}

/// `C_m [] C_n`: `u_{i,j}` adjacent to `u_{i,j+1}` and `u_{i+1,j}`.
pub fn cartesian_cycles(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m < 3 || n < 3 {
        return Err(size_error(format!(
            "C_m [] C_n needs m, n >= 3, got {m}, {n}"
        )));
    }
    let edges = (0..m).flat_map(|i| {
        (0..n).flat_map(move |j| {
            [
                (torus_vertex(i, j, n), torus_vertex(i, (j + 1) % n, n)),
                (torus_vertex(i, j, n), torus_vertex((i + 1) % m, j, n)),
            ]
        })
    });
    Graph::from_edges(m * n, edges)
}

/// Circulant `C(n; S)` on `Z_n` with edges `{i, i + a}`, `a` in `S`.
pub fn circulant(n: usize, strides: &[usize]) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(size_error(format!("circulant needs n >= 3, got {n}")));
    }
    if strides.is_empty() {
        return Err(size_error("circulant needs at least one stride"));
    }
    let distinct: BTreeSet<usize> = strides.iter().copied().collect();
    if distinct.len() != strides.len() {
        return Err(size_error("circulant strides must be distinct"));
    }
    if let Some(&a) = strides.iter().find(|&&a| a == 0 || a > n / 2) {
        return Err(size_error(format!("stride {a} outside 1..={}", n / 2)));
    }
    let edges: BTreeSet<_> = strides
        .iter()
        .flat_map(|&a| (0..n).map(move |i| normalize(i, (i + a) % n)))
        .collect();
    Graph::from_edges(n, edges)
}

/// Columns `V_j = {u_{i,j} : 0 <= i < m}` of `C_m [] C_n`, in cyclic order.
pub fn columns_partition(m: usize, n: usize) -> Result<VertexPartition, GraphError> {
    VertexPartition::new(
        m * n,
        (0..n)
            .map(|j| (0..m).map(|i| torus_vertex(i, j, n)).collect())
            .collect(),
    )
}

/// Stars of `K_{m,n}`: piece `i` is `u_i` joined to all of `W`.
pub fn star_decomposition_bipartite(m: usize, n: usize) -> Result<EdgeDecomposition, GraphError> {
    complete_bipartite(m, n)?;
    let pieces = (0..m)
        .map(|u| {
            let vertices = std::iter::once(u).chain(m..m + n).collect();
            let edges = (m..m + n).map(|w| (u, w)).collect();
            Piece::new(vertices, edges)
        })
        .collect();
    Ok(EdgeDecomposition::new(pieces))
}

/// Half-stars of `K_n` for odd `n`: piece `i` holds `v_i v_{i+j}` for
/// `1 <= j <= (n-1)/2` on the vertices `v_i..v_{i+(n-1)/2}`.
pub fn star_decomposition_complete(n: usize) -> Result<EdgeDecomposition, GraphError> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(size_error(format!(
            "half-star decomposition needs odd n >= 3, got {n}"
        )));
    }
    let half = (n - 1) / 2;
    let pieces = (0..n)
        .map(|i| {
            let vertices = (0..=half).map(|j| (i + j) % n).collect();
            let edges = (1..=half).map(|j| normalize(i, (i + j) % n)).collect();
            Piece::new(vertices, edges)
        })
        .collect();
    Ok(EdgeDecomposition::new(pieces))
}

/// Pieces `H_i = {v_i v_{i+1}, v_i v_{i+4}}` of `C(4k; {1,4})`.
pub fn circulant14_decomposition(k: usize) -> Result<EdgeDecomposition, GraphError> {
    if k < 3 {
        return Err(size_error(format!(
            "C(4k;{{1,4}}) decomposition needs k >= 3, got {k}"
        )));
    }
    let n = 4 * k;
    let pieces = (0..n)
        .map(|i| {
            let vertices = vec![i, (i + 1) % n, (i + 4) % n];
            let edges = vec![normalize(i, (i + 1) % n), normalize(i, (i + 4) % n)];
            Piece::new(vertices, edges)
        })
        .collect();
    Ok(EdgeDecomposition::new(pieces))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_families() {
        let c3 = cycle(3).unwrap();
        assert_eq!((c3.n(), c3.m()), (3, 3));
        assert_eq!(complete(5).unwrap().m(), 10);
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.m(), 6);
        assert_eq!(
            (0..5).map(|v| k23.degree(v)).collect::<Vec<_>>(),
            vec![3, 3, 2, 2, 2]
        );
        assert!(cycle(2).is_err());
        assert!(complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn torus_counts() {
        let g = cartesian_cycles(3, 3).unwrap();
        assert_eq!((g.n(), g.m(), g.regular_degree()), (9, 18, Some(4)));
        let g = cartesian_cycles(5, 4).unwrap();
        assert_eq!((g.n(), g.m()), (20, 40));
        assert_eq!(cartesian_cycles(4, 3).unwrap().regular_degree(), Some(4));
        for m in 3..=6 {
            for n in 3..=6 {
                assert_eq!(cartesian_cycles(m, n).unwrap().m(), 2 * m * n);
            }
        }
        assert!(cartesian_cycles(2, 5).is_err());
    }

    #[test]
    fn circulant_counts() {
        // Stride 4 in Z_8 pairs i with i+4: only 4 distinct diameters.
        let g = circulant(8, &[1, 4]).unwrap();
        assert_eq!((g.n(), g.m()), (8, 12));
        assert_eq!(circulant(12, &[1, 4]).unwrap().m(), 24);
        assert_eq!(circulant(5, &[1, 2]).unwrap(), complete(5).unwrap());
        for k in 3..=8 {
            assert_eq!(circulant(4 * k, &[1, 4]).unwrap().m(), 8 * k);
        }
        assert!(circulant(8, &[5]).is_err());
        assert!(circulant(8, &[1, 1]).is_err());
        assert!(circulant(8, &[]).is_err());
    }

    #[test]
    fn columns() {
        let p = columns_partition(3, 4).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.parts().iter().all(|part| part.len() == 3));
        assert_eq!(columns_partition(5, 6).unwrap().len(), 6);
        let g = cartesian_cycles(4, 5).unwrap();
        for part in columns_partition(4, 5).unwrap().parts() {
            let column = g.induced(part);
            assert_eq!((column.m(), column.regular_degree()), (4, Some(2)));
        }
    }

    #[test]
    fn decompositions_partition_edges() {
        let d = star_decomposition_bipartite(2, 3).unwrap();
        assert_eq!(d.len(), 2);
        assert!(d.pieces().iter().all(|p| p.edges.len() == 3));
        d.validate(&complete_bipartite(2, 3).unwrap()).unwrap();
        let d = star_decomposition_bipartite(3, 3).unwrap();
        assert_eq!(d.len(), 3);
        d.validate(&complete_bipartite(3, 3).unwrap()).unwrap();

        let d = star_decomposition_complete(13).unwrap();
        assert_eq!(d.len(), 13);
        assert!(d.pieces().iter().all(|p| p.edges.len() == 6));
        d.validate(&complete(13).unwrap()).unwrap();
        assert_eq!(star_decomposition_complete(5).unwrap().len(), 5);
        let d3 = star_decomposition_complete(3).unwrap();
        assert!(d3.pieces().iter().all(|p| p.edges.len() == 1));
        d3.validate(&cycle(3).unwrap()).unwrap();
        assert!(star_decomposition_complete(6).is_err());

        let d = circulant14_decomposition(5).unwrap();
        assert_eq!(d.len(), 20);
        d.validate(&circulant(20, &[1, 4]).unwrap()).unwrap();
        assert_eq!(circulant14_decomposition(4).unwrap().len(), 16);
        assert!(circulant14_decomposition(2).is_err());
    }
}

//! Automorphisms that rotate a partition by one part.
//!
//! Prefix searches fix the rotation start at the first part; that is only
//! sound when some automorphism carries part `i` onto part `i + 1`.

use super::{check_permutation, torus_vertex, Graph, GraphError, VertexPartition, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicSymmetry {
    sigma: Vec<usize>,
}

impl CyclicSymmetry {
    pub fn new(sigma: Vec<usize>) -> Result<CyclicSymmetry, GraphError> {
        check_permutation(&sigma, sigma.len())?;
        Ok(CyclicSymmetry { sigma })
    }

    pub fn identity(n: usize) -> CyclicSymmetry {
        CyclicSymmetry {
            sigma: (0..n).collect(),
        }
    }

    pub fn image(&self, v: usize) -> usize {
        self.sigma[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    /// `sigma` applied `times` times.
    pub fn power(&self, times: usize) -> CyclicSymmetry {
        let mut sigma: Vec<usize> = (0..self.sigma.len()).collect();
        for _ in 0..times {
            for s in sigma.iter_mut() {
                *s = self.sigma[*s];
            }
        }
        CyclicSymmetry { sigma }
    }

    pub fn apply(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(set.universe());
        for v in set.iter() {
            out.insert(self.sigma[v]);
        }
        out
    }
}

/// `u_{i,j} -> u_{i,j+1}` on `C_m [] C_n`, shifting each column to the next.
pub fn column_shift_symmetry(m: usize, n: usize) -> CyclicSymmetry {
    let mut sigma = vec![0; m * n];
    for i in 0..m {
        for j in 0..n {
            sigma[torus_vertex(i, j, n)] = torus_vertex(i, (j + 1) % n, n);
        }
    }
    CyclicSymmetry { sigma }
}

/// Checks that `sigma` is an automorphism of `g` mapping part `i` of `p`
/// onto part `i + 1 (mod t)`. The two failure kinds are reported apart.
pub fn verify_cyclic_symmetry(
    g: &Graph,
    p: &VertexPartition,
    sigma: &CyclicSymmetry,
) -> Result<(), GraphError> {
    p.validate(g)?;
    check_permutation(&sigma.sigma, g.n())?;
    for &(u, v) in g.edges() {
        if !g.has_edge(sigma.image(u), sigma.image(v)) {
            return Err(GraphError::NotAutomorphism(u, v));
        }
    }
    let t = p.len();
    for (i, part) in p.parts().iter().enumerate() {
        let mut image: Vec<usize> = part.iter().map(|&v| sigma.image(v)).collect();
        image.sort_unstable();
        if image != p.parts()[(i + 1) % t] {
            return Err(GraphError::NotPartShift(i, (i + 1) % t));
        }
    }
    Ok(())
}

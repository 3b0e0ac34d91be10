use super::{normalize, Edge, Graph, GraphError};

/// A simple cycle given by its vertex sequence `v_0 v_1 .. v_{k-1} v_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    pub fn from_vertices(g: &Graph, vertices: Vec<usize>) -> Result<Cycle, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::Size("a cycle needs at least 3 vertices".into()));
        }
        let mut seen = vec![false; g.n()];
        for &v in &vertices {
            g.check_vertex(v)?;
            if std::mem::replace(&mut seen[v], true) {
                return Err(GraphError::Size(format!("vertex {v} repeats in cycle")));
            }
        }
        let cycle = Cycle { vertices };
        if let Some(&(u, v)) = cycle.edges().iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(GraphError::MissingEdge(u, v));
        }
        Ok(cycle)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let k = self.vertices.len();
        (0..k)
            .map(|i| normalize(self.vertices[i], self.vertices[(i + 1) % k]))
            .collect()
    }

    pub fn is_vertex_disjoint(&self, other: &Cycle) -> bool {
        self.vertices.iter().all(|v| !other.vertices.contains(v))
    }
}

/// Every simple cycle of length `3..=max_len`, each listed once: starting at
/// its smallest vertex, second vertex smaller than the last.
pub fn simple_cycles_up_to(g: &Graph, max_len: usize) -> Vec<Cycle> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(max_len);
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        path.push(start);
        on_path[start] = true;
        extend(g, start, max_len, &mut path, &mut on_path, &mut out);
        on_path[start] = false;
        path.pop();
    }
    out
}

fn extend(
    g: &Graph,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    out: &mut Vec<Cycle>,
) {
    let last = *path.last().expect("path starts nonempty");
    for &w in g.neighbors(last) {
        if w == start && path.len() >= 3 && path[1] < last {
            out.push(Cycle {
                vertices: path.clone(),
            });
        }
        if w > start && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend(g, start, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

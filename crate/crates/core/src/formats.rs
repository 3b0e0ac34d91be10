//! Text and JSON file formats, plus the compact graph spec language.
//!
//! Graph files are plain text: a header `n m` then one `u v` line per edge.
//! Everything else is compact JSON ending in a newline, so that
//! parse-then-emit reproduces a file byte for byte.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::crossing::{AbstractDrawing, CrossingError};
use crate::cyclic::RotationCertificate;
use crate::graph::{
    cartesian_cycles, circulant, complete, complete_bipartite, cycle, Cycle, Edge,
    EdgeDecomposition, Graph, GraphError, Piece, VertexPartition,
};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Crossing(#[from] CrossingError),
}

fn parse_err(msg: impl Into<String>) -> FormatError {
    FormatError::Parse(msg.into())
}

/// `cycle:n`, `torus:m:n`, `circulant:n:a,b,..`, `complete:n`, `kmn:m:n`
/// or `@path` to a graph text file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Cycle(usize),
    Torus(usize, usize),
    Circulant(usize, Vec<usize>),
    Complete(usize),
    CompleteBipartite(usize, usize),
    File(PathBuf),
}

impl GraphSpec {
    pub fn build(&self) -> Result<Graph, FormatError> {
        Ok(match self {
            GraphSpec::Cycle(n) => cycle(*n)?,
            GraphSpec::Torus(m, n) => cartesian_cycles(*m, *n)?,
            GraphSpec::Circulant(n, strides) => circulant(*n, strides)?,
            GraphSpec::Complete(n) => complete(*n)?,
            GraphSpec::CompleteBipartite(m, n) => complete_bipartite(*m, *n)?,
            GraphSpec::File(path) => parse_graph_text(&read(path)?)?,
        })
    }
}

pub fn read(path: &std::path::Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.to_path_buf(),
        source,
    })
}

impl FromStr for GraphSpec {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<GraphSpec, FormatError> {
        if let Some(path) = s.strip_prefix('@') {
            return Ok(GraphSpec::File(PathBuf::from(path)));
        }
        let fields: Vec<&str> = s.split(':').collect();
        let num = |f: &str| {
            f.parse::<usize>()
                .map_err(|_| parse_err(format!("`{f}` is not a count in graph spec `{s}`")))
        };
        let spec = match fields.as_slice() {
            ["cycle", n] => GraphSpec::Cycle(num(n)?),
            ["torus", m, n] => GraphSpec::Torus(num(m)?, num(n)?),
            ["circulant", n, strides] => GraphSpec::Circulant(
                num(n)?,
                strides.split(',').map(num).collect::<Result<_, _>>()?,
            ),
            ["complete", n] => GraphSpec::Complete(num(n)?),
            ["kmn", m, n] => GraphSpec::CompleteBipartite(num(m)?, num(n)?),
            _ => return Err(parse_err(format!("unknown graph spec `{s}`"))),
        };
        Ok(spec)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Torus(m, n) => write!(f, "torus:{m}:{n}"),
            GraphSpec::Circulant(n, strides) => {
                let s: Vec<String> = strides.iter().map(|a| a.to_string()).collect();
                write!(f, "circulant:{n}:{}", s.join(","))
            }
            GraphSpec::Complete(n) => write!(f, "complete:{n}"),
            GraphSpec::CompleteBipartite(m, n) => write!(f, "kmn:{m}:{n}"),
            GraphSpec::File(path) => write!(f, "@{}", path.display()),
        }
    }
}

/// Header `n m`, then `m` lines `u v`. Blank lines and `#` comments are
/// skipped.
pub fn parse_graph_text(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let pair = |line: &str| -> Result<(usize, usize), FormatError> {
        let mut it = line.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|_| parse_err(format!("`{t}` is not a nonnegative integer")))
        });
        match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => Ok((a?, b?)),
            _ => Err(parse_err(format!("expected two integers, got `{line}`"))),
        }
    };
    let (n, m) = pair(lines.next().ok_or_else(|| parse_err("empty graph file"))?)?;
    let edges = lines.map(pair).collect::<Result<Vec<_>, _>>()?;
    if edges.len() != m {
        return Err(parse_err(format!(
            "header says {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(Graph::from_edges(n, edges)?)
}

pub fn emit_graph_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serialises");
    s.push('\n');
    s
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionFile {
    parts: Vec<Vec<usize>>,
}

pub fn parse_partition(text: &str, n: usize) -> Result<VertexPartition, FormatError> {
    let file: PartitionFile = serde_json::from_str(text)?;
    Ok(VertexPartition::new(n, file.parts)?)
}

pub fn emit_partition(p: &VertexPartition) -> String {
    to_line(&PartitionFile {
        parts: p.parts().to_vec(),
    })
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PieceFile {
    vertices: Vec<usize>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionFile {
    pieces: Vec<PieceFile>,
}

pub fn parse_decomposition(text: &str) -> Result<EdgeDecomposition, FormatError> {
    let file: DecompositionFile = serde_json::from_str(text)?;
    Ok(EdgeDecomposition::new(
        file.pieces
            .into_iter()
            .map(|p| Piece::new(p.vertices, p.edges))
            .collect(),
    ))
}

pub fn emit_decomposition(d: &EdgeDecomposition) -> String {
    to_line(&DecompositionFile {
        pieces: d
            .pieces()
            .iter()
            .map(|p| PieceFile {
                vertices: p.vertices.clone(),
                edges: p.edges.clone(),
            })
            .collect(),
    })
}

/// A drawing file before its graph spec is resolved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DrawingFile {
    pub surface: String,
    pub graph: String,
    pub crossings: Vec<(Edge, Edge)>,
}

impl DrawingFile {
    pub fn parse(text: &str) -> Result<DrawingFile, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_drawing(d: &AbstractDrawing, graph_spec: &GraphSpec) -> DrawingFile {
        DrawingFile {
            surface: d.surface().to_string(),
            graph: graph_spec.to_string(),
            crossings: d.crossing_edges(),
        }
    }

    pub fn emit(&self) -> String {
        to_line(self)
    }

    pub fn graph_spec(&self) -> Result<GraphSpec, FormatError> {
        self.graph.parse()
    }

    /// Builds the graph from the spec (or uses `graph` when given) and maps
    /// crossing pairs onto its edges.
    pub fn into_drawing(self, graph: Option<Graph>) -> Result<AbstractDrawing, FormatError> {
        let graph = match graph {
            Some(g) => g,
            None => self.graph_spec()?.build()?,
        };
        Ok(AbstractDrawing::new(graph, self.surface, self.crossings)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CyclesFile {
    cycles: Vec<Vec<usize>>,
}

/// `{"cycles":[[v0,v1,..],..]}`, each cycle as its vertex sequence.
pub fn parse_cycles(text: &str, g: &Graph) -> Result<Vec<Cycle>, FormatError> {
    let file: CyclesFile = serde_json::from_str(text)?;
    Ok(file
        .cycles
        .into_iter()
        .map(|vs| Cycle::from_vertices(g, vs))
        .collect::<Result<_, _>>()?)
}

pub fn emit_cycles(cycles: &[Cycle]) -> String {
    to_line(&CyclesFile {
        cycles: cycles.iter().map(|c| c.vertices().to_vec()).collect(),
    })
}

pub fn parse_certificate(text: &str) -> Result<RotationCertificate, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn emit_certificate(cert: &RotationCertificate) -> String {
    to_line(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossing::convex_drawing;
    use crate::cyclic::{scan_rotation, CyclicList, Direction};
    use crate::graph::{circulant14_decomposition, columns_partition};
    use crate::rational::Rational;

    #[test]
    fn graph_specs() {
        for s in [
            "cycle:5",
            "torus:5:4",
            "circulant:20:1,4",
            "complete:13",
            "kmn:2:3",
            "@g.txt",
        ] {
            let spec: GraphSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!(GraphSpec::Torus(5, 4).build().unwrap().n(), 20);
        assert_eq!(
            GraphSpec::Circulant(20, vec![1, 4]).build().unwrap().m(),
            40
        );
        for bad in ["", "cycle", "cycle:x", "torus:3", "wheel:5", "circulant:8:"] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn graph_text_round_trip() {
        let g = cartesian_cycles(5, 4).unwrap();
        let text = emit_graph_text(&g);
        assert!(text.starts_with("20 40\n"));
        let back = parse_graph_text(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(emit_graph_text(&back), text);
        assert_eq!(
            parse_graph_text("# C3\n3 3\n0 1\n1 2\n\n2 0\n").unwrap(),
            cycle(3).unwrap()
        );
        assert!(parse_graph_text("3 2\n0 1\n").is_err());
        assert!(parse_graph_text("3 1\n0 5\n").is_err());
        assert!(parse_graph_text("3 1\n0 1 2\n").is_err());
    }

    #[test]
    fn json_round_trips() {
        let p = columns_partition(5, 4).unwrap();
        let text = emit_partition(&p);
        assert_eq!(emit_partition(&parse_partition(&text, 20).unwrap()), text);
        assert!(parse_partition("{\"parts\":[[0],[0]]}", 2).is_err());

        let d = circulant14_decomposition(5).unwrap();
        let text = emit_decomposition(&d);
        assert_eq!(parse_decomposition(&text).unwrap(), d);
        assert_eq!(
            emit_decomposition(&parse_decomposition(&text).unwrap()),
            text
        );

        let spec = GraphSpec::Circulant(8, vec![1, 4]);
        let g = spec.build().unwrap();
        let drawing = convex_drawing(&g, &(0..8).collect::<Vec<_>>()).unwrap();
        let text = DrawingFile::from_drawing(&drawing, &spec).emit();
        let back = DrawingFile::parse(&text).unwrap();
        assert_eq!(back.emit(), text);
        assert_eq!(back.into_drawing(None).unwrap(), drawing);

        let c = cycle(6).unwrap();
        let cycles = vec![Cycle::from_vertices(&c, (0..6).collect()).unwrap()];
        let text = emit_cycles(&cycles);
        assert_eq!(text, "{\"cycles\":[[0,1,2,3,4,5]]}\n");
        assert_eq!(emit_cycles(&parse_cycles(&text, &c).unwrap()), text);

        let xs = CyclicList::from_integers([2, 0]).unwrap();
        let cert = scan_rotation(&xs, Rational::from_integer(3), Direction::Below).unwrap();
        let text = emit_certificate(&cert);
        assert_eq!(parse_certificate(&text).unwrap(), cert);
        assert_eq!(emit_certificate(&parse_certificate(&text).unwrap()), text);
    }
}

//! Turning flag values into library objects.

use std::path::Path;

use cyclic_cert::formats::{self, GraphSpec};
use cyclic_cert::graph::{
    circulant14_decomposition, column_shift_symmetry, columns_partition,
    star_decomposition_bipartite, star_decomposition_complete, CyclicSymmetry, EdgeDecomposition,
    Graph, VertexPartition,
};
use cyclic_cert::{CyclicList, Rational};

use crate::error::CliError;

pub fn rational(s: &str) -> Result<Rational, CliError> {
    Ok(s.parse::<Rational>()?)
}

/// Comma-separated rationals or integers.
pub fn values(s: &str) -> Result<CyclicList, CliError> {
    let values = s.split(',').map(rational).collect::<Result<Vec<_>, _>>()?;
    Ok(CyclicList::new(values)?)
}

pub fn graph_spec(s: &str) -> Result<GraphSpec, CliError> {
    Ok(s.parse::<GraphSpec>()?)
}

pub fn graph(spec: &GraphSpec) -> Result<Graph, CliError> {
    Ok(spec.build()?)
}

pub fn read(path: &str) -> Result<String, CliError> {
    Ok(formats::read(Path::new(path))?)
}

/// `columns` (torus graphs only) or a partition file.
pub fn partition(arg: &str, spec: &GraphSpec, g: &Graph) -> Result<VertexPartition, CliError> {
    match (arg, spec) {
        ("columns", GraphSpec::Torus(m, n)) => Ok(columns_partition(*m, *n)?),
        ("columns", _) => Err(CliError::input(
            "input",
            "`columns` needs a torus:m:n graph",
        )),
        (path, _) => Ok(formats::parse_partition(&read(path)?, g.n())?),
    }
}

/// The column shift for `columns`; otherwise a file `{"sigma":[..]}`.
pub fn symmetry(
    arg: Option<&str>,
    partition_arg: &str,
    spec: &GraphSpec,
) -> Result<CyclicSymmetry, CliError> {
    match (arg, partition_arg, spec) {
        (Some(path), _, _) => {
            let value: serde_json::Value = serde_json::from_str(&read(path)?)?;
            let sigma = value
                .get("sigma")
                .and_then(|s| s.as_array())
                .ok_or_else(|| CliError::input("parse", "symmetry file needs a \"sigma\" array"))?
                .iter()
                .map(|v| {
                    v.as_u64()
                        .map(|v| v as usize)
                        .ok_or_else(|| CliError::input("parse", "sigma entries must be vertex ids"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(CyclicSymmetry::new(sigma)?)
        }
        (None, "columns", GraphSpec::Torus(m, n)) => Ok(column_shift_symmetry(*m, *n)),
        _ => Err(CliError::input(
            "input",
            "a partition file needs --symmetry",
        )),
    }
}

/// `circulant14`, `stars`, or a decomposition file.
pub fn decomposition(arg: &str, spec: &GraphSpec) -> Result<EdgeDecomposition, CliError> {
    match (arg, spec) {
        ("circulant14", GraphSpec::Circulant(n, strides)) if n % 4 == 0 && strides == &[1, 4] => {
            Ok(circulant14_decomposition(n / 4)?)
        }
        ("circulant14", _) => Err(CliError::input(
            "input",
            "`circulant14` needs a circulant:4k:1,4 graph",
        )),
        ("stars", GraphSpec::Complete(n)) => Ok(star_decomposition_complete(*n)?),
        ("stars", GraphSpec::CompleteBipartite(m, n)) => Ok(star_decomposition_bipartite(*m, *n)?),
        ("stars", _) => Err(CliError::input(
            "input",
            "`stars` needs a complete:n or kmn:m:n graph",
        )),
        (path, _) => Ok(formats::parse_decomposition(&read(path)?)?),
    }
}

/// `natural` or a comma-separated permutation.
pub fn order(arg: &str, n: usize) -> Result<Vec<usize>, CliError> {
    if arg == "natural" {
        return Ok((0..n).collect());
    }
    arg.split(',')
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| CliError::input("parse", format!("`{v}` is not a vertex id")))
        })
        .collect()
}

pub fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::input("io", format!("cannot write {}: {e}", path.display())))
}

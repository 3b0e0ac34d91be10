use std::fmt::Write as _;
use std::time::Instant;

use serde_json::{json, Value};

use cyclic_cert::crossing::{
    convex_drawing, cr_total, decomposition_weights, jordan_parity_screen, prefix_cr_certificate,
    validate_drawing, Parity,
};
use cyclic_cert::cyclic::{
    equality_certificate, find_rotation, scan_rotation, total, verify_certificate, BoundSpec,
};
use cyclic_cert::domination::{
    is_minimal_dominating, is_minimal_total_dominating, max_minimal_parameter, min_parameter,
    reproduce_n4, reproduce_t1, CyclicInstance, ReproductionRow, Variant,
};
use cyclic_cert::formats::{self, DrawingFile, GraphSpec};
use cyclic_cert::graph::{
    cartesian_cycles, columns_partition, complete, complete_bipartite, find_transitive_partition,
    is_transitive_decomposition, is_transitive_partition, star_decomposition_bipartite,
    star_decomposition_complete, VertexPartition, VertexSet,
};
use cyclic_cert::{Budget, CyclicList, Direction, Rational};

use crate::error::CliError;
use crate::inputs;
use crate::{
    CertifyCommand, DecompositionCommand, DominationCommand, DrawingCommand, GenerateArgs,
    PartitionCommand, Report, ReproduceArgs, SolveVariant, Suite,
};

fn to_json<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("plain data serialises")
}

pub fn certify(c: CertifyCommand) -> Result<Report, CliError> {
    match c {
        CertifyCommand::Sum {
            values,
            h,
            dir,
            epsilon,
            emit,
        } => {
            let xs = inputs::values(&values)?;
            let h = inputs::rational(&h)?;
            let direction = Direction::from(dir);
            let bound = match epsilon {
                None => h,
                Some(e) => {
                    let spec = BoundSpec::new(h, inputs::rational(&e)?)?;
                    match direction {
                        Direction::Below => spec.h + spec.epsilon,
                        Direction::Above => spec.h - spec.epsilon,
                    }
                }
            };
            let Some(cert) = find_rotation(&xs, bound, direction) else {
                return Ok(Report::new(json!({"result": "none"}), false));
            };
            debug_assert!(verify_certificate(&xs, bound, &cert)?);
            if let Some(path) = emit {
                inputs::write(&path, &formats::emit_certificate(&cert))?;
            }
            Ok(Report::new(
                json!({"result": "found", "certificate": to_json(&cert)}),
                true,
            ))
        }
        CertifyCommand::Equal { values, h, epsilon } => {
            let xs = inputs::values(&values)?;
            let bound = BoundSpec::new(inputs::rational(&h)?, inputs::rational(&epsilon)?)?;
            Ok(match equality_certificate(&xs, &bound)? {
                Some(c) => Report::new(
                    json!({
                        "result": "found",
                        "k1": c.k1(),
                        "k2": c.k2(),
                        "below": to_json(&c.below),
                        "above": to_json(&c.above),
                    }),
                    true,
                ),
                None => Report::new(
                    json!({"result": "none", "total": to_json(&total(&xs))}),
                    false,
                ),
            })
        }
        CertifyCommand::Verify { values, cert } => {
            let xs = inputs::values(&values)?;
            let cert = formats::parse_certificate(&inputs::read(&cert)?)?;
            let ok = verify_certificate(&xs, cert.h, &cert)?;
            Ok(Report::new(
                json!({"result": if ok { "verified" } else { "refuted" }, "k": cert.k}),
                ok,
            ))
        }
    }
}

fn part_counts(p: &VertexPartition, s: &VertexSet) -> Vec<i64> {
    p.parts()
        .iter()
        .map(|part| part.iter().filter(|&&v| s.contains(v)).count() as i64)
        .collect()
}

pub fn domination(c: DominationCommand, budget: Budget) -> Result<Report, CliError> {
    match c {
        DominationCommand::Solve {
            graph,
            variant,
            partition,
        } => {
            let spec = inputs::graph_spec(&graph)?;
            let g = inputs::graph(&spec)?;
            let (report, upper) = match variant {
                SolveVariant::Dominating => {
                    (min_parameter(&g, Variant::Dominating, budget)?, false)
                }
                SolveVariant::Total => {
                    (min_parameter(&g, Variant::TotalDominating, budget)?, false)
                }
                SolveVariant::Paired => {
                    (min_parameter(&g, Variant::PairedDominating, budget)?, false)
                }
                SolveVariant::Upper => (
                    max_minimal_parameter(&g, Variant::Dominating, budget)?,
                    true,
                ),
                SolveVariant::UpperTotal => (
                    max_minimal_parameter(&g, Variant::TotalDominating, budget)?,
                    true,
                ),
            };
            let verified = match variant {
                SolveVariant::Dominating => Variant::Dominating.accepts(&g, &report.witness)?,
                SolveVariant::Total => Variant::TotalDominating.accepts(&g, &report.witness)?,
                SolveVariant::Paired => Variant::PairedDominating.accepts(&g, &report.witness)?,
                SolveVariant::Upper => is_minimal_dominating(&g, &report.witness)?,
                SolveVariant::UpperTotal => is_minimal_total_dominating(&g, &report.witness)?,
            };
            let mut certificates = serde_json::Map::new();
            if let Some(arg) = partition {
                // Per-part counts sum to the value, so some rotation keeps
                // them under (or over) the value by a half.
                let p = inputs::partition(&arg, &spec, &g)?;
                let counts = part_counts(&p, &report.witness);
                let value = Rational::from_integer(report.value as i64);
                let (bound, direction) = if upper {
                    (value - Rational::HALF, Direction::Above)
                } else {
                    (value + Rational::HALF, Direction::Below)
                };
                let list = CyclicList::from_integers(counts.iter().copied())?;
                certificates.insert("part_counts".into(), json!(counts));
                certificates.insert(
                    "rotation".into(),
                    to_json(&scan_rotation(&list, bound, direction)),
                );
            }
            Ok(Report::new(
                json!({
                    "value": report.value,
                    "witness": to_json(&report.witness),
                    "nodes": report.nodes_explored,
                    "pruned": report.pruned_by_prefix,
                    "verified": verified,
                    "certificates": certificates,
                }),
                verified,
            ))
        }
        DominationCommand::VerifyPair { n } => Ok(row_report(reproduce_t1(n, budget)?)),
        DominationCommand::VerifyUpperTotal { n } => Ok(row_report(reproduce_n4(n, budget)?)),
        DominationCommand::Corollary {
            graph,
            variant,
            h,
            epsilon,
            partition,
            symmetry,
            upper,
            rd,
        } => {
            let spec = inputs::graph_spec(&graph)?;
            let g = inputs::graph(&spec)?;
            let p = inputs::partition(&partition, &spec, &g)?;
            let sigma = inputs::symmetry(symmetry.as_deref(), &partition, &spec)?;
            let epsilon = inputs::rational(&epsilon)?;
            let inst = CyclicInstance::new(&g, &p, &sigma)?;
            let variant = Variant::from(variant);
            let d = if rd {
                if variant != Variant::Dominating {
                    return Err(CliError::input(
                        "input",
                        "--rd decides plain domination only",
                    ));
                }
                inst.decide_domination_via_rd(h, epsilon, budget)?
            } else if upper {
                inst.decide_upper_parameter(variant, h, epsilon, budget)?
            } else {
                inst.decide_parameter(variant, h, epsilon, budget)?
            };
            Ok(Report::new(
                json!({
                    "holds": d.holds,
                    "value": d.holds.then_some(h),
                    "witness": to_json(&d.witness),
                    "nodes": d.nodes_explored,
                    "pruned": d.pruned_by_prefix,
                    "certificates": {
                        "rotation": to_json(&d.certificate),
                        "counterexample": to_json(&d.counterexample),
                    },
                }),
                d.holds,
            ))
        }
    }
}

fn row_report(row: ReproductionRow) -> Report {
    let pass = row.pass;
    let mut report = Report::new(to_json(&row), pass);
    report.table = Some(table(std::slice::from_ref(&row)));
    report
}

fn table(rows: &[ReproductionRow]) -> String {
    let mut out = format!(
        "{:<8} {:<24} {:>3} {:>8} {:>8} {:>6} {:>10} {:>8} {:>5}\n",
        "graph", "parameter", "n", "expected", "solver", "holds", "nodes", "ms", "pass"
    );
    for r in rows {
        let solver = r.solver_value.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "{:<8} {:<24} {:>3} {:>8} {:>8} {:>6} {:>10} {:>8} {:>5}",
            r.graph,
            r.parameter,
            r.n,
            r.expected,
            solver,
            r.decision_holds,
            r.nodes_explored,
            r.millis,
            r.pass
        );
    }
    out
}

pub fn partition(c: PartitionCommand, budget: Budget) -> Result<Report, CliError> {
    match c {
        PartitionCommand::Check { graph, partition } => {
            let spec = inputs::graph_spec(&graph)?;
            let g = inputs::graph(&spec)?;
            let p = inputs::partition(&partition, &spec, &g)?;
            let ok = is_transitive_partition(&g, &p)?;
            Ok(Report::new(json!({"transitive": ok, "parts": p.len()}), ok))
        }
        PartitionCommand::Search { graph, t } => {
            let g = inputs::graph(&inputs::graph_spec(&graph)?)?;
            Ok(match find_transitive_partition(&g, t, budget)? {
                Some(p) => Report::new(json!({"result": "found", "parts": p.parts()}), true),
                None => Report::new(json!({"result": "none"}), false),
            })
        }
    }
}

pub fn decomposition(c: DecompositionCommand) -> Result<Report, CliError> {
    let DecompositionCommand::Check {
        graph,
        decomposition,
    } = c;
    let spec = inputs::graph_spec(&graph)?;
    let g = inputs::graph(&spec)?;
    let d = inputs::decomposition(&decomposition, &spec)?;
    let ok = is_transitive_decomposition(&g, &d)?;
    Ok(Report::new(
        json!({"transitive": ok, "pieces": d.len()}),
        ok,
    ))
}

/// The drawing file, with its graph replaced by `--graph` when given.
fn load_drawing(
    graph: Option<&str>,
    path: &str,
) -> Result<cyclic_cert::crossing::AbstractDrawing, CliError> {
    let file = DrawingFile::parse(&inputs::read(path)?)?;
    let g = match graph {
        Some(s) => Some(inputs::graph(&inputs::graph_spec(s)?)?),
        None => None,
    };
    Ok(file.into_drawing(g)?)
}

fn drawing_spec(graph: Option<&str>, path: &str) -> Result<GraphSpec, CliError> {
    match graph {
        Some(s) => inputs::graph_spec(s),
        None => Ok(DrawingFile::parse(&inputs::read(path)?)?.graph_spec()?),
    }
}

pub fn drawing(c: DrawingCommand) -> Result<Report, CliError> {
    match c {
        DrawingCommand::Check {
            graph,
            drawing,
            decomposition,
            h,
            epsilon,
            dir,
        } => {
            let d = load_drawing(graph.as_deref(), &drawing)?;
            let violations = validate_drawing(&d);
            let mut out = json!({
                "valid": violations.is_empty(),
                "violations": to_json(&violations),
                "crossings": cr_total(&d),
            });
            let mut ok = violations.is_empty();
            if let Some(arg) = decomposition {
                let spec = drawing_spec(graph.as_deref(), &drawing)?;
                let decomp = inputs::decomposition(&arg, &spec)?;
                let weights = decomposition_weights(&d, &decomp)?;
                out["doubled_weights"] = json!(weights.weights);
                if let Some(h) = h {
                    let cert = prefix_cr_certificate(
                        &weights,
                        h,
                        inputs::rational(&epsilon)?,
                        dir.into(),
                    )?;
                    ok &= cert.is_some();
                    out["result"] = json!(if cert.is_some() { "found" } else { "none" });
                    out["certificate"] = to_json(&cert);
                }
            }
            Ok(Report::new(out, ok))
        }
        DrawingCommand::Convex { graph, order, emit } => {
            let spec = inputs::graph_spec(&graph)?;
            let g = inputs::graph(&spec)?;
            let d = convex_drawing(&g, &inputs::order(&order, g.n())?)?;
            let file = DrawingFile::from_drawing(&d, &spec);
            if let Some(path) = emit {
                inputs::write(&path, &file.emit())?;
            }
            Ok(Report::new(
                json!({"crossings": cr_total(&d), "drawing": to_json(&file)}),
                true,
            ))
        }
        DrawingCommand::Parity {
            graph,
            drawing,
            cycles,
        } => {
            let d = load_drawing(graph.as_deref(), &drawing)?;
            let cycles = formats::parse_cycles(&inputs::read(&cycles)?, d.graph())?;
            let mut pairs = Vec::new();
            let mut odd = 0;
            for i in 0..cycles.len() {
                for j in i + 1..cycles.len() {
                    if !cycles[i].is_vertex_disjoint(&cycles[j]) {
                        continue;
                    }
                    let parity = jordan_parity_screen(&d, &cycles[i], &cycles[j])?;
                    odd += usize::from(parity == Parity::Odd);
                    pairs.push(json!({"first": i, "second": j, "parity": to_json(&parity)}));
                }
            }
            Ok(Report::new(
                json!({"pairs": pairs, "odd": odd, "realizable_screen": if odd == 0 { "pass" } else { "fail" }}),
                odd == 0,
            ))
        }
    }
}

pub fn generate(a: GenerateArgs) -> Result<Report, CliError> {
    let spec = inputs::graph_spec(&a.graph)?;
    let g = inputs::graph(&spec)?;
    std::fs::create_dir_all(&a.out_dir).map_err(|e| {
        CliError::input("io", format!("cannot create {}: {e}", a.out_dir.display()))
    })?;
    let mut files = Vec::new();
    let mut round_trip = true;
    let mut out = json!({"vertices": g.n(), "edges": g.m()});

    // Each file is written, read back from disk, parsed and re-emitted.
    let mut emit =
        |name: &str, text: String, reparse: &dyn Fn(&str) -> Result<String, CliError>| {
            let path = a.out_dir.join(name);
            inputs::write(&path, &text)?;
            let back = inputs::read(&path.to_string_lossy())?;
            round_trip &= back == text && reparse(&back)? == text;
            files.push(path.display().to_string());
            Ok::<(), CliError>(())
        };

    emit("graph.txt", formats::emit_graph_text(&g), &|s| {
        let parsed = formats::parse_graph_text(s)?;
        Ok(if parsed == g {
            formats::emit_graph_text(&parsed)
        } else {
            String::new()
        })
    })?;
    if let Some(arg) = &a.partition {
        let p = inputs::partition(arg, &spec, &g)?;
        out["parts"] = json!(p.len());
        emit("partition.json", formats::emit_partition(&p), &|s| {
            let parsed = formats::parse_partition(s, g.n())?;
            Ok(if parsed == p {
                formats::emit_partition(&parsed)
            } else {
                String::new()
            })
        })?;
    }
    if let Some(arg) = &a.decomposition {
        let d = inputs::decomposition(arg, &spec)?;
        d.validate(&g)?;
        out["pieces"] = json!(d.len());
        out["piece_edges"] = json!(d.pieces().iter().map(|p| p.edges.len()).collect::<Vec<_>>());
        emit(
            "decomposition.json",
            formats::emit_decomposition(&d),
            &|s| {
                let parsed = formats::parse_decomposition(s)?;
                Ok(if parsed == d {
                    formats::emit_decomposition(&parsed)
                } else {
                    String::new()
                })
            },
        )?;
    }
    if a.drawing.is_some() {
        let d = convex_drawing(&g, &(0..g.n()).collect::<Vec<_>>())?;
        let file = DrawingFile::from_drawing(&d, &spec);
        out["crossings"] = json!(cr_total(&d));
        emit("drawing.json", file.emit(), &|s| {
            let parsed = DrawingFile::parse(s)?;
            let same = parsed.clone().into_drawing(Some(g.clone()))? == d;
            Ok(if same { parsed.emit() } else { String::new() })
        })?;
    }
    out["files"] = json!(files);
    out["round_trip"] = json!(round_trip);
    Ok(Report::new(out, round_trip))
}

pub fn reproduce(a: ReproduceArgs, budget: Budget) -> Result<Report, CliError> {
    match a.suite {
        Suite::T1 | Suite::N4 => {
            let (run, top): (fn(usize, Budget) -> _, usize) = match a.suite {
                Suite::T1 => (reproduce_t1, 6),
                _ => (reproduce_n4, 5),
            };
            let top = a.max_n.unwrap_or(top);
            let rows = (3..=top)
                .map(|n| run(n, budget))
                .collect::<Result<Vec<ReproductionRow>, _>>()?;
            let pass = rows.iter().all(|r| r.pass);
            Ok(Report {
                json: json!({"rows": to_json(&rows), "pass": pass}),
                code: if pass { 0 } else { 1 },
                table: Some(table(&rows)),
            })
        }
        Suite::Structures => structures(budget),
    }
}

fn structures(budget: Budget) -> Result<Report, CliError> {
    let mut rows = Vec::new();
    let mut check = |name: String, expected: bool, f: &dyn Fn() -> Result<bool, CliError>| {
        let start = Instant::now();
        let observed = f()?;
        rows.push(json!({
            "structure": name,
            "expected": expected,
            "observed": observed,
            "millis": start.elapsed().as_millis() as u64,
            "pass": observed == expected,
        }));
        Ok::<(), CliError>(())
    };
    for m in 2..=4 {
        for n in 2..=4 {
            check(format!("K{m},{n} stars"), true, &|| {
                Ok(is_transitive_decomposition(
                    &complete_bipartite(m, n)?,
                    &star_decomposition_bipartite(m, n)?,
                )?)
            })?;
        }
    }
    check("K13 half-stars".into(), true, &|| {
        Ok(is_transitive_decomposition(
            &complete(13)?,
            &star_decomposition_complete(13)?,
        )?)
    })?;
    for m in 3..=6 {
        for n in 3..=6 {
            check(format!("C{m}xC{n} columns"), true, &|| {
                Ok(is_transitive_partition(
                    &cartesian_cycles(m, n)?,
                    &columns_partition(m, n)?,
                )?)
            })?;
        }
    }
    for t in 2..=5 {
        check(format!("K2,3 partition into {t}"), false, &|| {
            Ok(find_transitive_partition(&complete_bipartite(2, 3)?, t, budget)?.is_some())
        })?;
    }
    let pass = rows.iter().all(|r| r["pass"] == json!(true));
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(
            text,
            "{:<24} expected {:<5} observed {:<5} {}",
            r["structure"].as_str().unwrap_or(""),
            r["expected"],
            r["observed"],
            if r["pass"] == json!(true) {
                "pass"
            } else {
                "FAIL"
            }
        );
    }
    Ok(Report {
        json: json!({"rows": rows, "pass": pass}),
        code: if pass { 0 } else { 1 },
        table: Some(text),
    })
}

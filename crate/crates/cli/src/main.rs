//! `cycert`: certificates, domination solvers and drawing checks from the
//! command line. Every run prints exactly one JSON document on stdout.
//!
//! Exit codes: 0 verified/found, 1 refuted/none, 2 input error, 3 budget.

mod commands;
mod error;
mod inputs;

use std::io::Write;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclic_cert::Budget;

use crate::error::CliError;

#[derive(Parser)]
#[command(
    name = "cycert",
    version,
    about = "Cyclic prefix-sum certificates and their graph applications"
)]
struct Cli {
    /// Indent the JSON and print tables on stderr.
    #[arg(long, global = true)]
    pretty: bool,
    /// Node cap for every exhaustive search.
    #[arg(
        long,
        global = true,
        env = "CYCERT_BUDGET_NODES",
        default_value_t = 10_000_000
    )]
    budget_nodes: u64,
    /// Wall-clock cap per search, in seconds.
    #[arg(
        long,
        global = true,
        env = "CYCERT_BUDGET_SECONDS",
        default_value_t = 60
    )]
    budget_seconds: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rotation certificates for sums of cyclic lists.
    #[command(subcommand)]
    Certify(CertifyCommand),
    /// Domination parameters and prefix-pruned decisions.
    #[command(subcommand)]
    Domination(DominationCommand),
    /// Transitive vertex partitions.
    #[command(subcommand)]
    Partition(PartitionCommand),
    /// Transitive edge decompositions.
    #[command(subcommand)]
    Decomposition(DecompositionCommand),
    /// Crossing bookkeeping for combinatorial drawings.
    #[command(subcommand)]
    Drawing(DrawingCommand),
    /// Write graph, partition, decomposition and drawing files.
    Generate(GenerateArgs),
    /// Re-run a table of known values.
    Reproduce(ReproduceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Dir {
    Below,
    Above,
}

impl From<Dir> for cyclic_cert::Direction {
    fn from(d: Dir) -> Self {
        match d {
            Dir::Below => cyclic_cert::Direction::Below,
            Dir::Above => cyclic_cert::Direction::Above,
        }
    }
}

#[derive(Subcommand)]
pub enum CertifyCommand {
    /// Find a rotation keeping every prefix strictly on one side of `j*h/n`.
    Sum {
        #[arg(long)]
        values: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, value_enum, default_value = "below")]
        dir: Dir,
        /// Test against `h + epsilon` (below) or `h - epsilon` (above).
        #[arg(long)]
        epsilon: Option<String>,
        /// Also write the certificate to this file.
        #[arg(long)]
        emit: Option<std::path::PathBuf>,
    },
    /// A pair of rotations showing the total is within epsilon of h.
    Equal {
        #[arg(long)]
        values: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, default_value = "1/2")]
        epsilon: String,
    },
    /// Re-check a certificate file against a list.
    Verify {
        #[arg(long)]
        values: String,
        #[arg(long)]
        cert: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveVariant {
    Dominating,
    Total,
    Paired,
    /// Largest minimal dominating set.
    Upper,
    /// Largest minimal total dominating set.
    UpperTotal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseVariant {
    Dominating,
    Total,
    Paired,
}

impl From<BaseVariant> for cyclic_cert::domination::Variant {
    fn from(v: BaseVariant) -> Self {
        use cyclic_cert::domination::Variant;
        match v {
            BaseVariant::Dominating => Variant::Dominating,
            BaseVariant::Total => Variant::TotalDominating,
            BaseVariant::Paired => Variant::PairedDominating,
        }
    }
}

#[derive(Subcommand)]
pub enum DominationCommand {
    /// Exact value with a witness.
    Solve {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        variant: SolveVariant,
        /// `columns` or a partition file; adds per-part certificates.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Paired domination of C5 x Cn against its closed form.
    VerifyPair {
        #[arg(long)]
        n: usize,
    },
    /// Upper total domination of C4 x Cn against 2n.
    VerifyUpperTotal {
        #[arg(long)]
        n: usize,
    },
    /// Decide `parameter == h` with two prefix-pruned searches.
    Corollary {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        variant: BaseVariant,
        #[arg(long)]
        h: i64,
        #[arg(long, default_value = "1/2")]
        epsilon: String,
        /// `columns` or a partition file.
        #[arg(long)]
        partition: String,
        /// File `{"sigma":[..]}` shifting each part onto the next.
        #[arg(long)]
        symmetry: Option<String>,
        /// Decide the upper parameter over minimal sets instead.
        #[arg(long, conflicts_with = "rd")]
        upper: bool,
        /// Decide domination through re-domination sums (regular graphs).
        #[arg(long)]
        rd: bool,
    },
}

#[derive(Subcommand)]
pub enum PartitionCommand {
    Check {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        partition: String,
    },
    /// Exhaustive search for a transitive partition into `t` parts.
    Search {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        t: usize,
    },
}

#[derive(Subcommand)]
pub enum DecompositionCommand {
    Check {
        #[arg(long)]
        graph: String,
        /// `circulant14`, `stars` or a decomposition file.
        #[arg(long)]
        decomposition: String,
    },
}

#[derive(Subcommand)]
pub enum DrawingCommand {
    /// Validate a drawing, weigh its pieces, and certify a crossing bound.
    Check {
        /// Overrides the graph named inside the drawing file.
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        drawing: String,
        #[arg(long)]
        decomposition: Option<String>,
        #[arg(long, requires = "decomposition")]
        h: Option<i64>,
        #[arg(long, default_value = "1/2")]
        epsilon: String,
        #[arg(long, value_enum, default_value = "below")]
        dir: Dir,
    },
    /// Straight-chord drawing with vertices on a circle.
    Convex {
        #[arg(long)]
        graph: String,
        /// `natural` or a comma-separated vertex order.
        #[arg(long, default_value = "natural")]
        order: String,
        #[arg(long)]
        emit: Option<std::path::PathBuf>,
    },
    /// Crossing parity of every vertex-disjoint pair of listed cycles.
    Parity {
        #[arg(long)]
        graph: Option<String>,
        #[arg(long)]
        drawing: String,
        #[arg(long)]
        cycles: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum DrawingKind {
    Convex,
}

#[derive(Args)]
pub struct GenerateArgs {
    #[arg(long)]
    graph: String,
    #[arg(long)]
    partition: Option<String>,
    #[arg(long)]
    decomposition: Option<String>,
    /// Also write a convex drawing in the natural order.
    #[arg(long, value_enum)]
    drawing: Option<DrawingKind>,
    #[arg(long, default_value = ".")]
    out_dir: std::path::PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    T1,
    N4,
    Structures,
}

#[derive(Args)]
pub struct ReproduceArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest n for the torus suites (t1 defaults to 6, n4 to 5).
    #[arg(long)]
    max_n: Option<usize>,
}

/// What a successful run prints, and how it exits.
pub struct Report {
    pub json: serde_json::Value,
    pub code: u8,
    pub table: Option<String>,
}

impl Report {
    pub fn new(json: serde_json::Value, ok: bool) -> Report {
        Report {
            json,
            code: if ok { 0 } else { 1 },
            table: None,
        }
    }
}

fn print(value: &serde_json::Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(value)
    } else {
        serde_json::to_string(value)
    }
    .expect("JSON values serialise");
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}");
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let budget =
        Budget::nodes(cli.budget_nodes).with_time_limit(Duration::from_secs(cli.budget_seconds));
    match cli.command {
        Command::Certify(c) => commands::certify(c),
        Command::Domination(c) => commands::domination(c, budget),
        Command::Partition(c) => commands::partition(c, budget),
        Command::Decomposition(c) => commands::decomposition(c),
        Command::Drawing(c) => commands::drawing(c),
        Command::Generate(a) => commands::generate(a),
        Command::Reproduce(a) => commands::reproduce(a, budget),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let message = e.render().to_string();
            eprint!("{message}");
            print(
                &serde_json::json!({"error": message.trim(), "kind": "usage"}),
                false,
            );
            return ExitCode::from(2);
        }
    };
    let pretty = cli.pretty;
    match run(cli) {
        Ok(report) => {
            print(&report.json, pretty);
            if let (true, Some(table)) = (pretty, &report.table) {
                eprint!("{table}");
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("cycert: {}", e.message());
            print(
                &serde_json::json!({"error": e.message(), "kind": e.kind()}),
                pretty,
            );
            ExitCode::from(e.exit_code())
        }
    }
}

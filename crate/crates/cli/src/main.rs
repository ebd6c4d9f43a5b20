use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use isolation_core::construct::construct_isolating;
use isolation_core::graph::{parse_edge_list, parse_graph6, write_graph6};
use isolation_core::solver::{isolation_number_with, SolverOptions, DEFAULT_NODE_BUDGET};
use isolation_core::special::{bound_value, build_special};
use isolation_core::verify::{
    cycle_bound_check, emit_report, scan_extremal, verify_bound, CorpusSource, Report, ReportFormat, VerifyOptions,
};
use isolation_core::{Error, FamilySpec, Graph};

#[derive(Parser)]
#[command(name = "isolate", version, about = "Isolation numbers of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact isolation number of a graph for one family.
    Solve {
        /// Graph file (graph6 or edge list) or an inline graph6 string.
        #[arg(long)]
        graph: String,
        /// clique, minreg, chrom, union or cycles.
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        node_budget: u64,
    },
    /// Bounded isolating set from the constructive algorithm.
    Construct {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
        /// Family index: 1 regular, 2 chromatic, 3 union.
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        l: u8,
        /// Print the recursion trace.
        #[arg(long)]
        trace: bool,
    },
    /// Build an (m, k)-special graph.
    BuildSpecial {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the graph6 line here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the bound and its extremal graphs over a corpus.
    Verify(VerifyArgs),
    /// As verify, reporting only the records that attain the bound.
    ScanExtremal(VerifyArgs),
    /// Check the cycle bound over a corpus.
    CycleCheck(CorpusArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CorpusChoice {
    /// Built-in enumeration of connected graphs with at most this many vertices.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
    max_n: Option<u8>,
    /// File with one graph6 string per line.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// File with a single graph as an edge list.
    #[arg(long)]
    edge_list: Option<PathBuf>,
}

#[derive(Args)]
struct CorpusArgs {
    #[command(flatten)]
    source: CorpusChoice,
    #[arg(long, default_value = "jsonl", value_parser = ["jsonl", "csv"])]
    format: String,
    /// Report file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    node_budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    corpus: CorpusArgs,
    #[arg(long, default_value_t = 1)]
    k_min: usize,
    #[arg(long, default_value_t = 5)]
    k_max: usize,
    /// Comma-separated family indices.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    l: Vec<usize>,
    /// Skip running the constructor on every record.
    #[arg(long)]
    no_construct: bool,
}

enum Failure {
    Usage(String),
    Io(String),
    Violations(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } => Failure::Io(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violations(n)) => {
            eprintln!("error: {n} violation(s)");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Solve { graph, family, k, node_budget } => {
            let g = load_graph(&graph)?;
            let family = FamilySpec::from_name(&family, k)?;
            let result = isolation_number_with(&g, family, &SolverOptions { node_budget });
            let mut out = io::stdout().lock();
            let io = |e: io::Error| Failure::Io(e.to_string());
            if let Some(k) = family.k() {
                if g.is_k_clique(k) {
                    writeln!(out, "note: graph is a {k}-clique").map_err(io)?;
                }
            }
            writeln!(out, "family={family}").map_err(io)?;
            writeln!(out, "iota={}", result.size).map_err(io)?;
            writeln!(out, "set={}", result.set).map_err(io)?;
            writeln!(out, "certification={:?}", result.certified).map_err(io)?;
            Ok(())
        }
        Command::Construct { graph, k, l, trace } => {
            let g = load_graph(&graph)?;
            let (set, steps) = construct_isolating(&g, k, l as usize)?;
            let mut out = io::stdout().lock();
            let io = |e: io::Error| Failure::Io(e.to_string());
            writeln!(out, "set={set}").map_err(io)?;
            writeln!(out, "size={}", set.len()).map_err(io)?;
            writeln!(out, "bound={}", bound_value(g.m(), k)).map_err(io)?;
            writeln!(out, "exact_fallbacks={}", steps.exact_fallbacks()).map_err(io)?;
            if trace {
                write!(out, "{}", steps.to_log()).map_err(io)?;
            }
            Ok(())
        }
        Command::BuildSpecial { m, k, seed, out } => {
            let (g, descriptor) = build_special(m, k, seed)?;
            let line = write_graph6(&g)?;
            let mut stdout = io::stdout().lock();
            let io = |e: io::Error| Failure::Io(e.to_string());
            match out {
                Some(path) => std::fs::write(&path, format!("{line}\n"))
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
                None => writeln!(stdout, "{line}").map_err(io)?,
            }
            writeln!(stdout, "n={} pure={} {descriptor}", g.n(), descriptor.is_pure()).map_err(io)?;
            Ok(())
        }
        Command::Verify(args) => run_verify(args, false),
        Command::ScanExtremal(args) => run_verify(args, true),
        Command::CycleCheck(args) => {
            let (source, options) = corpus_options(&args)?;
            let start = Instant::now();
            let report = cycle_bound_check(&source, &options)?;
            finish(&report, &args, start)
        }
    }
}

fn run_verify(args: VerifyArgs, extremal_only: bool) -> Result<(), Failure> {
    let (source, mut options) = corpus_options(&args.corpus)?;
    options.k_min = args.k_min;
    options.k_max = args.k_max;
    options.ells = args.l.clone();
    options.construct = !args.no_construct;
    let start = Instant::now();
    let mut report = verify_bound(&source, &options)?;
    if extremal_only {
        report = scan_extremal(report);
    }
    finish(&report, &args.corpus, start)
}

fn corpus_options(args: &CorpusArgs) -> Result<(CorpusSource, VerifyOptions), Failure> {
    let source = match (&args.source.max_n, &args.source.corpus, &args.source.edge_list) {
        (Some(n), _, _) => CorpusSource::BuiltinEnumeration { max_n: *n as usize },
        (_, Some(path), _) => CorpusSource::Graph6File(path.clone()),
        (_, _, Some(path)) => CorpusSource::EdgeListFile(path.clone()),
        _ => return Err(Failure::Usage("one of --max-n, --corpus, --edge-list is required".into())),
    };
    let options = VerifyOptions {
        threads: args.threads.map(usize::from),
        node_budget: args.node_budget,
        ..VerifyOptions::default()
    };
    Ok((source, options))
}

fn finish<T: Serialize>(report: &Report<T>, args: &CorpusArgs, start: Instant) -> Result<(), Failure> {
    let format: ReportFormat = args.format.parse()?;
    let written = match &args.out {
        Some(path) => File::create(path)
            .and_then(|f| emit_report(report, format, BufWriter::new(f)))
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
        None => emit_report(report, format, io::stdout().lock()).map_err(|e| Failure::Io(e.to_string())),
    };
    written?;
    eprintln!("{} elapsed={:.3}s", report.summary, start.elapsed().as_secs_f64());
    match report.violations() {
        0 => Ok(()),
        n => Err(Failure::Violations(n)),
    }
}

/// An existing path is read as a file (edge list when its first data line
/// holds two numbers, graph6 otherwise); anything else is inline graph6.
fn load_graph(arg: &str) -> Result<Graph, Failure> {
    let path = Path::new(arg);
    if !path.exists() {
        return Ok(parse_graph6(arg)?);
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{arg}: {e}")))?;
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.split_whitespace().count() >= 2 {
        Ok(parse_edge_list(&text)?)
    } else {
        Ok(parse_graph6(first)?)
    }
}

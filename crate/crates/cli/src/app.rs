//! Command-line front end: argument handling, engine selection, streaming
//! path output, and run reports.
//!
//! Exit codes: 0 success (including zero paths), 1 usage error, 2 graph
//! parse error, 3 negative cycle.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::ops::ControlFlow;
use std::path::{Path as FsPath, PathBuf};
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use pathlist_core::{
    johnson_reweight, k_shortest, list_bounded_directed, list_bounded_undirected, list_iterative,
    BoundedPathQuery, ContainerKind, EnumStats, Graph, Path, SsspError, Weight,
};

use crate::dimacs::parse_graph;
use crate::report::RunReport;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_NEGATIVE_CYCLE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pathlist",
    version,
    about = "List weight-bounded and k-shortest simple st-paths in weighted graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every simple source-target path with weight at most --alpha
    Enumerate(EnumerateArgs),
    /// Stream the K lightest simple source-target paths in weight order
    Topk(TopkArgs),
    /// Re-check path lines produced by enumerate/topk against the graph
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Treat each `a` line as an undirected edge
    #[arg(long)]
    undirected: bool,
    /// Graph file: `c` comments, `p sp <n> <m>` header, `a <u> <v> <w>` arcs
    file: PathBuf,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Weight budget; integer, decimal or num/den literal
    #[arg(long)]
    alpha: String,
    /// Source vertex (file id, 1-based)
    #[arg(long)]
    source: usize,
    /// Target vertex (file id, 1-based)
    #[arg(long)]
    target: usize,
    /// Traversal engine; default: lcp when --undirected, else recursive
    #[arg(long, value_enum)]
    engine: Option<EngineArg>,
    /// Emission order; selects the matching engine
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// Write a `key = value` run report to this file
    #[arg(long)]
    stats: Option<PathBuf>,
    #[command(flatten)]
    graph: GraphInput,
}

#[derive(Args)]
struct TopkArgs {
    /// Number of paths to emit
    #[arg(long)]
    k: usize,
    /// Source vertex (file id, 1-based)
    #[arg(long)]
    source: usize,
    /// Target vertex (file id, 1-based)
    #[arg(long)]
    target: usize,
    /// Write a `key = value` run report to this file
    #[arg(long)]
    stats: Option<PathBuf>,
    #[command(flatten)]
    graph: GraphInput,
}

#[derive(Args)]
struct VerifyArgs {
    /// Path lines to check; defaults to standard input
    #[arg(long)]
    paths: Option<PathBuf>,
    #[command(flatten)]
    graph: GraphInput,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Recursive,
    Lcp,
    Iterative,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Dfs,
    ReverseDfs,
    ShortestFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Engine {
    Recursive,
    Lcp,
    Iterative(ContainerKind),
}

impl Engine {
    fn name(&self) -> &'static str {
        match self {
            Engine::Recursive => "recursive",
            Engine::Lcp => "lcp",
            Engine::Iterative(ContainerKind::Lifo) => "iterative-lifo",
            Engine::Iterative(ContainerKind::MinKey) => "iterative-min-key",
        }
    }
}

fn resolve_engine(
    engine: Option<EngineArg>,
    order: Option<OrderArg>,
    undirected: bool,
) -> Result<Engine, String> {
    use ContainerKind::{Lifo, MinKey};
    let resolved = match (engine, order) {
        (None, None) => {
            if undirected {
                Engine::Lcp
            } else {
                Engine::Recursive
            }
        }
        (Some(EngineArg::Recursive), None | Some(OrderArg::Dfs)) => Engine::Recursive,
        (None, Some(OrderArg::Dfs)) => Engine::Recursive,
        (Some(EngineArg::Lcp), None) => Engine::Lcp,
        (Some(EngineArg::Iterative), None | Some(OrderArg::ReverseDfs)) => Engine::Iterative(Lifo),
        (None, Some(OrderArg::ReverseDfs)) => Engine::Iterative(Lifo),
        (Some(EngineArg::Iterative), Some(OrderArg::ShortestFirst)) => Engine::Iterative(MinKey),
        (None, Some(OrderArg::ShortestFirst)) => Engine::Iterative(MinKey),
        (Some(_), Some(_)) => {
            return Err("the given --engine does not produce the given --order".into())
        }
    };
    if resolved == Engine::Lcp && !undirected {
        return Err("--engine lcp requires --undirected".into());
    }
    Ok(resolved)
}

pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    EXIT_OK
                }
                _ => {
                    eprint!("{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match cli.command {
        Command::Enumerate(args) => enumerate(args),
        Command::Topk(args) => topk(args),
        Command::Verify(args) => verify(args),
    }
}

fn load_graph(input: &GraphInput) -> Result<Graph, u8> {
    let text = match std::fs::read_to_string(&input.file) {
        Ok(text) => text,
        Err(e) => {
            eprintln!("{}: {e}", input.file.display());
            return Err(EXIT_PARSE);
        }
    };
    parse_graph(&text, input.undirected).map_err(|e| {
        eprintln!("{}: {e}", input.file.display());
        EXIT_PARSE
    })
}

fn file_vertex(id: usize, n: usize, what: &str) -> Result<usize, u8> {
    if id == 0 || id > n {
        eprintln!("{what} vertex {id} out of range 1..={n}");
        return Err(EXIT_USAGE);
    }
    Ok(id - 1)
}

/// Shifts negative-weight graphs to non-negative potentials. Returns the
/// graph to traverse and the constant every st-path weight gained.
fn prepare_weights(g: Graph, s: usize, t: usize) -> Result<(Graph, Weight), u8> {
    if !g.has_negative_weights() {
        return Ok((g, Weight::zero()));
    }
    eprintln!("note: negative weights; applying potential reweighting");
    match johnson_reweight(&g, s, t) {
        Ok(r) => Ok((r.graph, r.constant)),
        Err(SsspError::NegativeCycle { on }) => {
            eprintln!("negative cycle through vertex {}", on + 1);
            Err(EXIT_NEGATIVE_CYCLE)
        }
        Err(e) => {
            eprintln!("reweighting failed: {e}");
            Err(EXIT_USAGE)
        }
    }
}

/// Streams one line per emitted path: `<weight>\t<v1> <v2> ...` in file
/// ids, weight shifted back to the original scale.
struct Streamer<'a> {
    out: io::StdoutLock<'a>,
    shift: Weight,
    started: Instant,
    last: Instant,
    max_gap_ms: u128,
    lines: u64,
    io_failed: bool,
}

impl<'a> Streamer<'a> {
    fn new(shift: Weight) -> Self {
        let now = Instant::now();
        Streamer {
            out: io::stdout().lock(),
            shift,
            started: now,
            last: now,
            max_gap_ms: 0,
            lines: 0,
            io_failed: false,
        }
    }

    fn emit(&mut self, p: &Path) -> ControlFlow<()> {
        let now = Instant::now();
        let gap = now.duration_since(self.last).as_millis();
        self.max_gap_ms = self.max_gap_ms.max(gap);
        self.last = now;
        let mut line = String::new();
        let _ = write!(line, "{}\t", p.weight() - self.shift);
        for (i, v) in p.vertices().iter().enumerate() {
            if i > 0 {
                line.push(' ');
            }
            let _ = write!(line, "{}", v + 1);
        }
        if writeln!(self.out, "{line}").and_then(|_| self.out.flush()).is_err() {
            self.io_failed = true;
            return ControlFlow::Break(());
        }
        self.lines += 1;
        ControlFlow::Continue(())
    }

    fn total_ms(&self) -> u128 {
        self.started.elapsed().as_millis()
    }
}

fn write_report(path: &FsPath, report: &RunReport) -> Result<(), u8> {
    std::fs::write(path, report.render()).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        EXIT_USAGE
    })
}

fn enumerate(args: EnumerateArgs) -> u8 {
    let alpha: Weight = match args.alpha.parse() {
        Ok(w) => w,
        Err(e) => {
            eprintln!("--alpha: {e}");
            return EXIT_USAGE;
        }
    };
    let engine = match resolve_engine(args.engine, args.order, args.graph.undirected) {
        Ok(engine) => engine,
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_USAGE;
        }
    };
    let g = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let (n, m) = (g.vertex_count(), g.edge_count());
    let (s, t) = match (
        file_vertex(args.source, n, "source"),
        file_vertex(args.target, n, "target"),
    ) {
        (Ok(s), Ok(t)) => (s, t),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    let (mut g, shift) = match prepare_weights(g, s, t) {
        Ok(pair) => pair,
        Err(code) => return code,
    };
    let query = BoundedPathQuery {
        source: s,
        target: t,
        budget: alpha + shift,
    };

    let mut streamer = Streamer::new(shift);
    let result = match engine {
        Engine::Recursive => list_bounded_directed(&mut g, &query, |p| streamer.emit(p)),
        Engine::Lcp => list_bounded_undirected(&mut g, &query, |p| streamer.emit(p)),
        Engine::Iterative(kind) => list_iterative(&mut g, &query, kind, |p| streamer.emit(p)),
    };
    let stats = match result {
        Ok(stats) => stats,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    };
    finish_run(
        &args.stats,
        streamer,
        stats,
        n,
        m,
        args.source,
        args.target,
        format!("alpha={alpha}"),
        engine.name(),
    )
}

fn topk(args: TopkArgs) -> u8 {
    if args.k == 0 {
        eprintln!("--k must be at least 1");
        return EXIT_USAGE;
    }
    let g = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let (n, m) = (g.vertex_count(), g.edge_count());
    let (s, t) = match (
        file_vertex(args.source, n, "source"),
        file_vertex(args.target, n, "target"),
    ) {
        (Ok(s), Ok(t)) => (s, t),
        (Err(code), _) | (_, Err(code)) => return code,
    };
    let (mut g, shift) = match prepare_weights(g, s, t) {
        Ok(pair) => pair,
        Err(code) => return code,
    };
    let mut streamer = Streamer::new(shift);
    let result = k_shortest(&mut g, s, t, args.k, |p| streamer.emit(p));
    let stats = match result {
        Ok(stats) => stats,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    };
    finish_run(
        &args.stats,
        streamer,
        stats,
        n,
        m,
        args.source,
        args.target,
        format!("k={}", args.k),
        "topk-min-key",
    )
}

#[allow(clippy::too_many_arguments)]
fn finish_run(
    stats_path: &Option<PathBuf>,
    streamer: Streamer<'_>,
    stats: EnumStats,
    n: usize,
    m: usize,
    source: usize,
    target: usize,
    query: String,
    mode: &str,
) -> u8 {
    if streamer.io_failed {
        eprintln!("failed to write path output");
        return EXIT_USAGE;
    }
    debug_assert_eq!(streamer.lines, stats.paths_emitted);
    if let Some(path) = stats_path {
        let report = RunReport {
            source,
            target,
            query,
            mode: mode.to_string(),
            n,
            m,
            stats,
            wall_total_ms: streamer.total_ms(),
            wall_max_gap_ms: streamer.max_gap_ms,
        };
        if let Err(code) = write_report(path, &report) {
            return code;
        }
    }
    EXIT_OK
}

fn verify(args: VerifyArgs) -> u8 {
    let g = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let text = match &args.paths {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                return EXIT_USAGE;
            }
        },
        None => {
            let mut buf = String::new();
            if let Err(e) = io::stdin().read_to_string(&mut buf) {
                eprintln!("stdin: {e}");
                return EXIT_USAGE;
            }
            buf
        }
    };
    let n = g.vertex_count();
    let mut checked = 0u64;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let Some((claimed, verts)) = line.split_once('\t') else {
            eprintln!("path line {lineno}: expected `<weight>\\t<v1> <v2> ...`");
            return EXIT_USAGE;
        };
        let claimed: Weight = match claimed.parse() {
            Ok(w) => w,
            Err(e) => {
                eprintln!("path line {lineno}: bad weight: {e}");
                return EXIT_USAGE;
            }
        };
        let mut ids = Vec::new();
        for tok in verts.split_whitespace() {
            match tok.parse::<usize>() {
                Ok(id) if id >= 1 && id <= n => ids.push(id - 1),
                _ => {
                    eprintln!("path line {lineno}: bad vertex id `{tok}`");
                    return EXIT_USAGE;
                }
            }
        }
        let path = match pathlist_core::Path::from_vertices(&g, &ids) {
            Ok(p) => p,
            Err(e) => {
                eprintln!("path line {lineno}: not a simple path in the graph: {e}");
                return EXIT_USAGE;
            }
        };
        let actual = g.path_weight(&path).expect("arcs were just validated");
        if actual != claimed {
            eprintln!("path line {lineno}: claimed weight {claimed} but the graph gives {actual}");
            return EXIT_USAGE;
        }
        checked += 1;
    }
    println!("verified {checked} paths");
    EXIT_OK
}

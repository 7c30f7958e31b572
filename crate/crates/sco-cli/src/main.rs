//! Command-line driver for the singly-connected orientation toolkit.
//!
//! Five subcommands cover the workflows: `check` verifies a directed
//! graph, `solve` decides orientability of an undirected graph, `classify`
//! reports polynomial-time structure, `reduce` compiles a 3-CNF formula
//! into an equivalent orientability instance, and `gen` produces graphs.
//!
//! Reports are plain `key: value` lines on standard output so runs can be
//! diffed; multi-line certificates (orientations) come last as an indented
//! section. Every certificate is re-verified before it is printed. Timing
//! is deliberately kept off standard output so reports are byte-stable
//! across runs. Exit codes: 0 for a positive verdict, 1 for a negative
//! one, 2 for errors or when no verdict was reached.

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sco::check::{check_singly_connected, verify_witness, ScWitness, Verdict};
use sco::forge::{
    glue_cycle, glue_coupling_cycle, laddercycle_steps, make_named_graph, orient_from_assignment,
    parse_dimacs, perfectify, reduce_3sat, ClauseOrder, CouplingGadget, NamedGraph, ReduceParams,
};
use sco::graph::{
    chromatic_number, find_pattern, girth, parse_digraph, parse_graph, to_edge_list, to_graph6,
    Coloring, ColoringOutcome, GraphFormat, Orientation, PatternKind, UndirectedGraph,
};
use sco::poly::{build_sdh, classify_dh, orient_by_coloring, orient_strongly_dh, parse_sdh_script};
use sco::solve::{
    count_sc_orientations, decide_sc_orientable, naive_sc_orientable, preprocess, Obstruction,
    PreprocessStatus, NAIVE_EDGE_LIMIT,
};
use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{self, Read as _, Write};
use std::path::PathBuf;

/// Toolkit for singly-connected graph orientations.
#[derive(Parser)]
#[command(name = "sco", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a directed graph has at most one path between every
    /// ordered vertex pair.
    Check(CheckArgs),
    /// Decide whether an undirected graph admits a singly-connected
    /// orientation.
    Solve(SolveArgs),
    /// Report polynomial-time structure that can settle orientability
    /// without search.
    Classify(ClassifyArgs),
    /// Compile a 3-CNF formula into a graph that is orientable exactly
    /// when the formula is satisfiable.
    Reduce(ReduceArgs),
    /// Generate graphs: named catalog, glued gadget cycles, perfectified
    /// graphs, growth scripts, random graphs.
    #[command(subcommand)]
    Gen(GenCommand),
}

/// Undirected graph text formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// First line `n`, then one `u v` line per edge; `#` comments allowed.
    #[value(name = "edge_list", alias = "edge-list")]
    EdgeList,
    /// The standard printable one-line encoding.
    #[value(name = "graph6")]
    Graph6,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::EdgeList => GraphFormat::EdgeList,
            FormatArg::Graph6 => GraphFormat::Graph6,
        }
    }
}

impl fmt::Display for FormatArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatArg::EdgeList => write!(f, "edge_list"),
            FormatArg::Graph6 => write!(f, "graph6"),
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    /// Arc-list file (`-` for standard input): first line `n`, then one
    /// `u > v` line per arc.
    input: String,
}

#[derive(Args)]
struct SolveArgs {
    /// Graph file (`-` for standard input).
    input: String,
    /// Input format.
    #[arg(long, value_enum, default_value_t = FormatArg::EdgeList)]
    format: FormatArg,
    /// Enumerate orientations directly instead of running the pruned
    /// search.
    #[arg(long)]
    naive: bool,
    /// Count all singly-connected orientations (implies enumeration).
    #[arg(long)]
    count: bool,
    /// Refuse `--naive`/`--count` above this many edges. Cannot exceed
    /// the built-in enumeration cap.
    #[arg(long, default_value_t = NAIVE_EDGE_LIMIT)]
    max_enumeration_edges: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Graph file (`-` for standard input).
    input: String,
    /// Input format.
    #[arg(long, value_enum, default_value_t = FormatArg::EdgeList)]
    format: FormatArg,
    /// Skip the exact chromatic number above this many vertices; the
    /// coloring-based verdict then reports unknown.
    #[arg(long, default_value_t = 32)]
    max_coloring_vertices: usize,
}

#[derive(Args)]
struct ReduceArgs {
    /// DIMACS CNF file with exactly three distinct variables per clause
    /// (`-` for standard input).
    input: String,
    /// Where to write the instance graph (edge list).
    #[arg(long)]
    out: PathBuf,
    /// Where to write the annotation sidecar (default: the graph path
    /// with `.ann` appended).
    #[arg(long)]
    annotations: Option<PathBuf>,
    /// Construction knobs as `key=value,...`: connector-rungs (odd, >= 3),
    /// gadget-gap (odd; clause count times gap-1 must reach 4, so >= 5 for
    /// single-clause formulas), extra-ring-steps.
    #[arg(long)]
    params: Option<String>,
    /// Clause index hosted at each block position, comma-separated
    /// permutation (default identity).
    #[arg(long)]
    order: Option<String>,
    /// Assignment bits, one per variable, leftmost = variable 1 (e.g.
    /// `101`): orient the instance accordingly and check it.
    #[arg(long)]
    assignment: Option<String>,
}

#[derive(Subcommand)]
enum GenCommand {
    /// Build a graph from the named catalog.
    Named(GenNamedArgs),
    /// Glue copies of a coupling gadget into a cycle.
    Glue(GenGlueArgs),
    /// Replace every edge by a length-two path plus a pendant triangle.
    Perfectify(GenPerfectifyArgs),
    /// Grow a graph from a pendant/twin construction script.
    Sdh(GenSdhArgs),
    /// Sample a random graph with the exact size requested.
    Random(GenRandomArgs),
}

#[derive(Args)]
struct GenOut {
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::EdgeList)]
    format: FormatArg,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenNamedArgs {
    /// One of: diamond, house, gem, domino, grid, cycle, ladder,
    /// extended-ladder, laddercycle.
    name: String,
    /// Size parameters as `key=value,...`: rows/cols (grid), len (cycle,
    /// laddercycle), rungs (ladders), attachments (`2u:3t`, u straight /
    /// t twisted, for extended-ladder).
    #[arg(long)]
    params: Option<String>,
    #[command(flatten)]
    output: GenOut,
}

#[derive(Args)]
struct GenGlueArgs {
    /// Gadget to glue; `domino` is the built-in coupling gadget.
    #[arg(long, default_value = "domino")]
    gadget: String,
    /// Number of copies to glue in a cycle.
    #[arg(long)]
    copies: Option<usize>,
    /// Whether the closing identification is crossed.
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    twist: bool,
    /// Instead of --copies: glue enough copies (odd, >= this girth
    /// target) with the crossed closure, yielding a non-orientable cycle.
    #[arg(long, conflicts_with_all = ["copies", "twist"])]
    girth: Option<usize>,
    #[command(flatten)]
    output: GenOut,
}

#[derive(Args)]
struct GenPerfectifyArgs {
    /// Graph file to transform (`-` for standard input).
    input: String,
    /// Input format (output format is set by --format in the output
    /// options).
    #[arg(long, value_enum, default_value_t = FormatArg::EdgeList)]
    input_format: FormatArg,
    #[command(flatten)]
    output: GenOut,
}

#[derive(Args)]
struct GenSdhArgs {
    /// Construction script, e.g. `P 0; T 1` (P pendant, T true twin,
    /// F false twin).
    #[arg(long, conflicts_with = "script_file")]
    script: Option<String>,
    /// Read the script from a file instead.
    #[arg(long)]
    script_file: Option<PathBuf>,
    #[command(flatten)]
    output: GenOut,
}

#[derive(Args)]
struct GenRandomArgs {
    /// Number of vertices.
    #[arg(long = "n")]
    n: usize,
    /// Number of edges, sampled uniformly among all simple graphs of
    /// this size.
    #[arg(long = "m")]
    m: usize,
    /// Random seed; equal seeds give byte-identical output.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: GenOut,
}

const EXIT_YES: i32 = 0;
const EXIT_NO: i32 = 1;
const EXIT_ERROR: i32 = 2;

fn main() {
    let args: Vec<OsString> = std::env::args_os().collect();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let code = run(&args, &mut stdout, &mut stderr);
    let _ = stdout.flush();
    let _ = stderr.flush();
    std::process::exit(code);
}

/// Parses and dispatches one invocation; the binary's whole behaviour
/// lives here so tests can drive it in-process.
fn run(args: &[OsString], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args.iter().cloned()) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render();
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{rendered}");
                EXIT_YES
            } else {
                let _ = write!(err, "{rendered}");
                EXIT_ERROR
            };
        }
    };
    let mut report = Report(out);
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a, &mut report),
        Command::Solve(a) => cmd_solve(a, &mut report),
        Command::Classify(a) => cmd_classify(a, &mut report, err),
        Command::Reduce(a) => cmd_reduce(a, &mut report),
        Command::Gen(a) => cmd_gen(a, &mut report),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            EXIT_ERROR
        }
    }
}

type CliResult = Result<i32, String>;

/// Best-effort line writer for the report document; output failures
/// (closed pipes) are ignored, matching usual filter behaviour.
struct Report<'a>(&'a mut dyn Write);

impl Report<'_> {
    fn line(&mut self, args: fmt::Arguments) {
        let _ = self.0.write_fmt(args);
        let _ = self.0.write_all(b"\n");
    }

    fn raw(&mut self, text: &str) {
        let _ = self.0.write_all(text.as_bytes());
    }
}

macro_rules! put {
    ($report:expr, $($t:tt)*) => {
        $report.line(format_args!($($t)*))
    };
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn parse_undirected(text: &str, format: FormatArg) -> Result<UndirectedGraph, String> {
    parse_graph(text, format.into()).map_err(|e| format!("parse error: {e}"))
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `key=value,...` into pairs; keys are normalized to snake case.
fn parse_kv(text: &str) -> Result<Vec<(String, String)>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|item| !item.is_empty())
        .map(|item| {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{item}`"))?;
            Ok((k.trim().replace('-', "_"), v.trim().to_string()))
        })
        .collect()
}

fn parse_count(key: &str, value: &str) -> Result<usize, String> {
    value
        .parse::<usize>()
        .map_err(|_| format!("{key} must be a non-negative integer, got `{value}`"))
}

/// Re-verifies an orientation before it is reported as a certificate.
fn certify(g: &UndirectedGraph, o: &Orientation) -> Result<(), String> {
    match check_singly_connected(&o.to_digraph(g)) {
        Verdict::SinglyConnected => Ok(()),
        Verdict::NotSinglyConnected(_) => {
            Err("internal error: an emitted orientation failed re-verification".into())
        }
    }
}

fn put_orientation(report: &mut Report, g: &UndirectedGraph, o: &Orientation) {
    put!(report, "orientation:");
    for i in 0..g.m() {
        let (u, v) = o.arc(g, i);
        put!(report, "  {u} > {v}");
    }
}

fn put_witness(report: &mut Report, w: &ScWitness) {
    put!(report, "witness-source: {}", w.s);
    put!(report, "witness-target: {}", w.t);
    put!(report, "witness-path-1: {}", join(&w.path1));
    put!(report, "witness-path-2: {}", join(&w.path2));
}

// ---- check ----

fn cmd_check(a: &CheckArgs, report: &mut Report) -> CliResult {
    let text = read_input(&a.input)?;
    let d = parse_digraph(&text).map_err(|e| format!("parse error: {e}"))?;
    put!(report, "command: check");
    put!(report, "input: {}", a.input);
    put!(report, "vertices: {}", d.n());
    put!(report, "arcs: {}", d.m());
    match check_singly_connected(&d) {
        Verdict::SinglyConnected => {
            put!(report, "verdict: singly-connected");
            Ok(EXIT_YES)
        }
        Verdict::NotSinglyConnected(w) => {
            if !verify_witness(&d, &w) {
                return Err("internal error: a witness failed replay".into());
            }
            put!(report, "verdict: not-singly-connected");
            put_witness(report, &w);
            Ok(EXIT_NO)
        }
    }
}

// ---- solve ----

fn cmd_solve(a: &SolveArgs, report: &mut Report) -> CliResult {
    let text = read_input(&a.input)?;
    let g = parse_undirected(&text, a.format)?;
    put!(report, "command: solve");
    put!(report, "input: {}", a.input);
    put!(report, "vertices: {}", g.n());
    put!(report, "edges: {}", g.m());
    let budget = a.max_enumeration_edges.min(NAIVE_EDGE_LIMIT);
    if (a.naive || a.count) && g.m() > budget {
        return Err(format!(
            "enumerating {} edges exceeds the budget of {budget} (hard cap {}); \
             run without --naive/--count for the pruned search",
            g.m(),
            NAIVE_EDGE_LIMIT
        ));
    }
    if a.count {
        put!(report, "method: count");
        let count = count_sc_orientations(&g).map_err(|e| e.to_string())?;
        put!(report, "count: {count}");
        if count == 0 {
            put!(report, "verdict: not-sc-orientable");
            return Ok(EXIT_NO);
        }
        let o = naive_sc_orientable(&g)
            .map_err(|e| e.to_string())?
            .expect("a positive count implies some orientation exists");
        certify(&g, &o)?;
        put!(report, "verdict: sc-orientable");
        put_orientation(report, &g, &o);
        return Ok(EXIT_YES);
    }
    if a.naive {
        put!(report, "method: naive");
        return match naive_sc_orientable(&g).map_err(|e| e.to_string())? {
            Some(o) => {
                certify(&g, &o)?;
                put!(report, "verdict: sc-orientable");
                put_orientation(report, &g, &o);
                Ok(EXIT_YES)
            }
            None => {
                put!(report, "verdict: not-sc-orientable");
                Ok(EXIT_NO)
            }
        };
    }
    put!(report, "method: search");
    let pre = preprocess(&g);
    put!(report, "preprocess-contractions: {}", pre.transcript.len());
    for (i, record) in pre.transcript.iter().enumerate() {
        put!(report, "contraction-{}: {}", i + 1, join(&record.triangle));
    }
    if let PreprocessStatus::EarlyNo { obstruction, .. } = &pre.status {
        let text = match obstruction {
            Obstruction::Diamond(v) => format!("diamond {}", join(v)),
            Obstruction::House(v) => format!("house {}", join(v)),
        };
        put!(report, "preprocess-obstruction: {text}");
    }
    let outcome = decide_sc_orientable(&g);
    let stats = outcome.stats();
    put!(report, "search-nodes: {}", stats.nodes);
    put!(report, "search-prunes: {}", stats.prunes);
    match outcome.orientation() {
        Some(o) => {
            certify(&g, o)?;
            put!(report, "verdict: sc-orientable");
            put_orientation(report, &g, o);
            Ok(EXIT_YES)
        }
        None => {
            put!(report, "verdict: not-sc-orientable");
            Ok(EXIT_NO)
        }
    }
}

// ---- classify ----

fn cmd_classify(a: &ClassifyArgs, report: &mut Report, err: &mut dyn Write) -> CliResult {
    let text = read_input(&a.input)?;
    let g = parse_undirected(&text, a.format)?;
    put!(report, "command: classify");
    put!(report, "input: {}", a.input);
    put!(report, "vertices: {}", g.n());
    put!(report, "edges: {}", g.m());

    let cycle_girth = girth(&g);
    match cycle_girth {
        Some(k) => put!(report, "girth: {k}"),
        None => put!(report, "girth: acyclic"),
    }

    let coloring: Option<Coloring> = if g.n() <= a.max_coloring_vertices {
        match chromatic_number(&g, g.n().max(1)) {
            ColoringOutcome::Colored(c) => Some(c),
            ColoringOutcome::Exceeded => {
                unreachable!("the chromatic number never exceeds the vertex count")
            }
        }
    } else {
        None
    };
    match &coloring {
        Some(c) => put!(report, "chromatic: {}", c.k),
        None => put!(
            report,
            "chromatic: skipped (over {} vertices)",
            a.max_coloring_vertices
        ),
    }

    // Girth at least 2k - 1 makes the coloring orientation singly
    // connected; acyclic graphs and empty colorings pass trivially.
    let bound_ok: Option<bool> = coloring.as_ref().map(|c| {
        c.k <= 1 || cycle_girth.is_none() || cycle_girth.unwrap() >= 2 * c.k - 1
    });
    match (bound_ok, &coloring, cycle_girth) {
        (Some(true), Some(c), _) => {
            put!(report, "coloring-bound: satisfied (girth >= 2 * {} - 1)", c.k)
        }
        (Some(false), Some(c), Some(k)) => {
            put!(report, "coloring-bound: not-satisfied ({k} < 2 * {} - 1)", c.k)
        }
        _ => put!(report, "coloring-bound: unknown (chromatic skipped)"),
    }

    let classification = classify_dh(&g);
    put!(
        report,
        "distance-hereditary: {}",
        classification.is_distance_hereditary
    );
    put!(
        report,
        "strongly-distance-hereditary: {}",
        classification.is_strongly_dh
    );
    let kinds = classification
        .per_block
        .iter()
        .map(|k| match k {
            sco::poly::BlockKind::Bipartite => "bipartite",
            sco::poly::BlockKind::Triangle => "triangle",
            sco::poly::BlockKind::Other => "other",
        })
        .collect::<Vec<_>>()
        .join(" ");
    put!(
        report,
        "block-kinds: {}",
        if kinds.is_empty() { "none" } else { &kinds }
    );
    if let Some(obstruction) = &classification.obstruction {
        put!(report, "dh-obstruction: {obstruction}");
    }

    for (label, kind) in [
        ("diamond", PatternKind::Diamond),
        ("house", PatternKind::House),
        ("gem", PatternKind::Gem),
        ("domino", PatternKind::Domino),
    ] {
        match find_pattern(&g, kind, true) {
            Some(embedding) => put!(report, "induced-{label}: {}", join(&embedding.vertices)),
            None => put!(report, "induced-{label}: none"),
        }
    }
    let diamond_subgraph = find_pattern(&g, PatternKind::Diamond, false);
    let house_subgraph = find_pattern(&g, PatternKind::House, false);
    for (label, found) in [
        ("diamond-subgraph", &diamond_subgraph),
        ("house-subgraph", &house_subgraph),
    ] {
        match found {
            Some(embedding) => put!(report, "{label}: {}", join(&embedding.vertices)),
            None => put!(report, "{label}: none"),
        }
    }

    // Settle the instance when a polynomial criterion applies. A diamond
    // or house subgraph rules every orientation out; the coloring bound
    // or an all-bipartite-or-triangle block structure rules one in.
    if diamond_subgraph.is_some() {
        put!(report, "settles: not-sc-orientable (diamond subgraph)");
        return Ok(EXIT_NO);
    }
    if house_subgraph.is_some() {
        put!(report, "settles: not-sc-orientable (house subgraph)");
        return Ok(EXIT_NO);
    }
    if bound_ok == Some(true) {
        let c = coloring.expect("bound_ok implies a coloring");
        let o = orient_by_coloring(&g, &c).map_err(|e| format!("internal error: {e}"))?;
        certify(&g, &o)?;
        put!(report, "settles: sc-orientable (coloring bound)");
        put_orientation(report, &g, &o);
        return Ok(EXIT_YES);
    }
    if classification.is_strongly_dh {
        let o = orient_strongly_dh(&g).map_err(|e| format!("internal error: {e}"))?;
        certify(&g, &o)?;
        put!(report, "settles: sc-orientable (block structure)");
        put_orientation(report, &g, &o);
        return Ok(EXIT_YES);
    }
    put!(report, "settles: inconclusive");
    let _ = writeln!(
        err,
        "classification inconclusive: no polynomial criterion applied; run `sco solve` for an exact answer"
    );
    Ok(EXIT_ERROR)
}

// ---- reduce ----

fn parse_reduce_params(text: Option<&str>) -> Result<ReduceParams, String> {
    let mut params = ReduceParams::default();
    let Some(text) = text else {
        return Ok(params);
    };
    for (key, value) in parse_kv(text)? {
        match key.as_str() {
            "connector_rungs" => params.connector_rungs = parse_count(&key, &value)?,
            "gadget_gap" => params.gadget_gap = parse_count(&key, &value)?,
            "extra_ring_steps" => params.extra_ring_steps = parse_count(&key, &value)?,
            other => {
                return Err(format!(
                    "unknown parameter `{other}`; expected connector-rungs, gadget-gap, or extra-ring-steps"
                ))
            }
        }
    }
    Ok(params)
}

fn parse_assignment(bits: &str, num_vars: usize) -> Result<Vec<bool>, String> {
    let gamma: Vec<bool> = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(format!("assignment bits must be 0 or 1, got `{other}`")),
        })
        .collect::<Result<_, _>>()?;
    if gamma.len() != num_vars {
        return Err(format!(
            "assignment has {} bits but the formula has {num_vars} variables",
            gamma.len()
        ));
    }
    Ok(gamma)
}

fn annotations_document(arts: &sco::forge::ReductionArtifacts) -> String {
    let mut doc = String::new();
    let mut line = |s: String| {
        doc.push_str(&s);
        doc.push('\n');
    };
    line("# reduction annotations".to_string());
    line(format!("universal-step0: {} {}", arts.universal_step0.0, arts.universal_step0.1));
    for (x, &(u, v)) in arts.var_step0.iter().enumerate() {
        line(format!("var-step0 {}: {u} {v}", x + 1));
    }
    for (c, edges) in arts.clause_edges.iter().enumerate() {
        let pairs = [
            ("in-rung", edges.in_rung),
            ("out-rung", edges.out_rung),
            ("e2", edges.e2),
            ("e4", edges.e4),
            ("e5", edges.e5),
        ];
        for (label, (u, v)) in pairs {
            line(format!("clause {c} {label}: {u} {v}"));
        }
        for (slot, &(u, v)) in edges.literal_edges.iter().enumerate() {
            line(format!(
                "clause {c} literal {slot}: {u} {v} (parity {})",
                arts.literal_parity[c][slot]
            ));
        }
    }
    line("edge-networks:".to_string());
    for (e, &(u, v)) in arts.graph.edges().iter().enumerate() {
        line(format!("  {u} {v} {}", arts.edge_network[e]));
    }
    line(format!("notes: {}", arts.notes));
    doc
}

fn cmd_reduce(a: &ReduceArgs, report: &mut Report) -> CliResult {
    let text = read_input(&a.input)?;
    let formula = parse_dimacs(&text).map_err(|e| format!("parse error: {e}"))?;
    let params = parse_reduce_params(a.params.as_deref())?;
    let order = match &a.order {
        Some(list) => {
            let sequence: Vec<usize> = list
                .split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| parse_count("order", t))
                .collect::<Result<_, _>>()?;
            ClauseOrder::new(sequence).map_err(|e| e.to_string())?
        }
        None => ClauseOrder::identity(formula.num_clauses()),
    };
    let arts = reduce_3sat(&formula, &order, &params).map_err(|e| e.to_string())?;

    put!(report, "command: reduce");
    put!(report, "input: {}", a.input);
    put!(report, "variables: {}", formula.num_vars());
    put!(report, "clauses: {}", formula.num_clauses());
    put!(report, "order: {}", join(order.sequence()));
    put!(report, "connector-rungs: {}", params.connector_rungs);
    put!(report, "gadget-gap: {}", params.gadget_gap);
    put!(report, "extra-ring-steps: {}", params.extra_ring_steps);
    put!(report, "vertices: {}", arts.graph.n());
    put!(report, "edges: {}", arts.graph.m());
    put!(
        report,
        "universal-step0: {} {}",
        arts.universal_step0.0,
        arts.universal_step0.1
    );

    let graph_doc = format!(
        "# singly-connected orientability instance for a 3-CNF formula\n\
         # {} variables, {} clauses; orientable exactly when satisfiable\n{}",
        formula.num_vars(),
        formula.num_clauses(),
        to_edge_list(&arts.graph)
    );
    fs::write(&a.out, graph_doc).map_err(|e| format!("writing {}: {e}", a.out.display()))?;
    put!(report, "graph-file: {}", a.out.display());
    let ann_path = a.annotations.clone().unwrap_or_else(|| {
        let mut s = a.out.clone().into_os_string();
        s.push(".ann");
        PathBuf::from(s)
    });
    fs::write(&ann_path, annotations_document(&arts))
        .map_err(|e| format!("writing {}: {e}", ann_path.display()))?;
    put!(report, "annotations-file: {}", ann_path.display());

    let Some(bits) = &a.assignment else {
        return Ok(EXIT_YES);
    };
    let gamma = parse_assignment(bits, formula.num_vars())?;
    let o = orient_from_assignment(&arts, &gamma).map_err(|e| e.to_string())?;
    put!(report, "assignment: {bits}");
    match check_singly_connected(&o.to_digraph(&arts.graph)) {
        Verdict::SinglyConnected => {
            put!(report, "assignment-verdict: singly-connected");
            Ok(EXIT_YES)
        }
        Verdict::NotSinglyConnected(w) => {
            if !verify_witness(&o.to_digraph(&arts.graph), &w) {
                return Err("internal error: a witness failed replay".into());
            }
            put!(report, "assignment-verdict: not-singly-connected");
            put_witness(report, &w);
            Ok(EXIT_NO)
        }
    }
}

// ---- gen ----

fn cmd_gen(command: &GenCommand, report: &mut Report) -> CliResult {
    match command {
        GenCommand::Named(a) => gen_named(a, report),
        GenCommand::Glue(a) => gen_glue(a, report),
        GenCommand::Perfectify(a) => gen_perfectify(a, report),
        GenCommand::Sdh(a) => gen_sdh(a, report),
        GenCommand::Random(a) => gen_random(a, report),
    }
}

/// Writes the generated graph to the requested sink. Edge-list output
/// carries the echo lines as `#` comments, so the document stays
/// self-describing and still parses; graph6 output is the bare line.
fn emit_graph(
    g: &UndirectedGraph,
    output: &GenOut,
    echo: &[String],
    report: &mut Report,
) -> CliResult {
    let doc = match output.format {
        FormatArg::EdgeList => {
            let mut text = String::new();
            for line in echo {
                text.push_str("# ");
                text.push_str(line);
                text.push('\n');
            }
            text.push_str(&format!("# vertices: {}  edges: {}\n", g.n(), g.m()));
            text.push_str(&to_edge_list(g));
            text
        }
        FormatArg::Graph6 => {
            let mut text = to_graph6(g);
            if !text.ends_with('\n') {
                text.push('\n');
            }
            text
        }
    };
    match &output.out {
        Some(path) => {
            fs::write(path, doc).map_err(|e| format!("writing {}: {e}", path.display()))?;
            put!(report, "graph-file: {}", path.display());
        }
        None => report.raw(&doc),
    }
    Ok(EXIT_YES)
}

fn require(
    kv: &[(String, String)],
    key: &str,
    usage: &str,
) -> Result<usize, String> {
    let value = kv
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| v.as_str())
        .ok_or_else(|| format!("missing parameter `{key}`; usage: --params {usage}"))?;
    parse_count(key, value)
}

fn gen_named(a: &GenNamedArgs, report: &mut Report) -> CliResult {
    let kv = match &a.params {
        Some(text) => parse_kv(text)?,
        None => Vec::new(),
    };
    let known = |allowed: &[&str]| -> Result<(), String> {
        for (k, _) in &kv {
            if !allowed.contains(&k.as_str()) {
                return Err(format!(
                    "unknown parameter `{k}` for {}; expected one of: {}",
                    a.name,
                    allowed.join(", ")
                ));
            }
        }
        Ok(())
    };
    let name = a.name.to_ascii_lowercase();
    let spec = match name.as_str() {
        "diamond" => NamedGraph::Diamond,
        "house" => NamedGraph::House,
        "gem" => NamedGraph::Gem,
        "domino" => NamedGraph::Domino,
        "grid" => {
            known(&["rows", "cols"])?;
            NamedGraph::Grid {
                rows: require(&kv, "rows", "rows=R,cols=C")?,
                cols: require(&kv, "cols", "rows=R,cols=C")?,
            }
        }
        "cycle" => {
            known(&["len"])?;
            NamedGraph::Cycle {
                len: require(&kv, "len", "len=K")?,
            }
        }
        "ladder" => {
            known(&["rungs"])?;
            NamedGraph::Ladder {
                rungs: require(&kv, "rungs", "rungs=K")?,
            }
        }
        "extended-ladder" | "extendedladder" => {
            known(&["rungs", "attachments"])?;
            let rungs = require(&kv, "rungs", "rungs=K,attachments=2u:3t")?;
            let attachments = match kv.iter().find(|(k, _)| k == "attachments") {
                None => Vec::new(),
                Some((_, list)) => list
                    .split(':')
                    .filter(|t| !t.is_empty())
                    .map(|token| {
                        let (step, twist) = match token.as_bytes().last() {
                            Some(b'u') | Some(b'U') => (&token[..token.len() - 1], false),
                            Some(b't') | Some(b'T') => (&token[..token.len() - 1], true),
                            _ => {
                                return Err(format!(
                                    "attachment `{token}` must end in u (straight) or t (twisted)"
                                ))
                            }
                        };
                        Ok((parse_count("attachment step", step)?, twist))
                    })
                    .collect::<Result<Vec<_>, String>>()?,
            };
            NamedGraph::ExtendedLadder { rungs, attachments }
        }
        "laddercycle" | "ladder-cycle" => {
            known(&["len"])?;
            NamedGraph::LadderCycle {
                len: require(&kv, "len", "len=K")?,
            }
        }
        other => {
            return Err(format!(
                "unknown graph name `{other}`; available: diamond, house, gem, domino, \
                 grid, cycle, ladder, extended-ladder, laddercycle"
            ))
        }
    };
    let g = make_named_graph(&spec).map_err(|e| e.to_string())?;
    let mut echo = vec![format!(
        "command: gen named {name}{}",
        a.params
            .as_deref()
            .map(|p| format!(" ({p})"))
            .unwrap_or_default()
    )];
    // Even ladder-cycles carry marked step edges whose orientations move
    // in lockstep; echo them so downstream tooling can find them.
    if let NamedGraph::LadderCycle { len } = spec {
        if let Ok(steps) = laddercycle_steps(len) {
            for (u, v) in steps {
                echo.push(format!("step-edge: {u} {v}"));
            }
        }
    }
    emit_graph(&g, &a.output, &echo, report)
}

fn builtin_gadget(name: &str) -> Result<CouplingGadget, String> {
    match name.to_ascii_lowercase().as_str() {
        "domino" => {
            let g = make_named_graph(&NamedGraph::Domino).expect("catalog graph");
            CouplingGadget::new(g, (0, 3), (2, 5)).map_err(|e| e.to_string())
        }
        other => Err(format!("unknown gadget `{other}`; available: domino")),
    }
}

fn gen_glue(a: &GenGlueArgs, report: &mut Report) -> CliResult {
    let gadget = builtin_gadget(&a.gadget)?;
    let (g, echo) = match (a.copies, a.girth) {
        (Some(copies), None) => (
            glue_cycle(&gadget, copies, a.twist).map_err(|e| e.to_string())?,
            format!(
                "command: gen glue {} x{copies} ({})",
                a.gadget,
                if a.twist { "twisted" } else { "straight" }
            ),
        ),
        (None, Some(girth_target)) => (
            glue_coupling_cycle(&gadget, girth_target).map_err(|e| e.to_string())?,
            format!(
                "command: gen glue {} (girth target {girth_target}, twisted)",
                a.gadget
            ),
        ),
        _ => return Err("pass exactly one of --copies or --girth".into()),
    };
    emit_graph(&g, &a.output, &[echo], report)
}

fn gen_perfectify(a: &GenPerfectifyArgs, report: &mut Report) -> CliResult {
    let text = read_input(&a.input)?;
    let g = parse_undirected(&text, a.input_format)?;
    let transformed = perfectify(&g);
    let echo = format!(
        "command: gen perfectify {} ({} vertices, {} edges in)",
        a.input,
        g.n(),
        g.m()
    );
    emit_graph(&transformed, &a.output, &[echo], report)
}

fn gen_sdh(a: &GenSdhArgs, report: &mut Report) -> CliResult {
    let script = match (&a.script, &a.script_file) {
        (Some(text), None) => text.clone(),
        (None, Some(path)) => fs::read_to_string(path)
            .map_err(|e| format!("reading {}: {e}", path.display()))?,
        _ => return Err("pass exactly one of --script or --script-file".into()),
    };
    let steps = parse_sdh_script(&script).map_err(|e| e.to_string())?;
    let g = build_sdh(&steps).map_err(|e| e.to_string())?;
    let echo = format!("command: gen sdh ({} steps)", steps.len());
    emit_graph(&g, &a.output, &[echo], report)
}

fn gen_random(a: &GenRandomArgs, report: &mut Report) -> CliResult {
    const MAX_RANDOM_VERTICES: usize = 4096;
    if a.n > MAX_RANDOM_VERTICES {
        return Err(format!(
            "random graphs are capped at {MAX_RANDOM_VERTICES} vertices, got {}",
            a.n
        ));
    }
    let total = a.n * a.n.saturating_sub(1) / 2;
    if a.m > total {
        return Err(format!(
            "{} vertices allow at most {total} edges, got {}",
            a.n, a.m
        ));
    }
    let mut pairs = Vec::with_capacity(total);
    for u in 0..a.n {
        for v in u + 1..a.n {
            pairs.push((u, v));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let chosen = rand::seq::index::sample(&mut rng, total, a.m);
    let edges: Vec<(usize, usize)> = chosen.iter().map(|i| pairs[i]).collect();
    let g = UndirectedGraph::new(a.n, &edges).expect("sampled pairs are distinct and simple");
    let echo = format!(
        "command: gen random (n {}, m {}, seed {})",
        a.n, a.m, a.seed
    );
    emit_graph(&g, &a.output, &[echo], report)
}

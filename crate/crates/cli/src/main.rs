//! `eod`: efficient open domination in Cartesian products.
//!
//! Exit status: 0 for yes/found/all-pass, 1 for no/not-found/failures,
//! 2 for usage, parse and I/O errors.

mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eod_core::amenability::{
    check_amenable, cycle_partition_to_parallel_eod, eod_to_kmn_partition, eod_to_kr_partition, find_amenable,
    find_zigzag_set, is_zigzag_set, kmn_partition_to_eod, kr_partition_to_eod, parallel_eod_to_cycle_partition,
    Flavor, ZigzagSet,
};
use eod_core::eod::{
    enumerate_eod_sets_with, find_eod_set, is_eod_set, is_parallel_eod, parse_vertex_set, EodCertificate, Outcome,
    SearchOptions,
};
use eod_core::harness::{load_fixture, run_suite, SuiteId, SuiteParams, FIXTURE_NAMES};
use eod_core::io::{write_graph, GraphFormat};
use eod_core::oracles;
use eod_core::product::{cartesian_product, Factor, ProductDims};
use eod_core::trees::{canonical_code, enumerate_trees, generate_family, recognize_tree, RecognizeOutcome, TreeTrace};
use eod_core::{Error, Graph, VertexSet};

use input::{read_graph, read_partition, read_text};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("I/O error: {0}")]
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::Precondition { .. }) => 1,
            _ => 2,
        }
    }
}

type CliResult = Result<bool, CliError>;

#[derive(Parser)]
#[command(name = "eod", version, about = "Efficient open domination in Cartesian products")]
struct Cli {
    /// Input graph format; detected from the text when omitted.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<GraphFormat>,
    #[command(subcommand)]
    command: Command,
}

fn parse_format(s: &str) -> Result<GraphFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum FactorArg {
    First,
    Second,
}

impl From<FactorArg> for Factor {
    fn from(f: FactorArg) -> Factor {
        match f {
            FactorArg::First => Factor::First,
            FactorArg::Second => Factor::Second,
        }
    }
}

/// The graph to search: `G`, or `G □ H` with `--times H`.
#[derive(Args)]
struct Target {
    /// Graph file, `-` for stdin, or a family such as @C8, @K3, @K2,3, @fig1.
    graph: String,
    /// Take the Cartesian product with this second factor.
    #[arg(long)]
    times: Option<String>,
}

impl Target {
    fn load(&self, format: Option<GraphFormat>) -> Result<(Graph, Option<ProductDims>), CliError> {
        let g = read_graph(&self.graph, format)?;
        match &self.times {
            None => Ok((g, None)),
            Some(h) => {
                let h = read_graph(h, format)?;
                let (p, dims) = cartesian_product(&g, &h);
                Ok((p, Some(dims)))
            }
        }
    }

    fn options(&self, format: Option<GraphFormat>, parallel: Option<FactorArg>) -> Result<(Graph, SearchOptions), CliError> {
        let (g, dims) = self.load(format)?;
        let opts = match (parallel, dims) {
            (None, _) => SearchOptions::default(),
            (Some(f), Some(dims)) => SearchOptions::parallel_to(dims, f.into()),
            (Some(_), None) => return Err(Error::Usage("--parallel needs --times".into()).into()),
        };
        Ok((g, opts))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the Cartesian product G □ H.
    Product {
        g: String,
        h: String,
        /// Output format.
        #[arg(long, default_value = "edge-list", value_parser = parse_format)]
        to: GraphFormat,
    },
    /// Check whether a vertex set is an EOD-set.
    CheckEod {
        #[command(flatten)]
        target: Target,
        /// The set, e.g. "D={0,1,4,5}" or "0 1 4 5".
        set: String,
        /// Also report whether the set is parallel with respect to this factor.
        #[arg(long)]
        parallel: Option<FactorArg>,
    },
    /// Find one EOD-set.
    FindEod {
        #[command(flatten)]
        target: Target,
        /// Only accept sets parallel with respect to this factor (needs --times).
        #[arg(long)]
        parallel: Option<FactorArg>,
    },
    /// List every EOD-set.
    EnumEod {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        parallel: Option<FactorArg>,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Check a weak partition against the amenability conditions.
    CheckAmenable {
        graph: String,
        /// Partition file (or - for stdin).
        partition: String,
        /// k<r>, kmn:<m>,<n>, c4 or c5.
        #[arg(long, value_parser = parse_flavor)]
        flavor: Flavor,
    },
    /// Search for an amenable weak partition.
    FindAmenable {
        graph: String,
        #[arg(long, value_parser = parse_flavor)]
        flavor: Flavor,
    },
    /// Zig-zag sets.
    Zigzag {
        #[command(subcommand)]
        action: ZigzagCommand,
    },
    /// Turn an amenable partition into the EOD-set of the product it certifies.
    ToEod {
        graph: String,
        partition: String,
        #[arg(long, value_parser = parse_flavor)]
        flavor: Flavor,
    },
    /// Read a partition back off an EOD-set of G □ H.
    FromEod {
        graph: String,
        /// Certificate line "EOD n=.. D={..}" or a bare set.
        set: String,
        #[arg(long, value_parser = parse_flavor)]
        flavor: Flavor,
    },
    /// Trees and the family T_r.
    Trees {
        #[command(subcommand)]
        action: TreesCommand,
    },
    /// Closed-form answers.
    Oracle {
        #[command(subcommand)]
        query: OracleCommand,
    },
    /// Run a verification suite ("list" to show them).
    Suite(SuiteArgs),
    /// Show a built-in example graph and its labels.
    Fixture {
        name: String,
        /// Check the labels and exit 1 if they do not verify.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Subcommand)]
enum ZigzagCommand {
    /// Check an edge set given as "u-v u-v ...".
    Check { graph: String, edges: String },
    /// Search for a zig-zag set.
    Find { graph: String },
}

#[derive(Subcommand)]
enum TreesCommand {
    /// Canonical codes of the members of T_r up to an order.
    Gen {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        max_order: usize,
    },
    /// Decide membership in T_r and print a construction trace.
    Recognize {
        graph: String,
        #[arg(long)]
        r: usize,
    },
    /// All trees of an order, one graph6 line each.
    Enum {
        order: usize,
        /// Print canonical codes instead of graph6.
        #[arg(long)]
        codes: bool,
    },
    /// Rebuild the tree a trace describes.
    Replay {
        trace: String,
        #[arg(long, default_value = "edge-list", value_parser = parse_format)]
        to: GraphFormat,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    Path { n: usize },
    Cycle { n: usize },
    Grid { r: usize, t: usize },
    TorusParallel { r: usize, t: usize },
    C4Torus { t: usize },
    Torus { r: usize, t: usize },
}

#[derive(Args)]
struct SuiteArgs {
    /// Suite id, e.g. KR_EQUIV, or "list".
    id: String,
    #[arg(long)]
    min_order: Option<usize>,
    #[arg(long)]
    max_order: Option<usize>,
    /// Comma-separated r values.
    #[arg(long, value_delimiter = ',')]
    r: Option<Vec<usize>>,
    /// Comma-separated m x n pairs, e.g. 1x2,2x3.
    #[arg(long, value_delimiter = ',')]
    kmn: Option<Vec<String>>,
    /// Comma-separated cycle lengths.
    #[arg(long, value_delimiter = ',')]
    k: Option<Vec<usize>>,
    #[arg(long)]
    tree_max_order: Option<usize>,
    #[arg(long)]
    family_max_order: Option<usize>,
    #[arg(long)]
    torus_max: Option<usize>,
    /// Allow labeled sweeps above 6 vertices.
    #[arg(long)]
    allow_large: bool,
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Append the key=value dump.
    #[arg(long)]
    kv: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("eod: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn print_set_line(cert: &EodCertificate) {
    println!("{cert}");
}

fn run(cli: Cli) -> CliResult {
    let fmt = cli.format;
    match cli.command {
        Command::Product { g, h, to } => {
            let (p, _) = cartesian_product(&read_graph(&g, fmt)?, &read_graph(&h, fmt)?);
            print!("{}", ensure_newline(write_graph(&p, to)?));
            Ok(true)
        }
        Command::CheckEod { target, set, parallel } => {
            let (g, dims) = target.load(fmt)?;
            let d = parse_vertex_set(&set)?;
            d.check_within(g.order())?;
            let ok = is_eod_set(&g, &d);
            println!("{}", if ok { "yes" } else { "no" });
            if let (true, Some(f), Some(dims)) = (ok, parallel, dims) {
                let par = is_parallel_eod(&g, dims, f.into(), &d)?;
                println!("parallel={par}");
                return Ok(par);
            }
            Ok(ok)
        }
        Command::FindEod { target, parallel } => {
            let (g, opts) = target.options(fmt, parallel)?;
            let cert = find_eod_set(&g, &opts)?;
            print_set_line(&cert);
            Ok(cert.is_found())
        }
        Command::EnumEod { target, parallel, count } => {
            let (g, opts) = target.options(fmt, parallel)?;
            let sets = enumerate_eod_sets_with(&g, &opts)?;
            if !count {
                for d in &sets {
                    println!("{d}");
                }
            }
            println!("count={}", sets.len());
            Ok(!sets.is_empty())
        }
        Command::CheckAmenable { graph, partition, flavor } => {
            let g = read_graph(&graph, fmt)?;
            let p = read_partition(&partition, flavor, g.order())?;
            let report = check_amenable(&g, &p)?;
            if report.is_ok() {
                println!("OK {flavor}-amenable");
            }
            for v in &report.violations {
                println!("{v}");
            }
            Ok(report.is_ok())
        }
        Command::FindAmenable { graph, flavor } => {
            let g = read_graph(&graph, fmt)?;
            match find_amenable(&g, flavor)? {
                Some(p) => {
                    print!("{}", p.to_text());
                    Ok(true)
                }
                None => {
                    println!("none");
                    Ok(false)
                }
            }
        }
        Command::Zigzag { action } => zigzag(action, fmt),
        Command::ToEod { graph, partition, flavor } => {
            let g = read_graph(&graph, fmt)?;
            let p = read_partition(&partition, flavor, g.order())?;
            let d = match flavor {
                Flavor::Kr(_) => kr_partition_to_eod(&g, &p)?,
                Flavor::Kmn(..) => kmn_partition_to_eod(&g, &p)?,
                Flavor::C4 | Flavor::C5 => cycle_partition_to_parallel_eod(&g, &p)?,
            };
            let order = g.order() * flavor.factor_order();
            print_set_line(&EodCertificate {
                order,
                outcome: Outcome::Found(d),
                nodes_explored: 0,
                is_parallel_wrt_first: None,
            });
            Ok(true)
        }
        Command::FromEod { graph, set, flavor } => {
            let g = read_graph(&graph, fmt)?;
            let d = read_set_or_certificate(&set)?;
            let dims = ProductDims::new(g.order(), flavor.factor_order());
            d.check_within(dims.order())?;
            let p = match flavor {
                Flavor::Kr(r) => eod_to_kr_partition(dims, r, &d)?,
                Flavor::Kmn(m, n) => eod_to_kmn_partition(dims, m, n, &d)?,
                Flavor::C4 => parallel_eod_to_cycle_partition(dims, 4, &d)?,
                Flavor::C5 => parallel_eod_to_cycle_partition(dims, 5, &d)?,
            };
            print!("{}", p.to_text());
            Ok(check_amenable(&g, &p)?.is_ok())
        }
        Command::Trees { action } => trees(action, fmt),
        Command::Oracle { query } => oracle(query),
        Command::Suite(args) => suite(args),
        Command::Fixture { name, verify } => fixture(&name, verify),
    }
}

fn ensure_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn read_set_or_certificate(arg: &str) -> Result<VertexSet, CliError> {
    let text = if std::path::Path::new(arg).is_file() || arg == "-" {
        read_text(arg)?
    } else {
        arg.to_string()
    };
    let text = text.trim();
    if text.starts_with("EOD") || text.starts_with("NO-EOD") {
        let cert: EodCertificate = text.parse()?;
        return cert
            .found()
            .cloned()
            .ok_or_else(|| Error::Usage("certificate records no EOD-set".into()).into());
    }
    Ok(parse_vertex_set(text)?)
}

fn parse_edges(text: &str) -> Result<ZigzagSet, CliError> {
    let edges = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.split_once('-')
                .and_then(|(u, v)| Some((u.parse().ok()?, v.parse().ok()?)))
                .ok_or_else(|| Error::Usage(format!("{t:?} is not an edge u-v")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ZigzagSet::new(edges))
}

fn zigzag(action: ZigzagCommand, fmt: Option<GraphFormat>) -> CliResult {
    match action {
        ZigzagCommand::Check { graph, edges } => {
            let g = read_graph(&graph, fmt)?;
            let report = is_zigzag_set(&g, &parse_edges(&edges)?)?;
            if report.is_ok() {
                println!("OK zig-zag set");
            }
            for v in &report.violations {
                println!("{v}");
            }
            Ok(report.is_ok())
        }
        ZigzagCommand::Find { graph } => match find_zigzag_set(&read_graph(&graph, fmt)?)? {
            Some(z) => {
                println!("{z}");
                Ok(true)
            }
            None => {
                println!("none");
                Ok(false)
            }
        },
    }
}

fn trees(action: TreesCommand, fmt: Option<GraphFormat>) -> CliResult {
    match action {
        TreesCommand::Gen { r, max_order } => {
            for code in generate_family(r, max_order)? {
                println!("{code}");
            }
            Ok(true)
        }
        TreesCommand::Recognize { graph, r } => match recognize_tree(&read_graph(&graph, fmt)?, r)? {
            RecognizeOutcome::P2 => {
                println!("P2 (K_{r}-amenable, not in T_{r})");
                Ok(true)
            }
            RecognizeOutcome::Member(trace) => {
                println!("{trace}");
                Ok(true)
            }
            RecognizeOutcome::NotMember => {
                println!("not a member of T_{r}");
                Ok(false)
            }
        },
        TreesCommand::Enum { order, codes } => {
            for t in enumerate_trees(order) {
                if codes {
                    println!("{}", canonical_code(&t)?);
                } else {
                    println!("{}", write_graph(&t, GraphFormat::Graph6)?.trim_end());
                }
            }
            Ok(true)
        }
        TreesCommand::Replay { trace, to } => {
            let text = if std::path::Path::new(&trace).is_file() || trace == "-" {
                read_text(&trace)?
            } else {
                trace
            };
            let tree = text.trim().parse::<TreeTrace>()?.replay()?;
            print!("{}", ensure_newline(write_graph(tree.tree(), to)?));
            Ok(true)
        }
    }
}

fn oracle(query: OracleCommand) -> CliResult {
    let answer = match query {
        OracleCommand::Path { n } => oracles::path_eod(n)?,
        OracleCommand::Cycle { n } => oracles::cycle_eod(n)?,
        OracleCommand::Grid { r, t } => oracles::grid_eod(r, t)?,
        OracleCommand::TorusParallel { r, t } => oracles::torus_parallel_eod(r, t)?,
        OracleCommand::C4Torus { t } => oracles::c4_torus_eod(t)?,
        OracleCommand::Torus { r, t } => oracles::torus_eod(r, t)?,
    };
    println!("{answer}");
    Ok(answer.value)
}

fn suite(args: SuiteArgs) -> CliResult {
    if args.id.eq_ignore_ascii_case("list") {
        for id in SuiteId::ALL {
            println!("{:<15} {}", id.name(), id.summary());
        }
        return Ok(true);
    }
    let id: SuiteId = args.id.parse()?;
    let mut params = SuiteParams::defaults(id);
    if let Some(v) = args.min_order {
        params.min_order = v;
    }
    if let Some(v) = args.max_order {
        params.max_order = v;
    }
    if let Some(v) = args.r {
        params.r_values = v;
    }
    if let Some(pairs) = args.kmn {
        params.kmn = pairs
            .iter()
            .map(|p| {
                p.split_once('x')
                    .and_then(|(m, n)| Some((m.parse().ok()?, n.parse().ok()?)))
                    .ok_or_else(|| Error::Usage(format!("{p:?} is not an m x n pair like 2x3")))
            })
            .collect::<Result<_, _>>()?;
    }
    if let Some(v) = args.k {
        params.cycle_k = v;
    }
    if let Some(v) = args.tree_max_order {
        params.tree_max_order = v;
    }
    if let Some(v) = args.family_max_order {
        params.family_max_order = v;
    }
    if let Some(v) = args.torus_max {
        params.torus_max = v;
    }
    params.allow_large = args.allow_large;
    params.workers = args.workers;
    let report = run_suite(id, &params)?;
    print!("{}", report.to_text());
    if args.kv {
        print!("{}", report.to_kv());
    }
    Ok(report.is_success())
}

fn fixture(name: &str, verify: bool) -> CliResult {
    let f = load_fixture(name).map_err(|e| match e {
        Error::Usage(_) => Error::Usage(format!("unknown fixture {name:?}; known: {}", FIXTURE_NAMES.join(", "))),
        other => other,
    })?;
    println!("fixture {}: {}", f.name, f.description);
    println!("factor {}", f.factor_name);
    println!("vertices {}", f.vertex_names.join(" "));
    let edges: Vec<String> = f
        .graph
        .edges()
        .map(|(u, v)| format!("{}-{}", f.vertex_names[u], f.vertex_names[v]))
        .collect();
    println!("edges {}", edges.join(" "));
    print!("{}", f.labels_text());
    let d = f.implied_set()?;
    println!("D {d} (|D|={})", d.len());
    if verify {
        let ok = f.verify()?;
        println!("verify {}", if ok { "pass" } else { "fail" });
        return Ok(ok);
    }
    Ok(true)
}

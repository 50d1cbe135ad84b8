//! `spexlab` command-line front end.
//!
//! Exit status: 0 on success or PASS, 1 on FAIL, 2 on usage or input errors,
//! 3 when a search budget runs out.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use spexlab::constructors::{
    complete, complete_bipartite, core_component, enumerate_family_bounded, family_representative, maximum_matching,
    odd_wheel, path, predicted_candidate, primitive, spex_candidate, circulant_regular, CandidateSpec, FamilyKind,
    FamilySpec, Primitive, REmbedding,
};
use spexlab::detect::{
    contains_cycle_of_length_with_budget, contains_odd_wheel_with, is_star_free, longest_path_order_with_budget,
    DEFAULT_BUDGET,
};
use spexlab::io::{decode_any, decode_graph6, encode_edge_list, encode_graph6};
use spexlab::spectral::{spectral_radius_with, PowerOptions, DEFAULT_MAX_ITERATIONS};
use spexlab::verify::{self, VerificationReport, VerifyOptions, CLAIMS};
use spexlab::walks::{walk_compare, walk_profile};
use spexlab::{Error, Exec, Graph};

#[derive(Parser)]
#[command(name = "spexlab", version, about = "Spectral extremal graph laboratory for odd-wheel-free graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Eigensolver residual tolerance.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    /// Walk-count horizon; defaults to twice the largest order involved.
    #[arg(long, global = true)]
    max_walk: Option<usize>,
    /// Search budget for subgraph detection, or member cap for enumeration.
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run sequentially instead of on the thread pool.
    #[arg(long, global = true)]
    serial: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a named graph or candidate.
    Construct(ConstructArgs),
    /// Subgraph queries on a graph.
    Check(CheckArgs),
    /// Spectral radius and Perron vector.
    Spectral {
        /// graph6 string, graph file, or `-` for stdin.
        graph: String,
    },
    /// Walk-count profile W^1..W^L.
    Walks {
        graph: String,
        /// Emit `level,count` CSV instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Walk-order relation of two graphs.
    Compare { a: String, b: String },
    /// Enumerate a family as a graph6 stream.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Degree parameter: k for U and V, Δ for G.
        #[arg(long, visible_alias = "delta")]
        k: usize,
        #[arg(long)]
        order: usize,
    },
    /// Run a verification job and emit its report.
    Verify(VerifyArgs),
    /// Exhaustive radius maximizers among odd-wheel-free graphs on at most 8 vertices.
    BruteSpex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    U,
    V,
    G,
}

impl From<FamilyArg> for FamilyKind {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::U => FamilyKind::U,
            FamilyArg::V => FamilyKind::V,
            FamilyArg::G => FamilyKind::GFam,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstructKind {
    OddWheel,
    Core,
    Complete,
    Cycle,
    Matching,
    Empty,
    Path,
    CompleteBipartite,
    Circulant,
    FamilyRep,
    Candidate,
    Predicted,
}

#[derive(Clone, Copy, ValueEnum)]
enum REmbeddingArg {
    None,
    Edge,
    Matching,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(value_enum)]
    what: ConstructKind,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    degree: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    s: Option<i64>,
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Graph embedded in L for `candidate`.
    #[arg(long)]
    inner: Option<String>,
    #[arg(long, value_enum, default_value = "edge")]
    r_embedding: REmbeddingArg,
}

#[derive(Args)]
struct CheckArgs {
    graph: String,
    /// Does the graph contain the odd wheel on 2k+1 vertices?
    #[arg(long, value_name = "K")]
    odd_wheel: Option<usize>,
    /// Order of a longest path.
    #[arg(long)]
    path: bool,
    /// Is the graph free of the star with K leaves?
    #[arg(long, value_name = "K")]
    star: Option<usize>,
    /// Does the graph contain a cycle of this length?
    #[arg(long, value_name = "LEN")]
    cycle: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim identifier; `verify list` prints them all.
    claim: String,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    cap: Option<usize>,
    #[arg(long)]
    base_order: Option<usize>,
    #[arg(long)]
    t_size: Option<usize>,
    #[arg(long)]
    h1: Option<String>,
    #[arg(long)]
    h2: Option<String>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    max_order: Option<usize>,
    /// Comma-separated `k:n` pairs.
    #[arg(long, value_delimiter = ',')]
    points: Vec<String>,
}

fn read_graph(arg: &str) -> anyhow::Result<Graph> {
    if arg == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(decode_any(&text)?);
    }
    if Path::new(arg).exists() {
        let text = fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?;
        return decode_any(&text).with_context(|| format!("parsing {arg}"));
    }
    decode_graph6(arg).with_context(|| format!("{arg:?} is neither a file nor a graph6 string"))
}

fn render_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => format!("{}\n", encode_graph6(g)),
        Format::Edgelist => encode_edge_list(g),
        Format::Json => format!("{}\n", graph_json(g)),
    }
}

fn graph_json(g: &Graph) -> serde_json::Value {
    json!({ "order": g.order(), "edges": g.edges(), "graph6": encode_graph6(g) })
}

fn need<T>(value: Option<T>, flag: &str) -> anyhow::Result<T> {
    value.ok_or_else(|| anyhow!("missing required flag --{flag}"))
}

fn construct(args: &ConstructArgs) -> anyhow::Result<Graph> {
    Ok(match args.what {
        ConstructKind::OddWheel => odd_wheel(need(args.k, "k")?)?,
        ConstructKind::Core => core_component(need(args.k, "k")?)?,
        ConstructKind::Complete => complete(need(args.m, "m")?),
        ConstructKind::Cycle => primitive(Primitive::Cycle, need(args.m, "m")?)?,
        ConstructKind::Matching => maximum_matching(need(args.m, "m")?),
        ConstructKind::Empty => Graph::empty(need(args.m, "m")?),
        ConstructKind::Path => path(need(args.m, "m")?),
        ConstructKind::CompleteBipartite => complete_bipartite(need(args.a, "a")?, need(args.b, "b")?),
        ConstructKind::Circulant => circulant_regular(need(args.m, "m")?, need(args.degree, "degree")?)?,
        ConstructKind::FamilyRep => {
            let spec = FamilySpec::new(need(args.family, "family")?.into(), need(args.k, "k")?, need(args.order, "order")?)?;
            family_representative(&spec)?.ok_or_else(|| anyhow!("family {spec:?} has no member"))?
        }
        ConstructKind::Candidate => spex_candidate(&CandidateSpec {
            n: need(args.n, "n")?,
            k: need(args.k, "k")?,
            s: args.s.unwrap_or(0),
            inner: read_graph(&need(args.inner.clone(), "inner")?)?,
            r_embedding: match args.r_embedding {
                REmbeddingArg::None => REmbedding::None,
                REmbeddingArg::Edge => REmbedding::SingleEdge,
                REmbeddingArg::Matching => REmbedding::MaximumMatching,
            },
        })?,
        ConstructKind::Predicted => predicted_candidate(need(args.n, "n")?, need(args.k, "k")?)?,
    })
}

fn parse_points(raw: &[String]) -> anyhow::Result<Vec<(usize, usize)>> {
    raw.iter()
        .map(|p| {
            let (k, n) = p.split_once(':').ok_or_else(|| anyhow!("--points entry {p:?} is not k:n"))?;
            Ok((k.trim().parse().context("--points k")?, n.trim().parse().context("--points n")?))
        })
        .collect()
}

fn run_verify(args: &VerifyArgs, opts: &VerifyOptions) -> anyhow::Result<VerificationReport> {
    Ok(match args.claim.as_str() {
        "lemma-3.2" => verify::verify_bounded_order(args.delta.unwrap_or(3), args.cap.unwrap_or(10), opts)?,
        "lemma-3.3" => verify::verify_walk_lemma(args.delta.unwrap_or(3), args.n.unwrap_or(13), opts)?,
        "theorem-3.1" => {
            let h1 = read_graph(&need(args.h1.clone(), "h1")?)?;
            let h2 = read_graph(&need(args.h2.clone(), "h2")?)?;
            let t = args.t_size.unwrap_or(h1.order());
            verify::verify_one_set(args.base_order.unwrap_or(40), t, &h1, &h2, opts)?
        }
        "claim-1-thm-1.4" => {
            verify::verify_claim1(args.k.unwrap_or(4), args.n_min.unwrap_or(22), args.n_max.unwrap_or(402), opts)?
        }
        "theorem-1.4" => verify::verify_spex_structure(need(args.n, "n")?, need(args.k, "k")?, opts)?,
        "equitable-consistency" => verify::verify_equitable_consistency(args.k.unwrap_or(4), args.n.unwrap_or(22), opts)?,
        "lemma-2.1" => verify::verify_join_bound(args.samples.unwrap_or(200), args.max_order.unwrap_or(30), opts)?,
        "fact-1" => {
            let points = if args.points.is_empty() {
                vec![(3, 100), (4, 102)]
            } else {
                parse_points(&args.points)?
            };
            verify::verify_fact1(&points, opts)?
        }
        "walk-horizon" => {
            let spec = FamilySpec::new(FamilyKind::GFam, args.delta.unwrap_or(3), args.n.unwrap_or(13))?;
            let family = enumerate_family_bounded(&spec, opts.max_members, opts.exec)?;
            verify::verify_walk_horizon(&family, args.samples.unwrap_or(200), args.max_order.unwrap_or(10), opts)?
        }
        "brute-spex" => verify::brute_spex(need(args.n, "n")?, need(args.k, "k")?, opts)?,
        other => {
            let known: Vec<&str> = CLAIMS.iter().map(|c| c.0).collect();
            bail!("unknown claim id {other:?}; known: {}", known.join(", "))
        }
    })
}

/// Runs the command, returning the text to emit and the exit status.
fn run(cli: &Cli) -> anyhow::Result<(String, u8)> {
    let g = &cli.global;
    if g.tol.is_nan() || g.tol <= 0.0 {
        bail!("--tol must be positive, got {}", g.tol);
    }
    let exec = if g.serial { Exec::Serial } else { Exec::default() };
    let power = PowerOptions {
        tol: g.tol,
        max_iterations: DEFAULT_MAX_ITERATIONS,
    };
    let budget = g.budget.unwrap_or(DEFAULT_BUDGET);
    let opts = VerifyOptions {
        power,
        budget,
        exec,
        seed: g.seed,
        max_walk: g.max_walk,
        max_members: g.budget.map_or(100_000, |b| b as usize),
    };
    let report = |rep: VerificationReport| (format!("{}\n", rep.to_json()), rep.exit_code() as u8);

    Ok(match &cli.command {
        Command::Construct(args) => (render_graph(&construct(args)?, g.format.unwrap_or(Format::Graph6)), 0),
        Command::Check(args) => {
            let graph = read_graph(&args.graph)?;
            let mut out = serde_json::Map::new();
            if let Some(k) = args.odd_wheel {
                out.insert("odd_wheel".into(), json!(contains_odd_wheel_with(&graph, k, budget, exec)?));
            }
            if args.path {
                out.insert("longest_path_order".into(), json!(longest_path_order_with_budget(&graph, budget)?));
            }
            if let Some(k) = args.star {
                out.insert("star_free".into(), json!(is_star_free(&graph, k)));
            }
            if let Some(len) = args.cycle {
                out.insert("cycle".into(), json!(contains_cycle_of_length_with_budget(&graph, len, budget)?));
            }
            if out.is_empty() {
                bail!("check needs at least one of --odd-wheel, --path, --star, --cycle");
            }
            (format!("{}\n", serde_json::Value::Object(out)), 0)
        }
        Command::Spectral { graph } => {
            let res = spectral_radius_with(&read_graph(graph)?, &power)?;
            (format!("{}\n", serde_json::to_string_pretty(&res)?), 0)
        }
        Command::Walks { graph, csv } => {
            let graph = read_graph(graph)?;
            let l = g.max_walk.unwrap_or((2 * graph.order()).max(1));
            let profile = walk_profile(&graph, l);
            if *csv {
                let mut text = String::from("level,count\n");
                for (i, c) in profile.counts.iter().enumerate() {
                    text.push_str(&format!("{},{c}\n", i + 1));
                }
                (text, 0)
            } else {
                (format!("{}\n", serde_json::to_string_pretty(&json!({ "horizon": l, "profile": profile }))?), 0)
            }
        }
        Command::Compare { a, b } => {
            let res = walk_compare(&read_graph(a)?, &read_graph(b)?, g.max_walk);
            match g.format {
                Some(Format::Json) => (format!("{}\n", serde_json::to_string_pretty(&res)?), 0),
                _ => (format!("{}\n", res.relation), 0),
            }
        }
        Command::Enumerate { family, k, order } => {
            let spec = FamilySpec::new((*family).into(), *k, *order)?;
            let members = enumerate_family_bounded(&spec, opts.max_members, exec)?;
            let format = g.format.unwrap_or(Format::Graph6);
            let text = match format {
                Format::Json => format!("{}\n", json!(members.iter().map(graph_json).collect::<Vec<_>>())),
                Format::Edgelist => members.iter().map(encode_edge_list).collect::<Vec<_>>().join("\n"),
                Format::Graph6 => members.iter().map(|m| render_graph(m, Format::Graph6)).collect(),
            };
            (text, 0)
        }
        Command::Verify(args) => {
            if args.claim == "list" {
                let text = CLAIMS.iter().map(|(id, what)| format!("{id}\t{what}\n")).collect();
                (text, 0)
            } else {
                report(run_verify(args, &opts)?)
            }
        }
        Command::BruteSpex { n, k } => report(verify::brute_spex(*n, *k, &opts)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, code)) => {
            let written = match &cli.global.out {
                Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display())),
                None => io::stdout().write_all(text.as_bytes()).map_err(Into::into),
            };
            if let Err(e) = written {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e
                .chain()
                .any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::BudgetExhausted { .. })));
            ExitCode::from(if budget { 3 } else { 2 })
        }
    }
}

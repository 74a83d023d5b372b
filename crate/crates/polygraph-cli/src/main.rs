//! Command-line front end for the polygraph laboratory.
//!
//! Exit codes: 0 success, 2 validation failure, 3 generation exhaustion,
//! 4 size cap exceeded.

use clap::{Args, Parser, Subcommand, ValueEnum};
use polygraph_lab::polygraph::{build_polygraph_with_options, DistanceMultiset};
use polygraph_lab::{bounds, eigen, graph, hdx, io, link, Error};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "polygraph-lab", version, about = "Spectral laboratory for (a,b)-regular graphs and polygraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph from one of the built-in families.
    Generate(GenerateArgs),
    /// Build the polygraph G_S of a base graph.
    Polygraph(PolygraphArgs),
    /// Analyze a graph file: regularity, girth, spectrum, links, Aux.
    Analyze(AnalyzeArgs),
    /// Numeric bounds: the tradeoff table, abtb values, tradeoff epsilon.
    Bounds(BoundsArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: Family,
    /// Vertex count (cycle, complete, random-regular).
    #[arg(long)]
    n: Option<usize>,
    /// Degree (random-regular).
    #[arg(long)]
    d: Option<usize>,
    /// Torus rows.
    #[arg(long)]
    m: Option<usize>,
    /// Minimum girth (random-regular).
    #[arg(long)]
    girth: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 200_000)]
    max_tries: usize,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Family {
    Petersen,
    Icosahedron,
    Cycle,
    Complete,
    Torus,
    RandomRegular,
}

#[derive(Args)]
struct PolygraphArgs {
    /// Base graph file in edge-list format.
    #[arg(long)]
    graph: PathBuf,
    /// Distance multiset, comma separated, e.g. 1,1,0.
    #[arg(long, short = 's')]
    s: String,
    /// Write the polygraph edge list and JSON sidecar with this prefix.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Build even when girth(base) <= 3 max(S); taints the report.
    #[arg(long)]
    allow_small_girth: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[arg(long)]
    graph: PathBuf,
    /// Fail (exit 2) unless the graph is (a,b)-regular.
    #[arg(long)]
    require_ab: bool,
    /// Include the Aux edge-triangle-edge graph report.
    #[arg(long)]
    aux: bool,
    /// Include the spectrum of the link of this vertex.
    #[arg(long)]
    link: Option<usize>,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(subcommand)]
    which: BoundsCommand,
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// The 7x7 table of scaled tradeoff gains (CSV).
    Table,
    /// b + 2 sqrt(a - b - 1).
    Abtb { a: usize, b: usize },
    /// Cross-edge count r, epsilon, and the delta threshold.
    Tradeoff {
        a: usize,
        b: usize,
        #[arg(long)]
        delta: f64,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ExhaustedTries { .. } => 3,
        Error::SizeLimit { .. } => 4,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Generate(args) => cmd_generate(args),
        Command::Polygraph(args) => cmd_polygraph(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Bounds(args) => cmd_bounds(args),
    }
}

fn need(x: Option<usize>, flag: &str) -> Result<usize, Error> {
    x.ok_or_else(|| Error::Parse(format!("missing required --{flag}")))
}

fn cmd_generate(args: GenerateArgs) -> Result<(), Error> {
    let g = match args.family {
        Family::Petersen => graph::petersen(),
        Family::Icosahedron => graph::icosahedron(),
        Family::Cycle => graph::cycle(need(args.n, "n")?)?,
        Family::Complete => graph::complete(need(args.n, "n")?)?,
        Family::Torus => graph::torus_triangulation(need(args.m, "m")?, need(args.n, "n")?)?,
        Family::RandomRegular => {
            let seed = args
                .seed
                .ok_or_else(|| Error::Parse("random-regular requires --seed".into()))?;
            graph::random_regular_high_girth(
                need(args.n, "n")?,
                need(args.d, "d")?,
                need(args.girth, "girth")?,
                seed,
                args.max_tries,
            )?
        }
    };
    emit(&io::write_edge_list(&g), args.out.as_deref())
}

fn parse_s(text: &str) -> Result<DistanceMultiset, Error> {
    let entries: Result<Vec<usize>, _> = text.split(',').map(|p| p.trim().parse()).collect();
    let entries = entries.map_err(|_| Error::Parse(format!("invalid S: {text}")))?;
    DistanceMultiset::new(entries)
}

fn cmd_polygraph(args: PolygraphArgs) -> Result<(), Error> {
    let base = io::parse_edge_list(&std::fs::read_to_string(&args.graph)?)?;
    let s = parse_s(&args.s)?;
    let p = build_polygraph_with_options(&base, &s, args.allow_small_girth)?;
    let mut sidecar = serde_json::to_value(io::polygraph_sidecar(
        &p,
        &args.graph.display().to_string(),
    ))
    .expect("sidecar json");
    let obj = sidecar.as_object_mut().unwrap();
    obj.insert("n".into(), p.graph().n().into());
    obj.insert("degree".into(), p.graph().d().into());
    obj.insert("connected".into(), p.graph().is_connected().into());
    let text = serde_json::to_string_pretty(&sidecar).expect("json");
    if let Some(prefix) = &args.out {
        let mut edges_path = prefix.clone();
        edges_path.set_extension("edges");
        std::fs::write(&edges_path, io::write_edge_list(p.graph()))?;
        let mut json_path = prefix.clone();
        json_path.set_extension("json");
        std::fs::write(&json_path, format!("{text}\n"))?;
    }
    println!("{text}");
    Ok(())
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), Error> {
    let g = io::parse_edge_list(&std::fs::read_to_string(&args.graph)?)?;
    let ab = g.ab_regularity();
    if args.require_ab && ab.is_none() {
        return Err(Error::NotABRegular(
            "input is not (a,b)-regular (--require-ab)".into(),
        ));
    }
    let mut out = serde_json::json!({
        "schema": io::SCHEMA,
        "kind": "analysis",
        "n": g.n(),
        "d": g.d(),
        "a": ab.map(|p| p.0),
        "b": ab.map(|p| p.1),
        "girth": g.girth(),
        "connected": g.is_connected(),
        "bipartite": g.is_bipartite(),
    });
    let obj = out.as_object_mut().unwrap();
    match eigen::spectrum(&g) {
        Ok(spec) => {
            obj.insert("spectrum".into(), serde_json::to_value(&spec).expect("json"));
        }
        Err(Error::SizeLimit { .. }) if g.is_connected() => {
            let (l2, lmin) = eigen::extreme_eigenvalues(&g, 1e-8, 600)?;
            obj.insert("lambda2".into(), l2.into());
            obj.insert("lambda_min".into(), lmin.into());
        }
        Err(e) => return Err(e),
    }
    if let Some(v) = args.link {
        let l = link::link_of_vertex(&g, v)?;
        let body = serde_json::json!({
            "vertex": v,
            "n": l.n(),
            "d": l.d(),
            "connected": l.is_connected(),
        });
        obj.insert("link".into(), body);
    }
    if args.aux {
        let complex = hdx::clique_complex_2(&g);
        let aux = hdx::aux_graph(&complex)?;
        let report = hdx::aux_report(&aux)?;
        obj.insert("aux".into(), serde_json::to_value(&report).expect("json"));
        obj.insert(
            "triangles".into(),
            complex.triangles().len().into(),
        );
    }
    println!("{}", serde_json::to_string_pretty(&out).expect("json"));
    Ok(())
}

fn cmd_bounds(args: BoundsArgs) -> Result<(), Error> {
    match args.which {
        BoundsCommand::Table => {
            let table = bounds::tradeoff_table();
            println!("a_minus_b_minus_1,b=2,b=3,b=4,b=5,b=6,b=7,b=8");
            for (i, row) in table.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:.3}")).collect();
                println!("{},{}", i + 2, cells.join(","));
            }
        }
        BoundsCommand::Abtb { a, b } => {
            let v = bounds::abtb_value(a, b)?;
            println!(
                "{}",
                serde_json::json!({
                    "schema": io::SCHEMA,
                    "kind": "abtb",
                    "a": a,
                    "b": b,
                    "value": v,
                })
            );
        }
        BoundsCommand::Tradeoff { a, b, delta } => {
            let r = bounds::optimal_r(a, b, delta)?;
            let epsilon = bounds::tradeoff_epsilon(a, b, delta)?;
            let threshold = bounds::delta_threshold(a, b)?;
            println!(
                "{}",
                serde_json::json!({
                    "schema": io::SCHEMA,
                    "kind": "tradeoff",
                    "a": a,
                    "b": b,
                    "delta": delta,
                    "r": r,
                    "epsilon": epsilon,
                    "delta_threshold": threshold,
                })
            );
        }
    }
    Ok(())
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), Error> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

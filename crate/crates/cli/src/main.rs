//! Command-line interface: graph ingestion, rooted-list construction, power
//! generator enumeration, linear-quotients checks, the regularity formula,
//! structural lemma verification, and the chordal explorer.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 property failure found,
//! 3 budget limited.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use rooted_cover::covers::DEFAULT_COVER_CAP;
use rooted_cover::explore::{explore, DEFAULT_LIST_CAP};
use rooted_cover::graph::Graph;
use rooted_cover::lq::{check_colon_propositions, has_linear_quotients, reg_report};
use rooted_cover::powers::{
    check_structure_lemmas, min_gens_power_brute_capped, min_gens_power_pairs_capped,
    DEFAULT_PRODUCT_CAP,
};
use rooted_cover::rooted::{
    rooted_list_chordal, rooted_list_path, sort_rooted, ChordalChooser, GeneratorList,
};
use rooted_cover::{Error, PowerGens};

#[derive(Parser)]
#[command(
    name = "rooted-cover",
    about = "Rooted lists and rooted orders for cover ideals of paths and chordal graphs",
    version
)]
struct Cli {
    /// Cap on graph size for the cover enumeration oracle
    #[arg(long, global = true, default_value_t = DEFAULT_COVER_CAP)]
    cover_cap: usize,

    /// Cap on the number of s-fold products enumerated per call
    #[arg(long, global = true, default_value_t = DEFAULT_PRODUCT_CAP)]
    product_cap: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Path graph P_n on n vertices
    #[arg(long, value_name = "N")]
    path: Option<usize>,

    /// Graph file (JSON {"n":..,"edges":[[i,j],..]} or text "n" + "i j" lines)
    #[arg(long, value_name = "FILE")]
    graph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the rooted list of a path or chordal graph
    RootedList {
        #[command(flatten)]
        input: GraphInput,
        /// Chooser script (JSON array of simplicial picks, depth-first)
        #[arg(long, value_name = "FILE", requires = "graph")]
        chooser: Option<PathBuf>,
    },
    /// Enumerate the minimal generators of a power of the cover ideal
    Gens {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_name = "S")]
        power: u32,
        /// pairs (path characterization) or brute (divisibility oracle)
        #[arg(long, value_parser = ["pairs", "brute"])]
        method: String,
        /// Report wall-clock time instead of the deterministic 0
        #[arg(long)]
        timings: bool,
    },
    /// Certify linear quotients of the rooted-sorted generator list
    CheckLq {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_name = "S")]
        power: u32,
    },
    /// Evaluate the regularity formula against the maximal generator degree
    Reg {
        #[arg(long, value_name = "N")]
        path: usize,
        #[arg(long, value_name = "S")]
        power: u32,
    },
    /// Search rooted lists of a chordal graph for linear quotients of powers
    Explore {
        #[arg(long, value_name = "FILE")]
        graph: PathBuf,
        #[arg(long, value_name = "S")]
        max_power: u32,
        /// Cap on the number of rooted lists enumerated
        #[arg(long, value_name = "K", default_value_t = DEFAULT_LIST_CAP)]
        cap: usize,
    },
    /// Verify the structural lemmas and colon propositions for a path power
    CheckLemmas {
        #[arg(long, value_name = "N")]
        path: usize,
        #[arg(long, value_name = "S")]
        power: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Render clap's message but keep the documented exit code.
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            let code = match err {
                Error::ProductCap { .. }
                | Error::CoverEnumerationCap { .. }
                | Error::BudgetExceeded(_) => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::RootedList { input, chooser } => {
            let list = build_rooted_list(&input, chooser.as_deref())?;
            println!("{}", serde_json::to_string(&list.to_strings()).unwrap());
            Ok(0)
        }
        Command::Gens {
            input,
            power,
            method,
            timings,
        } => {
            let started = Instant::now();
            let (n, list) = load_base(&input)?;
            let pg = match method.as_str() {
                "pairs" => min_gens_power_pairs_capped(&list, power, cli.product_cap)?,
                _ => min_gens_power_brute_capped(&list, power, cli.product_cap)?,
            };
            let elapsed = if timings {
                started.elapsed().as_millis() as u64
            } else {
                0
            };
            print_gens(n, &pg, elapsed);
            Ok(0)
        }
        Command::CheckLq { input, power } => {
            let (_, list) = load_base(&input)?;
            let pg = match list.provenance() {
                rooted_cover::Provenance::PathRooted { .. } => {
                    min_gens_power_pairs_capped(&list, power, cli.product_cap)?
                }
                _ => min_gens_power_brute_capped(&list, power, cli.product_cap)?,
            };
            let sorted = sort_rooted(&pg.minimal, &list, power)?;
            let report = has_linear_quotients(&sorted);
            println!("{}", report.to_json());
            Ok(if report.verdict { 0 } else { 2 })
        }
        Command::Reg { path, power } => {
            let report = reg_report(path, power)?;
            println!("{}", serde_json::to_string(&report).unwrap());
            Ok(if report.matches { 0 } else { 2 })
        }
        Command::Explore {
            graph,
            max_power,
            cap,
        } => {
            let g = load_graph(&graph)?;
            let report = explore(&g, max_power, cap)?;
            println!("{}", report.to_json());
            Ok(report.summary.exit_code() as u8)
        }
        Command::CheckLemmas { path, power } => {
            let structure = check_structure_lemmas(path, power)?;
            let colon = check_colon_propositions(path, power)?;
            println!("{}", serde_json::to_string(&structure).unwrap());
            println!("{}", serde_json::to_string(&colon).unwrap());
            Ok(if structure.pass && colon.pass { 0 } else { 2 })
        }
    }
}

fn load_graph(path: &std::path::Path) -> Result<Graph, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    Graph::from_file_str(&text)
}

fn build_rooted_list(
    input: &GraphInput,
    chooser: Option<&std::path::Path>,
) -> Result<GeneratorList, Error> {
    if let Some(n) = input.path {
        return Ok(rooted_list_path(n));
    }
    let g = load_graph(input.graph.as_ref().expect("clap group guarantees one"))?;
    let chooser = match chooser {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidChooser(format!("cannot read {}: {e}", path.display())))?;
            ChordalChooser::from_json(&text)?
        }
        None => ChordalChooser::Canonical,
    };
    rooted_list_chordal(&g, &chooser)
}

fn load_base(input: &GraphInput) -> Result<(String, GeneratorList), Error> {
    if let Some(n) = input.path {
        return Ok((n.to_string(), rooted_list_path(n)));
    }
    let path = input.graph.as_ref().expect("clap group guarantees one");
    let g = load_graph(path)?;
    let list = rooted_list_chordal(&g, &ChordalChooser::Canonical)?;
    Ok((g.ambient().to_string(), list))
}

fn print_gens(n_label: &str, pg: &PowerGens, elapsed_ms: u64) {
    println!(
        "{}",
        serde_json::to_string(&pg.minimal.to_strings()).unwrap()
    );
    let record = json!({
        "n": n_label.parse::<u64>().ok(),
        "s": pg.s,
        "method": pg.method,
        "count": pg.minimal.len(),
        "max_degree": pg.minimal.max_degree().unwrap_or(0),
        "excluded_multiset_count": pg.excluded_multisets,
        "elapsed_ms": elapsed_ms,
    });
    println!("{record}");
}

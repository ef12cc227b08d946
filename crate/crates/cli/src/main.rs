use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use polyhopf::constructions::catalog_names;
use polyhopf::hopf::grouplikes;
use polyhopf::reptheory::{algebra_type, coalgebra_type};
use polyhopf_cli::suites::{self, Suite};
use polyhopf_cli::{enumerate, load, report, CliError, RunConfig};
use rayon::prelude::*;

#[derive(Parser)]
#[command(name = "polyhopf", about = "Deformations of k^Γ̃ over the binary polyhedral groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cyclotomic conductor override (a multiple of the minimal one).
    #[arg(long, global = true)]
    conductor: Option<u32>,
    /// Working prime for modular computations.
    #[arg(long, global = true)]
    prime: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// json, csv or md.
    #[arg(long, global = true, default_value = "md")]
    format: String,
    /// Output file (a directory for `build`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write one JSON file per algebra.
    Build {
        names: Vec<String>,
        #[arg(long)]
        all: bool,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify {
        /// Catalog names or JSON files written by `build`.
        names: Vec<String>,
        #[arg(long)]
        all: bool,
        #[arg(long = "suite")]
        suites: Vec<String>,
    },
    /// θ-classes of a polyhedral group and their outcomes.
    Enumerate { gamma: Vec<String> },
    /// Types and group-likes of a twisted group algebra: a5 or d3xd5.
    Twist { group: String },
    /// Type tables for the function algebras, deformations and twists.
    Report {
        #[arg(long)]
        all: bool,
    },
}

fn names_or_all(names: Vec<String>, all: bool) -> Result<Vec<String>, CliError> {
    if all {
        return Ok(catalog_names());
    }
    if names.is_empty() {
        return Err(CliError::Usage("no instance names given (or pass --all)".into()));
    }
    Ok(names)
}

fn build(cfg: &RunConfig) -> Result<bool, CliError> {
    let dir = cfg.out.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir)?;
    let insts = cfg.names.iter().map(|n| load(n, cfg)).collect::<Result<Vec<_>, _>>()?;
    for inst in &insts {
        let mut v = inst.hopf.to_json();
        v["provenance"]["name"] = inst.name.clone().into();
        let path = dir.join(format!("{}.json", inst.name));
        std::fs::write(&path, serde_json::to_string(&v)? + "\n")?;
        println!(
            "{}: dim {}, commutative {}, cocommutative {} -> {}",
            inst.name,
            inst.hopf.dim(),
            inst.hopf.is_commutative(),
            inst.hopf.is_cocommutative(),
            path.display()
        );
    }
    Ok(true)
}

fn verify(cfg: &RunConfig, suites: &[Suite]) -> Result<bool, CliError> {
    let insts = cfg.names.iter().map(|n| load(n, cfg)).collect::<Result<Vec<_>, _>>()?;
    let mut reports: Vec<_> = insts.par_iter().map(|i| suites::run(i, suites, cfg)).collect();
    reports.sort_by(|a, b| a.instance.cmp(&b.instance));
    cfg.emit(&suites::render(&reports, cfg.format)?)?;
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.instance.as_str()).collect();
    if !failed.is_empty() {
        eprintln!("verification failed: {}", failed.join(", "));
    }
    Ok(failed.is_empty())
}

fn twist(cfg: &RunConfig, group: &str) -> Result<bool, CliError> {
    let name = match group.to_ascii_lowercase().as_str() {
        "a5" => "TWA5",
        "d3xd5" => "TWD3D5",
        _ => return Err(CliError::Usage(format!("unknown twist {group:?} (a5, d3xd5)"))),
    };
    let inst = load(name, cfg)?;
    let h = &inst.hopf;
    let g = grouplikes(h, cfg.seed)?.group;
    let gname = g.catalog_match().unwrap_or_else(|| format!("order {}", g.order()));
    let text = format!(
        "{name}: dim {}\ncoalgebra type {}\nalgebra type {}\nG(H) = {gname}\ndual coalgebra type {}\n",
        h.dim(),
        coalgebra_type(h, cfg.seed)?,
        algebra_type(h, cfg.seed)?,
        coalgebra_type(&h.dual(), cfg.seed)?
    );
    cfg.emit(&text)?;
    Ok(true)
}

fn dispatch(cli: Cli) -> Result<bool, CliError> {
    let mut cfg = RunConfig { conductor: cli.conductor, prime: cli.prime, seed: cli.seed, out: cli.out, format: cli.format.parse()?, ..Default::default() };
    cfg.validate()?;
    match cli.command {
        Command::Build { names, all } => {
            cfg.command = "build".into();
            cfg.names = names_or_all(names, all)?;
            build(&cfg)
        }
        Command::Verify { names, all, suites } => {
            cfg.command = "verify".into();
            cfg.names = names_or_all(names, all)?;
            let suites = if suites.is_empty() { Suite::ALL.to_vec() } else { suites.iter().map(|s| s.parse()).collect::<Result<Vec<_>, _>>()? };
            verify(&cfg, &suites)
        }
        Command::Enumerate { gamma } => {
            cfg.command = "enumerate".into();
            let kind = enumerate::parse_gamma(&gamma)?;
            let (_, rows) = enumerate::run(kind, cfg.seed)?;
            cfg.emit(&enumerate::render(kind, &rows, cfg.format)?)?;
            Ok(true)
        }
        Command::Twist { group } => {
            cfg.command = "twist".into();
            twist(&cfg, &group)
        }
        Command::Report { all: _ } => {
            cfg.command = "report".into();
            let rows = report::rows(cfg.seed)?;
            cfg.emit(&report::render(&rows, cfg.format)?)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

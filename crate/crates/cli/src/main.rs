//! Command-line front end: plan points, scan regions, verify recipe files and
//! print the block catalog.

mod report;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use symgeo_core::fpgroup::DEFAULT_BUDGET;
use symgeo_core::invariants::CharNumbers;
use symgeo_core::planner::{plan, scan_with, PlanStatus};
use symgeo_core::surgery::{evaluate_with_budget, Recipe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Plans constructions of simply connected minimal symplectic 4-manifolds
/// from model pieces and certifies their fundamental groups.
///
/// Exit status: 0 realized or sporadic, 1 input error, 2 exception,
/// 3 outside the geography cone, 4 no construction applies.
///
/// CSV columns: c,chi,e,sigma,status,pi1_status,recipe_id where recipe_id is
/// the first 16 hex digits of the SHA-256 of the compact recipe JSON.
#[derive(Debug, Parser)]
#[command(name = "symgeo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Maximum number of generator eliminations per certificate.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET as u64, value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Plan one point, given as (c, chi), (e, sigma) or (m, n) for mCP2 # n(-CP2).
    Plan(Target),
    /// Plan and evaluate every cone point with chi up to --chi-max.
    Scan {
        #[arg(long)]
        chi_max: i64,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Re-evaluate a recipe JSON file (a bare recipe or a plan report).
    Verify { file: PathBuf },
    /// Print the catalog of model blocks.
    Catalog,
}

#[derive(Debug, Args)]
struct Target {
    #[arg(long, allow_hyphen_values = true, requires = "chi")]
    c: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "c")]
    chi: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "sigma")]
    e: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "e")]
    sigma: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    m: Option<i64>,
    #[arg(long, allow_hyphen_values = true, requires = "m")]
    n: Option<i64>,
}

impl Target {
    fn resolve(&self) -> Result<(i64, i64)> {
        let forms = [self.c.is_some(), self.e.is_some(), self.m.is_some()];
        if forms.iter().filter(|&&f| f).count() != 1 {
            bail!("give exactly one of --c/--chi, --e/--sigma or --m/--n");
        }
        let ch = match (self.c, self.chi, self.e, self.sigma, self.m, self.n) {
            (Some(c), Some(chi), ..) => return Ok((c, chi)),
            (_, _, Some(e), Some(sigma), ..) => CharNumbers::new(e, sigma),
            (.., Some(m), Some(n)) => CharNumbers::from_cp2_label(m, n),
            _ => unreachable!("clap enforces pairs"),
        };
        match ch.chi_h() {
            Some(chi) => Ok((ch.c1sq(), chi)),
            None => bail!("e + sigma = {} is not divisible by 4", ch.e + ch.sigma),
        }
    }
}

fn exit_code(status: PlanStatus) -> u8 {
    match status {
        PlanStatus::Realized | PlanStatus::Sporadic => 0,
        PlanStatus::Exception => 2,
        PlanStatus::OutOfRegion => 3,
        PlanStatus::Unplannable => 4,
    }
}

fn run(cli: &Cli) -> Result<(String, u8)> {
    let budget = usize::try_from(cli.budget).context("budget too large")?;
    match &cli.command {
        Command::Plan(target) => {
            let (c, chi) = target.resolve()?;
            let p = plan(c, chi);
            let state = match &p.recipe {
                Some(r) => Some(evaluate_with_budget(r, budget).context("evaluating the planned recipe")?),
                None => None,
            };
            Ok((report::plan(&p, state.as_ref(), cli.format)?, exit_code(p.status)))
        }
        Command::Scan { chi_max, jobs } => {
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
            let r = scan_with(*chi_max, budget, jobs)?;
            Ok((report::scan(&r, cli.format)?, 0))
        }
        Command::Verify { file } => {
            let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
            let recipe = parse_recipe(&text).with_context(|| format!("parsing {}", file.display()))?;
            let state = evaluate_with_budget(&recipe, budget)?;
            Ok((report::verify(&recipe, &state, cli.format)?, 0))
        }
        Command::Catalog => Ok((report::catalog(cli.format)?, 0)),
    }
}

/// Accepts a bare recipe or any object with a `recipe` field.
fn parse_recipe(text: &str) -> Result<Recipe> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let inner = match value.get("recipe") {
        Some(r) if value.get("op").is_none() => r.clone(),
        _ => value,
    };
    if inner.is_null() {
        bail!("the report carries no recipe");
    }
    Ok(serde_json::from_value(inner)?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((text, code)) => {
            let written = match &cli.out {
                Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display())),
                None => std::io::stdout().write_all(text.as_bytes()).context("writing stdout"),
            };
            match written {
                Ok(()) => ExitCode::from(code),
                Err(e) => {
                    eprintln!("error: {e:#}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

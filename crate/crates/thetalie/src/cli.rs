//! Command-line driver. JSON goes to stdout (or `--out`); the human-readable
//! summary with timings goes to stderr, so stdout stays byte-identical
//! between runs.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use thetalie_core::lattice::RootType;

use crate::export::to_json;
use crate::pipeline::{self, BuildJson, Depth};
use crate::quartic::{self, Family};
use crate::tables;

/// Environment variable that sets the worker-thread count.
pub const THREADS_ENV: &str = "THETALIE_THREADS";

#[derive(Parser, Debug)]
#[command(name = "thetalie", version, about = "Lie algebras from root lattices with double covers, and their checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DepthArg {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum TableKind {
    RealOrbits,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the algebra, involution and fixed subalgebra (plus the
    /// representation for E6 and E7) and export them.
    Build {
        #[arg(long = "type", value_parser = parse_type)]
        root_type: RootType,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every check for a type and report the first counterexample.
    Verify {
        #[arg(long = "type", value_parser = parse_type)]
        root_type: RootType,
        /// Defaults to exhaustive, except sampled for E8.
        #[arg(long, value_enum)]
        depth: Option<DepthArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a table and check it against the expected columns.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Root and line counts in the degree-2 del Pezzo Picard lattice.
    Delpezzo {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quadratic refinements of a genus-g symplectic space, by Arf invariant.
    Counts {
        #[arg(long)]
        g: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Contact order and smoothness verdict for a member of a quartic family.
    Quartic {
        #[arg(value_enum)]
        family: Family,
        /// Comma-separated rationals, e.g. `1,0,-2,1/3,0,5`.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long, value_delimiter = ',', default_value = "5,7,11")]
        probe: Vec<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_type(s: &str) -> Result<RootType, String> {
    RootType::parse(s).map_err(|e| e.to_string())
}

/// Sizes the global thread pool from [`THREADS_ENV`], if set.
pub fn configure_threads() -> anyhow::Result<()> {
    if let Ok(v) = std::env::var(THREADS_ENV) {
        let n: usize = v.trim().parse().with_context(|| format!("{THREADS_ENV}={v:?} is not a thread count"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn emit<T: Serialize>(value: &T, out: Option<&PathBuf>) -> anyhow::Result<()> {
    let json = to_json(value)?;
    match out {
        Some(path) => std::fs::write(path, json).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().lock().write_all(json.as_bytes())?,
    }
    Ok(())
}

fn status(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

/// Runs a parsed command and returns whether every assertion passed.
pub fn execute(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Build { root_type, out } => {
            let start = Instant::now();
            let built = pipeline::build(root_type)?;
            emit(&BuildJson::new(&built)?, out.as_ref())?;
            eprintln!("built {root_type}: dim {} ({:.2?})", built.lie.dim(), start.elapsed());
            Ok(true)
        }
        Command::Verify { root_type, depth, seed, out } => {
            let depth = match depth {
                Some(DepthArg::Exhaustive) => Depth::Exhaustive,
                Some(DepthArg::Sampled) => Depth::Sampled,
                None if root_type == RootType::E8 => Depth::Sampled,
                None => Depth::Exhaustive,
            };
            let report = pipeline::verify(root_type, depth, seed);
            for c in &report.checks {
                eprintln!("{} {:<22} {:>10} checked ({:.2?})", status(c.passed), c.name, c.checked, c.elapsed);
            }
            if let Some(c) = report.first_failure() {
                eprintln!("first failure in {}: {}", c.name, c.detail.as_deref().unwrap_or("no detail"));
            }
            emit(&report, out.as_ref())?;
            Ok(report.passed)
        }
        Command::Table { kind: TableKind::RealOrbits, out } => {
            let start = Instant::now();
            let (rows, json) = tables::real_orbits()?;
            eprint!("{}", tables::render_table(&rows));
            eprintln!("{} real-orbit table ({:.2?})", status(json.matches_expected), start.elapsed());
            emit(&json, out.as_ref())?;
            Ok(json.matches_expected)
        }
        Command::Delpezzo { out } => {
            let summary = tables::del_pezzo()?;
            let ok = summary == tables::DEL_PEZZO_EXPECTED;
            emit(&summary, out.as_ref())?;
            eprintln!("{} del Pezzo counts", status(ok));
            Ok(ok)
        }
        Command::Counts { g, out } => {
            let counts = tables::counts(g)?;
            let ok = tables::expected_counts(g).is_none_or(|e| e == (counts.even, counts.odd));
            emit(&counts, out.as_ref())?;
            eprintln!("{} ({}, {})", status(ok), counts.even, counts.odd);
            Ok(ok)
        }
        Command::Quartic { family, params, probe, out } => {
            let params = quartic::parse_params(&params)?;
            if probe.is_empty() {
                bail!("--probe needs at least one prime");
            }
            let json = quartic::analyze(family, &params, &probe)?;
            emit(&json, out.as_ref())?;
            eprintln!("{}: contact order {:?}, {}", json.curve, json.contact_order, json.verdict.kind);
            Ok(true)
        }
    }
}

pub fn run(cli: Cli) -> ExitCode {
    let outcome = configure_threads().and_then(|()| execute(cli.command));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

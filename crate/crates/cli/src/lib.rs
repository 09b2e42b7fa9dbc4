//! Command-line front end: argument types, experiment runners and report
//! output for the `holoseq` binary.

pub mod args;
pub mod experiments;
pub mod output;
pub mod parse;

use std::io::Write;

use args::{Cli, Command, OutputArgs};
use experiments::{Outcome, EXPERIMENTS};
use holoseq_core::Verdict;
use output::Document;
use serde::Serialize;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub const EXIT_PASS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// The `list` table, one experiment per row.
pub fn list_table() -> String {
    let id_w = EXPERIMENTS.iter().map(|e| e.id.len()).max().unwrap_or(0);
    let mut s = format!("{:<id_w$}  claim\n", "experiment");
    for e in &EXPERIMENTS {
        s.push_str(&format!("{:<id_w$}  {}\n", e.id, e.claim));
        s.push_str(&format!("{:<id_w$}  defaults: {}\n", "", e.defaults));
    }
    s
}

#[derive(Serialize)]
struct Config<'a, P: Serialize> {
    #[serde(flatten)]
    params: &'a P,
    seed: u64,
}

fn finish<P: Serialize>(experiment: &str, params: &P, out: &OutputArgs, outcome: Outcome) -> Result<i32, CliError> {
    let config = serde_json::to_value(Config { params, seed: out.seed })?;
    let doc = Document {
        schema: output::SCHEMA,
        experiment,
        claim: &outcome.report.claim,
        verdict: outcome.report.verdict,
        config,
        measurements: &outcome.report.measurements,
        checks: &outcome.report.checks,
        version: env!("CARGO_PKG_VERSION"),
        timestamp: output::timestamp(),
    };
    output::write_json(&doc, out.out.as_deref())?;
    if let Some(path) = &out.csv {
        output::write_csv(&outcome.series, path)?;
    }
    let mut err = std::io::stderr().lock();
    for c in &outcome.report.checks {
        writeln!(err, "  [{}] {}: {}", c.verdict, c.name, c.detail)?;
    }
    writeln!(err, "{experiment}: {}", outcome.report.verdict)?;
    Ok(exit_code(outcome.report.verdict))
}

/// Runs a parsed command and returns the process exit code.
pub fn execute(cli: Cli) -> Result<i32, CliError> {
    macro_rules! go {
        ($name:literal, $run:expr, $body:expr) => {{
            let run = $run;
            output::check_writable(run.output.out.as_deref(), run.output.force)?;
            output::check_writable(run.output.csv.as_deref(), run.output.force)?;
            let outcome = $body(&run.params, run.output.seed)?;
            finish($name, &run.params, &run.output, outcome)
        }};
    }
    match cli.command {
        Command::List => {
            print!("{}", list_table());
            Ok(EXIT_PASS)
        }
        Command::Independence(r) => go!("independence", r, experiments::independence),
        Command::Escape(r) => go!("escape", r, |p, _| experiments::escape(p)),
        Command::WeakAnalytic(r) => go!("weak-analytic", r, |p, _| experiments::weak_analytic(p)),
        Command::Cauchy(r) => go!("cauchy", r, |p, _| experiments::cauchy(p)),
        Command::Unbounded(r) => go!("unbounded", r, experiments::unbounded),
        Command::Radius(r) => go!("radius", r, |p, _| experiments::radius(p)),
        Command::TaylorGlobal(r) => go!("taylor-global", r, |p, _| experiments::taylor_global(p)),
        Command::GrowthFailure(r) => go!("growth-failure", r, |p, _| experiments::growth_failure(p)),
    }
}

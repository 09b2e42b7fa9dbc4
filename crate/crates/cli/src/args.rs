//! Command-line grammar: `holoseq <experiment> [--param value]... [--out path]
//! [--csv path] [--seed n] [--force]`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::parse;

#[derive(Debug, Parser)]
#[command(name = "holoseq", version, about = "Reproducible numerical experiments on sequence-space counterexamples")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the experiments with their claims and default parameters.
    List,
    /// Linear independence of random generator families.
    Independence(Run<IndependenceParams>),
    /// Derivatives of f_k stay in E_k up to order k and escape at k+1.
    Escape(Run<EscapeParams>),
    /// Coordinatewise Cauchy checks and the Goursat triangle integral for f.
    WeakAnalytic(Run<WeakAnalyticParams>),
    /// Cauchy integral formula for one point.
    Cauchy(Run<CauchyParams>),
    /// Unboundedness witnesses for g and f on l1.
    Unbounded(Run<UnboundedParams>),
    /// Shrinking radii of convergence of the Runge family.
    Radius(Run<RadiusParams>),
    /// Global validity of the coordinatewise Taylor expansion of (sin nt)_n.
    TaylorGlobal(Run<TaylorGlobalParams>),
    /// Growth of (sin(int))_n and the sinh lower bound.
    GrowthFailure(Run<GrowthFailureParams>),
}

/// Experiment parameters plus the shared output flags.
#[derive(Debug, Args)]
pub struct Run<P: Args> {
    #[command(flatten)]
    pub params: P,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write the series payload as CSV.
    #[arg(long)]
    pub csv: Option<PathBuf>,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Overwrite existing output files.
    #[arg(long)]
    pub force: bool,
}

fn complex_arg(s: &str) -> Result<Complex64, String> {
    parse::complex(s)
}

fn sparse_arg(s: &str) -> Result<SparseArg, String> {
    parse::sparse(s).map(SparseArg)
}

/// Sparse vector given as `k:v` pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseArg(pub Vec<(u64, Complex64)>);

impl Serialize for SparseArg {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(u64, (f64, f64))> = self.0.iter().map(|(k, v)| (*k, (v.re, v.im))).collect();
        pairs.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ModeArg {
    Exact,
    Floating,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EscapeControl {
    None,
    /// Drop the order-k generator at e^z from the family.
    Underfull,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeakControl {
    None,
    /// Replace coordinate 3 by conj(z).
    Conj,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Integrand {
    Exp,
    Conj,
}

fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    (z.re, z.im).serialize(s)
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct IndependenceParams {
    /// Family size.
    #[arg(long, default_value_t = 6)]
    pub m: usize,
    /// Truncation length N (defaults to m).
    #[arg(long)]
    pub trunc: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
    pub mode: ModeArg,
    /// Largest exponent k in the family.
    #[arg(long, default_value_t = 3)]
    pub k_max: i32,
    /// Number of random families.
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EscapeParams {
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Point of U, as a, a+bi or re,im.
    #[arg(long, default_value = "0.2", value_parser = complex_arg, allow_hyphen_values = true)]
    #[serde(serialize_with = "ser_complex")]
    pub z: Complex64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = EscapeControl::None)]
    pub control: EscapeControl,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct WeakAnalyticParams {
    /// Coordinates 1..=coords are checked.
    #[arg(long, default_value_t = 10)]
    pub coords: u64,
    #[arg(long, default_value = "0", value_parser = complex_arg, allow_hyphen_values = true)]
    #[serde(serialize_with = "ser_complex")]
    pub z0: Complex64,
    #[arg(long, default_value_t = 0.5)]
    pub r: f64,
    #[arg(long, default_value_t = 256)]
    pub nodes: usize,
    #[arg(long, default_value_t = 32)]
    pub quad_order: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = WeakControl::None)]
    pub control: WeakControl,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct CauchyParams {
    #[arg(long, default_value = "0.1", value_parser = complex_arg, allow_hyphen_values = true)]
    #[serde(serialize_with = "ser_complex")]
    pub z: Complex64,
    #[arg(long, default_value = "0", value_parser = complex_arg, allow_hyphen_values = true)]
    #[serde(serialize_with = "ser_complex")]
    pub z0: Complex64,
    #[arg(long, default_value_t = 0.5)]
    pub r: f64,
    #[arg(long, default_value_t = 256)]
    pub nodes: usize,
    /// Number of coordinates N.
    #[arg(long, default_value_t = 10)]
    pub coords: usize,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Integrand::Exp)]
    pub integrand: Integrand,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct UnboundedParams {
    /// Centre x as k:v pairs; empty for 0.
    #[arg(long, default_value = "", value_parser = sparse_arg, allow_hyphen_values = true)]
    pub x: SparseArg,
    #[arg(long, default_value_t = 0.5)]
    pub radius: f64,
    /// Target value N.
    #[arg(long, default_value_t = 1e6)]
    pub bound: f64,
    /// Additional random centres to test the witness recipe on.
    #[arg(long, default_value_t = 0)]
    pub fuzz: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct RadiusParams {
    #[arg(long, default_value_t = 10)]
    pub n_max: u64,
    /// Taylor coefficients K per coordinate.
    #[arg(long, default_value_t = 40)]
    pub terms: usize,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct TaylorGlobalParams {
    /// Grid points per axis.
    #[arg(long, default_value_t = 5)]
    pub grid: usize,
    #[arg(long, default_value_t = -2.0, allow_hyphen_values = true)]
    pub lo: f64,
    #[arg(long, default_value_t = 2.0, allow_hyphen_values = true)]
    pub hi: f64,
    #[arg(long, default_value_t = 10)]
    pub coords: u64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Fixed Taylor degree; the remainder oracle chooses it when omitted.
    #[arg(long)]
    pub terms: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GrowthFailureParams {
    #[arg(long, default_value_t = 0.1)]
    pub t: f64,
    #[arg(long, default_value_t = 300)]
    pub n_max: u64,
    #[arg(long, default_value_t = 20)]
    pub m_max: u32,
}

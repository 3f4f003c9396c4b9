use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use token_spectra::GeneratorSpec;

use crate::input::RangeSpec;

#[derive(Parser, Debug)]
#[command(
    name = "tokspec",
    version,
    about = "Spectra of k-token graphs: construction, bound checks and conjecture scans"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Adjacency and Laplacian spectra of each input graph.
    Spectrum(SpectrumArgs),
    /// Build F_k(G) and emit it with a summary.
    Token(TokenArgs),
    /// Run a named checker and report per-check rows.
    Verify(VerifyArgs),
    /// Scan a corpus for the k-parameter conjectures.
    Scan(ScanArgs),
}

/// Exactly one input source.
#[derive(Args, Debug, Default, Clone)]
#[group(id = "input", multiple = false)]
pub struct InputArgs {
    /// Named family, `family:p1,p2` (e.g. `cycle:9`, `johnson:5,2`, `heawood`).
    #[arg(long, value_name = "SPEC")]
    pub gen: Option<GeneratorSpec>,
    /// One-parameter family over an inclusive range, `family:a..b`.
    #[arg(long, value_name = "RANGE")]
    pub gen_range: Option<RangeSpec>,
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "PATH")]
    pub graph6_file: Option<PathBuf>,
    /// Edge-list JSON: `{"n": .., "edges": [[u, v], ..]}` or an array of them.
    #[arg(long, value_name = "PATH")]
    pub json_file: Option<PathBuf>,
}

impl InputArgs {
    pub fn is_empty(&self) -> bool {
        self.gen.is_none()
            && self.gen_range.is_none()
            && self.graph6_file.is_none()
            && self.json_file.is_none()
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Human,
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    /// Relative tolerance override.
    #[arg(long, value_parser = positive_f64)]
    pub tol: Option<f64>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err("tolerance must be positive".into())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Adjacency,
    Laplacian,
    Both,
}

#[derive(Args, Debug)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value_t = KindArg::Both)]
    pub kind: KindArg,
    /// Add one row per vertex with its local adjacency spectrum.
    #[arg(long)]
    pub local: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    /// graph6 up to 62 vertices, edge list beyond.
    Auto,
    Graph6,
    Edges,
    None,
}

#[derive(Args, Debug)]
pub struct TokenArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = Emit::Auto)]
    pub emit: Emit,
    /// Include adjacency and Laplacian spectra of F_k(G).
    #[arg(long)]
    pub spectra: bool,
    /// Compare the spectra of F_k(G) against this generated graph.
    #[arg(long, value_name = "SPEC")]
    pub compare: Option<GeneratorSpec>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Table1,
    Heawood,
    Inclusion,
    Lew,
    Radius,
    Complement,
    Quotient,
    Commutation,
    Srg,
    Johnson,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub check: Check,
    #[command(flatten)]
    pub input: InputArgs,
    /// A single k.
    #[arg(long, conflicts_with = "kmax")]
    pub k: Option<usize>,
    /// Every k up to this value.
    #[arg(long)]
    pub kmax: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value_t = 3)]
    pub kmax: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

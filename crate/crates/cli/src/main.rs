//! `equitri`: build, verify and compare equivariant triangulations of real
//! projective space.
//!
//! Exit codes: 0 success or verdict match, 1 input error, 2 verification
//! mismatch, 3 search budget exhausted.

mod commands;
mod emit;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use emit::Format;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] equitri_core::Error),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use equitri_core::Error as E;
        match self {
            CliError::Core(E::NotEquivariant { .. })
            | CliError::Core(E::NonSimplicialQuotient(_))
            | CliError::Core(E::ConstructionInvariant(_)) => 2,
            _ => 1,
        }
    }
}

/// How a command that ran to completion turned out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    Mismatch,
    Inconclusive,
}

impl Outcome {
    fn exit_code(self) -> u8 {
        match self {
            Outcome::Success => 0,
            Outcome::Mismatch => 2,
            Outcome::Inconclusive => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "equitri", version, about = "Equivariant triangulations of real projective space")]
struct Cli {
    /// `text` prints a readable report, a sentinel line, then JSON.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct Dest {
    /// Write the complex here (and its action next to it, as `.act`).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Allow `--out` to replace existing files.
    #[arg(long)]
    force: bool,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Abandon the search after this many nodes.
    #[arg(long, default_value_t = 50_000_000)]
    node_limit: u64,
    /// Abandon the search after this many seconds.
    #[arg(long, default_value_t = 600)]
    time_limit: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuildKind {
    /// The `(n+1)^2`-vertex complex from the cross-polytope.
    SigmaRpn,
    /// The `n(n+1)`-vertex complex without fixed points.
    Reduced,
    /// The orbit simplex `Y^n`.
    Yn,
    /// `Y^n` reflected through all sign patterns.
    Lift,
    /// The octahedral 3-balls.
    D3Blocks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Block {
    Diag,
    Cone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Coefficients {
    Z,
    Gf2,
    Both,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a constructed triangulation.
    Build {
        #[arg(value_enum)]
        kind: BuildKind,
        #[arg(long)]
        n: Option<usize>,
        /// Which octahedral ball `d3-blocks` emits.
        #[arg(long, value_enum, default_value_t = Block::Diag)]
        block: Block,
        #[command(flatten)]
        dest: Dest,
    },
    /// Emit a catalog complex, or list the catalog.
    Catalog {
        /// Catalog id such as `rp3-11a`.
        id: Option<String>,
        #[arg(long, conflicts_with = "id")]
        list: bool,
        #[command(flatten)]
        dest: Dest,
    },
    /// Certify a complex: pseudomanifold, links, homology, equivariance.
    Verify {
        file: PathBuf,
        #[arg(long)]
        action: Option<PathBuf>,
        /// Expected verdict: rpK, sK, bK, ball or sphere.
        #[arg(long, value_parser = commands::parse_expectation)]
        expect: Option<commands::Expectation>,
    },
    /// Simplicial homology.
    Homology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Coefficients::Both)]
        coefficients: Coefficients,
    },
    /// Orbit space of a complex under an action.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        action: PathBuf,
        #[command(flatten)]
        dest: Dest,
    },
    /// Search for a simplicial isomorphism.
    Iso { a: PathBuf, b: PathBuf },
    /// All triangulated 2-spheres with a given number of vertices.
    EnumerateSpheres {
        #[arg(long = "v")]
        vertices: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Look for an 8-vertex 2-sphere with a simply transitive `Z_2^3`.
    Lemma6 {
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Run the whole pipeline.
    Report {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[command(flatten)]
        dest: Dest,
    },
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("EQUITRI_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Input(format!("EQUITRI_THREADS={value:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    configure_threads()?;
    let f = cli.format;
    match cli.command {
        Command::Build { kind, n, block, dest } => commands::build(f, kind, n, block, &dest),
        Command::Catalog { id, list, dest } => commands::catalog(f, id.as_deref(), list, &dest),
        Command::Verify { file, action, expect } => {
            commands::verify(f, &file, action.as_deref(), expect)
        }
        Command::Homology { file, coefficients } => commands::homology(f, &file, coefficients),
        Command::Quotient { file, action, dest } => commands::quotient(f, &file, &action, &dest),
        Command::Iso { a, b } => commands::iso(f, &a, &b),
        Command::EnumerateSpheres { vertices, budget } => {
            commands::enumerate_spheres(f, vertices, &budget)
        }
        Command::Lemma6 { budget } => commands::lemma6(f, &budget),
        Command::Report { max_n, dest } => commands::report(f, max_n, &dest),
    }
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
    match run(cli) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

//! `tracezero` command-line tool.

mod commands;
mod error;
mod format;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use crate::commands::Ctx;

#[derive(Debug, Parser)]
#[command(
    name = "tracezero",
    version,
    about = "2×2 trace-zero symmetric matrices and the maps they induce"
)]
struct Cli {
    /// Tolerance for equality tests.
    #[arg(long, global = true, default_value_t = tracezero::Tolerance::DEFAULT_EPS, allow_negative_numbers = true)]
    tol: f64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Read angle arguments in degrees (output stays in radians).
    #[arg(long, global = true)]
    degrees: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Split a matrix [[a, b], [c, d]] into (λ, θ).
    Decompose {
        #[arg(num_args = 4, value_names = ["A", "B", "C", "D"], allow_negative_numbers = true, required = true)]
        entries: Vec<f64>,
    },
    /// Build the matrix for given λ and θ (or reflection axis angle θ/2).
    #[command(group(ArgGroup::new("angle").required(true).args(["theta", "axis"])))]
    Build {
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        theta: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        axis: Option<f64>,
    },
    /// Iterate the scaled reflection from (X, Y) and write the orbit as CSV.
    #[command(group(ArgGroup::new("map").required(true).args(["lambda", "from_matrix"])))]
    Orbit {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(allow_negative_numbers = true)]
        y: f64,
        #[arg(long, allow_negative_numbers = true, requires = "axis")]
        lambda: Option<f64>,
        #[arg(long, allow_negative_numbers = true, requires = "lambda")]
        axis: Option<f64>,
        /// Take the map from a trace-zero symmetric matrix instead.
        #[arg(long, num_args = 4, value_names = ["A", "B", "C", "D"], allow_negative_numbers = true, conflicts_with_all = ["lambda", "axis"])]
        from_matrix: Option<Vec<f64>>,
        #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..=1_000_000))]
        iters: u64,
        /// CSV destination; without it CSV goes to stdout and the summary to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Orbit cardinality, stable set and convergence of a start point.
    Classify {
        #[arg(allow_negative_numbers = true)]
        x: f64,
        #[arg(allow_negative_numbers = true)]
        y: f64,
        #[arg(long, allow_negative_numbers = true)]
        lambda: f64,
        #[arg(long, allow_negative_numbers = true)]
        axis: f64,
    },
    /// Compose a rotation by α with the reflection of matrix angle θ.
    #[command(group(ArgGroup::new("direction").required(true).args(["cw", "acw"])))]
    Compose {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, allow_negative_numbers = true)]
        theta: f64,
        #[arg(long)]
        cw: bool,
        #[arg(long)]
        acw: bool,
    },
    /// Test whether a symmetric matrix read from FILE is a multiple of the identity.
    Psym { file: PathBuf },
    /// Classify an orthogonal matrix as rotation or reflection.
    OrthoClassify {
        #[arg(num_args = 4, value_names = ["A", "B", "C", "D"], allow_negative_numbers = true, required = true)]
        entries: Vec<f64>,
    },
}

fn run(cli: Cli) -> error::CliResult<()> {
    let ctx = Ctx::new(cli.tol, cli.json, cli.degrees)?;
    match cli.command {
        Command::Decompose { entries } => ctx.decompose(&entries),
        Command::Build {
            lambda,
            theta,
            axis,
        } => ctx.build(lambda, theta, axis),
        Command::Orbit {
            x,
            y,
            lambda,
            axis,
            from_matrix,
            iters,
            out,
            svg,
        } => ctx.orbit(commands::OrbitArgs {
            x,
            y,
            lambda,
            axis,
            from_matrix,
            iters: iters as usize,
            out,
            svg,
        }),
        Command::Classify { x, y, lambda, axis } => ctx.classify(x, y, lambda, axis),
        Command::Compose {
            alpha, theta, cw, ..
        } => ctx.compose(alpha, theta, cw),
        Command::Psym { file } => ctx.psym(&file),
        Command::OrthoClassify { entries } => ctx.ortho_classify(&entries),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

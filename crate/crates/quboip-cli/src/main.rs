//! `quboip` — quantum-Boolean edge detection from the command line.
//!
//! Subcommands mirror the pipeline stages: `run` drives the whole
//! experiment, `slice` exports bitplanes, `edge` runs a single detector
//! backend, and `compare` scores two bitplanes against each other.
//!
//! Exit codes: 0 on success, 2 for usage errors, 3 for I/O or parse
//! failures.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quboip::edge::WindowMode;
use quboip::pipeline::{run_compare, run_pipeline, run_slice, Backend, PipelineConfig};
use quboip::Error;

#[derive(Parser)]
#[command(
    name = "quboip",
    version,
    about = "Quantum-Boolean image edge detection"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full classical/quantum experiment and write a report.
    Run(RunArgs),
    /// Decompose the input into bitplane PBM files.
    Slice {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Run a single detector backend and write its edge map.
    Edge(EdgeArgs),
    /// Compare two bitplane files with the OOIE metric.
    Compare {
        /// First bitplane (PBM).
        a: PathBuf,
        /// Second bitplane (PBM).
        b: PathBuf,
        #[arg(long)]
        out_dir: Option<PathBuf>,
        /// Also write the pixel-to-pixel error map (needs --out-dir).
        #[arg(long)]
        emit_error_map: bool,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out_dir: PathBuf,
    /// Bitplane to process (default: the MSB).
    #[arg(long)]
    bitplane: Option<usize>,
    /// Odd kernel width.
    #[arg(long, default_value_t = 3)]
    kernel_size: usize,
    /// Number of detector passes.
    #[arg(long, default_value_t = 1)]
    passes: usize,
    #[arg(long, value_enum, default_value_t = WindowModeArg::Prose)]
    window_mode: WindowModeArg,
    #[arg(long, value_enum, default_value_t = BackendArg::Both)]
    backend: BackendArg,
    /// Per-cell bit-flip probability on the quantum branch.
    #[arg(long, default_value_t = 0.0)]
    noise_flip_prob: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write plane0..plane{B-1}.pbm.
    #[arg(long)]
    emit_bitplanes: bool,
    /// Also write the pixel-to-pixel error map.
    #[arg(long)]
    emit_error_map: bool,
}

#[derive(Args)]
struct EdgeArgs {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    out_dir: PathBuf,
    #[arg(long)]
    bitplane: Option<usize>,
    #[arg(long, default_value_t = 3)]
    kernel_size: usize,
    #[arg(long, default_value_t = 1)]
    passes: usize,
    #[arg(long, value_enum, default_value_t = WindowModeArg::Prose)]
    window_mode: WindowModeArg,
    /// Which single backend to run.
    #[arg(long, value_enum)]
    backend: EdgeBackendArg,
    #[arg(long, default_value_t = 0.0)]
    noise_flip_prob: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum WindowModeArg {
    /// OR over every element except the center.
    Prose,
    /// OR over the off-cross elements only.
    Matlab,
}

impl From<WindowModeArg> for WindowMode {
    fn from(arg: WindowModeArg) -> Self {
        match arg {
            WindowModeArg::Prose => WindowMode::Prose,
            WindowModeArg::Matlab => WindowMode::Matlab,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Classical,
    Quantum,
    Both,
}

impl From<BackendArg> for Backend {
    fn from(arg: BackendArg) -> Self {
        match arg {
            BackendArg::Classical => Backend::Classical,
            BackendArg::Quantum => Backend::Quantum,
            BackendArg::Both => Backend::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum EdgeBackendArg {
    Classical,
    Quantum,
}

impl From<EdgeBackendArg> for Backend {
    fn from(arg: EdgeBackendArg) -> Self {
        match arg {
            EdgeBackendArg::Classical => Backend::Classical,
            EdgeBackendArg::Quantum => Backend::Quantum,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::Config(_) | Error::Domain(_) => ExitCode::from(2),
                Error::Io { .. } | Error::Parse { .. } => ExitCode::from(3),
                _ => ExitCode::FAILURE,
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Run(args) => {
            let config = PipelineConfig {
                input: args.input,
                out_dir: args.out_dir,
                bitplane: args.bitplane,
                kernel_width: args.kernel_size,
                passes: args.passes,
                window_mode: args.window_mode.into(),
                backend: args.backend.into(),
                noise_flip_prob: args.noise_flip_prob,
                seed: args.seed,
                emit_bitplanes: args.emit_bitplanes,
                emit_error_map: args.emit_error_map,
            };
            let outcome = run_pipeline(&config)?;
            if let Some(report) = &outcome.report {
                print!("{}", report.to_text());
            }
            for path in &outcome.written {
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Slice { input, out_dir } => {
            for path in run_slice(&input, &out_dir)? {
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Edge(args) => {
            let config = PipelineConfig {
                input: args.input,
                out_dir: args.out_dir,
                bitplane: args.bitplane,
                kernel_width: args.kernel_size,
                passes: args.passes,
                window_mode: args.window_mode.into(),
                backend: args.backend.into(),
                noise_flip_prob: args.noise_flip_prob,
                seed: args.seed,
                emit_bitplanes: false,
                emit_error_map: false,
            };
            let outcome = run_pipeline(&config)?;
            for path in &outcome.written {
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
        Command::Compare {
            a,
            b,
            out_dir,
            emit_error_map,
        } => {
            let (report, written) = run_compare(&a, &b, out_dir.as_deref(), emit_error_map)?;
            print!("{}", report.to_text());
            for path in &written {
                eprintln!("wrote {}", path.display());
            }
            Ok(())
        }
    }
}

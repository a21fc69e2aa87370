//! `anyon`: inspect anyon models, rebuild bulk braidings from boundary half
//! braidings, and run the braiding protocols on simulated toric-code cells.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 validation or physics failure.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Format, ModelAction, Protocol};

#[derive(Parser, Debug)]
#[command(name = "anyon", version, about = "Anyon models, boundary half braidings, and toric-code braiding protocols")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inspect or validate an anyon model.
    Model {
        #[arg(value_enum)]
        action: ModelAction,
        #[command(flatten)]
        source: ModelSource,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Bulk anyons of D(Z_N) rebuilt from boundary half braidings.
    Center {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "smooth")]
        boundary: String,
        /// Compare the rebuilt braiding with the center of Rep(Z_N).
        #[arg(long)]
        check: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run a protocol on a simulated cell.
    Simulate {
        #[arg(value_enum)]
        protocol: Protocol,
        /// 3, 4, or lattice:RxC.
        #[arg(long)]
        cell: Option<String>,
        #[arg(long, default_value = "1")]
        path: String,
        /// Run the protocol on every path of the cell (both preset cells if --cell is absent).
        #[arg(long)]
        all: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Measure the nontrivial half braidings and assemble the full R table.
    MeasureR {
        #[arg(long, default_value = "toric")]
        model: String,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Swap the measuring cell's path for a trivial one (fault injection).
        #[arg(long, hide = true)]
        corrupt_cell: bool,
    },
    /// Export a planar lattice description.
    Lattice {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long, default_value = "smooth")]
        top: String,
        #[arg(long, default_value = "smooth")]
        bottom: String,
        #[arg(long, default_value = "rough")]
        left: String,
        #[arg(long, default_value = "rough")]
        right: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Seeded randomized self-test of the simulator and scattering circuit.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ModelSource {
    /// toric, dz3, trivial, or center:zN.
    #[arg(long)]
    builtin: Option<String>,
    /// JSON model file.
    #[arg(long)]
    file: Option<PathBuf>,
}

fn run(cli: Cli) -> output::CliResult {
    match cli.command {
        Command::Model { action, source, format, output } => {
            commands::model::run(action, source.builtin.as_deref(), source.file.as_deref(), format, output.as_deref())
        }
        Command::Center { n, boundary, check, format, output } => {
            commands::center::run(n, &boundary, check, format, output.as_deref())
        }
        Command::Simulate { protocol, cell, path, all, format, output } => {
            commands::simulate::run(protocol, cell.as_deref(), &path, all, format, output.as_deref())
        }
        Command::MeasureR { model, output, corrupt_cell } => commands::measure::run(&model, corrupt_cell, output.as_deref()),
        Command::Lattice { rows, cols, top, bottom, left, right, output } => {
            commands::lattice::run(rows, cols, [&top, &bottom, &left, &right], output.as_deref())
        }
        Command::Check { seed, cases } => commands::check::run(seed, cases),
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
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

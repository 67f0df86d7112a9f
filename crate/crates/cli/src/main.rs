//! `umlist`: generate instances, run the colorers, verify and plot.
//!
//! Exit codes: 0 success, 2 input error, 3 the algorithm found the input
//! infeasible, 4 a guard refused the work, 1 internal failure.

mod instance;
mod lists;
mod plot;
mod run;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use umlist_core::{Coloring, ErrorKind, Mode};

use instance::{GenKind, GenParams, Instance};
use lists::ListPolicy;
use run::{Algorithm, ColorArgs};

#[derive(Parser)]
#[command(name = "umlist", version, about = "Unique-maximum and conflict-free list coloring")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a JSON instance.
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        #[command(flatten)]
        params: GenParams,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Color an instance, verify the result and write a report.
    Color {
        instance: PathBuf,
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        /// uniform:L, shifted:L, theorem (alias auto), star:S or file:PATH.
        #[arg(long, default_value = "theorem")]
        lists: ListPolicy,
        #[arg(long)]
        seed: Option<u64>,
        /// Target notion for `refine`: cf or proper.
        #[arg(long, default_value = "cf")]
        mode: Mode,
        /// Base coloring for `refine`; computed when absent.
        #[arg(long)]
        base: Option<PathBuf>,
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Raise the path-enumeration and exact-colorer guards.
        #[arg(long)]
        guard_override: bool,
        /// Leave wall time out of the report so reruns are byte-identical.
        #[arg(long)]
        omit_timing: bool,
    },
    /// Draw an instance, optionally colored, as SVG.
    Plot {
        instance: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

/// Exit code for an error: core errors by kind, everything else is input.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.chain().find_map(|c| c.downcast_ref::<umlist_core::Error>()).map(umlist_core::Error::kind) {
        Some(ErrorKind::Infeasible) => 3,
        Some(ErrorKind::Guard) => 4,
        Some(ErrorKind::Internal) => 1,
        Some(ErrorKind::Input) | None => 2,
    }
}

fn execute(cli: Cli) -> Result<Option<anyhow::Error>> {
    match cli.command {
        Command::Gen { kind, params, seed, out } => {
            let inst = generate_checked(kind, &params, seed)?;
            let text = serde_json::to_string_pretty(&inst)? + "\n";
            match out {
                Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(None)
        }
        Command::Color { instance, algorithm, lists, seed, mode, base, out, guard_override, omit_timing } => {
            if mode == Mode::Um && algorithm == Algorithm::Refine {
                anyhow::bail!("unique-maximum colorings are not closed under refinement; use --mode cf or proper");
            }
            std::fs::create_dir_all(&out).with_context(|| format!("creating {}", out.display()))?;
            let args = ColorArgs { instance, algorithm, lists, seed, mode, base, out, guard_override, omit_timing };
            let (report, failure) = run::color(&args)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(failure)
        }
        Command::Plot { instance, coloring, out } => {
            let inst = Instance::load(&instance)?;
            let coloring: Option<Coloring> = match coloring {
                Some(p) => {
                    let text = std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
                    Some(serde_json::from_str(&text).with_context(|| format!("parsing coloring {}", p.display()))?)
                }
                None => None,
            };
            let svg = plot::render(&inst, coloring.as_ref())?;
            std::fs::write(&out, svg).with_context(|| format!("writing {}", out.display()))?;
            Ok(None)
        }
    }
}

fn generate_checked(kind: GenKind, params: &GenParams, seed: Option<u64>) -> Result<Instance> {
    let inst = instance::generate(kind, params, seed)?;
    // geometric instances must be accepted by their constructors
    if inst.graph().is_none() {
        inst.hypergraph(false)?;
    }
    Ok(inst)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let err = match execute(cli) {
        Ok(None) => return ExitCode::SUCCESS,
        Ok(Some(e)) | Err(e) => e,
    };
    eprintln!("error: {err:#}");
    ExitCode::from(exit_code(&err))
}

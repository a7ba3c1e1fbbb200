use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pda_core::algebra::{parse_presentation, FreeMfDGA};
use pda_core::diagram::{parse_diagram, RingChoice};
use pda_core::disks::Limits;
use pda_core::PipelineError;

mod report;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "pda", version, about = "Planar diagram algebras of partitioned Legendrian links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args, Clone)]
struct Opts {
    /// Filtration level (defaults to the number of pieces).
    #[arg(long, global = true)]
    level: Option<usize>,
    /// Grading ring: z, z2 or z2r (Z modulo twice the rotation gcd).
    #[arg(long, global = true)]
    ring: Option<RingChoice>,
    /// Largest face multiplicity explored by the disk search.
    #[arg(long, global = true, default_value_t = 8)]
    max_multiplicity: u32,
    /// Tensor length bound for the exactness search.
    #[arg(long, global = true, default_value_t = 3)]
    torsion_bound: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Generators, differential and the square-zero check.
    Compute { input: PathBuf },
    /// Torsion, augmentations, tree and Poincare polynomials.
    Invariants { input: PathBuf },
    /// Augmentations at the chosen level.
    Augs { input: PathBuf },
    /// Augmentation tree.
    Tree { input: PathBuf },
    /// Bilinearized Poincare polynomials for all augmentation pairs.
    Poincare { input: PathBuf },
    /// Verify a move between two diagrams.
    VerifyMove {
        minus: PathBuf,
        plus: PathBuf,
        spec: PathBuf,
    },
    /// Generator table: word, length, grading, pieces.
    ListGenerators { input: PathBuf },
    /// Enumerated disks with their boundary words.
    DumpDisks { input: PathBuf },
}

/// Failure classes mapped to exit codes.
enum Failure {
    Parse(anyhow::Error),
    Invariant(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Parse(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Parse)
}

fn is_presentation(text: &str) -> bool {
    serde_json::from_str::<Value>(text)
        .ok()
        .and_then(|v| v.get("generators").map(|_| ()))
        .is_some()
}

/// Load a diagram or a presentation into an algebra.
pub(crate) fn load_algebra(path: &Path, opts: &Opts) -> Result<(FreeMfDGA, Option<report::DiagramRun>), Failure> {
    let text = read(path)?;
    if is_presentation(&text) {
        let dga = parse_presentation(&text).map_err(|e| match e {
            pda_core::algebra::PresentationError::Parse(p) => Failure::Parse(p.into()),
            pda_core::algebra::PresentationError::Algebra(a) => Failure::Invariant(a.into()),
        })?;
        return Ok((dga, None));
    }
    let d = parse_diagram(&text).map_err(|e| Failure::Parse(anyhow::anyhow!("{}: {e}", path.display())))?;
    let ring = d.resolve_ring(opts.ring);
    let limits = Limits {
        max_face_multiplicity: opts.max_multiplicity,
    };
    let c = pda_core::compute(&d, ring, limits).map_err(|e| match e {
        PipelineError::Disk(e) => Failure::Parse(e.into()),
        PipelineError::Algebra(pda_core::AlgebraError::MissingGrading(s)) => {
            Failure::Parse(anyhow::anyhow!("missing grading for chord `{s}`"))
        }
        PipelineError::Algebra(e) => Failure::Invariant(e.into()),
    })?;
    let dga = c.dga.clone();
    Ok((dga, Some(report::DiagramRun { diagram: d, comp: c })))
}

fn emit(opts: &Opts, table: String, value: Value) {
    let text = match opts.format {
        Format::Table => table,
        Format::Json => {
            let mut v = value;
            if let Value::Object(m) = &mut v {
                m.insert("schema_version".into(), json!(SCHEMA_VERSION));
            }
            serde_json::to_string_pretty(&v).expect("report serializes") + "\n"
        }
    };
    // a closed pipe (`pda ... | head`) is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn run(cli: Cli) -> Result<(), Failure> {
    let opts = cli.opts;
    match cli.command {
        Command::Compute { input } => {
            let (dga, _) = load_algebra(&input, &opts)?;
            let (t, v) = report::compute(&dga);
            emit(&opts, t, v);
        }
        Command::ListGenerators { input } => {
            let (dga, run) = load_algebra(&input, &opts)?;
            let (t, v) = report::generators(&dga, run.as_ref());
            emit(&opts, t, v);
        }
        Command::DumpDisks { input } => {
            let text = read(&input)?;
            let d = parse_diagram(&text).map_err(|e| Failure::Parse(e.into()))?;
            let limits = Limits {
                max_face_multiplicity: opts.max_multiplicity,
            };
            let ring = d.resolve_ring(opts.ring);
            let (t, v) = report::disks(&d, ring, limits).map_err(Failure::Parse)?;
            emit(&opts, t, v);
        }
        Command::Invariants { input } => {
            let (dga, _) = load_algebra(&input, &opts)?;
            let (t, v) = report::invariants(&dga, &opts).map_err(Failure::Invariant)?;
            emit(&opts, t, v);
        }
        Command::Augs { input } => {
            let (dga, _) = load_algebra(&input, &opts)?;
            let (t, v) = report::augs(&dga, &opts);
            emit(&opts, t, v);
        }
        Command::Tree { input } => {
            let (dga, _) = load_algebra(&input, &opts)?;
            let (t, v) = report::tree(&dga).map_err(Failure::Invariant)?;
            emit(&opts, t, v);
        }
        Command::Poincare { input } => {
            let (dga, _) = load_algebra(&input, &opts)?;
            let (t, v) = report::poincare(&dga, &opts).map_err(Failure::Invariant)?;
            emit(&opts, t, v);
        }
        Command::VerifyMove { minus, plus, spec } => {
            let (t, v) = report::verify_move(&minus, &plus, &spec, &opts)?;
            emit(&opts, t, v);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Invariant(e)) => {
            eprintln!("invariant violation: {e:#}");
            ExitCode::from(2)
        }
    }
}

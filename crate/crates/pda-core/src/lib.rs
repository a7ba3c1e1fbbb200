//! Planar diagram algebras of partitioned Legendrian links.
//!
//! The pipeline runs diagram → disks → words → inscription → algebra →
//! invariants. Each stage is a plain value computed from the previous one.

pub mod algebra;
pub mod diagram;
pub mod disks;
pub mod error;
pub mod gf2;
pub mod inscription;
pub mod invariants;
pub mod laurent;
pub mod moves;
pub mod words;

pub use error::{AlgebraError, DiskError, MoveError, ParseError};

use diagram::{Chord, GradingRing, LagrangianDiagram};
use disks::{DiskSet, Limits};
use words::CyclicWord;

/// Everything computed from a diagram on the way to its algebra.
#[derive(Debug, Clone)]
pub struct Computation {
    pub ring: GradingRing,
    pub chords: Vec<Chord>,
    pub disks: DiskSet,
    pub words: Vec<CyclicWord>,
    pub dga: algebra::FreeMfDGA,
}

/// Errors from the diagram pipeline.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error(transparent)]
    Disk(#[from] DiskError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Run disks, words and assembly for a parsed diagram.
pub fn compute(
    d: &LagrangianDiagram,
    ring: GradingRing,
    limits: Limits,
) -> Result<Computation, PipelineError> {
    let chords = diagram::chords(d, ring)?;
    let disks = disks::enumerate_disks(d, limits)?;
    let words = words::generate_words(&chords, d, ring);
    let dga = algebra::assemble_pda(d, &disks, &words, ring)?;
    Ok(Computation {
        ring,
        chords,
        disks,
        words,
        dga,
    })
}

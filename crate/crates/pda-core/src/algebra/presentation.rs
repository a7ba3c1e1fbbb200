//! JSON presentations of free mfDGAs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::expr::{canonical_symbol, parse_element, render_element};
use super::{FreeMfDGA, Generator, Mode};
use crate::diagram::GradingRing;
use crate::error::{AlgebraError, ParseError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Presentation {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    #[serde(default = "default_mode")]
    pub mode: String,
    /// `Z`, or `Z/m` for an even modulus `m`.
    #[serde(default = "default_grading")]
    pub grading: String,
    #[serde(default)]
    pub t_variables: Vec<TVariable>,
    pub generators: Vec<PresentedGenerator>,
    pub differential: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pieces: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TVariable {
    pub name: String,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentedGenerator {
    pub symbol: String,
    pub degree: i64,
    pub level: usize,
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

fn default_mode() -> String {
    "full".into()
}

fn default_grading() -> String {
    "Z".into()
}

fn parse_ring(s: &str) -> Result<GradingRing, String> {
    if s == "Z" {
        return Ok(GradingRing::Z);
    }
    let m: i64 = s
        .strip_prefix("Z/")
        .and_then(|m| m.parse().ok())
        .ok_or_else(|| format!("unknown grading `{s}`"))?;
    if m < 2 || m % 2 != 0 {
        return Err(format!("grading modulus must be even and positive, got {m}"));
    }
    Ok(GradingRing::Mod(m))
}

/// Errors from reading a presentation: either the document or the algebra is bad.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Parse and validate a presentation.
pub fn parse_presentation(text: &str) -> Result<FreeMfDGA, PresentationError> {
    let raw: Presentation = serde_json::from_str(text).map_err(ParseError::from_json)?;
    if raw.schema_version != SCHEMA_VERSION {
        return Err(ParseError::semantic(format!("unsupported schema_version {}", raw.schema_version)).into());
    }
    let mode: Mode = raw.mode.parse().map_err(ParseError::Semantic)?;
    let ring = parse_ring(&raw.grading).map_err(ParseError::Semantic)?;
    let mut generators = Vec::new();
    let mut seen = BTreeMap::new();
    for g in &raw.generators {
        let symbol = canonical_symbol(&g.symbol);
        if symbol.is_empty() || seen.insert(symbol.clone(), ()).is_some() {
            return Err(ParseError::semantic(format!("duplicate or empty generator `{}`", g.symbol)).into());
        }
        generators.push(Generator {
            symbol,
            degree: ring.norm(g.degree),
            level: g.level,
            chords: None,
        });
    }
    let t_names: Vec<String> = raw.t_variables.iter().map(|t| t.name.clone()).collect();
    let symbols: Vec<String> = generators.iter().map(|g| g.symbol.clone()).collect();
    let mut differential = vec![super::Element::zero(); generators.len()];
    for (sym, expr) in &raw.differential {
        let key = canonical_symbol(sym);
        let g = symbols
            .iter()
            .position(|s| *s == key)
            .ok_or_else(|| AlgebraError::UnknownGenerator(key.clone()))?;
        differential[g] = parse_element(expr, &symbols, &t_names)?;
    }
    let max_level = generators.iter().map(|g| g.level).max().unwrap_or(0);
    let mut dga = FreeMfDGA {
        generators,
        differential,
        ring,
        t_names,
        t_degrees: raw.t_variables.iter().map(|t| t.degree).collect(),
        mode,
        pieces: raw.pieces.unwrap_or(max_level).max(max_level),
        warnings: Vec::new(),
        possibly_incomplete: false,
    };
    dga.differential = dga.differential.iter().map(|x| dga.normalize(x)).collect();
    dga.validate()?;
    Ok(dga)
}

/// The presentation document of an algebra.
pub fn to_presentation(dga: &FreeMfDGA) -> Presentation {
    Presentation {
        schema_version: SCHEMA_VERSION,
        mode: dga.mode.label().into(),
        grading: match dga.ring {
            GradingRing::Z => "Z".into(),
            GradingRing::Mod(m) => format!("Z/{m}"),
        },
        t_variables: dga
            .t_names
            .iter()
            .zip(&dga.t_degrees)
            .map(|(n, &d)| TVariable {
                name: n.clone(),
                degree: d,
            })
            .collect(),
        generators: dga
            .generators
            .iter()
            .map(|g| PresentedGenerator {
                symbol: g.symbol.clone(),
                degree: g.degree,
                level: g.level,
            })
            .collect(),
        differential: dga
            .generators
            .iter()
            .zip(&dga.differential)
            .map(|(g, x)| (g.symbol.clone(), render_element(dga, x)))
            .collect(),
        pieces: Some(dga.pieces),
    }
}

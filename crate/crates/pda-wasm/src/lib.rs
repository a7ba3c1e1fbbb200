//! A thin browser front end. Each export takes the JSON text of a diagram
//! and returns a plain-text report. The `*_text` functions hold the logic
//! so they can be tested natively.

use pda_core::algebra::render_element;
use pda_core::diagram::parse_diagram;
use pda_core::disks::Limits;
use pda_core::invariants::{augmentations, torsion_report};
use pda_core::Computation;
use wasm_bindgen::prelude::*;

fn load(json: &str) -> Result<Computation, String> {
    let d = parse_diagram(json).map_err(|e| e.to_string())?;
    pda_core::compute(&d, d.resolve_ring(None), Limits::default()).map_err(|e| e.to_string())
}

/// One line per generator: symbol, level, degree.
pub fn generators_text(json: &str) -> Result<String, String> {
    let c = load(json)?;
    let mut out = String::new();
    for g in &c.dga.generators {
        out += &format!("{:<16} level {}  degree {}\n", g.symbol, g.level, g.degree);
    }
    Ok(out)
}

pub fn differential_text(json: &str) -> Result<String, String> {
    let c = load(json)?;
    let dga = &c.dga;
    let width = dga.generators.iter().map(|g| g.symbol.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (g, gen) in dga.generators.iter().enumerate() {
        out += &format!("d {:<width$} = {}\n", gen.symbol, render_element(dga, &dga.differential[g]));
    }
    let ok = dga.check_square_zero().is_empty();
    out += &format!("d^2 = 0: {}\n", if ok { "yes" } else { "no" });
    Ok(out)
}

pub fn torsion_text(json: &str, bound: usize) -> Result<String, String> {
    let c = load(json)?;
    let dga = &c.dga;
    let r = torsion_report(dga, bound);
    let mut out = format!("tau_aug {}\n", r.tau_aug);
    match (r.vanishing_level, &r.witness) {
        (Some(l), Some(w)) => out += &format!("vanishes at level {l}: d({}) = 1\n", render_element(dga, w)),
        _ => out += "no vanishing found\n",
    }
    for level in 1..=dga.pieces {
        out += &format!("level {level}: {} augmentations\n", augmentations(dga, level).len());
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn generators(json: &str) -> Result<String, JsError> {
    generators_text(json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn differential(json: &str) -> Result<String, JsError> {
    differential_text(json).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn torsion(json: &str, bound: usize) -> Result<String, JsError> {
    torsion_text(json, bound).map_err(|e| JsError::new(&e))
}

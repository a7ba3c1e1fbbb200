#![allow(dead_code)]

use pda_core::algebra::{parse_presentation, FreeMfDGA};
use pda_core::diagram::{parse_diagram, LagrangianDiagram};
use pda_core::disks::Limits;
use pda_core::Computation;

/// Every bundled diagram.
pub const DIAGRAMS: &[&str] = &[
    "unknot",
    "hopf",
    "trefoil",
    "polyfillable",
    "polyfillable_single",
    "venn3",
    "chain4",
];

pub fn corpus_path(rel: &str) -> String {
    format!("{}/../../corpus/{rel}", env!("CARGO_MANIFEST_DIR"))
}

pub fn read(rel: &str) -> String {
    std::fs::read_to_string(corpus_path(rel)).unwrap_or_else(|e| panic!("reading {rel}: {e}"))
}

pub fn diagram(name: &str) -> LagrangianDiagram {
    parse_diagram(&read(&format!("diagrams/{name}.json"))).unwrap()
}

pub fn compute(d: &LagrangianDiagram) -> Computation {
    pda_core::compute(d, d.resolve_ring(None), Limits::default()).unwrap()
}

pub fn computed(name: &str) -> (LagrangianDiagram, Computation) {
    let d = diagram(name);
    let c = compute(&d);
    (d, c)
}

pub fn torsion(k: usize) -> FreeMfDGA {
    parse_presentation(&read(&format!("presentations/torsion_k{k}.json"))).unwrap()
}

/// Generator by symbol.
pub fn g(dga: &FreeMfDGA, symbol: &str) -> usize {
    dga.index_of(symbol).unwrap_or_else(|| panic!("no generator {symbol}"))
}

/// Rendered differential of a generator.
pub fn d_of(dga: &FreeMfDGA, symbol: &str) -> String {
    pda_core::algebra::render_element(dga, &dga.differential[g(dga, symbol)])
}

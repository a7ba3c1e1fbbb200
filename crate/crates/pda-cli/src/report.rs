//! Report builders: each returns a human table and a JSON value.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::path::Path;

use serde_json::{json, Value};

use pda_core::algebra::{render_element, FreeMfDGA};
use pda_core::diagram::{GradingRing, LagrangianDiagram};
use pda_core::disks::{enumerate_disks, is_admissible, Limits};
use pda_core::invariants::{
    augmentation_tree, augmentations, bilinearized_complex, cochain_complex, degree_zero, poincare_polynomial,
    spectral_poincare, spectral_sequence, torsion_report, Augmentation, Direction, Poly3,
};
use pda_core::moves::{double_point_phi, parse_move_spec, verify_triple_point, MoveKind, Side};
use pda_core::Computation;

use crate::{load_algebra, Failure, Opts};

pub(crate) struct DiagramRun {
    pub diagram: LagrangianDiagram,
    pub comp: Computation,
}

/// Longest augmentation listing printed in table mode.
const TABLE_LIMIT: usize = 32;

fn ring_label(r: GradingRing) -> String {
    r.label()
}

pub(crate) fn compute(dga: &FreeMfDGA) -> (String, Value) {
    let mut t = String::new();
    let _ = writeln!(t, "mode {}  grading {}  generators {}", dga.mode.label(), ring_label(dga.ring), dga.len());
    let width = dga.generators.iter().map(|g| g.symbol.len()).max().unwrap_or(0);
    let mut diff = BTreeMap::new();
    for (g, gen) in dga.generators.iter().enumerate() {
        let rendered = render_element(dga, &dga.differential[g]);
        let _ = writeln!(t, "d {:<width$} = {}", gen.symbol, rendered);
        diff.insert(gen.symbol.clone(), rendered);
    }
    let violations = dga.check_square_zero();
    let _ = writeln!(t, "d^2 = 0: {}", if violations.is_empty() { "yes" } else { "NO" });
    for w in &dga.warnings {
        let _ = writeln!(t, "warning: {w}");
    }
    let v = json!({
        "mode": dga.mode.label(),
        "grading": ring_label(dga.ring),
        "generators": dga.generators.iter().map(|g| json!({
            "symbol": g.symbol, "degree": g.degree, "level": g.level
        })).collect::<Vec<_>>(),
        "differential": diff,
        "square_zero": violations.is_empty(),
        "possibly_incomplete": dga.possibly_incomplete,
        "warnings": dga.warnings,
    });
    (t, v)
}

pub(crate) fn generators(dga: &FreeMfDGA, run: Option<&DiagramRun>) -> (String, Value) {
    let mut t = String::new();
    let _ = writeln!(t, "{:<24} {:>6} {:>8}  pieces", "word", "length", "grading");
    let mut rows = Vec::new();
    for g in &dga.generators {
        let pieces: Vec<usize> = match (run, &g.chords) {
            (Some(r), Some(c)) => c.iter().map(|&k| r.comp.chords[k].end_piece).collect(),
            _ => Vec::new(),
        };
        let ps = pieces.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",");
        let _ = writeln!(t, "{:<24} {:>6} {:>8}  {}", g.symbol, g.level, g.degree, ps);
        rows.push(json!({"word": g.symbol, "length": g.level, "grading": g.degree, "pieces": pieces}));
    }
    (t, json!({ "generators": rows }))
}

pub(crate) fn disks(d: &LagrangianDiagram, ring: GradingRing, limits: Limits) -> anyhow::Result<(String, Value)> {
    let set = enumerate_disks(d, limits)?;
    let chords = pda_core::diagram::chords(d, ring)?;
    let names = d.t_names();
    let mut t = String::new();
    let mut rows = Vec::new();
    for u in &set.disks {
        let coef = pda_core::laurent::Monomial(u.h1.0.iter().take(d.nvars()).copied().collect());
        let c = coef.render(&names);
        let c = if c.is_empty() { "1".to_string() } else { c };
        let adm = is_admissible(u, d, &chords);
        let mult: Vec<String> = u
            .multiplicity
            .iter()
            .enumerate()
            .filter(|x| *x.1 > 0)
            .map(|(f, m)| format!("f{f}:{m}"))
            .collect();
        let _ = writeln!(
            t,
            "{:<28} coef {:<10} {} faces {}",
            u.word_string(d),
            c,
            if adm { "admissible" } else { "not-admissible" },
            mult.join(" ")
        );
        rows.push(json!({
            "word": u.word_string(d),
            "coefficient": c,
            "admissible": adm,
            "faces": u.multiplicity,
        }));
    }
    let _ = writeln!(t, "{} disks{}", set.disks.len(), if set.possibly_incomplete { " (possibly incomplete)" } else { "" });
    Ok((t, json!({"disks": rows, "possibly_incomplete": set.possibly_incomplete})))
}

fn aug_json(dga: &FreeMfDGA, a: &Augmentation) -> Value {
    json!(a.ones.iter().map(|&g| dga.generators[g].symbol.clone()).collect::<Vec<_>>())
}

fn aug_bits(dga: &FreeMfDGA, a: &Augmentation) -> String {
    let vars = degree_zero(dga, a.level);
    if vars.is_empty() {
        "(empty)".into()
    } else {
        a.bits(&vars)
    }
}

pub(crate) fn augs(dga: &FreeMfDGA, opts: &Opts) -> (String, Value) {
    let level = opts.level.unwrap_or(dga.pieces);
    let list = augmentations(dga, level);
    let vars = degree_zero(dga, level);
    let mut t = String::new();
    let names: Vec<&str> = vars.iter().map(|&g| dga.generators[g].symbol.as_str()).collect();
    let _ = writeln!(t, "level {level}: {} augmentations over [{}]", list.len(), names.join(", "));
    for a in &list {
        let _ = writeln!(t, "  {}", aug_bits(dga, a));
    }
    let v = json!({
        "level": level,
        "variables": names,
        "augmentations": list.iter().map(|a| aug_json(dga, a)).collect::<Vec<_>>(),
    });
    (t, v)
}

pub(crate) fn tree(dga: &FreeMfDGA) -> anyhow::Result<(String, Value)> {
    let tree = augmentation_tree(dga)?;
    let mut t = String::new();
    let mut verts = Vec::new();
    for (i, v) in tree.vertices.iter().enumerate() {
        let parent = v.parent.map(|p| p.to_string()).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            t,
            "v{i} level {} parent {} class size {} rep {}",
            v.level,
            parent,
            v.members.len(),
            aug_bits(dga, &v.representative)
        );
        verts.push(json!({
            "id": i, "level": v.level, "parent": v.parent,
            "representative": aug_json(dga, &v.representative),
            "class_size": v.members.len(),
        }));
    }
    let edges: Vec<Value> = tree.edges().iter().map(|&(c, p)| json!([c, p])).collect();
    Ok((t, json!({"vertices": verts, "edges": edges})))
}

fn poly1_string(p: &BTreeMap<i64, usize>) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter()
        .map(|(&e, &c)| {
            let coef = if c == 1 && e != 0 { String::new() } else { c.to_string() };
            match e {
                0 => coef,
                1 => format!("{coef}t"),
                _ => format!("{coef}t^{e}"),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn poly3_string(p: &Poly3) -> String {
    if p.is_empty() {
        return "0".into();
    }
    p.iter()
        .map(|(&(a, b, c), &k)| {
            let mut vars = String::new();
            for (name, e) in [("t", a), ("x", b), ("y", c)] {
                match e {
                    0 => {}
                    1 => vars.push_str(name),
                    _ => vars.push_str(&format!("{name}^{e}")),
                }
            }
            if vars.is_empty() {
                k.to_string()
            } else if k == 1 {
                vars
            } else {
                format!("{k}{vars}")
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn poly1_json(p: &BTreeMap<i64, usize>) -> Value {
    json!(p.iter().map(|(e, c)| (e.to_string(), *c)).collect::<BTreeMap<_, _>>())
}

fn poly3_json(p: &Poly3) -> Value {
    json!(p
        .iter()
        .map(|((a, b, c), k)| (format!("{a},{b},{c}"), *k))
        .collect::<BTreeMap<_, _>>())
}

pub(crate) fn poincare(dga: &FreeMfDGA, opts: &Opts) -> anyhow::Result<(String, Value)> {
    let level = opts.level.unwrap_or(dga.pieces);
    // bilinearized homology only depends on homotopy classes, so one
    // representative per tree vertex is enough
    let tree = augmentation_tree(dga)?;
    let list: Vec<(usize, &Augmentation)> = tree
        .at_level(level)
        .into_iter()
        .map(|i| (i, &tree.vertices[i].representative))
        .collect();
    let last = level.max(dga.pieces);
    let mut t = String::new();
    let mut rows = Vec::new();
    for &(i, el) in &list {
        for &(j, er) in &list {
            let c = bilinearized_complex(dga, el, er, level)?;
            let cc = cochain_complex(dga, el, er, level)?;
            let p = poincare_polynomial(&c, dga.ring);
            let hom = spectral_sequence(&c, dga.ring, Direction::Homology, last + 1);
            let coh = spectral_sequence(&cc, dga.ring, Direction::Cohomology, last + 1);
            let ps = spectral_poincare(&hom, last);
            let pc = spectral_poincare(&coh, last);
            let _ = writeln!(
                t,
                "v{i} v{j}  P = {}  Pspec = {}  Pspec(co) = {}",
                poly1_string(&p),
                poly3_string(&ps),
                poly3_string(&pc)
            );
            rows.push(json!({
                "left_vertex": i, "right_vertex": j,
                "left": aug_json(dga, el), "right": aug_json(dga, er),
                "P": poly1_json(&p), "P_spec_homology": poly3_json(&ps), "P_spec_cohomology": poly3_json(&pc),
                "stable_from": hom.stable_from(),
            }));
        }
    }
    if list.is_empty() {
        let _ = writeln!(t, "no augmentations at level {level}");
    }
    Ok((t, json!({"level": level, "pairs": rows})))
}

pub(crate) fn invariants(dga: &FreeMfDGA, opts: &Opts) -> anyhow::Result<(String, Value)> {
    let tr = torsion_report(dga, opts.torsion_bound);
    let mut t = String::new();
    let witness = tr.witness.as_ref().map(|x| render_element(dga, x));
    let _ = writeln!(
        t,
        "tau_aug {}  vanishing level {}  unknown levels [{}]",
        tr.tau_aug,
        tr.vanishing_level.map(|l| l.to_string()).unwrap_or_else(|| "none".into()),
        tr.unknown_levels.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")
    );
    if let Some(w) = &witness {
        let _ = writeln!(t, "witness d({w}) = 1");
    }
    let mut per_level = BTreeMap::new();
    for level in 1..=dga.pieces {
        let list = augmentations(dga, level);
        let _ = writeln!(t, "level {level}: {} augmentations", list.len());
        for a in list.iter().take(TABLE_LIMIT) {
            let _ = writeln!(t, "  {}", aug_bits(dga, a));
        }
        if list.len() > TABLE_LIMIT {
            let _ = writeln!(t, "  ... {} more (use --format json)", list.len() - TABLE_LIMIT);
        }
        per_level.insert(level.to_string(), list.iter().map(|a| aug_json(dga, a)).collect::<Vec<_>>());
    }
    let (tt, tv) = tree(dga)?;
    t.push_str(&tt);
    let (pt, pv) = poincare(dga, opts)?;
    t.push_str(&pt);
    let v = json!({
        "torsion": {
            "tau_aug": tr.tau_aug.to_string(),
            "vanishing_level": tr.vanishing_level,
            "witness": witness,
            "unknown_levels": tr.unknown_levels,
            "bound": opts.torsion_bound,
        },
        "augmentations": per_level,
        "tree": tv,
        "poincare": pv,
    });
    Ok((t, v))
}

fn load_side(path: &Path, opts: &Opts) -> Result<DiagramRun, Failure> {
    let (_, run) = load_algebra(path, opts)?;
    run.ok_or_else(|| Failure::Parse(anyhow::anyhow!("{} is not a diagram", path.display())))
}

pub(crate) fn verify_move(minus: &Path, plus: &Path, spec: &Path, opts: &Opts) -> Result<(String, Value), Failure> {
    let text = std::fs::read_to_string(spec).map_err(|e| Failure::Parse(anyhow::anyhow!("cannot read {}: {e}", spec.display())))?;
    let spec = parse_move_spec(&text).map_err(|e| Failure::Parse(e.into()))?;
    let m = load_side(minus, opts)?;
    let p = load_side(plus, opts)?;
    let ms = Side { diagram: &m.diagram, comp: &m.comp };
    let ps = Side { diagram: &p.diagram, comp: &p.comp };
    let classify = |e: pda_core::MoveError| match e {
        pda_core::MoveError::Precondition(_) => Failure::Parse(e.into()),
        _ => Failure::Invariant(e.into()),
    };
    let mut t = String::new();
    match spec.kind {
        MoveKind::TripleI | MoveKind::TripleII => {
            let r = verify_triple_point(ms, ps, &spec).map_err(classify)?;
            for (g, img) in &r.changed {
                let _ = writeln!(t, "Phi({g}) = {img}");
            }
            let _ = writeln!(t, "d+ = Phi d- Phi on all {} generators: pass", r.generators_checked);
            Ok((t, json!({"kind": "triple", "pass": true, "changed": r.changed, "generators": r.generators_checked})))
        }
        MoveKind::Double => {
            let r = double_point_phi(ms, ps, &spec).map_err(classify)?;
            for line in &r.log {
                let _ = writeln!(t, "{line}");
            }
            let _ = writeln!(t, "chain map to the stabilized algebra ({} generators): pass", r.target.len());
            Ok((t, json!({"kind": "double", "pass": true, "stages": r.log, "target_generators": r.target.len()})))
        }
    }
}


//! Verification of diagram moves on concrete pairs of diagrams.
//!
//! Triple point moves: the algebras before and after are related by the tame
//! map `Phi = Id + mu_u` for the small triangle `u` between the three strands.
//! We check `d_plus = Phi d_minus Phi` generator by generator.
//!
//! Double point moves: the diagram with the extra chords `a`, `b` (the minus
//! side) maps to a stabilization of the algebra without them. Generators are
//! processed in increasing action; `a`-words go to `e_hi`, `b`-words to
//! `e_lo` plus a correction, and every other word is corrected through the
//! stabilization homotopy. The result is checked to be a chain map.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{Element, FreeMfDGA, Term};
use crate::diagram::{Chord, LagrangianDiagram, Sign};
use crate::disks::DiskBoundaryWord;
use crate::error::{MoveError, ParseError};
use crate::inscription::inscribe;
use crate::Computation;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveKind {
    /// Triangle with one positive corner, `c+ b- a-`.
    #[serde(rename = "I")]
    TripleI,
    /// Triangle with two positive corners, `a+ c+ b-`.
    #[serde(rename = "II")]
    TripleII,
    #[serde(rename = "double")]
    Double,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveSpec {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub kind: MoveKind,
    /// Chord id after the move -> chord id before. Missing ids map to themselves.
    #[serde(default)]
    pub correspondence: BTreeMap<String, String>,
    /// Triangle corners in minus-side chord ids, e.g. `["k4+", "k5-", "k6-"]`.
    #[serde(default)]
    pub triangle: Vec<String>,
    #[serde(default)]
    pub a: Option<String>,
    #[serde(default)]
    pub b: Option<String>,
    /// Explicit chord actions on the minus side.
    #[serde(default)]
    pub actions: BTreeMap<String, f64>,
    /// Areas of bounded faces of the minus diagram by face id (default 1).
    #[serde(default)]
    pub face_areas: BTreeMap<usize, f64>,
    #[serde(default)]
    pub epsilon: Option<f64>,
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

pub fn parse_move_spec(text: &str) -> Result<MoveSpec, ParseError> {
    let spec: MoveSpec = serde_json::from_str(text).map_err(ParseError::from_json)?;
    if spec.schema_version != SCHEMA_VERSION {
        return Err(ParseError::semantic(format!(
            "unsupported schema_version {}",
            spec.schema_version
        )));
    }
    Ok(spec)
}

/// One diagram together with its computed algebra.
#[derive(Debug, Clone, Copy)]
pub struct Side<'a> {
    pub diagram: &'a LagrangianDiagram,
    pub comp: &'a Computation,
}

impl Side<'_> {
    fn chord(&self, id: &str) -> Result<usize, MoveError> {
        self.diagram
            .crossing_index(id)
            .ok_or_else(|| MoveError::Precondition(format!("unknown chord `{id}`")))
    }

    fn dga(&self) -> &FreeMfDGA {
        &self.comp.dga
    }

    /// Generator index by chord word.
    fn word_index(&self) -> BTreeMap<Vec<usize>, usize> {
        self.dga()
            .generators
            .iter()
            .enumerate()
            .filter_map(|(i, g)| g.chords.clone().map(|c| (c, i)))
            .collect()
    }

    fn comp_id(&self, c: usize) -> &str {
        &self.diagram.components[c].id
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleReport {
    /// `Phi(g)` for every minus-side generator whose image changed.
    pub changed: Vec<(String, String)>,
    pub generators_checked: usize,
}

/// Minus-side chord for each plus-side chord.
fn chord_map(minus: &Side, plus: &Side, spec: &MoveSpec, skip: &BTreeSet<usize>) -> Result<Vec<usize>, MoveError> {
    let mut map = Vec::with_capacity(plus.comp.chords.len());
    let mut used = BTreeSet::new();
    for ch in &plus.comp.chords {
        let target = spec.correspondence.get(&ch.id).cloned().unwrap_or_else(|| ch.id.clone());
        let k = minus.chord(&target)?;
        if skip.contains(&k) || !used.insert(k) {
            return Err(MoveError::Precondition(format!(
                "correspondence is not a bijection at `{}`",
                ch.id
            )));
        }
        let m: &Chord = &minus.comp.chords[k];
        if plus.comp_id(ch.start_comp) != minus.comp_id(m.start_comp)
            || plus.comp_id(ch.end_comp) != minus.comp_id(m.end_comp)
        {
            return Err(MoveError::Precondition(format!(
                "chords `{}` and `{}` have different endpoints",
                ch.id, m.id
            )));
        }
        map.push(k);
    }
    if used.len() + skip.len() != minus.comp.chords.len() {
        return Err(MoveError::Precondition(
            "correspondence does not cover every chord".into(),
        ));
    }
    Ok(map)
}

/// Plus-side generator -> minus-side generator.
fn generator_map(minus: &Side, plus: &Side, chords: &[usize]) -> Result<Vec<usize>, MoveError> {
    let index = minus.word_index();
    plus.dga()
        .generators
        .iter()
        .map(|g| {
            let word: Vec<usize> = g.chords.as_ref().map(|c| c.iter().map(|&k| chords[k]).collect()).unwrap_or_default();
            index
                .get(&word)
                .copied()
                .ok_or_else(|| MoveError::Precondition(format!("no counterpart for generator `{}`", g.symbol)))
        })
        .collect()
}

fn parse_corner(side: &Side, s: &str) -> Result<(usize, Sign), MoveError> {
    let (id, sign) = if let Some(id) = s.strip_suffix('+') {
        (id, Sign::Pos)
    } else if let Some(id) = s.strip_suffix('-') {
        (id, Sign::Neg)
    } else {
        return Err(MoveError::Precondition(format!("corner `{s}` lacks a sign")));
    };
    Ok((side.chord(id)?, sign))
}

/// `mu_u(w)` for every generator, as elements over minus-side generators.
fn mu_images(side: &Side, u: &DiskBoundaryWord) -> Result<Vec<Element>, MoveError> {
    let d = side.diagram;
    let comp_piece: Vec<usize> = d.components.iter().map(|c| c.piece).collect();
    let end_piece: Vec<usize> = side.comp.chords.iter().map(|c| c.end_piece).collect();
    let index = side.word_index();
    side.dga()
        .generators
        .iter()
        .map(|g| {
            let Some(word) = &g.chords else {
                return Ok(Element::zero());
            };
            let Some(r) = inscribe(u, word, &comp_piece, &end_piece) else {
                return Ok(Element::zero());
            };
            let letters = r
                .words
                .iter()
                .map(|w| {
                    index.get(w).copied().ok_or_else(|| {
                        MoveError::Precondition(format!("triangle produces a non-generator from `{}`", g.symbol))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Element::from_term(Term::new(r.coefficient, letters)))
        })
        .collect()
}

pub fn verify_triple_point(minus: Side, plus: Side, spec: &MoveSpec) -> Result<TripleReport, MoveError> {
    let want_plus = match spec.kind {
        MoveKind::TripleI => 1,
        MoveKind::TripleII => 2,
        MoveKind::Double => {
            return Err(MoveError::Precondition("spec describes a double point move".into()))
        }
    };
    let chords = chord_map(&minus, &plus, spec, &BTreeSet::new())?;
    let gmap = generator_map(&minus, &plus, &chords)?;
    if gmap.len() != minus.dga().len() {
        return Err(MoveError::Precondition("generator sets differ in size".into()));
    }
    let corners = spec
        .triangle
        .iter()
        .map(|s| parse_corner(&minus, s))
        .collect::<Result<Vec<_>, _>>()?;
    if corners.len() != 3 || corners.iter().filter(|c| c.1 == Sign::Pos).count() != want_plus {
        return Err(MoveError::Precondition(
            "triangle corners do not match the move type".into(),
        ));
    }
    let u = DiskBoundaryWord::abstract_word(&corners, &minus.comp.chords)
        .ok_or_else(|| MoveError::Precondition("triangle corners do not close up".into()))?;
    let dm = minus.dga();
    let mu = mu_images(&minus, &u)?;
    let steps: Vec<(usize, Element)> = mu
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(g, v)| (g, v.clone()))
        .collect();
    let mut phi = dm.identity_images();
    for (g, v) in &steps {
        phi[*g].add_assign(v);
    }
    // Phi is an involution.
    for g in 0..dm.len() {
        if dm.substitute(&phi[g], &phi) != Element::letter(g) {
            return Err(MoveError::ChainMap {
                stage: 0,
                generator: dm.generators[g].symbol.clone(),
            });
        }
    }
    let conj = dm
        .apply_tame(&steps)
        .map_err(|e| MoveError::Precondition(e.to_string()))?;
    let dp = plus.dga();
    let mut pulled = vec![Element::zero(); dm.len()];
    for (pg, &mg) in gmap.iter().enumerate() {
        pulled[mg] = dp.differential[pg].map_letters(|&h| gmap[h]);
    }
    for g in 0..dm.len() {
        if conj.differential[g] != pulled[g] {
            return Err(MoveError::ChainMap {
                stage: 1,
                generator: dm.generators[g].symbol.clone(),
            });
        }
    }
    Ok(TripleReport {
        changed: steps
            .iter()
            .map(|(g, _)| {
                (
                    dm.generators[*g].symbol.clone(),
                    crate::algebra::render_element(dm, &phi[*g]),
                )
            })
            .collect(),
        generators_checked: dm.len(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DoubleReport {
    /// Stabilized target algebra.
    pub target: FreeMfDGA,
    /// Minus-side generators in processing order with their actions.
    pub order: Vec<(String, f64)>,
    /// Final images `Phi(g)` indexed by minus-side generator.
    pub phi: Vec<Element>,
    /// Stage log, one line per generator.
    pub log: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Plain,
    A,
    B,
}

/// Chord actions on the minus side.
fn chord_actions(minus: &Side, spec: &MoveSpec, a: usize, b: usize) -> Vec<f64> {
    let d = minus.diagram;
    let eps = spec.epsilon.unwrap_or(0.1);
    let mut out: Vec<f64> = (0..d.crossings.len())
        .map(|k| {
            if let Some(&v) = spec.actions.get(&d.crossings[k].id) {
                return v;
            }
            [0usize, 2]
                .iter()
                .map(|&q| {
                    let f = d.map.quadrant(k, q).face;
                    if f == 0 {
                        0.0
                    } else {
                        spec.face_areas.get(&f).copied().unwrap_or(1.0)
                    }
                })
                .sum()
        })
        .collect();
    if !spec.actions.contains_key(&d.crossings[a].id) {
        out[a] = out[b] + eps;
    }
    out
}

/// Build the chain map from the algebra with the extra chords `a`, `b` to a
/// stabilization of the algebra without them.
pub fn double_point_phi(minus: Side, plus: Side, spec: &MoveSpec) -> Result<DoubleReport, MoveError> {
    if spec.kind != MoveKind::Double {
        return Err(MoveError::Precondition("spec describes a triple point move".into()));
    }
    let (Some(a_id), Some(b_id)) = (&spec.a, &spec.b) else {
        return Err(MoveError::Precondition("double point spec needs chords `a` and `b`".into()));
    };
    let a = minus.chord(a_id)?;
    let b = minus.chord(b_id)?;
    let (ca, cb) = (&minus.comp.chords[a], &minus.comp.chords[b]);
    if a == b || ca.start_comp != cb.start_comp || ca.end_comp != cb.end_comp {
        return Err(MoveError::Precondition(
            "`a` and `b` must be distinct chords with the same endpoints".into(),
        ));
    }
    let skip: BTreeSet<usize> = [a, b].into();
    let chords = chord_map(&minus, &plus, spec, &skip)?;
    let dm = minus.dga();
    let dp = plus.dga();
    // Plus generator for each plain minus generator.
    let plus_index = plus.word_index();
    let mut inverse_chord = vec![usize::MAX; minus.comp.chords.len()];
    for (pk, &mk) in chords.iter().enumerate() {
        inverse_chord[mk] = pk;
    }

    let mut kind = vec![Kind::Plain; dm.len()];
    let mut partner: BTreeMap<usize, usize> = BTreeMap::new();
    let windex = minus.word_index();
    for (g, gen) in dm.generators.iter().enumerate() {
        let Some(w) = &gen.chords else { continue };
        if let Some(i) = w.iter().position(|&k| k == a) {
            kind[g] = Kind::A;
            let mut bw = w.clone();
            bw[i] = b;
            let bg = *windex.get(&bw).ok_or_else(|| {
                MoveError::Precondition(format!("no b-word partner for `{}`", gen.symbol))
            })?;
            partner.insert(g, bg);
        } else if w.contains(&b) {
            kind[g] = Kind::B;
        }
    }
    if partner.is_empty() {
        return Err(MoveError::Precondition("no words contain `a`".into()));
    }

    // Stabilize the plus algebra once per (a-word, b-word) pair.
    let mut target = dp.clone();
    let mut pairs = Vec::new();
    let mut e_of: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (&ag, &bg) in &partner {
        let gen = &dm.generators[ag];
        if !dm.ring.eq(dm.generators[bg].degree, gen.degree - 1) {
            return Err(MoveError::Precondition(format!(
                "`{}` and its b-word differ in degree by other than one",
                gen.symbol
            )));
        }
        let (next, hi, lo) = target.stabilize(gen.level, gen.degree);
        target = next;
        pairs.push((hi, lo));
        e_of.insert(ag, (hi, lo));
        e_of.insert(bg, (hi, lo));
    }

    // Processing order by action.
    let actions = chord_actions(&minus, spec, a, b);
    let act: Vec<f64> = dm
        .generators
        .iter()
        .map(|g| g.chords.as_ref().map(|w| w.iter().map(|&k| actions[k]).sum()).unwrap_or(0.0))
        .collect();
    let rank = |g: usize| match kind[g] {
        Kind::Plain => 0,
        Kind::B => 1,
        Kind::A => 2,
    };
    let mut order: Vec<usize> = (0..dm.len()).collect();
    order.sort_by(|&x, &y| {
        act[x]
            .partial_cmp(&act[y])
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(rank(x).cmp(&rank(y)))
            .then(x.cmp(&y))
    });
    let mut position = vec![0; dm.len()];
    for (i, &g) in order.iter().enumerate() {
        position[g] = i;
    }
    for &g in &order {
        for t in dm.differential[g].terms() {
            if let Some(&h) = t.word.iter().find(|&&h| position[h] >= position[g]) {
                return Err(MoveError::Ordering(format!(
                    "`{}` appears in the differential of `{}` but does not have smaller action",
                    dm.generators[h].symbol, dm.generators[g].symbol
                )));
            }
        }
    }
    for (&ag, &bg) in &partner {
        for &g in &order[position[bg] + 1..position[ag]] {
            if kind[g] == Kind::Plain {
                return Err(MoveError::Ordering(format!(
                    "`{}` lies between `{}` and `{}`",
                    dm.generators[g].symbol, dm.generators[bg].symbol, dm.generators[ag].symbol
                )));
            }
        }
    }
    // d(a-word) must split off its b-word with coefficient 1.
    for (&ag, &bg) in &partner {
        if !dm.differential[ag].contains(&Term::new(Default::default(), vec![bg])) {
            return Err(MoveError::Splitting(dm.generators[ag].symbol.clone()));
        }
    }

    let plain_image = |g: usize| -> Result<Element, MoveError> {
        let w = dm.generators[g].chords.as_ref().expect("diagram generator");
        let pw: Vec<usize> = w.iter().map(|&k| inverse_chord[k]).collect();
        let pg = plus_index.get(&pw).copied().ok_or_else(|| {
            MoveError::Precondition(format!("no counterpart for `{}`", dm.generators[g].symbol))
        })?;
        if !dm.ring.eq(dp.generators[pg].degree, dm.generators[g].degree) {
            return Err(MoveError::Precondition(format!(
                "`{}` changes degree across the move",
                dm.generators[g].symbol
            )));
        }
        Ok(Element::letter(pg))
    };

    // Phi_0: identity on plain words, e_hi on a-words, e_lo + correction on b-words.
    let mut phi0: Vec<Option<Element>> = vec![None; dm.len()];
    let mut phi: Vec<Option<Element>> = vec![None; dm.len()];
    let mut log = Vec::new();
    let sub = |images: &[Option<Element>], x: &Element, g: usize| -> Result<Element, MoveError> {
        let mut full = Vec::with_capacity(images.len());
        for (h, im) in images.iter().enumerate() {
            match im {
                Some(e) => full.push(e.clone()),
                None if x.terms().any(|t| t.word.contains(&h)) => {
                    return Err(MoveError::Ordering(format!(
                        "`{}` is needed before it is defined (at `{}`)",
                        dm.generators[h].symbol, dm.generators[g].symbol
                    )))
                }
                None => full.push(Element::zero()),
            }
        }
        Ok(target.substitute(x, &full))
    };
    let b_partner: BTreeMap<usize, usize> = partner.iter().map(|(&ag, &bg)| (bg, ag)).collect();
    for (stage, &g) in order.iter().enumerate() {
        let (hi, lo) = e_of.get(&g).copied().unwrap_or((usize::MAX, usize::MAX));
        let (p0, p) = match kind[g] {
            Kind::A => (Element::letter(hi), Element::letter(hi)),
            Kind::B => {
                let ag = b_partner[&g];
                let rest = dm.differential[ag].add(&Element::letter(g));
                (
                    Element::letter(lo).add(&sub(&phi0, &rest, g)?),
                    Element::letter(lo).add(&sub(&phi, &rest, g)?),
                )
            }
            Kind::Plain => {
                let w = plain_image(g)?;
                let y = target.d(&w).add(&sub(&phi, &dm.differential[g], g)?);
                let h = target
                    .stab_homotopy(&y, &pairs)
                    .map_err(|e| MoveError::Precondition(e.to_string()))?;
                (w.clone(), w.add(&h))
            }
        };
        phi0[g] = Some(p0);
        phi[g] = Some(p);
        // The stage check: d Phi(g) = Phi d(g).
        let lhs = target.d(phi[g].as_ref().expect("just set"));
        let rhs = sub(&phi, &dm.differential[g], g)?;
        if lhs != rhs {
            return Err(MoveError::ChainMap {
                stage,
                generator: dm.generators[g].symbol.clone(),
            });
        }
        log.push(format!(
            "stage {stage}: {} -> {}",
            dm.generators[g].symbol,
            crate::algebra::render_element(&target, phi[g].as_ref().expect("just set"))
        ));
    }
    // pi Phi_0 d_minus = pi d_plus Phi_0 on every generator.
    for &g in &order {
        let x = phi0[g].as_ref().expect("all defined");
        let left = target.stab_projection(&sub(&phi0, &dm.differential[g], g)?, &pairs);
        let right = target.stab_projection(&target.d(x), &pairs);
        if left != right {
            return Err(MoveError::ChainMap {
                stage: 0,
                generator: dm.generators[g].symbol.clone(),
            });
        }
    }
    let phi: Vec<Element> = phi.into_iter().map(|x| x.expect("all defined")).collect();
    Ok(DoubleReport {
        order: order
            .iter()
            .map(|&g| (dm.generators[g].symbol.clone(), act[g]))
            .collect(),
        target,
        phi,
        log,
    })
}

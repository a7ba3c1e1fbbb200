//! Invariants of free mfDGAs: augmentations, torsion, augmentation trees,
//! bilinearized (co)homology and word-length spectral sequences.
//!
//! Every augmentation sends each `T_i` to 1.

mod bilinear;
mod spectral;

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{Element, FreeMfDGA, Term};
use crate::error::AlgebraError;
use crate::gf2::{BitVec, Matrix};
use crate::laurent::Monomial;

pub use bilinear::{bilinearized_complex, cochain_complex, fundamental_class_zero, LinearComplex};
pub use spectral::{
    poincare_polynomial, spectral_poincare, spectral_sequence, Direction, Poly3, SpectralPages,
};

/// An augmentation of `F^level`, given by the generators it sends to 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Augmentation {
    pub level: usize,
    pub ones: BTreeSet<usize>,
}

impl Augmentation {
    pub fn trivial(level: usize) -> Self {
        Augmentation {
            level,
            ones: BTreeSet::new(),
        }
    }

    pub fn value(&self, g: usize) -> bool {
        self.ones.contains(&g)
    }

    /// Value on a word (T variables go to 1).
    pub fn eval_word(&self, word: &[usize]) -> bool {
        word.iter().all(|g| self.ones.contains(g))
    }

    pub fn eval(&self, x: &Element) -> bool {
        x.terms().filter(|t| self.eval_word(&t.word)).count() % 2 == 1
    }

    /// Restriction to a lower filtration level.
    pub fn restrict(&self, dga: &FreeMfDGA, level: usize) -> Augmentation {
        Augmentation {
            level,
            ones: self
                .ones
                .iter()
                .copied()
                .filter(|&g| dga.generators[g].level <= level)
                .collect(),
        }
    }

    /// 0/1 string over the given generators, e.g. `101`.
    pub fn bits(&self, over: &[usize]) -> String {
        over.iter().map(|g| if self.value(*g) { '1' } else { '0' }).collect()
    }
}

/// Generators of `F^level`.
pub fn level_generators(dga: &FreeMfDGA, level: usize) -> Vec<usize> {
    (0..dga.len()).filter(|&g| dga.generators[g].level <= level).collect()
}

/// Degree-0 generators of `F^level`, in generator order.
pub fn degree_zero(dga: &FreeMfDGA, level: usize) -> Vec<usize> {
    level_generators(dga, level)
        .into_iter()
        .filter(|&g| dga.ring.norm(dga.generators[g].degree) == 0)
        .collect()
}

/// Whether `eps` kills the differential of every generator of its level.
pub fn is_augmentation(dga: &FreeMfDGA, eps: &Augmentation) -> bool {
    level_generators(dga, eps.level)
        .into_iter()
        .all(|g| !eps.eval(&dga.differential[g]))
}

/// All augmentations of `F^level`, by exhaustive search with early checks.
pub fn augmentations(dga: &FreeMfDGA, level: usize) -> Vec<Augmentation> {
    let vars = degree_zero(dga, level);
    let pos: BTreeMap<usize, usize> = vars.iter().enumerate().map(|(i, &g)| (g, i)).collect();
    // Constraints: differentials restricted to terms made of degree-0 letters.
    let mut checks: Vec<Vec<Vec<Vec<usize>>>> = vec![Vec::new(); vars.len() + 1];
    for g in level_generators(dga, level) {
        let terms: Vec<Vec<usize>> = dga.differential[g]
            .terms()
            .filter_map(|t| t.word.iter().map(|h| pos.get(h).copied()).collect::<Option<Vec<_>>>())
            .collect();
        if terms.is_empty() {
            continue;
        }
        let depth = terms.iter().flatten().map(|&i| i + 1).max().unwrap_or(0);
        checks[depth].push(terms);
    }
    let mut out = Vec::new();
    let mut assign = vec![false; vars.len()];
    search(&checks, &mut assign, 0, &mut |a| {
        out.push(Augmentation {
            level,
            ones: a.iter().enumerate().filter(|x| *x.1).map(|(i, _)| vars[i]).collect(),
        })
    });
    out.sort_by(|a, b| {
        let ka: Vec<bool> = vars.iter().map(|g| a.value(*g)).collect();
        let kb: Vec<bool> = vars.iter().map(|g| b.value(*g)).collect();
        ka.cmp(&kb)
    });
    out
}

fn search(
    checks: &[Vec<Vec<Vec<usize>>>],
    assign: &mut Vec<bool>,
    k: usize,
    emit: &mut dyn FnMut(&[bool]),
) {
    let ok = checks[k].iter().all(|terms| {
        terms
            .iter()
            .filter(|t| t.iter().all(|&i| assign[i]))
            .count()
            % 2
            == 0
    });
    if !ok {
        return;
    }
    if k == assign.len() {
        emit(assign);
        return;
    }
    for v in [false, true] {
        assign[k] = v;
        search(checks, assign, k + 1, emit);
    }
    assign[k] = false;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tau {
    Finite(usize),
    Infinite,
}

impl std::fmt::Display for Tau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tau::Finite(l) => write!(f, "{l}"),
            Tau::Infinite => write!(f, "inf"),
        }
    }
}

/// Algebraic torsion: the greatest level admitting an augmentation.
pub fn tau_aug(dga: &FreeMfDGA) -> Tau {
    for level in 1..=dga.pieces {
        if augmentations(dga, level).is_empty() {
            return Tau::Finite(level - 1);
        }
    }
    Tau::Infinite
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Vanishing {
    /// `d x = 1`.
    Vanishes(Element),
    Nonzero(Augmentation),
    Unknown,
}

/// Decide whether homology of `F^level` vanishes, searching for `x` with
/// `d x = 1` among degree-1 combinations of monomials of length `<= bound`.
pub fn tau_vanishing(dga: &FreeMfDGA, level: usize, bound: usize) -> Vanishing {
    if let Some(eps) = augmentations(dga, level).into_iter().next() {
        return Vanishing::Nonzero(eps);
    }
    let gens = level_generators(dga, level);
    // Coefficients worth trying: inverses of constant-term coefficients, and 1.
    let mut coefs: BTreeSet<Monomial> = BTreeSet::new();
    coefs.insert(Term::<usize>::new(Monomial::default(), Vec::new()).coef);
    for &g in &gens {
        for t in dga.differential[g].terms() {
            if t.word.is_empty() {
                coefs.insert(Term::<usize>::new(t.coef.inverse(), Vec::new()).coef);
            }
        }
    }
    let mut words: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &frontier {
            for &g in &gens {
                let mut v = w.clone();
                v.push(g);
                if let Some(n) = dga.normalize_word(&v) {
                    if words.insert(n.clone()) {
                        next.push(n);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut candidates = Vec::new();
    for c in &coefs {
        for w in &words {
            let t = Term::new(c.clone(), w.clone());
            if dga.ring.eq(dga.term_degree(&t), 1) {
                candidates.push(t);
            }
        }
    }
    let one = Element::one();
    let images: Vec<Element> = candidates
        .iter()
        .map(|t| dga.d(&Element::from_term(t.clone())))
        .collect();
    if let Some(i) = images.iter().position(|x| *x == one) {
        return Vanishing::Vanishes(Element::from_term(candidates[i].clone()));
    }
    // General solve over the terms that occur.
    let mut rows: BTreeMap<Term, usize> = BTreeMap::new();
    rows.insert(one.terms().next().cloned().expect("unit term"), 0);
    for x in &images {
        for t in x.terms() {
            let n = rows.len();
            rows.entry(t.clone()).or_insert(n);
        }
    }
    let mut m = Matrix::zeros(rows.len(), candidates.len());
    for (c, x) in images.iter().enumerate() {
        for t in x.terms() {
            m.flip(rows[t], c);
        }
    }
    let target = BitVec::unit(rows.len(), 0);
    match m.solve(&target) {
        Some(sol) => Vanishing::Vanishes(sol.ones().map(|c| candidates[c].clone()).collect()),
        None => Vanishing::Unknown,
    }
}

/// Algebraic torsion together with the first level certified to vanish and
/// the levels where neither certificate was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionReport {
    pub tau_aug: Tau,
    pub vanishing_level: Option<usize>,
    pub witness: Option<Element>,
    pub unknown_levels: Vec<usize>,
}

pub fn torsion_report(dga: &FreeMfDGA, bound: usize) -> TorsionReport {
    let mut report = TorsionReport {
        tau_aug: tau_aug(dga),
        vanishing_level: None,
        witness: None,
        unknown_levels: Vec::new(),
    };
    for level in 1..=dga.pieces {
        match tau_vanishing(dga, level, bound) {
            Vanishing::Vanishes(x) => {
                report.vanishing_level = Some(level);
                report.witness = Some(x);
                break;
            }
            Vanishing::Nonzero(_) => {}
            Vanishing::Unknown => report.unknown_levels.push(level),
        }
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeVertex {
    pub level: usize,
    /// Representative augmentation of the homotopy class.
    pub representative: Augmentation,
    /// All augmentations in the class.
    pub members: Vec<Augmentation>,
    pub parent: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugTree {
    pub vertices: Vec<TreeVertex>,
}

impl AugTree {
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.vertices
            .iter()
            .enumerate()
            .filter_map(|(i, v)| v.parent.map(|p| (i, p)))
            .collect()
    }

    pub fn at_level(&self, level: usize) -> Vec<usize> {
        (0..self.vertices.len())
            .filter(|&i| self.vertices[i].level == level)
            .collect()
    }
}

/// Homotopy classes of augmentations per level, linked by restriction.
pub fn augmentation_tree(dga: &FreeMfDGA) -> Result<AugTree, AlgebraError> {
    let mut vertices = vec![TreeVertex {
        level: 0,
        representative: Augmentation::trivial(0),
        members: vec![Augmentation::trivial(0)],
        parent: None,
    }];
    let mut prev: Vec<usize> = vec![0];
    for level in 1..=dga.pieces {
        let augs = augmentations(dga, level);
        let mut classes: Vec<Vec<Augmentation>> = Vec::new();
        for a in augs {
            let mut placed = false;
            for class in classes.iter_mut() {
                if fundamental_class_zero(dga, &class[0], &a)? {
                    class.push(a.clone());
                    placed = true;
                    break;
                }
            }
            if !placed {
                classes.push(vec![a]);
            }
        }
        let mut here = Vec::new();
        for class in classes {
            let rep = class[0].clone();
            let down = rep.restrict(dga, level - 1);
            let mut parent = None;
            for &p in &prev {
                let v: &TreeVertex = &vertices[p];
                if level == 1 || fundamental_class_zero(dga, &v.representative, &down)? {
                    parent = Some(p);
                    break;
                }
            }
            vertices.push(TreeVertex {
                level,
                representative: rep,
                members: class,
                parent,
            });
            here.push(vertices.len() - 1);
        }
        if here.is_empty() {
            break;
        }
        prev = here;
    }
    Ok(AugTree { vertices })
}

/// Combine augmentations of the pure single-chord parts of each piece into an
/// augmentation of `F^1`. Mixed chords go to 0.
pub fn combine_ce_augmentations(
    dga: &FreeMfDGA,
    per_piece: &[BTreeSet<usize>],
) -> Result<Augmentation, AlgebraError> {
    let mut ones = BTreeSet::new();
    for part in per_piece {
        for &g in part {
            let gen = dga
                .generators
                .get(g)
                .ok_or_else(|| AlgebraError::UnknownGenerator(format!("#{g}")))?;
            if gen.level != 1 {
                return Err(AlgebraError::Unsupported(format!(
                    "`{}` is not a single-chord generator",
                    gen.symbol
                )));
            }
            ones.insert(g);
        }
    }
    let eps = Augmentation { level: 1, ones };
    if !is_augmentation(dga, &eps) {
        return Err(AlgebraError::Invariant {
            generator: "augmentation".into(),
            message: "combined map does not annihilate the differential".into(),
        });
    }
    Ok(eps)
}

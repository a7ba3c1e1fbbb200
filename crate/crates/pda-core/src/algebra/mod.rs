//! Free max-filtered differential graded algebras over GF(2).
//!
//! Letters are generator indices. Coefficients are Laurent monomials in the
//! homology variables, expanded so that every term carries one monomial.
//! In `com` mode words are sorted sets of generators (squares vanish); `cyc`
//! mode additionally identifies a word with its rotations.

mod element;
mod expr;
mod presentation;

use std::collections::BTreeMap;

use crate::diagram::{chords, Chord, GradingRing, LagrangianDiagram};
use crate::disks::{is_admissible, DiskSet};
use crate::error::AlgebraError;
use crate::inscription::inscribe;
use crate::laurent::Monomial;
use crate::words::{word_symbol, CyclicWord};

pub use element::{Element, Term};
pub use expr::{parse_element, render_element};
pub use presentation::{parse_presentation, to_presentation, Presentation, PresentationError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Full,
    Com,
    Cyc,
}

impl Mode {
    pub fn label(&self) -> &'static str {
        match self {
            Mode::Full => "full",
            Mode::Com => "com",
            Mode::Cyc => "cyc",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(Mode::Full),
            "com" => Ok(Mode::Com),
            "cyc" => Ok(Mode::Cyc),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub symbol: String,
    pub degree: i64,
    pub level: usize,
    /// Chord word when the generator comes from a diagram.
    pub chords: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeMfDGA {
    pub generators: Vec<Generator>,
    /// `differential[g]` is the differential of generator `g`.
    pub differential: Vec<Element>,
    pub ring: GradingRing,
    pub t_names: Vec<String>,
    pub t_degrees: Vec<i64>,
    pub mode: Mode,
    /// Largest filtration level considered (the number of pieces for diagrams).
    pub pieces: usize,
    pub warnings: Vec<String>,
    pub possibly_incomplete: bool,
}

/// A generator whose differential fails a structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub generator: String,
    pub message: String,
}

impl FreeMfDGA {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.symbol == symbol)
    }

    pub fn gen(&self, symbol: &str) -> Result<Element, AlgebraError> {
        self.index_of(symbol)
            .map(Element::letter)
            .ok_or_else(|| AlgebraError::UnknownGenerator(symbol.to_string()))
    }

    pub fn symbols(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.symbol.clone()).collect()
    }

    pub fn term_degree(&self, t: &Term) -> i64 {
        let d = t.coef.degree(&self.t_degrees) + t.word.iter().map(|&g| self.generators[g].degree).sum::<i64>();
        self.ring.norm(d)
    }

    /// Reduce a word according to the mode; `None` means the word is zero.
    pub fn normalize_word(&self, word: &[usize]) -> Option<Vec<usize>> {
        match self.mode {
            Mode::Full => Some(word.to_vec()),
            Mode::Com | Mode::Cyc => {
                let mut w = word.to_vec();
                w.sort_unstable();
                if w.windows(2).any(|x| x[0] == x[1]) {
                    None
                } else {
                    Some(w)
                }
            }
        }
    }

    pub fn normalize(&self, x: &Element) -> Element {
        if self.mode == Mode::Full {
            return x.clone();
        }
        x.filter_map_terms(|t| self.normalize_word(&t.word).map(|w| Term::new(t.coef.clone(), w)))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        self.normalize(&a.mul(b))
    }

    /// Leibniz extension of the differential.
    pub fn d(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for t in x.terms() {
            for i in 0..t.word.len() {
                let left = Element::from_term(Term::new(t.coef.clone(), t.word[..i].to_vec()));
                let right = Element::from_term(Term::new(Monomial::default(), t.word[i + 1..].to_vec()));
                out.add_assign(&left.mul(&self.differential[t.word[i]]).mul(&right));
            }
        }
        self.normalize(&out)
    }

    /// Apply an algebra map given by generator images.
    pub fn substitute(&self, x: &Element, images: &[Element]) -> Element {
        let mut out = Element::zero();
        for t in x.terms() {
            let mut acc = Element::from_term(Term::new(t.coef.clone(), Vec::new()));
            for &g in &t.word {
                acc = self.mul(&acc, &images[g]);
                if acc.is_zero() {
                    break;
                }
            }
            out.add_assign(&acc);
        }
        out
    }

    pub fn identity_images(&self) -> Vec<Element> {
        (0..self.len()).map(Element::letter).collect()
    }

    /// Generators whose differential squares to a nonzero element.
    pub fn check_square_zero(&self) -> Vec<Violation> {
        (0..self.len())
            .filter_map(|g| {
                let dd = self.d(&self.differential[g]);
                (!dd.is_zero()).then(|| Violation {
                    generator: self.generators[g].symbol.clone(),
                    message: format!("has nonzero square: {}", render_element(self, &dd)),
                })
            })
            .collect()
    }

    /// Degree drop and filtration checks on every generator.
    pub fn check_structure(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (g, gen) in self.generators.iter().enumerate() {
            for t in self.differential[g].terms() {
                if !self.ring.eq(self.term_degree(t), gen.degree - 1) {
                    out.push(Violation {
                        generator: gen.symbol.clone(),
                        message: format!(
                            "does not lower degree by one (term of degree {})",
                            self.term_degree(t)
                        ),
                    });
                    break;
                }
                if t.word.iter().any(|&h| self.generators[h].level > gen.level) {
                    out.push(Violation {
                        generator: gen.symbol.clone(),
                        message: "raises the filtration level".into(),
                    });
                    break;
                }
            }
        }
        out
    }

    /// Run every check. Failures are errors unless the disk enumeration was
    /// possibly incomplete, in which case they become warnings.
    pub fn validate(&mut self) -> Result<(), AlgebraError> {
        let mut v = self.check_structure();
        v.extend(self.check_square_zero());
        if v.is_empty() {
            return Ok(());
        }
        if self.possibly_incomplete {
            for x in v {
                self.warnings
                    .push(format!("differential of `{}` {}", x.generator, x.message));
            }
            return Ok(());
        }
        let first = v.swap_remove(0);
        Err(AlgebraError::Invariant {
            generator: first.generator,
            message: first.message,
        })
    }

    /// The sub-algebra generated in filtration levels `<= level`.
    pub fn truncate(&self, level: usize) -> FreeMfDGA {
        let keep: Vec<usize> = (0..self.len()).filter(|&g| self.generators[g].level <= level).collect();
        let mut remap = vec![usize::MAX; self.len()];
        for (i, &g) in keep.iter().enumerate() {
            remap[g] = i;
        }
        FreeMfDGA {
            generators: keep.iter().map(|&g| self.generators[g].clone()).collect(),
            differential: keep
                .iter()
                .map(|&g| self.differential[g].map_letters(|&h| remap[h]))
                .collect(),
            pieces: level.min(self.pieces),
            ..self.clone()
        }
    }

    /// Quotient to `com` or `cyc` mode.
    pub fn quotient(&self, mode: Mode) -> Result<FreeMfDGA, AlgebraError> {
        if mode < self.mode {
            return Err(AlgebraError::Unsupported(format!(
                "cannot lift a {} algebra to {}",
                self.mode.label(),
                mode.label()
            )));
        }
        let mut com = FreeMfDGA {
            mode: Mode::Com,
            ..self.clone()
        };
        com.differential = self.differential.iter().map(|x| com.normalize(x)).collect();
        if mode != Mode::Cyc || self.mode == Mode::Cyc {
            com.mode = mode;
            return Ok(com);
        }
        // Rotation classes, represented by their first member.
        let by_chords: BTreeMap<&Vec<usize>, usize> = self
            .generators
            .iter()
            .enumerate()
            .filter_map(|(i, g)| g.chords.as_ref().map(|c| (c, i)))
            .collect();
        let mut rep = (0..self.len()).collect::<Vec<_>>();
        for (i, g) in self.generators.iter().enumerate() {
            if let Some(c) = &g.chords {
                for r in 1..c.len() {
                    let mut rot = c.clone();
                    rot.rotate_left(r);
                    if let Some(&j) = by_chords.get(&rot) {
                        rep[i] = rep[i].min(j);
                    }
                }
            }
        }
        let reps: Vec<usize> = (0..self.len()).filter(|&i| rep[i] == i).collect();
        let mut new_index = vec![usize::MAX; self.len()];
        for (k, &r) in reps.iter().enumerate() {
            new_index[r] = k;
        }
        let project = |x: &Element| -> Element {
            let mut cyc = com.clone();
            cyc.mode = Mode::Cyc;
            cyc.normalize(&x.map_letters(|&h| new_index[rep[h]]))
        };
        let mut out = FreeMfDGA {
            generators: reps.iter().map(|&r| self.generators[r].clone()).collect(),
            differential: reps.iter().map(|&r| project(&com.differential[r])).collect(),
            mode: Mode::Cyc,
            ..self.clone()
        };
        for i in 0..self.len() {
            if rep[i] != i {
                let here = project(&com.differential[i]);
                if here != out.differential[new_index[rep[i]]] {
                    out.warnings.push(format!(
                        "rotations `{}` and `{}` have different differentials",
                        self.generators[i].symbol, self.generators[rep[i]].symbol
                    ));
                }
            }
        }
        Ok(out)
    }

    /// Add a canceling pair `e_hi`, `e_lo` at filtration level `level` with
    /// `|e_hi| = degree` and `d e_hi = e_lo`. Returns the new algebra and the
    /// indices of `e_hi` and `e_lo`.
    pub fn stabilize(&self, level: usize, degree: i64) -> (FreeMfDGA, usize, usize) {
        let mut out = self.clone();
        let k = out
            .generators
            .iter()
            .filter(|g| g.symbol.starts_with('e') && g.symbol.ends_with("hi"))
            .count()
            + 1;
        let hi = out.len();
        out.generators.push(Generator {
            symbol: format!("e{k}hi"),
            degree: self.ring.norm(degree),
            level,
            chords: None,
        });
        out.generators.push(Generator {
            symbol: format!("e{k}lo"),
            degree: self.ring.norm(degree - 1),
            level,
            chords: None,
        });
        out.differential.push(Element::letter(hi + 1));
        out.differential.push(Element::zero());
        out.pieces = out.pieces.max(level);
        (out, hi, hi + 1)
    }

    /// Projection killing every term that contains a stabilizing letter.
    /// `pairs` lists `(e_hi, e_lo)` index pairs.
    pub fn stab_projection(&self, x: &Element, pairs: &[(usize, usize)]) -> Element {
        let stab = |g: usize| pairs.iter().any(|&(hi, lo)| g == hi || g == lo);
        x.filter_map_terms(|t| (!t.word.iter().any(|&g| stab(g))).then(|| t.clone()))
    }

    /// Chain homotopy `h` with `x - pi(x) = d h(x) + h d(x)`: at the first
    /// stabilizing letter (all earlier letters original), `e_lo` becomes its
    /// `e_hi` and `e_hi` gives zero.
    pub fn stab_homotopy(&self, x: &Element, pairs: &[(usize, usize)]) -> Result<Element, AlgebraError> {
        if self.mode != Mode::Full {
            return Err(AlgebraError::Unsupported(
                "the stabilization homotopy is defined on the full algebra".into(),
            ));
        }
        Ok(x.filter_map_terms(|t| {
            let (i, hi) = t.word.iter().enumerate().find_map(|(i, &g)| {
                pairs.iter().find_map(|&(hi, lo)| {
                    if g == lo {
                        Some((i, Some(hi)))
                    } else if g == hi {
                        Some((i, None))
                    } else {
                        None
                    }
                })
            })?;
            let mut w = t.word.clone();
            w[i] = hi?;
            Some(Term::new(t.coef.clone(), w))
        }))
    }

    /// Transport the differential along a composite of elementary tame
    /// substitutions `g -> g + v`, applied in order.
    pub fn apply_tame(&self, steps: &[(usize, Element)]) -> Result<FreeMfDGA, AlgebraError> {
        let mut cur = self.clone();
        for (g, v) in steps {
            let g = *g;
            if g >= cur.len() {
                return Err(AlgebraError::Tame(format!("no generator with index {g}")));
            }
            let gen = &cur.generators[g];
            let v = cur.normalize(v);
            for t in v.terms() {
                if t.word.contains(&g) {
                    return Err(AlgebraError::Tame(format!(
                        "image of `{}` contains the generator itself",
                        gen.symbol
                    )));
                }
                if !cur.ring.eq(cur.term_degree(t), gen.degree) {
                    return Err(AlgebraError::Tame(format!(
                        "image of `{}` is not homogeneous of its degree",
                        gen.symbol
                    )));
                }
                if t.word.iter().any(|&h| cur.generators[h].level > gen.level) {
                    return Err(AlgebraError::Tame(format!(
                        "image of `{}` raises the filtration level",
                        gen.symbol
                    )));
                }
            }
            // phi is an involution in characteristic 2: d' = phi d phi.
            let mut phi = cur.identity_images();
            phi[g] = phi[g].add(&v);
            let new_diff: Vec<Element> = (0..cur.len())
                .map(|h| {
                    let dh = cur.d(&phi[h]);
                    cur.substitute(&dh, &phi)
                })
                .collect();
            cur.differential = new_diff;
        }
        Ok(cur)
    }
}

/// Assemble the algebra of a diagram from its disks and generators.
pub fn assemble_pda(
    d: &LagrangianDiagram,
    disks: &DiskSet,
    words: &[CyclicWord],
    ring: GradingRing,
) -> Result<FreeMfDGA, AlgebraError> {
    let ch: Vec<Chord> = chords(d, ring)?;
    let comp_piece: Vec<usize> = d.components.iter().map(|c| c.piece).collect();
    let end_piece: Vec<usize> = ch.iter().map(|c| c.end_piece).collect();
    let index: BTreeMap<&Vec<usize>, usize> = words.iter().enumerate().map(|(i, w)| (&w.chords, i)).collect();
    let nvars = d.nvars();
    let t_degrees = d.t_degrees();
    let mut warnings = Vec::new();

    let mut rigid = Vec::new();
    for u in &disks.disks {
        if !is_admissible(u, d, &ch) {
            continue;
        }
        let coef = Monomial(u.h1.0.iter().take(nvars).copied().collect());
        let mut index_sum = coef.degree(&t_degrees);
        for c in &u.corners {
            match c.sign {
                crate::diagram::Sign::Pos => index_sum -= ch[c.chord].grading,
                crate::diagram::Sign::Neg => index_sum += ch[c.chord].grading,
            }
        }
        let plus = u.positive_count() as i64;
        if !ring.eq(-index_sum, 2 - plus) {
            warnings.push(format!(
                "disk {} skipped: not rigid with the given gradings",
                u.word_string(d)
            ));
            continue;
        }
        rigid.push((u, coef));
    }

    let mut differential = Vec::with_capacity(words.len());
    for w in words {
        let mut dw = Element::zero();
        for (u, coef) in &rigid {
            let Some(r) = inscribe(u, &w.chords, &comp_piece, &end_piece) else {
                continue;
            };
            let mut letters = Vec::with_capacity(r.words.len());
            for out in &r.words {
                match index.get(out) {
                    Some(&g) => letters.push(g),
                    None => {
                        return Err(AlgebraError::Invariant {
                            generator: w.symbol(&ch),
                            message: format!("produced a non-admissible word {}", word_symbol(out, &ch)),
                        })
                    }
                }
            }
            dw.toggle(Term::new(coef.clone(), letters));
        }
        differential.push(dw);
    }
    let mut dga = FreeMfDGA {
        generators: words
            .iter()
            .map(|w| Generator {
                symbol: w.symbol(&ch),
                degree: w.grading,
                level: w.level(),
                chords: Some(w.chords.clone()),
            })
            .collect(),
        differential,
        ring,
        t_names: d.t_names(),
        t_degrees,
        mode: Mode::Full,
        pieces: d.pieces,
        warnings,
        possibly_incomplete: disks.possibly_incomplete,
    };
    if dga.possibly_incomplete {
        dga.warnings
            .push("disk enumeration hit the face multiplicity limit; results may be incomplete".into());
    }
    dga.validate()?;
    Ok(dga)
}

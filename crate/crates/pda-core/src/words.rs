//! Admissible cyclic words of chords: the generators of the algebra.
//!
//! A word `(k_1 .. k_l)` is admissible when consecutive chords compose
//! (the end piece of `k_i` is the start piece of `k_{i+1}`, indices mod `l`)
//! and the ending pieces are pairwise distinct. The marker sits at the first
//! position, so rotations are different words.

use std::collections::BTreeSet;

use crate::diagram::{Chord, GradingRing, LagrangianDiagram};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicWord {
    /// Chord indices, marker at position 0.
    pub chords: Vec<usize>,
    pub grading: i64,
}

impl CyclicWord {
    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    /// Filtration level, which is the word length.
    pub fn level(&self) -> usize {
        self.chords.len()
    }

    /// Ending pieces `j_1 .. j_l`.
    pub fn piece_trace(&self, chords: &[Chord]) -> Vec<usize> {
        self.chords.iter().map(|&k| chords[k].end_piece).collect()
    }

    /// Text form such as `(k1 k2)`.
    pub fn symbol(&self, chords: &[Chord]) -> String {
        word_symbol(&self.chords, chords)
    }
}

pub fn word_symbol(word: &[usize], chords: &[Chord]) -> String {
    let ids: Vec<&str> = word.iter().map(|&k| chords[k].id.as_str()).collect();
    format!("({})", ids.join(" "))
}

/// Whether a chord sequence is an admissible cyclic word.
pub fn is_admissible_word(word: &[usize], chords: &[Chord]) -> bool {
    let n = word.len();
    if n == 0 {
        return false;
    }
    let mut ends = BTreeSet::new();
    for i in 0..n {
        let a = &chords[word[i]];
        let b = &chords[word[(i + 1) % n]];
        if a.end_piece != b.start_piece || !ends.insert(a.end_piece) {
            return false;
        }
    }
    true
}

/// `|w| = l - 1 + sum g(k_i) + sum c(end k_i -> start k_{i+1})`, reduced in `ring`.
pub fn word_grading(word: &[usize], chords: &[Chord], d: &LagrangianDiagram, ring: GradingRing) -> i64 {
    let n = word.len();
    let mut g = n as i64 - 1;
    for i in 0..n {
        let a = &chords[word[i]];
        let b = &chords[word[(i + 1) % n]];
        g += a.grading + d.connecting_offset(a.end_comp, b.start_comp);
    }
    ring.norm(g)
}

/// Every admissible word, ordered by length and then chord tuple.
pub fn generate_words(chords: &[Chord], d: &LagrangianDiagram, ring: GradingRing) -> Vec<CyclicWord> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let mut ends = BTreeSet::new();
    for first in 0..chords.len() {
        stack.push(first);
        ends.insert(chords[first].end_piece);
        extend(chords, &mut stack, &mut ends, &mut out);
        ends.remove(&chords[first].end_piece);
        stack.pop();
    }
    let mut words: Vec<CyclicWord> = out
        .into_iter()
        .map(|w| CyclicWord {
            grading: word_grading(&w, chords, d, ring),
            chords: w,
        })
        .collect();
    words.sort_by(|a, b| (a.len(), &a.chords).cmp(&(b.len(), &b.chords)));
    words
}

fn extend(chords: &[Chord], stack: &mut Vec<usize>, ends: &mut BTreeSet<usize>, out: &mut Vec<Vec<usize>>) {
    let last = &chords[*stack.last().expect("non-empty")];
    let first = &chords[stack[0]];
    if last.end_piece == first.start_piece {
        out.push(stack.clone());
    }
    for (k, c) in chords.iter().enumerate() {
        if c.start_piece != last.end_piece || ends.contains(&c.end_piece) {
            continue;
        }
        stack.push(k);
        ends.insert(c.end_piece);
        extend(chords, stack, ends, out);
        ends.remove(&c.end_piece);
        stack.pop();
    }
}

/// Words whose chords all have both endpoints on pieces in `pieces`.
/// Returns `None` for an empty piece set.
pub fn restrict_to_pieces(words: &[CyclicWord], chords: &[Chord], pieces: &BTreeSet<usize>) -> Option<Vec<CyclicWord>> {
    if pieces.is_empty() {
        return None;
    }
    Some(
        words
            .iter()
            .filter(|w| {
                w.chords.iter().all(|&k| {
                    pieces.contains(&chords[k].start_piece) && pieces.contains(&chords[k].end_piece)
                })
            })
            .cloned()
            .collect(),
    )
}

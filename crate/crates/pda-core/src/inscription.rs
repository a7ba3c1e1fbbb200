//! Inscription of disk boundary words into cyclic words.
//!
//! The planar diagram of a word `w = (k_0 .. k_{l-1})` is a `2l`-gon whose
//! sides alternate between chords `k_p` and boundary arcs `s_p` (the arc
//! following `k_p`, lying on the end piece of `k_p`). A disk inscribes when
//! its positive corners are chords of `w` in the same cyclic order and each of
//! its boundary arcs lands on the arc of `w` with the same piece. Chords of
//! `w` not used by the disk get trivial strips. The complement of the disk
//! and the strips in the polygon is a union of smaller polygons: the output
//! words.

use std::collections::BTreeMap;

use crate::algebra::{Element, Term};
use crate::diagram::Sign;
use crate::disks::DiskBoundaryWord;
use crate::laurent::Monomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InscriptionResult {
    /// Output words in order; each is a list of chord indices.
    pub words: Vec<Vec<usize>>,
    pub coefficient: Monomial,
}

/// A negative chord in the subdivided polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    /// Trivial strip over `k_j`.
    Strip(usize),
    /// Negative corner of the disk, by corner position.
    Corner(usize),
}

/// Inscribe `u` into the word `w`. `comp_piece[c]` is the piece of component
/// `c`, `end_piece[k]` the end piece of chord `k`.
pub fn inscribe(
    u: &DiskBoundaryWord,
    w: &[usize],
    comp_piece: &[usize],
    end_piece: &[usize],
) -> Option<InscriptionResult> {
    let l = w.len();
    let n = u.corners.len();
    if l == 0 || n == 0 {
        return None;
    }
    let position: BTreeMap<usize, usize> = w.iter().enumerate().map(|(p, &k)| (k, p)).collect();
    let plus: Vec<usize> = (0..n).filter(|&i| u.corners[i].sign == Sign::Pos).collect();
    if plus.is_empty() {
        return None;
    }
    let mut plus_pos = Vec::with_capacity(plus.len());
    for &i in &plus {
        plus_pos.push(*position.get(&u.corners[i].chord)?);
    }
    // Positive corners must visit w in cyclic order, wrapping exactly once.
    let m = plus.len();
    let mut total = 0;
    for a in 0..m {
        let d = (plus_pos[(a + 1) % m] + l - plus_pos[a]) % l;
        if d == 0 && m > 1 {
            return None;
        }
        total += if d == 0 { l } else { d };
    }
    if total != l {
        return None;
    }

    let arc_piece: BTreeMap<usize, usize> = (0..l).map(|p| (end_piece[w[p]], p)).collect();
    let mut stripped = vec![true; l];
    for &p in &plus_pos {
        stripped[p] = false;
    }
    // Faces as slot lists, and the u-endpoints lying on each arc s_j, in order.
    let mut faces: Vec<Vec<(Slot, usize)>> = Vec::new();
    let mut on_arc: Vec<Vec<usize>> = vec![Vec::new(); l];
    for a in 0..m {
        let p = plus_pos[a];
        let span = {
            let d = (plus_pos[(a + 1) % m] + l - p) % l;
            if d == 0 {
                l
            } else {
                d
            }
        };
        let start = plus[a];
        let stop = plus[(a + 1) % m];
        // Disk arcs from the corner `start` to the corner `stop`.
        let mut js = Vec::new();
        let mut negs = Vec::new();
        let mut i = start;
        loop {
            let piece = comp_piece[u.arcs[i].component];
            let j = *arc_piece.get(&piece)?;
            let offset = (j + l - p) % l;
            if offset >= span {
                return None;
            }
            js.push(offset);
            i = (i + 1) % n;
            if i == stop {
                break;
            }
            negs.push(i);
        }
        if js.windows(2).any(|x| x[0] > x[1]) || js[0] != 0 || *js.last()? != span - 1 {
            return None;
        }
        for (t, &c) in negs.iter().enumerate() {
            let mut face = vec![(Slot::Corner(c), u.corners[c].chord)];
            for off in (js[t] + 1)..=js[t + 1] {
                let j = (p + off) % l;
                face.push((Slot::Strip(j), w[j]));
            }
            faces.push(face);
        }
        // Endpoints along each arc: Q of the corner before, P of the corner after.
        for (t, &off) in js.iter().enumerate() {
            let j = (p + off) % l;
            if t >= 1 {
                on_arc[j].push(negs[t - 1]);
            }
            if t < negs.len() {
                on_arc[j].push(negs[t]);
            }
        }
    }

    // Index negative chords by first encounter walking the boundary from k_0.
    let mut index: BTreeMap<Slot, usize> = BTreeMap::new();
    let visit = |s: Slot, index: &mut BTreeMap<Slot, usize>| {
        let next = index.len();
        index.entry(s).or_insert(next);
    };
    for j in 0..l {
        if stripped[j] {
            visit(Slot::Strip(j), &mut index);
        }
        for &c in &on_arc[j] {
            visit(Slot::Corner(c), &mut index);
        }
        let nj = (j + 1) % l;
        if stripped[nj] {
            visit(Slot::Strip(nj), &mut index);
        }
    }
    let mut ordered: Vec<(usize, Vec<usize>)> = faces
        .into_iter()
        .map(|face| {
            let lead = (0..face.len())
                .min_by_key(|&i| index[&face[i].0])
                .unwrap_or(0);
            let mut chords: Vec<usize> = face.iter().map(|x| x.1).collect();
            chords.rotate_left(lead);
            (index[&face[lead].0], chords)
        })
        .collect();
    ordered.sort();
    Some(InscriptionResult {
        words: ordered.into_iter().map(|x| x.1).collect(),
        coefficient: u.h1.clone(),
    })
}

/// `mu_u(w)` as an algebra element whose letters are output words.
pub fn mu(
    u: &DiskBoundaryWord,
    w: &[usize],
    comp_piece: &[usize],
    end_piece: &[usize],
) -> Element<Vec<usize>> {
    match inscribe(u, w, comp_piece, end_piece) {
        Some(r) => Element::from_term(Term {
            coef: r.coefficient,
            word: r.words,
        }),
        None => Element::zero(),
    }
}

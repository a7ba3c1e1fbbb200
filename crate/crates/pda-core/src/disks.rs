//! Enumeration of combinatorial holomorphic disks.
//!
//! A disk is an immersed polygon whose boundary runs along the diagram and
//! whose corners are convex corners at crossings. We record a disk by its
//! boundary path: a cyclic sequence of half-edges traversed with the disk on
//! the left. At each crossing the path either passes straight through or
//! turns left into a corner quadrant.
//!
//! Two independent generators produce candidate paths: a depth-first walk
//! from every positive corner, and an exhaustive search over face
//! multiplicity vectors. Both feed the same validator, which recomputes the
//! winding numbers, checks the local immersion condition at every crossing
//! and requires the covering surface to have Euler characteristic 1.
//!
//! Boundaries are assumed to use each edge of the diagram at most once.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::diagram::{Chord, LagrangianDiagram, PlanarMap, Sign};
use crate::error::DiskError;
use crate::laurent::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_face_multiplicity: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_face_multiplicity: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Corner {
    pub chord: usize,
    pub sign: Sign,
    pub quadrant: u8,
}

/// Boundary arc between two consecutive corners.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub component: usize,
    /// Signed count of homology-marker crossings along the arc.
    pub bullet: i32,
    /// Signed count of basepoint crossings along the arc.
    pub star: i32,
}

/// Face id -> multiplicity, as a dense vector indexed by face id.
pub type FaceMultiplicity = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiskBoundaryWord {
    /// Corners in counterclockwise order, rotated to the least corner sequence.
    pub corners: Vec<Corner>,
    /// `arcs[i]` runs from `corners[i]` to `corners[i + 1]`.
    pub arcs: Vec<Arc>,
    /// Exponent of `T_i` for every component `i`.
    pub h1: Monomial,
    pub multiplicity: FaceMultiplicity,
    /// Boundary half-edges, rotated to start at the least one.
    pub path: Vec<usize>,
}

impl DiskBoundaryWord {
    pub fn positive_count(&self) -> usize {
        self.corners.iter().filter(|c| c.sign == Sign::Pos).count()
    }

    pub fn negative_count(&self) -> usize {
        self.corners.len() - self.positive_count()
    }

    /// Build a disk from corners alone, with arcs read off chord endpoints.
    /// Used for abstract disks such as the triangles of triple point moves.
    pub fn abstract_word(corners: &[(usize, Sign)], chords: &[Chord]) -> Option<DiskBoundaryWord> {
        if corners.is_empty() || !corners.iter().any(|c| c.1 == Sign::Pos) {
            return None;
        }
        let n = corners.len();
        let mut arcs = Vec::with_capacity(n);
        for i in 0..n {
            let (a, sa) = corners[i];
            let (b, sb) = corners[(i + 1) % n];
            let leaving = match sa {
                Sign::Pos => chords[a].end_comp,
                Sign::Neg => chords[a].start_comp,
            };
            let arriving = match sb {
                Sign::Pos => chords[b].start_comp,
                Sign::Neg => chords[b].end_comp,
            };
            if leaving != arriving {
                return None;
            }
            arcs.push(Arc {
                component: leaving,
                bullet: 0,
                star: 0,
            });
        }
        Some(DiskBoundaryWord {
            corners: corners
                .iter()
                .map(|&(chord, sign)| Corner {
                    chord,
                    sign,
                    quadrant: 0,
                })
                .collect(),
            arcs,
            h1: Monomial::default(),
            multiplicity: Vec::new(),
            path: Vec::new(),
        })
    }

    /// Canonical text form, e.g. `k3+ k1- k2-`.
    pub fn word_string(&self, d: &LagrangianDiagram) -> String {
        self.corners
            .iter()
            .map(|c| format!("{}{}", d.crossings[c.chord].id, c.sign.symbol()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiskSet {
    pub disks: Vec<DiskBoundaryWord>,
    /// Set when some boundary path was discarded only because it exceeded the
    /// face multiplicity limit.
    pub possibly_incomplete: bool,
}

enum Verdict {
    Disk(DiskBoundaryWord),
    OverLimit,
    Invalid,
}

/// Validate a closed boundary path and, if it bounds an immersed disk with at
/// least one positive corner, return its decorated boundary word.
fn validate(d: &LagrangianDiagram, path: &[usize], limit: u32) -> Verdict {
    let map = &d.map;
    let ne = map.nedges();
    let nf = map.faces.len();
    let mut t = vec![0i64; 2 * ne];
    for &h in path {
        t[h] += 1;
    }
    for e in 0..ne {
        if t[2 * e] + t[2 * e + 1] > 1 {
            return Verdict::Invalid;
        }
    }

    // Winding numbers by a sweep over the dual graph.
    let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); nf];
    for e in 0..ne {
        let l = map.face_of[2 * e];
        let r = map.face_of[2 * e + 1];
        let jump = t[2 * e] - t[2 * e + 1];
        adj[r].push((l, jump));
        adj[l].push((r, -jump));
    }
    let mut n = vec![i64::MIN; nf];
    n[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        for &(g, jump) in &adj[f] {
            let want = n[f] + jump;
            if n[g] == i64::MIN {
                n[g] = want;
                queue.push_back(g);
            } else if n[g] != want {
                return Verdict::Invalid;
            }
        }
    }
    if n.iter().any(|&x| x < 0 || x == i64::MIN) {
        return Verdict::Invalid;
    }

    // Local pieces at each crossing.
    let nv = map.rot.len();
    let mut cover = vec![[0i64; 4]; nv];
    let mut pieces = vec![0i64; nv];
    let len = path.len();
    let mut corners_at = Vec::new();
    for k in 0..len {
        let h = path[k];
        let nxt = path[(k + 1) % len];
        let (w, i) = map.pos[h ^ 1];
        pieces[w] += 1;
        if nxt == map.rot[w][(i + 3) % 4] {
            let q = (i + 3) % 4;
            cover[w][q] += 1;
            corners_at.push(k);
        } else if nxt == map.rot[w][(i + 2) % 4] {
            cover[w][(i + 2) % 4] += 1;
            cover[w][(i + 3) % 4] += 1;
        } else {
            return Verdict::Invalid;
        }
    }
    let mut interior = 0i64;
    for v in 0..nv {
        let m: Vec<i64> = (0..4).map(|q| n[map.face_of[map.rot[v][q]]]).collect();
        let r0 = m[0] - cover[v][0];
        if r0 < 0 || (1..4).any(|q| m[q] - cover[v][q] != r0) {
            return Verdict::Invalid;
        }
        interior += r0;
    }
    for e in 0..ne {
        if n[map.face_of[2 * e]] - t[2 * e] < 0 {
            return Verdict::Invalid;
        }
    }
    let vs: i64 = interior + pieces.iter().sum::<i64>();
    let es: i64 = (0..ne).map(|e| n[map.face_of[2 * e]] + t[2 * e + 1]).sum();
    let fs: i64 = n.iter().skip(1).sum();
    if vs - es + fs != 1 {
        return Verdict::Invalid;
    }
    if corners_at.is_empty() {
        return Verdict::Invalid;
    }

    // Corners and arcs.
    let mut corners = Vec::new();
    for &k in &corners_at {
        let h = path[k];
        let (w, i) = map.pos[h ^ 1];
        let q = map.quadrant(w, (i + 3) % 4);
        corners.push(Corner {
            chord: w,
            sign: q.sign,
            quadrant: q.position,
        });
    }
    if !corners.iter().any(|c| c.sign == Sign::Pos) {
        return Verdict::Invalid;
    }
    if n.iter().any(|&x| x > limit as i64) {
        return Verdict::OverLimit;
    }
    let ncomp = d.components.len();
    let mut h1 = vec![0i32; ncomp];
    let mut arcs = Vec::new();
    let nc = corners_at.len();
    for c in 0..nc {
        let from = corners_at[c];
        let to = corners_at[(c + 1) % nc];
        let mut k = (from + 1) % len;
        let comp = map.comp_of(path[k]);
        let mut arc = Arc {
            component: comp,
            bullet: 0,
            star: 0,
        };
        loop {
            let h = path[k];
            let e = h / 2;
            let sign = if h % 2 == 0 { 1 } else { -1 };
            let c = &d.components[map.edge_comp[e]];
            if map.edge_visit[e] == c.bullet {
                arc.bullet += sign;
                h1[map.edge_comp[e]] += sign;
            }
            if map.edge_visit[e] == c.star {
                arc.star += sign;
            }
            if k == to {
                break;
            }
            k = (k + 1) % len;
        }
        arcs.push(arc);
    }
    // arcs[c] currently runs from corner c to corner c+1.
    let best = least_rotation(&corners);
    corners.rotate_left(best);
    arcs.rotate_left(best);
    let start = (0..len).min_by_key(|&k| path[k]).unwrap_or(0);
    let mut canon_path = path.to_vec();
    canon_path.rotate_left(start);
    Verdict::Disk(DiskBoundaryWord {
        corners,
        arcs,
        h1: Monomial(h1),
        multiplicity: n.iter().map(|&x| x as u32).collect(),
        path: canon_path,
    })
}

fn least_rotation<T: Ord>(xs: &[T]) -> usize {
    let n = xs.len();
    (0..n)
        .min_by(|&a, &b| {
            for k in 0..n {
                let o = xs[(a + k) % n].cmp(&xs[(b + k) % n]);
                if o != std::cmp::Ordering::Equal {
                    return o;
                }
            }
            std::cmp::Ordering::Equal
        })
        .unwrap_or(0)
}

fn finish(found: BTreeMap<Vec<usize>, DiskBoundaryWord>, over: bool) -> DiskSet {
    let mut disks: Vec<DiskBoundaryWord> = found.into_values().collect();
    disks.sort();
    DiskSet {
        disks,
        possibly_incomplete: over,
    }
}

/// Depth-first boundary walk from every positive corner.
pub fn enumerate_disks(d: &LagrangianDiagram, limits: Limits) -> Result<DiskSet, DiskError> {
    if limits.max_face_multiplicity == 0 {
        return Err(DiskError::ZeroLimit);
    }
    let map = &d.map;
    let mut found = BTreeMap::new();
    let mut over = false;
    let mut used = vec![false; map.nedges()];
    let mut path = Vec::new();
    for v in 0..map.rot.len() {
        for q in [0usize, 2] {
            if map.quadrant(v, q).face == 0 {
                continue;
            }
            let seed = (v, q);
            let h0 = map.rot[v][q];
            walk(
                d,
                seed,
                h0,
                &mut used,
                &mut path,
                limits.max_face_multiplicity,
                &mut found,
                &mut over,
            );
        }
    }
    Ok(finish(found, over))
}

#[allow(clippy::too_many_arguments)]
fn walk(
    d: &LagrangianDiagram,
    seed: (usize, usize),
    h: usize,
    used: &mut [bool],
    path: &mut Vec<usize>,
    limit: u32,
    found: &mut BTreeMap<Vec<usize>, DiskBoundaryWord>,
    over: &mut bool,
) {
    let map = &d.map;
    if used[h / 2] || map.face_of[h] == 0 {
        return;
    }
    used[h / 2] = true;
    path.push(h);
    let (w, i) = map.pos[h ^ 1];
    // Turn into a corner.
    let c = (i + 3) % 4;
    let quad = map.quadrant(w, c);
    if (w, c) == seed {
        match validate(d, path, limit) {
            Verdict::Disk(u) => {
                found.entry(u.path.clone()).or_insert(u);
            }
            Verdict::OverLimit => *over = true,
            Verdict::Invalid => {}
        }
    } else if quad.face != 0 && !(quad.sign == Sign::Pos && (w, c) < seed) {
        // Positive corners smaller than the seed are found from their own seed.
        walk(d, seed, map.rot[w][c], used, path, limit, found, over);
    }
    // Pass straight through.
    let s = (i + 2) % 4;
    if map.quadrant(w, s).face != 0 && map.quadrant(w, c).face != 0 {
        walk(d, seed, map.rot[w][s], used, path, limit, found, over);
    }
    path.pop();
    used[h / 2] = false;
}

/// Reference enumeration over face multiplicity vectors.
pub fn oracle_enumerate(d: &LagrangianDiagram, limits: Limits) -> Result<DiskSet, DiskError> {
    if limits.max_face_multiplicity == 0 {
        return Err(DiskError::ZeroLimit);
    }
    let map = &d.map;
    let nf = map.faces.len();
    let ne = map.nedges();
    let limit = limits.max_face_multiplicity as i64;

    // Face adjacency and a breadth-first order from the unbounded face.
    let mut nbrs: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nf];
    for e in 0..ne {
        let l = map.face_of[2 * e];
        let r = map.face_of[2 * e + 1];
        nbrs[l].insert(r);
        nbrs[r].insert(l);
    }
    let mut order = Vec::new();
    let mut seen = vec![false; nf];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(f) = queue.pop_front() {
        for &g in &nbrs[f] {
            if !seen[g] {
                seen[g] = true;
                order.push(g);
                queue.push_back(g);
            }
        }
    }
    // Faces of other parts are all reachable through the unbounded face.
    let mut n = vec![-1i64; nf];
    n[0] = 0;
    let mut found = BTreeMap::new();
    let mut over = false;
    assign(d, &order, 0, &mut n, &nbrs, limit, &mut found, &mut over);
    Ok(finish(found, over))
}

#[allow(clippy::too_many_arguments)]
fn assign(
    d: &LagrangianDiagram,
    order: &[usize],
    k: usize,
    n: &mut Vec<i64>,
    nbrs: &[BTreeSet<usize>],
    limit: i64,
    found: &mut BTreeMap<Vec<usize>, DiskBoundaryWord>,
    over: &mut bool,
) {
    if k == order.len() {
        if n.iter().all(|&x| x == 0) {
            return;
        }
        for path in paths_from_multiplicity(&d.map, n) {
            match validate(d, &path, limit as u32) {
                Verdict::Disk(u) => {
                    found.entry(u.path.clone()).or_insert(u);
                }
                Verdict::OverLimit => *over = true,
                Verdict::Invalid => {}
            }
        }
        return;
    }
    let f = order[k];
    for val in 0..=limit {
        let ok = nbrs[f]
            .iter()
            .all(|&g| n[g] < 0 || (n[g] - val).abs() <= 1);
        if ok {
            n[f] = val;
            assign(d, order, k + 1, n, nbrs, limit, found, over);
        }
    }
    n[f] = -1;
}

/// Reconstruct every closed boundary path compatible with a multiplicity
/// vector: edge traversals are forced by multiplicity jumps, and at each
/// crossing incoming traversals are matched to outgoing ones by a corner or a
/// straight pass so that the quadrant coverage is uniform.
fn paths_from_multiplicity(map: &PlanarMap, n: &[i64]) -> Vec<Vec<usize>> {
    let ne = map.nedges();
    let mut t = vec![false; 2 * ne];
    for e in 0..ne {
        let jump = n[map.face_of[2 * e]] - n[map.face_of[2 * e + 1]];
        match jump {
            1 => t[2 * e] = true,
            -1 => t[2 * e + 1] = true,
            0 => {}
            _ => return Vec::new(),
        }
    }
    let nv = map.rot.len();
    // Per crossing, the candidate successor maps (incoming half-edge -> outgoing).
    let mut options: Vec<Vec<Vec<(usize, usize)>>> = Vec::with_capacity(nv);
    for v in 0..nv {
        let ins: Vec<usize> = (0..4).filter(|&i| t[map.rot[v][i] ^ 1]).collect();
        let outs: Vec<usize> = (0..4).filter(|&j| t[map.rot[v][j]]).collect();
        if ins.len() != outs.len() {
            return Vec::new();
        }
        let m: Vec<i64> = (0..4).map(|q| n[map.face_of[map.rot[v][q]]]).collect();
        let mut here = Vec::new();
        let mut matching = Vec::new();
        match_darts(&ins, &outs, &mut vec![false; outs.len()], &mut matching, &mut |pairs| {
            let mut cover = [0i64; 4];
            for &(i, j) in pairs {
                if j == (i + 3) % 4 {
                    cover[j] += 1;
                } else {
                    cover[(i + 2) % 4] += 1;
                    cover[(i + 3) % 4] += 1;
                }
            }
            let r0 = m[0] - cover[0];
            if r0 >= 0 && (1..4).all(|q| m[q] - cover[q] == r0) {
                here.push(
                    pairs
                        .iter()
                        .map(|&(i, j)| (map.rot[v][i] ^ 1, map.rot[v][j]))
                        .collect(),
                );
            }
        });
        if here.is_empty() {
            return Vec::new();
        }
        options.push(here);
    }
    let mut out = Vec::new();
    let mut succ = vec![usize::MAX; 2 * ne];
    combine(map, &t, &options, 0, &mut succ, &mut out);
    out
}

fn match_darts(
    ins: &[usize],
    outs: &[usize],
    taken: &mut Vec<bool>,
    acc: &mut Vec<(usize, usize)>,
    emit: &mut dyn FnMut(&[(usize, usize)]),
) {
    let k = acc.len();
    if k == ins.len() {
        emit(acc);
        return;
    }
    let i = ins[k];
    for (idx, &j) in outs.iter().enumerate() {
        if taken[idx] || (j != (i + 3) % 4 && j != (i + 2) % 4) {
            continue;
        }
        taken[idx] = true;
        acc.push((i, j));
        match_darts(ins, outs, taken, acc, emit);
        acc.pop();
        taken[idx] = false;
    }
}

fn combine(
    map: &PlanarMap,
    t: &[bool],
    options: &[Vec<Vec<(usize, usize)>>],
    v: usize,
    succ: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if v == options.len() {
        let Some(start) = (0..t.len()).find(|&h| t[h]) else {
            return;
        };
        let total = t.iter().filter(|&&x| x).count();
        let mut path = vec![start];
        let mut h = succ[start];
        while h != start {
            if path.len() > total || h == usize::MAX {
                return;
            }
            path.push(h);
            h = succ[h];
        }
        if path.len() == total {
            out.push(path);
        }
        return;
    }
    for choice in &options[v] {
        for &(a, b) in choice {
            succ[a] = b;
        }
        combine(map, t, options, v + 1, succ, out);
    }
}

/// Splitting-arc admissibility of a boundary word.
pub fn is_admissible(u: &DiskBoundaryWord, d: &LagrangianDiagram, chords: &[Chord]) -> bool {
    let n = u.corners.len();
    let piece = |arc: usize| d.components[u.arcs[arc].component].piece;
    let side_ok = |from: usize, to: usize| {
        // corners from+1 ..= to (cyclic)
        let mut k = (from + 1) % n;
        loop {
            let c = &u.corners[k];
            if c.sign == Sign::Pos || !chords[c.chord].is_piece_pure() {
                return false;
            }
            if k == to {
                return true;
            }
            k = (k + 1) % n;
        }
    };
    for i in 0..n {
        for j in (i + 1)..n {
            if piece(i) == piece(j) && !side_ok(i, j) && !side_ok(j, i) {
                return false;
            }
        }
    }
    true
}

//! The 4-valent planar map behind a diagram.
//!
//! Edges run between consecutive visits of a component. Half-edge `2e` leaves
//! the tail of edge `e` along the orientation, `2e + 1` leaves its head
//! against it. At each crossing the four outgoing half-edges are stored in
//! counterclockwise order, starting with the outgoing over strand:
//!
//! - positive crossing: over-out, under-out, over-in, under-in
//! - negative crossing: over-out, under-in, over-in, under-out
//!
//! Quadrant `q` is the wedge swept counterclockwise from dart `q` to dart
//! `q + 1`. With the ordering above quadrants 0 and 2 run from an over dart
//! to an under dart, so they carry Reeb sign `+`.

use super::{Component, Crossing, OuterFaceRef, Sign, Strand};
use crate::error::ParseError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Quadrant {
    pub crossing: usize,
    pub position: u8,
    pub sign: Sign,
    pub face: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Boundary cycles of half-edges, each with the face on its left. The
    /// unbounded face has one cycle per connected part of the diagram.
    pub cycles: Vec<Vec<usize>>,
    pub corners: Vec<Quadrant>,
    pub unbounded: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarMap {
    pub edge_comp: Vec<usize>,
    pub edge_visit: Vec<usize>,
    /// First edge id of each component.
    pub comp_edge_start: Vec<usize>,
    /// Outgoing half-edges at each crossing, counterclockwise.
    pub rot: Vec<[usize; 4]>,
    /// (crossing, slot) of each half-edge's tail.
    pub pos: Vec<(usize, usize)>,
    pub face_of: Vec<usize>,
    pub faces: Vec<Face>,
    pub parts: usize,
}

impl PlanarMap {
    pub fn nedges(&self) -> usize {
        self.edge_comp.len()
    }

    pub fn edge_id(&self, comp: usize, visit: usize) -> usize {
        self.comp_edge_start[comp] + visit
    }

    /// Crossing at which half-edge `h` starts.
    pub fn tail(&self, h: usize) -> usize {
        self.pos[h].0
    }

    pub fn head(&self, h: usize) -> usize {
        self.pos[h ^ 1].0
    }

    pub fn comp_of(&self, h: usize) -> usize {
        self.edge_comp[h / 2]
    }

    /// Next half-edge around the face on the left of `h`.
    pub fn face_next(&self, h: usize) -> usize {
        let (v, i) = self.pos[h ^ 1];
        self.rot[v][(i + 3) % 4]
    }

    pub fn quadrant(&self, v: usize, q: usize) -> Quadrant {
        Quadrant {
            crossing: v,
            position: q as u8,
            sign: if q % 2 == 0 { Sign::Pos } else { Sign::Neg },
            face: self.face_of[self.rot[v][q]],
        }
    }

    pub fn is_unbounded(&self, face: usize) -> bool {
        face == 0
    }

    pub fn build(
        components: &[Component],
        crossings: &[Crossing],
        outer_refs: &[OuterFaceRef],
    ) -> Result<PlanarMap, ParseError> {
        let mut edge_comp = Vec::new();
        let mut edge_visit = Vec::new();
        let mut comp_edge_start = Vec::new();
        for (ci, c) in components.iter().enumerate() {
            comp_edge_start.push(edge_comp.len());
            for k in 0..c.visits.len() {
                edge_comp.push(ci);
                edge_visit.push(k);
            }
        }
        let nv = crossings.len();
        let ne = edge_comp.len();
        let eid = |c: usize, k: usize| comp_edge_start[c] + k;

        let mut over_out = vec![0; nv];
        let mut over_in = vec![0; nv];
        let mut under_out = vec![0; nv];
        let mut under_in = vec![0; nv];
        for (ci, c) in components.iter().enumerate() {
            let n = c.visits.len();
            for (k, v) in c.visits.iter().enumerate() {
                let out = 2 * eid(ci, k);
                let inn = 2 * eid(ci, (k + n - 1) % n) + 1;
                match v.strand {
                    Strand::Over => {
                        over_out[v.crossing] = out;
                        over_in[v.crossing] = inn;
                    }
                    Strand::Under => {
                        under_out[v.crossing] = out;
                        under_in[v.crossing] = inn;
                    }
                }
            }
        }
        let mut rot = Vec::with_capacity(nv);
        let mut pos = vec![(usize::MAX, 0); 2 * ne];
        for x in 0..nv {
            let r = if crossings[x].sign > 0 {
                [over_out[x], under_out[x], over_in[x], under_in[x]]
            } else {
                [over_out[x], under_in[x], over_in[x], under_out[x]]
            };
            for (i, &h) in r.iter().enumerate() {
                pos[h] = (x, i);
            }
            rot.push(r);
        }

        // Connected parts via union-find on crossings.
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in 0..ne {
            let a = find(&mut parent, pos[2 * e].0);
            let b = find(&mut parent, pos[2 * e + 1].0);
            parent[a] = b;
        }
        let mut part_of_vertex = vec![usize::MAX; nv];
        let mut roots = Vec::new();
        for x in 0..nv {
            let r = find(&mut parent, x);
            let idx = match roots.iter().position(|&q| q == r) {
                Some(i) => i,
                None => {
                    roots.push(r);
                    roots.len() - 1
                }
            };
            part_of_vertex[x] = idx;
        }
        let parts = roots.len();

        // Face orbits.
        let next = |h: usize| {
            let (v, i) = pos[h ^ 1];
            rot[v][(i + 3) % 4]
        };
        let mut orbit_of = vec![usize::MAX; 2 * ne];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..2 * ne {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let mut cyc = Vec::new();
            let mut h = start;
            loop {
                orbit_of[h] = orbits.len();
                cyc.push(h);
                h = next(h);
                if h == start {
                    break;
                }
            }
            orbits.push(cyc);
        }
        let corner_count = |o: &Vec<usize>| o.len();

        // Euler check and outer face choice for each part.
        let mut outer_orbit = vec![usize::MAX; parts];
        for p in 0..parts {
            let v = part_of_vertex.iter().filter(|&&q| q == p).count();
            let e = (0..ne).filter(|&e| part_of_vertex[pos[2 * e].0] == p).count();
            let part_orbits: Vec<usize> = (0..orbits.len())
                .filter(|&o| part_of_vertex[pos[orbits[o][0]].0] == p)
                .collect();
            let f = part_orbits.len();
            if v as i64 - e as i64 + f as i64 != 2 {
                return Err(ParseError::Planarity(format!(
                    "connected part {} has V - E + F = {} - {} + {} != 2",
                    p + 1,
                    v,
                    e,
                    f
                )));
            }
            let mut chosen = None;
            for r in outer_refs {
                let h = 2 * eid(r.component, r.edge) + usize::from(!r.left);
                if part_of_vertex[pos[h].0] == p {
                    if chosen.is_some() {
                        return Err(ParseError::semantic(format!(
                            "more than one outer face given for connected part {}",
                            p + 1
                        )));
                    }
                    chosen = Some(orbit_of[h]);
                }
            }
            let chosen = chosen.unwrap_or_else(|| {
                // Default: the face with the most corners, earliest on ties.
                *part_orbits
                    .iter()
                    .max_by(|&&a, &&b| {
                        corner_count(&orbits[a])
                            .cmp(&corner_count(&orbits[b]))
                            .then(b.cmp(&a))
                    })
                    .expect("a part has faces")
            });
            outer_orbit[p] = chosen;
        }

        // Number faces: unbounded first, then bounded orbits by least half-edge
        // (orbits are already discovered in that order).
        let mut face_id_of_orbit = vec![0usize; orbits.len()];
        let mut faces = vec![Face {
            id: 0,
            cycles: Vec::new(),
            corners: Vec::new(),
            unbounded: true,
        }];
        for (o, cyc) in orbits.iter().enumerate() {
            if outer_orbit.contains(&o) {
                face_id_of_orbit[o] = 0;
                faces[0].cycles.push(cyc.clone());
            } else {
                face_id_of_orbit[o] = faces.len();
                faces.push(Face {
                    id: faces.len(),
                    cycles: vec![cyc.clone()],
                    corners: Vec::new(),
                    unbounded: false,
                });
            }
        }
        let face_of: Vec<usize> = (0..2 * ne).map(|h| face_id_of_orbit[orbit_of[h]]).collect();
        let mut map = PlanarMap {
            edge_comp,
            edge_visit,
            comp_edge_start,
            rot,
            pos,
            face_of,
            faces,
            parts,
        };
        for f in 0..map.faces.len() {
            let mut corners = Vec::new();
            for cyc in &map.faces[f].cycles {
                for &h in cyc {
                    let (v, i) = map.pos[h ^ 1];
                    corners.push(map.quadrant(v, (i + 3) % 4));
                }
            }
            map.faces[f].corners = corners;
        }
        Ok(map)
    }
}

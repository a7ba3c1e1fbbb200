//! JSON document format for diagrams.
//!
//! ```json
//! {
//!   "schema_version": 1,
//!   "components": [{ "id": "L1", "rot": 0, "visits": ["k1:o", "k1:u"] }],
//!   "crossings": [{ "id": "k1", "sign": -1, "grading": 1 }],
//!   "markers": { "L1": { "star": 0, "bullet": 1 } },
//!   "partition": { "L1": 1 },
//!   "options": { "grading_ring": "z", "coefficients": "laurent" }
//! }
//! ```
//!
//! A visit `"k1:o"` means the component passes over crossing `k1`; `":u"` is
//! under. Marker positions are visit indices: a marker at `p` sits on the edge
//! from visit `p` to visit `p + 1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::planar::PlanarMap;
use super::{
    Coefficients, Component, Crossing, DiagramOptions, LagrangianDiagram, OuterFaceRef,
    RingChoice, Strand, Visit,
};
use crate::error::ParseError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawDiagram {
    #[serde(default = "default_schema")]
    pub schema_version: u32,
    pub components: Vec<RawComponent>,
    pub crossings: Vec<RawCrossing>,
    pub markers: BTreeMap<String, RawMarkers>,
    pub partition: BTreeMap<String, usize>,
    #[serde(default)]
    pub options: RawOptions,
}

fn default_schema() -> u32 {
    SCHEMA_VERSION
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawComponent {
    pub id: String,
    #[serde(default)]
    pub rot: i64,
    pub visits: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawCrossing {
    pub id: String,
    pub sign: i8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading: Option<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMarkers {
    pub star: usize,
    pub bullet: usize,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grading_ring: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub connecting_offsets: Vec<RawOffset>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outer_face: Vec<RawOuterFace>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawOffset {
    pub from: String,
    pub to: String,
    pub offset: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawOuterFace {
    pub component: String,
    pub edge: usize,
    pub side: String,
}

fn parse_visit(s: &str, crossing_ids: &BTreeMap<&str, usize>) -> Result<Visit, ParseError> {
    let (name, strand) = s
        .rsplit_once(':')
        .ok_or_else(|| ParseError::semantic(format!("visit `{s}` is not of the form `id:o` or `id:u`")))?;
    let strand = match strand {
        "o" | "over" => Strand::Over,
        "u" | "under" => Strand::Under,
        other => {
            return Err(ParseError::semantic(format!(
                "visit `{s}`: unknown strand `{other}`"
            )))
        }
    };
    let crossing = *crossing_ids
        .get(name)
        .ok_or_else(|| ParseError::semantic(format!("visit `{s}` names an unknown crossing")))?;
    Ok(Visit { crossing, strand })
}

impl RawDiagram {
    pub fn into_diagram(self) -> Result<LagrangianDiagram, ParseError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(ParseError::semantic(format!(
                "unsupported schema_version {}",
                self.schema_version
            )));
        }
        let mut crossing_ids = BTreeMap::new();
        let mut crossings = Vec::new();
        for (k, c) in self.crossings.iter().enumerate() {
            if crossing_ids.insert(c.id.as_str(), k).is_some() {
                return Err(ParseError::semantic(format!("duplicate crossing id `{}`", c.id)));
            }
            if c.sign != 1 && c.sign != -1 {
                return Err(ParseError::semantic(format!(
                    "crossing `{}` has sign {}, expected 1 or -1",
                    c.id, c.sign
                )));
            }
            if let Some(g) = c.grading {
                let sigma = i64::from(c.sign < 0);
                if (g - sigma).rem_euclid(2) != 0 {
                    return Err(ParseError::semantic(format!(
                        "crossing `{}`: grading {g} has the wrong parity for a {} crossing",
                        c.id,
                        if c.sign < 0 { "negative" } else { "positive" }
                    )));
                }
            }
            crossings.push(Crossing {
                id: c.id.clone(),
                sign: c.sign,
                grading: c.grading,
            });
        }

        let mut comp_ids = BTreeMap::new();
        for (i, c) in self.components.iter().enumerate() {
            if comp_ids.insert(c.id.as_str(), i).is_some() {
                return Err(ParseError::semantic(format!("duplicate component id `{}`", c.id)));
            }
        }

        // Partition: a surjection onto 1..N with non-empty fibres.
        for key in self.partition.keys() {
            if !comp_ids.contains_key(key.as_str()) {
                return Err(ParseError::semantic(format!(
                    "partition names unknown component `{key}`"
                )));
            }
        }
        let mut pieces = 0;
        for c in &self.components {
            let p = *self.partition.get(&c.id).ok_or_else(|| {
                ParseError::semantic(format!("component `{}` is missing from the partition", c.id))
            })?;
            if p == 0 {
                return Err(ParseError::semantic("piece ids start at 1"));
            }
            pieces = pieces.max(p);
        }
        for p in 1..=pieces {
            if !self.partition.values().any(|&q| q == p) {
                return Err(ParseError::semantic(format!(
                    "partition is not surjective: piece {p} is empty"
                )));
            }
        }

        let mut seen = vec![(0u32, 0u32); crossings.len()];
        let mut components = Vec::new();
        for c in &self.components {
            if c.visits.is_empty() {
                return Err(ParseError::semantic(format!(
                    "component `{}` has no crossings",
                    c.id
                )));
            }
            let visits = c
                .visits
                .iter()
                .map(|v| parse_visit(v, &crossing_ids))
                .collect::<Result<Vec<_>, _>>()?;
            for v in &visits {
                match v.strand {
                    Strand::Over => seen[v.crossing].0 += 1,
                    Strand::Under => seen[v.crossing].1 += 1,
                }
            }
            let m = self.markers.get(&c.id).ok_or_else(|| {
                ParseError::semantic(format!("component `{}` has no markers", c.id))
            })?;
            if m.star >= visits.len() || m.bullet >= visits.len() {
                return Err(ParseError::semantic(format!(
                    "component `{}`: marker position out of range",
                    c.id
                )));
            }
            components.push(Component {
                id: c.id.clone(),
                piece: self.partition[&c.id],
                rot: c.rot,
                visits,
                star: m.star,
                bullet: m.bullet,
            });
        }
        for key in self.markers.keys() {
            if !comp_ids.contains_key(key.as_str()) {
                return Err(ParseError::semantic(format!(
                    "markers given for unknown component `{key}`"
                )));
            }
        }
        for (k, &(o, u)) in seen.iter().enumerate() {
            if (o, u) != (1, 1) {
                return Err(ParseError::semantic(format!(
                    "crossing `{}` is visited {} times over and {} times under (expected once each)",
                    crossings[k].id, o, u
                )));
            }
        }

        let ring = match self.options.grading_ring.as_deref() {
            None => None,
            Some(s) => Some(s.parse::<RingChoice>().map_err(ParseError::Semantic)?),
        };
        let coefficients = match self.options.coefficients.as_deref() {
            None | Some("laurent") => Coefficients::Laurent,
            Some("plain") => Coefficients::Plain,
            Some(other) => {
                return Err(ParseError::semantic(format!(
                    "unknown coefficients `{other}` (expected laurent or plain)"
                )))
            }
        };
        let mut connecting_offsets = BTreeMap::new();
        for o in &self.options.connecting_offsets {
            let (Some(&a), Some(&b)) = (comp_ids.get(o.from.as_str()), comp_ids.get(o.to.as_str()))
            else {
                return Err(ParseError::semantic("connecting offset names an unknown component"));
            };
            if components[a].piece != components[b].piece {
                return Err(ParseError::semantic(format!(
                    "connecting offset {}->{} joins different pieces",
                    o.from, o.to
                )));
            }
            connecting_offsets.insert((a, b), o.offset);
        }
        let mut outer_faces = Vec::new();
        for o in &self.options.outer_face {
            let comp = *comp_ids.get(o.component.as_str()).ok_or_else(|| {
                ParseError::semantic(format!("outer_face names unknown component `{}`", o.component))
            })?;
            if o.edge >= components[comp].visits.len() {
                return Err(ParseError::semantic("outer_face edge out of range"));
            }
            let left = match o.side.as_str() {
                "left" => true,
                "right" => false,
                other => {
                    return Err(ParseError::semantic(format!(
                        "outer_face side `{other}` (expected left or right)"
                    )))
                }
            };
            outer_faces.push(OuterFaceRef {
                component: comp,
                edge: o.edge,
                left,
            });
        }

        let options = DiagramOptions {
            ring,
            coefficients,
            connecting_offsets,
            outer_faces,
        };
        let map = PlanarMap::build(&components, &crossings, &options.outer_faces)?;
        Ok(LagrangianDiagram {
            components,
            crossings,
            pieces,
            options,
            map,
        })
    }

    pub fn from_diagram(d: &LagrangianDiagram) -> RawDiagram {
        let components = d
            .components
            .iter()
            .map(|c| RawComponent {
                id: c.id.clone(),
                rot: c.rot,
                visits: c
                    .visits
                    .iter()
                    .map(|v| {
                        format!(
                            "{}:{}",
                            d.crossings[v.crossing].id,
                            if v.strand == Strand::Over { "o" } else { "u" }
                        )
                    })
                    .collect(),
            })
            .collect();
        let crossings = d
            .crossings
            .iter()
            .map(|c| RawCrossing {
                id: c.id.clone(),
                sign: c.sign,
                grading: c.grading,
            })
            .collect();
        let markers = d
            .components
            .iter()
            .map(|c| {
                (
                    c.id.clone(),
                    RawMarkers {
                        star: c.star,
                        bullet: c.bullet,
                    },
                )
            })
            .collect();
        let partition = d
            .components
            .iter()
            .map(|c| (c.id.clone(), c.piece))
            .collect();
        let options = RawOptions {
            grading_ring: d.options.ring.map(|r| {
                match r {
                    RingChoice::Z => "z",
                    RingChoice::Z2 => "z2",
                    RingChoice::Z2Rho => "z2r",
                }
                .to_string()
            }),
            coefficients: match d.options.coefficients {
                Coefficients::Laurent => None,
                Coefficients::Plain => Some("plain".to_string()),
            },
            connecting_offsets: d
                .options
                .connecting_offsets
                .iter()
                .map(|(&(a, b), &offset)| RawOffset {
                    from: d.components[a].id.clone(),
                    to: d.components[b].id.clone(),
                    offset,
                })
                .collect(),
            outer_face: d
                .options
                .outer_faces
                .iter()
                .map(|o| RawOuterFace {
                    component: d.components[o.component].id.clone(),
                    edge: o.edge,
                    side: if o.left { "left" } else { "right" }.to_string(),
                })
                .collect(),
        };
        RawDiagram {
            schema_version: SCHEMA_VERSION,
            components,
            crossings,
            markers,
            partition,
            options,
        }
    }
}

mod common;

use common::{diagram, read, DIAGRAMS};
use pda_core::diagram::{chords, parse_diagram, serialize_diagram, GradingRing};
use pda_core::disks::{enumerate_disks, oracle_enumerate, Limits};
use pda_core::{DiskError, ParseError};
use serde_json::{json, Value};

fn unknot_doc() -> Value {
    serde_json::from_str(&read("diagrams/unknot.json")).unwrap()
}

fn parse_value(v: &Value) -> Result<pda_core::diagram::LagrangianDiagram, ParseError> {
    parse_diagram(&v.to_string())
}

#[test]
fn unknot_faces_and_chord() {
    let d = diagram("unknot");
    assert_eq!(d.map.faces.len(), 3);
    assert_eq!(d.map.faces.iter().filter(|f| f.unbounded).count(), 1);
    let ch = chords(&d, GradingRing::Z).unwrap();
    assert_eq!(ch.len(), 1);
    assert_eq!(ch[0].grading, 1);
    assert!(ch[0].is_pure() && ch[0].is_piece_pure());
}

#[test]
fn empty_diagram() {
    let d = parse_value(&json!({
        "schema_version": 1, "components": [], "crossings": [], "markers": {}, "partition": {}
    }))
    .unwrap();
    assert_eq!(d.map.faces.len(), 1);
    assert!(enumerate_disks(&d, Limits::default()).unwrap().disks.is_empty());
    let c = pda_core::compute(&d, GradingRing::Z, Limits::default()).unwrap();
    assert!(c.dga.is_empty());
}

#[test]
fn zero_multiplicity_limit_is_rejected() {
    let d = diagram("unknot");
    let limits = Limits {
        max_face_multiplicity: 0,
    };
    assert_eq!(enumerate_disks(&d, limits), Err(DiskError::ZeroLimit));
    assert_eq!(oracle_enumerate(&d, limits), Err(DiskError::ZeroLimit));
}

#[test]
fn crossing_visited_once() {
    let mut v = unknot_doc();
    v["components"][0]["visits"] = json!(["k1:o"]);
    assert!(matches!(parse_value(&v), Err(ParseError::Semantic(_))));
}

#[test]
fn crossing_visited_twice_over() {
    let mut v = unknot_doc();
    v["components"][0]["visits"] = json!(["k1:o", "k1:o"]);
    assert!(matches!(parse_value(&v), Err(ParseError::Semantic(_))));
}

#[test]
fn wrong_parity_grading() {
    let mut v = unknot_doc();
    v["crossings"][0]["grading"] = json!(2);
    assert!(matches!(parse_value(&v), Err(ParseError::Semantic(_))));
}

#[test]
fn partition_must_be_surjective() {
    let mut v = unknot_doc();
    v["partition"] = json!({ "L1": 2 });
    assert!(matches!(parse_value(&v), Err(ParseError::Semantic(_))));
    v["partition"] = json!({});
    assert!(matches!(parse_value(&v), Err(ParseError::Semantic(_))));
}

#[test]
fn unknown_fields_and_bad_json() {
    let mut v = unknot_doc();
    v["colour"] = json!("red");
    assert!(matches!(parse_value(&v), Err(ParseError::Syntax { .. })));
    match parse_diagram("{ \"components\": [") {
        Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 1),
        other => panic!("{other:?}"),
    }
}

#[test]
fn nonplanar_gauss_code() {
    // The virtual trefoil: a Gauss code with no planar realization.
    let v = json!({
        "schema_version": 1,
        "components": [{ "id": "L1", "rot": 0, "visits": ["a:o", "b:u", "a:u", "b:o"] }],
        "crossings": [{ "id": "a", "sign": 1 }, { "id": "b", "sign": 1 }],
        "markers": { "L1": { "star": 0, "bullet": 0 } },
        "partition": { "L1": 1 }
    });
    assert!(matches!(parse_value(&v), Err(ParseError::Planarity(_))));
}

#[test]
fn serialization_round_trip() {
    for name in DIAGRAMS {
        let d = diagram(name);
        let text = serialize_diagram(&d);
        let again = parse_diagram(&text).unwrap();
        assert_eq!(again, d, "{name}");
        assert_eq!(serialize_diagram(&again), text, "{name}");
    }
}

#[test]
fn euler_characteristic() {
    for name in DIAGRAMS {
        let d = diagram(name);
        let v = d.crossings.len() as i64;
        let e = 2 * v;
        let f = d.map.faces.len() as i64;
        assert_eq!(v - e + f, 2, "{name}");
    }
}

#[test]
fn polyfillable_chords() {
    let d = diagram("polyfillable");
    let ch = chords(&d, GradingRing::Z).unwrap();
    assert_eq!(ch.len(), 10);
    for c in &ch {
        // k{i}{j}_n starts on L{i} and ends on L{j}
        let digits: Vec<usize> = c.id[1..3].chars().map(|x| x.to_digit(10).unwrap() as usize).collect();
        assert_eq!(d.components[c.start_comp].id, format!("L{}", digits[0]), "{}", c.id);
        assert_eq!(d.components[c.end_comp].id, format!("L{}", digits[1]), "{}", c.id);
    }
}

#[test]
fn periodic_grading_rings() {
    let d = diagram("trefoil");
    assert_eq!(d.resolve_ring(None), GradingRing::Z);
    let z2 = GradingRing::Mod(2);
    assert_eq!(z2.norm(-3), 1);
    assert!(z2.eq(4, 0));
    let c = pda_core::compute(&d, z2, Limits::default()).unwrap();
    assert!(c.dga.generators.iter().all(|g| (0..2).contains(&g.degree)));
}

mod common;

use common::{compute, read};
use pda_core::algebra::Element;
use pda_core::diagram::{parse_diagram, LagrangianDiagram};
use pda_core::moves::{double_point_phi, parse_move_spec, verify_triple_point, MoveKind, MoveSpec, Side};
use pda_core::{Computation, MoveError};

fn pair(prefix: &str) -> [(LagrangianDiagram, Computation); 2] {
    ["minus", "plus"].map(|tag| {
        let d = parse_diagram(&read(&format!("moves/{prefix}_{tag}.json"))).unwrap();
        let c = compute(&d);
        (d, c)
    })
}

fn spec(name: &str) -> MoveSpec {
    parse_move_spec(&read(&format!("moves/{name}.json"))).unwrap()
}

fn side(x: &(LagrangianDiagram, Computation)) -> Side<'_> {
    Side {
        diagram: &x.0,
        comp: &x.1,
    }
}

#[test]
fn triple_point_type_one() {
    let [m, p] = pair("triple");
    let s = spec("triple_spec");
    assert_eq!(s.kind, MoveKind::TripleI);
    assert_ne!(m.1.dga.differential, p.1.dga.differential);
    let report = verify_triple_point(side(&m), side(&p), &s).unwrap();
    assert_eq!(report.generators_checked, 6);
    assert_eq!(report.changed, [("(k)".to_string(), "(k) + (y) (x)".to_string())]);
}

#[test]
fn triple_point_with_two_pieces() {
    let [m, p] = pair("triple_split");
    let report = verify_triple_point(side(&m), side(&p), &spec("triple_spec")).unwrap();
    assert_eq!(report.generators_checked, 10);
}

#[test]
fn triple_point_map_is_an_involution() {
    let [m, p] = pair("triple");
    let report = verify_triple_point(side(&m), side(&p), &spec("triple_spec")).unwrap();
    let dga = &m.1.dga;
    let mut phi = dga.identity_images();
    for (sym, image) in &report.changed {
        let g = dga.index_of(sym).unwrap();
        phi[g] = pda_core::algebra::parse_element(image, &dga.symbols(), &dga.t_names).unwrap();
    }
    for g in 0..dga.len() {
        assert_eq!(dga.substitute(&dga.substitute(&Element::letter(g), &phi), &phi), Element::letter(g));
    }
}

#[test]
fn triple_point_rejects_bad_specs() {
    let [m, p] = pair("triple");
    let mut s = spec("triple_spec");
    s.kind = MoveKind::TripleII;
    assert!(matches!(
        verify_triple_point(side(&m), side(&p), &s),
        Err(MoveError::Precondition(_))
    ));
    let mut s = spec("triple_spec");
    s.correspondence.insert("x".into(), "y".into());
    assert!(matches!(
        verify_triple_point(side(&m), side(&p), &s),
        Err(MoveError::Precondition(_))
    ));
    let mut s = spec("triple_spec");
    s.triangle = vec!["k+".into(), "x-".into(), "y-".into()];
    assert!(verify_triple_point(side(&m), side(&p), &s).is_err());
}

#[test]
fn double_point_chain_map() {
    let [m, p] = pair("double");
    let s = spec("double_spec");
    let report = double_point_phi(side(&m), side(&p), &s).unwrap();
    assert_eq!(report.log.len(), m.1.dga.len());
    assert_eq!(report.target.len(), p.1.dga.len() + 2 * 4);
    // generators avoiding a and b whose differential avoids them map identically
    for sym in ["(k)", "(m)"] {
        let g = m.1.dga.index_of(sym).unwrap();
        let img = pda_core::algebra::render_element(&report.target, &report.phi[g]);
        assert_eq!(img, sym);
    }
    // chain map: d Phi = Phi d
    let dm = &m.1.dga;
    for g in 0..dm.len() {
        let lhs = report.target.d(&report.phi[g]);
        let rhs = report.target.substitute(&dm.differential[g], &report.phi);
        assert_eq!(lhs, rhs, "{}", dm.generators[g].symbol);
    }
}

#[test]
fn double_point_needs_action_order() {
    let [m, p] = pair("double");
    let mut s = spec("double_spec");
    s.actions.clear();
    assert!(matches!(
        double_point_phi(side(&m), side(&p), &s),
        Err(MoveError::Ordering(_))
    ));
}

#[test]
fn double_point_rejects_missing_chords() {
    let [m, p] = pair("double");
    let mut s = spec("double_spec");
    s.b = None;
    assert!(matches!(
        double_point_phi(side(&m), side(&p), &s),
        Err(MoveError::Precondition(_))
    ));
    // no words contain a chord that is not there
    let [tm, tp] = pair("triple");
    let mut s = spec("double_spec");
    s.a = Some("x".into());
    s.b = Some("pu".into());
    assert!(double_point_phi(side(&tm), side(&tp), &s).is_err());
}

use pda_wasm::{differential_text, generators_text, torsion_text};

fn hopf() -> String {
    std::fs::read_to_string(format!("{}/../../corpus/diagrams/hopf.json", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn hopf_differential() {
    let text = differential_text(&hopf()).unwrap();
    assert!(text.contains("d (k3)    = 1 + T2^-1"));
    assert!(text.ends_with("d^2 = 0: yes\n"));
}

#[test]
fn hopf_generators_and_torsion() {
    assert_eq!(generators_text(&hopf()).unwrap().lines().count(), 4);
    let t = torsion_text(&hopf(), 1).unwrap();
    assert!(t.starts_with("tau_aug 1\nvanishes at level 2: d(T2 (k1 k2)) = 1\n"));
}

#[test]
fn bad_input_is_an_error() {
    assert!(differential_text("{").is_err());
}

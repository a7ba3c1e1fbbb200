use std::process::{Command, Output};

fn corpus(rel: &str) -> String {
    format!("{}/../../corpus/{rel}", env!("CARGO_MANIFEST_DIR"))
}

fn pda(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pda")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = pda(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn compute_hopf_table() {
    let text = stdout(&["compute", &corpus("diagrams/hopf.json")]);
    assert!(text.contains("d (k3)    = 1 + T2^-1"));
    assert!(text.contains("d (k1 k2) = T2^-1"));
    assert!(text.contains("d^2 = 0: yes"));
}

#[test]
fn json_output_is_stable() {
    let args = ["--format", "json", "compute", &corpus("diagrams/polyfillable.json")];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let v: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 14);
    assert_eq!(v["square_zero"], true);
    assert_eq!(v["differential"]["(k11_4)"], "1 + (k11_1) + (k11_1) (k11_2) (k11_3) + (k11_3)");
}

#[test]
fn missing_file_fails() {
    let out = pda(&["compute", "no/such/diagram.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no/such/diagram.json"));
}

#[test]
fn invariants_of_hopf_and_torsion() {
    let text = stdout(&["invariants", &corpus("diagrams/hopf.json")]);
    assert!(text.contains("tau_aug 1  vanishing level 2"));
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "invariants", &corpus("presentations/torsion_k4.json")]))
            .unwrap();
    assert_eq!(v["torsion"]["tau_aug"], "4");
    assert_eq!(v["torsion"]["vanishing_level"], 5);
}

#[test]
fn verify_moves() {
    let m = |f: &str| corpus(&format!("moves/{f}.json"));
    let t = stdout(&["verify-move", &m("triple_minus"), &m("triple_plus"), &m("triple_spec")]);
    assert!(t.contains("Phi((k)) = (k) + (y) (x)"));
    assert!(t.trim_end().ends_with("pass"));
    let d = stdout(&["verify-move", &m("double_minus"), &m("double_plus"), &m("double_spec")]);
    assert!(d.trim_end().ends_with("pass"));
    let bad = pda(&["verify-move", &m("triple_minus"), &m("triple_plus"), &m("double_spec")]);
    assert_eq!(bad.status.code(), Some(1));
}

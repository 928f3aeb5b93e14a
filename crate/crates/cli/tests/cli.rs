use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_silt-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn braid_relation_reduces_to_identity() {
    let o = run(&["braid-nf", "b1 b2 b1 B2 B1 B2", "--diagram", "a2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "identity");
}

#[test]
fn c2_a2_lists_five_cluster_tilting_objects() {
    let o = run(&["ctilt", "--quiver", "a2", "--functor", "nu2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.contains('⊕')).count(), 5);

    let j = run(&["ctilt", "--quiver", "a2", "--functor", "nu2", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(v["ctilt"].as_array().unwrap().len(), 5);
    assert_eq!(v["ind_count"], 5);
}

#[test]
fn classification_suite_passes() {
    let o = run(&["verify", "a2-classification"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
}

#[test]
fn verify_json_is_byte_stable() {
    let a = run(&["verify", "invariants", "--json", "--seed", "3"]);
    let b = run(&["verify", "invariants", "--json", "--seed", "3", "--jobs", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn usage_and_domain_errors_exit_2() {
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["ctilt", "--quiver", "a3:FFB"]).status.code(), Some(2));
    assert_eq!(run(&["ctilt", "--functor", "nu1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let o = run(&["braid-encode", "--quiver", "a2", "--section", "0,-1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("slice"));
}

#[test]
fn mutation_of_projectives() {
    let o = run(&["mutate", "--quiver", "a2", "--objects", "1,2", "--at", "1", "--direction", "left"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2⊕3");
}

#[test]
fn two_term_interval_is_a_pentagon() {
    let o = run(&["hasse", "--quiver", "a2", "--n", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 5);
    let dot = stdout(&run(&["hasse", "--quiver", "a2", "--n", "1", "--dot"]));
    assert!(dot.starts_with("digraph"));
}

#[test]
fn braid_encode_and_amiot_check() {
    let o = run(&["braid-encode", "--quiver", "a2:B", "--section", "0,-1"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["amiot-check", "--quiver", "a2", "--d", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["bijection"], true);
}

#[test]
fn ar_quiver_of_a3_has_six_vertices() {
    let o = run(&["ar-quiver", "--quiver", "a3"]);
    assert!(stdout(&o).contains("6 indecomposables"));
}

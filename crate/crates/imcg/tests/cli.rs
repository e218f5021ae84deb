use std::path::PathBuf;

use imcg::{export_graph, parse_spec, run_cli, spec_to_json, ExportFormat};
use imcg_core::enumerate_specs;
use proptest::prelude::*;
use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.display().to_string()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("imcg").chain(args.iter().copied());
    let code = run_cli(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out, _) = run(args);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn spectrum_of_fig2a() {
    let f = fixture("fig2a.json");
    let (code, v) = run_json(&["spectrum", "--spec", &f]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["n"], 8);
    assert_eq!(v["gamma"], serde_json::json!([4, 2, 0, -2, -4, 2, 0, -2]));
}

#[test]
fn check_pst_on_fig2() {
    for (name, case) in [
        ("fig2a.json", "i"),
        ("fig2b.json", "ii"),
        ("fig2c.json", "iii"),
    ] {
        let f = fixture(name);
        let (code, v) = run_json(&["check-pst", "--spec", &f]);
        assert_eq!(code, 0);
        assert_eq!(v["kind"], "antipodal_pst");
        assert_eq!(v["case"], case);
        assert_eq!(v["pair"], serde_json::json!([0, 4]));
        assert!(v["residual"].as_f64().unwrap() < 1e-9);
    }
    let (_, v) = run_json(&["check-pst", "--spec", &fixture("fig2a.json")]);
    assert_eq!(v["m"], 1);
    assert_eq!(v["t_prime"], serde_json::json!({"p": 1, "q": 4}));
}

#[test]
fn check_pst_with_pair() {
    let f = fixture("fig3.json");
    let (code, v) = run_json(&["check-pst", "--spec", &f, "--pair", "0", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "quarter_pst");
    let (code, v) = run_json(&["check-pst", "--spec", &f, "--pair", "0", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "none");
    assert_eq!(v["t_prime"], Value::Null);
}

#[test]
fn check_mst_on_fig3() {
    let (code, v) = run_json(&["check-mst", "--spec", &fixture("fig3.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["kind"], "mst");
    assert_eq!(v["vertices"], serde_json::json!([0, 4, 8, 12]));
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 3);
    let (_, v) = run_json(&["check-mst", "--spec", &fixture("fig2b.json")]);
    assert_eq!(v["kind"], "none");
}

#[test]
fn export_fig1_dot() {
    let (code, out, _) = run(&["export", "--spec", &fixture("fig1.json"), "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    let nodes = out
        .lines()
        .filter(|l| l.trim_end_matches(';').trim().parse::<u64>().is_ok());
    assert_eq!(nodes.count(), 8);
    let undirected = out.lines().filter(|l| l.ends_with("[dir=none];")).count();
    let arcs = out
        .lines()
        .filter(|l| l.contains("->") && !l.contains("dir=none"))
        .count();
    assert_eq!(undirected, 4);
    assert_eq!(arcs, 3 * 8);
    assert!(out.contains("  0 -> 1;") && out.contains("  0 -> 5;") && out.contains("  0 -> 6;"));
}

#[test]
fn export_json_is_canonical() {
    let (code, out, _) = run(&[
        "export",
        "--spec",
        &fixture("fig3.json"),
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        out.trim_end(),
        std::fs::read_to_string(fixture("fig3.json"))
            .unwrap()
            .trim_end()
    );
}

#[test]
fn search_and_crosscheck() {
    let (code, v) = run_json(&["search", "--n", "16", "--mode", "mst"]);
    assert_eq!(code, 0);
    let specs = v["specs"].as_array().unwrap();
    let fig3: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("fig3.json")).unwrap()).unwrap();
    assert!(specs.contains(&fig3));

    let (code, v) = run_json(&["crosscheck", "--mode", "pst", "--n-max", "16"]);
    assert_eq!(code, 0);
    assert_eq!(v["mismatch_count"], 0);

    let (code, v) = run_json(&["crosscheck", "--mode", "mst", "--n-max", "8"]);
    assert_eq!(code, 1);
    assert_eq!(v["mismatch_count"], 2);
    assert_eq!(v["amended_mismatches"], 0);
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n":8,"B":[3]}"#).unwrap();
    let bad = bad.display().to_string();
    let garbled = dir.path().join("garbled.json");
    std::fs::write(&garbled, "not json").unwrap();
    let garbled = garbled.display().to_string();

    for args in [
        vec!["spectrum", "--spec", &bad],
        vec!["spectrum", "--spec", &garbled],
        vec!["spectrum", "--spec", "/nonexistent/spec.json"],
        vec!["export", "--spec", &garbled, "--format", "dot"],
        vec!["check-pst", "--spec", &bad],
    ] {
        let (code, out, err) = run(&args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty());
        let e: Value = serde_json::from_str(err.trim()).unwrap();
        assert!(e["error"]["kind"].is_string());
    }
    let f = fixture("fig1.json");
    for args in [
        vec!["export", "--spec", f.as_str(), "--format", "svg"],
        vec!["search", "--n", "8", "--mode", "ust"],
        vec!["check-pst", "--spec", f.as_str(), "--pair", "0", "9"],
        vec!["check-pst", "--spec", f.as_str(), "--pair", "3", "3"],
        vec!["search", "--n", "12", "--mode", "mst"],
        vec![
            "crosscheck",
            "--n-max",
            "64",
            "--mode",
            "pst",
            "--budget",
            "100",
        ],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).0, 2, "{args:?}");
    }
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn output_is_deterministic() {
    let f = fixture("fig3.json");
    for args in [
        vec!["spectrum", "--spec", f.as_str()],
        vec!["check-mst", "--spec", f.as_str()],
        vec!["check-pst", "--spec", f.as_str(), "--pair", "4", "12"],
        vec!["search", "--n", "16", "--mode", "pst"],
        vec!["crosscheck", "--n-max", "12", "--mode", "pst"],
        vec!["export", "--spec", f.as_str(), "--format", "dot"],
    ] {
        assert_eq!(run(&args).1, run(&args).1, "{args:?}");
    }
}

#[test]
fn every_small_spec_round_trips() {
    for n in 1..=16 {
        for s in enumerate_specs(n) {
            let text = export_graph(&s, ExportFormat::Json);
            assert_eq!(parse_spec(&text).unwrap(), s);
        }
    }
}

proptest! {
    #[test]
    fn reformatted_input_parses_to_same_spec(n in 1u64..=16, pick in any::<prop::sample::Index>(), pad in "[ \n\t]{0,3}") {
        let specs = enumerate_specs(n);
        let s = &specs[pick.index(specs.len())];
        let text = spec_to_json(s).replace(',', &format!(",{pad}")).replace(':', &format!("{pad}:{pad}"));
        prop_assert_eq!(&parse_spec(&text).unwrap(), s);
    }
}

//! End-to-end behaviour of the `gwistor` command line.

use std::process::Command;

use gwistor::Suite;
use gwistor_cli::app::{run, Outcome, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use gwistor_cli::expr::parse;
use proptest::prelude::*;
use serde_json::Value;

const SCHEMA: &str = include_str!("../report.schema.json");

fn gwistor(args: &[&str]) -> Outcome {
    run(std::iter::once("gwistor").chain(args.iter().copied()))
}

fn validator() -> jsonschema::Validator {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    jsonschema::validator_for(&schema).unwrap()
}

fn json_report(args: &[&str]) -> (i32, Value) {
    let out = gwistor(args);
    let v: Value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out.code, v)
}

#[test]
fn reports_match_the_schema_and_exit_codes() {
    let v = validator();
    for suite in Suite::NAMES {
        for k in ["symbolic", "1", "0", "1/2", "-2"] {
            let (code, report) = json_report(&["verify", "--k", k, "--suite", suite, "--format", "json"]);
            let errors: Vec<String> = v.iter_errors(&report).map(|e| e.to_string()).collect();
            assert!(errors.is_empty(), "{suite} at k = {k}: {errors:?}");
            let fail = report["summary"]["fail"].as_u64().unwrap();
            let pass = report["summary"]["pass"].as_u64().unwrap();
            let checks = report["checks"].as_array().unwrap();
            assert_eq!(pass + fail, checks.len() as u64);
            let counted = checks.iter().filter(|c| c["status"] == "fail").count() as u64;
            assert_eq!(counted, fail);
            assert_eq!(code == EXIT_PASS, fail == 0, "{suite} at k = {k}");
            assert!(code == EXIT_PASS || code == EXIT_FAIL);
            assert_eq!(report["suite"], *suite);
        }
    }
}

#[test]
fn symbolic_torsion_shows_the_factor() {
    let (code, report) = json_report(&["verify", "--k", "symbolic", "--suite", "torsion", "--format", "json"]);
    assert_eq!(code, EXIT_PASS);
    let check = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "torsion.parallel_torsion")
        .unwrap();
    assert_eq!(check["status"], "pass");
    assert!(check["anchor"].as_str().unwrap().contains("k*(k-1)"));
}

#[test]
fn everything_passes_at_one() {
    let out = gwistor(&["verify", "--k", "1", "--suite", "all"]);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stdout);
    let (_, report) = json_report(&["verify", "--k", "1", "--suite", "all", "--format", "json"]);
    let hol = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["id"] == "stiefel.holonomy.l5")
        .unwrap();
    assert_eq!(hol["status"], "pass");
    assert!(hol["anchor"].as_str().unwrap().contains("dimension 3"));
}

#[test]
fn half_reports_a_parallel_torsion_witness() {
    let (code, report) = json_report(&["verify", "--k", "1/2", "--suite", "torsion", "--format", "json"]);
    assert_eq!(code, EXIT_FAIL);
    let failed: Vec<&Value> = report["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["id"], "torsion.parallel_torsion");
    let witness = failed[0]["witness"].as_str().unwrap();
    // -1/4 (-e026 + e035 - e152 - e163) expanded
    assert_eq!(witness, "∇^ch_e4 T^c = 1/4*e026 - 1/4*e035 - 1/4*e125 - 1/4*e136");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--k", "x"][..],
        &["verify", "--k", "1/0"],
        &["verify", "--suite", "bogus"],
        &["verify", "--format", "yaml"],
        &["eval", "mu +"],
        &["eval", "nope"],
        &["eval", "ip(mu ^ dmu, phi)"],
        &["eval", "mu", "--k", "a/b"],
        &["stiefel", "--l", "3"],
        &["stiefel", "--l", "10"],
        &["stiefel", "--l", "-1"],
        &["frobnicate"],
        &[],
    ] {
        let out = gwistor(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty());
    }
    assert!(gwistor(&["stiefel", "--l", "3"]).stderr.contains("l out of range"));
}

#[test]
fn stiefel_summaries() {
    for (l, dim) in [(4, 1), (5, 3), (6, 6)] {
        let out = gwistor(&["stiefel", "--l", &l.to_string()]);
        assert_eq!(out.code, EXIT_PASS);
        assert!(out.stdout.contains(&format!("holonomy dimension: {dim}\n")), "{}", out.stdout);
        assert!(out.stdout.contains("torsion skew-symmetry: pass"));
        assert!(out.stdout.contains("bracket identity mu^dmu = -<[X,Y],Z>: pass"));
    }
}

#[test]
fn eval_examples() {
    let out = gwistor(&["eval", "d(mu) - (e4^e1 + e5^e2 + e6^e3)"]);
    assert_eq!(out.code, EXIT_PASS);
    assert_eq!(out.stdout.lines().next(), Some("0"));
    let out = gwistor(&["eval", "mu ^ dmu"]);
    assert!(out.stdout.ends_with("grade: 3\n"), "{}", out.stdout);
    let at_one = gwistor(&["eval", "star(d(phi))", "--k", "1"]);
    let direct = gwistor(&["eval", "star(3*vol - dmu^dmu - 3*mu^alpha1)"]);
    assert_eq!(at_one.code, EXIT_PASS);
    assert_eq!(at_one.stdout, direct.stdout);
    let out = gwistor(&["eval", "inner(d(phi), star_phi)"]);
    assert_eq!(out.stdout.lines().next(), Some("(6*k + 12)"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_gwistor");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["verify", "--suite", "structure"]);
    assert_eq!(ok.status.code(), Some(EXIT_PASS));
    let fail = status(&["verify", "--k", "2", "--suite", "torsion"]);
    assert_eq!(fail.status.code(), Some(EXIT_FAIL));
    let usage = status(&["stiefel", "--l", "3"]);
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8_lossy(&usage.stderr).contains("l out of range"));
}

fn leaf() -> impl Strategy<Value = String> {
    prop::sample::select(vec![
        "mu", "dmu", "vol", "alpha", "alpha1", "alpha2", "alpha3", "phi", "star_phi", "e0", "e3", "e6", "k", "2",
        "1/3",
    ])
    .prop_map(str::to_string)
}

fn source() -> impl Strategy<Value = String> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        let dir = prop::sample::select(vec!["e0", "e1", "e4", "e5"]).prop_map(str::to_string);
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} + {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} - {b}")),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("{a} ^ {b}")),
            inner.clone().prop_map(|a| format!("k * ({a})")),
            inner.clone().prop_map(|a| format!("-{a}")),
            inner.clone().prop_map(|a| format!("({a})")),
            inner.clone().prop_map(|a| format!("star({a})")),
            inner.clone().prop_map(|a| format!("d({a})")),
            (dir.clone(), inner.clone()).prop_map(|(x, a)| format!("ip({x}, {a})")),
            (dir, inner.clone()).prop_map(|(x, a)| format!("nabla_g({x}, {a})")),
            (inner.clone(), inner).prop_map(|(a, b)| format!("inner({a}, {b})")),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn printing_is_a_parse_fixpoint(src in source()) {
        let parsed = parse(&src);
        prop_assume!(parsed.is_ok());
        let (tree, grade) = parsed.unwrap();
        let printed = tree.to_string();
        let (again, grade2) = parse(&printed).unwrap();
        prop_assert_eq!(&again, &tree);
        prop_assert_eq!(grade, grade2);
        prop_assert_eq!(again.to_string(), printed);
    }
}

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bridgekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bridgekit"))
        .args(args)
        .env_remove("BRIDGEKIT_WINDOW")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = bridgekit(&all);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema").join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(&path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(name: &str, v: &Value) {
    let validator = schema(name);
    let errors: Vec<String> = validator.iter_errors(v).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{v:#}");
}

#[test]
fn census_reports_four_spheres() {
    let v = json(&["census", "L1((1/2,-2/5),(1/2,-2/5))"]);
    assert_eq!(v["mu"], 4);
    assert_eq!(v["exact"], true);
    assert_eq!(v["case"], "b-3");
    assert_valid("census", &v);
}

#[test]
fn word_normalize_reduces_relators() {
    let o = bridgekit(&["word", "normalize", "--group", "D(1/2,1/3)", "c1^2 c2^3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "h^-2\n");
}

#[test]
fn word_operations() {
    let run = |args: &[&str]| stdout(&bridgekit(args)).trim().to_string();
    let g = ["--group", "D(1/2,1/3)"];
    let with = |op: &str, rest: &[&str]| {
        let mut a = vec!["word", op];
        a.extend(g);
        a.extend(rest);
        run(&a)
    };
    assert_eq!(with("multiply", &["c1", "c1"]), "h^-1");
    assert_eq!(with("invert", &["c1 c2"]), with("multiply", &["c2^-1", "c1^-1"]));
    assert_eq!(with("power", &["c2", "-3"]), "h");
    assert_eq!(with("peripheral", &["c1 c2 h^2"]), "(c1 c2)^1 h^2");
    assert_eq!(with("peripheral", &["c1"]), "not peripheral");
    assert_eq!(with("conjugate", &["c1 c2", "c2 c1"]), "conjugate");
    assert_eq!(with("conjugate", &["c1 c2", "c1 c2 c1 c2"]), "not conjugate");
    assert_eq!(with("eta", &["1"]), "c1 h");
    for op in [vec!["normalize", "c1^3"], vec!["peripheral", "c1 c2"], vec!["conjugate", "c1", "c2"]] {
        let mut a = vec!["word", op[0]];
        a.extend(g);
        a.extend(&op[1..]);
        assert_valid("word", &json(&a));
    }
}

#[test]
fn solve_w_checks_the_oracle() {
    let o = bridgekit(&["solve-w", "--group", "D(1/2,1/3)", "--window", "3,10", "--check-oracle"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("predicted == brute-force: OK ("), "{last}");
    assert!(last.ends_with(" solutions)"), "{last}");

    let v = json(&["solve-w", "--group", "D(2/5,2/5)", "--window", "2,5", "--check-oracle"]);
    assert_eq!(v["oracle"]["agree"], true);
    assert_eq!(v["count"], v["oracle"]["brute_force_count"]);
    assert_valid("solve-w", &v);
}

#[test]
fn window_comes_from_the_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_bridgekit"))
        .args(["solve-w", "--group", "D(2/5,2/5)", "--format", "json"])
        .env("BRIDGEKIT_WINDOW", "1,2")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["window"]["a"], serde_json::json!([-1, 1]));
    assert_eq!(v["window"]["d"], serde_json::json!([-2, 2]));

    let v = json(&["solve-w", "--group", "D(2/5,2/5)"]);
    assert_eq!(v["window"]["b"], serde_json::json!([-10, 10]));
}

#[test]
fn every_subcommand_matches_its_schema() {
    let cases: [(&str, &[&str]); 9] = [
        ("classify", &["classify", "L1((1/2,1/3),(2/5,2/7))"]),
        ("classify", &["classify", "L2((-1/2,1/2),(1/3),(2/5,2/7))"]),
        ("classify", &["classify", "M(0;1/2,1/3,1/5)"]),
        ("census", &["census", "M(0;1/3,2/5,1/7)"]),
        ("isotopic", &["isotopic", "L1((1/3,1/4),(2/5,2/5))", "S1", "S2"]),
        ("heegaard", &["heegaard", "S2(-2;1/2,2/3,6/7)"]),
        ("heegaard", &["heegaard", "M(0;2/5,2/5,2/7)"]),
        ("symmetry", &["symmetry", "M(1;1/2,1/2,3/5)"]),
        ("merge-graph", &["merge-graph", "M(0;1/3,2/5,1/7)"]),
    ];
    for (name, args) in cases {
        assert_valid(name, &json(args));
    }
}

#[test]
fn sweep_emits_csv_and_json_rows() {
    let o = bridgekit(&["census", "--sweep", "alpha_max=3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("link,case,mu,exact"));
    let rows: Vec<&str> = lines.collect();
    // slopes ±1/2, ±1/3, ±2/3 give 21 unordered pairs
    assert_eq!(rows.len(), 21 * 21);
    assert!(rows.iter().all(|r| r.starts_with("\"L1(") && (r.ends_with(",true") || r.ends_with(",false"))));

    let v = json(&["census", "--sweep", "alpha_max=3"]);
    assert_eq!(v.as_array().unwrap().len(), 21 * 21);
    assert_valid("census-sweep", &v);
}

#[test]
fn identical_invocations_are_identical() {
    for args in [
        vec!["census", "--sweep", "alpha_max=3"],
        vec!["solve-w", "--group", "D(1/2,1/2)", "--window", "2,4", "--format", "json"],
        vec!["merge-graph", "M(0;1/3,1/3,1/3)", "--format", "json"],
    ] {
        assert_eq!(bridgekit(&args).stdout, bridgekit(&args).stdout, "{args:?}");
    }
}

#[test]
fn errors_exit_with_one() {
    for args in [
        vec!["census", "L1((1/2,1/0),(1/3,1/4))"],
        vec!["census", "L1((1/2,1/3)"],
        vec!["word", "normalize", "--group", "D(1/2,1/0)", "c1"],
        vec!["word", "normalize", "--group", "D(1/2,1/3)", "c3"],
        vec!["isotopic", "M(0;1/2,1/3,1/5)", "S1", "S2"],
        vec!["isotopic", "L1((1/3,1/4),(2/5,2/5))", "S1", "S9"],
        vec!["symmetry", "M(0;1/3,1/3,1/5)"],
        vec!["solve-w", "--group", "D(1/2,1/3)", "--window", "3"],
        vec!["census", "--sweep", "alpha_max=1"],
        vec!["frobnicate"],
        vec![],
    ] {
        let o = bridgekit(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    let o = bridgekit(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("solve-w"));
}

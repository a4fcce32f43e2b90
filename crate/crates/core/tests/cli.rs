use std::process::{Command, Output};

use matchspec::graph6::parse_graph6;
use matchspec::iso::are_isomorphic;
use serde_json::Value;

fn matchspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matchspec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> Value {
    let o = matchspec(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("valid json")
}

fn schema() -> Value {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/schema/report.schema.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn resolve<'a>(root: &'a Value, node: &'a Value) -> &'a Value {
    match node.get("$ref").and_then(Value::as_str) {
        Some(r) => {
            let name = r.strip_prefix("#/$defs/").expect("local ref");
            resolve(root, &root["$defs"][name])
        }
        None => node,
    }
}

/// Checks required keys and `const` values, recursing through object
/// properties and array items.
fn conforms(root: &Value, node: &Value, v: &Value, path: &str) -> Result<(), String> {
    let node = resolve(root, node);
    if let Some(c) = node.get("const") {
        if c != v {
            return Err(format!("{path}: expected {c}, found {v}"));
        }
    }
    if let (Some(req), Some(obj)) = (node.get("required").and_then(Value::as_array), v.as_object()) {
        for key in req.iter().filter_map(Value::as_str) {
            if !obj.contains_key(key) {
                return Err(format!("{path}: missing key {key}"));
            }
        }
    }
    if let (Some(props), Some(obj)) = (node.get("properties").and_then(Value::as_object), v.as_object()) {
        for (key, sub) in props {
            if let Some(val) = obj.get(key) {
                conforms(root, sub, val, &format!("{path}.{key}"))?;
            }
        }
    }
    if let (Some(items), Some(arr)) = (node.get("items"), v.as_array()) {
        for (i, val) in arr.iter().enumerate() {
            conforms(root, items, val, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

fn assert_schema(v: &Value) {
    let root = schema();
    let kind = v["kind"].as_str().expect("kind tag");
    conforms(&root, &root["$defs"][kind], v, kind).unwrap();
}

#[test]
fn construct_prints_graph6() {
    let o = matchspec(&["construct", "--family", "thm13-f2"]);
    assert!(o.status.success());
    let built = parse_graph6(stdout(&o).trim()).unwrap();
    assert!(are_isomorphic(&built, &parse_graph6("G?b~~{").unwrap()));
}

#[test]
fn invalid_family_exits_two() {
    let o = matchspec(&["construct", "--family", "w2:n=9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = matchspec(&["construct", "--family", "K3 v ("]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_graph6_exits_two() {
    let o = matchspec(&["analyze", "--graph", "E@~"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_t11_at_six() {
    let v = json(&["--out", "json", "verify", "--theorem", "t11", "--k", "1", "--n", "6"]);
    assert_schema(&v);
    assert_eq!(v["graphs_scanned"], 112);
    assert_eq!(v["counterexamples"].as_array().unwrap().len(), 0);
    let mut fams: Vec<&str> =
        v["exceptions_found"].as_array().unwrap().iter().map(|e| e["family"].as_str().unwrap()).collect();
    fams.sort();
    assert_eq!(fams, ["thm11-exc1:n=6,k=1", "thm11-exc2:k=1"]);
}

#[test]
fn loose_tolerance_exposes_counterexamples() {
    let o = matchspec(&["--tolerance", "0.5", "verify", "--theorem", "t16", "--n", "6"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("UNLISTED"));
}

#[test]
fn analyze_reports_conform() {
    for fam in ["thm11-exc1:n=6,k=1", "thm13-f1", "K3+K5"] {
        let v = json(&["--out", "json", "analyze", "--family", fam]);
        assert_schema(&v);
    }
    let v = json(&["--out", "json", "analyze", "--graph", "E@~w"]);
    assert_eq!(v["m"], 10);
    assert_eq!(v["excludable"]["direct"], false);
}

#[test]
fn analyze_reads_stdin_edge_list() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_matchspec"))
        .args(["analyze", "--input", "-", "--format", "edgelist"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert!(stdout(&o).contains("n = 4, m = 4"), "{}", stdout(&o));
}

#[test]
fn other_reports_conform() {
    assert_schema(&json(&["--out", "json", "construct", "--family", "K2 v (K2 u 2K1)", "--edges"]));
    assert_schema(&json(&["--out", "json", "thresholds", "--n", "6..10", "--k", "1"]));
    assert_schema(&json(&["--out", "json", "verify", "--lemma", "l2.1", "--grid", "n=4..6,samples=20"]));
    assert_schema(&json(&["--out", "json", "verify", "--charpolys", "--grid", "n=4..8"]));
    assert_schema(&json(&["--out", "json", "verify", "--theorem", "t16", "--n", "6"]));
}

#[test]
fn thresholds_csv() {
    let o = matchspec(&["--out", "csv", "thresholds", "--n", "6..8", "--k", "1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[1], "6,12,4.201472,10,3.626198");
    assert_eq!(lines[2], "8,23,6.096924,19,5.175748");
}

#[test]
fn odd_order_sweep_is_an_error() {
    let o = matchspec(&["verify", "--theorem", "t13", "--n", "7"]);
    assert_eq!(o.status.code(), Some(2));
}

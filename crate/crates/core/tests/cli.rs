use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::atomic::{AtomicUsize, Ordering};

use serde_json::Value;

fn metabel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_metabel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let o = metabel(&full);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)))
}

static NEXT: AtomicUsize = AtomicUsize::new(0);

/// Identity file removed on drop.
struct IdentityFile(PathBuf);

impl IdentityFile {
    fn arg(&self) -> &str {
        self.0.to_str().unwrap()
    }
}

impl Drop for IdentityFile {
    fn drop(&mut self) {
        let _ = std::fs::remove_file(&self.0);
    }
}

fn identity_file(text: &str) -> IdentityFile {
    let k = NEXT.fetch_add(1, Ordering::SeqCst);
    let path = std::env::temp_dir().join(format!("metabel-cli-{}-{k}.txt", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(text.as_bytes()).unwrap();
    IdentityFile(path)
}

#[test]
fn dims_examples() {
    let o = metabel(&["dims", "--variety", "mlieadm", "--max-degree", "5", "--method", "basis"]);
    assert_eq!(stdout(&o), "1 2 11 77 679\n");
    let o = metabel(&["dims", "--variety", "lieadm", "--max-degree", "4", "--method", "oracle"]);
    assert_eq!(stdout(&o), "1 2 11 101\n");
    let v = json(&["dims", "--variety", "mnov", "--max-degree", "4", "--method", "both"]);
    let rows = v["rows"].as_array().unwrap();
    let pairs: Vec<(u64, u64)> = rows
        .iter()
        .map(|r| (r["basis"].as_u64().unwrap(), r["oracle"].as_u64().unwrap()))
        .collect();
    assert_eq!(pairs, vec![(1, 1), (2, 2), (6, 6), (5, 5)]);
    assert!(rows.iter().all(|r| r["match"] == Value::Bool(true)));
}

#[test]
fn dims_schema() {
    let v = json(&["dims", "--variety", "novikov", "--max-degree", "3", "--method", "oracle"]);
    assert_eq!(v["variety"], "novikov");
    assert_eq!(v["method"], "oracle");
    for (k, row) in v["rows"].as_array().unwrap().iter().enumerate() {
        assert_eq!(row["degree"].as_u64(), Some(k as u64 + 1));
        assert!(row["oracle"].is_u64());
        assert!(row.get("basis").is_none() && row.get("match").is_none());
    }
}

#[test]
fn nf_examples_and_schema() {
    assert_eq!(stdout(&metabel(&["nf", "--variety", "mnov", "--term", "(x1*(x2*x3))"])), "(x2*(x1*x3))\n");
    assert_eq!(stdout(&metabel(&["nf", "--variety", "mnov", "--term", "((x1*x2)*(x3*x4))"])), "0\n");
    assert_eq!(stdout(&metabel(&["nf", "--variety", "mlieadm", "--term", "{[x1,x2],[x3,x4]}"])), "0\n");
    let v = json(&["nf", "--variety", "mlieadm", "--term", "[x1,[x2,[x3,x4]]]"]);
    assert_eq!(v["variety"], "mlieadm");
    assert_eq!(v["input"], "[x1,[x2,[x3,x4]]]");
    let nf = v["normal_form"].as_array().unwrap();
    let pairs: Vec<(&str, &str)> = nf
        .iter()
        .map(|e| (e["coef"].as_str().unwrap(), e["term"].as_str().unwrap()))
        .collect();
    assert_eq!(pairs, vec![("1", "[x3,[x2,[x1,x4]]]"), ("-1", "[x4,[x2,[x1,x3]]]")]);
}

#[test]
fn basis_examples() {
    let out = stdout(&metabel(&["basis", "--variety", "mlieadm", "--degree", "3", "--multilinear"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(*lines.last().unwrap(), "count=11");
    let out = stdout(&metabel(&["basis", "--variety", "mnov", "--degree", "4", "--multilinear"]));
    assert_eq!(out.lines().count(), 6);
    assert!(out.ends_with("count=5\n"));
    assert_eq!(stdout(&metabel(&["basis", "--variety", "mnov", "--degree", "2", "--vars", "1"])), "(x1*x1)\ncount=1\n");
}

#[test]
fn sym_examples() {
    let o = metabel(&["sym", "--variety", "mlieadm", "--degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = metabel(&["sym", "--variety", "mnov", "--degree", "5"]);
    assert_eq!(stdout(&o).lines().count(), 1);
    assert!(stdout(&o).starts_with("p_5 = "));

    // the literal p_3,2 is not symmetric, so verification reports a failure
    let o = metabel(&["sym", "--variety", "mnov", "--degree", "3", "--verify"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("PASS p_3,1 is symmetric and nonzero"));
    assert!(out.contains("FAIL p_3,2 is symmetric and nonzero"));

    let o = metabel(&["sym", "--variety", "mnov", "--degree", "4", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sym_schema() {
    let v = json(&["sym", "--variety", "mnov", "--degree", "4", "--verify"]);
    assert_eq!(v["degree"], 4);
    let gens = v["generators"].as_array().unwrap();
    assert_eq!(gens.len(), 2);
    for g in gens {
        assert!(g["label"].is_string() && g["poly"].is_string());
        assert!(g["checks"].as_object().unwrap().values().all(|c| c == &Value::Bool(true)));
    }
    let v = json(&["sym", "--variety", "mlieadm", "--degree", "3"]);
    assert!(v["generators"].as_array().unwrap().iter().all(|g| g.get("checks").is_none()));
}

#[test]
fn verify_examples_and_schema() {
    let o = metabel(&["verify", "--variety", "mnov", "--degree", "5", "--suite", "identities"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS vanishing expressions under nov_nf: 7 zeros"));
    let o = metabel(&["verify", "--variety", "mlieadm", "--degree", "4", "--suite", "basis"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS basis = oracle at degree 4: 77 = 77"));
    assert!(stdout(&o).contains("PASS depolarized basis is independent at degree 4"));
    let o = metabel(&["verify", "--variety", "mnov", "--degree", "5", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["verify", "--variety", "mnov", "--degree", "4", "--suite", "table"]);
    assert_eq!(v["suite"], "table");
    for c in v["checks"].as_array().unwrap() {
        assert!(c["name"].is_string() && c["pass"].is_boolean() && c["detail"].is_string());
    }
}

#[test]
fn reduce_examples() {
    let metabelian = identity_file("((a*b)*(c*d))\n");
    let o = metabel(&["reduce", "--identities", metabelian.arg(), "--degree", "4", "--poly", "((x1*x2)*(x3*x4))"]);
    assert_eq!(stdout(&o), "0\nconsequence=true\n");

    let empty = identity_file("");
    let o = metabel(&["reduce", "--identities", empty.arg(), "--degree", "2", "--poly", "(x1*x2) + (x2*x1)"]);
    assert_eq!(stdout(&o), "(x1*x2) + (x2*x1)\nconsequence=false\n");

    let lcom = identity_file("# left commutativity\n(a*(b*c)) - (b*(a*c))\n");
    let o = metabel(&["reduce", "--identities", lcom.arg(), "--degree", "3", "--poly", "(x1*(x2*x3)) - (x2*(x1*x3))"]);
    assert_eq!(stdout(&o), "0\nconsequence=true\n");

    let o = metabel(&["dims", "--variety", "custom", "--identities", lcom.arg(), "--max-degree", "3", "--method", "oracle"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| metabel(args).status.code().unwrap();
    assert_eq!(code(&["nf", "--variety", "mnov", "--term", "(x1*x2"]), 2);
    assert_eq!(code(&["nf", "--variety", "mnov", "--term", "{x1,x2}"]), 2);
    assert_eq!(code(&["dims", "--variety", "mnov"]), 2);
    assert_eq!(code(&["dims", "--variety", "nothing", "--max-degree", "2", "--method", "oracle"]), 3);
    assert_eq!(code(&["dims", "--variety", "lieadm", "--max-degree", "3", "--method", "basis"]), 3);
    assert_eq!(code(&["dims", "--variety", "mnov", "--max-degree", "7", "--method", "oracle"]), 3);
    assert_eq!(code(&["verify", "--variety", "mnov", "--degree", "7", "--suite", "basis"]), 3);
    let empty = identity_file("");
    assert_eq!(
        code(&["reduce", "--identities", empty.arg(), "--degree", "2", "--poly", "(x1*x1)"]),
        3
    );
    let bad = identity_file("(a*(b*c)\n");
    assert_eq!(code(&["reduce", "--identities", bad.arg(), "--degree", "2", "--poly", "(x1*x2)"]), 2);
}

#[test]
fn max_cost_raises_the_cap() {
    let o = metabel(&["dims", "--variety", "mnov", "--max-degree", "7", "--method", "both", "--max-cost", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("7 7 7 true\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["basis", "--variety", "mlieadm", "--degree", "4", "--vars", "2"][..],
        &["sym", "--variety", "mlieadm", "--degree", "4", "--json"][..],
        &["dims", "--variety", "mnov", "--max-degree", "5", "--method", "both", "--json"][..],
    ] {
        assert_eq!(metabel(args).stdout, metabel(args).stdout);
    }
}

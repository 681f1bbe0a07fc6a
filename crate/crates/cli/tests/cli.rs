use std::path::PathBuf;
use std::process::{Command, Output};

use logtan::corpus::fixtures;
use logtan::logtan::{BourbakiData, InvariantReport};
use serde_json::Value;

fn logtan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logtan")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("logtan-cli-{}-{name}", std::process::id()))
}

const NEARLY_FREE: [&str; 4] = ["--f", "x0^2+x3^2", "--g", "x0^3+x0*x1*x2+x3^3"];

#[test]
fn analyze_nearly_free_example() {
    let mut args = vec!["analyze"];
    args.extend(NEARLY_FREE);
    args.extend(["--bourbaki", "--betti", "--validate", "--json"]);
    let out = logtan(&args);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let r = &v["report"];
    assert_eq!(r["e"], 1);
    assert_eq!(r["m"], 4);
    assert_eq!(r["bour"], 1);
    assert_eq!(r["c3"], 3);
    assert_eq!(r["flags"]["nearly_free"], true);
    assert_eq!(r["stability"], "unstable");
    assert_eq!(r["slope"], "-3/2");
    assert_eq!(v["betti"]["degrees"], serde_json::json!([[1, 3, 3], [4]]));
    assert_eq!(v["bourbaki"]["deg_b"], 1);
    assert_eq!(v["violations"], serde_json::json!([]));
    assert!(v["error"].is_null());
}

#[test]
fn analyze_text_output() {
    let mut args = vec!["analyze"];
    args.extend(NEARLY_FREE);
    let out = logtan(&args);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("flags        nearly_free|three_syzygy|unstable"), "{text}");
}

#[test]
fn json_round_trips_through_the_library_types() {
    let mut args = vec!["analyze"];
    args.extend(NEARLY_FREE);
    args.extend(["--bourbaki", "--json"]);
    let v = json(&logtan(&args));
    let report: InvariantReport = serde_json::from_value(v["report"].clone()).unwrap();
    let bourbaki: BourbakiData = serde_json::from_value(v["bourbaki"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&report).unwrap(), v["report"]);
    assert_eq!(serde_json::to_value(&bourbaki).unwrap(), v["bourbaki"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for key in [
        "schema_version",
        "version",
        "input",
        "field",
        "report",
        "bourbaki",
        "betti",
        "violations",
        "timing_ms",
        "error",
    ] {
        assert!(keys.contains(&key), "missing {key}");
    }
}

#[test]
fn dependent_pair_exits_2() {
    let out = logtan(&["analyze", "--f", "x0^2", "--g", "x0^3", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json(&out)["error"]["kind"], "dependent");
}

#[test]
fn non_normal_pair_reports_the_divisor() {
    let out = logtan(&["analyze", "--f", "x0^2", "--g", "x0*x1^2", "--json"]);
    assert_eq!(out.status.code(), Some(2));
    let e = &json(&out)["error"];
    assert_eq!(e["kind"], "not_normal");
    assert_eq!(e["dimension"], 2);
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(logtan(&["analyze", "--f", "x0^2 +", "--g", "x1"]).status.code(), Some(2));
    assert_eq!(logtan(&["analyze", "--f", "x0", "--g", "x1", "--field", "fp:4"]).status.code(), Some(2));
    assert_eq!(logtan(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn validate_accepts_every_fixture() {
    for fx in fixtures() {
        let out = logtan(&["analyze", "--f", &fx.f, "--g", &fx.g, "--validate", "--field", "fp:32003"]);
        assert_eq!(out.status.code(), Some(0), "{}", fx.name);
    }
}

#[test]
fn corpus_reports_every_fixture() {
    let out = logtan(&["corpus", "--json"]);
    let v = json(&out);
    let rows = v["fixtures"].as_array().unwrap();
    assert_eq!(rows.len(), fixtures().len());
    let failed = v["failed"].as_u64().unwrap();
    assert_eq!(out.status.code(), Some(if failed == 0 { 0 } else { 1 }));
}

#[test]
fn search_is_deterministic() {
    let (a, b) = (scratch("a.csv"), scratch("b.csv"));
    let run = |path: &PathBuf| {
        logtan(&["search", "--df", "1", "--dg", "2", "--count", "12", "--seed", "42", "--out", path.to_str().unwrap()])
    };
    let (oa, ob) = (run(&a), run(&b));
    assert_eq!(oa.status.code(), Some(0));
    assert_eq!(oa.stdout, ob.stdout);
    let (ca, cb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ca, cb);
    let csv = String::from_utf8(ca).unwrap();
    assert!(csv.starts_with("seed_index,m,e,bour,c3,flags\n"));
    assert_eq!(csv.lines().count(), 13);
    let _ = std::fs::remove_file(a);
    let _ = std::fs::remove_file(b);
}

#[test]
fn search_json_summary() {
    let out = logtan(&["search", "--df", "1", "--dg", "1", "--count", "5", "--seed", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kept"], 5);
    let total: u64 = v["histogram"].as_array().unwrap().iter().map(|r| r["count"].as_u64().unwrap()).sum();
    assert_eq!(total, 5);
}

#[test]
fn search_rejects_zero_count() {
    assert_eq!(logtan(&["search", "--df", "2", "--dg", "2", "--count", "0"]).status.code(), Some(2));
}

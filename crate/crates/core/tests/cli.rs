use std::path::PathBuf;
use std::process::Command;

use cohomotopy::cli::{run, table_from_json, CliOutput};
use serde_json::Value;

fn cli(args: &str) -> CliOutput {
    run(std::iter::once("cohomotopy").chain(args.split_whitespace()))
}

fn json(args: &str) -> Value {
    let out = cli(&format!("{args} --format json"));
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("cohomotopy-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn hurewicz_d14_k1() {
    let out = cli("hurewicz --d 14 --k 1");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("kernel: Z2\n"), "{}", out.stdout);
    assert!(out.stdout.contains("cokernel: 0\n"));
    assert!(out.stdout.contains("exact: yes\n"));
}

#[test]
fn e2_row_zero_for_d6() {
    let out = cli("ahss --d 6 --page e2 --format table");
    assert_eq!(out.code, 0);
    let row: Vec<&str> = out.stdout.lines().find(|l| l.trim_start().starts_with("q=0")).unwrap().split_whitespace().collect();
    assert_eq!(row, ["q=0", "Z", "0", "Z2", "0", "Z2", "Z"]);
}

#[test]
fn enriques_from_flags() {
    let v = json("manifold --twisted --b1l 0 --bplusl 2 --sigma -8 --c1sq 0");
    assert_eq!(v["result"]["d"], 2);
    assert_eq!(v["result"]["k"], 0);
    let text = cli("manifold --twisted --b1l 0 --bplusl 2 --sigma -8 --c1sq 0").stdout;
    assert!(text.contains("value: Z\n"), "{text}");
}

#[test]
fn lemma_table_covers_every_row() {
    let v = json("lemma-table --d-max 20");
    let rows = v["result"].as_array().unwrap();
    assert_eq!(rows.len(), 17 * 3);
    let text = cli("lemma-table --d-max 20").stdout;
    assert_eq!(text.lines().count(), 1 + 17 * 3);
    for row in rows.iter().filter(|r| r["k"] == 1) {
        let d = row["d"].as_u64().unwrap();
        let want = if d % 2 == 1 && (d / 2) % 2 == 0 { "0" } else { "Z2" };
        assert_eq!(row["kernel_bound"], serde_json::json!([want]), "d={d}");
    }
}

#[test]
fn domain_errors_exit_one_with_name() {
    let out = cli("manifold --twisted --b1l 0 --bplusl 2 --sigma -7 --c1sq 0");
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("IndexNotIntegral"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
    // outside the reduction the report still succeeds, without a target group
    let out = cli("manifold --b1l 0 --bplusl 2 --sigma -8 --c1sq 0");
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("not reduced to projective space"), "{}", out.stdout);
    assert!(cli("hurewicz --d 10 --k 3").stderr.starts_with("UnsupportedK"));
}

#[test]
fn usage_errors_exit_two() {
    for args in ["", "frobnicate", "hurewicz --d 14", "hurewicz --d x --k 1", "ahss --d 6 --page e9"] {
        let out = cli(args);
        assert_eq!(out.code, 2, "{args}");
        assert!(out.stderr.starts_with("UsageError"), "{args}: {}", out.stderr);
    }
    assert_eq!(cli("--help").code, 0);
}

#[test]
fn output_is_deterministic() {
    for args in ["ahss --d 17 --format json", "lemma-table --d-max 12", "catalog --format json", "consum --x1 Enriques --x2 K3"] {
        let first = cli(args);
        assert_eq!(first.code, 0, "{args}");
        assert_eq!(first.stdout, cli(args).stdout, "{args}");
    }
}

#[test]
fn json_envelope_has_documented_keys() {
    for args in [
        "ahss --d 9",
        "hurewicz --d 9 --k 2",
        "lemma-table --d-max 6",
        "manifold --name Enriques --twisted --b1l 0 --bplusl 2 --sigma -8 --c1sq 0",
        "consum --x1 Enriques --x2 K3",
        "catalog",
    ] {
        let v = json(args);
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys.len(), 5, "{args}");
        for key in ["command", "inputs", "result", "caveats", "provenance"] {
            assert!(v.get(key).is_some(), "{args}: {key}");
        }
        assert_eq!(v["command"], args.split_whitespace().next().unwrap());
        assert!(v["caveats"].as_array().unwrap().iter().all(Value::is_string));
        assert!(v["provenance"].as_array().unwrap().iter().all(Value::is_string));
    }
}

#[test]
fn json_page_re_renders_as_table() {
    for d in [2, 6, 13, 14, 17, 30] {
        for mode in ["anchored", "full"] {
            for page in ["e2", "e3"] {
                let args = format!("ahss --d {d} --page {page} --mode {mode}");
                let table = cli(&args).stdout;
                let grid: String = table.lines().filter(|l| !l.starts_with("caveat:")).map(|l| format!("{l}\n")).collect();
                let doc = cli(&format!("{args} --format json")).stdout;
                assert_eq!(table_from_json(&doc).unwrap(), grid, "{args}");
            }
        }
    }
}

#[test]
fn full_mode_prints_assumed_rule_caveat() {
    assert!(cli("ahss --d 14").stdout.contains("caveat: AssumedRuleUsed"));
    assert!(!cli("ahss --d 14 --mode anchored").stdout.contains("caveat:"));
}

#[test]
fn stems_file_overrides_rows() {
    // dropping row -3 shortens the window and removes the ν column
    let path = scratch("short.stems", "# trivial nu\n-3||none\n");
    let out = cli(&format!("ahss --d 8 --page e2 --stems {}", path.display()));
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(!out.stdout.contains("Z24"));
    let bad = scratch("bad.stems", "-3|Z24|nu\n");
    let out = cli(&format!("ahss --d 8 --stems {}", bad.display()));
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("StemParse"), "{}", out.stderr);
}

#[test]
fn catalog_and_connected_sums() {
    let v = json("catalog");
    let names: Vec<&str> = v["result"].as_array().unwrap().iter().map(|e| e["entry"]["datum"]["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"Enriques") && names.contains(&"K3"), "{names:?}");
    let one = json("catalog --name K#N");
    assert_eq!(one["result"][0]["entry"]["datum"]["name"], "Enriques#K3");
    assert_eq!(one["result"][0]["matches_expected"], true);
    let sum = json("consum --x1 Enriques --x2 K3");
    assert_eq!(sum["result"]["report"]["d"], 6);
    assert_eq!(sum["result"]["report"]["k"], 1);
    assert!(sum["result"]["report"]["flags"].as_array().unwrap().contains(&Value::from("SWVanishes")));
    let datum = scratch("k3.json", r#"{"name":"K","twisted":false,"b1l":0,"bplus_l":3,"sigma":-16,"c1sq":0}"#);
    let from_file = json(&format!("consum --x1 Enriques --x2 {}", datum.display()));
    assert_eq!(from_file["result"]["report"], sum["result"]["report"]);
    let out = cli("consum --x1 K3 --x2 Enriques");
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("PreconditionViolated"), "{}", out.stderr);
}

#[test]
fn binary_forwards_exit_status() {
    let bin = env!("CARGO_BIN_EXE_cohomotopy");
    let ok = Command::new(bin).args(["hurewicz", "--d", "14", "--k", "1"]).output().unwrap();
    assert!(ok.status.success());
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), cli("hurewicz --d 14 --k 1").stdout);
    let bad = Command::new(bin).args(["hurewicz", "--d", "1", "--k", "0"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8(bad.stderr).unwrap().starts_with("InvalidDimension"));
    assert_eq!(Command::new(bin).arg("nope").output().unwrap().status.code(), Some(2));
}

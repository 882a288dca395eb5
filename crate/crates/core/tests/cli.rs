use std::process::Command;

use onerow::cli::{run, Outcome};

fn go(args: &[&str]) -> Outcome {
    let mut v = vec!["onerow".to_string()];
    v.extend(args.iter().map(|s| s.to_string()));
    run(v)
}

fn json(out: &Outcome) -> serde_json::Value {
    serde_json::from_str(&out.stdout).expect("valid json")
}

#[test]
fn compute_rank_one_d() {
    let out = go(&["compute", "--family", "D", "--n", "1", "--r", "3", "--format", "text"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "x1^3 + x1^-3\n");
}

#[test]
fn compute_empty_row() {
    let out = go(&["compute", "--family", "C", "--n", "1", "--r", "0"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "1\n"));
}

#[test]
fn pipelines_agree_bytewise() {
    for fam in ["C", "D"] {
        let base = ["compute", "--family", fam, "--n", "2", "--r", "2", "--format", "json"];
        let tab = go(&base);
        for via in ["lassalle", "walgebra"] {
            let mut args = base.to_vec();
            args.extend(["--via", via]);
            let other = go(&args);
            assert_eq!(other.code, 0);
            let (a, b) = (json(&tab), json(&other));
            assert_eq!(a["polynomial"], b["polynomial"], "{fam} via {via}");
        }
    }
    let a = go(&["compute", "--family", "D", "--n", "2", "--r", "2", "--via", "lassalle"]);
    let b = go(&["compute", "--family", "D", "--n", "2", "--r", "2"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", "--family", "C", "--n", "2", "--r", "3", "--T", "T", "--format", "json"];
    assert_eq!(go(&args), go(&args));
    let v = ["verify", "--suite", "classical", "--seed", "3", "--count", "4"];
    assert_eq!(go(&v), go(&v));
}

#[test]
fn json_is_versioned() {
    let out = go(&["compute", "--family", "D", "--n", "2", "--r", "1", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["polynomial"]["text"], "x1 + x2 + x2^-1 + x1^-1");
    let out = go(&["tableaux", "--family", "D", "--n", "2", "--r", "1"]);
    assert_eq!(json(&out)["schema"], 1);
}

#[test]
fn latex_output() {
    let out = go(&["compute", "--family", "D", "--n", "1", "--r", "2", "--format", "latex"]);
    assert_eq!(out.stdout, "x_{1}^{2} + x_{1}^{-2}\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["compute", "--family", "D", "--n", "2", "--r", "1", "--T", "5/7"],
        vec!["compute", "--family", "E", "--n", "2", "--r", "1"],
        vec!["compute", "--family", "C", "--n", "0", "--r", "1"],
        vec!["compute", "--family", "C", "--n", "2"],
        vec!["compute", "--family", "C", "--n", "2", "--r", "1", "--T", "q/"],
        vec!["compute", "--family", "C", "--n", "2", "--r", "2", "--T", "T", "--via", "walgebra"],
        vec!["compute", "--family", "C", "--n", "3", "--r", "7", "--via", "walgebra", "--budget", "100"],
        vec!["verify", "--suite", "nonsense"],
        vec!["verify", "--suite", "principal", "--format", "latex"],
        vec!["frobnicate"],
    ] {
        let out = go(&args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stderr);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn pole_exits_3() {
    let out = go(&["compute", "--family", "C", "--n", "2", "--r", "2", "--T", "(1)/(q*t)"]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("pole"));
}

#[test]
fn tableaux_listing() {
    for (fam, n, r, count) in [("D", "2", "1", 4), ("D", "2", "2", 9), ("C", "2", "0", 1)] {
        let out = go(&["tableaux", "--family", fam, "--n", n, "--r", r]);
        let v = json(&out);
        assert_eq!(v["tableaux"].as_array().unwrap().len(), count);
        assert_eq!(v["count"], count);
        assert_eq!(v["closed_form_count"], count);
    }
    let out = go(&["tableaux", "--family", "C", "--n", "2", "--r", "0"]);
    assert_eq!(json(&out)["tableaux"][0]["word"], serde_json::json!([]));
    let out = go(&["tableaux", "--family", "C", "--n", "1", "--r", "2", "--format", "text"]);
    assert_eq!(out.stdout, "[1 1] weight [2]\n[1 1bar] weight [0]\n[1bar 1bar] weight [-2]\n3 tableaux\n");
}

#[test]
fn verify_small_suites_pass() {
    for args in [
        vec!["verify", "--suite", "thm22", "--seed", "7"],
        vec!["verify", "--suite", "soukan", "--n", "2", "--r", "2"],
        vec!["verify", "--suite", "lassalleD", "--n", "2", "--r", "3"],
        vec!["verify", "--suite", "lassalleC", "--n", "2", "--r", "2"],
        vec!["verify", "--suite", "principal", "--n", "2", "--r", "3"],
        vec!["verify", "--suite", "eigen", "--n", "2", "--r", "2"],
        vec!["verify", "--suite", "transformII", "--n", "2"],
        vec!["verify", "--suite", "transformIII", "--n", "2"],
    ] {
        let out = go(&args);
        assert_eq!(out.code, 0, "{args:?}\n{}", out.stdout);
        let v = json(&out);
        assert_eq!(v["passed"], true);
        let keys: Vec<String> = v["results"].as_array().unwrap().iter().map(|r| r["instance"].as_str().unwrap().to_string()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}

#[test]
fn negative_controls_exit_1() {
    let out = go(&["verify", "--suite", "classical", "--count", "5", "--negative-control"]);
    assert_eq!(out.code, 1);
    let v = json(&out);
    for r in v["results"].as_array().unwrap() {
        let watson = r["instance"].as_str().unwrap().contains("/watson/");
        assert_eq!(r["pass"], !watson);
    }
    let out = go(&["verify", "--suite", "eigen", "--n", "1", "--r", "1", "--negative-control", "--format", "text"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL eigen/negative-control/x1 (result does not clear"));
}

#[test]
fn config_file_supplies_flags() {
    let dir = std::env::temp_dir().join(format!("onerow-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.cfg");
    std::fs::write(&path, "# a D1 run\nfamily=D\nn=1\nr=3\nformat=text\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(go(&["compute", "--config", p]).stdout, "x1^3 + x1^-3\n");
    assert_eq!(go(&["compute", "--config", p, "--r", "2"]).stdout, "x1^2 + x1^-2\n");
    std::fs::write(&path, "command=tableaux\nfamily=D\nn=2\nr=2\n").unwrap();
    assert_eq!(json(&go(&["--config", p]))["count"], 9);
    assert_eq!(go(&["compute", "--config", "/nonexistent/file"]).code, 2);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_onerow");
    let st = Command::new(bin).args(["compute", "--family", "D", "--n", "1", "--r", "2"]).output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&st.stdout), "x1^2 + x1^-2\n");
    let st = Command::new(bin).args(["compute", "--family", "D"]).output().unwrap();
    assert_eq!(st.status.code(), Some(2));
    let st = Command::new(bin).args(["verify", "--suite", "classical", "--count", "2", "--negative-control"]).output().unwrap();
    assert_eq!(st.status.code(), Some(1));
}

//! End-to-end tests of the `subdiv` binary: round trips for every generator
//! family, exit codes, and byte-level determinism of certificate files.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_subdiv"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn path_str(p: &Path) -> &str {
    p.to_str().expect("utf-8 path")
}

#[test]
fn generate_find_verify_roundtrip_per_family() {
    let dir = tempfile::tempdir().unwrap();
    let families: Vec<(&str, Vec<String>)> = vec![
        ("pg2", ["generate", "pg2", "-q", "3"].iter().map(|s| s.to_string()).collect()),
        ("jung", ["generate", "jung", "-d", "6", "--copies", "2"].iter().map(|s| s.to_string()).collect()),
        (
            "blowup",
            ["generate", "blowup", "--h", "6", "-r", "3", "-b", "2", "-s", "5"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        ),
        (
            "regular",
            ["generate", "regular", "-n", "40", "-r", "3", "-s", "5"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        ),
        (
            "gnp",
            ["generate", "gnp", "-n", "40", "-p", "0.15", "-s", "5"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
        ),
    ];
    for (name, gen_args) in families {
        let graph_path = dir.path().join(format!("{name}.edges"));
        let cert_path = dir.path().join(format!("{name}.cert.json"));
        let mut args: Vec<String> = gen_args;
        args.push("-o".into());
        args.push(path_str(&graph_path).into());
        let out = bin().args(&args).output().unwrap();
        assert!(out.status.success(), "{name}: generate failed: {out:?}");

        let out = run(&[
            "find",
            "-i",
            path_str(&graph_path),
            "-o",
            path_str(&cert_path),
            "--seed",
            "0",
        ]);
        assert!(out.status.success(), "{name}: find failed: {out:?}");

        let out = run(&["verify", "-i", path_str(&graph_path), "-c", path_str(&cert_path)]);
        assert!(out.status.success(), "{name}: verify failed: {out:?}");
    }
}

#[test]
fn verify_rejects_tampered_certificate_with_vertex_named() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.edges");
    // K4 plus an apex vertex 4 joined to everything: detours 0-4-1 and
    // 2-4-3 both need vertex 4.
    std::fs::write(
        &graph_path,
        "5 10\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n1 4\n2 4\n3 4\n",
    )
    .unwrap();
    let cert_path = dir.path().join("cert.json");
    // A valid certificate first.
    std::fs::write(
        &cert_path,
        r#"{"cores":[0,1,2,3],"paths":[
            {"pair":[0,1],"vertices":[0,1]},
            {"pair":[0,2],"vertices":[0,2]},
            {"pair":[0,3],"vertices":[0,3]},
            {"pair":[1,2],"vertices":[1,2]},
            {"pair":[1,3],"vertices":[1,3]},
            {"pair":[2,3],"vertices":[2,3]}],
          "meta":{"route":"highdeg","params":{}}}"#,
    )
    .unwrap();
    let out = run(&["verify", "-i", path_str(&graph_path), "-c", path_str(&cert_path)]);
    assert!(out.status.success());

    // Tamper: two paths detour through the shared interior vertex 4.
    std::fs::write(
        &cert_path,
        r#"{"cores":[0,1,2,3],"paths":[
            {"pair":[0,1],"vertices":[0,4,1]},
            {"pair":[0,2],"vertices":[0,2]},
            {"pair":[0,3],"vertices":[0,3]},
            {"pair":[1,2],"vertices":[1,2]},
            {"pair":[1,3],"vertices":[1,3]},
            {"pair":[2,3],"vertices":[2,4,3]}],
          "meta":{"route":"highdeg","params":{}}}"#,
    )
    .unwrap();
    let out = run(&["verify", "-i", path_str(&graph_path), "-c", path_str(&cert_path)]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains('4'), "diagnostic must name the shared vertex: {stderr}");
}

#[test]
fn oracle_prints_known_value_and_refuses_large() {
    let dir = tempfile::tempdir().unwrap();
    let k33 = dir.path().join("k33.edges");
    std::fs::write(&k33, "6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n").unwrap();
    let out = run(&["oracle", "-i", path_str(&k33)]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "4");

    let big = dir.path().join("big.edges");
    let mut text = String::from("12 11\n");
    for i in 1..12 {
        text.push_str(&format!("{} {}\n", i - 1, i));
    }
    std::fs::write(&big, text).unwrap();
    let out = run(&["oracle", "-i", path_str(&big)]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_2() {
    let out = run(&["find", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    std::fs::write(&bad, "not a graph\n").unwrap();
    let cert = dir.path().join("c.json");
    let out = run(&["find", "-i", path_str(&bad), "-o", path_str(&cert)]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn identical_seeds_reproduce_identical_certificates() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.edges");
    let out = bin()
        .args(["generate", "regular", "-n", "60", "-r", "3", "-s", "9", "-o", path_str(&graph_path)])
        .output()
        .unwrap();
    assert!(out.status.success());
    let c1 = dir.path().join("c1.json");
    let c2 = dir.path().join("c2.json");
    for c in [&c1, &c2] {
        let out = run(&["find", "-i", path_str(&graph_path), "-o", path_str(c), "--seed", "42"]);
        assert!(out.status.success());
    }
    let b1 = std::fs::read(&c1).unwrap();
    let b2 = std::fs::read(&c2).unwrap();
    assert_eq!(b1, b2, "same seed must reproduce the certificate byte for byte");
}

#[test]
fn seed_env_var_fallback() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.edges");
    bin()
        .args(["generate", "gnp", "-n", "30", "-p", "0.2", "-s", "3", "-o", path_str(&graph_path)])
        .output()
        .unwrap();
    let c_env = dir.path().join("env.json");
    let c_flag = dir.path().join("flag.json");
    let out = bin()
        .args(["find", "-i", path_str(&graph_path), "-o", path_str(&c_env)])
        .env("TOPO_CLIQUE_SEED", "7")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = run(&["find", "-i", path_str(&graph_path), "-o", path_str(&c_flag), "--seed", "7"]);
    assert!(out.status.success());
    assert_eq!(std::fs::read(&c_env).unwrap(), std::fs::read(&c_flag).unwrap());
}

#[test]
fn audit_reports_freeness_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = dir.path().join("c5.edges");
    std::fs::write(&c5, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let out = run(&["audit", "kst", "-i", path_str(&c5), "--s", "2", "--t", "2"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["free"], serde_json::Value::Bool(true));

    let c4 = dir.path().join("c4.edges");
    std::fs::write(&c4, "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let out = run(&["audit", "kst", "-i", path_str(&c4), "--s", "2", "--t", "2"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["free"], serde_json::Value::Bool(false));
    assert!(json["witness"].is_object());
}

#[test]
fn experiment_growth_writes_json_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("growth");
    let out = run(&[
        "experiment",
        "growth",
        "--qs",
        "2,3",
        "-o",
        path_str(&prefix),
        "--seed",
        "0",
    ]);
    assert!(out.status.success(), "{out:?}");
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(prefix.with_extension("json")).unwrap()).unwrap();
    assert_eq!(json["rows"].as_array().unwrap().len(), 2);
    let csv = std::fs::read_to_string(prefix.with_extension("csv")).unwrap();
    assert!(csv.starts_with("q,n,d,order,"));
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn find_paper_mode_and_params_file() {
    let dir = tempfile::tempdir().unwrap();
    let graph_path = dir.path().join("g.edges");
    bin()
        .args(["generate", "pg2", "-q", "2", "-o", path_str(&graph_path)])
        .output()
        .unwrap();
    let params = dir.path().join("params.conf");
    std::fs::write(&params, "eps1 = 0.3\ntarget_cores = 3\nseed = 5\n").unwrap();
    let cert = dir.path().join("c.json");
    let report = dir.path().join("r.json");
    let out = run(&[
        "find",
        "-i",
        path_str(&graph_path),
        "-o",
        path_str(&cert),
        "--report",
        path_str(&report),
        "--params",
        path_str(&params),
    ]);
    assert!(out.status.success(), "{out:?}");
    let rep: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(rep["constants"]["eps1"], serde_json::json!(0.3));
    assert_eq!(rep["rng_seed"], serde_json::json!(5));

    // Paper mode still runs and reports.
    let out = run(&[
        "find",
        "-i",
        path_str(&graph_path),
        "-o",
        path_str(&cert),
        "--mode",
        "paper",
    ]);
    assert!(out.status.success(), "{out:?}");
}

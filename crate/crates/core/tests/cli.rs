use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_carter-kit"))
}

#[test]
fn construct_emits_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("group.json");
    let out = bin()
        .args(["construct", "psigma_l2", "3", "3", "--out"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let parsed: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(parsed["degree"], serde_json::json!(28));
    assert_eq!(parsed["name"], serde_json::json!("PSigmaL(2,3^3)"));
    assert_eq!(parsed["generators"].as_array().unwrap().len(), 4);
}

#[test]
fn carter_and_series_on_s4() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.json");
    assert!(bin()
        .args(["construct", "symmetric", "4", "--out"])
        .arg(&path)
        .status()
        .unwrap()
        .success());

    let out = bin().arg("carter").arg(&path).output().unwrap();
    assert!(out.status.success());
    let witnesses: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(witnesses.as_array().unwrap().len(), 1);
    assert_eq!(witnesses[0]["order"], serde_json::json!("8"));

    let out = bin()
        .args(["series", "--kind", "rc"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let series: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        series["term_orders"],
        serde_json::json!(["24", "12", "4", "2", "1"])
    );
}

#[test]
fn verify_exits_zero_on_pass() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f21.json");
    assert!(bin()
        .args(["construct", "frobenius", "7", "3", "--out"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    let out = bin().arg("verify").arg(&path).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["verdict"] == serde_json::json!("pass")));
}

#[test]
fn corpus_subcommand_small_corpus() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.json");
    std::fs::write(
        &corpus,
        r#"[
            {"name": "Z6", "spec": {"family": "cyclic", "m": 6},
             "checks": [{"check": "gjh"}, {"check": "main_theorem"}]},
            {"name": "S4", "spec": {"family": "symmetric", "n": 4},
             "checks": [{"check": "sylow", "p": 3}]}
        ]"#,
    )
    .unwrap();
    let catalog = dir.path().join("catalog.json");
    let out = bin()
        .arg("corpus")
        .arg("--corpus")
        .arg(&corpus)
        .arg("--out")
        .arg(&catalog)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let reports: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&catalog).unwrap()).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 3);
    // sorted by (group, check)
    assert_eq!(reports[0]["group"], serde_json::json!("S4"));
}

#[test]
fn config_env_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.json");
    assert!(bin()
        .args(["construct", "symmetric", "4", "--out"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    let config = dir.path().join("config.json");
    std::fs::write(&config, r#"{"cap_degree": 2}"#).unwrap();
    // flag would allow degree 4, but the env config wins and forbids it
    let out = bin()
        .args(["carter", "--cap-degree", "100"])
        .arg(&path)
        .env("CARTER_KIT_CONFIG", &config)
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds cap"));
}

#[test]
fn induced_aut_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("s4.json");
    let a = dir.path().join("v4.json");
    let b = dir.path().join("triv.json");
    assert!(bin()
        .args(["construct", "symmetric", "4", "--out"])
        .arg(&g)
        .status()
        .unwrap()
        .success());
    std::fs::write(
        &a,
        r#"{"name": "V4", "degree": 4, "generators": [[1,0,3,2],[2,3,0,1]]}"#,
    )
    .unwrap();
    std::fs::write(&b, r#"{"name": "1", "degree": 4, "generators": []}"#).unwrap();
    let out = bin()
        .arg("induced-aut")
        .arg(&g)
        .arg("--a")
        .arg(&a)
        .arg("--b")
        .arg(&b)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["image_order"], serde_json::json!("6"));
    assert_eq!(v["kernel_order"], serde_json::json!("4"));
}

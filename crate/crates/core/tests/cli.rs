use std::process::{Command, Output};

fn permsyz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permsyz")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn golden_outputs() {
    let cases: [(&[&str], &str); 4] = [
        (&["betti", "--n", "3", "--method", "resolve", "--format", "json"], "betti_n3_resolve.json"),
        (&["betti", "--n", "4", "--format", "csv"], "betti_n4_summation.csv"),
        (&["betti", "--n", "5", "--method", "ghsw", "--format", "md"], "betti_n5_ghsw.md"),
        (&["equivariant", "--n", "3", "--g2", "--format", "md"], "equivariant_n3_g2.md"),
    ];
    for (args, file) in cases {
        let o = permsyz(args);
        assert!(o.status.success(), "{args:?}");
        assert_eq!(stdout(&o), golden(file), "{args:?}");
    }
}

#[test]
fn betti_examples() {
    let o = permsyz(&["betti", "--n", "4", "--method", "summation", "--format", "csv"]);
    assert!(stdout(&o).lines().any(|l| l == "1,4,22"));
    let o = permsyz(&["betti", "--n", "2", "--method", "descriptors", "--format", "csv"]);
    assert_eq!(stdout(&o), "p,q,dim\n0,2,1\n");
    let o = permsyz(&["betti", "--n", "3", "--ideal", "D", "--method", "resolve", "--format", "csv"]);
    let closed = permsyz(&["betti", "--n", "3", "--ideal", "D", "--method", "closed", "--format", "csv"]);
    assert_eq!(stdout(&o), stdout(&closed));
}

#[test]
fn exit_codes() {
    assert_eq!(permsyz(&["verify", "tor", "--n", "3"]).status.code(), Some(0));
    assert_eq!(permsyz(&["betti", "--n", "5", "--method", "resolve"]).status.code(), Some(3));
    assert_eq!(permsyz(&["verify", "characters", "--n", "5"]).status.code(), Some(3));
    assert_eq!(permsyz(&["verify", "hilbert", "--n", "2", "--max-degree", "99"]).status.code(), Some(3));
    assert_eq!(permsyz(&["betti", "--n", "1"]).status.code(), Some(2));
    assert_eq!(permsyz(&["betti", "--n", "3", "--ideal", "D", "--method", "ghsw"]).status.code(), Some(2));
    assert_eq!(permsyz(&["betti", "--method", "nope"]).status.code(), Some(2));
}

#[test]
fn crosscheck_flags_without_failing() {
    let o = permsyz(&["verify", "crosscheck", "--n-max", "10", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["summary"]["mismatch"], 0);
    let flagged: Vec<&str> = report["items"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|it| it["status"] == "documented-discrepancy")
        .map(|it| it["id"].as_str().unwrap())
        .collect();
    assert!(flagged.contains(&"n=4 p=2 q=6"));
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "hilbert", "--n", "5", "--max-degree", "8"][..],
        &["verify", "characters", "--n", "3", "--ideal", "D"],
        &["verify", "all", "--n", "3", "--n-max", "6", "--jobs", "2"],
    ] {
        let o = permsyz(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("permsyz-cli-{}.json", std::process::id()));
    let o = permsyz(&["betti", "--n", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text, golden("betti_n3_resolve.json").replace("\"resolve\"", "\"summation\""));
}

#[test]
fn deterministic_output() {
    let a = permsyz(&["equivariant", "--n", "5", "--format", "json"]);
    let b = permsyz(&["equivariant", "--n", "5", "--format", "json", "--jobs", "1"]);
    assert_eq!(a.stdout, b.stdout);
}

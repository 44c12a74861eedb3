use std::process::{Command, Output};

use serde_json::Value;

fn thetalie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetalie")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn build_reports_dimensions() {
    for (t, dim, fixed) in [("A2", 8, 3), ("E6", 78, 36), ("E7", 133, 63)] {
        let out = thetalie(&["build", "--type", t]);
        assert!(out.status.success(), "{t}");
        let v = json(&out);
        assert_eq!(v["dim"], dim);
        assert_eq!(v["fixed_dim"], fixed);
        assert_eq!(v["basis"].as_array().unwrap().len(), dim);
        assert_eq!(v["root_data"]["roots"].as_array().unwrap().len(), dim - v["rank"].as_u64().unwrap() as usize);
    }
}

#[test]
fn build_exports_the_representation_only_for_e6_and_e7() {
    let e6 = json(&thetalie(&["build", "--type", "E6"]));
    assert_eq!(e6["rep"]["dim"], 8);
    assert_eq!(e6["rep"]["matrices"].as_array().unwrap().len(), 64);
    assert_eq!(e6["identification"]["kind"], "symplectic");
    let d4 = json(&thetalie(&["build", "--type", "D4"]));
    assert!(d4.get("rep").is_none());
}

#[test]
fn build_writes_to_a_file() {
    let dir = std::env::temp_dir().join(format!("thetalie-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e7.json");
    let out = thetalie(&["build", "--type", "E7", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim"], 133);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_is_byte_identical_across_runs() {
    for args in [
        &["build", "--type", "E6"][..],
        &["verify", "--type", "E8", "--depth", "sampled", "--seed", "7"],
        &["table", "real-orbits"],
    ] {
        assert_eq!(thetalie(args).stdout, thetalie(args).stdout, "{args:?}");
    }
}

#[test]
fn verify_passes_for_the_exceptional_types() {
    let e6 = thetalie(&["verify", "--type", "E6", "--depth", "exhaustive"]);
    assert!(e6.status.success());
    let v = json(&e6);
    assert_eq!(v["passed"], true);
    let jacobi = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "jacobi").unwrap();
    assert_eq!(jacobi["checked"], 78u64.pow(3));
    assert_eq!(v["group_lift"]["phi"].as_array().unwrap().len(), 72);

    assert_eq!(thetalie(&["verify", "--type", "E7"]).status.code(), Some(0));

    let e8 = thetalie(&["verify", "--type", "E8", "--depth", "sampled", "--seed", "7"]);
    assert!(e8.status.success());
    let v = json(&e8);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["depth"], "sampled");
    let jacobi = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "jacobi").unwrap();
    assert_eq!(jacobi["checked"], 20_000);
}

#[test]
fn tables_and_counts() {
    let table = thetalie(&["table", "real-orbits"]);
    assert!(table.status.success());
    let v = json(&table);
    let orbits: Vec<u64> = v["rows"].as_array().unwrap().iter().map(|r| r["orbits"].as_u64().unwrap()).collect();
    assert_eq!(orbits, [36, 10, 3, 1, 3]);

    let dp = json(&thetalie(&["delpezzo"]));
    assert_eq!(dp, serde_json::json!({"e7_roots": 126, "e6_roots": 72, "lines": 56, "meeting_e": 27}));

    let counts = json(&thetalie(&["counts", "--g", "3"]));
    assert_eq!((counts["even"].as_u64(), counts["odd"].as_u64()), (Some(36), Some(28)));
}

#[test]
fn quartic_reports_contact_and_verdict() {
    let out = thetalie(&["quartic", "e6", "--params", "0,0,0,0,0,0", "--probe", "5,7,11"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["contact_order"], 4);
    assert_eq!(v["verdict"]["kind"], "singular");
    assert_eq!(v["verdict"]["witness"], serde_json::json!(["0", "0", "1"]));

    let out = thetalie(&["quartic", "e7", "--params", "1,-2,0,1/2,3,0,1"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["contact_order"], 3);
}

#[test]
fn bad_input_exits_nonzero() {
    for args in [
        &["build", "--type", "F4"][..],
        &["build", "--type", "E9"],
        &["quartic", "e6", "--params", "1,2"],
        &["quartic", "e6", "--params", "0,0,0,0,0,0", "--probe", "4"],
        &["quartic", "e6", "--params", "0,0,0,0,0,0", "--probe", "1009"],
    ] {
        let out = thetalie(args);
        assert!(!out.status.success(), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn thread_count_comes_from_the_environment() {
    let out =
        Command::new(env!("CARGO_BIN_EXE_thetalie")).args(["counts", "--g", "2"]).env("THETALIE_THREADS", "2").output().unwrap();
    assert!(out.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_thetalie"))
        .args(["counts", "--g", "2"])
        .env("THETALIE_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

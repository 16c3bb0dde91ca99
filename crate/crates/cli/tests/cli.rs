use std::process::{Command, Output};

use serde_json::Value;

fn s2kit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_s2kit")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_depth_one_and_depth_two_instances() {
    for id in ["depth1-n6m4", "depth2-l3m2"] {
        let out = s2kit(&["verify", id, "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{id}");
        let doc = json(&out);
        assert_eq!(doc["ok"], true);
        assert_eq!(doc["reports"][0]["id"], id);
    }
}

#[test]
fn verify_all_passes() {
    let out = s2kit(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn tampered_registry_exits_one() {
    let mut reg: Value = serde_json::from_str(s2kit::registry::EMBEDDED_REGISTRY).unwrap();
    let ex = reg["examples"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|e| e["id"] == "fiber-q-x1sq-d2")
        .unwrap();
    let claim = ex["expect"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|c| c["claim"] == "length_b_over_a")
        .unwrap();
    claim["value"] = Value::from(3);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("families.json");
    std::fs::write(&path, serde_json::to_string(&reg).unwrap()).unwrap();
    let out = s2kit(&["verify", "fiber-q-x1sq-d2", "--registry", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = json(&out);
    let claims = doc["reports"][0]["claims"].as_array().unwrap();
    let c = claims.iter().find(|c| c["claim"] == "length_b_over_a").unwrap();
    assert_eq!(c["status"], "fail");
    assert_eq!(c["computed"], 2);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(s2kit(&["verify", "no-such-example"]).status.code(), Some(2));
    assert_eq!(s2kit(&["semigroup", "--gens", "4,6"]).status.code(), Some(2));
    assert_eq!(s2kit(&["family", "--n", "3", "--sets", "1;1,2"]).status.code(), Some(2));
    assert_eq!(s2kit(&["suite", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(s2kit(&["verify", "all", "--field", "fp:4"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(s2kit(&["verify", "all", "--registry", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn suite_is_byte_identical_for_a_seed() {
    let a = s2kit(&["suite", "--seed", "3", "--trials", "25", "--format", "json"]);
    let b = s2kit(&["suite", "--seed", "3", "--trials", "25", "--format", "json", "--jobs", "1"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc = json(&a);
    let ids: Vec<&str> = doc["reports"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["lemma-identity", "conductor-routes", "auslander-buchsbaum", "s2-oracle"]);
}

#[test]
fn minimal_suite_run() {
    let out = s2kit(&["suite", "--trials", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["reports"][0]["claims"][0]["computed"], 1);
}

#[test]
fn semigroup_and_subalgebra_commands() {
    let out = s2kit(&["semigroup", "--gens", "3,4", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let claims = &json(&out)["reports"][0]["claims"];
    let get = |id: &str| claims.as_array().unwrap().iter().find(|c| c["claim"] == id).unwrap()["computed"].clone();
    assert_eq!(get("conductor"), 6);
    assert_eq!(get("symmetric"), true);

    let out = s2kit(&["subalgebra", "--gens", "t^2+t^3,t^4,t^6", "--field", "f2", "--prec", "40", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let claims = &json(&out)["reports"][0]["claims"];
    let vals = claims.as_array().unwrap().iter().find(|c| c["claim"] == "valuations").unwrap()["computed"].clone();
    let vals: Vec<u64> = serde_json::from_value(vals).unwrap();
    assert!(vals.contains(&7) && !vals.contains(&5) && !vals.contains(&3));
}

#[test]
fn family_command_with_probes() {
    let out = s2kit(&[
        "family",
        "--n",
        "6",
        "--sets",
        "1,2,3,4;3,4,5,6;5,6,1,2",
        "--probes",
        "x1+x3+x5;x2+x4+x6",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let claims = &json(&out)["reports"][0]["claims"];
    let get = |id: &str| claims.as_array().unwrap().iter().find(|c| c["claim"] == id).unwrap()["computed"].clone();
    assert_eq!(get("depth_a"), 1);
    assert_eq!(get("generation_by_probes"), true);
}

#[test]
fn list_prints_every_id() {
    let out = s2kit(&["list"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), s2kit::registry::Registry::embedded().examples.len());
}

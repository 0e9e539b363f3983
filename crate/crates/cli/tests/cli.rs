//! End-to-end tests of the `stokes` binary: command behavior, determinism of
//! report bodies, and exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use stokes_core::complex::{CellularAction, StratComplex2};
use stokes_core::group::LabelGroup;
use stokes_core::json;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stokes"))
}

fn write_fixtures(dir: &Path) -> std::io::Result<()> {
    let c4 = StratComplex2::cycle(4).unwrap();
    std::fs::write(dir.join("cycle4.json"), json::complex_to_json(&c4))?;
    let c8 = StratComplex2::cycle(8).unwrap();
    std::fs::write(dir.join("cycle8.json"), json::complex_to_json(&c8))?;
    let mu2 = CellularAction::cycle_rotation(&c8, 2).unwrap();
    std::fs::write(dir.join("mu2.json"), json::action_to_json(&c8, &mu2))?;
    let z2 = LabelGroup::cyclic(2).unwrap();
    std::fs::write(dir.join("z2.json"), json::group_to_json(&z2))?;
    let z3 = LabelGroup::cyclic(3).unwrap();
    std::fs::write(dir.join("z3.json"), json::group_to_json(&z3))?;
    std::fs::write(
        dir.join("z2_target.json"),
        format!("{{ \"one_object_group\": {} }}", json::group_to_json(&z2)),
    )?;
    Ok(())
}

fn args_of(dir: &Path, parts: &[&str]) -> Vec<String> {
    parts
        .iter()
        .map(|p| {
            if p.ends_with(".json") {
                dir.join(p).display().to_string()
            } else {
                p.to_string()
            }
        })
        .collect()
}

fn run(dir: &Path, parts: &[&str]) -> Output {
    bin().args(args_of(dir, parts)).output().expect("binary runs")
}

fn body(output: &Output) -> serde_json::Value {
    let v: serde_json::Value =
        serde_json::from_slice(&output.stdout).expect("stdout is a JSON report");
    v["body"].clone()
}

#[test]
fn cocycles_counts_match_the_model() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    let out = run(dir.path(), &["cocycles", "--complex", "cycle4.json", "--group", "z2.json", "--orbits"]);
    assert!(out.status.success());
    let b = body(&out);
    assert_eq!(b["result"]["cocycle_count"], 16);
    assert_eq!(b["result"]["orbit_count"], 2);
}

#[test]
fn descent_reports_equality() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    let out = run(
        dir.path(),
        &["descent", "--complex", "cycle8.json", "--group", "z3.json", "--action", "mu2.json"],
    );
    assert!(out.status.success());
    let b = body(&out);
    assert_eq!(b["result"]["equal"], true);
    assert_eq!(b["result"]["upstairs_hfp"], b["result"]["downstairs"]);
}

#[test]
fn report_bodies_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    let args = ["cocycles", "--complex", "cycle4.json", "--group", "z2.json", "--orbits"];
    let a = body(&run(dir.path(), &args));
    let b = body(&run(dir.path(), &args));
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap(),
        "identical configuration must give a byte-identical body"
    );
}

#[test]
fn glp_check_is_seeded_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(dir.path(), &["glp-check", "--k", "2", "--n", "1", "--trials", "200", "--seed", "9"]);
    assert!(out.status.success());
    let b = body(&out);
    assert_eq!(b["result"]["pass"], true);
    let again = body(&run(dir.path(), &["glp-check", "--k", "2", "--n", "1", "--trials", "200", "--seed", "9"]));
    assert_eq!(b["result"]["max_assoc_err"], again["result"]["max_assoc_err"]);
}

#[test]
fn exit_codes_are_distinct() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();

    // unknown command: usage error 2
    let out = bin().arg("frobnicate").output().unwrap();
    assert_eq!(out.status.code(), Some(2));

    // malformed JSON: parse error 3
    std::fs::write(dir.path().join("bad.json"), "{ nope").unwrap();
    let out = run(dir.path(), &["cocycles", "--complex", "bad.json", "--group", "z2.json"]);
    assert_eq!(out.status.code(), Some(3));

    // cap exceeded: 4
    let out = bin()
        .args(args_of(
            dir.path(),
            &["cocycles", "--complex", "cycle8.json", "--group", "z3.json", "--cap", "10"],
        ))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));

    // missing file: 5
    let out = run(dir.path(), &["cocycles", "--complex", "absent.json", "--group", "z2.json"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn stokes_cap_env_var_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    let out = bin()
        .env("STOKES_CAP", "10")
        .args(args_of(dir.path(), &["cocycles", "--complex", "cycle4.json", "--group", "z2.json"]))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn suite_aggregates_and_continues_past_failures() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    let path = |p: &str| dir.path().join(p).display().to_string();

    // all-pass manifest
    let manifest = serde_json::json!({
        "experiments": [
            { "name": "micro", "args": ["cocycles", "--complex", path("cycle4.json"), "--group", path("z2.json"), "--orbits"] },
            { "name": "descent", "args": ["descent", "--complex", path("cycle8.json"), "--group", path("z3.json"), "--action", path("mu2.json")] },
            { "name": "chart", "args": ["glp-check", "--k", "2", "--n", "2", "--trials", "100", "--seed", "1"] }
        ]
    });
    std::fs::write(dir.path().join("manifest.json"), manifest.to_string()).unwrap();
    let out = run(dir.path(), &["suite", "--manifest", "manifest.json"]);
    assert!(out.status.success());
    let b = body(&out);
    assert_eq!(b["result"]["all_pass"], true);

    // empty manifest passes
    std::fs::write(dir.path().join("empty.json"), r#"{ "experiments": [] }"#).unwrap();
    let out = run(dir.path(), &["suite", "--manifest", "empty.json"]);
    assert!(out.status.success());

    // one failing experiment marks the aggregate failed but others report
    let manifest = serde_json::json!({
        "experiments": [
            { "name": "broken", "args": ["cocycles", "--complex", path("absent.json"), "--group", path("z2.json")] },
            { "name": "fine", "args": ["glp-check", "--trials", "50"] }
        ]
    });
    std::fs::write(dir.path().join("mixed.json"), manifest.to_string()).unwrap();
    let out = run(dir.path(), &["suite", "--manifest", "mixed.json"]);
    assert_eq!(out.status.code(), Some(1));
    let b = body(&out);
    assert_eq!(b["result"]["all_pass"], false);
    assert_eq!(b["result"]["experiments"][1]["pass"], true);
}

#[test]
fn pushout_curve_and_unipotent_commands() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();

    // interval cospan: one class into any connected target
    let cospan = serde_json::json!({
        "left": { "objects": ["a"], "generators": [], "relations": [] },
        "middle": { "objects": ["b"], "generators": [], "relations": [] },
        "right": { "objects": ["c"], "generators": [], "relations": [] },
        "into_left": { "objects": { "b": "a" }, "generators": {} },
        "into_right": { "objects": { "b": "c" }, "generators": {} }
    });
    std::fs::write(dir.path().join("cospan.json"), cospan.to_string()).unwrap();
    let out = run(
        dir.path(),
        &["pushout", "--cospan", "cospan.json", "--target", "z2_target.json"],
    );
    assert!(out.status.success());
    let b = body(&out);
    assert_eq!(b["result"]["pushout_classes"], 1);
    assert_eq!(b["result"]["equal"], true);

    // curve: the gluing audit passes and the functor count is the frozen 8
    let z2: serde_json::Value =
        serde_json::from_str(&json::group_to_json(&LabelGroup::cyclic(2).unwrap())).unwrap();
    let curve = serde_json::json!({
        "interior": {
            "objects": ["*"],
            "generators": [ { "id": "delta", "src": "*", "dst": "*" } ],
            "relations": []
        },
        "punctures": [ {
            "pole_order": 2, "level": 1, "group": z2,
            "transitions": ["1", "1"], "peripheral": ["delta"]
        } ]
    });
    std::fs::write(dir.path().join("curve.json"), curve.to_string()).unwrap();
    let out = run(dir.path(), &["curve", "--spec", "curve.json", "--target", "z2_target.json"]);
    assert!(out.status.success());
    let b = body(&out);
    assert_eq!(b["result"]["functor_count"], 8);
    assert_eq!(b["result"]["gluing_holds"], true);

    // unipotent: Heisenberg over F_2 has order 8 and emits matrices
    let out = bin()
        .args(["unipotent", "--dims", "1,1,1", "--prime", "2", "--emit-group"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let b = body(&out);
    assert_eq!(b["result"]["order"], 8);
    assert_eq!(b["result"]["matches_formula"], true);
    assert_eq!(b["result"]["group"]["matrices"].as_array().unwrap().len(), 8);
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    write_fixtures(dir.path()).unwrap();
    let report: PathBuf = dir.path().join("report.json");
    let out = bin()
        .args(args_of(dir.path(), &["cocycles", "--complex", "cycle4.json", "--group", "z2.json"]))
        .arg("--output")
        .arg(&report)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = std::fs::read_to_string(&report).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["body"]["result"]["cocycle_count"], 16);
}

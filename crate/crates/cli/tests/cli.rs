use serde_json::{json, Value};
use smt_cli::{run, RunResult, EXIT_BOUND, EXIT_CHECK, EXIT_OK, EXIT_USAGE};
use smt_core::characters::{char_from_paths, FormalCharacter};
use smt_core::lspath::{PathModel, PathRecord};
use smt_core::weyl::{Family, RootSystem, Weight};

fn smt(args: &str) -> RunResult {
    run(std::iter::once("smt").chain(args.split_whitespace()))
}

fn json_of(args: &str) -> Value {
    let r = smt(args);
    assert_eq!(r.code, EXIT_OK, "{args}: {}", r.stderr);
    serde_json::from_str(&r.stdout).unwrap()
}

#[test]
fn enumerate_paths_a1() {
    let v = json_of("enumerate-paths --type A --rank 1 --lambda 2");
    assert_eq!(v.as_array().unwrap().len(), 3);
}

#[test]
fn path_records_round_trip() {
    let r = smt("enumerate-paths --type A --rank 2 --lambda 2,1");
    let records: Vec<PathRecord> = serde_json::from_str(&r.stdout).unwrap();
    let model = PathModel::new(&RootSystem::new(Family::A, 2).unwrap(), &Weight(vec![2, 1])).unwrap();
    assert_eq!(records.len(), model.len());
    for (rec, p) in records.iter().zip(model.paths()) {
        let back = model.from_record(rec).unwrap();
        assert_eq!(&back, p.as_convex());
        assert_eq!(&model.to_record(&back), rec);
    }
    assert_eq!(serde_json::to_string_pretty(&records).unwrap() + "\n", r.stdout);
}

#[test]
fn character_round_trip() {
    let r = smt("character --type B --rank 2 --lambda 1,1");
    let c: FormalCharacter = serde_json::from_str(&r.stdout).unwrap();
    let model = PathModel::new(&RootSystem::new(Family::B, 2).unwrap(), &Weight(vec![1, 1])).unwrap();
    assert_eq!(c, char_from_paths(&model));
    assert_eq!(serde_json::to_string_pretty(&c).unwrap() + "\n", r.stdout);
}

#[test]
fn character_comparison() {
    assert_eq!(json_of("character --type A --rank 2 --lambda 1,1 --oracle weyl --compare paths"), json!({ "equal": true }));
    assert_eq!(json_of("character --type G --rank 2 --lambda 1,0 --oracle demazure --compare weyl"), json!({ "equal": true }));
}

#[test]
fn richardson_status() {
    assert_eq!(json_of("richardson --type A --rank 2 --tau s1.s2 --kappa s1"), json!({ "dimension": 1 }));
    assert_eq!(json_of("richardson --type A --rank 2 --tau s1 --kappa s2"), json!({ "empty": true }));
}

#[test]
fn richardson_counts() {
    let v = json_of("richardson --type A --rank 3 --lambda 0,1,0 --tau s2.s1.s3.s2 --op count --degree 2");
    assert_eq!(v, json!({ "count": 20 }));
    let args = ["smt", "richardson", "--type", "A", "--rank", "2", "--lambda", "1,0", "--parabolic", "", "--tau", "s1.s2"];
    let r = run(args.iter().chain(&["--op", "count", "--degree", "2"]).copied());
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(v["count"].as_u64().unwrap() > 0);
    let v = json_of("richardson --type A --rank 2 --lambda 1,1 --tau s1.s2.s1 --op check --degree 3");
    assert_eq!(v, json!({ "hilbert_recursion": true }));
}

#[test]
fn straighten_gr24() {
    let v = json_of("straighten --n 4 --d 2 --pair 14,23");
    assert_eq!(v["lhs"], json!(["14", "23"]));
    let pairs: Vec<&Value> = v["rhs"].as_array().unwrap().iter().map(|t| &t["pair"]).collect();
    assert_eq!(pairs, vec![&json!(["24", "13"]), &json!(["34", "12"])]);
    for t in v["rhs"].as_array().unwrap() {
        assert!(matches!(t["coeff"].as_str().unwrap(), "1" | "-1"));
    }
}

#[test]
fn pieri_table_a1() {
    let v = json_of("pieri --type A --rank 1 --lambda 2 --tau s1");
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows[0]["kappa"], "e");
    assert_eq!(rows[0]["count"], 2);
    assert_eq!(rows[1]["count"], 1);
}

#[test]
fn degeneration_check_command() {
    let v = json_of("check degeneration --type A --rank 2 --lambda 1,1 --n 2");
    assert_eq!(v["passed"], true);
}

#[test]
fn csv_character_rows() {
    let r = smt("demazure --type A --rank 2 --lambda 1,0 --tau s1 --format csv");
    assert_eq!(r.stdout, "weight.0,weight.1,coeff\n-1,1,1\n1,0,1\n");
}

#[test]
fn exit_codes() {
    assert_eq!(smt("bogus").code, EXIT_USAGE);
    assert_eq!(smt("character --type A --rank 2 --lambda 1").code, EXIT_USAGE);
    assert_eq!(smt("character --type A --rank 2 --lambda -1,0").code, EXIT_USAGE);
    assert_eq!(smt("straighten --n 4 --d 2 --pair 12,34").code, EXIT_USAGE);
    assert_eq!(smt("--max-group-size 10 character --type A --rank 3 --lambda 1,1,1").code, EXIT_BOUND);
    assert_eq!(smt("--help").code, EXIT_OK);
}

#[test]
fn failed_check_exit_code() {
    assert_eq!(smt("check --suite 99").code, EXIT_USAGE);
    assert_ne!(EXIT_CHECK, EXIT_OK);
}

#[test]
fn deterministic_output() {
    let args = "straighten --n 5 --d 2 --pair 15,23 --seed 7";
    assert_eq!(smt(args), smt(args));
}

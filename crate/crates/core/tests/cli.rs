mod common;

use std::process::{Command, Output};

use bslab::degeneration::Example3Report;
use bslab::section::{BasisReport, GradedDimensionTable};

fn bslab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bslab"))
        .args(args)
        .env_remove("BSLAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bslab(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn column_sets_of_rank_four() {
    let text = stdout(&["column-sets", "--n", "4"]);
    let expected = "C^(1) = {2}\nC^(2) = {2,3}\nC^(3) = {3}\nC^(4) = {2,3,4}\nC^(5) = {3,4}\nC^(6) = {4}\n";
    assert_eq!(text, expected);
}

#[test]
fn dimension_of_the_threefold() {
    assert_eq!(stdout(&["dim"]), "13\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["dim", "--format", "json"])).unwrap();
    assert_eq!(json["dimension"], 13);
}

#[test]
fn hilbert_table_and_polynomial() {
    let text = stdout(&["hilbert", "--dmax", "5"]);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "d\tdim");
    for d in 0..=5u64 {
        assert_eq!(lines[d as usize + 1], format!("{d}\t{}", common::threefold_hp(d)));
    }
    assert_eq!(lines[7], "HP(d) = (5*d^3 + 11*d^2 + 8*d + 2)/2");

    let table: GradedDimensionTable =
        serde_json::from_str(&stdout(&["hilbert", "--dmax", "5", "--format", "json"])).unwrap();
    assert_eq!(table.entries, (0..=5).map(common::threefold_hp).collect::<Vec<_>>());
    let hp = table.interpolated.unwrap();
    for d in 0..10i64 {
        assert_eq!(hp.eval_int(d), num_rational::BigRational::from_integer(common::threefold_hp(d as u64).into()));
    }
}

#[test]
fn short_tables_carry_no_polynomial() {
    let text = stdout(&["hilbert", "--dmax", "2"]);
    assert!(text.ends_with("HP(d) needs dmax >= 4\n"), "{text}");
}

#[test]
fn output_is_reproducible() {
    for args in [
        &["points", "--format", "json"][..],
        &["basis-report", "--seed", "9", "--format", "json"][..],
        &["verify-example3", "--format", "json"][..],
        &["enumerate", "--straight"][..],
    ] {
        assert_eq!(stdout(args), stdout(args), "{args:?}");
    }
}

#[test]
fn basis_report_round_trips() {
    let report: BasisReport =
        serde_json::from_str(&stdout(&["basis-report", "--seed", "4", "--format", "json"])).unwrap();
    assert!(report.is_basis());
    assert_eq!(report.straight_count, 13);
    let pre = report.precheck.unwrap();
    assert_eq!(pre.seed, 4);
    assert!(pre.independent);
}

#[test]
fn seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_bslab"))
        .args(["basis-report", "--format", "json"])
        .env("BSLAB_SEED", "17")
        .output()
        .unwrap();
    let report: BasisReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report.precheck.unwrap().seed, 17);

    let out = Command::new(env!("CARGO_BIN_EXE_bslab"))
        .args(["basis-report"])
        .env("BSLAB_SEED", "seventeen")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn example3_report_round_trips() {
    let report: Example3Report = serde_json::from_str(&stdout(&["verify-example3", "--format", "json"])).unwrap();
    assert!(report.pass);
    assert!(report.failures().is_empty());
    assert_eq!(report.dmax, 4);
}

#[test]
fn straighten_inline_and_from_file() {
    let doc = r#"{"n":3,"m":[1,1,1],"rows":[[{"column":3,"entry":3}],[{"column":2,"entry":1},{"column":3,"entry":2}],[{"column":2,"entry":1}]]}"#;
    let inline = stdout(&["straighten", "--tableau", doc]);
    assert!(inline.contains("verified: true"), "{inline}");

    let dir = std::env::temp_dir().join(format!("bslab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.json");
    std::fs::write(&path, doc).unwrap();
    let from_file = stdout(&["straighten", "--tableau", &format!("@{}", path.display())]);
    assert_eq!(inline, from_file);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("bslab-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dim.json");
    let path_str = path.to_str().unwrap();
    let out = bslab(&["dim", "--format", "json", "--output", path_str]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["dimension"], 13);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["bogus"][..],
        &["dim", "--m", "1,2"][..],
        &["dim", "--format", "xml"][..],
        &["straighten", "--tableau", "not json"][..],
        &["verify-example3", "--dmax", "2"][..],
        &["enumerate", "--straight", "--row-standard"][..],
    ] {
        let out = bslab(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn rank_four_basis() {
    let text = stdout(&["basis-report", "--n", "4", "--m", "0,0,0,1,1,1"]);
    assert!(text.contains("straight tableaux: 64\n"), "{text}");
    assert!(text.contains("span verified: true\n"));
}

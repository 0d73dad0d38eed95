use std::process::{Command, Output};

use qrook_core::LaurentPoly;

fn qrook(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrook"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rook_json_round_trips() {
    let o = qrook(&["rook", "--board", "stair:2", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let f: LaurentPoly = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(f, LaurentPoly::from_exponents([1, 1, 2]));
}

#[test]
fn rook_all_k_json_and_csv() {
    let o = qrook(&["rook", "--board", "tri:3"]);
    let polys: Vec<LaurentPoly> = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(polys.len(), 4);
    assert_eq!(polys[3], LaurentPoly::zero());

    let o = qrook(&["rook", "--board", "stair:2", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "k,exponent,coefficient\n0,3,1\n1,1,2\n1,2,1\n2,0,1\n"
    );
}

#[test]
fn rook_past_last_column_is_zero() {
    let o = qrook(&["rook", "--board", "stair:2", "--k", "5", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn hit_methods_consistent() {
    for board in ["heights:0,1,2", "stair:3", "gv:2,1", "steps:1x1,2x1"] {
        let o = qrook(&["hit", "--board", board, "--format", "text"]);
        assert_eq!(o.status.code(), Some(0), "{board}");
        assert!(stdout(&o).ends_with("CONSISTENT\n"), "{board}");
    }
    let o = qrook(&["hit", "--board", "stair:3", "--k", "0"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["consistent"], true);
    assert_eq!(v["methods"].as_object().unwrap().len(), 5);
}

#[test]
fn hit_single_method_sums_to_factorial() {
    let o = qrook(&["hit", "--board", "tri:3", "--method", "xi"]);
    let polys: Vec<LaurentPoly> = serde_json::from_str(stdout(&o).trim()).unwrap();
    let total = polys.iter().fold(LaurentPoly::zero(), |acc, f| &acc + f);
    // [3]! = 1 + 2q + 2q^2 + q^3
    assert_eq!(total, LaurentPoly::from_exponents([0, 1, 1, 2, 2, 3]));
}

#[test]
fn matrices_reference_board() {
    let o = qrook(&[
        "matrices",
        "--board",
        "heights:0,1,2",
        "--prime",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "rank,count\n0,1\n1,5\n2,2\n3,0\nTHEOREM1 PASS\n"
    );
}

#[test]
fn matrices_rejects_composite_and_budget() {
    let o = qrook(&["matrices", "--board", "stair:2", "--prime", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qrook(&[
        "matrices", "--board", "stair:3", "--prime", "3", "--budget", "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stats_examples() {
    let val = |args: &[&str]| stdout(&qrook(args)).trim().to_string();
    assert_eq!(val(&["stats", "--word", "3521647", "--stat", "des"]), "3");
    assert_eq!(val(&["stats", "--word", "3521647", "--stat", "maj"]), "10");
    assert_eq!(val(&["stats", "--word", "2,3,1", "--stat", "exc"]), "2");
    // same statistic two ways
    assert_eq!(
        val(&["stats", "--word", "4132", "--stat", "stat3", "--family", "xi"]),
        val(&[
            "stats",
            "--word",
            "4132",
            "--stat",
            "stat1",
            "--variant",
            "3",
            "--family",
            "xi"
        ]),
    );
}

#[test]
fn stats_json() {
    let o = qrook(&[
        "stats", "--word", "2313212", "--stat", "maj", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["stat"], "maj");
    assert_eq!(v["word"], "2313212");
}

#[test]
fn stats_errors_exit_two() {
    assert_eq!(
        qrook(&["stats", "--word", "1223", "--stat", "stat7"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qrook(&["stats", "--word", "12x", "--stat", "des"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qrook(&["stats", "--word", "12", "--stat", "nope"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        qrook(&["stats", "--word", "12", "--stat", "des", "--variant", "9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn bad_board_exits_two() {
    let o = qrook(&["rook", "--board", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn verify_all_small() {
    let o = qrook(&["verify", "--suite", "all", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(!out.lines().any(|l| l.starts_with("FAIL")));
    let last = out.lines().last().unwrap();
    assert!(
        last.starts_with("TOTAL pass=") && last.ends_with(" fail=0"),
        "{last}"
    );
}

#[test]
fn table_is_deterministic() {
    let a = qrook(&["table", "--family", "mat", "--n", "4"]);
    let b = qrook(&["table", "--family", "mat", "--n", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 25);
    assert_eq!(qrook(&["table", "--n", "0"]).status.code(), Some(2));
}

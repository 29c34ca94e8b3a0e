use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negalcd")).args(args).output().unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn construct_reports_family_codes() {
    let out = run(&["construct", "E2", "--q", "7", "--n", "4", "--lambda", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["d_exact"].as_u64()), (Some(4), Some(2), Some(3)));
    assert_eq!(v["family"], "E2even");
    assert_eq!(v["lcd"]["euclidean"]["lcd"], true);

    let out = run(&["construct", "H3", "--q", "3", "--l", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["q"].as_u64(), v["n"].as_u64(), v["k"].as_u64()), (Some(9), Some(10), Some(9)));
    assert!(v["d_exact"].as_u64().unwrap() >= 2);
    assert_eq!(v["lcd"]["hermitian"]["lcd"], true);
}

#[test]
fn parameter_errors_exit_with_two() {
    let out = run(&["construct", "E3", "--q", "19", "--lambda", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambda"));
    assert_eq!(run(&["construct", "H1", "--q", "13", "--l", "0"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "E9", "--q", "13"]).status.code(), Some(2));
    let out = run(&["verify", "--q", "5", "--n", "3", "--z", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("coefficients not in base field"));
    assert_eq!(run(&["search", "--q-min", "3", "--q-max", "101"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--n", "5", "--q", "13"]).status.code(), Some(2));
    assert_eq!(run(&["table", "7"]).status.code(), Some(2));
}

#[test]
fn verify_exits_three_when_lcd_is_required_but_absent() {
    let out = run(&["verify", "--q", "19", "--n", "20", "--z", "1,19", "--mode", "euclidean"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["verify", "--q", "5", "--n", "3", "--z", "3", "--mode", "euclidean"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "--q", "9", "--n", "10", "--z", "5", "--mode", "hermitian"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(run(&["verify", "--q", "7", "--n", "3", "--z", "3", "--mode", "hermitian"]).status.code(), Some(2));
}

#[test]
fn count_prints_both_values() {
    let v = json(&run(&["count", "--n", "5", "--q", "11"]));
    assert_eq!((v["formula"].as_u64(), v["enumerated"].as_u64()), (Some(6), Some(6)));
    let v = json(&run(&["count", "--n", "4", "--q", "9"]));
    assert_eq!((v["formula"].as_u64(), v["enumerated"].as_u64()), (Some(2), Some(2)));
    let v = json(&run(&["count", "--n", "6", "--q", "13"]));
    assert_eq!((v["formula"].as_u64(), v["enumerated"].as_u64()), (Some(6), Some(6)));
}

#[test]
fn search_examples() {
    let out = run(&["search", "--q-min", "3", "--q-max", "3", "--mode", "euclidean"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let out = run(&["search", "--q-min", "17", "--q-max", "17", "--mode", "euclidean"]);
    let reports: Vec<serde_json::Value> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    for lambda in 1..=3u64 {
        assert!(reports.iter().any(|r| r["n"] == 8
            && r["k"].as_u64() == Some(8 - 2 * lambda)
            && r["d_exact"].as_u64() == Some(2 * lambda + 1)));
    }
}

#[test]
fn tables_write_csv_files_and_flag_typos() {
    let dir = std::env::temp_dir().join(format!("negalcd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t4.csv");
    let out = run(&["table", "4", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let headers = rdr.headers().unwrap().clone();
    let verdict = headers.iter().position(|h| h == "verdict").unwrap();
    let derived = headers.iter().position(|h| h == "derived_value").unwrap();
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 14);
    assert_eq!(&rows[0][verdict], "paper-typo-suspected");
    assert_eq!(&rows[0][derived], "[4,2,3]_25");
    assert!(rows[1..].iter().all(|r| &r[verdict] == "match"));

    let out = run(&["table", "6"]);
    let v = json(&out);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 20);
    assert!(rows.iter().all(|r| r["paper_claim"]["d"].get("at_least").is_some()));
    std::fs::remove_dir_all(&dir).ok();
}

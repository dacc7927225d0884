use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sectorpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn scalar(args: &[&str], quantity: &str) -> f64 {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    text.lines()
        .find_map(|l| {
            let (k, v) = l.split_once(',')?;
            (k == quantity).then(|| v.parse().unwrap())
        })
        .unwrap_or_else(|| panic!("{quantity} missing from {text}"))
}

#[test]
fn norm_examples() {
    assert_eq!(
        scalar(&["norm", "1", "1", "0", "--format", "csv"], "norm"),
        1.0
    );
    assert_eq!(
        scalar(&["norm", "0", "0", "1", "--format", "csv"], "norm"),
        0.5
    );
    assert_eq!(
        scalar(&["norm", "0", "0", "0", "--format", "csv"], "norm"),
        0.0
    );
    assert_eq!(
        scalar(&["norm", "-1", "3", "0", "--format", "csv"], "norm"),
        1.0
    );
}

#[test]
fn norm_verify_reports_the_oracle() {
    let gap = scalar(
        &["norm", "2", "-3", "5", "--verify", "--format", "csv"],
        "gap",
    );
    assert!(gap <= 1e-9);
}

#[test]
fn phi_and_psi_examples() {
    let sq = scalar(&["phi", "1", "0", "--format", "csv"], "phi_squared");
    assert!((sq - 97.254834).abs() < 1e-5);
    let lin = scalar(&["phi", "1", "0", "--format", "csv"], "phi");
    assert!((lin - 9.861787).abs() < 1e-5);
    let d = std::f64::consts::FRAC_1_SQRT_2.to_string();
    let v = scalar(&["psi", &d, &d, "--format", "csv"], "psi");
    assert!((v - 5.414213).abs() < 1e-5);
    assert!((scalar(&["psi", "1", "0.5", "--format", "csv"], "psi") - 3.0).abs() < 1e-12);
}

#[test]
fn witness_flag_names_the_extreme_point() {
    let out = run(&["phi", "1", "0", "--witness", "--format", "csv"]);
    assert!(stdout(&out).contains("witness,+P(t=1)"));
}

#[test]
fn domain_and_usage_errors_exit_2() {
    for args in [
        &["psi", "1", "2"][..],
        &["phi", "0", "0"],
        &["figure", "0"],
        &["figure", "14"],
        &["table", "cubes"],
        &["norm", "1", "x", "0"],
        &["norm", "1", "1", "0", "--verify", "--grid", "1"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn figure_columns_follow_the_captions() {
    for (n, header) in [
        ("1", "lambda,C1,C6,C7"),
        ("9", "lambda,D21,D22,D51"),
        ("13", "lambda,D82,D83,D102"),
    ] {
        let out = run(&["figure", n, "--format", "csv"]);
        let text = stdout(&out);
        assert_eq!(text.lines().next(), Some(header));
        assert_eq!(text.lines().count(), 1 + 513);
        let widths: Vec<usize> = text.lines().map(|l| l.split(',').count()).collect();
        assert!(widths.iter().all(|w| *w == widths[0]));
    }
}

#[test]
fn figure_csv_is_bit_stable_and_out_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("sectorpoly-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig5.csv");
    let a = run(&[
        "figure",
        "5",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    let b = run(&["figure", "5", "--format", "csv"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tables_mark_reference_cells() {
    let text = stdout(&run(&["table", "sectors", "--format", "csv"]));
    assert!(text.contains("Unconditional constants,square,5,5,reference"));
    let markov = text
        .lines()
        .find(|l| l.starts_with("Markov constants,D(pi/4)"))
        .unwrap();
    assert!(markov.ends_with(",computed"));
    let v: f64 = markov.split(',').nth(2).unwrap().parse().unwrap();
    assert!((v - 97.254834).abs() < 1e-5);

    let text = stdout(&run(&["table", "lp", "--format", "csv"]));
    assert!(text.contains("Polarization constants,l2,1,1,reference"));
}

#[test]
fn constants_json_round_trips() {
    let out = run(&["constants", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    let get = |name: &str| {
        rows.iter()
            .find(|r| r[0] == name)
            .map(|r| r[2].as_f64().unwrap())
            .unwrap()
    };
    assert!((get("polarization") - 2.707106781).abs() < 1e-8);
    assert!((get("unconditional") - 10.656854).abs() < 1e-5);
    assert!((get("markov_squared") - 97.254834).abs() < 1e-5);
}

#[test]
fn verify_subset_is_deterministic() {
    let args = [
        "verify",
        "--samples",
        "10",
        "--seed",
        "7",
        "--format",
        "csv",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn zero_tolerance_fails_with_tiny_gaps() {
    let out = run(&[
        "verify",
        "--samples",
        "10",
        "--tolerance",
        "0",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("gap"));
    let text = stdout(&out);
    for line in text.lines().skip(1).filter(|l| l.contains(",FAIL,")) {
        let gap: f64 = line.split(',').nth(2).unwrap().parse().unwrap();
        assert!(gap > 0.0 && gap < 1e-6, "{line}");
    }
}

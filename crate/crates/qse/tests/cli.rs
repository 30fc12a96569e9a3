//! End-to-end tests of the command-line interface through `qse::cli::run`.

use std::fs;
use std::path::Path;

fn run(args: &[&str]) -> i32 {
    let mut argv = vec!["qse"];
    argv.extend_from_slice(args);
    qse::cli::run(argv)
}

fn path_str(p: &Path) -> String {
    p.to_str().unwrap().to_string()
}

#[test]
fn gen_load_verify_round_trip_all_kinds() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(&str, Vec<String>)> = vec![
        ("identity", vec!["--d".into(), "3".into()]),
        ("unitary", vec!["--d".into(), "2".into(), "--seed".into(), "5".into()]),
        ("depolarizing", vec!["--d".into(), "2".into(), "--p".into(), "0.5".into()]),
        ("depolarizing", vec!["--d".into(), "3".into(), "--p".into(), "1".into()]),
        ("pinching", vec!["--d".into(), "3".into()]),
        ("amplitude-damping", vec!["--d".into(), "2".into(), "--gamma".into(), "0.3".into()]),
        ("phase-damping", vec!["--d".into(), "2".into(), "--lambda".into(), "0.4".into()]),
        ("random", vec!["--d".into(), "2".into(), "--rank".into(), "3".into(), "--seed".into(), "9".into()]),
    ];
    for (i, (kind, extra)) in cases.iter().enumerate() {
        let out = dir.path().join(format!("chan{i}.json"));
        let mut args: Vec<&str> = vec!["gen", "--kind", kind, "--out"];
        let out_s = path_str(&out);
        args.push(&out_s);
        let extra_refs: Vec<&str> = extra.iter().map(|s| s.as_str()).collect();
        args.extend(extra_refs);
        assert_eq!(run(&args), 0, "gen {kind} failed");
        // generated channels load and validate
        let loaded = qse::io::load_object(&out).unwrap().into_kraus().unwrap();
        assert!(loaded.to_choi().unwrap().validate().unwrap().pass, "{kind}");
    }
}

#[test]
fn gen_rejects_invalid_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = path_str(&dir.path().join("bad.json"));
    assert_ne!(run(&["gen", "--kind", "depolarizing", "--d", "2", "--p", "1.5", "--out", &out]), 0);
    assert_ne!(run(&["gen", "--kind", "unknown", "--out", &out]), 0);
    assert!(!Path::new(&out).exists());
}

#[test]
fn entropy_of_generated_channels() {
    let dir = tempfile::tempdir().unwrap();
    let dep = path_str(&dir.path().join("dep.json"));
    assert_eq!(run(&["gen", "--kind", "depolarizing", "--d", "2", "--p", "1", "--out", &dep]), 0);
    // map entropy of the fully depolarizing qubit channel at q=2, s=1 is 3/4
    assert_eq!(run(&["map-entropy", "--in", &dep, "--q", "2", "--s", "1"]), 0);
    // entropy command accepts channel files (entropy of the Choi state)
    assert_eq!(run(&["entropy", "--in", &dep, "--q", "1"]), 0);
    // unitary channels have zero map entropy
    let uni = path_str(&dir.path().join("uni.json"));
    assert_eq!(run(&["gen", "--kind", "random", "--d", "2", "--rank", "1", "--out", &uni]), 0);
    assert_eq!(run(&["map-entropy", "--in", &uni, "--q", "2", "--s", "1"]), 0);
    // missing file is an error
    assert_ne!(run(&["entropy", "--in", "/nonexistent.json", "--q", "1"]), 0);
}

#[test]
fn extremal_and_exchange_commands() {
    let dir = tempfile::tempdir().unwrap();
    let chan = path_str(&dir.path().join("chan.json"));
    assert_eq!(run(&["gen", "--kind", "random", "--d", "2", "--rank", "3", "--seed", "4", "--out", &chan]), 0);
    let ex_out = path_str(&dir.path().join("extremal.json"));
    assert_eq!(run(&["extremal", "--in", &chan, "--q", "2", "--s", "1", "--out", &ex_out]), 0);
    // the written extremal set realizes the same channel
    let original = qse::io::load_object(Path::new(&chan)).unwrap().into_kraus().unwrap();
    let extremal = qse::io::load_object(Path::new(&ex_out)).unwrap().into_kraus().unwrap();
    let a = original.to_choi().unwrap();
    let b = extremal.to_choi().unwrap();
    let diff = a.sigma().matrix() - b.sigma().matrix();
    assert!(qse::linalg::max_abs(&diff) < 1e-9);

    assert_eq!(run(&["exchange", "--in", &chan, "--q", "2", "--s", "1"]), 0);
    // generator specs work as channel sources
    assert_eq!(run(&["exchange", "--in", "depolarizing:d=2,p=0.5", "--q", "1"]), 0);
    assert_eq!(run(&["extremal", "--in", "pinching:d=3", "--q", "0.5", "--s", "-1"]), 0);
}

#[test]
fn verify_exit_codes_and_reports() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let report_s = path_str(&report);
    let code = run(&[
        "verify", "additivity", "--d", "2", "--trials", "5", "--seed", "1", "--out", &report_s,
    ]);
    assert_eq!(code, 0);
    let text = fs::read_to_string(&report).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let suite = &parsed.as_array().unwrap()[0];
    assert_eq!(suite["suite"], "additivity");
    assert_eq!(suite["pass"], true);
    let check = &suite["checks"][0];
    for key in ["theorem", "params", "trials", "max_violation", "applicable", "pass"] {
        assert!(check.get(key).is_some(), "missing report key {key}");
    }

    // unknown suite is a usage error
    assert_ne!(run(&["verify", "theorem3", "--trials", "1"]), 0);

    // csv format for reports
    let csv = path_str(&dir.path().join("report.csv"));
    let code = run(&[
        "verify", "schatten", "--d", "2", "--trials", "8", "--format", "csv", "--out", &csv,
    ]);
    assert_eq!(code, 0);
    let text = fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("suite,theorem,q,s,trials,max_violation,applicable,pass"));
}

#[test]
fn verify_theorem_suites_quick() {
    for suite in ["theorem1", "theorem2", "theorem4", "theorem5", "fannes"] {
        let code = run(&["verify", suite, "--d", "2", "--trials", "3", "--seed", "2"]);
        assert_eq!(code, 0, "suite {suite}");
    }
    // exploratory scan flag never changes the exit code
    let code = run(&["verify", "theorem1", "--d", "2", "--trials", "3", "--renyi-scan"]);
    assert_eq!(code, 0);
}

#[test]
fn scan_emits_deterministic_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = path_str(&dir.path().join("scan1.csv"));
    let out2 = path_str(&dir.path().join("scan2.csv"));
    for out in [&out1, &out2] {
        let code = run(&[
            "scan", "--in", "identity:d=2", "--in2", "depolarizing:d=2,p=0.7", "--out", out,
        ]);
        assert_eq!(code, 0);
    }
    let b1 = fs::read(&out1).unwrap();
    let b2 = fs::read(&out2).unwrap();
    assert_eq!(b1, b2, "same configuration must produce identical bytes");
    let text = String::from_utf8(b1).unwrap();
    assert!(text.starts_with("q,s,d,distance,norm_kind,bound_kind,bound_value,valid,observed_delta,sound"));
    // all rows of a valid pair are sound
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",true"), "unsound or malformed row: {line}");
    }

    // identical channels: observed deltas are zero
    let out3 = path_str(&dir.path().join("scan3.csv"));
    assert_eq!(
        run(&["scan", "--in", "identity:d=2", "--in2", "identity:d=2", "--out", &out3]),
        0
    );
    let text = fs::read_to_string(&out3).unwrap();
    for line in text.lines().skip(1) {
        let delta: f64 = line.split(',').nth(8).unwrap().parse().unwrap();
        assert!(delta.abs() < 1e-12);
    }
}

#[test]
fn scan_honors_custom_grids_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = path_str(&dir.path().join("scan.json"));
    let code = run(&[
        "scan",
        "--in",
        "identity:d=2",
        "--in2",
        "depolarizing:d=2,p=0.3",
        "--grid-q",
        "0.5,2",
        "--grid-s",
        "1",
        "--format",
        "json",
        "--out",
        &out,
    ]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    // 2 q-values x 1 s-value x 3 bound kinds
    assert_eq!(rows.as_array().unwrap().len(), 6);
}

#[test]
fn tolerance_env_var_is_honored() {
    // the default tolerance is used unless QSE_TOLERANCE parses
    std::env::set_var("QSE_TOLERANCE", "not-a-number");
    assert_eq!(qse::report::assertion_tolerance(), qse::report::DEFAULT_ASSERT_TOL);
    std::env::set_var("QSE_TOLERANCE", "1e-6");
    assert_eq!(qse::report::assertion_tolerance(), 1e-6);
    std::env::remove_var("QSE_TOLERANCE");
}

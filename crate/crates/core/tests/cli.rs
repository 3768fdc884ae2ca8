use oooooob::cli::{run, CliOutput};
use oooooob::VerificationReport;

fn cli(args: &[&str]) -> CliOutput {
    run(std::iter::once("oooooob").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let o = cli(args);
    assert_eq!(o.code, 0, "{args:?}: {}", o.stderr);
    o.stdout
}

#[test]
fn outcome_and_best_move() {
    assert_eq!(ok(&["outcome", "--variant", "B", "--position", "1,1"]), "N\n");
    assert_eq!(ok(&["outcome", "--variant", "A", "--position", "2,4,6,8"]), "P\n");
    assert_eq!(ok(&["outcome", "--variant", "C", "--position", ""]), "P\n");
    assert_eq!(ok(&["best-move", "--variant", "B", "--position", "2,2"]), "none\n");
    assert_eq!(ok(&["best-move", "--variant", "C", "--position", "3,1,1"]), "none\n");
    assert_eq!(ok(&["best-move", "--variant", "B", "--position", "2,1"]), "2\n");
    assert_eq!(
        ok(&["best-move", "--variant", "C", "--position", "3,1,1", "--format", "json"]),
        "{\"move\":null,\"outcome\":\"P\",\"position\":\"1,1,3\",\"variant\":\"C\"}\n"
    );
}

#[test]
fn echoed_positions_are_canonical() {
    assert_eq!(
        ok(&["outcome", "--variant", "B", "--position", "2,0,1,1", "--format", "json"]),
        "{\"outcome\":\"P\",\"position\":\"1,1,2\",\"variant\":\"B\"}\n"
    );
}

#[test]
fn classify_lists_applicable_rules() {
    assert_eq!(
        ok(&["classify", "--position", "3,3,3,2"]),
        "position (2,3,3,3)\n\
         A version_a_rule N\n\
         B b_k_piles P\n\
         B b_bounded_size P\n\
         B conjecture_b_parity_function hypothesis\n\
         C c_345 P\n\
         C c_bounded3 P\n"
    );
    let out = ok(&["classify", "--position", "1,1,5", "--variant", "B", "--oracle"]);
    assert!(out.contains("B b_strip_ones reduces (5)\n"), "{out}");
    assert!(out.ends_with("B oracle N\n"), "{out}");
}

#[test]
fn enumerate_regions() {
    assert_eq!(ok(&["enumerate", "--region", "counts:1,1"]), "\n1\n2\n1,2\n");
    assert_eq!(ok(&["enumerate", "--region", "piles:2:2"]), "1,1\n1,2\n2,2\n");
    assert_eq!(
        ok(&["enumerate", "--region", "piles:2:2", "--variant", "B", "--format", "csv"]),
        "position,outcome\n\"1,1\",N\n\"1,2\",N\n\"2,2\",P\n"
    );
    assert_eq!(
        ok(&["enumerate", "--region", "piles:1:3", "--variant", "A", "--format", "json"]),
        "{\"position\":\"1\",\"outcome\":\"N\"}\n{\"position\":\"2\",\"outcome\":\"P\"}\n{\"position\":\"3\",\"outcome\":\"N\"}\n"
    );
    assert_eq!(
        ok(&["enumerate", "--region", "piles:3:1", "--variant", "C"]),
        "1,1,1 P\n"
    );
}

/// The published ones-plus-big-pile grid, rendered independently.
fn expected_ones_big_csv() -> String {
    let rows: [&[u32]; 7] = [&[0, 3, 6, 9, 12], &[2, 5, 8, 11], &[0, 4, 7, 10], &[2, 6, 9, 12], &[0, 4, 8, 11], &[2, 6, 10], &[0, 4, 8, 12]];
    let mut s = String::from("n");
    for k in 0..=12 {
        s.push_str(&format!(",{k}"));
    }
    s.push('\n');
    for (n, ps) in rows.iter().enumerate() {
        s.push_str(&n.to_string());
        for k in 0..=12 {
            s.push_str(if ps.contains(&k) { ",P" } else { "," });
        }
        s.push('\n');
    }
    s
}

#[test]
fn grids() {
    let csv = ok(&["grid", "--kind", "ones-big", "--max-n", "6", "--max-k", "12", "--format", "csv"]);
    assert_eq!(csv, expected_ones_big_csv());
    let ascii = ok(&["grid", "--kind", "ones-big", "--max-n", "6", "--max-k", "12", "--format", "ascii"]);
    assert_eq!(ascii.lines().nth(1), Some("n\\k  0  1  2  3  4  5  6  7  8  9 10 11 12"));
    assert_eq!(ascii.lines().nth(2), Some("  0  P        P        P        P        P"));
    assert_eq!(ok(&["grid", "--kind", "small-piles", "--max-a1", "none", "--format", "csv"]), "a3,a2\n");
    let json = ok(&["grid", "--kind", "small-piles", "--format", "json", "--legend"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["pages"].as_array().unwrap().len(), 6);
    assert!(doc["legend"].as_array().unwrap().iter().any(|c| c["mark"] == "dagger"));
}

#[test]
fn verify_reports_parse_under_the_schema() {
    let out = ok(&["verify", "--lemma", "c_345", "--region", "piles:3:6", "--format", "json"]);
    let r: VerificationReport = serde_json::from_str(out.trim()).unwrap();
    assert_eq!((r.classifier.as_str(), r.states_checked, r.mismatch_count), ("c_345", 56, 0));
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    for key in ["classifier", "variant", "region", "states_checked", "applicable", "mismatch_count", "mismatches", "status"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let sum = ok(&["verify", "--lemma", "sum_counterexample", "--format", "json"]);
    let r: VerificationReport = serde_json::from_str(sum.trim()).unwrap();
    assert_eq!(r.assertions.len(), 2);
}

#[test]
fn verify_exit_codes() {
    let o = cli(&["verify", "--lemma", "conjecture_c_mod3", "--region", "counts:2-4,2-4"]);
    assert_eq!(o.code, 1);
    assert!(o.stdout.contains("(1,1,2,2) claimed P oracle N"));
    let partial = cli(&["verify", "--lemma", "c_six_with_ones_as_printed"]);
    assert_eq!(partial.code, 0);
    assert!(partial.stdout.starts_with("PARTIAL"));
    assert_eq!(cli(&["verify", "--lemma", "c_345", "--variant", "B", "--region", "piles:3:3"]).code, 2);
    assert_eq!(cli(&["verify", "--lemma", "b_k_piles", "--region", "piles:4:12", "--budget", "100"]).code, 3);
}

#[test]
fn verify_profiles_and_config() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("profiles.toml");
    std::fs::write(&cfg, "[tiny]\n[[tiny.sweep]]\nlemma = \"c_345\"\nregions = [\"piles:3:3\", \"piles:4:3\"]\n").unwrap();
    let out = ok(&["verify", "--lemma", "c_345", "--profile", "tiny", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 2);
    assert_eq!(cli(&["verify", "--lemma", "b_k_piles", "--profile", "tiny", "--config", cfg.to_str().unwrap()]).code, 2);
    assert_eq!(cli(&["verify", "--lemma", "c_345", "--profile", "nope"]).code, 2);

    let report = dir.path().join("report.jsonl");
    let o = cli(&["verify", "--lemma", "c_ones_big", "--format", "json", "--out", report.to_str().unwrap()]);
    assert_eq!((o.code, o.stdout.as_str()), (0, ""));
    let text = std::fs::read_to_string(&report).unwrap();
    assert_eq!(text.lines().count(), 2);
}

#[test]
fn conjectures_command() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("p.toml");
    std::fs::write(
        &cfg,
        "[small]\n\
         [[small.sweep]]\nlemma = \"conjecture_b_parity\"\nregions = [\"piles:5:6\"]\n\
         [[small.sweep]]\nlemma = \"conjecture_b_parity_function\"\nregions = [\"counts:3,3,4\"]\n\
         [[small.sweep]]\nlemma = \"conjecture_c_mod3\"\nregions = [\"counts:2-3,2-3,2-3\"]\n",
    )
    .unwrap();
    let o = cli(&["conjectures", "--profile", "small", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.code, 0, "{}", o.stdout);
    assert_eq!(o.stdout.lines().filter(|l| l.starts_with("PASS")).count(), 3);
}

#[test]
fn usage_and_budget_errors() {
    assert_eq!(cli(&["outcome", "--variant", "B", "--position", "1,-2"]).code, 2);
    assert_eq!(cli(&["classify"]).code, 2);
    assert_eq!(cli(&["verify", "--lemma", "no_such_rule"]).code, 2);
    assert_eq!(cli(&["enumerate", "--region", "cubes:3"]).code, 2);
    let o = cli(&["outcome", "--variant", "A", "--position", "8,8,8,8,8,8", "--budget", "50"]);
    assert_eq!(o.code, 3);
    assert!(o.stdout.is_empty());
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["verify", "--lemma", "conjecture_c_mod3", "--region", "counts:2-5,2-5", "--format", "json"];
    let a = cli(&args);
    let b = cli(&[&args[..], &["--jobs", "3"]].concat());
    assert_eq!(a, b);
}

#[test]
fn binary_runs() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_oooooob"))
        .args(["outcome", "--variant", "B", "--position", "5,5,5"])
        .env("OOOOOOB_BUDGET", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_oooooob"))
        .args(["outcome", "--variant", "B", "--position", "1,1,2"])
        .output()
        .unwrap();
    assert_eq!((out.status.code(), out.stdout.as_slice()), (Some(0), b"P\n".as_slice()));
}

//! Golden-file tests pinning the CLI output formats.
//!
//! Each case runs a subcommand in-process and compares the full output
//! (and exit code) against a committed file. Regenerate the files with
//! `UPDATE_GOLDEN=1 cargo test -p morphic-cli`.

use std::fs;
use std::path::PathBuf;

fn run(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let full: Vec<String> = std::iter::once("morphic".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let code = morphic_cli::run(full, &mut out);
    (code, String::from_utf8(out).expect("output is UTF-8"))
}

fn check(name: &str, expected_code: i32, args: &[&str]) {
    let (code, actual) = run(args);
    assert_eq!(code, expected_code, "exit code for {name}\n{actual}");
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, &actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("missing golden file {}: {e}", path.display()));
    assert_eq!(
        actual,
        expected,
        "{name} drifted from its golden file (UPDATE_GOLDEN=1 to regenerate)"
    );
}

#[test]
fn gen_fibonacci_json() {
    check(
        "gen_fibonacci.json",
        0,
        &[
            "--format",
            "json",
            "gen",
            "--spec",
            "../../specs/fibonacci.spec",
            "--length",
            "21",
        ],
    );
}

#[test]
fn gen_sturmian_text() {
    check(
        "gen_sturmian.txt",
        0,
        &[
            "gen",
            "--spec",
            "../../specs/sturmian-golden.spec",
            "--length",
            "34",
        ],
    );
}

#[test]
fn analyze_thue_morse_json() {
    check(
        "analyze_thue_morse.json",
        0,
        &[
            "--format",
            "json",
            "analyze",
            "--spec",
            "../../specs/thue-morse.spec",
            "--length",
            "10000",
            "--complexity",
            "8",
            "--powers",
            "2,50",
            "--overlaps",
            "3000",
            "--gaps",
            "011",
            "--freq",
        ],
    );
}

#[test]
fn analyze_additive_text() {
    check(
        "analyze_additive.txt",
        0,
        &[
            "analyze",
            "--spec",
            "../../specs/gamma.spec",
            "--length",
            "20000",
            "--additive",
            "60",
        ],
    );
}

#[test]
fn analyze_coded_freq_text() {
    check(
        "analyze_coded_freq.txt",
        0,
        &[
            "analyze",
            "--spec",
            "../../specs/chacon-binary.spec",
            "--length",
            "50000",
            "--freq",
        ],
    );
}

#[test]
fn classify_primitive_pure_json() {
    check(
        "classify_m.json",
        0,
        &["--format", "json", "classify", "--evidence", "P5=true,P4=false"],
    );
}

#[test]
fn classify_contradiction_json() {
    check(
        "classify_contradiction.json",
        1,
        &[
            "--format",
            "json",
            "classify",
            "--evidence",
            "P7=true,P10=false",
        ],
    );
}

#[test]
fn taxonomy_enumerate_text() {
    check("taxonomy_enumerate.txt", 0, &["taxonomy", "enumerate"]);
}

#[test]
fn taxonomy_enumerate_json() {
    check(
        "taxonomy_enumerate.json",
        0,
        &["--format", "json", "taxonomy", "enumerate"],
    );
}

#[test]
fn corpus_list_text() {
    check("corpus_list.txt", 0, &["corpus", "list"]);
}

#[test]
fn corpus_verify_one_entry_json() {
    check(
        "corpus_verify_m.json",
        0,
        &[
            "--format",
            "json",
            "corpus",
            "verify",
            "m",
            "--budget",
            "150000",
        ],
    );
}

#[test]
fn corpus_verify_small_budget_text() {
    check(
        "corpus_verify_small_budget.txt",
        0,
        &["corpus", "verify", "--budget", "5000"],
    );
}

#[test]
fn unknown_corpus_entry_json() {
    check(
        "unknown_corpus_entry.json",
        2,
        &["--format", "json", "corpus", "verify", "zz"],
    );
}

#[test]
fn missing_spec_file_is_usage_error() {
    let (code, out) = run(&["gen", "--spec", "no-such-file.spec", "--length", "5"]);
    assert_eq!(code, 2);
    assert!(out.contains("cannot read"), "{out}");
}

#[test]
fn bad_flag_is_usage_error() {
    let (code, _) = run(&["gen", "--nonsense"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("gen"), "{out}");
}

#[test]
fn spec_parse_error_carries_location() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.spec");
    fs::write(&path, "alphabet: 0 1\nrule 0 -> 0 2\nrule 1 -> 0\nseed: 0\n").unwrap();
    let (code, out) = run(&["gen", "--spec", path.to_str().unwrap(), "--length", "5"]);
    assert_eq!(code, 2, "{out}");
    assert!(out.contains("line 2"), "{out}");
    assert!(out.contains("undeclared letter"), "{out}");
}

#[test]
fn budget_env_var_caps_generation() {
    let exe = env!("CARGO_BIN_EXE_morphic");
    let output = std::process::Command::new(exe)
        .args(["gen", "--spec", "../../specs/fibonacci.spec", "--length", "100"])
        .env("MORPHIC_BUDGET", "50")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(1), "tight budget should fail the run");
    let output = std::process::Command::new(exe)
        .args(["gen", "--spec", "../../specs/fibonacci.spec", "--length", "100"])
        .env("MORPHIC_BUDGET", "500")
        .output()
        .expect("binary runs");
    assert_eq!(output.status.code(), Some(0), "ample budget should succeed");
    assert_eq!(String::from_utf8_lossy(&output.stdout).trim().len(), 100);
}

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn qhankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhankel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qhankel-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn tables_match_golden_files() {
    for which in ["1", "2", "3"] {
        let out = qhankel(&["table", which]);
        assert!(out.status.success());
        let golden =
            std::fs::read_to_string(fixture_dir().join(format!("table{which}.txt"))).unwrap();
        assert_eq!(stdout(&out), golden, "table {which}");
    }
    let one = stdout(&qhankel(&["table", "1"]));
    assert!(one.contains("n=1: -1/12*x^2 + 1/45\n"));
    assert!(one.contains("1/42000*x^12"));
}

#[test]
fn table_formats() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&qhankel(&["table", "2", "--format", "json"]))).unwrap();
    assert_eq!(json["table"], 2);
    assert_eq!(json["rows"].as_array().unwrap().len(), 7);
    assert_eq!(json["rows"][6]["row"], "x^0");
    let tex = stdout(&qhankel(&["table", "1", "--format", "latex"]));
    assert!(tex.starts_with("\\begin{tabular}"));
    assert!(tex.contains("\\frac{1}{45}"));
    assert_eq!(qhankel(&["table", "4"]).status.code(), Some(2));
}

#[test]
fn hankel_examples() {
    assert_eq!(
        stdout(&qhankel(&["hankel", "--family", "bernoulli", "--n", "1"])),
        "-1/12\n"
    );
    assert_eq!(
        stdout(&qhankel(&["hankel", "--family", "q-binom-k2", "--n", "1"])),
        "q - 1\n"
    );
    let uv = stdout(&qhankel(&["hankel", "--family", "alpha-uv", "--n", "1"]));
    let closed = stdout(&qhankel(&[
        "closed-form",
        "--family",
        "alpha-uv",
        "--n",
        "1",
    ]));
    assert_eq!(uv, closed);
    let even = stdout(&qhankel(&[
        "hankel",
        "--family",
        "bernoulli-even-half",
        "--n",
        "1",
    ]));
    assert_eq!(even, "-1/12*x^2 + 1/45\n");
    let json: serde_json::Value = serde_json::from_str(&stdout(&qhankel(&[
        "hankel",
        "--family",
        "q-bernoulli",
        "--n",
        "1",
        "--format",
        "json",
    ])))
    .unwrap();
    assert_eq!(json["family"], "q-bernoulli");
}

#[test]
fn closed_forms_match_determinants() {
    for family in [
        "bernoulli",
        "bernoulli-even-at-half",
        "bernoulli-odd-half",
        "q-binom-k2",
        "q-bernoulli",
        "alpha-uv",
    ] {
        for n in ["0", "2"] {
            let h = qhankel(&["hankel", "--family", family, "--n", n]);
            let c = qhankel(&["closed-form", "--family", family, "--n", n]);
            assert!(h.status.success() && c.status.success(), "{family}");
            assert_eq!(stdout(&h), stdout(&c), "{family} n={n}");
        }
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["hankel", "--family", "fibonacci", "--n", "1"][..],
        &["hankel", "--family", "alpha-generic", "--n", "9"],
        &["closed-form", "--family", "alpha-generic", "--n", "1"],
        &["verify", "--bogus"],
        &["frobnicate"],
    ] {
        let out = qhankel(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
    let guard = qhankel(&["hankel", "--family", "alpha-generic", "--n", "9"]);
    assert!(String::from_utf8_lossy(&guard.stderr).contains("limit 3"));
}

#[test]
fn verify_trivial_orders() {
    let out = qhankel(&["verify", "--max-n", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("# PASS criterion"))
            .count(),
        15
    );
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--max-n", "2", "--seed", "5"];
    let a = qhankel(&args);
    let b = qhankel(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = qhankel(&["verify", "--max-n", "2", "--seed", "6"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn verify_json() {
    let out = qhankel(&["verify", "--max-n", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["pass"], true);
    let criteria = doc["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 15);
    let first = &criteria[0]["reports"][0];
    assert_eq!(first["identity"], "table-1.row");
    assert_eq!(first["lhs"], first["rhs"]);
    let tex = stdout(&qhankel(&["verify", "--max-n", "0", "--format", "latex"]));
    assert!(tex.contains("\\texttt{"));
}

#[test]
fn corrupted_fixture_exits_1() {
    let dir = scratch_dir("corrupt");
    for which in 1..=3 {
        let name = format!("table{which}.txt");
        let mut text = std::fs::read_to_string(fixture_dir().join(&name)).unwrap();
        if which == 2 {
            text = text.replacen("alpha_2^3", "alpha_2^2", 1);
        }
        std::fs::write(dir.join(&name), text).unwrap();
    }
    let out = qhankel(&[
        "verify",
        "--max-n",
        "2",
        "--fixtures",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL table-2.row n=2 row=x^0"), "{text}");
    assert!(text.contains("# FAIL criterion 9"));
    assert!(text.contains("# PASS criterion 1"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fixture_directory_copy_passes_and_missing_exits_2() {
    let dir = scratch_dir("copy");
    for which in 1..=3 {
        let name = format!("table{which}.txt");
        std::fs::copy(fixture_dir().join(&name), dir.join(&name)).unwrap();
    }
    let out = qhankel(&[
        "verify",
        "--max-n",
        "2",
        "--fixtures",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
    let missing = qhankel(&[
        "verify",
        "--max-n",
        "0",
        "--fixtures",
        dir.to_str().unwrap(),
    ]);
    assert_eq!(missing.status.code(), Some(2));
}

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn modchar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modchar"))
        .args(args)
        .env_remove("MODCHAR_CACHE")
        .env_remove("MODCHAR_DEBUG_FLIP_SIGN")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = modchar(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

#[test]
fn basis_p3() {
    assert_eq!(
        ok(&["basis", "--p", "3", "--max-degree", "4"]),
        "0: 1\n3: x y\n4: y²\n"
    );
}

#[test]
fn basis_p2_is_everything() {
    assert_eq!(
        ok(&["basis", "--p", "2", "--max-degree", "2"]),
        "0: 1\n1: y\n2: y²\n"
    );
}

#[test]
fn basis_f4_has_y0_y1() {
    let out = ok(&["basis", "--p", "2", "--r", "2", "--max-degree", "3"]);
    assert!(out.contains("2: y₀ y₁"), "{out}");
}

#[test]
fn chi_examples() {
    assert_eq!(
        ok(&["chi", "--p", "2", "--n", "2", "--alpha", "y^3"]),
        "y⊗y² + y²⊗y\n"
    );
    assert_eq!(
        ok(&["chi", "--p", "3", "--n", "1", "--alpha", "x y"]),
        "x y\n"
    );
}

#[test]
fn chi_rejects_non_invariant() {
    let o = modchar(&["chi", "--p", "3", "--n", "2", "--alpha", "y"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not invariant"), "{}", stderr(&o));
}

#[test]
fn chi_parse_error_has_position() {
    let o = modchar(&["chi", "--p", "3", "--n", "2", "--alpha", "y^"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("position 2"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        modchar(&["basis", "--p", "4", "--max-degree", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        modchar(&["basis", "--max-degree", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(modchar(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn nonvanish_p3_rows() {
    let out = ok(&["nonvanish", "--p", "3", "--n", "2"]);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("N"));
    // N = 2..9, two rows each
    assert_eq!(lines.len(), 1 + 2 * 8);
    for l in &lines[1..] {
        assert!(
            (l.contains("16") && l.ends_with("non-nilpotent"))
                || (l.contains("11") && l.ends_with("nonzero")),
            "{l}"
        );
    }
}

#[test]
fn nonvanish_csv_header() {
    let out = ok(&["--format", "csv", "nonvanish", "--p", "3", "--n", "2"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("N,alpha,degree,status"));
    assert_eq!(lines.next(), Some("2,y^8,16,non-nilpotent"));
}

#[test]
fn dickson_first_line() {
    let out = ok(&["dickson", "--p", "2", "--n", "2", "--dmax", "9"]);
    assert_eq!(
        out.lines().next(),
        Some("newton: ok, inverse: ok, products: sign=+1 (i=0,1,2)")
    );
}

#[test]
fn dickson_odd_prime_sign() {
    let out = ok(&["dickson", "--p", "3", "--n", "2"]);
    assert!(out.starts_with("newton: ok, inverse: ok, products: sign=+1 (i=0,1), sign=-1 (i=2)"));
}

#[test]
fn tuples_p2() {
    let out = ok(&["tuples", "--p", "2", "--n", "2", "--max", "7"]);
    let parts: Vec<&str> = out.lines().map(|l| l.split(' ').next().unwrap()).collect();
    for t in ["(1,2)", "(1,4)", "(2,4)", "(1,6)", "(3,4)"] {
        assert!(parts.contains(&t), "{t} missing from {out}");
    }
}

#[test]
fn json_envelope() {
    let out = ok(&[
        "--format", "json", "chi", "--p", "2", "--n", "2", "--alpha", "y^3",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], "modchar/1");
    assert_eq!(v["command"], "chi");
    assert_eq!(v["rendered"], "y⊗y² + y²⊗y");
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--format",
        "json",
        "nonvanish",
        "--p",
        "2",
        "--r",
        "2",
        "--n",
        "3",
    ];
    assert_eq!(ok(&args), ok(&args));
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn analyze_regular_rep() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "reg.json",
        &ok(&["construct", "regular", "--p", "2", "--n", "2"]),
    );
    assert_eq!(
        ok(&["rep", "analyze", &file, "--k", "3"]),
        "J dims 1,3,4\nReduced rank 2\nprojection: [[1,0],[0,1]]\n\
         chi[y^3] = z1^2 z2 + z1 z2^2\n"
    );
}

#[test]
fn analyze_two_fixed_lines() {
    let dir = tempfile::tempdir().unwrap();
    // Two copies of the 2-dim F_3 rep with a shared generator.
    let file = write(
        dir.path(),
        "sum.json",
        r#"{"p": 3, "dim": 4, "generators": [
            [[1,1,0,0],[0,1,0,0],[0,0,1,1],[0,0,0,1]]
        ]}"#,
    );
    let out = ok(&["rep", "analyze", &file]);
    assert!(out.contains("Zero (dim J₀ = 2)"), "{out}");
}

#[test]
fn analyze_names_bad_generator() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "bad.json",
        r#"{"p": 3, "dim": 2, "generators": [[[1,1],[0,1]], [[1,0],[0,2]]]}"#,
    );
    let o = modchar(&["rep", "analyze", &file]);
    assert_eq!(o.status.code(), Some(3));
    assert!(
        stderr(&o).contains("generator 1 does not satisfy"),
        "{}",
        stderr(&o)
    );
}

#[test]
fn analyze_reports_field_context() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "bad.json",
        r#"{"p": 3, "dim": 2, "generators": [[[1,5],[0,1]]]}"#,
    );
    let o = modchar(&["rep", "analyze", &file]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("generators[0][0][1]"), "{}", stderr(&o));
}

#[test]
fn analyze_missing_file() {
    let o = modchar(&["rep", "analyze", "/nonexistent/rep.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn analyze_refuses_chi_over_extension() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(
        dir.path(),
        "f4.json",
        &ok(&["construct", "basic", "--p", "2", "--r", "2", "--n", "1"]),
    );
    assert!(ok(&["rep", "analyze", &file]).starts_with("J dims"));
    let o = modchar(&["rep", "analyze", &file, "--k", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("r = 1"));
}

#[test]
fn construct_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, p, r, n) in [
        ("basic", "3", "1", "2"),
        ("basic", "2", "2", "2"),
        ("sym", "3", "1", "1"),
        ("big", "2", "2", "2"),
        ("regular", "3", "1", "2"),
    ] {
        let first = ok(&["construct", kind, "--p", p, "--r", r, "--n", n]);
        let file = write(dir.path(), "c.json", &first);
        let a = ok(&["--format", "json", "rep", "analyze", &file]);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema"], "modchar/1");
        assert_eq!(v["p"].as_u64().unwrap().to_string(), p);
    }
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let cache = cache.to_str().unwrap();
    let args = ["--format", "json", "dickson", "--p", "3", "--n", "2"];
    let fresh = ok(&args);
    let mut with: Vec<&str> = vec!["--cache-dir", cache];
    with.extend(args);
    let first = ok(&with);
    assert_eq!(fs::read_dir(cache).unwrap().count(), 1);
    let second = ok(&with);
    assert_eq!(fresh, first);
    assert_eq!(first, second);

    // The env var is honoured too.
    let o = Command::new(env!("CARGO_BIN_EXE_modchar"))
        .args(args)
        .env("MODCHAR_CACHE", cache)
        .output()
        .unwrap();
    assert_eq!(stdout(&o), fresh);
    assert_eq!(fs::read_dir(cache).unwrap().count(), 1);
}

#[test]
fn cache_key_includes_format() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let text = ok(&[
        "--cache-dir",
        cache,
        "basis",
        "--p",
        "3",
        "--max-degree",
        "4",
    ]);
    let csv = ok(&[
        "--cache-dir",
        cache,
        "--format",
        "csv",
        "basis",
        "--p",
        "3",
        "--max-degree",
        "4",
    ]);
    assert_ne!(text, csv);
    assert!(csv.starts_with("degree,monomial\n"));
}

#[test]
fn verify_quick_passes() {
    let out = ok(&["verify", "--profile", "quick"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("[PASS]")).count(), 10);
    assert!(out.ends_with("all 10 suites passed\n"));
}

#[cfg(debug_assertions)]
#[test]
fn verify_reports_injected_failure() {
    let o = Command::new(env!("CARGO_BIN_EXE_modchar"))
        .args(["verify"])
        .env("MODCHAR_DEBUG_FLIP_SIGN", "1")
        .env_remove("MODCHAR_CACHE")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("[FAIL]  6 dickson"), "{}", stdout(&o));
    assert!(stderr(&o).contains("dickson"));
}

#[test]
fn chi_accepts_rendered_monomials() {
    assert_eq!(
        ok(&["chi", "--p", "2", "--n", "2", "--alpha", "y³"]),
        ok(&["chi", "--p", "2", "--n", "2", "--alpha", "y^3"])
    );
}

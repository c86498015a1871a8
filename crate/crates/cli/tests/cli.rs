use std::path::PathBuf;
use std::process::{Command, Output};

use homforge::fdalg::builtin_algebra;
use homforge::rational::q;

fn homforge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homforge"))
        .args(args)
        .env_remove("HOMFORGE_CATALOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("homforge-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn homify_builtin_associative() {
    let o = homforge(&["homify", "--builtin", "associative"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "(x*y)*A^1(z) - A^1(x)*(y*z)");
}

#[test]
fn homify_jacobi_and_lts() {
    let o = homforge(&["homify", "--builtin", "jacobi"]);
    assert_eq!(
        stdout(&o).trim(),
        "B(B(x,y),A^1(z)) + B(B(y,z),A^1(x)) + B(B(z,x),A^1(y))"
    );
    let o = homforge(&["homify", "--builtin", "lts-fundamental"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("T(A^2(u),A^2(v),T(x,y,z))"), "{text}");
    assert_eq!(text.matches("A^2(").count(), 8);
}

#[test]
fn homify_expression_with_inferred_signature() {
    let o = homforge(&["homify", "--expr", "T(x,y,z) - (x*(y*z))"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "T(x,y,z) - A^1(x)*(y*z)");
}

#[test]
fn parse_errors_exit_2() {
    let o = homforge(&["homify", "--expr", "(x*"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = homforge(&["homify", "--expr", "A^1(x)*y"]);
    assert_eq!(o.status.code(), Some(2));
    let o = homforge(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    let o = homforge(&["check", "--algebra", "no_such_algebra", "--identity", "hom_lie"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn twisted_sl2_is_hom_akivis() {
    let o = homforge(&["check", "--algebra", "sl2", "--twist", "sl2_swap", "--identity", "hom_akivis"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("status: PASS\n"));
}

#[test]
fn c_example_twist_is_trivial() {
    let o = homforge(&[
        "check",
        "--algebra",
        "c_example",
        "--twist",
        "c_example_morphism",
        "--identity",
        "hom_akivis",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("operations vanish"));
}

#[test]
fn corrupted_sl2_fails_with_witness() {
    let mut spec = builtin_algebra("sl2").unwrap();
    spec.set("mu", &["h", "x"], &[("x", q(3))]).unwrap();
    spec.set("mu", &["x", "h"], &[("x", q(-3))]).unwrap();
    let dir = scratch("corrupt");
    let path = dir.join("sl2_bad.json");
    std::fs::write(&path, spec.to_json()).unwrap();
    let o = homforge(&["--json", "check", "--algebra", path.to_str().unwrap(), "--identity", "lie"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "fail");
    let w = &v["witnesses"][0];
    assert_eq!(w["input"].as_array().unwrap().len(), 3);
    assert_ne!(w["defect"], "0");
}

#[test]
fn catalog_directory_from_environment() {
    let dir = scratch("catalog");
    let spec = builtin_algebra("hom_m2").unwrap();
    std::fs::write(dir.join("mine.json"), spec.to_json()).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_homforge"))
        .args(["powerassoc", "--algebra", "mine", "--samples", "5"])
        .env("HOMFORGE_CATALOG", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = homforge(&["powerassoc", "--algebra", "mine", "--samples", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn qalpha_symbolic_formula() {
    let o = homforge(&["qalpha", "--n", "1", "--m", "1", "--symbolic"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "(x1*y1)*A^1(z) - A^1(x1)*(y1*z)"
    );
    let o = homforge(&["qalpha", "--n", "2", "--m", "1", "--symbolic"]);
    assert_eq!(stdout(&o).trim().split(" + ").count() + stdout(&o).matches(" - ").count(), 6);
}

#[test]
fn coproduct_of_cube() {
    let o = homforge(&["coproduct", "--expr", "((x*y)*z)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "((x*y)*z) ∘ u + (A^1(y)*z) ∘ A^2(x) + (A^1(x)*z) ∘ A^2(y) + (A^1(x)*A^1(y)) ∘ A^1(z)"
    );
}

#[test]
fn primitive_exit_codes() {
    let o = homforge(&["primitive", "--expr", "(x*y)-(y*x)"]);
    assert_eq!(o.status.code(), Some(0));
    let o = homforge(&["--json", "primitive", "--expr", "(x*y)"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!v["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn antipode_pass_and_inconclusive() {
    let o = homforge(&["antipode", "--expr", "((a*(b*c))*d)"]);
    assert_eq!(o.status.code(), Some(0));
    let o = homforge(&["antipode", "--expr", "((x*y)*z)", "--exp-bound", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("INCONCLUSIVE"));
}

#[test]
fn envelope_reports_graded_dimensions() {
    let o = homforge(&["--json", "envelope", "--algebra", "sl2", "--zero-alpha", "--degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["1"][0], 3);
    assert_eq!(v["result"]["2"][0], 6);
}

#[test]
fn sabinin_notes_skipped_instances() {
    let o = homforge(&["sabinin", "--algebra", "hom_m2", "--class", "yiii", "--cutoff", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("skipped"));
}

#[test]
fn json_reports_are_deterministic() {
    let args = ["--json", "powerassoc", "--algebra", "hom_octonion", "--samples", "20", "--seed", "7"];
    let a = homforge(&args);
    let b = homforge(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["seed"], 7);
    assert!(v.get("timing_ms").is_none());
    let t = homforge(&["--json", "--timing", "powerassoc", "--algebra", "abelian", "--samples", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&t)).unwrap();
    assert!(v["timing_ms"].is_u64());
}

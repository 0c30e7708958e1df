use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "quivers", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_valquiver")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn sequence_commands() {
    let a3 = data("a3.quiver");
    assert_eq!(stdout(&["canon", &a3, "3,2,3,1"]), "3,2,1|3\n");
    assert_eq!(stdout(&["equiv", &a3, "3,2,1,3", "3,2,3,1"]), "true\n");
    assert_eq!(stdout(&["equiv", &a3, "3,2,1", "3,2,3"]), "false\n");
    assert_eq!(stdout(&["meet", &a3, "3,2,1", "3,2,3"]), "3,2\n");
    assert_eq!(stdout(&["join", &a3, "3,2,1", "3,2,3"]), "3,2,1,3\n");
    assert_eq!(stdout(&["principal", &a3, "1", "1"]), "3,2,1\n");
}

#[test]
fn translation_commands() {
    let a3 = data("a3.quiver");
    let hasse = stdout(&["hasse", &a3, "--rmax", "2"]);
    assert!(hasse.contains("S_{1,3} -> S_{1,2}\n"));
    let slice = stdout(&["slice", &a3, "--rmax", "2"]);
    assert_eq!(slice.lines().count(), hasse.lines().count());
    assert!(slice.contains("(0,3) -> (0,2)\n"));
}

#[test]
fn representation_commands() {
    let k2 = data("k2.quiver");
    assert_eq!(stdout(&["knit", &k2, "--rmax", "2"]), "0 2 (0,1)\n0 1 (1,2)\n1 2 (2,3)\n1 1 (3,4)\n");
    assert_eq!(stdout(&["sm", &data("a3.quiver"), &data("a3_simple2.rep")]), "3,2,3\n");
    let reflected = stdout(&["reflect", &k2, "2", &data("k2_generic.rep")]);
    assert!(reflected.contains("dim: 1=2 2=1"));
    assert!(reflected.contains("# arrows: 2->1"));
}

#[test]
fn weyl_commands() {
    let b2 = data("b2.quiver");
    assert_eq!(stdout(&["reduced", &b2, "1,2,1,2"]), "true\n");
    assert_eq!(stdout(&["reduced", &b2, "1,2,1,2,1"]), "false\n");
    let cox = stdout(&["coxeter", &b2, "--powers", "3"]);
    assert_eq!(cox, "word: 2,1\n1 true\n2 true\n3 false\n");
    let k2 = stdout(&["coxeter", &data("k2.quiver"), "--powers", "50"]);
    assert!(!k2.contains("false"));
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", &data("b2.quiver"), "--max-len", "4", "--rmax", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("skipped: non-symmetric valuation"));
    let out = run(&["verify", &data("triangle.quiver"), "--max-len", "4", "--rmax", "3", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("skipped: an arrow has a bypass"));
}

#[test]
fn input_errors_exit_2() {
    let a3 = data("a3.quiver");
    assert_eq!(run(&["canon", &a3, "1"]).status.code(), Some(2));
    assert_eq!(run(&["canon", "/nonexistent.quiver", "3"]).status.code(), Some(2));
    assert_eq!(run(&["reduced", &a3, "1,x"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    let out = run(&["reflect", &a3, "2", &data("a3_simple2.rep")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a source"));
}

#[test]
fn dot_output_is_deterministic() {
    let a3 = data("a3.quiver");
    let first = stdout(&["dot", &a3]);
    assert_eq!(first, stdout(&["dot", &a3]));
    assert_eq!(first.matches("->").count(), 2);
    let path = std::env::temp_dir().join(format!("valquiver-slice-{}.dot", std::process::id()));
    let p = path.to_string_lossy().into_owned();
    stdout(&["slice", &a3, "--rmax", "2", "--dot", &p]);
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(dot.starts_with("digraph slice {"));
    assert_eq!(dot.matches("style=dashed").count(), 3);
}

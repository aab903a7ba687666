use std::path::PathBuf;
use std::process::{Command, Output};

fn nsl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsl")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn env_file(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("nsl-{}-{name}.env", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn eval_prints_the_value() {
    let path = env_file("eval", "# two atoms\nA := ({1}, {0}, {0})\nB := ({0}, {0}, {1})\n");
    let o = nsl(&["eval", "--env", path.to_str().unwrap(), "--formula", "A and B"]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    assert!(stdout(&o).contains("({0}, {0}, {0})"), "{}", stdout(&o));
    let o = nsl(&["eval", "--env", path.to_str().unwrap(), "--formula", "A and Z"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains('Z'));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn out_of_range_environment_is_rejected_under_corrected() {
    let path = env_file("range", "A := ({2}, {0}, {0})\n");
    let o = nsl(&["eval", "--env", path.to_str().unwrap(), "--formula", "A"]);
    assert_eq!(o.status.code(), Some(1));
    let o = nsl(&["eval", "--env", path.to_str().unwrap(), "--formula", "A", "--semantics", "original"]);
    assert_eq!(o.status.code(), Some(0));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn demos_agree() {
    for name in ["paradox", "nonclosure", "monad-vs-interval", "def1-vs-def2"] {
        let o = nsl(&["demo", name]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        assert!(stdout(&o).ends_with("verdict: agree\n"), "{name}");
    }
    assert_eq!(nsl(&["demo", "nope"]).status.code(), Some(1));
}

#[test]
fn refute_and_calc() {
    let o = nsl(&["refute", "--center", "1/2", "--candidate", "1/2 - 1/X", "--mode", "inf"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verified: true"));
    let o = nsl(&["calc", "-2/X"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("infinitesimal: true"), "{}", stdout(&o));
    assert_eq!(nsl(&["calc", "1/0"]).status.code(), Some(1));
}

#[test]
fn closure_check_exit_codes() {
    assert_eq!(nsl(&["closure-check", "--iters", "200"]).status.code(), Some(0));
    let o = nsl(&["closure-check", "--iters", "300", "--semantics", "original"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("violations: 0"));
    assert_eq!(nsl(&["closure-check", "--iters", "0"]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["closure-check", "--iters", "100", "--seed", "9", "--semantics", "original"];
    assert_eq!(nsl(&args).stdout, nsl(&args).stdout);
    assert_eq!(nsl(&["demo", "paradox"]).stdout, nsl(&["demo", "paradox"]).stdout);
}

#[test]
fn usage_errors() {
    assert_eq!(nsl(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(nsl(&[]).status.code(), Some(1));
    assert_eq!(nsl(&["--help"]).status.code(), Some(0));
    assert_eq!(nsl(&["eval", "--env", "/nonexistent/file", "--formula", "A"]).status.code(), Some(1));
}

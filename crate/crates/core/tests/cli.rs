use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cayley-gradings")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 4] = [
        &["--algebra", "Os"],
        &["--grading", "cayley", "--cayley", "Os", "--gammaC", "cd:Z2^3", "--mu", "+,-,-"],
        &["--grading", "g2", "--cayley", "O", "--gammaC", "cd:Z2^3"],
        &["--grading", "typeIII", "--item", "4.b"],
    ];
    for (i, extra) in cases.iter().enumerate() {
        let f = path(dir.path(), &format!("{i}.json"));
        let mut args = vec!["construct", "-o", &f];
        args.extend_from_slice(extra);
        let o = run(&args);
        assert!(o.status.success(), "{extra:?}: {}", String::from_utf8_lossy(&o.stderr));
        let v = run(&["verify", &f]);
        assert_eq!(v.status.code(), Some(0), "{extra:?}: {}", stdout(&v));
        assert!(stdout(&v).contains("checks passed"));
    }
}

#[test]
fn corrupted_algebra_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "h.json");
    assert!(run(&["construct", "--algebra", "H", "-o", &f]).status.success());
    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&f).unwrap()).unwrap();
    // e1 * e1 = -1 becomes e1 * e1 = -2.
    doc["algebra"]["mult"][1][1][0] = serde_json::json!([-2, 1]);
    std::fs::write(&f, doc.to_string()).unwrap();
    let v = run(&["verify", &f]);
    assert_eq!(v.status.code(), Some(1));
    let text = stdout(&v);
    assert!(text.lines().any(|l| l.starts_with("FAIL") && l.contains(": ")), "{text}");
}

#[test]
fn bad_input_exits_two() {
    let o = run(&["construct", "--grading", "typeIII", "--h-order", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    let o = run(&["census", "/nonexistent/file.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn universal_and_iso() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "fine.json");
    assert!(run(&["construct", "--grading", "typeIII-so", "--fine", "O-Z2^3Z3", "-o", &f]).status.success());
    assert_eq!(stdout(&run(&["universal", &f])), "Z2^3 x Z3\n");

    let (a, b) = (path(dir.path(), "a.json"), path(dir.path(), "b.json"));
    let cartan = ["construct", "--grading", "typeIII", "--cayley", "Os", "--gammaC", "cartan", "--h-order", "3"];
    assert!(run(&[&cartan[..], &["-o", &a]].concat()).status.success());
    assert!(run(&[&cartan[..], &["--shift", "1", "-o", &b]].concat()).status.success());
    let o = run(&["iso", &a, &b]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "true\n");
}

#[test]
fn seeded_runs_repeat() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "tc.json");
    assert!(run(&["construct", "--twisted", "tc", "-o", &f]).status.success());
    let a = run(&["verify", &f, "--seed", "99", "--samples", "7"]);
    let b = run(&["verify", &f, "--seed", "99", "--samples", "7"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.status.success());
}

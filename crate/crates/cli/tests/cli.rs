use std::process::{Command, Output};

fn yfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yfib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = yfib(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn insert_worked_example() {
    assert_eq!(
        stdout(&["insert", "2715643"]),
        "P: 3:7 4:6 5 1:2\nQ: 2:7 5:6 4 1:3\nshape: 2212\n"
    );
    assert_eq!(stdout(&["insert", "1"]), "P: 1\nQ: 1\nshape: 1\n");
}

#[test]
fn insert_json_keys() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["insert", "3142", "--format", "json"])).unwrap();
    assert_eq!(v["p"], "2:4 1:3");
    assert_eq!(v["q"], "3:4 1:2");
    assert_eq!(v["shape"], "22");
}

#[test]
fn malformed_input_is_a_usage_error() {
    for args in [
        vec!["insert", "12x4"],
        vec!["insert", "1224"],
        vec!["evacuate", "1:2 3"],
        vec!["convert", "chain", "e,1,3"],
        vec!["class", "2:q 1"],
        vec!["verify", "nothing", "3"],
        vec!["poset", "yft", "9"],
        vec!["matrix", "nfib", "4", "--method", "interval"],
        vec!["frobnicate"],
    ] {
        let out = yfib(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let err = String::from_utf8(yfib(&["insert", "12x4"]).stderr).unwrap();
    assert!(err.contains("\"x\""), "{err}");
}

#[test]
fn unsafe_bound_lifts_the_limit() {
    assert_eq!(yfib(&["lattice", "21"]).status.code(), Some(2));
    assert_eq!(yfib(&["--unsafe-bound", "lattice", "21"]).status.code(), Some(0));
}

#[test]
fn okada_methods_agree() {
    let text = stdout(&["matrix", "okada", "5", "--method", "both"]);
    assert!(text.ends_with("OK methods agree\n"));
    assert!(text.contains("221   |     1     1     2     1     2     3     4     8"));
}

#[test]
fn lattice_dot_vertices() {
    let dot = stdout(&["lattice", "4", "--dot"]);
    let vertices = dot.lines().filter(|l| l.contains("rank=same")).map(|l| l.matches('"').count() / 2).collect::<Vec<_>>();
    assert_eq!(vertices, [1, 1, 2, 3, 5]);
    assert_eq!(dot.matches("->").count(), 14);
}

#[test]
fn verify_all_five_passes() {
    let out = yfib(&["verify", "all", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("invariants hold"));
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("yfib-{}.txt", std::process::id()));
    let path_str = path.to_str().unwrap();
    assert_eq!(stdout(&["--output", path_str, "insert", "21"]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "P: 1:2\nQ: 1:2\nshape: 2\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn outputs_are_deterministic() {
    let cases: &[&[&str]] = &[
        &["growth", "2715643", "--format", "json"],
        &["poset", "yft", "5", "--json"],
        &["poset", "syt", "4", "--dot"],
        &["matrix", "kostka", "5", "--method", "both", "--order", "chain"],
        &["matrix", "nfib", "6", "--format", "csv"],
        &["verify", "yfposet", "5"],
    ];
    for args in cases {
        let first = stdout(args);
        assert_eq!(first, stdout(args), "{args:?}");
        let mut seq = vec!["--sequential"];
        seq.extend_from_slice(args);
        assert_eq!(first, stdout(&seq), "{args:?}");
    }
}

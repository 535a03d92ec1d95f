use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lienil(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lienil"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lienil-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn json_report(args: &[&str], name: &str) -> (Output, Value) {
    let path = scratch(name);
    let mut all = args.to_vec();
    let p = path.to_str().unwrap();
    all.extend(["--json", p]);
    let out = lienil(&all);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("no report: {}", stdout(&out)));
    (out, serde_json::from_str(&text).unwrap())
}

#[test]
fn member_torsion_over_integers() {
    let (out, r) = json_report(
        &[
            "--ring",
            "Z",
            "member",
            "--expr",
            "[x1,x2]*[x3,x4,x5]",
            "--ideal",
            "TnOracle:4",
        ],
        "torsion.json",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["verdict"], "fails");
    assert_eq!(r["torsion_index"], 3);
    assert!(stdout(&out).contains("torsion_index: 3"));
}

#[test]
fn member_holds_with_witness() {
    let (out, r) = json_report(&["member", "--expr", "[x1,x2,x3]", "--ideal", "Sn:3"], "sn3.json");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["verdict"], "holds");
    assert!(r["certificate"].to_string().contains("witness"));
}

#[test]
fn member_degree_one_is_outside_t2() {
    let out = lienil(&["member", "--expr", "x1", "--ideal", "TnOracle:2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("member: fails"));
    let out = lienil(&["member", "--expr", "x1", "--ideal", "TnOracle:2", "--expect", "holds"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn member_splits_inhomogeneous_targets() {
    let (_, r) = json_report(
        &["member", "--expr", "x1 + [x1,x2]", "--ideal", "TnOracle:2"],
        "split.json",
    );
    let reports = r.as_array().expect("one report per component");
    assert_eq!(reports.len(), 2);
    let verdicts: Vec<&str> = reports.iter().map(|x| x["verdict"].as_str().unwrap()).collect();
    assert_eq!(verdicts, ["fails", "holds"]);
}

#[test]
fn member_degree_cap_refuses() {
    let out = lienil(&[
        "--degree-cap",
        "3",
        "member",
        "--expr",
        "[x1,x2]*[x3,x4,x5]",
        "--ideal",
        "TnOracle:4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("refused"));
}

#[test]
fn input_errors_exit_2() {
    let out = lienil(&["member", "--expr", "[x1]", "--ideal", "Sn:3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:1"));
    assert_eq!(
        lienil(&["member", "--expr", "x1", "--ideal", "Nope:3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        lienil(&["reproduce", "--filter", "no-such-case"]).status.code(),
        Some(2)
    );
    assert_eq!(lienil(&["verify", "--example", "grassmann(3)"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    let (out, r) = json_report(&["verify", "--example", "grassmann(3)", "--n", "3"], "g3.json");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["verdict"], "holds");
    assert_eq!(r["certificate"]["agree"], true);

    let (out, r) = json_report(
        &["verify", "--example", "heisenberg_truncated(4)", "--n", "3"],
        "h4.json",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["verdict"], "fails");
    assert!(r["certificate"]["theorem"]["witness"].is_object());
    assert!(r["certificate"]["oracle"]["witness"].is_object());

    let out = lienil(&[
        "--ring",
        "Z",
        "verify",
        "--example",
        "grassmann(3)",
        "--n",
        "3",
        "--mode",
        "theorem",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("verify: refused"));
}

#[test]
fn verify_algebra_file() {
    // k[x]/(x^2): commutative, so Lie nilpotent of class 1
    let path = scratch("dual.json");
    std::fs::write(
        &path,
        r#"{"dim": 2, "ring": {"kind": "Q"},
            "sc": [[0,0,0,1],[0,1,1,1],[1,0,1,1]],
            "unit": [1, 0],
            "generators": {"x": [0, 1]}}"#,
    )
    .unwrap();
    let out = lienil(&["verify", "--algebra", path.to_str().unwrap(), "--n", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).starts_with("verify: holds"));
}

#[test]
fn identities_reports() {
    let (out, r) = json_report(&["identities", "--samples", "0"], "id0.json");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["certificate"]["tallies"], Value::Array(vec![]));

    let (out, r) = json_report(&["identities", "--samples", "100"], "id100.json");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["verdict"], "holds");
    for t in r["certificate"]["tallies"].as_array().unwrap() {
        assert_eq!(t["passed"], 100);
    }
}

#[test]
fn reports_are_deterministic() {
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let (_, a) = json_report(&["--seed", "7", "identities", "--samples", "20"], "det-a.json");
    let (_, b) = json_report(&["--seed", "7", "identities", "--samples", "20"], "det-b.json");
    assert_eq!(strip(a), strip(b));
}

#[test]
fn reproduce_filters() {
    let (out, r) = json_report(&["reproduce", "--filter", "remark2-torsion"], "r2.json");
    assert_eq!(out.status.code(), Some(0));
    let reports = r.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["case"], "remark2-torsion");
    assert_eq!(reports[0]["verdict"], "holds");

    let out = lienil(&["--jobs", "2", "reproduce", "--filter", "theorem2-n3-*"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("theorem2-n3-q: holds"));
    assert!(text.contains("theorem2-n3-z3loc: holds"));

    let out = lienil(&["reproduce", "--list"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.starts_with("heisenberg-ladder")));
}

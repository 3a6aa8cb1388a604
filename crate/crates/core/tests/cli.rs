use std::path::PathBuf;
use std::process::{Command, Output};

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("totaro-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn totaro(args: &[&str], input: &PathBuf) -> Output {
    Command::new(env!("CARGO_BIN_EXE_totaro"))
        .args(args)
        .arg("--input")
        .arg(input)
        .output()
        .unwrap()
}

fn json_of(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn symbol_report_has_standard_keys() {
    let s = Scratch::new("symbol");
    let p = s.write(
        "a.json",
        r#"{"command":"symbol","spec":{"a":2,"b":3,"place":3}}"#,
    );
    let out = totaro(&["symbol", "--json"], &p);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    for key in ["input", "result", "verification", "config", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["result"]["symbol"], serde_json::json!(-1));
}

#[test]
fn malformed_input_exits_2() {
    let s = Scratch::new("bad");
    let cases = [
        (
            "trunc.json",
            r#"{"command":"symbol","spec":{"a":2"#,
            "line 1",
        ),
        (
            "unknown.json",
            r#"{"command":"symbol","spec":{"a":2,"b":3,"place":3,"extra":1}}"#,
            "unexpected key \"extra\"",
        ),
        (
            "float.json",
            r#"{"command":"symbol","spec":{"a":2.5,"b":3,"place":3}}"#,
            "spec.a",
        ),
        (
            "zero.json",
            r#"{"command":"symbol","spec":{"a":0,"b":3,"place":3}}"#,
            "",
        ),
        (
            "nonprime.json",
            r#"{"command":"symbol","spec":{"a":2,"b":3,"place":9}}"#,
            "",
        ),
        (
            "wrongcmd.json",
            r#"{"command":"class","spec":{"a":2,"b":3}}"#,
            "",
        ),
    ];
    for (name, doc, needle) in cases {
        let p = s.write(name, doc);
        let out = totaro(&["symbol"], &p);
        assert_eq!(out.status.code(), Some(2), "{name}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{name}: {err}");
        assert!(out.stdout.is_empty(), "{name}");
    }
    let missing = s.0.join("does-not-exist.json");
    assert_eq!(totaro(&["symbol"], &missing).status.code(), Some(2));
}

#[test]
fn exhausted_search_exits_3() {
    let s = Scratch::new("search");
    let p = s.write(
        "c.json",
        r#"{"command":"totaro","spec":{"case":"split-etale","c":{"invariants":[{"place":5,"num":1,"den":3},{"place":7,"num":2,"den":3}]},"b":{"invariants":[]}}}"#,
    );
    let out = totaro(&["totaro", "--poly-bound", "0"], &p);
    assert_eq!(out.status.code(), Some(3));
    let out = totaro(&["totaro", "--json"], &p);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["result"]["index"], serde_json::json!(3));
}

#[test]
fn undetermined_theta_exits_4_with_report() {
    let s = Scratch::new("theta");
    let p = s.write(
        "d.json",
        r#"{"command":"totaro","spec":{"case":"odd-degree","field":{"d":-1},"class":{"invariants":[{"place":5,"slot":1,"num":1,"den":3},{"place":5,"slot":2,"num":2,"den":3}]}}}"#,
    );
    let out = totaro(&["totaro", "--json"], &p);
    assert_eq!(out.status.code(), Some(4));
    let v = json_of(&out);
    assert_eq!(v["result"]["theta"], serde_json::json!("undetermined"));
    assert_eq!(v["result"]["ind_sch"], serde_json::json!(3));
}

#[test]
fn output_file_matches_stdout() {
    let s = Scratch::new("out");
    let p = s.write(
        "e.json",
        r#"{"command":"class","spec":{"form":[1,1,1,-7]}}"#,
    );
    let target = s.0.join("report.json");
    let direct = totaro(&["class", "--json"], &p);
    let out = Command::new(env!("CARGO_BIN_EXE_totaro"))
        .args(["class", "--json", "--input"])
        .arg(&p)
        .arg("--output")
        .arg(&target)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&target).unwrap(), direct.stdout);
}

#[test]
fn text_mode_is_readable() {
    let s = Scratch::new("text");
    let p = s.write(
        "f.json",
        r#"{"command":"totaro","spec":{"case":"quaternion","a0":{"a":-1,"b":-1},"b0":{"a":-1,"b":3},"field":{"d":5}}}"#,
    );
    let out = totaro(&["totaro"], &p);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("index"), "{text}");
    assert!(!text.trim_start().starts_with('{'));
}

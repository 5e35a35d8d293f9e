use std::io::Write;
use std::process::{Command, Output, Stdio};

use tempfile::NamedTempFile;

fn input(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauerlink")).args(args).output().unwrap()
}

fn eval(text: &str, extra: &[&str]) -> Output {
    let f = input(text);
    let mut args = vec!["eval", "--input", f.path().to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn jones_of_the_trefoil_as_text() {
    let o = eval("braid 2: 1 1 1", &["--invariant", "jones"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "1 * q^1 * a^0 + 1 * q^3 * a^0 + 1 * q^5 * a^0 + -1 * q^9 * a^0"
    );
}

#[test]
fn json_output_carries_the_expansion() {
    let o = eval("braid 2: 1", &["--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kind"], "homfly");
    assert_eq!(v["framing"], "blackboard");
    assert_eq!(v["value"]["den"], serde_json::json!([[-1, 0, 0], [1, 2, 0]]));
    assert!(v["beta_expansion"].is_array());
}

#[test]
fn framing_normalization_of_a_kink() {
    let plain = eval("braid 1:", &[]);
    let kink = eval("braid 2: 1", &["--normalize-framing"]);
    assert_eq!(kink.status.code(), Some(0));
    assert_eq!(stdout(&kink), stdout(&plain));
    let v: serde_json::Value = serde_json::from_str(&stdout(&eval(
        "braid 2: 1",
        &["--normalize-framing", "--output", "json"],
    )))
    .unwrap();
    assert_eq!(v["framing"], "writhe_normalized");
}

#[test]
fn pd_input_from_stdin() {
    let pd = r#"{"crossings":[{"arcs":[1,5,2,4],"sign":1},{"arcs":[3,1,4,6],"sign":1},{"arcs":[5,3,6,2],"sign":1}]}"#;
    let mut child = Command::new(env!("CARGO_BIN_EXE_brauerlink"))
        .args(["eval", "--input", "-", "--format", "pd", "--invariant", "jones"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(pd.as_bytes()).unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let braid = eval("braid 2: 1 1 1", &["--invariant", "jones"]);
    assert_eq!(stdout(&o), stdout(&braid));
}

#[test]
fn colored_reduced_and_specialized() {
    let o = eval("braid 1:", &["--invariant", "colored", "--labels", r#"{"0":[1,1]}"#, "--d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
    let o = eval("braid 2: 1 1", &["--invariant", "reduced", "--cut", "1", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cut"], 1);
    let o = eval("braid 2: 1 1 1", &["--invariant", "alexander"]);
    assert_eq!(stdout(&o).trim(), "1 * q^-2 * a^0 + -1 * q^0 * a^0 + 1 * q^2 * a^0");
    let o = eval("braid 2: 1 1 1", &["--invariant", "dpoly", "--d", "-2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(eval("braid 2: 5", &[]).status.code(), Some(1));
    assert_eq!(eval("braid 2: 1", &["--invariant", "dpoly"]).status.code(), Some(1));
    assert_eq!(eval("braid 1:", &["--labels", "{\"3\":[2]}"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "--input", "/nonexistent/input"]).status.code(), Some(1));
    assert_eq!(run(&["eval", "--bogus"]).status.code(), Some(1));
    let bound = eval("braid 1:", &["--invariant", "colored", "--labels", r#"{"0":[3,2]}"#]);
    assert_eq!(bound.status.code(), Some(3));
    let colored_framing = eval(
        "braid 1:",
        &["--invariant", "colored", "--labels", r#"{"0":[2]}"#, "--normalize-framing"],
    );
    assert_eq!(colored_framing.status.code(), Some(2));
    assert_eq!(
        eval("braid 1:", &["--invariant", "reduced", "--cut", "4"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn corpus_runs() {
    let o = run(&["corpus", "run"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 failed"));
    let bad = input(
        r#"{"name":"bad","format":"braid","input":"braid 2: 1","components":1,"writhe":1,"expected":[{"invariant":"homfly","value":{"num":[[1,0,0]],"den":[[1,0,0]]},"source":"wrong on purpose"}]}"#,
    );
    let o = run(&["corpus", "run", "--file", bad.path().to_str().unwrap(), "--output", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["entries"][0]["name"], "bad");
}

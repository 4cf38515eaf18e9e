use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

fn canmap(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_canmap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/golden")
        .join(name)
}

const SCRIPT: &str =
    "set X = {1,2,3}\nset Y = {p,q}\nfn f : X -> Y { 1->p, 2->p, 3->q }\ncompute surjective f\n";

#[test]
fn stdin_run_succeeds() {
    for args in [&["run"][..], &["run", "-"][..]] {
        let o = canmap(args, Some(SCRIPT));
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), "> compute surjective f\nsurjective(f) = true\n");
        assert!(stderr(&o).is_empty());
    }
}

#[test]
fn json_lines() {
    let o = canmap(&["run", "--json", "-"], Some(SCRIPT));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "{\"diagnostics\":[],\"inputs\":[\"f\"],\"kind\":\"surjective\",\"name\":\"surjective(f)\",\"outputs\":{\"surjective(f)\":\"true\"}}\n"
    );
}

#[test]
fn golden_files_match_the_binary() {
    let mut names: Vec<String> = std::fs::read_dir(golden(""))
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            let stem = p.file_stem()?.to_str()?.to_string();
            (p.extension()? == "cm").then_some(stem)
        })
        .collect();
    names.sort();
    assert!(names.len() >= 10);
    for name in &names {
        let cm = golden(&format!("{name}.cm"));
        let cm = cm.to_str().unwrap();
        let text = canmap(&["run", cm], None);
        let json = canmap(&["run", "--json", cm], None);
        let want = std::fs::read_to_string(golden(&format!("{name}.out"))).unwrap();
        let want_json = std::fs::read_to_string(golden(&format!("{name}.jsonl"))).unwrap();
        assert_eq!(stdout(&text), want, "{name}");
        assert_eq!(stdout(&json), want_json, "{name}");
        let code = if name == "failures" { 1 } else { 0 };
        assert_eq!(text.status.code(), Some(code), "{name}");
    }
}

#[test]
fn command_failure_exits_one() {
    let o = canmap(
        &["run", "-"],
        Some("set X = {1,2}\nset Y = {p}\nfn f : X -> X { 1->1, 2->1 }\nfn g : X -> Y { 1->p, 2->p }\ncompute equalizer f g\ncompute injective f\n"),
    );
    assert_eq!(o.status.code(), Some(1));
    // later commands still run
    assert!(stdout(&o).contains("injective(f) = false"));
}

#[test]
fn budget_flag_applies() {
    let script = "set X = {1,2}\nset Y = {p,q}\nset Z = {z}\n\
                  fn f : Z -> X { z->2 }\nfn g : Z -> Y { z->p }\n\
                  compute verify-ump product X Y cone f g\n";
    let o = canmap(
        &["run", "--budget", "3", "--strategy", "sequential"],
        Some(script),
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("canmap: line 6: enumeration needs 4 candidates, budget is 3"));
    let o = canmap(&["run", "--strategy", "parallel"], Some(script));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("mediating_count = 1"));
}

#[test]
fn parse_error_exits_two_with_position() {
    let o = canmap(&["run"], Some("set X = {1}\nfn f : X -> Q { 1->1 }\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert_eq!(stderr(&o), "canmap: line 2, col 13: unknown set `Q`\n");
}

#[test]
fn missing_file_exits_two() {
    let o = canmap(&["run", "/nonexistent/script.cm"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("canmap: cannot read script"));
}

#[test]
fn selftest_passes_and_bounds_size() {
    let o = canmap(&["selftest", "--max-size", "3"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).is_empty());
    let o = canmap(&["selftest", "--max-size", "9"], None);
    assert_eq!(o.status.code(), Some(2));
}

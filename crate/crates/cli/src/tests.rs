//! Golden-file tests: every case in `tests/golden/cases.txt` must reproduce
//! its stored output byte for byte. Set `GL3SIXJ_BLESS=1` to rewrite the
//! stored files.

use std::path::PathBuf;

use super::run;

struct Case {
    name: String,
    code: u8,
    args: Vec<String>,
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn cases() -> Vec<Case> {
    let text = std::fs::read_to_string(golden_dir().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut parts = l.split_whitespace();
            let name = parts.next().unwrap().to_string();
            let code = parts.next().unwrap().parse().unwrap();
            Case {
                name,
                code,
                args: parts.map(str::to_string).collect(),
            }
        })
        .collect()
}

fn invoke(case: &Case) -> super::Outcome {
    run(std::iter::once("gl3sixj".to_string()).chain(case.args.iter().cloned()))
}

#[test]
fn golden_outputs() {
    let bless = std::env::var_os("GL3SIXJ_BLESS").is_some();
    for case in cases() {
        let out = invoke(&case);
        let path = golden_dir().join(format!("{}.json", case.name));
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
        }
        let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
        assert_eq!(out.stdout, expected, "{}", case.name);
        assert_eq!(out.code, case.code, "{}", case.name);
    }
}

#[test]
fn repeated_runs_are_identical() {
    for case in cases() {
        assert_eq!(invoke(&case), invoke(&case), "{}", case.name);
    }
}

#[test]
fn anchor_documents() {
    let find = |name: &str| cases().into_iter().find(|c| c.name == name).unwrap();
    assert_eq!(invoke(&find("sixj_trivial")).stdout, "{\"value\":\"1\"}\n");
    assert_eq!(
        invoke(&find("sixj_fundamental_all")).stdout,
        "{\"lattice\":\"6\",\"contract\":\"6\",\"definition\":\"6\",\"agree\":true}\n"
    );
    assert_eq!(
        invoke(&find("multiplicity_fundamental")).stdout,
        "{\"weights\":[\"1,0,0\",\"1,0,0\",\"1,0,0\"],\"labels\":[[1,0,0,0,0,0,0,0]]}\n"
    );
}

#[test]
fn printed_rationals_round_trip() {
    for case in cases().iter().filter(|c| c.code == 0) {
        let v: serde_json::Value = serde_json::from_str(&invoke(case).stdout).unwrap();
        visit(&v, &mut |s| {
            if let Ok(q) = s.parse::<gl3sixj::Rational>() {
                assert_eq!(q.to_string(), s, "{}", case.name);
            }
        });
    }

    fn visit(v: &serde_json::Value, f: &mut impl FnMut(&str)) {
        match v {
            serde_json::Value::String(s) => f(s),
            serde_json::Value::Array(a) => a.iter().for_each(|x| visit(x, f)),
            serde_json::Value::Object(o) => o.values().for_each(|x| visit(x, f)),
            _ => {}
        }
    }
}

#[test]
fn help_is_not_an_error() {
    let out = run(["gl3sixj", "--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("sixj"));
}

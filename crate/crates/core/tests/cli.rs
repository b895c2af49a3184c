use std::process::Command;

use schubert::cli::{run, Outcome, EXIT_DOMAIN, EXIT_FAILED, EXIT_PARSE};
use schubert::emit::{expansion_from_json, gamma_from_json, lambda_from_json, parse_json, Emit};
use schubert::parse::parse_lambda;
use schubert::schubert_a::schubert;
use schubert::type_c::parse_gamma;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("schubert").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

#[test]
fn compute_examples() {
    let s1 = ok(&["compute", "schubert", "w@0:1,0,2,3"]);
    assert_eq!(s1.trim(), r#"[{"lambda":[1],"coeff":[{"m":{},"c":1}]}]"#);
    let f = ok(&["compute", "stanley", "w@1:3,2,1"]);
    assert_eq!(lambda_from_json(&parse_json(&f).unwrap()).unwrap(), parse_lambda("S[2,1]").unwrap());
    assert_eq!(ok(&["compute", "schubert", "w@0:0,1,2,3", "--format", "text"]).trim(), "(1)");
    let m = ok(&["compute", "multischur", "[2]", "--format", "text"]);
    assert_eq!(parse_lambda(&m).unwrap(), parse_lambda("c2 + y1 c1").unwrap());
    let c = ok(&["compute", "schubert-c", "k=2;p=1;q=1", "--format", "latex"]);
    assert_eq!(c.trim(), "Q_{{2,1}}");
}

#[test]
fn window_flag_and_twist() {
    let a = ok(&["--window", "0:4", "schubert", "1,0,3,2"]);
    assert_eq!(a, ok(&["schubert", "w@0:1,0,3,2"]));
    let t = ok(&["schubert", "w@1:2,1", "--twisted", "--format", "text"]);
    assert_eq!(parse_lambda(&t).unwrap(), parse_lambda("c1 + x1 + y1 - z").unwrap());
    assert_eq!(t, ok(&["twisted", "w@1:2,1", "--format", "text"]));
    assert_eq!(cli(&["--window", "0:3", "schubert", "1,0,3,2"]).code, EXIT_PARSE);
}

#[test]
fn exit_codes() {
    let bad = cli(&["compute", "schubert", "w@0:1,x"]);
    assert_eq!(bad.code, EXIT_PARSE);
    assert!(bad.stderr.contains("position"), "{}", bad.stderr);
    assert_eq!(cli(&["gamma-nf", "c1 +* c2"]).code, EXIT_PARSE);
    assert_eq!(cli(&["--format", "yaml", "schubert", "id"]).code, EXIT_PARSE);
    assert_eq!(cli(&["compute", "schubert-c", "w@1:2,1"]).code, EXIT_DOMAIN);
    assert_eq!(cli(&["compute", "schubert-c", "k=1;p=0;q=1"]).code, EXIT_DOMAIN);
    assert_eq!(cli(&["transition", "id"]).code, EXIT_DOMAIN);
    assert_eq!(cli(&["project-ac", "w@0:1,0"]).code, EXIT_DOMAIN);
    assert_eq!(cli(&["check", "no-such-suite"]).code, EXIT_DOMAIN);
    assert_eq!(cli(&["frobnicate"]).code, 2);
}

#[test]
fn outputs_roundtrip_through_json() {
    let s = ok(&["schubert", "w@-1:1,3,4,0,2,-1"]);
    let f = lambda_from_json(&parse_json(&s).unwrap()).unwrap();
    assert_eq!(f, schubert(&"w@-1:1,3,4,0,2,-1".parse().unwrap()));
    assert_eq!(f.to_json().to_string(), s.trim());
    let e = ok(&["product", "w@1:2,1", "w@1:2,1"]);
    let parsed = expansion_from_json(&parse_json(&e).unwrap()).unwrap();
    assert_eq!(parsed.to_json().to_string(), e.trim());
    let g = ok(&["gamma-nf", "c2 c1"]);
    assert_eq!(gamma_from_json(&parse_json(&g).unwrap()).unwrap(), parse_gamma("Q[2,1] + 2 Q[3] + z Q[2]").unwrap());
    let p = ok(&["project-ac", "w@1:3,2,1"]);
    assert_eq!(
        gamma_from_json(&parse_json(&p).unwrap()).unwrap(),
        schubert::type_c::example_321()
    );
    let i = ok(&["interpolate", "x1", "--format", "text"]);
    assert!(i.contains("w@1:2,1") && i.contains("w@0:1,0"), "{i}");
}

#[test]
fn determinism() {
    for args in [
        &["schubert", "w@0:3,2,1,0", "--format", "latex"][..],
        &["product", "w@0:1,0,3,2", "w@0:2,1,0,3"],
        &["check", "braid", "--seed", "7", "--degree", "4", "--format", "text"],
        &["qlambda", "[3,1]"],
    ] {
        assert_eq!(cli(args), cli(args), "{args:?}");
    }
}

#[test]
fn checks_and_verification() {
    let out = ok(&["check", "braid", "--seed", "7", "--degree", "4", "--format", "text"]);
    assert!(out.starts_with("braid") && out.contains("pass"), "{out}");
    let table = ok(&["verify-table", "--format", "text"]);
    assert!(table.trim_end().ends_with("24/24 rows pass"), "{table}");
    let atoc = ok(&["verify-atoc", "--format", "json"]);
    assert!(atoc.contains("\"pass\":true"));
}

#[test]
fn corrupted_fixture_row_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let good = include_str!("../data/table_a.json");
    let bad = good.replacen("\"x1+y1+S[1]\"", "\"x1+y2+S[1]\"", 1);
    assert_ne!(good, bad);
    let path = dir.path().join("table.json");
    std::fs::write(&path, bad).unwrap();
    let out = cli(&["verify-table", "--fixture", path.to_str().unwrap(), "--format", "text"]);
    assert_eq!(out.code, EXIT_FAILED);
    assert!(out.stdout.contains("0 2 1 3      FAIL"), "{}", out.stdout);
    assert!(out.stdout.contains("23/24 rows pass"));
}

#[test]
fn binary_uses_disk_cache() {
    let dir = tempfile::tempdir().unwrap();
    let bin = env!("CARGO_BIN_EXE_schubert");
    let runs: Vec<_> = (0..2)
        .map(|_| {
            Command::new(bin)
                .args(["schubert", "w@0:2,3,0,1"])
                .env("SCHUBERT_CACHE_DIR", dir.path())
                .output()
                .unwrap()
        })
        .collect();
    assert!(runs[0].status.success());
    assert_eq!(runs[0].stdout, runs[1].stdout);
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let bad = Command::new(bin).args(["compute", "schubert", "w@0:1,x"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_PARSE));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("position 6"));
}

use std::process::Command;

use cartan_cli::{run, RunReport, Status, EXIT_OK, EXIT_USAGE};

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("cartan").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn quiet_text_output() {
    let (code, out, _) = cli(&["--algebra", "so", "--param", "6", "--seed", "b1", "--quiet"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "The rank is 3, and a Cartan subalgebra:\nv1 = b1\nv2 = b15\nv3 = b10\n");
}

#[test]
fn fractional_elements_render_as_p_over_q() {
    let (code, out, _) = cli(&["--algebra", "sl", "--param", "5", "--seed", "b21;b22", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let report: RunReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.status, Status::Ok);
    assert_eq!(report.rank, Some(4));
    assert_eq!(report.seed, ["b21", "b22"]);
    assert_eq!(report.cartan.len(), 4);
}

#[test]
fn custom_algebra_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("so2.json");
    std::fs::write(&path, r#"{ "name": "so(2)", "ambient": 2, "basis": [ [[0, "1/2"], ["-1/2", 0]] ] }"#).unwrap();
    let (code, out, _) = cli(&["--algebra-file", path.to_str().unwrap(), "--quiet"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("The rank is 1"));

    let (code, _, err) = cli(&["--algebra-file", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with("error:"));
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(cli(&["--help"]).0, EXIT_OK);
    assert_eq!(cli(&["--version"]).0, EXIT_OK);
}

#[test]
fn skip_closure_requires_a_file() {
    assert_eq!(cli(&["--algebra", "g2", "--skip-closure-check"]).0, EXIT_USAGE);
}

#[test]
fn binary_succeeds_on_g2() {
    let output = Command::new(env!("CARGO_BIN_EXE_cartan"))
        .args(["--algebra", "g2", "--seed", "b1+5*b5"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
    let text = String::from_utf8(output.stdout).unwrap();
    assert!(text.contains("The rank is 2"));
    assert!(text.contains("Elapsed:"));
}

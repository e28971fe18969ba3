use lambdadelta::parse_term;
use lambdadelta_cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lambdadelta").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn infer_abstraction() {
    let (code, out, _) = call(&["infer", "--env", "*0", "[x:*0]x"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "[x0:*0]*0");
}

#[test]
fn infer_domain_mismatch() {
    let (code, _, err) = call(&["infer", "--env", "[x0:*0][x1:*0][x2:x1]*0", "(x2)[x3:x0]*0"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("DomainMismatch"), "{err}");
    assert!(err.contains("x0") && err.contains("x1"), "{err}");
}

#[test]
fn conv_exit_codes() {
    assert_eq!(call(&["conv", "--env", "*0", "[x=*0]x", "*0"]).0, 0);
    assert_eq!(call(&["conv", "*0", "*1"]).0, 1);
    let (code, out, err) = call(&["conv", "*0", "*0"]);
    assert_eq!((code, out.as_str(), err.as_str()), (0, "", ""));
}

#[test]
fn check_answers() {
    let (code, out, _) = call(&["check", "[x:*0]x", "--type", "[x:*0]*0"]);
    assert_eq!((code, out.trim()), (0, "OK"));
    let (code, out, _) = call(&["check", "[x:*0]x", "--type", "*0"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("mismatch"));
    assert_eq!(call(&["check", "(*0)*0", "--type", "*0"]).0, 2);
}

#[test]
fn syntax_and_scope_errors() {
    assert_eq!(call(&["parse", "[x:*0"]).0, 3);
    assert_eq!(call(&["parse", "y"]).0, 3);
    assert_eq!(call(&["infer", "--env", "[a:*0", "*0"]).0, 3);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["frobnicate"]).0, 5);
    assert_eq!(call(&["infer"]).0, 5);
    assert_eq!(call(&["infer", "--param", "affine:0", "*0"]).0, 5);
    assert_eq!(call(&["infer", "--param", "g7", "*0"]).0, 5);
    assert_eq!(call(&["suite", "nonesuch"]).0, 5);
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn fuel_exhaustion() {
    let (code, _, err) = call(&["normalize", "--fuel", "1", "(*0)[x:*1]x"]);
    assert_eq!(code, 4);
    assert!(err.contains("fuel") || err.contains("Fuel"), "{err}");
}

#[test]
fn normalize_with_trace() {
    let (code, out, _) = call(&["normalize", "--trace", "(*0)[x:*1]x"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.last(), Some(&"*0"));
    assert!(lines[0].starts_with("beta @ / : "), "{out}");
    assert!(lines.len() >= 3);
}

#[test]
fn params_change_sort_types() {
    assert_eq!(call(&["infer", "--param", "g2", "*1"]).1.trim(), "*3");
    assert_eq!(call(&["infer", "--param", "affine:5", "*1"]).1.trim(), "*6");
    assert_eq!(call(&["infer", "*1"]).1.trim(), "*2");
}

#[test]
fn arity_static_legalize() {
    let env = "[x0:*0][x1:*0][x2:x1]*0";
    assert_eq!(
        call(&["arity", "--env", env, "(x2)[x3:x0]*0"]).1.trim(),
        "(0,0)"
    );
    assert_eq!(call(&["arity", "(*0)*0"]).0, 2);
    let (code, out, _) = call(&["static", "--env", env, "x2"]);
    assert_eq!((code, out.trim()), (0, "x1"));
    let (code, out, _) = call(&["static", "--env", env, "--iterate", "5", "x2"]);
    assert_eq!((code, out.trim()), (0, "*0"));
    let (code, out, _) = call(&["legalize", "--env", "[a=(*0)*0][b:*0]*0"]);
    assert_eq!((code, out.trim()), (0, "[x0][x1:*0]*0"));
}

#[test]
fn outputs_reparse() {
    for args in [
        vec!["parse", "[a:*0][b=a]<*1>(b)a"],
        vec!["normalize", "(*0)[x:*1][y:x]y"],
        vec!["infer", "[x:*0][y:x]y"],
    ] {
        let (code, out, _) = call(&args);
        assert_eq!(code, 0);
        parse_term(out.trim()).unwrap();
    }
}

#[test]
fn env_and_terms_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let env = dir.path().join("env.ld");
    let term = dir.path().join("term.ld");
    std::fs::write(&env, "# two declarations\n[A:*0][a:A]*0\n").unwrap();
    std::fs::write(&term, "a").unwrap();
    let envf = format!("@{}", env.display());
    let termf = format!("@{}", term.display());
    let (code, out, _) = call(&["infer", "--env", &envf, &termf]);
    assert_eq!((code, out.trim()), (0, "x0"));
    assert_eq!(call(&["infer", "--env", "@/nonexistent/env", "*0"]).0, 5);
}

#[test]
fn suite_report() {
    let (code, out, _) = call(&["suite", "mtt"]);
    assert_eq!(code, 0);
    assert!(out.trim().starts_with("OK mtt n="), "{out}");
}

#[test]
fn binary_honours_ld_fuel() {
    let bin = env!("CARGO_BIN_EXE_lambdadelta");
    let status = std::process::Command::new(bin)
        .args(["normalize", "(*0)[x:*1]x"])
        .env("LD_FUEL", "1")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(4));
    let ok = std::process::Command::new(bin)
        .args(["normalize", "(*0)[x:*1]x"])
        .env_remove("LD_FUEL")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "*0");
}

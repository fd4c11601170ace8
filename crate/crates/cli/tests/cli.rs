use opkernel_cli::{run_command, Outcome, EXIT_NOT_INVERTIBLE, EXIT_OK, EXIT_SYNTAX, EXIT_USAGE};
use serde_json::Value;

fn run(args: &[&str]) -> Outcome {
    run_command(std::iter::once("opkernel").chain(args.iter().copied()))
}

#[test]
fn usage_errors_exit_64_on_stderr() {
    let cases: [&[&str]; 5] = [
        &["kernel-op", "--algebra", "octonion", "--kernel", "x"],
        &["kernel-op", "--algebra", "qx"],
        &["kernel-op", "--algebra", "diff", "--c", "half", "--kernel", "n"],
        &["dual", "--algebra", "qx", "--kernel", "1,x", "--targets", "1"],
        &["frobnicate"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(out.exit, EXIT_USAGE, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn help_and_version_succeed() {
    for args in [&["--help"][..], &["--version"], &["factor", "--help"]] {
        let out = run(args);
        assert_eq!(out.exit, EXIT_OK, "{args:?}");
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn algebraic_failures_map_to_their_codes() {
    let out = run(&["kernel-op", "--algebra", "qx", "--kernel", "x,2*x"]);
    assert_eq!(out.exit, EXIT_NOT_INVERTIBLE);
    assert!(out.stderr.starts_with("error: "));
    let out = run(&["kernel-op", "--algebra", "qx", "--kernel", "n"]);
    assert_eq!(out.exit, EXIT_SYNTAX);
}

#[test]
fn json_errors_carry_a_kind() {
    let out = run(&["--json", "factor", "--algebra", "c5", "--kernel", "r^2", "--operator", "D"]);
    assert_eq!(out.exit, 3);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "NotInKernel");
    assert!(v["error"]["message"].as_str().unwrap().contains("f_1"));
}

#[test]
fn dual_and_verify_reports() {
    let out = run(&["dual", "--algebra", "qx", "--kernel", "1,x", "--targets", "2,3"]);
    assert_eq!(out.exit, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("P_hat = "));
    let out = run(&["verify", "--algebra", "qx", "--operator", "D^2", "--on", "1,x,x^2"]);
    assert_eq!(out.exit, EXIT_OK, "{}", out.stderr);
    let values: Vec<&str> = out.stdout.lines().filter_map(|l| l.split(" = ").nth(1)).collect();
    assert_eq!(values, ["0", "0", "2"]);
}

#[test]
fn binary_writes_and_exits() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_opkernel"))
        .args(["kernel-op", "--algebra", "c5", "--kernel", "r^2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.lines().any(|l| l == "K = D - r^2"));
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_opkernel"))
        .args(["intertwine", "--algebra", "c5", "--kernel", "r^2", "--r", "D"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

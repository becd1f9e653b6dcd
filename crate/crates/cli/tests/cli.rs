//! End-to-end checks against the compiled binary: golden JSON bytes for the
//! three textbook invocations, exit-code conventions, and literal round-trips
//! through the check command.

use std::process::{Command, Output};

fn biop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = biop(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn golden_check_int() {
    let got = stdout_of(&[
        "check",
        "--ring",
        "int",
        "--elements",
        "1,2,3",
        "--format",
        "json",
    ]);
    assert_eq!(got, include_str!("golden/check_int_123.json"));
}

#[test]
fn golden_oeis_a033178() {
    let got = stdout_of(&[
        "oeis", "--id", "A033178", "--count", "13", "--format", "json",
    ]);
    assert_eq!(got, include_str!("golden/oeis_a033178_13.json"));
}

#[test]
fn golden_construct_gaussian() {
    let got = stdout_of(&[
        "construct",
        "--ring",
        "gaussian",
        "--factors",
        "1+2i,2+3i",
        "--format",
        "json",
    ]);
    assert_eq!(got, include_str!("golden/construct_gaussian.json"));
}

#[test]
fn oeis_text_is_the_bare_term_list() {
    let got = stdout_of(&["oeis", "--id", "A033178", "--count", "13"]);
    assert_eq!(got, "1,1,1,3,1,2,2,2,2,3,2,4,2\n");
    let got = stdout_of(&["oeis", "--id", "A309230", "--count", "9"]);
    assert_eq!(got, "2,5,13,25,37,41,61,85,113\n");
}

#[test]
fn exit_codes_follow_the_convention() {
    // 0: success.
    assert_eq!(biop(&["check", "--elements", "2,2"]).status.code(), Some(0));
    // 2: malformed input (literal parse errors and usage errors).
    assert_eq!(
        biop(&["check", "--ring", "int", "--elements", "1,,2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        biop(&["check", "--ring", "nat", "--elements", "-3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(biop(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(
        biop(&["enumerate", "--length", "4", "--sum-product", "8"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(biop(&["enumerate"]).status.code(), Some(2));
    // 1: domain errors, with the error name on stderr.
    let out = biop(&["complete", "--ring", "rational", "--elements", "1/2,2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ProductIsOne"));
    let out = biop(&["check", "--modulus", "12", "--elements", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotPrime"));
}

#[test]
fn malformed_literals_never_exit_zero() {
    for bad in [
        "", ",", "1,", "1,,2", "2*0", "2*x", "1/0", "1+2j", "i+1", "--", "4 5",
    ] {
        let out = biop(&["check", "--ring", "gaussian", "--elements", bad]);
        assert_ne!(out.status.code(), Some(0), "accepted {bad:?}");
    }
}

#[test]
fn node_budget_env_is_honored() {
    let out = Command::new(env!("CARGO_BIN_EXE_biop"))
        .args(["enumerate", "--length", "30"])
        .env("BIOP_NODE_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("SearchBudgetExceeded"));

    let out = Command::new(env!("CARGO_BIN_EXE_biop"))
        .args(["enumerate", "--length", "5"])
        .env("BIOP_NODE_BUDGET", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_threads_flag_matches_sequential_output() {
    let seq = stdout_of(&["enumerate", "--length", "9", "--format", "json"]);
    let par = stdout_of(&[
        "enumerate",
        "--length",
        "9",
        "--threads",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(seq, par);
}

/// Every rendered multiset literal parses back to the same multiset; checked
/// through the binary by re-checking the canonical form it prints.
#[test]
fn literals_round_trip_through_the_binary() {
    let cases = [
        (vec!["--ring", "int"], "3,-5,-1*14,1"),
        (vec!["--ring", "gaussian"], "1+2i,2+3i,i,i,-1*7"),
        (vec!["--ring", "eisenstein"], "2+1w,2+1w,w,w,-w,-1"),
        (vec!["--ring", "sqrt2"], "r,r,1+1r,-1+1r,1,-1*4,3"),
        (vec!["--ring", "lunar"], "17,7"),
        (vec!["--ring", "rational"], "1/2,4,-6/8"),
        (vec!["--modulus", "11"], "2,2,2,2,2"),
        (vec![], "1,1,2,4"),
    ];
    for (ring_args, literal) in cases {
        let mut args = vec!["check"];
        args.extend(ring_args.iter().copied());
        args.extend(["--elements", literal, "--format", "json"]);
        let first = stdout_of(&args);
        let parsed: serde_json::Value = serde_json::from_str(&first).unwrap();
        let canonical = parsed["elements"].as_str().unwrap().to_owned();

        let mut again = vec!["check"];
        again.extend(ring_args.iter().copied());
        again.extend(["--elements", canonical.as_str(), "--format", "json"]);
        let second = stdout_of(&again);
        assert_eq!(first, second, "round trip for {literal:?}");
    }
}

#[test]
fn complete_examples() {
    let got = stdout_of(&[
        "complete",
        "--modulus",
        "11",
        "--elements",
        "2,2,2,2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(v["appended"], "2");
    assert_eq!(v["result"], "2*5");

    let got = stdout_of(&[
        "complete",
        "--ring",
        "rational",
        "--elements",
        "2,3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&got).unwrap();
    assert_eq!(v["appended"], "1");
    assert_eq!(v["result"], "1,2,3");
}

#[test]
fn verify_targets_run_from_the_shell() {
    for target in ["lemma3.3", "lemma7.2", "lemma9.2", "thm6.2"] {
        let out = biop(&["verify", "--target", target]);
        assert_eq!(out.status.code(), Some(0), "{target}");
    }
    let out = biop(&[
        "verify",
        "--target",
        "thm5.2",
        "--modulus",
        "11",
        "--max-len",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0));
}

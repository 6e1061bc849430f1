//! Acceptance gate: every criterion at its pinned tolerance, one line each.

use std::process::Command;

use singlink::acceptance;

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_singlink"))
}

#[test]
fn acceptance_criteria() {
    let results = acceptance::run_all();
    for r in &results {
        let budget = r
            .budget
            .map(|b| format!(" budget {b:?}"))
            .unwrap_or_default();
        println!("{r}\t({:?}{budget})", r.elapsed);
    }
    let failed: Vec<String> = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.to_string())
        .collect();
    assert!(failed.is_empty(), "failed criteria:\n{}", failed.join("\n"));
    assert_eq!(results.len(), 11);
}

#[test]
fn selftest_binary_exits_zero() {
    let out = binary().arg("selftest").output().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    println!("{stdout}");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout.lines().filter(|l| l.starts_with("PASS\t")).count(),
        11
    );
    assert!(stdout.ends_with("summary\t11 passed\t0 failed\n"));
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = |name: &str| {
        let (_, text) = acceptance::FIXTURES
            .iter()
            .find(|(n, _)| *n == name)
            .unwrap();
        let path = dir.path().join(name);
        std::fs::write(&path, text).unwrap();
        path
    };
    let looped = dir.path().join("loop.graph");
    std::fs::write(&looped, "vertex 0 -2 0\nedge 0 0\n").unwrap();
    let singular = fixture("singular.graph");
    let e8 = fixture("e8.graph");

    let cases: Vec<(Vec<std::ffi::OsString>, i32)> = vec![
        (vec!["todd".into(), "--order".into(), "0".into()], 1),
        (vec!["todd".into()], 1),
        (vec!["graph-check".into(), looped.into()], 1),
        (vec!["graph-check".into(), singular.clone().into()], 2),
        (vec!["graph-check".into(), e8.clone().into()], 0),
        (
            vec!["brieskorn".into(), "1".into(), "3".into(), "5".into()],
            1,
        ),
        (vec!["ehat".into()], 1),
        (
            vec![
                "enumerate".into(),
                "genera".into(),
                singular.into(),
                "--gmax".into(),
                "1".into(),
            ],
            2,
        ),
        (
            vec![
                "enumerate".into(),
                "weights".into(),
                e8.into(),
                "--wmin".into(),
                "-8".into(),
            ],
            2,
        ),
        (vec!["no-such-command".into()], 1),
        (vec!["--help".into()], 0),
    ];
    for (args, code) in cases {
        let out = binary().args(&args).output().unwrap();
        println!("{args:?} -> {:?}", out.status.code());
        assert_eq!(
            out.status.code(),
            Some(code),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

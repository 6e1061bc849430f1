use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_singlink"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn todd_output() {
    assert_eq!(stdout(&["todd", "--order", "1"]), "T1\t1/2*c1\n");
    assert_eq!(stdout(&["todd", "--order", "3"]), "T3\t1/24*c1*c2\n");
    assert_eq!(
        stdout(&["todd", "--order", "4"]),
        "T4\t-1/720*c1^4+1/180*c1^2*c2+1/720*c1*c3+1/240*c2^2-1/720*c4\n"
    );
    assert_eq!(
        stdout(&["todd", "--order", "2", "--eval", "c1=3,c2=3"]),
        "T2\t1/12*c1^2+1/12*c2\nTd\t1\n"
    );
    assert_eq!(run(&["todd", "--order", "9"]).status.code(), Some(1));
    assert!(stdout(&["todd", "--order", "9", "--max-grade", "9"]).starts_with("T9\t"));
}

#[test]
fn graph_check_outputs() {
    let m3 = fixture("single_m3.graph");
    assert_eq!(
        stdout(&["graph-check", m3.to_str().unwrap()]),
        "r\t1\nedges\t0\ndet\t-3\nnegative_definite\ttrue\nnumerically_gorenstein\tfalse\nK\t-1/3\nK2\t-1/3\nchi_top\t2\n"
    );
    let g237 = fixture("brieskorn_2_3_7.graph");
    assert_eq!(
        stdout(&["graph-check", g237.to_str().unwrap()]),
        "r\t4\nedges\t3\ndet\t1\nnegative_definite\ttrue\nnumerically_gorenstein\ttrue\nK\t-2,-1,-1,-1\nK2\t-4\nchi_top\t5\n"
    );
    let out = run(&["graph-check", fixture("singular.graph").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "r\t2\nedges\t1\nerror\tsingular-intersection-form\nnegative_definite\tfalse\nchi_top\t3\n"
    );
}

#[test]
fn brieskorn_outputs() {
    let out = stdout(&["brieskorn", "2", "2", "2"]);
    assert!(out.ends_with("rochlin\t15\ncasson\tn/a\n"), "{out}");
    assert_eq!(
        stdout(&["brieskorn", "11", "2", "3"]),
        "mu\t20\npg\t1\nsigma\t-16\nchi\t21\nehat\t21\ne_r\t21\ne_c\t9\nrochlin\t0\ncasson\t-2\n"
    );
}

#[test]
fn emit_graph_writes_canonical_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.graph");
    stdout(&[
        "brieskorn",
        "2",
        "3",
        "7",
        "--emit-graph",
        path.to_str().unwrap(),
    ]);
    let written = std::fs::read_to_string(&path).unwrap();
    let fixture_text = std::fs::read_to_string(fixture("brieskorn_2_3_7.graph")).unwrap();
    assert_eq!(written, fixture_text);
}

#[test]
fn enumerate_outputs() {
    let m3 = fixture("single_m3.graph");
    assert_eq!(
        stdout(&["enumerate", "genera", m3.to_str().unwrap(), "--gmax", "7"]),
        "r\t1\ngmax\t7\ncondition\tnumerically-gorenstein\ncount\t3\nsolutions\t1,4,7\nperiod\t3\n"
    );
    let a2 = fixture("a2.graph");
    let out = stdout(&["enumerate", "weights", a2.to_str().unwrap(), "--wmin", "-3"]);
    assert!(out.contains("\nfraction\t8/9\n"), "{out}");
    assert!(out.contains("\nmode\texhaustive\n"));
    let out = stdout(&["enumerate", "genera", a2.to_str().unwrap(), "--gmax", "3"]);
    assert!(
        out.contains("solutions\t0:0,0:3,1:1,2:2,3:0,3:3\n"),
        "{out}"
    );
}

#[test]
fn sampled_sweep_is_deterministic_and_echoes_seed() {
    let e8 = fixture("e8.graph");
    let args = [
        "enumerate",
        "weights",
        e8.to_str().unwrap(),
        "--wmin",
        "-9",
        "--samples",
        "300",
        "--seed",
        "11",
    ];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    assert!(
        first.contains("mode\tsampled\nsamples\t300\nseed\t11\n"),
        "{first}"
    );
    assert!(first.contains("total\t300\n"));
}

#[test]
fn human_output_aligns_columns() {
    assert_eq!(
        stdout(&["ehat", "--mu", "8", "--human"]),
        "ehat  9\ne_r   9\ne_c   9\n"
    );
}

#[test]
fn repeated_runs_are_byte_identical() {
    let e8 = fixture("e8.graph");
    for args in [
        vec!["graph-check", e8.to_str().unwrap()],
        vec!["brieskorn", "3", "5", "7"],
        vec!["todd", "--order", "6"],
        vec!["selftest"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

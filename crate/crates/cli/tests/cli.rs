use std::path::PathBuf;
use std::process::Command;

use graphpoly::format::parse_graph_file;
use graphpoly::{chromatic_polynomial, flow_polynomial, IntPoly};
use graphpoly_cli::{run_command, Output};

const TRIANGLE: &str = "# triangle\ngraph 3 3\ne 0 1\ne 1 2\ne 2 0\n";
const PATH: &str = "graph 3 2\ne 0 1\ne 1 2\n";

fn write(name: &str, text: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("graphpoly-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    run_command(std::iter::once("graphpoly").chain(args.iter().copied()))
}

fn bin(args: &[&str], cap: Option<&str>) -> std::process::Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_graphpoly"));
    cmd.args(args).env_remove("GRAPHPOLY_EDGE_CAP");
    if let Some(cap) = cap {
        cmd.env("GRAPHPOLY_EDGE_CAP", cap);
    }
    cmd.output().unwrap()
}

#[test]
fn documented_examples() {
    let tri = write("tri.g", TRIANGLE);
    let path = write("path.g", PATH);
    let tri = tri.to_str().unwrap();

    let out = run(&["chromatic", tri, "--format", "pretty"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "k^3 - 3*k^2 + 2*k\n"));

    let out = run(&["verify", "--identity", "eq1", tri]);
    assert_eq!(out.code, 0, "{out:?}");
    assert!(out.stdout.starts_with("PASS eq1 n=3 m=3"), "{}", out.stdout);

    let out = run(&["flow", path.to_str().unwrap(), "--format", "coeffs"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "[]\n"));
}

#[test]
fn w_reports_flow_and_shift() {
    let tri = write("tri-w.g", TRIANGLE);
    let out = run(&["w", tri.to_str().unwrap()]);
    assert_eq!(out.stdout, "f = k - 1\nk_shift = 0\n");
    let out = run(&["w", "corpus:p3", "--format", "coeffs"]);
    assert_eq!(out.stdout, "f = []\nk_shift = 1\n");
}

#[test]
fn dual_output_is_a_parseable_plane_graph() {
    let out = run(&["dual", "corpus:cube"]);
    assert_eq!(out.code, 0);
    let dual = parse_graph_file(&out.stdout).unwrap();
    let pg = dual.plane.expect("dual keeps its embedding");
    // The dual of the cube is the octahedron.
    assert_eq!((pg.graph().n(), pg.graph().m()), (6, 12));
    let cube = graphpoly::corpus::plane_graph("cube").unwrap();
    assert_eq!(chromatic_polynomial(pg.graph()), IntPoly::k() * flow_polynomial(cube.graph()));

    let tri = write("tri-dual.g", TRIANGLE);
    assert_eq!(run(&["dual", tri.to_str().unwrap()]).code, 2);
}

#[test]
fn verify_all_on_the_corpus() {
    for name in ["k2", "p3", "c3", "c4", "theta", "k4", "w4", "dipole3", "lollipop"] {
        let out = run(&["verify", "--identity", "all", &format!("corpus:{name}")]);
        assert_eq!(out.code, 0, "{name}: {}", out.stdout);
        assert!(!out.stdout.contains("FAIL"), "{name}: {}", out.stdout);
    }
    // Without an embedding the planar identities are skipped under `all`...
    let tri = write("tri-all.g", TRIANGLE);
    let out = run(&["verify", "--identity", "all", tri.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.ends_with("2 passed, 0 failed, 6 skipped\n"), "{}", out.stdout);
    // ...but asking for one explicitly is an input error.
    let out = run(&["verify", "--identity", "eq4", tri.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("embedding"));
}

#[test]
fn verify_with_k() {
    let out = run(&["verify", "--identity", "eq10", "--k", "3", "corpus:c4"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("[k=3]"), "{}", out.stdout);
    // eq10 needs k >= 1.
    assert_eq!(run(&["verify", "--identity", "eq10", "--k", "0", "corpus:c4"]).code, 2);
}

#[test]
fn json_records() {
    let out = run(&["--json", "verify", "--identity", "eq1,eq4", "corpus:c3"]);
    assert_eq!(out.code, 0);
    let recs: Vec<serde_json::Value> = out.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0]["identity"], "eq1");
    assert_eq!(recs[1]["identity"], "eq4");
    for r in &recs {
        assert_eq!(r["verdict"], "pass");
        assert_eq!(r["lhs"], r["rhs"]);
        assert!(r["graph"].as_str().unwrap().starts_with("n=3 m=3"));
        assert!(r.get("duration_ms").is_none());
    }
    let out = run(&["--json", "verify", "--identity", "eq1", "--timings", "corpus:c3"]);
    let rec: serde_json::Value = serde_json::from_str(out.stdout.trim()).unwrap();
    assert!(rec["duration_ms"].is_number());
}

#[test]
fn fuzz_fifty_eq1_trials_pass() {
    let out = run(&["fuzz", "--max-edges", "8", "--trials", "50", "--seed", "1", "--identity", "eq1"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.ends_with("50 passed, 0 failed, 0 skipped\n"), "{}", out.stdout);
}

#[test]
fn fuzz_every_identity() {
    let out = run(&["fuzz", "--max-edges", "7", "--trials", "20", "--seed", "9", "--identity", "all", "--k", "2"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(out.stdout.lines().count(), 20 * 8 + 1);
}

#[test]
fn fuzz_zero_trials_is_empty() {
    let out = run(&["fuzz", "--trials", "0", "--seed", "4"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "0 passed, 0 failed, 0 skipped\n"));
    let out = run(&["--json", "fuzz", "--trials", "0"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, ""));
}

#[test]
fn input_errors() {
    let bad = write("bad.g", "graph 2 1\ne 0 7\n");
    let out = run(&["chromatic", bad.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);
    assert_eq!(run(&["chromatic", "/definitely/not/here.g"]).code, 2);
    assert_eq!(run(&["fuzz", "--identity", "eq4,nope"]).code, 2);
    let out = run(&["transmogrify"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("Usage"), "{}", out.stderr);
}

#[test]
fn edge_cap_from_environment() {
    let ok = bin(&["verify", "--identity", "eq1", "corpus:cube"], None);
    assert_eq!(ok.status.code(), Some(0));
    let capped = bin(&["verify", "--identity", "eq1", "corpus:cube"], Some("5"));
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
    let garbage = bin(&["chromatic", "corpus:c3"], Some("lots"));
    assert_eq!(garbage.status.code(), Some(2));
    assert_eq!(bin(&["fuzz", "--max-edges", "6", "--trials", "1"], Some("5")).status.code(), Some(2));
}

#[test]
fn binary_exit_codes_and_streams() {
    let out = bin(&["chromatic", "corpus:k4"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "k^4 - 6*k^3 + 11*k^2 - 6*k\n");
    let out = bin(&["nope"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

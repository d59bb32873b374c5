//! End-to-end tests of the heunlab binary: every subcommand, exit codes,
//! and byte-determinism of file outputs.

use std::process::{Command, Output};

fn heunlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heunlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = heunlab(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn surface_l1_plus_emits_canonical_polynomial() {
    let v = stdout_json(&["surface", "--ell", "1", "--sign", "plus"]);
    assert_eq!(v["vars"], serde_json::json!(["chi", "a", "s"]));
    // 𝒫_{1,+} = ((a+s)(1−4χ²)+4χ)/4: five terms, graded-lex descending.
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 5);
    assert_eq!(terms[0]["exp"], serde_json::json!([2, 1, 0]));
    assert_eq!(terms[0]["num"], "-1");
    assert_eq!(terms[0]["den"], "1");
    let last = &terms[4];
    assert_eq!(last["exp"], serde_json::json!([0, 0, 1]));
    assert_eq!(last["num"], "1");
    assert_eq!(last["den"], "4");
}

#[test]
fn spectral_l2_in_uv_coordinates() {
    let v = stdout_json(&["spectral", "--ell", "2"]);
    assert_eq!(v["vars"], serde_json::json!(["u", "v"]));
    // Q_2 = u² − u − v; graded-lex descending puts u before v at degree 1.
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["exp"], serde_json::json!([2, 0]));
    assert_eq!(terms[1]["exp"], serde_json::json!([1, 0]));
    assert_eq!(terms[1]["num"], "-1");
    assert_eq!(terms[2]["exp"], serde_json::json!([0, 1]));
    assert_eq!(terms[2]["num"], "-1");
}

#[test]
fn multiplier_l1_minus_closed_form() {
    let v = stdout_json(&["multiplier", "--ell", "1", "--sign", "minus"]);
    // h_{1,−} = 1 − 2χa + 2χs
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[0]["exp"], serde_json::json!([1, 1, 0]));
    assert_eq!(terms[0]["num"], "-2");
    assert_eq!(terms[1]["exp"], serde_json::json!([1, 0, 1]));
    assert_eq!(terms[1]["num"], "2");
    assert_eq!(terms[2]["exp"], serde_json::json!([0, 0, 0]));
    assert_eq!(terms[2]["num"], "1");
}

#[test]
fn polysolve_hand_example() {
    let v = stdout_json(&[
        "polysolve", "--ell", "1", "--sign", "plus", "--chi", "1+0i", "--s", "1+0i",
    ]);
    assert_eq!(v["roots_on_slice"], 1);
    assert_eq!(v["degree"], 1);
    let a: &str = v["a"].as_str().unwrap();
    assert!(a.starts_with("0.3333333333333"), "a = {a}");
    assert!(v["residual"].as_f64().unwrap() < 1e-12);
    let coeffs = v["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 2);
}

#[test]
fn flow_writes_membership_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("traj.csv");
    let out = heunlab(&[
        "flow", "--ell", "1", "--sign", "minus", "--chi0", "0+0i", "--a0", "1+0i",
        "--s0", "1+0i", "--s1", "2+0i", "--tol", "1e-10", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "s_re,s_im,chi_re,chi_im,a_re,a_im,membership_residual"
    );
    let mut n = 0;
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 7);
        let resid: f64 = cols[6].parse().unwrap();
        assert!(resid < 1e-7, "membership drift {resid}");
        n += 1;
    }
    assert!(n > 3);
}

#[test]
fn monodromy_psisys_trace() {
    let v = stdout_json(&["monodromy", "--system", "psisys"]);
    let trace = v["trace"].as_str().unwrap();
    assert!(trace.starts_with("1.99999") || trace.starts_with("2"), "trace {trace}");
    assert!(v["unipotence_gap"].as_f64().unwrap() > 0.1);
}

#[test]
fn monodromy_det_law_noninteger_ell() {
    let v = stdout_json(&[
        "monodromy", "--system", "mchoyn", "--ell", "0.3", "--chi", "0.2+0.1i",
        "--a", "0.5+0i", "--s", "1+0i",
    ]);
    let det = heunlab_parse(v["det"].as_str().unwrap());
    let expect = (heunlab_core::Complex64::new(0.0, 2.0 * std::f64::consts::PI) * 0.3).exp();
    assert!((det - expect).norm() < 1e-8);
}

fn heunlab_parse(s: &str) -> heunlab_core::Complex64 {
    heunlab_core::parse_complex(s).unwrap()
}

#[test]
fn rho_near_growth_point() {
    let v = stdout_json(&[
        "rho", "--omega", "1", "--B", "1.4142", "--A", "0", "--periods", "100",
    ]);
    let rho = v["rho"].as_f64().unwrap();
    assert!((rho - 1.0).abs() < 5e-3, "rho {rho}");
}

#[test]
fn scan_csv_format_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("scan1.csv");
    let p2 = dir.path().join("scan2.csv");
    for p in [&p1, &p2] {
        let out = heunlab(&[
            "scan", "--omega", "1", "--B", "-1:1:1", "--A", "0:1:0.5",
            "--periods", "60", "--tol", "1e-8", "--out", p.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let t1 = std::fs::read(&p1).unwrap();
    let t2 = std::fs::read(&p2).unwrap();
    assert_eq!(t1, t2, "scan output must be byte-identical across runs");
    let text = String::from_utf8(t1).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "B,A,rho,bound,locked");
    let rows: Vec<Vec<String>> = lines
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(rows.len(), 9);
    // B = 0 at A = 0 is deep inside the zero tongue: locked.
    let center = rows.iter().find(|r| r[0] == "0" && r[1] == "0").unwrap();
    assert_eq!(center[4], "1");
    let rho: f64 = center[2].parse().unwrap();
    let bound: f64 = center[3].parse().unwrap();
    assert!(rho.abs() < bound);
}

#[test]
fn surface_output_is_byte_deterministic() {
    let a = heunlab(&["surface", "--ell", "3", "--sign", "minus"]);
    let b = heunlab(&["surface", "--ell", "3", "--sign", "minus"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_small_passes() {
    let out = heunlab(&["verify", "--ell-max", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let passes = text.lines().filter(|l| l.starts_with("PASS")).count();
    assert!(passes >= 20, "only {passes} PASS lines");
    assert!(!text.contains("FAIL "));
}

#[test]
fn exit_codes() {
    // Unknown flag: usage error, exit 2 (clap convention).
    let out = heunlab(&["surface", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    // Domain error: exit 1.
    let out = heunlab(&["surface", "--ell", "0", "--sign", "plus"]);
    assert_eq!(out.status.code(), Some(1));
    // Off-slice polysolve: exit 1 with a diagnostic.
    let out = heunlab(&[
        "polysolve", "--ell", "1", "--sign", "plus", "--chi", "0.5+0i", "--s", "1+0i",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

use golay_core::golay::turyn_generators;
use golay_core::BitMatrix;

fn golay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_golay"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golay_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_golay"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn no_arguments_is_usage_error() {
    let o = golay(&[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(golay(&["--help"]).status.code(), Some(0));
    assert_eq!(golay(&["--version"]).status.code(), Some(0));
}

#[test]
fn construct_variant_4_contains_turyn_array() {
    let o = golay(&["construct", "--p", "1101,0111,1110,1011", "--variant", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let g: BitMatrix = stdout(&o).parse().unwrap();
    assert_eq!((g.n_rows(), g.n_cols()), (12, 24));
    assert_eq!(g.rank(), 12);

    // rows 9..12 are [G'(4) | G'(4) | G'(4)], equivalent to the extended Hamming array
    let (_, gp_ex) = turyn_generators();
    let lower: Vec<String> = g.rows()[8..]
        .iter()
        .map(|r| r.slice(0, 8).to_string())
        .collect();
    let refs: Vec<&str> = lower.iter().map(String::as_str).collect();
    assert!(BitMatrix::from_rows(&refs)
        .unwrap()
        .row_space_equal(&gp_ex)
        .unwrap());
}

#[test]
fn construct_is_idempotent() {
    let a = golay(&["construct", "--variant", "7", "--format", "machine"]);
    let b = golay(&["construct", "--variant", "7", "--format", "machine"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["generator"].as_array().unwrap().len(), 12);
}

#[test]
fn verify_sweep_passes() {
    let o = golay(&["verify", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["pass"], true);
    assert_eq!(doc["codes_golay"], doc["codes_checked"]);
}

#[test]
fn verify_single_variant() {
    for v in 1..=8 {
        let o = golay(&["verify", "--variant", &v.to_string()]);
        assert_eq!(o.status.code(), Some(0), "variant {v}");
    }
}

#[test]
fn invalid_inputs_exit_one() {
    for args in [
        &["construct", "--variant", "9"][..],
        &["construct", "--p", "1111,0111,1110,1011"],
        &["construct", "--p", "1101,0111"],
        &["table", "--g78", "0101,0011,0110,0011,0101"],
        &["simulate", "--p-flip", "1.5"],
        &["simulate", "--p-flip", "0.1", "--trials", "0"],
        &["construct", "--format", "csv"],
        &["decode", "0101"],
        &["bogus"],
    ] {
        let o = golay(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn table_formats() {
    let csv = golay(&["table", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(0));
    let text = stdout(&csv);
    assert_eq!(text.lines().count(), 9);
    assert!(text.contains("29,39,58,78,83,105,116,139,150,172,177,197,216,226"));

    let q = golay(&["table", "--q"]);
    assert_eq!(q.status.code(), Some(0));
    let body: String = stdout(&q)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .collect::<Vec<_>>()
        .join("\n");
    let m: BitMatrix = body.parse().unwrap();
    assert_eq!((m.n_rows(), m.n_cols()), (8, 56));
}

#[test]
fn encode_decode_round_trip() {
    let enc = golay(&["encode", "--variant", "2", "101100111000"]);
    assert_eq!(enc.status.code(), Some(0));
    let cw = stdout(&enc).split_whitespace().last().unwrap().to_string();
    assert_eq!(cw.len(), 24);

    // flip three symbols
    let mut bits: Vec<char> = cw.chars().collect();
    for i in [0, 9, 20] {
        bits[i] = if bits[i] == '0' { '1' } else { '0' };
    }
    let received: String = bits.into_iter().collect();
    for decoder in ["ml", "trellis"] {
        let dec = golay_stdin(
            &["decode", "--variant", "2", "--decoder", decoder],
            &received,
        );
        assert_eq!(dec.status.code(), Some(0));
        let out = stdout(&dec);
        assert!(out.contains(&cw), "{decoder}: {out}");
        assert!(out.contains("101100111000"), "{decoder}: {out}");
    }
}

#[test]
fn simulate_is_reproducible_and_writes_file() {
    let dir = std::env::temp_dir().join(format!("golay-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sim.json");
    let args = [
        "simulate", "--p-flip", "0.05", "--trials", "2000", "--seed", "9", "--format", "machine",
    ];
    let a = golay(&args);
    let mut with_out = args.to_vec();
    let p = path.to_str().unwrap();
    with_out.extend(["--out", p]);
    let b = golay(&with_out);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["trials"], 2000);
    std::fs::remove_dir_all(&dir).unwrap();
}

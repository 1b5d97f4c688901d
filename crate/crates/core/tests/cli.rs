use std::io::Write;
use std::process::{Command, Output, Stdio};

fn filtersq(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_filtersq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn apply_then_inverse_reproduces_input() {
    let input = "01|10\n|1000\n";
    let fwd = filtersq(&["apply", "square", "--filter", "dyadic", "--input", "01|10 ; |1000"], "");
    assert_eq!(fwd.status.code(), Some(0));
    assert_eq!(stdout(&fwd).lines().count(), 1);
    let back = filtersq(&["apply", "square", "--filter", "dyadic", "--inverse", "--input", "-"], &stdout(&fwd));
    assert_eq!(back.status.code(), Some(0));
    assert_eq!(stdout(&back), input);
}

#[test]
fn apply_power_with_explicit_exponents() {
    let args = ["apply", "power", "--filter", "dyadic", "--m", "3", "--n", "2"];
    let fwd = filtersq(&[&args[..], &["--input", "|10;1|0;|001"]].concat(), "");
    assert_eq!(fwd.status.code(), Some(0));
    assert_eq!(stdout(&fwd).lines().count(), 2);
    let back = filtersq(&[&args[..], &["--inverse", "--input", "-"]].concat(), &stdout(&fwd));
    assert_eq!(stdout(&back), "|10\n1|0\n|001\n");
}

#[test]
fn membership_exit_codes() {
    let o = filtersq(&["mem", "dyadic", "|10"], "");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "in\n"));
    let o = filtersq(&["mem", "frechet", "|10"], "");
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "out\n"));
    let o = filtersq(&["mem", "principal:|10", "1|01"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(filtersq(&["mem", "nope", "|10"], "").status.code(), Some(2));
}

#[test]
fn shape_and_parse_errors_exit_2() {
    let o = filtersq(&["apply", "main", "--omega", "|10", "--input", "|10;|10;|01;|01"], "");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("disjoint"));
    assert_eq!(filtersq(&["apply", "code", "--input", "|1;|0"], "").status.code(), Some(2));
    assert_eq!(filtersq(&["apply", "code", "--input", "|x"], "").status.code(), Some(2));
    assert_eq!(filtersq(&["bogus"], "").status.code(), Some(2));
}

#[test]
fn verify_writes_report_file() {
    let dir = std::env::temp_dir().join(format!("filtersq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.tsv");
    let args = ["verify", "roundtrip", "--homeo", "square", "--filter", "dyadic", "--trials", "50", "--seed", "7"];
    let o = filtersq(&[&args[..], &["--out", path.to_str().unwrap()]].concat(), "");
    assert_eq!(o.status.code(), Some(0));
    let report = std::fs::read_to_string(&path).unwrap();
    assert!(report.starts_with("# suite=roundtrip seed=7 trials=50\n"));
    assert_eq!(report.lines().count(), 51);
    // reproducible
    let again = filtersq(&args, "");
    assert_eq!(stdout(&again), report);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn modulus_and_zoo() {
    let o = filtersq(&["modulus", "square", "--filter", "dyadic", "--k", "16", "--input", "|10;|1"], "");
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let max: Vec<usize> = out.lines().skip(2).map(|l| l.split('\t').nth(2).unwrap().parse().unwrap()).collect();
    assert_eq!(max.len(), 16);
    assert!(max.windows(2).all(|w| w[0] <= w[1]));
    let o = filtersq(&["zoo", "list"], "");
    assert_eq!(o.status.code(), Some(0));
    for name in ["frechet", "dyadic", "semifilter-T"] {
        assert!(stdout(&o).contains(name));
    }
}

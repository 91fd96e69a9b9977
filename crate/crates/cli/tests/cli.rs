use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn ants(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ants"))
        .args(args)
        .output()
        .expect("run ants")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn run_zero_steps_prints_empty_snapshot() {
    let o = ants(&["run", "--code", "2", "--steps", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ANTSNAP 1\nLR\n0\n0 0 W\n");
}

#[test]
fn rule_accepts_letters_or_code() {
    let a = ants(&["run", "--rule", "LLRR", "--steps", "50"]);
    let b = ants(&["run", "--rule", "12", "--steps", "50"]);
    let c = ants(&["run", "--code", "12", "--steps", "50"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a), stdout(&c));
}

#[test]
fn snapshot_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("first.snap");
    let resumed = dir.path().join("resumed.snap");
    let direct = dir.path().join("direct.snap");
    let o = ants(&["run", "--rule", "LRRRRRLLR", "--steps", "3000", "--snapshot", path(&first)]);
    assert_eq!(o.status.code(), Some(0), "{o:?}");
    ants(&["run", "--from", path(&first), "--steps", "4500", "--snapshot", path(&resumed)]);
    ants(&["run", "--rule", "LRRRRRLLR", "--steps", "7500", "--snapshot", path(&direct)]);
    assert_eq!(fs::read(&resumed).unwrap(), fs::read(&direct).unwrap());
}

#[test]
fn verify_exit_codes() {
    let o = ants(&["verify", "--rule", "LLRR", "--returns", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for t in ["return=4 ", "return=8 ", "return=28 ", "return=32 "] {
        assert!(out.contains(t), "{out}");
    }
    // Ant 2 strays from its principal contour.
    let o = ants(&["verify", "--rule", "LR", "--returns", "8", "--cap", "100000"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["run", "--rule", "LXR", "--steps", "1"][..],
        &["run", "--rule", "LR", "--code", "2", "--steps", "1"],
        &["run", "--steps", "1"],
        &["contours", "--snapshot", "/nonexistent/x.snap"],
        &["probe", "--rule", "LR", "--radii", "5,2", "--horizon", "10"],
        &["sweep", "--length", "13", "--horizon", "10"],
        &["frobnicate"],
    ] {
        assert_eq!(ants(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn bad_snapshot_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.snap");
    fs::write(&f, "ANTSNAP 1\nLLRR\n4\n0 0 W\n0 0 9 1\n").unwrap();
    let o = ants(&["render", "--snapshot", path(&f), "--style", "states", "--out", path(&dir.path().join("x.ppm"))]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 5"));
}

#[test]
fn symmetry_listing() {
    let o = ants(&["symmetry", "--rule", "LR", "--horizon", "472"]);
    let out = stdout(&o);
    assert!(out.starts_with("# symmetry rule=LR code=2 horizon=472"));
    for t in [184, 368, 472] {
        assert!(out.contains(&format!("\n{t} point ")), "{t}");
    }
    let o = ants(&["symmetry", "--rule", "12", "--horizon", "40", "--on-return"]);
    let out = stdout(&o);
    let times: Vec<&str> = out
        .lines()
        .skip(1)
        .map(|l| l.split(' ').next().unwrap())
        .collect();
    assert!(times.iter().all(|t| ["4", "8", "28", "32", "36"].contains(t)), "{times:?}");
}

#[test]
fn contours_and_render() {
    let dir = tempfile::tempdir().unwrap();
    let snap = dir.path().join("a.snap");
    ants(&["run", "--code", "48", "--steps", "7016", "--snapshot", path(&snap)]);

    let o = ants(&["contours", "--snapshot", path(&snap), "--principal", "--diagonals"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("components=6 evenDegree=true"), "{out}");
    assert!(out.lines().nth(1).unwrap().starts_with("contour 0 arcs="));

    for (style, ext, head) in [("states", "ppm", "P3\n"), ("truchet", "svg", "<svg"), ("diagonals", "svg", "<svg")] {
        let a = dir.path().join(format!("a-{style}.{ext}"));
        let b = dir.path().join(format!("b-{style}.{ext}"));
        for out in [&a, &b] {
            let o = ants(&["render", "--snapshot", path(&snap), "--style", style, "--out", path(out)]);
            assert_eq!(o.status.code(), Some(0), "{o:?}");
        }
        let bytes = fs::read(&a).unwrap();
        assert!(bytes.starts_with(head.as_bytes()));
        assert_eq!(bytes, fs::read(&b).unwrap());
    }

    // Highlighting needs the ant at home.
    let away = dir.path().join("away.snap");
    ants(&["run", "--code", "48", "--steps", "7017", "--snapshot", path(&away)]);
    let o = ants(&["render", "--snapshot", path(&away), "--style", "truchet", "--principal", "--out", path(&dir.path().join("x.svg"))]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_and_probe_reports() {
    let o = ants(&["sweep", "--length", "4", "--horizon", "20000"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("# sweep length=4 horizon=20000 k=5 window=2 periodCap=1000\n"));
    assert_eq!(out.lines().count(), 1 + 8 + 1);
    assert!(out.ends_with("# recurrentSymmetry 9,12\n"), "{out}");
    assert!(out.contains("\n15 LLLL true degenerate "));

    let o = ants(&["probe", "--rule", "LR", "--radii", "0,5,500", "--horizon", "1000"]);
    assert_eq!(stdout(&o).lines().skip(1).collect::<Vec<_>>(), ["0 1", "5 210", "500 none"]);
}

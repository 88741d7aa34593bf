use std::fs;
use std::process::{Command, Output};

fn ncq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ncq")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn point_prints_one_row() {
    let o = ncq(&["point", "--cycle", "isomagnetic", "--n-phi0", "4", "--alpha", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "cycle,orientation,n_phi0,theta_eta,gamma,alpha,efficiency,status\nisomagnetic,positive,4,0,0,2,0.657002829715,ok\n"
    );
}

#[test]
fn point_reversed_isoenergetic() {
    let o = ncq(&[
        "point", "--cycle", "isoenergetic", "--orientation", "reversed", "--n-phi0", "10", "--theta-eta", "0.1",
        "--gamma", "0.5", "--alpha", "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let line = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(line.starts_with("isoenergetic,reversed,10,0.1,0.5,2,"), "{line}");
    assert!(line.ends_with(",ok"));
}

#[test]
fn point_domain_error_exits_one() {
    let o = ncq(&["point", "--cycle", "isoenergetic", "--n-phi0", "1", "--alpha", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("field_too_weak"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(ncq(&["point", "--cycle", "stirling", "--n-phi0", "4", "--alpha", "2"]).status.code(), Some(1));
    assert_eq!(ncq(&["figure", "--id", "7", "--out", "x"]).status.code(), Some(1));
    assert_eq!(ncq(&["nonsense"]).status.code(), Some(1));
    assert_eq!(ncq(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_to_stdout_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("s.cfg");
    let out = dir.path().join("out.csv");
    fs::write(
        &cfg,
        format!("cycle = isoenergetic\nn_phi0 = 1, 4\nalpha = 1.5, 2, 2\noutput = {}\n", out.display()),
    )
    .unwrap();
    let o = ncq(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(lines[1], "isoenergetic,positive,1,0,0,1.5,,field_too_weak");
    assert!(lines[3].ends_with(",ok"));

    let redirected = dir.path().join("other.csv");
    let o = ncq(&["sweep", "--config", cfg.to_str().unwrap(), "--out", redirected.to_str().unwrap(), "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read(&redirected).unwrap(), text.as_bytes());
}

#[test]
fn sweep_parse_error_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.cfg");
    fs::write(&cfg, "cycle = isomagnetic\nn_phi0 = 4\nalpha = \n").unwrap();
    let o = ncq(&["sweep", "--config", cfg.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn io_errors_exit_three() {
    let o = ncq(&["sweep", "--config", "/nonexistent/ncq.cfg"]);
    assert_eq!(o.status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("s.cfg");
    fs::write(&cfg, "cycle = isomagnetic\nn_phi0 = 4\n").unwrap();
    let o = ncq(&["sweep", "--config", cfg.to_str().unwrap(), "--out", "/nonexistent/dir/out.csv"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn figure_writes_reversed_panels() {
    let dir = tempfile::tempdir().unwrap();
    let o = ncq(&["figure", "--id", "4", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for stem in ["fig4_isomagnetic_reversed", "fig4_isoenergetic_reversed"] {
        let text = fs::read_to_string(dir.path().join(format!("{stem}.csv"))).unwrap();
        assert_eq!(text.lines().count(), 3601);
        assert!(text.lines().skip(1).all(|l| l.contains(",reversed,")));
    }
}

#[test]
fn check_respects_tolerance_env() {
    let o = Command::new(env!("CARGO_BIN_EXE_ncq")).arg("check").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("self-check passed"));

    let o = Command::new(env!("CARGO_BIN_EXE_ncq")).arg("check").env("NCQ_TOL", "oops").output().unwrap();
    assert_eq!(o.status.code(), Some(1));

    // a bisection stopped at 1e-3 cannot meet the 1e-9 agreement
    let o = Command::new(env!("CARGO_BIN_EXE_ncq")).arg("check").env("NCQ_TOL", "1e-3").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn figures_match_archive() {
    let archive = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/figures");
    let dir = tempfile::tempdir().unwrap();
    for id in ["2", "3", "4"] {
        assert_eq!(ncq(&["figure", "--id", id, "--out", dir.path().to_str().unwrap()]).status.code(), Some(0));
    }
    let mut compared = 0;
    for entry in fs::read_dir(&archive).unwrap() {
        let path = entry.unwrap().path();
        let archived = fs::read_to_string(&path).unwrap();
        let fresh = fs::read_to_string(dir.path().join(path.file_name().unwrap())).unwrap();
        assert_eq!(archived.lines().count(), fresh.lines().count());
        for (a, b) in archived.lines().zip(fresh.lines()) {
            let (fa, fb): (Vec<_>, Vec<_>) = (a.split(',').collect(), b.split(',').collect());
            assert_eq!(fa.len(), 8);
            for col in [0, 1, 2, 3, 4, 5, 7] {
                assert_eq!(fa[col], fb[col], "{a} vs {b}");
            }
            match (fa[6].parse::<f64>(), fb[6].parse::<f64>()) {
                (Ok(x), Ok(y)) => assert!((x - y).abs() < 1e-10, "{a} vs {b}"),
                _ => assert_eq!(fa[6], fb[6]),
            }
        }
        compared += 1;
    }
    assert_eq!(compared, 4);
}

//! End-to-end tests of the `mscale` binary: flag handling, exit codes, CSV
//! formats, and determinism contracts.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn mscale(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mscale"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("failed to spawn mscale")
}

fn assert_exit(output: &Output, code: i32) {
    assert_eq!(
        output.status.code(),
        Some(code),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&output.stdout),
        String::from_utf8_lossy(&output.stderr)
    );
}

/// Data portion of an output file: everything from the column header on.
fn data_rows(path: &Path) -> Vec<String> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.is_empty())
        .map(str::to_string)
        .collect()
}

fn write_constant_signal(dir: &Path, name: &str, value: f64, n: usize) -> PathBuf {
    let path = dir.join(name);
    let mut body = String::from("sample\n");
    for _ in 0..n {
        body.push_str(&format!("{value}\n"));
    }
    fs::write(&path, body).unwrap();
    path
}

#[test]
fn generate_is_deterministic_per_flag_set() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    assert_exit(&mscale(dir, &["generate", "wgn", "--n", "500", "--seed", "7", "--out", "a.csv"]), 0);
    let first = fs::read(dir.join("a.csv")).unwrap();
    assert_exit(&mscale(dir, &["generate", "wgn", "--n", "500", "--seed", "7", "--out", "a.csv"]), 0);
    assert_eq!(first, fs::read(dir.join("a.csv")).unwrap(), "same command, same bytes");

    assert_exit(&mscale(dir, &["generate", "wgn", "--n", "500", "--seed", "8", "--out", "b.csv"]), 0);
    assert_ne!(data_rows(&dir.join("a.csv")), data_rows(&dir.join("b.csv")));
}

#[test]
fn generate_chirp_has_paper_default_length() {
    let tmp = TempDir::new().unwrap();
    assert_exit(&mscale(tmp.path(), &["generate", "chirp", "--out", "c.csv"]), 0);
    let rows = data_rows(&tmp.path().join("c.csv"));
    assert_eq!(rows[0], "sample");
    assert_eq!(rows.len() - 1, 15_000);
}

#[test]
fn generate_rejects_bad_flags_with_exit_2() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    assert_exit(&mscale(dir, &["generate", "mix", "--n", "0", "--out", "z.csv"]), 2);
    assert_exit(&mscale(dir, &["generate", "chirp", "--f-end", "100", "--out", "z.csv"]), 2);
    assert_exit(
        &mscale(dir, &["generate", "ar1", "--rho-start", "1.5", "--out", "z.csv"]),
        2,
    );
    // Unknown flags are clap usage errors, also exit 2.
    assert_exit(&mscale(dir, &["generate", "wgn", "--bogus", "--out", "z.csv"]), 2);
}

#[test]
fn entropy_prints_zero_for_constant_signal_with_absolute_tolerance() {
    let tmp = TempDir::new().unwrap();
    let file = write_constant_signal(tmp.path(), "const.csv", 0.5, 50);
    for estimator in ["sample", "fuzzy"] {
        let out = mscale(
            tmp.path(),
            &["entropy", "--in", file.to_str().unwrap(), "--estimator", estimator, "--r-abs", "0.2"],
        );
        assert_exit(&out, 0);
        assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "0");
    }
}

#[test]
fn entropy_reports_zero_variance_as_numeric_failure() {
    let tmp = TempDir::new().unwrap();
    let file = write_constant_signal(tmp.path(), "const.csv", 1.0, 50);
    let out = mscale(
        tmp.path(),
        &["entropy", "--in", file.to_str().unwrap(), "--estimator", "sample"],
    );
    assert_exit(&out, 4);
}

#[test]
fn entropy_prints_undefined_token_and_exits_zero() {
    let tmp = TempDir::new().unwrap();
    let path = tmp.path().join("spikes.csv");
    fs::write(&path, "sample\n0\n10\n0\n10\n").unwrap();
    let out = mscale(
        tmp.path(),
        &["entropy", "--in", "spikes.csv", "--estimator", "sample", "--r-abs", "0.5"],
    );
    assert_exit(&out, 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "undefined:no_matches");

    // Too short to embed at all: still exit 0 with a cause token.
    fs::write(tmp.path().join("tiny.csv"), "sample\n1\n2\n3\n").unwrap();
    let out = mscale(
        tmp.path(),
        &["entropy", "--in", "tiny.csv", "--estimator", "fuzzy", "--r-abs", "0.5"],
    );
    assert_exit(&out, 0);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "undefined:too_short");
}

#[test]
fn io_failures_exit_3() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    assert_exit(&mscale(dir, &["entropy", "--in", "missing.csv", "--estimator", "sample"]), 3);

    fs::write(dir.join("bad.csv"), "sample\n1.0\nnot-a-number\n").unwrap();
    assert_exit(&mscale(dir, &["entropy", "--in", "bad.csv", "--estimator", "sample"]), 3);

    fs::write(dir.join("nan.csv"), "sample\n1.0\nNaN\n2.0\n").unwrap();
    assert_exit(&mscale(dir, &["entropy", "--in", "nan.csv", "--estimator", "sample"]), 3);
}

fn gen_wgn_file(dir: &Path, name: &str, n: usize, seed: u64) {
    assert_exit(
        &mscale(
            dir,
            &["generate", "wgn", "--n", &n.to_string(), "--seed", &seed.to_string(), "--out", name],
        ),
        0,
    );
}

#[test]
fn profile_rc_flag_is_identity_at_scale_one() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen_wgn_file(dir, "s.csv", 400, 3);
    let common = ["profile", "--in", "s.csv", "--estimator", "fuzzy", "--moment", "mean", "--scales", "1:1"];
    let mut with_rc = common.to_vec();
    with_rc.extend(["--rc", "--out", "rc.csv"]);
    assert_exit(&mscale(dir, &with_rc), 0);
    let mut without = common.to_vec();
    without.extend(["--out", "basic.csv"]);
    assert_exit(&mscale(dir, &without), 0);
    assert_eq!(data_rows(&dir.join("rc.csv")), data_rows(&dir.join("basic.csv")));
}

#[test]
fn profile_output_round_trips_to_exact_values() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen_wgn_file(dir, "s.csv", 600, 11);
    assert_exit(
        &mscale(
            dir,
            &[
                "profile", "--in", "s.csv", "--estimator", "sample", "--moment", "mean",
                "--rc", "--scales", "1:6", "--out", "p.csv",
            ],
        ),
        0,
    );

    // Recompute in-process and compare bit-for-bit after re-parsing.
    let signal = {
        let body = fs::read_to_string(dir.join("s.csv")).unwrap();
        let samples: Vec<f64> = body
            .lines()
            .filter(|l| !l.starts_with('#') && !l.is_empty() && *l != "sample")
            .map(|l| l.parse().unwrap())
            .collect();
        mscale_core::Signal::new(samples).unwrap()
    };
    let config = mscale_core::MultiscaleConfig {
        estimator: mscale_core::Estimator::Sample,
        moment: mscale_core::Moment::Mean,
        refined_composite: true,
        scale_min: 1,
        scale_max: 6,
        params: mscale_core::EntropyParams::default(),
    };
    let profile = mscale_core::multiscale_profile(&signal, &config).unwrap();

    let rows = data_rows(&dir.join("p.csv"));
    assert_eq!(rows[0], "tau,entropy,defined");
    for (row, (tau, value)) in rows[1..].iter().zip(profile.entries()) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[0].parse::<usize>().unwrap(), *tau);
        match value {
            mscale_core::EntropyValue::Finite(v) => {
                assert_eq!(fields[1].parse::<f64>().unwrap().to_bits(), v.to_bits());
                assert_eq!(fields[2], "1");
            }
            mscale_core::EntropyValue::Undefined(_) => {
                assert!(fields[1].is_empty());
                assert_eq!(fields[2], "0");
            }
        }
    }
}

#[test]
fn profile_spread_moment_gates_scale_one() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen_wgn_file(dir, "s.csv", 300, 5);
    let base = ["profile", "--in", "s.csv", "--estimator", "sample", "--moment", "std", "--scales", "1:4"];
    let mut no_flag = base.to_vec();
    no_flag.extend(["--out", "z.csv"]);
    assert_exit(&mscale(dir, &no_flag), 2);

    let mut with_flag = base.to_vec();
    with_flag.extend(["--allow-degenerate", "--out", "ok.csv"]);
    assert_exit(&mscale(dir, &with_flag), 0);
    let rows = data_rows(&dir.join("ok.csv"));
    assert_eq!(rows[1], "1,,0", "scale 1 must be an undefined row");
    assert!(rows[2].ends_with(",1"));
}

#[test]
fn window_validates_geometry() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen_wgn_file(dir, "s.csv", 500, 2);
    let out = mscale(
        dir,
        &[
            "window", "--in", "s.csv", "--window", "100", "--overlap", "1.0",
            "--estimator", "fuzzy", "--moment", "mean", "--scales", "1:2", "--out", "w.csv",
        ],
    );
    assert_exit(&out, 2);

    let out = mscale(
        dir,
        &[
            "window", "--in", "s.csv", "--window", "1000", "--overlap", "0.5",
            "--estimator", "fuzzy", "--moment", "mean", "--scales", "1:2", "--out", "w.csv",
        ],
    );
    assert_exit(&out, 2);
}

#[test]
fn window_full_signal_equals_profile() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen_wgn_file(dir, "s.csv", 400, 9);
    let flags = ["--estimator", "fuzzy", "--moment", "mean", "--rc", "--scales", "1:3"];

    let mut win = vec!["window", "--in", "s.csv", "--window", "400", "--overlap", "0"];
    win.extend(flags);
    win.extend(["--out", "w.csv"]);
    assert_exit(&mscale(dir, &win), 0);

    let mut prof = vec!["profile", "--in", "s.csv"];
    prof.extend(flags);
    prof.extend(["--out", "p.csv"]);
    assert_exit(&mscale(dir, &prof), 0);

    let win_rows = data_rows(&dir.join("w.csv"));
    let prof_rows = data_rows(&dir.join("p.csv"));
    assert_eq!(win_rows.len(), prof_rows.len());
    for (w, p) in win_rows[1..].iter().zip(&prof_rows[1..]) {
        assert_eq!(w.strip_prefix("0,").unwrap(), p.as_str());
    }
}

#[test]
fn batch_single_realization_has_zero_sd() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let out = mscale(
        dir,
        &[
            "batch", "--gen", "wgn", "--n", "300", "--realizations", "1",
            "--estimator", "fuzzy", "--moment", "mean", "--scales", "1:3", "--out", "b.csv",
        ],
    );
    assert_exit(&out, 0);
    let rows = data_rows(&dir.join("b.csv"));
    assert_eq!(rows[0], "tau,mean,sd,cv,n_defined,n_total");
    for row in &rows[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[2], "0", "sd of one realization: {row}");
        assert_eq!(fields[4], "1");
        assert_eq!(fields[5], "1");
    }
}

#[test]
fn batch_requires_exactly_one_source() {
    let tmp = TempDir::new().unwrap();
    let out = mscale(
        tmp.path(),
        &["batch", "--estimator", "fuzzy", "--moment", "mean", "--scales", "1:2", "--out", "b.csv"],
    );
    assert_exit(&out, 2);
}

#[test]
fn batch_thread_count_does_not_change_output() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    let args = [
        "batch", "--gen", "wgn", "--n", "400", "--realizations", "6",
        "--estimator", "sample", "--moment", "mean", "--rc", "--scales", "1:4", "--out", "b.csv",
    ];
    let run_with = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_mscale"))
            .current_dir(dir)
            .env("MSCALE_THREADS", threads)
            .args(args)
            .output()
            .unwrap();
        assert_exit(&out, 0);
        fs::read(dir.join("b.csv")).unwrap()
    };
    assert_eq!(run_with("1"), run_with("2"), "parallel run must be bit-identical");
}

#[test]
fn compare_identical_groups_gives_p_one() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    for (i, seed) in [1u64, 2, 3].iter().enumerate() {
        gen_wgn_file(dir, &format!("g{i}.csv"), 300, *seed);
    }
    let out = mscale(
        dir,
        &[
            "compare", "--group-a", "g*.csv", "--group-b", "g*.csv",
            "--estimator", "fuzzy", "--moment", "mean", "--scales", "1:4", "--out", "cmp.csv",
        ],
    );
    assert_exit(&out, 0);
    let rows = data_rows(&dir.join("cmp.csv"));
    assert_eq!(rows[0], "tau,p_raw,p_fdr,log10_p_fdr");
    for row in &rows[1..] {
        let fields: Vec<&str> = row.split(',').collect();
        let p_raw: f64 = fields[1].parse().unwrap();
        let p_fdr: f64 = fields[2].parse().unwrap();
        assert!((p_raw - 1.0).abs() < 1e-9, "identical groups: {row}");
        assert!(p_fdr >= p_raw);
    }
}

#[test]
fn compare_needs_two_files_per_group() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    gen_wgn_file(dir, "a1.csv", 200, 1);
    gen_wgn_file(dir, "b1.csv", 200, 2);
    gen_wgn_file(dir, "b2.csv", 200, 3);
    let out = mscale(
        dir,
        &[
            "compare", "--group-a", "a*.csv", "--group-b", "b*.csv",
            "--estimator", "fuzzy", "--moment", "mean", "--scales", "1:2", "--out", "c.csv",
        ],
    );
    assert_exit(&out, 2);
}

#[test]
fn reads_signals_with_comments_blanks_and_extra_columns() {
    let tmp = TempDir::new().unwrap();
    let dir = tmp.path();
    fs::write(
        dir.join("messy.csv"),
        "# a comment\n\nvalue,label\n0.5,x\n1.5,y\n# another\n0.25,z\n-0.75,w\n2.0,v\n1.0,u\n",
    )
    .unwrap();
    let out = mscale(
        dir,
        &["entropy", "--in", "messy.csv", "--estimator", "fuzzy", "--r-abs", "0.5"],
    );
    assert_exit(&out, 0);
}

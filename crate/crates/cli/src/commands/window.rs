//! `mscale window`: sliding-window profiles in long format
//! `window_start,tau,entropy,defined`.

use std::io::Write;
use std::path::Path;

use mscale_core::{sliding_window_profiles, EntropyValue};

use crate::commands::StageTimer;
use crate::csvio::{cell, create_output, read_signal, Manifest};
use crate::errors::CliError;
use crate::flags::ProfileFlags;

pub fn run(
    input: &Path,
    window: usize,
    overlap: f64,
    flags: &ProfileFlags,
    out: &Path,
) -> Result<(), CliError> {
    let mut timer = StageTimer::new();
    let config = flags.to_config()?;
    let signal = read_signal(input)?;
    timer.stage("load");

    // Advisory only: template statistics get thin once a coarse grain drops
    // below 10^m samples.
    let m = flags.entropy.m;
    let min_grain = window / config.scale_max;
    if min_grain < 10usize.saturating_pow(m as u32) {
        eprintln!(
            "warning: window {window} at scale {} leaves grains of {} samples, \
             fewer than 10^{m}; estimates may be unstable",
            config.scale_max, min_grain
        );
    }

    let windows = sliding_window_profiles(&signal, window, overlap, &config)?;
    timer.stage("compute");

    let mut manifest = Manifest::new();
    manifest.push("input", input.display());
    manifest.push("window", window);
    manifest.push("overlap", overlap);
    manifest.push("hop", windows.hop());
    manifest.push("windows", windows.profiles().len());
    flags.describe(&mut manifest);

    let mut w = create_output(out, &manifest)?;
    writeln!(w, "window_start,tau,entropy,defined")?;
    for (start, profile) in windows.profiles() {
        for (tau, value) in profile.entries() {
            let (entropy, defined) = match value {
                EntropyValue::Finite(v) => (cell(Some(*v)), 1),
                EntropyValue::Undefined(_) => (cell(None), 0),
            };
            writeln!(w, "{start},{tau},{entropy},{defined}")?;
        }
    }
    w.flush()?;
    timer.stage("write");
    timer.report();
    Ok(())
}

//! `mscale compare`: per-scale Welch t tests between two groups of signals,
//! with Benjamini-Hochberg adjustment across the emitted scale set.

use std::io::Write;
use std::path::Path;

use mscale_core::{bh_fdr_adjust, multiscale_profile, welch_t_test, MultiscaleProfile};
use rayon::prelude::*;

use crate::commands::batch::glob_files;
use crate::commands::StageTimer;
use crate::csvio::{cell, create_output, Manifest};
use crate::errors::CliError;
use crate::flags::ProfileFlags;

fn group_profiles(
    pattern: &str,
    label: &str,
    config: &mscale_core::MultiscaleConfig,
) -> Result<Vec<MultiscaleProfile>, CliError> {
    let files = glob_files(pattern)?;
    if files.len() < 2 {
        return Err(CliError::Usage(format!(
            "group {label} needs at least 2 files, {pattern:?} matched {}",
            files.len()
        )));
    }
    files
        .par_iter()
        .map(|path| {
            let signal = crate::csvio::read_signal(path)?;
            multiscale_profile(&signal, config).map_err(CliError::from)
        })
        .collect()
}

pub fn run(
    group_a: &str,
    group_b: &str,
    flags: &ProfileFlags,
    out: &Path,
) -> Result<(), CliError> {
    let mut timer = StageTimer::new();
    let config = flags.to_config()?;
    let profiles_a = group_profiles(group_a, "A", &config)?;
    let profiles_b = group_profiles(group_b, "B", &config)?;
    timer.stage("profiles");

    // One Welch test per scale over the defined entries; scales where a
    // group has fewer than two usable values are emitted with blank cells.
    let scale_count = profiles_a[0].entries().len();
    let taus: Vec<usize> =
        profiles_a[0].entries().iter().map(|(tau, _)| *tau).collect();
    let mut p_raw: Vec<Option<f64>> = Vec::with_capacity(scale_count);
    for idx in 0..scale_count {
        let values = |profiles: &[MultiscaleProfile]| -> Vec<f64> {
            profiles.iter().filter_map(|p| p.entries()[idx].1.value()).collect()
        };
        let a = values(&profiles_a);
        let b = values(&profiles_b);
        p_raw.push(welch_t_test(&a, &b).ok());
    }

    let present: Vec<f64> = p_raw.iter().flatten().copied().collect();
    if present.is_empty() {
        return Err(CliError::Usage(
            "no scale had two usable values per group; nothing to compare".into(),
        ));
    }
    let adjusted = bh_fdr_adjust(&present)?;
    let mut adjusted_iter = adjusted.into_iter();
    let p_fdr: Vec<Option<f64>> =
        p_raw.iter().map(|p| p.map(|_| adjusted_iter.next().unwrap())).collect();
    timer.stage("tests");

    let mut manifest = Manifest::new();
    manifest.push("group_a", group_a);
    manifest.push("group_b", group_b);
    manifest.push("files_a", profiles_a.len());
    manifest.push("files_b", profiles_b.len());
    flags.describe(&mut manifest);

    let mut w = create_output(out, &manifest)?;
    writeln!(w, "tau,p_raw,p_fdr,log10_p_fdr")?;
    for ((tau, raw), fdr) in taus.iter().zip(&p_raw).zip(&p_fdr) {
        let log_fdr = fdr.and_then(|p| (p > 0.0).then(|| p.log10()));
        writeln!(w, "{tau},{},{},{}", cell(*raw), cell(*fdr), cell(log_fdr))?;
    }
    w.flush()?;
    timer.stage("write");
    timer.report();
    Ok(())
}

//! `mscale batch`: many realizations -> per-scale ensemble statistics.
//!
//! Realizations are either generated (seeds `seed_base..seed_base+R-1`,
//! generator parameters at their paper defaults) or read from a glob of CSV
//! files. Profiles are computed in parallel; the aggregation itself is
//! order-independent.

use std::io::Write;

use clap::ValueEnum;
use mscale_core::synth::{self, LorenzParams, Seed};
use mscale_core::{multiscale_profile, summarize, MultiscaleProfile, Signal};
use rayon::prelude::*;

use crate::commands::StageTimer;
use crate::csvio::{cell, create_output, read_signal, Manifest};
use crate::errors::CliError;
use crate::BatchCmd;

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum GenKind {
    Wgn,
    #[value(name = "1f")]
    OneOverF,
    Ar1,
    Mix,
    Logistic,
    Chirp,
    Lorenz,
}

impl GenKind {
    fn name(&self) -> &'static str {
        match self {
            GenKind::Wgn => "wgn",
            GenKind::OneOverF => "1f",
            GenKind::Ar1 => "ar1",
            GenKind::Mix => "mix",
            GenKind::Logistic => "logistic",
            GenKind::Chirp => "chirp",
            GenKind::Lorenz => "lorenz",
        }
    }

    /// True when the realization actually depends on its seed.
    fn seeded(&self) -> bool {
        !matches!(self, GenKind::Logistic | GenKind::Chirp | GenKind::Lorenz)
    }

    fn generate(&self, n: Option<usize>, seed: u64) -> Result<Signal, CliError> {
        if n.is_some() && matches!(self, GenKind::Chirp | GenKind::Lorenz) {
            return Err(CliError::Usage(
                "--samples does not apply to chirp/lorenz; their length follows --fs".into(),
            ));
        }
        let sig = match self {
            GenKind::Wgn => synth::gen_wgn(n.unwrap_or(40_000), Seed(seed))?,
            GenKind::OneOverF => synth::gen_one_over_f(n.unwrap_or(40_000), Seed(seed))?,
            GenKind::Ar1 => synth::gen_ar1_sweep(n.unwrap_or(15_000), 0.9, -0.9, Seed(seed))?,
            GenKind::Mix => synth::gen_mix(n.unwrap_or(15_000), 0.01, 0.99, Seed(seed))?,
            GenKind::Logistic => {
                synth::gen_logistic_sweep(n.unwrap_or(15_000), 3.5, 3.99, 0.5)?
            }
            GenKind::Chirp => synth::gen_chirp(
                synth::CHIRP_DEFAULT_FS,
                synth::CHIRP_DEFAULT_DURATION_S,
                synth::CHIRP_DEFAULT_F_START,
                synth::CHIRP_DEFAULT_F_END,
            )?,
            GenKind::Lorenz => synth::gen_lorenz_two_regime(
                150.0,
                7_500,
                &LorenzParams::regime_a(),
                &LorenzParams::regime_b(),
                Seed(seed),
            )?,
        };
        Ok(sig)
    }
}

/// Expands a glob into a sorted file list.
pub fn glob_files(pattern: &str) -> Result<Vec<std::path::PathBuf>, CliError> {
    let paths = glob::glob(pattern)
        .map_err(|e| CliError::Usage(format!("bad glob {pattern:?}: {e}")))?;
    let mut files = Vec::new();
    for entry in paths {
        files.push(entry.map_err(|e| CliError::Io(e.to_string()))?);
    }
    files.sort();
    if files.is_empty() {
        return Err(CliError::Io(format!("no files match {pattern:?}")));
    }
    Ok(files)
}

pub fn run(args: &BatchCmd) -> Result<(), CliError> {
    let mut timer = StageTimer::new();
    let config = args.profile.to_config()?;
    if args.realizations < 1 {
        return Err(CliError::Usage("--realizations must be at least 1".into()));
    }

    let mut manifest = Manifest::new();
    let profiles: Vec<MultiscaleProfile> = match (&args.gen, &args.in_glob) {
        (Some(kind), None) => {
            manifest.push("gen", kind.name());
            manifest.push("realizations", args.realizations);
            manifest.push(
                "seeds",
                format!("{}..{}", args.seed_base, args.seed_base + args.realizations as u64),
            );
            if !kind.seeded() && args.realizations > 1 {
                eprintln!(
                    "warning: {} is deterministic; all realizations are identical",
                    kind.name()
                );
            }
            (0..args.realizations)
                .into_par_iter()
                .map(|i| {
                    let signal = kind.generate(args.samples, args.seed_base + i as u64)?;
                    multiscale_profile(&signal, &config).map_err(CliError::from)
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        (None, Some(pattern)) => {
            let files = glob_files(pattern)?;
            manifest.push("in_glob", pattern);
            manifest.push("files", files.len());
            files
                .par_iter()
                .map(|path| {
                    let signal = read_signal(path)?;
                    multiscale_profile(&signal, &config).map_err(CliError::from)
                })
                .collect::<Result<Vec<_>, _>>()?
        }
        _ => {
            return Err(CliError::Usage(
                "exactly one of --gen or --in-glob is required".into(),
            ))
        }
    };
    timer.stage("profiles");

    let summary = summarize(&profiles)?;
    args.profile.describe(&mut manifest);
    let mut w = create_output(&args.out, &manifest)?;
    writeln!(w, "tau,mean,sd,cv,n_defined,n_total")?;
    for s in summary.scales() {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            s.tau,
            cell(s.mean),
            cell(s.sd),
            cell(s.cv),
            s.n_defined,
            s.n_total
        )?;
    }
    w.flush()?;
    timer.stage("write");
    timer.report();
    Ok(())
}

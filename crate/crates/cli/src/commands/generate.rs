//! `mscale generate <kind>`: write one synthetic signal as CSV.

use std::path::PathBuf;

use clap::{Args, Subcommand};
use mscale_core::synth::{self, LorenzParams, Seed};
use mscale_core::Signal;

use crate::commands::StageTimer;
use crate::csvio::{write_signal, Manifest};
use crate::errors::CliError;

#[derive(Args, Debug)]
pub struct OutArg {
    /// Output CSV file.
    #[arg(long, value_name = "CSV")]
    pub out: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Kind {
    /// White Gaussian noise.
    Wgn {
        #[arg(long, default_value_t = 40_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// 1/f (pink) noise, spectrally shaped and normalized to unit SD.
    #[command(name = "1f")]
    OneOverF {
        #[arg(long, default_value_t = 40_000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Constant-amplitude chirp swept logarithmically in frequency.
    Chirp {
        #[arg(long, default_value_t = synth::CHIRP_DEFAULT_FS)]
        fs: f64,
        #[arg(long, default_value_t = synth::CHIRP_DEFAULT_DURATION_S)]
        duration: f64,
        #[arg(long, default_value_t = synth::CHIRP_DEFAULT_F_START)]
        f_start: f64,
        #[arg(long, default_value_t = synth::CHIRP_DEFAULT_F_END)]
        f_end: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// AR(1) process with the coefficient swept linearly.
    Ar1 {
        #[arg(long, default_value_t = 15_000)]
        n: usize,
        #[arg(long, default_value_t = 0.9, allow_negative_numbers = true)]
        rho_start: f64,
        #[arg(long, default_value_t = -0.9, allow_negative_numbers = true)]
        rho_end: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// MIX process: sinusoid replaced by uniform noise with probability p.
    Mix {
        #[arg(long, default_value_t = 15_000)]
        n: usize,
        #[arg(long, default_value_t = 0.01)]
        p_start: f64,
        #[arg(long, default_value_t = 0.99)]
        p_end: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Logistic map with the parameter swept linearly.
    Logistic {
        #[arg(long, default_value_t = 15_000)]
        n: usize,
        #[arg(long, default_value_t = 3.5)]
        alpha_start: f64,
        #[arg(long, default_value_t = 3.99)]
        alpha_end: f64,
        #[arg(long, default_value_t = 0.5)]
        x0: f64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Two-regime Lorenz system, each segment normalized to unit SD.
    Lorenz {
        #[arg(long, default_value_t = 150.0)]
        fs: f64,
        #[arg(long, default_value_t = 7_500)]
        seg_len: usize,
        #[arg(long, default_value_t = 10.0)]
        lambda: f64,
        #[arg(long, default_value_t = 8.0 / 3.0)]
        beta: f64,
        #[arg(long, default_value_t = 28.0)]
        rho_a: f64,
        #[arg(long, default_value_t = 99.96)]
        rho_b: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
}

fn require(cond: bool, message: &str) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(CliError::Usage(message.into()))
    }
}

/// Builds the signal, its manifest entries, and the output path.
fn build(kind: &Kind) -> Result<(Signal, Manifest, PathBuf), CliError> {
    let mut manifest = Manifest::new();
    let (signal, out) = match kind {
        Kind::Wgn { n, seed, out } => {
            require(*n >= 1, "--n must be at least 1")?;
            manifest.push("kind", "wgn");
            manifest.push("n", n);
            manifest.push("seed", seed);
            (synth::gen_wgn(*n, Seed(*seed))?, out.out.clone())
        }
        Kind::OneOverF { n, seed, out } => {
            require(*n >= 2, "--n must be at least 2")?;
            manifest.push("kind", "1f");
            manifest.push("n", n);
            manifest.push("seed", seed);
            (synth::gen_one_over_f(*n, Seed(*seed))?, out.out.clone())
        }
        Kind::Chirp { fs, duration, f_start, f_end, out } => {
            require(*fs > 0.0, "--fs must be positive")?;
            require(*duration > 0.0, "--duration must be positive")?;
            require(
                *f_start > 0.0 && f_start < f_end && *f_end < fs / 2.0,
                "need 0 < --f-start < --f-end < fs/2",
            )?;
            manifest.push("kind", "chirp");
            manifest.push("fs", fs);
            manifest.push("duration_s", duration);
            manifest.push("f_start", f_start);
            manifest.push("f_end", f_end);
            (synth::gen_chirp(*fs, *duration, *f_start, *f_end)?, out.out.clone())
        }
        Kind::Ar1 { n, rho_start, rho_end, seed, out } => {
            require(*n >= 1, "--n must be at least 1")?;
            require(
                rho_start.abs() < 1.0 && rho_end.abs() < 1.0,
                "--rho-start and --rho-end must lie inside (-1, 1)",
            )?;
            manifest.push("kind", "ar1");
            manifest.push("n", n);
            manifest.push("rho_start", rho_start);
            manifest.push("rho_end", rho_end);
            manifest.push("seed", seed);
            (synth::gen_ar1_sweep(*n, *rho_start, *rho_end, Seed(*seed))?, out.out.clone())
        }
        Kind::Mix { n, p_start, p_end, seed, out } => {
            require(*n >= 1, "--n must be at least 1")?;
            require(
                (0.0..=1.0).contains(p_start) && (0.0..=1.0).contains(p_end),
                "--p-start and --p-end must lie in [0, 1]",
            )?;
            manifest.push("kind", "mix");
            manifest.push("n", n);
            manifest.push("p_start", p_start);
            manifest.push("p_end", p_end);
            manifest.push("seed", seed);
            (synth::gen_mix(*n, *p_start, *p_end, Seed(*seed))?, out.out.clone())
        }
        Kind::Logistic { n, alpha_start, alpha_end, x0, out } => {
            require(*n >= 1, "--n must be at least 1")?;
            require(
                *alpha_start > 0.0 && *alpha_start <= 4.0 && *alpha_end > 0.0 && *alpha_end <= 4.0,
                "--alpha-start and --alpha-end must lie in (0, 4]",
            )?;
            require(*x0 > 0.0 && *x0 < 1.0, "--x0 must lie in (0, 1)")?;
            manifest.push("kind", "logistic");
            manifest.push("n", n);
            manifest.push("alpha_start", alpha_start);
            manifest.push("alpha_end", alpha_end);
            manifest.push("x0", x0);
            (synth::gen_logistic_sweep(*n, *alpha_start, *alpha_end, *x0)?, out.out.clone())
        }
        Kind::Lorenz { fs, seg_len, lambda, beta, rho_a, rho_b, seed, out } => {
            require(*fs > 0.0, "--fs must be positive")?;
            require(*seg_len >= 1, "--seg-len must be at least 1")?;
            let base = LorenzParams {
                lambda: *lambda,
                beta: *beta,
                ..LorenzParams::regime_a()
            };
            let a = LorenzParams { rho: *rho_a, ..base };
            let b = LorenzParams { rho: *rho_b, ..base };
            manifest.push("kind", "lorenz");
            manifest.push("fs", fs);
            manifest.push("seg_len", seg_len);
            manifest.push("lambda", lambda);
            manifest.push("beta", beta);
            manifest.push("rho_a", rho_a);
            manifest.push("rho_b", rho_b);
            manifest.push("seed", seed);
            (synth::gen_lorenz_two_regime(*fs, *seg_len, &a, &b, Seed(*seed))?, out.out.clone())
        }
    };
    Ok((signal, manifest, out))
}

pub fn run(kind: Kind) -> Result<(), CliError> {
    let mut timer = StageTimer::new();
    let (signal, mut manifest, out) = build(&kind)?;
    if let Some(fs) = signal.sample_rate_hz() {
        manifest.push("sample_rate_hz", fs);
    }
    manifest.push("samples", signal.len());
    timer.stage("generate");
    write_signal(&out, &signal, &manifest)?;
    timer.stage("write");
    timer.report();
    Ok(())
}

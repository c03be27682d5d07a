//! Flag groups shared between subcommands and their conversion into core
//! configuration types.

use clap::{Args, ValueEnum};
use mscale_core::{EntropyParams, Estimator, Moment, MultiscaleConfig, Tolerance};

use crate::errors::CliError;

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EstimatorArg {
    Sample,
    Fuzzy,
}

impl From<EstimatorArg> for Estimator {
    fn from(e: EstimatorArg) -> Estimator {
        match e {
            EstimatorArg::Sample => Estimator::Sample,
            EstimatorArg::Fuzzy => Estimator::Fuzzy,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MomentArg {
    Mean,
    Var,
    Std,
}

impl From<MomentArg> for Moment {
    fn from(m: MomentArg) -> Moment {
        match m {
            MomentArg::Mean => Moment::Mean,
            MomentArg::Var => Moment::Variance,
            MomentArg::Std => Moment::StdDev,
        }
    }
}

/// Entropy parameters; defaults are m = 2, n = 2, r = 0.15 x SD.
#[derive(Debug, Clone, Args)]
pub struct EntropyFlags {
    /// Embedding dimension m.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
    /// Fuzzy similarity exponent n.
    #[arg(long, default_value_t = 2.0)]
    pub n: f64,
    /// Tolerance as a multiple of the signal's standard deviation.
    #[arg(long, default_value_t = 0.15, conflicts_with = "r_abs")]
    pub r_factor: f64,
    /// Absolute tolerance, replacing --r-factor.
    #[arg(long)]
    pub r_abs: Option<f64>,
}

impl EntropyFlags {
    pub fn to_params(&self) -> Result<EntropyParams, CliError> {
        if self.m == 0 {
            return Err(CliError::Usage("--m must be at least 1".into()));
        }
        if !(self.n > 0.0) {
            return Err(CliError::Usage("--n must be positive".into()));
        }
        let tolerance = match self.r_abs {
            Some(r) if r > 0.0 => Tolerance::Absolute(r),
            Some(_) => return Err(CliError::Usage("--r-abs must be positive".into())),
            None if self.r_factor > 0.0 => Tolerance::Relative(self.r_factor),
            None => return Err(CliError::Usage("--r-factor must be positive".into())),
        };
        Ok(EntropyParams { embedding_dim: self.m, fuzzy_power: self.n, tolerance })
    }

    pub fn describe_tolerance(&self) -> String {
        match self.r_abs {
            Some(r) => format!("absolute {r}"),
            None => format!("factor {}", self.r_factor),
        }
    }
}

/// Everything that defines one multiscale method.
#[derive(Debug, Clone, Args)]
pub struct ProfileFlags {
    #[arg(long, value_enum)]
    pub estimator: EstimatorArg,
    #[arg(long, value_enum)]
    pub moment: MomentArg,
    /// Refined composite: pool match statistics over all block offsets.
    #[arg(long)]
    pub rc: bool,
    /// Inclusive scale range, e.g. 1:20.
    #[arg(long, value_parser = parse_scales)]
    pub scales: (usize, usize),
    /// Emit scale 1 of a spread moment as an undefined row instead of
    /// rejecting the scale range.
    #[arg(long)]
    pub allow_degenerate: bool,
    #[command(flatten)]
    pub entropy: EntropyFlags,
}

impl ProfileFlags {
    pub fn to_config(&self) -> Result<MultiscaleConfig, CliError> {
        let moment: Moment = self.moment.into();
        let (scale_min, scale_max) = self.scales;
        if moment.is_spread() && scale_min == 1 && !self.allow_degenerate {
            return Err(CliError::Usage(
                "--moment var/std is undefined at scale 1; start --scales at 2 \
                 or pass --allow-degenerate to emit it as an undefined row"
                    .into(),
            ));
        }
        Ok(MultiscaleConfig {
            estimator: self.estimator.into(),
            moment,
            refined_composite: self.rc,
            scale_min,
            scale_max,
            params: self.entropy.to_params()?,
        })
    }

    /// Manifest lines describing the resolved method.
    pub fn describe(&self, manifest: &mut crate::csvio::Manifest) {
        manifest.push("estimator", format!("{:?}", self.estimator).to_lowercase());
        manifest.push("moment", format!("{:?}", self.moment).to_lowercase());
        manifest.push("refined_composite", self.rc);
        manifest.push("scales", format!("{}:{}", self.scales.0, self.scales.1));
        manifest.push("m", self.entropy.m);
        manifest.push("n", self.entropy.n);
        manifest.push("tolerance", self.entropy.describe_tolerance());
    }
}

fn parse_scales(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("expected A:B, got {s:?}"))?;
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad lower scale {lo:?}"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad upper scale {hi:?}"))?;
    if lo == 0 {
        return Err("scales start at 1".into());
    }
    if hi < lo {
        return Err(format!("empty scale range {lo}:{hi}"));
    }
    Ok((lo, hi))
}

//! Multiscale profiles: entropy as a function of the scale factor, with or
//! without refined composite averaging, plus sliding-window profiles.
//!
//! Twelve variants arise from {sample, fuzzy} × {mean, variance, std-dev}
//! × {basic, refined composite}. The tolerance is resolved once from the
//! original signal and reused at every scale, so entropy differences across
//! scales reflect the coarse-grained dynamics rather than a moving yardstick.
//!
//! Refined composite averaging pools the estimators' internal quantities
//! over all `tau` offset-shifted grains of a scale before the final log
//! ratio: averaged match counts for the sample estimator, averaged
//! similarity means for the fuzzy one. A single shifted grain with matches
//! is then enough to keep the scale defined.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use crate::coarse::{coarse_grain, CoarseGrainSpec, Moment};
use crate::entropy::{
    entropy_from_counts, entropy_from_phi, fuzzy_phi, resolve_tolerance, sample_match_counts,
    EntropyParams, EntropyValue, MatchCounts, PhiPair, UndefinedCause,
};
use crate::error::{Error, Result};
use crate::math;
use crate::parallel::map_indices;
use crate::signal::Signal;

/// Which single-scale estimator scores the coarse grains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Estimator {
    Sample,
    Fuzzy,
}

/// Full description of one multiscale method.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiscaleConfig {
    pub estimator: Estimator,
    pub moment: Moment,
    pub refined_composite: bool,
    /// Smallest scale factor, at least 1.
    pub scale_min: usize,
    /// Largest scale factor, at least `scale_min`.
    pub scale_max: usize,
    pub params: EntropyParams,
}

impl MultiscaleConfig {
    pub fn scales(&self) -> RangeInclusive<usize> {
        self.scale_min..=self.scale_max
    }

    pub fn validate(&self) -> Result<()> {
        if self.scale_min == 0 {
            return Err(Error::BadParam("scale range must start at 1 or above"));
        }
        if self.scale_max < self.scale_min {
            return Err(Error::BadParam("scale range must not be empty"));
        }
        self.params.validate()
    }
}

/// Entropy per scale factor, with the configuration and resolved tolerance
/// that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiscaleProfile {
    config: MultiscaleConfig,
    tolerance: f64,
    entries: Vec<(usize, EntropyValue)>,
}

impl MultiscaleProfile {
    /// `(tau, value)` pairs in ascending scale order, one per configured
    /// scale.
    pub fn entries(&self) -> &[(usize, EntropyValue)] {
        &self.entries
    }

    pub fn get(&self, tau: usize) -> Option<EntropyValue> {
        self.entries.iter().find(|(t, _)| *t == tau).map(|(_, v)| *v)
    }

    /// The tolerance resolved from the original signal; identical at every
    /// scale of this profile.
    pub fn tolerance_used(&self) -> f64 {
        self.tolerance
    }

    pub fn config(&self) -> &MultiscaleConfig {
        &self.config
    }
}

fn undefined_if_short(e: Error) -> Result<EntropyValue> {
    match e {
        Error::TooShort { .. } => Ok(EntropyValue::Undefined(UndefinedCause::TooShort)),
        other => Err(other),
    }
}

fn sample_scale_value(grains: &[Signal], m: usize, r: f64) -> Result<EntropyValue> {
    let mut total = MatchCounts { b_m: 0, b_m1: 0, template_count: 0 };
    for grain in grains {
        match sample_match_counts(grain, m, r) {
            Ok(c) => {
                total.b_m += c.b_m;
                total.b_m1 += c.b_m1;
                total.template_count += c.template_count;
            }
            Err(e) => return undefined_if_short(e),
        }
    }
    // Averaging the per-shift counts and taking their ratio is the same as
    // taking the ratio of the sums.
    Ok(entropy_from_counts(&total))
}

fn fuzzy_scale_value(grains: &[Signal], params: &EntropyParams, r: f64) -> Result<EntropyValue> {
    let mut sum_m = 0.0;
    let mut sum_m1 = 0.0;
    for grain in grains {
        match fuzzy_phi(grain, params, r) {
            Ok(PhiPair { phi_m, phi_m1 }) => {
                sum_m += phi_m;
                sum_m1 += phi_m1;
            }
            Err(e) => return undefined_if_short(e),
        }
    }
    let k = grains.len() as f64;
    Ok(entropy_from_phi(&PhiPair { phi_m: sum_m / k, phi_m1: sum_m1 / k }))
}

/// Entropy of one scale factor under `config`, with the tolerance already
/// resolved from the original signal.
///
/// Scales whose grains are too short for the estimator come back as
/// `Undefined(TooShort)`; a spread moment at scale 1 comes back as
/// `Undefined(DegenerateScale)` so callers can surface the gap explicitly.
pub fn scale_entropy(
    signal: &Signal,
    config: &MultiscaleConfig,
    tau: usize,
    tolerance: f64,
) -> Result<EntropyValue> {
    if config.moment.is_spread() && tau == 1 {
        return Ok(EntropyValue::Undefined(UndefinedCause::DegenerateScale));
    }
    let offsets = if config.refined_composite { tau } else { 1 };
    let mut grains = Vec::with_capacity(offsets);
    for offset in 1..=offsets {
        match coarse_grain(signal, &CoarseGrainSpec { tau, offset, moment: config.moment }) {
            Ok(grain) => grains.push(grain),
            Err(e) => return undefined_if_short(e),
        }
    }
    match config.estimator {
        Estimator::Sample => sample_scale_value(&grains, config.params.embedding_dim, tolerance),
        Estimator::Fuzzy => fuzzy_scale_value(&grains, &config.params, tolerance),
    }
}

/// Computes the full profile over the configured scale range.
///
/// The tolerance is resolved once from `signal`; each scale is then an
/// independent pure computation (parallelized across scales under the
/// `rayon` feature, with results identical to sequential execution).
pub fn multiscale_profile(signal: &Signal, config: &MultiscaleConfig) -> Result<MultiscaleProfile> {
    config.validate()?;
    let tolerance = resolve_tolerance(signal, &config.params)?;
    let taus: Vec<usize> = config.scales().collect();
    let values = map_indices(taus.len(), |i| scale_entropy(signal, config, taus[i], tolerance));
    let mut entries = Vec::with_capacity(taus.len());
    for (tau, value) in taus.into_iter().zip(values) {
        entries.push((tau, value?));
    }
    Ok(MultiscaleProfile { config: *config, tolerance, entries })
}

/// Profiles of consecutive fixed-length windows of a signal.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowedProfiles {
    window_len: usize,
    hop: usize,
    profiles: Vec<(usize, MultiscaleProfile)>,
}

impl WindowedProfiles {
    pub fn window_len(&self) -> usize {
        self.window_len
    }

    /// Window start spacing in samples.
    pub fn hop(&self) -> usize {
        self.hop
    }

    /// `(start_index, profile)` pairs in window order.
    pub fn profiles(&self) -> &[(usize, MultiscaleProfile)] {
        &self.profiles
    }
}

/// Runs `multiscale_profile` on a window sliding along the signal.
///
/// Windows start at sample 0 and advance by
/// `hop = round(window_len * (1 - overlap_fraction))`; a final incomplete
/// window is dropped. Each window is treated as an independent signal, so
/// its tolerance is resolved from the window itself.
pub fn sliding_window_profiles(
    signal: &Signal,
    window_len: usize,
    overlap_fraction: f64,
    config: &MultiscaleConfig,
) -> Result<WindowedProfiles> {
    config.validate()?;
    if window_len == 0 {
        return Err(Error::BadWindow("window length must be positive"));
    }
    let n = signal.len();
    if window_len > n {
        return Err(Error::BadWindow("window length exceeds signal length"));
    }
    if !(0.0..1.0).contains(&overlap_fraction) {
        return Err(Error::BadWindow("overlap fraction must lie in [0, 1)"));
    }
    let hop = math::round(window_len as f64 * (1.0 - overlap_fraction)) as usize;
    if hop == 0 {
        return Err(Error::BadWindow("hop rounds to zero"));
    }

    let starts: Vec<usize> =
        (0..=n - window_len).step_by(hop).collect();
    let y = signal.samples();
    let results = map_indices(starts.len(), |i| {
        let start = starts[i];
        let window = match signal.sample_rate_hz() {
            Some(fs) => Signal::with_rate(y[start..start + window_len].to_vec(), fs),
            None => Signal::new(y[start..start + window_len].to_vec()),
        }?;
        multiscale_profile(&window, config)
    });
    let mut profiles = Vec::with_capacity(starts.len());
    for (start, profile) in starts.into_iter().zip(results) {
        profiles.push((start, profile?));
    }
    Ok(WindowedProfiles { window_len, hop, profiles })
}

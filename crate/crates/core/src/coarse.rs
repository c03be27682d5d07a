//! Coarse-graining: summarize non-overlapping length-`tau` blocks of a
//! signal by their mean, variance, or standard deviation.
//!
//! The block grid may start at any offset `u` in `1..=tau`; offset 1 is the
//! classical coarse-graining, and the full set of shifted grids is what the
//! refined composite scheme averages over.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::signal::Signal;

/// Which statistic summarizes each block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Moment {
    Mean,
    Variance,
    StdDev,
}

impl Moment {
    /// Variance and standard deviation of a single sample are always 0, so
    /// spread-based coarse-graining needs blocks of at least two samples.
    pub fn is_spread(&self) -> bool {
        matches!(self, Moment::Variance | Moment::StdDev)
    }
}

/// One coarse-graining: scale factor, block-grid offset, and block statistic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoarseGrainSpec {
    /// Block length `tau >= 1`.
    pub tau: usize,
    /// Grid offset `u` in `1..=tau` (1 = classical grid).
    pub offset: usize,
    pub moment: Moment,
}

fn validate(spec: &CoarseGrainSpec) -> Result<()> {
    if spec.tau == 0 {
        return Err(Error::BadParam("scale factor must be at least 1"));
    }
    if spec.offset == 0 || spec.offset > spec.tau {
        return Err(Error::BadParam("offset must lie in 1..=tau"));
    }
    if spec.moment.is_spread() && spec.tau == 1 {
        return Err(Error::DegenerateScale);
    }
    Ok(())
}

/// Coarse-grains a signal at one scale and offset.
///
/// Block `j` (1-based) covers samples `offset + tau*(j-1) ..= offset + tau*j - 1`
/// in 1-based indexing; the output has `floor((C - offset + 1) / tau)` values
/// and any incomplete trailing block is discarded. Variance uses the
/// population divisor `tau` and `StdDev` is its square root. The output
/// inherits a sampling rate of `fs / tau` when the input carries one.
pub fn coarse_grain(signal: &Signal, spec: &CoarseGrainSpec) -> Result<Signal> {
    validate(spec)?;
    let y = signal.samples();
    let c = y.len();
    let first = spec.offset - 1; // 0-based start of the block grid
    let needed = spec.offset - 1 + spec.tau;
    if c < needed {
        return Err(Error::TooShort { needed, actual: c });
    }
    let blocks = (c - first) / spec.tau;
    let tau = spec.tau as f64;

    let mut out = Vec::with_capacity(blocks);
    for j in 0..blocks {
        let block = &y[first + j * spec.tau..first + (j + 1) * spec.tau];
        let mean = block.iter().sum::<f64>() / tau;
        let value = match spec.moment {
            Moment::Mean => mean,
            Moment::Variance | Moment::StdDev => {
                // Spread of a constant block is exactly 0, independent of
                // rounding in its mean.
                let var = if block.iter().all(|x| *x == block[0]) {
                    0.0
                } else {
                    block
                        .iter()
                        .map(|x| {
                            let d = x - mean;
                            d * d
                        })
                        .sum::<f64>()
                        / tau
                };
                if spec.moment == Moment::Variance {
                    var
                } else {
                    math::sqrt(var)
                }
            }
        };
        out.push(value);
    }
    match signal.sample_rate_hz() {
        Some(fs) => Signal::with_rate(out, fs / spec.tau as f64),
        None => Signal::new(out),
    }
}

/// All `tau` offset-shifted coarse grains at one scale, in offset order
/// `u = 1..=tau`.
pub fn all_shifted_grains(signal: &Signal, tau: usize, moment: Moment) -> Result<Vec<Signal>> {
    (1..=tau)
        .map(|offset| coarse_grain(signal, &CoarseGrainSpec { tau, offset, moment }))
        .collect()
}

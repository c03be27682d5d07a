//! The input/output type shared by every transform in the crate.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// A finite, real-valued sequence with an optional sampling rate.
///
/// Construction validates the two invariants every operation relies on:
/// the sequence is non-empty and every sample is a finite number.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    samples: Vec<f64>,
    sample_rate_hz: Option<f64>,
}

impl Signal {
    /// Builds a signal without a sampling rate (an abstract sequence).
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        Self::build(samples, None)
    }

    /// Builds a signal sampled at `sample_rate_hz` (must be positive).
    pub fn with_rate(samples: Vec<f64>, sample_rate_hz: f64) -> Result<Self> {
        if !(sample_rate_hz > 0.0) || !sample_rate_hz.is_finite() {
            return Err(Error::BadParam("sample rate must be a positive finite number"));
        }
        Self::build(samples, Some(sample_rate_hz))
    }

    fn build(samples: Vec<f64>, sample_rate_hz: Option<f64>) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySignal);
        }
        if let Some(index) = samples.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFiniteSample { index });
        }
        Ok(Signal { samples, sample_rate_hz })
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    /// Always false; kept for idiomatic pairing with `len`.
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn sample_rate_hz(&self) -> Option<f64> {
        self.sample_rate_hz
    }

    /// Arithmetic mean of the samples.
    pub fn mean(&self) -> f64 {
        self.samples.iter().sum::<f64>() / self.samples.len() as f64
    }

    /// Standard deviation with the population divisor N.
    ///
    /// This is the convention used wherever a tolerance is derived from
    /// "the standard deviation of the signal"; cross-realization summaries
    /// in [`crate::stats`] use the sample divisor N − 1 instead. Constant
    /// signals report exactly 0 regardless of rounding in the mean.
    pub fn population_sd(&self) -> f64 {
        let first = self.samples[0];
        if self.samples.iter().all(|x| *x == first) {
            return 0.0;
        }
        let mu = self.mean();
        let ss = self
            .samples
            .iter()
            .map(|x| {
                let d = x - mu;
                d * d
            })
            .sum::<f64>();
        math::sqrt(ss / self.samples.len() as f64)
    }
}

//! Multiscale entropy analysis of one-dimensional time series.
//!
//! The crate estimates the irregularity of a signal across time scales. At
//! each scale the signal is coarse-grained into non-overlapping blocks that
//! are summarized by their mean, variance, or standard deviation, and the
//! resulting series is scored with sample entropy or fuzzy entropy. The
//! refined composite scheme additionally pools the estimators' internal
//! match statistics over every block offset of a scale, which stabilizes
//! the estimate and makes undefined outcomes rarer on short records.
//!
//! The building blocks are exposed individually:
//!
//! * [`entropy`] — single-scale sample/fuzzy entropy kernels and the raw
//!   match-count / similarity-average primitives they are built from,
//! * [`coarse`] — coarse-graining by mean, variance, or standard deviation
//!   at any block offset,
//! * [`multiscale`] — profiles over a scale range, refined composite
//!   averaging, and sliding-window profiles,
//! * [`synth`] — seeded generators for the usual benchmark signals (white
//!   and 1/f noise, chirp, AR(1) sweep, MIX process, logistic map, Lorenz
//!   system),
//! * [`stats`] — ensemble summaries and the group-comparison tests (Welch's
//!   t, Levene, Benjamini–Hochberg adjustment).
//!
//! All operations are pure functions of their inputs and safe to call from
//! many threads. The crate is `no_std` compatible (it requires `alloc`);
//! disable the default `std` feature for freestanding targets. Enabling the
//! `rayon` feature parallelizes profile computation across scales, shifts,
//! and windows without changing any result bit.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod coarse;
pub mod entropy;
mod error;
mod math;
pub mod multiscale;
mod parallel;
pub mod signal;
pub mod stats;
pub mod synth;

pub use coarse::{all_shifted_grains, coarse_grain, CoarseGrainSpec, Moment};
pub use entropy::{
    fuzzy_entropy, fuzzy_phi, resolve_tolerance, sample_entropy, sample_match_counts,
    EntropyParams, EntropyValue, MatchCounts, PhiPair, Tolerance, UndefinedCause,
};
pub use error::{Error, Result};
pub use multiscale::{
    multiscale_profile, scale_entropy, sliding_window_profiles, Estimator, MultiscaleConfig,
    MultiscaleProfile, WindowedProfiles,
};
pub use signal::Signal;
pub use stats::{bh_fdr_adjust, levene_test, summarize, welch_t_test, EnsembleSummary, ScaleSummary};
pub use synth::Seed;

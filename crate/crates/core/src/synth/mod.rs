//! Seeded generators for the benchmark signals used to exercise multiscale
//! entropy methods: white Gaussian noise, 1/f noise, a logarithmic chirp,
//! an AR(1) process with swept coefficient, the MIX sinusoid/noise blend,
//! the logistic map with swept parameter, and a two-regime Lorenz system.
//!
//! Every generator is a pure function of its full argument list, seed
//! included; equal calls produce bit-identical signals.

mod fft;
mod rng;

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::signal::Signal;

use fft::fft_in_place;
use rng::SplitMix64;

/// Seed for the deterministic generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

/// Chirp defaults: 150 Hz sampling for 100 s, swept from 0.1 to 30 Hz.
pub const CHIRP_DEFAULT_FS: f64 = 150.0;
pub const CHIRP_DEFAULT_DURATION_S: f64 = 100.0;
pub const CHIRP_DEFAULT_F_START: f64 = 0.1;
pub const CHIRP_DEFAULT_F_END: f64 = 30.0;

/// Logistic-map iterations discarded before recording starts, so sweeps
/// that begin in a periodic regime settle onto the attracting cycle first.
pub const LOGISTIC_BURN_IN: usize = 1000;

fn lerp_step(start: f64, end: f64, k: usize, n: usize) -> f64 {
    if n <= 1 {
        start
    } else {
        start + (end - start) * (k as f64 / (n - 1) as f64)
    }
}

/// `n` independent standard-normal samples.
pub fn gen_wgn(n: usize, seed: Seed) -> Result<Signal> {
    if n == 0 {
        return Err(Error::BadParam("sample count must be at least 1"));
    }
    let mut rng = SplitMix64::new(seed.0);
    Signal::new((0..n).map(|_| rng.standard_normal()).collect())
}

/// 1/f ("pink") noise of length `n`, normalized to population SD 1.
///
/// Synthesis is spectral: white Gaussian noise of the next power-of-two
/// length is transformed, each positive-frequency bin `k` is scaled by
/// `1/sqrt(k)` (the zero-frequency bin is zeroed, mirror bins are scaled
/// symmetrically so the inverse transform stays real), and the first `n`
/// samples of the inverse transform are kept.
pub fn gen_one_over_f(n: usize, seed: Seed) -> Result<Signal> {
    if n < 2 {
        return Err(Error::BadParam("1/f noise needs at least 2 samples"));
    }
    let m = n.next_power_of_two();
    let mut rng = SplitMix64::new(seed.0);
    let mut re: Vec<f64> = (0..m).map(|_| rng.standard_normal()).collect();
    let mut im = vec![0.0; m];

    fft_in_place(&mut re, &mut im, false);
    re[0] = 0.0;
    im[0] = 0.0;
    for k in 1..=m / 2 {
        let w = 1.0 / math::sqrt(k as f64);
        re[k] *= w;
        im[k] *= w;
        if k != m / 2 {
            re[m - k] *= w;
            im[m - k] *= w;
        }
    }
    fft_in_place(&mut re, &mut im, true);

    re.truncate(n);
    let sig = Signal::new(re)?;
    let sd = sig.population_sd();
    if sd == 0.0 {
        return Err(Error::ZeroVariance);
    }
    Signal::new(sig.samples().iter().map(|x| x / sd).collect())
}

/// Unit-amplitude cosine whose instantaneous frequency sweeps
/// logarithmically from `f_start` to `f_end` over `duration_s`.
///
/// The phase is the closed-form integral of
/// `f(t) = f_start * (f_end / f_start)^(t / duration)`, starting at 0.
pub fn gen_chirp(fs: f64, duration_s: f64, f_start: f64, f_end: f64) -> Result<Signal> {
    if !(fs > 0.0) || !fs.is_finite() || !(duration_s > 0.0) || !duration_s.is_finite() {
        return Err(Error::BadParam("sampling rate and duration must be positive"));
    }
    if !(f_start > 0.0 && f_start < f_end && f_end < fs / 2.0) {
        return Err(Error::BadFrequency { f_start, f_end, nyquist: fs / 2.0 });
    }
    let len = math::round(fs * duration_s) as usize;
    if len == 0 {
        return Err(Error::BadParam("duration too short for one sample"));
    }
    let ratio_ln = math::ln(f_end / f_start);
    let two_pi = 2.0 * core::f64::consts::PI;
    let samples = (0..len)
        .map(|k| {
            let t = k as f64 / fs;
            let phase =
                two_pi * f_start * duration_s / ratio_ln * (math::powf(f_end / f_start, t / duration_s) - 1.0);
            math::cos(phase)
        })
        .collect();
    Signal::with_rate(samples, fs)
}

/// AR(1) process `x_k = rho_k * x_{k-1} + eps_k` with unit-variance Gaussian
/// innovations and the coefficient swept linearly from `rho_start` to
/// `rho_end`. The recursion starts from `x = 0`.
pub fn gen_ar1_sweep(n: usize, rho_start: f64, rho_end: f64, seed: Seed) -> Result<Signal> {
    if n == 0 {
        return Err(Error::BadParam("sample count must be at least 1"));
    }
    // The sweep is linear, so the extremes are attained at the endpoints.
    if !(math::abs(rho_start) < 1.0 && math::abs(rho_end) < 1.0) {
        return Err(Error::BadParam("AR(1) coefficient must stay inside (-1, 1)"));
    }
    let mut rng = SplitMix64::new(seed.0);
    let mut state = 0.0;
    let samples = (0..n)
        .map(|k| {
            state = lerp_step(rho_start, rho_end, k, n) * state + rng.standard_normal();
            state
        })
        .collect();
    Signal::new(samples)
}

/// MIX process: each sample is either a fixed unit-variance sinusoid
/// (`sqrt(2) * sin(2*pi*k/12)`) or uniform noise on `[-sqrt(3), sqrt(3)]`,
/// choosing noise with probability `p_k` swept linearly from `p_start` to
/// `p_end`.
pub fn gen_mix(n: usize, p_start: f64, p_end: f64, seed: Seed) -> Result<Signal> {
    if n == 0 {
        return Err(Error::BadParam("sample count must be at least 1"));
    }
    if !(0.0..=1.0).contains(&p_start) || !(0.0..=1.0).contains(&p_end) {
        return Err(Error::BadParam("MIX probability must lie in [0, 1]"));
    }
    let sqrt2 = math::sqrt(2.0);
    let sqrt3 = math::sqrt(3.0);
    let two_pi_over_12 = core::f64::consts::PI / 6.0;
    let mut rng = SplitMix64::new(seed.0);
    let samples = (0..n)
        .map(|k| {
            let p = lerp_step(p_start, p_end, k, n);
            // Both uniforms are always drawn so the random stream consumed
            // per sample does not depend on p.
            let pick_noise = rng.uniform_open01() < p;
            let noise = (2.0 * rng.uniform_open01() - 1.0) * sqrt3;
            if pick_noise {
                noise
            } else {
                sqrt2 * math::sin(two_pi_over_12 * k as f64)
            }
        })
        .collect();
    Signal::new(samples)
}

/// Logistic map `x_k = alpha_k * x_{k-1} * (1 - x_{k-1})` with the
/// parameter swept linearly from `alpha_start` to `alpha_end`.
///
/// [`LOGISTIC_BURN_IN`] iterations at `alpha_start` are discarded before
/// recording begins.
pub fn gen_logistic_sweep(n: usize, alpha_start: f64, alpha_end: f64, x0: f64) -> Result<Signal> {
    if n == 0 {
        return Err(Error::BadParam("sample count must be at least 1"));
    }
    if !(x0 > 0.0 && x0 < 1.0) {
        return Err(Error::BadParam("logistic map state must start inside (0, 1)"));
    }
    if !(alpha_start > 0.0 && alpha_start <= 4.0 && alpha_end > 0.0 && alpha_end <= 4.0) {
        return Err(Error::BadParam("logistic map parameter must lie in (0, 4]"));
    }
    let mut x = x0;
    for _ in 0..LOGISTIC_BURN_IN {
        x = alpha_start * x * (1.0 - x);
    }
    let samples = (0..n)
        .map(|k| {
            x = lerp_step(alpha_start, alpha_end, k, n) * x * (1.0 - x);
            x
        })
        .collect();
    Signal::new(samples)
}

/// Parameters for one Lorenz segment
/// (`dx = lambda(y - x)`, `dy = x(rho - z) - y`, `dz = xy - beta*z`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorenzParams {
    pub lambda: f64,
    pub beta: f64,
    pub rho: f64,
    /// Integration step in seconds.
    pub step: f64,
    /// Number of recorded samples.
    pub length: usize,
    /// Starting state; `None` chains from the previous segment (or from
    /// `(1, 1, 1)` when there is none).
    pub initial_state: Option<[f64; 3]>,
}

impl LorenzParams {
    /// Chaotic regime: `lambda = 10`, `beta = 8/3`, `rho = 28`.
    pub fn regime_a() -> Self {
        LorenzParams {
            lambda: 10.0,
            beta: 8.0 / 3.0,
            rho: 28.0,
            step: 1.0 / 150.0,
            length: 7500,
            initial_state: None,
        }
    }

    /// Torus-knot regime: as A but with `rho = 99.96`.
    pub fn regime_b() -> Self {
        LorenzParams { rho: 99.96, ..Self::regime_a() }
    }
}

const LORENZ_BLOWUP_LIMIT: f64 = 1e12;

/// Integrates one Lorenz segment with fixed-step first-order (Euler) steps,
/// recording the x coordinate after each step. Returns the raw segment and
/// the final state, so segments can be chained.
pub fn gen_lorenz_segment(params: &LorenzParams, from: [f64; 3]) -> Result<(Vec<f64>, [f64; 3])> {
    if params.length == 0 {
        return Err(Error::BadParam("segment length must be at least 1"));
    }
    if !(params.step > 0.0) || !params.step.is_finite() {
        return Err(Error::BadParam("integration step must be positive"));
    }
    let [mut x, mut y, mut z] = from;
    let dt = params.step;
    let mut out = Vec::with_capacity(params.length);
    for _ in 0..params.length {
        let dx = params.lambda * (y - x);
        let dy = x * (params.rho - z) - y;
        let dz = x * y - params.beta * z;
        x += dx * dt;
        y += dy * dt;
        z += dz * dt;
        if math::abs(x) > LORENZ_BLOWUP_LIMIT
            || math::abs(y) > LORENZ_BLOWUP_LIMIT
            || math::abs(z) > LORENZ_BLOWUP_LIMIT
        {
            return Err(Error::NumericBlowup);
        }
        out.push(x);
    }
    Ok((out, [x, y, z]))
}

/// Two consecutive Lorenz segments of `seg_len` samples each, integrated
/// with step `1/fs` and concatenated after each segment is independently
/// normalized to population SD 1.
///
/// Segment A starts from its `initial_state` (default `(1, 1, 1)`); segment
/// B continues from segment A's final state unless its own `initial_state`
/// overrides that. The seed is accepted for interface uniformity with the
/// other generators but the integration itself is deterministic.
pub fn gen_lorenz_two_regime(
    fs: f64,
    seg_len: usize,
    params_a: &LorenzParams,
    params_b: &LorenzParams,
    seed: Seed,
) -> Result<Signal> {
    let _ = seed;
    if !(fs > 0.0) || !fs.is_finite() {
        return Err(Error::BadParam("sampling rate must be positive"));
    }
    if seg_len == 0 {
        return Err(Error::BadParam("segment length must be at least 1"));
    }
    let step = 1.0 / fs;
    let a = LorenzParams { step, length: seg_len, ..*params_a };
    let b = LorenzParams { step, length: seg_len, ..*params_b };

    let start_a = a.initial_state.unwrap_or([1.0, 1.0, 1.0]);
    let (seg_a, final_a) = gen_lorenz_segment(&a, start_a)?;
    let start_b = b.initial_state.unwrap_or(final_a);
    let (seg_b, _) = gen_lorenz_segment(&b, start_b)?;

    let mut samples = Vec::with_capacity(2 * seg_len);
    for seg in [seg_a, seg_b] {
        let sig = Signal::new(seg)?;
        let sd = sig.population_sd();
        if sd == 0.0 {
            return Err(Error::ZeroVariance);
        }
        samples.extend(sig.samples().iter().map(|x| x / sd));
    }
    Signal::with_rate(samples, fs)
}

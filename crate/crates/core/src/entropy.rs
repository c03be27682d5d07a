//! Single-scale sample entropy and fuzzy entropy, plus the raw match-count
//! and similarity-average primitives that refined composite averaging needs.
//!
//! Both estimators compare all pairs of length-`m` and length-`m + 1`
//! template vectors drawn from the signal under the Chebyshev (maximum
//! componentwise) distance. Sample entropy counts pairs closer than the
//! tolerance `r`; fuzzy entropy replaces the hard count with the similarity
//! kernel `exp(-d^n / r)` applied to templates that first have their own
//! mean removed. Template sets for both lengths range over the same
//! `N - m` start positions, which guarantees that every `(m + 1)`-match is
//! also an `m`-match.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::signal::Signal;

/// How the tolerance `r` is specified.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tolerance {
    /// Use `r` verbatim.
    Absolute(f64),
    /// Use `factor` times the population standard deviation of the signal
    /// the tolerance is resolved against (conventionally the original,
    /// uncoarsened signal).
    Relative(f64),
}

/// Parameters shared by both estimators.
///
/// `fuzzy_power` is only consulted by the fuzzy estimator. The defaults
/// (`m = 2`, `n = 2`, `r = 0.15 × SD`) are the customary choice for
/// physiological records.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropyParams {
    /// Embedding dimension `m` (template length).
    pub embedding_dim: usize,
    /// Exponent `n` of the fuzzy similarity kernel.
    pub fuzzy_power: f64,
    /// Tolerance specification.
    pub tolerance: Tolerance,
}

impl Default for EntropyParams {
    fn default() -> Self {
        EntropyParams {
            embedding_dim: 2,
            fuzzy_power: 2.0,
            tolerance: Tolerance::Relative(0.15),
        }
    }
}

impl EntropyParams {
    pub(crate) fn validate(&self) -> Result<()> {
        if self.embedding_dim == 0 {
            return Err(Error::BadParam("embedding dimension must be at least 1"));
        }
        if !(self.fuzzy_power > 0.0) || !self.fuzzy_power.is_finite() {
            return Err(Error::BadParam("fuzzy power must be a positive finite number"));
        }
        let factor = match self.tolerance {
            Tolerance::Absolute(r) => r,
            Tolerance::Relative(f) => f,
        };
        if !(factor > 0.0) || !factor.is_finite() {
            return Err(Error::BadParam("tolerance must resolve to a positive finite number"));
        }
        Ok(())
    }
}

/// Why an entropy value came out undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UndefinedCause {
    /// Sample entropy found zero template matches at one of the lengths.
    NoMatches,
    /// The (coarse-grained) series was too short to form two templates.
    TooShort,
    /// Spread-based coarse-graining was requested at scale 1.
    DegenerateScale,
}

impl UndefinedCause {
    /// Stable lowercase token, e.g. for CLI output.
    pub fn token(&self) -> &'static str {
        match self {
            UndefinedCause::NoMatches => "no_matches",
            UndefinedCause::TooShort => "too_short",
            UndefinedCause::DegenerateScale => "degenerate_scale",
        }
    }
}

/// A per-scale result: either a finite entropy or an explicit reason why
/// none exists.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EntropyValue {
    Finite(f64),
    Undefined(UndefinedCause),
}

impl EntropyValue {
    pub fn is_defined(&self) -> bool {
        matches!(self, EntropyValue::Finite(_))
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            EntropyValue::Finite(v) => Some(*v),
            EntropyValue::Undefined(_) => None,
        }
    }

    pub fn undefined_cause(&self) -> Option<UndefinedCause> {
        match self {
            EntropyValue::Finite(_) => None,
            EntropyValue::Undefined(c) => Some(*c),
        }
    }
}

/// Ordered-pair template match counts for sample entropy.
///
/// Both counts cover ordered pairs `(t1, t2)`, `t1 ≠ t2`, of templates
/// starting at the same `N - m` positions, so `b_m1 <= b_m` always holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatchCounts {
    /// Matches between length-`m` templates.
    pub b_m: u64,
    /// Matches between length-`m + 1` templates.
    pub b_m1: u64,
    /// Number of templates per length (`N - m`).
    pub template_count: usize,
}

/// Average similarity of template pairs at lengths `m` and `m + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhiPair {
    pub phi_m: f64,
    pub phi_m1: f64,
}

/// Resolves the tolerance specification against a concrete signal.
///
/// A relative tolerance is `factor × SD(signal)` with the population SD.
/// Callers computing multiscale profiles resolve the tolerance once from
/// the original signal and reuse it at every scale.
pub fn resolve_tolerance(signal: &Signal, params: &EntropyParams) -> Result<f64> {
    params.validate()?;
    let r = match params.tolerance {
        Tolerance::Absolute(r) => r,
        Tolerance::Relative(factor) => {
            let sd = signal.population_sd();
            if sd == 0.0 {
                return Err(Error::ZeroVariance);
            }
            factor * sd
        }
    };
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::BadParam("tolerance must resolve to a positive finite number"));
    }
    Ok(r)
}

/// Counts template matches at lengths `m` and `m + 1` under tolerance `r`.
///
/// A pair matches when its Chebyshev distance is strictly smaller than `r`.
/// Template start positions are sorted by their first component so that
/// only pairs already within `r` on that component are inspected; the
/// counts are exactly those of the naive double loop.
pub fn sample_match_counts(signal: &Signal, m: usize, r: f64) -> Result<MatchCounts> {
    if m == 0 {
        return Err(Error::BadParam("embedding dimension must be at least 1"));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::BadParam("tolerance must be a positive finite number"));
    }
    let y = signal.samples();
    let n = y.len();
    if n < m + 2 {
        return Err(Error::TooShort { needed: m + 2, actual: n });
    }
    let t = n - m;

    let mut order: Vec<u32> = (0..t as u32).collect();
    order.sort_unstable_by(|&a, &b| y[a as usize].total_cmp(&y[b as usize]));

    let mut b_m: u64 = 0;
    let mut b_m1: u64 = 0;
    let mut hi = 0usize;
    for a in 0..t {
        if hi < a + 1 {
            hi = a + 1;
        }
        let base = y[order[a] as usize];
        while hi < t && y[order[hi] as usize] - base < r {
            hi += 1;
        }
        let ti = order[a] as usize;
        'pairs: for &oj in &order[a + 1..hi] {
            let tj = oj as usize;
            for k in 1..m {
                if math::abs(y[ti + k] - y[tj + k]) >= r {
                    continue 'pairs;
                }
            }
            // Ordered pairs: (t1, t2) and (t2, t1) both count.
            b_m += 2;
            if math::abs(y[ti + m] - y[tj + m]) < r {
                b_m1 += 2;
            }
        }
    }
    Ok(MatchCounts { b_m, b_m1, template_count: t })
}

pub(crate) fn entropy_from_counts(counts: &MatchCounts) -> EntropyValue {
    if counts.b_m == 0 || counts.b_m1 == 0 {
        EntropyValue::Undefined(UndefinedCause::NoMatches)
    } else {
        // + 0.0 turns the -0.0 of a perfect ratio into plain 0.
        EntropyValue::Finite(-math::ln(counts.b_m1 as f64 / counts.b_m as f64) + 0.0)
    }
}

/// Sample entropy of a signal: `-ln(B_{m+1} / B_m)`.
///
/// Undefined (rather than an error) when no template pair matches at one
/// of the lengths, which is common on short records.
pub fn sample_entropy(signal: &Signal, params: &EntropyParams) -> Result<EntropyValue> {
    let r = resolve_tolerance(signal, params)?;
    let counts = sample_match_counts(signal, params.embedding_dim, r)?;
    Ok(entropy_from_counts(&counts))
}

#[derive(Clone, Copy)]
enum PowKind {
    Identity,
    Square,
    General(f64),
}

impl PowKind {
    fn of(n: f64) -> Self {
        if n == 1.0 {
            PowKind::Identity
        } else if n == 2.0 {
            PowKind::Square
        } else {
            PowKind::General(n)
        }
    }

    #[inline(always)]
    fn apply(self, d: f64) -> f64 {
        match self {
            PowKind::Identity => d,
            PowKind::Square => d * d,
            PowKind::General(n) => math::powf(d, n),
        }
    }
}

#[inline(always)]
fn chebyshev(a: &[f64], b: &[f64]) -> f64 {
    let mut d = 0.0;
    for (x, y) in a.iter().zip(b.iter()) {
        let diff = math::abs(x - y);
        if diff > d {
            d = diff;
        }
    }
    d
}

/// Templates of length `len` starting at `0..t`, each with its own mean
/// removed, flattened row-major.
fn centered_templates(y: &[f64], t: usize, len: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(t * len);
    for s in 0..t {
        let w = &y[s..s + len];
        // Center via residuals from the first element: algebraically the
        // same as subtracting the window mean, but a common offset cancels
        // before any rounding can smear it.
        let base = w[0];
        let resid_mean = w.iter().map(|x| x - base).sum::<f64>() / len as f64;
        out.extend(w.iter().map(|x| (x - base) - resid_mean));
    }
    out
}

/// Average similarity `exp(-d^n / r)` over all template pairs, at lengths
/// `m` and `m + 1`.
///
/// Each template has its own mean subtracted before distances are taken,
/// so the result is insensitive to local baseline shifts. Both averages
/// run over the same `N - m` template start positions.
pub fn fuzzy_phi(signal: &Signal, params: &EntropyParams, r: f64) -> Result<PhiPair> {
    params.validate()?;
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::BadParam("tolerance must be a positive finite number"));
    }
    let y = signal.samples();
    let n = y.len();
    let m = params.embedding_dim;
    if n < m + 2 {
        return Err(Error::TooShort { needed: m + 2, actual: n });
    }
    let t = n - m;

    let cm = centered_templates(y, t, m);
    let cm1 = centered_templates(y, t, m + 1);
    let pow = PowKind::of(params.fuzzy_power);

    let mut sum_m = 0.0;
    let mut sum_m1 = 0.0;
    for i in 0..t {
        let ai = &cm[i * m..(i + 1) * m];
        let bi = &cm1[i * (m + 1)..(i + 1) * (m + 1)];
        for j in (i + 1)..t {
            let d = chebyshev(ai, &cm[j * m..(j + 1) * m]);
            let d1 = chebyshev(bi, &cm1[j * (m + 1)..(j + 1) * (m + 1)]);
            sum_m += math::exp(-pow.apply(d) / r);
            sum_m1 += math::exp(-pow.apply(d1) / r);
        }
    }
    // The double sum over ordered pairs is twice the sum over i < j, and
    // the normalizer T(T-1) is twice the pair count, so the halves cancel.
    let pairs = (t as f64) * (t as f64 - 1.0) / 2.0;
    Ok(PhiPair { phi_m: sum_m / pairs, phi_m1: sum_m1 / pairs })
}

pub(crate) fn entropy_from_phi(phi: &PhiPair) -> EntropyValue {
    // phi is mathematically positive; it can only reach 0.0 here if every
    // pair similarity underflowed, in which case there is nothing to take
    // a ratio of.
    if phi.phi_m <= 0.0 || phi.phi_m1 <= 0.0 {
        EntropyValue::Undefined(UndefinedCause::NoMatches)
    } else {
        EntropyValue::Finite(-math::ln(phi.phi_m1 / phi.phi_m) + 0.0)
    }
}

/// Fuzzy entropy of a signal: `-ln(phi_{m+1} / phi_m)`.
///
/// Because similarity is graded rather than counted, the result is finite
/// on inputs where sample entropy would be undefined.
pub fn fuzzy_entropy(signal: &Signal, params: &EntropyParams) -> Result<EntropyValue> {
    let r = resolve_tolerance(signal, params)?;
    let phi = fuzzy_phi(signal, params, r)?;
    Ok(entropy_from_phi(&phi))
}

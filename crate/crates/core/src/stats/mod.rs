//! Ensemble summaries across realizations and the group-comparison
//! statistics: Welch's unequal-variance t test, the classic mean-centered
//! Levene test, and Benjamini–Hochberg step-up adjustment.

mod special;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;
use crate::multiscale::MultiscaleProfile;

/// Per-scale aggregate over an ensemble of profiles.
///
/// Moments are taken over the defined (finite) entries only, with the
/// sample divisor n − 1; undefined entries still count toward `n_total` so
/// attrition stays visible. The coefficient of variation is `sd / mean`,
/// available only when at least two defined values exist and the mean is
/// nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleSummary {
    pub tau: usize,
    pub mean: Option<f64>,
    pub sd: Option<f64>,
    pub cv: Option<f64>,
    pub n_defined: usize,
    pub n_total: usize,
}

/// Per-scale mean/SD/CV over many realizations or subjects.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleSummary {
    scales: Vec<ScaleSummary>,
}

impl EnsembleSummary {
    pub fn scales(&self) -> &[ScaleSummary] {
        &self.scales
    }

    pub fn get(&self, tau: usize) -> Option<&ScaleSummary> {
        self.scales.iter().find(|s| s.tau == tau)
    }
}

fn mean_of(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Sample standard deviation (divisor n − 1). Exactly 0 for identical
/// values, regardless of rounding in the mean.
fn sample_sd(values: &[f64]) -> f64 {
    if values.iter().all(|x| *x == values[0]) {
        return 0.0;
    }
    let mu = mean_of(values);
    let ss = values
        .iter()
        .map(|x| {
            let d = x - mu;
            d * d
        })
        .sum::<f64>();
    math::sqrt(ss / (values.len() - 1) as f64)
}

/// Aggregates profiles scale by scale.
///
/// All profiles must have been produced by the same configuration; mixing
/// scale ranges or methods is an error rather than a silent average of
/// unlike quantities.
pub fn summarize(profiles: &[MultiscaleProfile]) -> Result<EnsembleSummary> {
    let first = profiles.first().ok_or(Error::BadParam("need at least one profile"))?;
    if profiles.iter().any(|p| p.config() != first.config()) {
        return Err(Error::MixedConfigs);
    }
    let n_total = profiles.len();
    let mut scales = Vec::with_capacity(first.entries().len());
    for (idx, (tau, _)) in first.entries().iter().enumerate() {
        let mut values: Vec<f64> =
            profiles.iter().filter_map(|p| p.entries()[idx].1.value()).collect();
        // Summing in a canonical order makes the result independent of the
        // order the profiles were supplied in.
        values.sort_unstable_by(f64::total_cmp);
        let n_defined = values.len();
        let mean = (n_defined >= 1).then(|| mean_of(&values));
        let sd = (n_defined >= 2).then(|| sample_sd(&values));
        let cv = match (mean, sd) {
            (Some(m), Some(s)) if m != 0.0 => Some(s / m),
            _ => None,
        };
        scales.push(ScaleSummary { tau: *tau, mean, sd, cv, n_defined, n_total });
    }
    Ok(EnsembleSummary { scales })
}

fn check_group(values: &[f64]) -> Result<()> {
    if values.len() < 2 || values.iter().any(|x| !x.is_finite()) {
        return Err(Error::Degenerate);
    }
    Ok(())
}

/// Two-sided Welch t test (unequal variances), returning the p-value.
///
/// Degrees of freedom follow Welch–Satterthwaite; the p-value comes from
/// the incomplete beta form of the t distribution tail. Each group needs
/// at least two finite values and nonzero variance.
pub fn welch_t_test(group_a: &[f64], group_b: &[f64]) -> Result<f64> {
    check_group(group_a)?;
    check_group(group_b)?;
    let (na, nb) = (group_a.len() as f64, group_b.len() as f64);
    let (ma, mb) = (mean_of(group_a), mean_of(group_b));
    let va = {
        let s = sample_sd(group_a);
        s * s
    };
    let vb = {
        let s = sample_sd(group_b);
        s * s
    };
    if va == 0.0 || vb == 0.0 {
        return Err(Error::Degenerate);
    }
    let sa = va / na;
    let sb = vb / nb;
    let se2 = sa + sb;
    let t = (ma - mb) / math::sqrt(se2);
    let df = se2 * se2 / (sa * sa / (na - 1.0) + sb * sb / (nb - 1.0));
    Ok(special::student_t_two_sided(t, df))
}

/// Classic mean-centered Levene test for equality of spread between two
/// groups, returning the p-value of the one-way ANOVA F statistic on the
/// absolute deviations from each group's mean.
pub fn levene_test(group_a: &[f64], group_b: &[f64]) -> Result<f64> {
    check_group(group_a)?;
    check_group(group_b)?;
    let k = 2.0;
    let n = (group_a.len() + group_b.len()) as f64;

    let z_a: Vec<f64> = {
        let m = mean_of(group_a);
        group_a.iter().map(|x| math::abs(x - m)).collect()
    };
    let z_b: Vec<f64> = {
        let m = mean_of(group_b);
        group_b.iter().map(|x| math::abs(x - m)).collect()
    };
    let (za_bar, zb_bar) = (mean_of(&z_a), mean_of(&z_b));
    let z_bar = (z_a.iter().sum::<f64>() + z_b.iter().sum::<f64>()) / n;

    let between = group_a.len() as f64 * (za_bar - z_bar) * (za_bar - z_bar)
        + group_b.len() as f64 * (zb_bar - z_bar) * (zb_bar - z_bar);
    let within = z_a.iter().map(|z| (z - za_bar) * (z - za_bar)).sum::<f64>()
        + z_b.iter().map(|z| (z - zb_bar) * (z - zb_bar)).sum::<f64>();

    if within == 0.0 {
        // All deviations equal inside each group. If the groups also agree
        // there is nothing to test; otherwise the spread difference is as
        // extreme as it gets.
        return if between == 0.0 { Err(Error::Degenerate) } else { Ok(0.0) };
    }
    let f = (n - k) / (k - 1.0) * between / within;
    Ok(special::f_upper_tail(f, k - 1.0, n - k))
}

/// Benjamini–Hochberg step-up adjustment.
///
/// Sorting ascending, `q_(i) = min_{j >= i} p_(j) * m / j` clipped to 1,
/// returned in the original input order.
pub fn bh_fdr_adjust(p_values: &[f64]) -> Result<Vec<f64>> {
    for &p in p_values {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::BadP(p));
        }
    }
    let m = p_values.len();
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| p_values[a].total_cmp(&p_values[b]));

    let mut adjusted = alloc::vec![0.0; m];
    let mut running = 1.0f64;
    for rank in (0..m).rev() {
        let idx = order[rank];
        // Multiplying by the ratio (>= 1) rather than dividing afterwards
        // keeps q >= p even at the last bit.
        let q = p_values[idx] * (m as f64 / (rank + 1) as f64);
        running = running.min(q).min(1.0);
        adjusted[idx] = running;
    }
    Ok(adjusted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::EntropyParams;
    use crate::multiscale::{multiscale_profile, Estimator, MultiscaleConfig};
    use crate::synth::{gen_wgn, Seed};
    use crate::Moment;
    use alloc::vec;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn profile(seed: u64, scale_max: usize) -> MultiscaleProfile {
        let s = gen_wgn(300, Seed(seed)).unwrap();
        let cfg = MultiscaleConfig {
            estimator: Estimator::Fuzzy,
            moment: Moment::Mean,
            refined_composite: false,
            scale_min: 1,
            scale_max,
            params: EntropyParams::default(),
        };
        multiscale_profile(&s, &cfg).unwrap()
    }

    #[test]
    fn summarize_identical_profiles_has_zero_spread() {
        let p = profile(1, 3);
        let summary = summarize(&[p.clone(), p.clone(), p]).unwrap();
        for s in summary.scales() {
            assert_eq!(s.sd, Some(0.0));
            assert_eq!(s.cv, Some(0.0));
            assert_eq!(s.n_defined, 3);
            assert_eq!(s.n_total, 3);
        }
    }

    #[test]
    fn summarize_rejects_mixed_configs() {
        let p1 = profile(1, 3);
        let p2 = profile(2, 4);
        assert_eq!(summarize(&[p1, p2]), Err(Error::MixedConfigs));
        assert!(summarize(&[]).is_err());
    }

    #[test]
    fn summarize_is_permutation_invariant() {
        let ps = [profile(1, 3), profile(2, 3), profile(3, 3)];
        let fwd = summarize(&ps).unwrap();
        let rev: Vec<_> = ps.iter().rev().cloned().collect();
        assert_eq!(fwd, summarize(&rev).unwrap());
    }

    #[test]
    fn summary_arithmetic() {
        // Values {2, 4}: mean 3, sample sd sqrt(2), cv = sqrt(2)/3.
        let values = [2.0, 4.0];
        assert_eq!(mean_of(&values), 3.0);
        assert_abs_diff_eq!(sample_sd(&values), 2.0f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(sample_sd(&values) / mean_of(&values), 0.4714, epsilon = 1e-4);
    }

    #[test]
    fn welch_identical_groups() {
        let g = [1.0, 2.0, 3.0, 4.0];
        assert_relative_eq!(welch_t_test(&g, &g).unwrap(), 1.0, max_relative = 1e-12);
    }

    #[test]
    fn welch_is_symmetric_in_groups() {
        let a = [1.2, 1.9, 2.3, 1.7];
        let b = [2.8, 3.1, 2.6, 3.4, 2.9];
        assert_eq!(welch_t_test(&a, &b).unwrap(), welch_t_test(&b, &a).unwrap());
    }

    #[test]
    fn welch_p_decreases_as_means_separate() {
        let base = [0.0, 0.5, -0.5, 0.25, -0.25];
        let mut last = 1.1;
        for step in 0..5 {
            let shift = step as f64 * 0.5;
            let moved: Vec<f64> = base.iter().map(|x| x + shift).collect();
            let p = welch_t_test(&base, &moved).unwrap();
            assert!(p <= last, "shift {shift}: p {p} > previous {last}");
            last = p;
        }
    }

    #[test]
    fn welch_degenerate_groups_rejected() {
        assert_eq!(welch_t_test(&[1.0], &[1.0, 2.0]), Err(Error::Degenerate));
        assert_eq!(welch_t_test(&[1.0, 1.0], &[1.0, 2.0]), Err(Error::Degenerate));
        assert_eq!(welch_t_test(&[1.0, f64::NAN], &[1.0, 2.0]), Err(Error::Degenerate));
    }

    #[test]
    fn levene_equal_spread_shifted_location() {
        // Same deviation pattern in both groups: F = 0, p = 1.
        let p = levene_test(&[1.0, 2.0, 3.0], &[4.0, 5.0, 6.0]).unwrap();
        assert_relative_eq!(p, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn levene_detects_extreme_spread_difference() {
        let p = levene_test(&[0.0, 0.0, 0.0, 0.0], &[-5.0, 5.0, -5.0, 5.0]).unwrap();
        assert!(p < 0.01, "p = {p}");
    }

    #[test]
    fn levene_is_symmetric_and_degenerate_cases_error() {
        let a = [1.0, 3.0, 2.0];
        let b = [0.0, 10.0, 5.0];
        assert_eq!(levene_test(&a, &b).unwrap(), levene_test(&b, &a).unwrap());
        // Identical deviation patterns with zero within-group variation.
        assert_eq!(levene_test(&[0.0, 1.0], &[5.0, 6.0]), Err(Error::Degenerate));
    }

    // Frozen from scipy.stats.ttest_ind(equal_var=False) and
    // scipy.stats.levene(center='mean').
    const P_FIXTURES: [(&[f64], &[f64], f64, f64); 10] = [
        (
            &[0.0, 0.0, 0.0, 0.0, 1.0],
            &[1.0, 1.0, 1.0, 1.0, 0.0],
            0.06668799999999996,
            1.0,
        ),
        (
            &[1.2, 1.9, 2.3, 1.7],
            &[2.8, 3.1, 2.6, 3.4, 2.9],
            0.006585951987838035,
            0.529727691919013,
        ),
        (
            &[10.0, 11.0, 12.0, 13.0, 14.0],
            &[10.5, 11.5, 12.5, 13.5],
            1.0,
            0.697813198772174,
        ),
        (
            &[-1.0, 0.5, 0.25, -0.75, 1.5, 2.0],
            &[0.1, 0.2, 0.3, 0.4],
            0.7472161292940291,
            0.03704087082894432,
        ),
        (&[5.0, 5.1], &[4.9, 5.2, 5.3], 0.5740099796916703, 0.18995745594226132),
        (
            &[
                -1.088523, -0.10947, -0.818365, -0.322304, -0.313556, -0.888988, -0.488695,
                -0.213665, 2.115541, 0.484381, -1.429612, -0.201652, 1.620806, -0.237663,
                -0.884721, 0.747687, 0.643645, 0.820459, -0.06575, 0.525631, 0.079392, 0.679075,
            ],
            &[
                -0.963016, -1.523428, -3.062995, -1.850945, 0.554883, -2.022241, -4.337071,
                -0.573377, -2.708384,
            ],
            0.004480148741043378,
            0.1333140353491171,
        ),
        (
            &[-2.634884, -0.651175, 1.281197, -0.149508, 1.539381, -0.722245, 1.384133, -0.839105],
            &[
                4.765347, -3.284521, 3.625043, -7.374113, -3.058644, -1.988624, -4.402397,
                0.71633, 0.572886, 3.504911, 2.919173, -1.280674, -6.696761, -4.314801,
                -6.351775, -1.812248, -2.259727,
            ],
            0.17268560989856455,
            0.021012899280936158,
        ),
        (
            &[2.90201, 0.183526, -4.575457, -0.87658, -2.3583, 0.509392, -0.82839],
            &[4.464644, 3.497227, 4.753613, 2.586636, 2.483128, 0.276096, -0.313237],
            0.015780679512021143,
            0.8165431876745983,
        ),
        (
            &[-1.141306, -1.712336, 0.699874, -0.478501, -0.981632, -1.180962, -5.855571, -4.128409, 2.305346],
            &[
                1.19455, 0.914663, 0.069802, -1.115767, -1.706034, -0.754876, -0.158769,
                -0.768232, -2.894513, 0.190066, 0.037336, -0.845264, -1.711922, 0.012642,
                -1.931823, -2.931456, -1.105009, 2.191227,
            ],
            0.4009930051057111,
            0.19256096884581178,
        ),
        (
            &[
                -2.861999, -0.621752, -2.718923, -2.656977, -3.173385, -0.041576, 0.147498,
                0.553466, 0.363764, -3.211536, -2.52421, -0.149525,
            ],
            &[-1.869918, 4.088369, -1.035024, 1.720504, 1.211748, -4.749299, 1.272555, 2.124321, -6.745564],
            0.457315613016804,
            0.021189930102687066,
        ),
    ];

    #[test]
    fn welch_matches_reference_fixtures() {
        for (a, b, expected, _) in P_FIXTURES {
            let p = welch_t_test(a, b).unwrap();
            assert_abs_diff_eq!(p, expected, epsilon = 1e-6);
        }
    }

    #[test]
    fn levene_matches_reference_fixtures() {
        for (a, b, _, expected) in P_FIXTURES {
            let p = levene_test(a, b).unwrap();
            assert_abs_diff_eq!(p, expected, epsilon = 1e-6);
        }
    }

    #[test]
    fn bh_hand_computed_fixtures() {
        assert_eq!(bh_fdr_adjust(&[0.04]).unwrap(), vec![0.04]);
        assert_eq!(bh_fdr_adjust(&[0.01, 0.02, 0.03]).unwrap(), vec![0.03, 0.03, 0.03]);
        assert_eq!(bh_fdr_adjust(&[0.9, 0.001]).unwrap(), vec![0.9, 0.002]);
        // Step-up: [0.03, 0.002, 0.8, 0.04] sorted is [.002,.03,.04,.8];
        // raw q = [.008,.06,.053..,.8]; suffix minima give [.008,.0533..,.0533..,.8].
        let adj = bh_fdr_adjust(&[0.03, 0.002, 0.8, 0.04]).unwrap();
        let expected = [0.04 * 4.0 / 3.0, 0.008, 0.8, 0.04 * 4.0 / 3.0];
        for (got, want) in adj.iter().zip(expected) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-15);
        }
        // The suffix minimum caps the smaller raw p at the larger one's q,
        // which also keeps every adjusted value at or below 1.
        assert_eq!(bh_fdr_adjust(&[0.9, 0.95]).unwrap(), vec![0.95, 0.95]);
        assert_eq!(bh_fdr_adjust(&[0.99, 0.98]).unwrap(), vec![0.99, 0.99]);
    }

    #[test]
    fn bh_rejects_out_of_range() {
        assert_eq!(bh_fdr_adjust(&[0.5, 1.5]), Err(Error::BadP(1.5)));
        assert_eq!(bh_fdr_adjust(&[-0.1]), Err(Error::BadP(-0.1)));
    }

    #[test]
    fn bh_output_dominates_input() {
        let ps = [0.3, 0.001, 0.2, 0.9, 0.049, 0.05];
        let adj = bh_fdr_adjust(&ps).unwrap();
        for (raw, a) in ps.iter().zip(&adj) {
            assert!(a >= raw);
            assert!(*a <= 1.0);
        }
    }
}

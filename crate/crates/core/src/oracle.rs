//! Sampling oracle that simulates the physical channel.
//!
//! Draws are built from complex Gaussian channel coefficients (never from a
//! gamma sampler), so nothing here shares code with the analytic
//! distribution functions it is used to check.

use crate::capacity::{CapacityResult, LinkParams, Method};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::order_stats::{self, SelectionConfig};
use crate::rng;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 0x5EED_0001;

const MIN_SAMPLES: usize = 1_000;

/// Probabilities reported in [`EmpiricalSummary::quantiles`] by default.
pub const SUMMARY_PROBS: [f64; 7] = [0.01, 0.1, 0.25, 0.5, 0.75, 0.9, 0.99];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub samples: usize,
    pub seed: u64,
    pub execution: Execution,
}

impl McConfig {
    pub fn new(samples: usize, seed: u64) -> Self {
        Self {
            samples,
            seed,
            execution: Execution::default(),
        }
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub(crate) fn require(&self, min: usize) -> Result<()> {
        if self.samples < min {
            return Err(Error::invalid(
                "samples",
                format!("need at least {min}, got {}", self.samples),
            ));
        }
        Ok(())
    }
}

/// Outcome of a scalar Monte Carlo estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McRun {
    pub samples: usize,
    pub seed: u64,
    pub mean: f64,
    /// Sample standard deviation over `√samples`.
    pub std_error: f64,
}

impl McRun {
    pub(crate) fn from_values(values: &[f64], seed: u64) -> Self {
        let (mean, var) = mean_and_variance(values);
        Self {
            samples: values.len(),
            seed,
            mean,
            std_error: (var / values.len() as f64).sqrt(),
        }
    }

    pub fn into_capacity(self) -> CapacityResult {
        CapacityResult {
            value: self.mean,
            method: Method::MonteCarlo,
            error_estimate: self.std_error,
            degenerate: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalSummary {
    pub mean: f64,
    pub mean_std_error: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    /// Large-sample standard error of `variance`, `√((μ₄ − s⁴)/N)`.
    pub variance_std_error: f64,
    pub quantiles: Vec<(f64, f64)>,
    /// KS statistic against the exact law of `X_(m)`.
    pub ks_distance: f64,
    pub samples: usize,
    pub seed: u64,
}

/// Two-pass mean and unbiased variance, summed in index order.
pub(crate) fn mean_and_variance(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    (
        mean,
        if values.len() > 1 {
            ss / (n - 1.0)
        } else {
            0.0
        },
    )
}

/// Nearest-rank quantile of sorted data.
pub fn nearest_rank(sorted: &[f64], p: f64) -> f64 {
    let n = sorted.len();
    let rank = ((p * n as f64).ceil() as usize).clamp(1, n);
    sorted[rank - 1]
}

/// One-sample Kolmogorov–Smirnov statistic of sorted data against `cdf`.
///
/// Tied observations form one ecdf jump. The reference is evaluated on both
/// sides of each jump: just left of it against the ecdf below, and at it
/// against the ecdf after the jump.
pub fn ks_statistic<F: Fn(f64) -> f64>(sorted: &[f64], cdf: F) -> f64 {
    let n = sorted.len() as f64;
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < sorted.len() {
        let x = sorted[i];
        let mut j = i;
        while j + 1 < sorted.len() && sorted[j + 1] == x {
            j += 1;
        }
        let below = i as f64 / n;
        let at = (j + 1) as f64 / n;
        d = d
            .max((cdf(x.next_down()) - below).abs())
            .max((at - cdf(x)).abs());
        i = j + 1;
    }
    d.min(1.0)
}

/// Channel draws of `X_(m)`: for each sample, the largest of `m` column
/// energies `Σ_i |h_il|²`.
pub fn sample_selection_gains(cfg: &SelectionConfig, mc: &McConfig) -> Result<Vec<f64>> {
    mc.require(MIN_SAMPLES)?;
    let chunks = rng::chunks(mc.samples);
    let (n, m) = (cfg.n(), cfg.m());
    let parts = mc.execution.map_indexed(chunks.len(), |c| {
        let mut r = rng::stream(mc.seed, c as u64);
        (0..chunks[c].1)
            .map(|_| {
                (0..m)
                    .map(|_| {
                        (0..n)
                            .map(|_| rng::complex_gaussian(&mut r).norm_sqr())
                            .sum::<f64>()
                    })
                    .fold(0.0, f64::max)
            })
            .collect::<Vec<f64>>()
    });
    Ok(parts.concat())
}

pub fn summarize<F: Fn(f64) -> f64>(
    mut values: Vec<f64>,
    seed: u64,
    reference: F,
    probs: &[f64],
) -> EmpiricalSummary {
    let len = values.len();
    let (mean, variance) = mean_and_variance(&values);
    let m4 = values.iter().map(|v| (v - mean).powi(4)).sum::<f64>() / len as f64;
    values.sort_by(f64::total_cmp);
    EmpiricalSummary {
        mean,
        mean_std_error: (variance / len as f64).sqrt(),
        variance,
        variance_std_error: ((m4 - variance * variance).max(0.0) / len as f64).sqrt(),
        quantiles: probs
            .iter()
            .map(|&p| (p, nearest_rank(&values, p)))
            .collect(),
        ks_distance: ks_statistic(&values, reference),
        samples: len,
        seed,
    }
}

/// Simulate `X_(m)` and summarize it against its exact law.
pub fn sample_selection_gain(cfg: &SelectionConfig, mc: &McConfig) -> Result<EmpiricalSummary> {
    let values = sample_selection_gains(cfg, mc)?;
    Ok(summarize(
        values,
        mc.seed,
        |x| order_stats::max_cdf(cfg, x),
        &SUMMARY_PROBS,
    ))
}

/// KS distance of simulated `X_(m)` against an arbitrary reference cdf.
pub fn ks_against<F: Fn(f64) -> f64>(
    cfg: &SelectionConfig,
    mc: &McConfig,
    reference: F,
) -> Result<f64> {
    let mut values = sample_selection_gains(cfg, mc)?;
    values.sort_by(f64::total_cmp);
    Ok(ks_statistic(&values, reference))
}

/// Sample mean of `log₂(1 + ρ X_(m))` over simulated channels.
pub fn empirical_ergodic(
    cfg: &SelectionConfig,
    link: &LinkParams,
    mc: &McConfig,
) -> Result<CapacityResult> {
    let rates: Vec<f64> = sample_selection_gains(cfg, mc)?
        .into_iter()
        .map(|x| link.rate(x))
        .collect();
    Ok(McRun::from_values(&rates, mc.seed).into_capacity())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: u32, m: u64) -> SelectionConfig {
        SelectionConfig::new(n, m).unwrap()
    }

    #[test]
    fn too_few_samples_rejected() {
        assert!(sample_selection_gains(&cfg(1, 1), &McConfig::new(999, 1)).is_err());
    }

    #[test]
    fn seed_determinism_across_execution() {
        let mc = McConfig::new(10_000, 42);
        let a =
            sample_selection_gains(&cfg(2, 3), &mc.with_execution(Execution::Sequential)).unwrap();
        let b =
            sample_selection_gains(&cfg(2, 3), &mc.with_execution(Execution::Parallel)).unwrap();
        assert_eq!(a, b);
        let c = sample_selection_gains(&cfg(2, 3), &McConfig::new(10_000, 43)).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn unit_exponential_mean() {
        let s = sample_selection_gain(&cfg(1, 1), &McConfig::new(200_000, 7)).unwrap();
        assert!((s.mean - 1.0).abs() < 3.0 * s.mean_std_error);
    }

    #[test]
    fn harmonic_mean_for_three_branches() {
        let s = sample_selection_gain(&cfg(1, 3), &McConfig::new(200_000, 8)).unwrap();
        assert!(
            (s.mean - 11.0 / 6.0).abs() < 3.0 * s.mean_std_error,
            "{}",
            s.mean
        );
    }

    #[test]
    fn summary_shape() {
        let s = sample_selection_gain(&cfg(2, 4), &McConfig::new(20_000, 9)).unwrap();
        assert!(s.quantiles.windows(2).all(|w| w[0].1 <= w[1].1));
        assert!((0.0..=1.0).contains(&s.ks_distance));
        assert_eq!(s.samples, 20_000);
        assert_eq!(s.seed, 9);
    }

    #[test]
    fn ks_against_own_ecdf_vanishes() {
        let mut v = sample_selection_gains(&cfg(1, 2), &McConfig::new(5_000, 3)).unwrap();
        v.sort_by(f64::total_cmp);
        let ecdf = |x: f64| v.partition_point(|&s| s <= x) as f64 / v.len() as f64;
        assert!(ks_statistic(&v, ecdf) <= 1.0 / v.len() as f64);
        // continuous reference: the classic max(i/n − F, F − (i−1)/n) form
        let d = ks_statistic(&[0.2, 0.5, 0.9], |x| x);
        assert!((d - (0.9 - 2.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn ks_handles_ties() {
        let sorted = [1.0, 1.0, 2.0, 3.0];
        // step reference equal to the ecdf
        let d = ks_statistic(&sorted, |x| {
            if x < 1.0 {
                0.0
            } else if x < 2.0 {
                0.5
            } else if x < 3.0 {
                0.75
            } else {
                1.0
            }
        });
        assert!(d < 1e-15);
        let d = ks_statistic(&sorted, |_| 0.0);
        assert_eq!(d, 1.0);
    }

    #[test]
    fn nearest_rank_examples() {
        let s = [1.0, 2.0, 3.0, 4.0, 5.0];
        assert_eq!(nearest_rank(&s, 0.1), 1.0);
        assert_eq!(nearest_rank(&s, 0.5), 3.0);
        assert_eq!(nearest_rank(&s, 1.0), 5.0);
        assert_eq!(nearest_rank(&s, 0.0), 1.0);
    }

    #[test]
    fn empirical_low_snr_slope() {
        let link = LinkParams::new(1e-4).unwrap();
        let c = empirical_ergodic(&cfg(1, 1), &link, &McConfig::new(200_000, 5)).unwrap();
        assert!((c.value / (1e-4 / std::f64::consts::LN_2) - 1.0).abs() < 0.02);
        assert_eq!(c.method, Method::MonteCarlo);
    }
}

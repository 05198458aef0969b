//! Gumbel approximations of the selection-gain law.
//!
//! `F^m(a_m + b_m x) → exp(−e^{−x})`; the constructions here differ only in
//! how the normalizing constants `(a_m, b_m)` are chosen.

use std::f64::consts::PI;
use std::fmt;

use crate::error::{Error, Result};
use crate::order_stats::{self, SelectionConfig};
use crate::EULER_GAMMA;

/// Standard Gumbel cdf `G(x) = exp(−e^{−x})`.
pub fn gumbel_cdf(x: f64) -> f64 {
    (-(-x).exp()).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// `a = q_m`, `b = R(q_m)`.
    LemmaExact,
    /// `a = ln m + (n−1) ln ln m − ln (n−1)!`, `b = 1`.
    Asymptotic,
    /// `a = α + (n−1)/α`, `b = 1 + (n−1)/α` with `α = α_m`.
    OptimalAlpha,
    /// `a = q_m`, `b = 1 + (n−1)/q_m`.
    CorollaryQ,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::LemmaExact,
        Strategy::Asymptotic,
        Strategy::OptimalAlpha,
        Strategy::CorollaryQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::LemmaExact => "lemma",
            Strategy::Asymptotic => "asymptotic",
            Strategy::OptimalAlpha => "alpha",
            Strategy::CorollaryQ => "corollary",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Location/scale pair. `strategy` is `None` for user-supplied constants.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GumbelFit {
    location: f64,
    scale: f64,
    strategy: Option<Strategy>,
}

impl GumbelFit {
    /// Constants not produced by any of the built-in constructions.
    pub fn raw(location: f64, scale: f64) -> Result<Self> {
        if !location.is_finite() {
            return Err(Error::invalid("location", "must be finite"));
        }
        if !(scale > 0.0) || !scale.is_finite() {
            return Err(Error::invalid(
                "scale",
                format!("must be positive and finite, got {scale}"),
            ));
        }
        Ok(Self {
            location,
            scale,
            strategy: None,
        })
    }

    pub fn location(&self) -> f64 {
        self.location
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn strategy(&self) -> Option<Strategy> {
        self.strategy
    }

    /// Approximate `F_(m)(x)`.
    pub fn cdf(&self, x: f64) -> f64 {
        gumbel_cdf((x - self.location) / self.scale)
    }

    /// Approximate `(E[X_(m)], Var[X_(m)])`: `(a + γb, b²π²/6)`.
    pub fn moments(&self) -> (f64, f64) {
        (
            self.location + EULER_GAMMA * self.scale,
            self.scale * self.scale * PI * PI / 6.0,
        )
    }
}

fn unavailable(strategy: Strategy, cfg: &SelectionConfig, reason: &'static str) -> Error {
    Error::StrategyUnavailable {
        strategy: strategy.name(),
        n: cfg.n(),
        m: cfg.m(),
        reason,
    }
}

/// Build `(a_m, b_m)` with the requested construction. Requires `m ≥ 2`.
pub fn normalizing_constants(cfg: &SelectionConfig, strategy: Strategy) -> Result<GumbelFit> {
    if cfg.m() < 2 {
        return Err(unavailable(strategy, cfg, "needs m >= 2"));
    }
    let k = f64::from(cfg.n() - 1);
    let (location, scale) = match strategy {
        Strategy::LemmaExact => {
            let q = order_stats::q_m(cfg)?;
            (q, order_stats::residual_mean(cfg.n(), q)?)
        }
        Strategy::Asymptotic => {
            let a = order_stats::asymptotic_location(cfg.n(), cfg.m_f64()).ok_or_else(|| {
                unavailable(
                    strategy,
                    cfg,
                    "ln(ln m) undefined, needs m >= 3 when n >= 2",
                )
            })?;
            (a, 1.0)
        }
        Strategy::OptimalAlpha => {
            let alpha = order_stats::alpha_m(cfg).map_err(|e| match e {
                Error::AlphaUndefined { .. } => unavailable(
                    strategy,
                    cfg,
                    "alpha_m undefined (m at or below the mode threshold)",
                ),
                other => other,
            })?;
            (alpha + k / alpha, 1.0 + k / alpha)
        }
        Strategy::CorollaryQ => {
            let q = order_stats::q_m(cfg)?;
            (q, 1.0 + k / q)
        }
    };
    if !(scale > 0.0 && scale.is_finite() && location.is_finite()) {
        return Err(unavailable(strategy, cfg, "constants are not finite"));
    }
    Ok(GumbelFit {
        location,
        scale,
        strategy: Some(strategy),
    })
}

/// `gumbel_cdf((x − a)/b)`.
pub fn approx_max_cdf(fit: &GumbelFit, x: f64) -> f64 {
    fit.cdf(x)
}

pub fn approx_moments(fit: &GumbelFit) -> (f64, f64) {
    fit.moments()
}

/// `|F^m(a_m + b_m x) − G(x)|` for the given construction.
pub fn convergence_error(cfg: &SelectionConfig, strategy: Strategy, x: f64) -> Result<f64> {
    let fit = normalizing_constants(cfg, strategy)?;
    Ok(fit_error(cfg, &fit, x))
}

/// Same as [`convergence_error`] for an existing fit.
pub fn fit_error(cfg: &SelectionConfig, fit: &GumbelFit, x: f64) -> f64 {
    let exact = order_stats::max_cdf(cfg, fit.location + fit.scale * x);
    (exact - gumbel_cdf(x)).abs()
}

/// Sup-distance between exact `F_(m)` and the fitted Gumbel cdf on an evenly
/// spaced grid over `[0, x_max]`.
pub fn kolmogorov_distance_grid(
    cfg: &SelectionConfig,
    fit: &GumbelFit,
    x_max: f64,
    points: usize,
) -> f64 {
    let points = points.max(2);
    (0..points)
        .map(|i| {
            let x = x_max * i as f64 / (points - 1) as f64;
            (order_stats::max_cdf(cfg, x) - fit.cdf(x)).abs()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::Strategy;
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn cfg(n: u32, m: u64) -> SelectionConfig {
        SelectionConfig::new(n, m).unwrap()
    }

    #[test]
    fn gumbel_cdf_examples() {
        assert_relative_eq!(gumbel_cdf(0.0), (-1f64).exp(), max_relative = 1e-15);
        assert_eq!(gumbel_cdf(800.0), 1.0);
        assert_eq!(gumbel_cdf(-800.0), 0.0);
        let x = -(-(0.9f64).ln()).ln();
        assert_relative_eq!(gumbel_cdf(x), 0.9, max_relative = 1e-14);
    }

    #[test]
    fn lemma_and_asymptotic_agree_for_single_receive_antenna() {
        let lemma = normalizing_constants(&cfg(1, 10), Strategy::LemmaExact).unwrap();
        assert_relative_eq!(lemma.location(), 10f64.ln(), max_relative = 1e-13);
        assert_eq!(lemma.scale(), 1.0);
        let asym = normalizing_constants(&cfg(1, 10), Strategy::Asymptotic).unwrap();
        assert_relative_eq!(asym.location(), lemma.location(), max_relative = 1e-13);
        assert_eq!(asym.scale(), 1.0);
        assert_eq!(lemma.strategy(), Some(Strategy::LemmaExact));
    }

    #[test]
    fn corollary_constants() {
        let fit = normalizing_constants(&cfg(2, 100), Strategy::CorollaryQ).unwrap();
        assert_relative_eq!(fit.location(), 6.638_352_067_993_812, max_relative = 1e-12);
        assert_relative_eq!(
            fit.scale(),
            1.0 + 1.0 / 6.638_352_067_993_812,
            max_relative = 1e-12
        );
        assert!((fit.scale() - 1.15064).abs() < 1e-5);
    }

    #[test]
    fn lemma_invariant_links_to_residual_mean() {
        for n in 1..=5 {
            for m in [2u64, 7, 40] {
                let c = cfg(n, m);
                let fit = normalizing_constants(&c, Strategy::LemmaExact).unwrap();
                let q = order_stats::q_m(&c).unwrap();
                assert_eq!(fit.location(), q);
                assert_eq!(fit.scale(), order_stats::residual_mean(n, q).unwrap());
            }
        }
    }

    #[test]
    fn unavailable_strategies() {
        assert!(matches!(
            normalizing_constants(&cfg(2, 2), Strategy::Asymptotic),
            Err(Error::StrategyUnavailable {
                strategy: "asymptotic",
                ..
            })
        ));
        assert!(matches!(
            normalizing_constants(&cfg(2, 2), Strategy::OptimalAlpha),
            Err(Error::StrategyUnavailable {
                strategy: "alpha",
                ..
            })
        ));
        assert!(normalizing_constants(&cfg(3, 1), Strategy::LemmaExact).is_err());
        assert!(normalizing_constants(&cfg(2, 3), Strategy::Asymptotic).is_ok());
        assert!(normalizing_constants(&cfg(1, 2), Strategy::Asymptotic).is_ok());
    }

    #[test]
    fn approx_cdf_examples() {
        let fit = normalizing_constants(&cfg(1, 10), Strategy::LemmaExact).unwrap();
        assert_relative_eq!(
            approx_max_cdf(&fit, fit.location()),
            (-1f64).exp(),
            max_relative = 1e-15
        );
        assert_relative_eq!(
            approx_max_cdf(&fit, 10f64.ln() + 2.0),
            0.873_423_018_493_116_6,
            max_relative = 1e-12
        );
        assert_eq!(approx_max_cdf(&fit, -1e3), 0.0);
    }

    #[test]
    fn moments_examples() {
        let fit = normalizing_constants(&cfg(1, 10), Strategy::LemmaExact).unwrap();
        let (mean, var) = approx_moments(&fit);
        assert_relative_eq!(mean, 10f64.ln() + EULER_GAMMA, max_relative = 1e-13);
        assert!((mean - 2.87980).abs() < 1e-5);
        assert_relative_eq!(var, PI * PI / 6.0, max_relative = 1e-15);

        let (_, var) = GumbelFit::raw(0.0, 2.0).unwrap().moments();
        assert_relative_eq!(var, 4.0 * PI * PI / 6.0, max_relative = 1e-15);

        // ln 100 + γ against the exact harmonic number H_100 = 5.187377...
        let (mean, _) = normalizing_constants(&cfg(1, 100), Strategy::LemmaExact)
            .unwrap()
            .moments();
        assert_relative_eq!(mean, 5.182_385_850_889_624, max_relative = 1e-12);
        assert!((mean - 5.187_377_517_639_62).abs() < 0.01);
    }

    #[test]
    fn raw_fit_validation() {
        assert!(GumbelFit::raw(1.0, 0.0).is_err());
        assert!(GumbelFit::raw(f64::NAN, 1.0).is_err());
        assert_eq!(GumbelFit::raw(1.0, 2.0).unwrap().strategy(), None);
    }

    #[test]
    fn single_antenna_error_scales_as_inverse_m() {
        let errs: Vec<f64> = [10u64, 100, 1000, 10_000]
            .iter()
            .map(|&m| convergence_error(&cfg(1, m), Strategy::LemmaExact, 0.0).unwrap())
            .collect();
        for w in errs.windows(2) {
            let ratio = w[0] / w[1];
            assert!((5.0..=20.0).contains(&ratio), "{errs:?}");
        }
        let e = errs[2] * 1000.0;
        assert!((0.01..=100.0).contains(&e));
    }

    #[test]
    fn optimal_alpha_rate_for_two_receive_antennas() {
        let scaled: Vec<f64> = [100u64, 1000, 10_000]
            .iter()
            .map(|&m| {
                let e = convergence_error(&cfg(2, m), Strategy::OptimalAlpha, 0.0).unwrap();
                e * (m as f64).ln().powi(2)
            })
            .collect();
        let max = scaled.iter().copied().fold(0.0, f64::max);
        let min = scaled.iter().copied().fold(f64::INFINITY, f64::min);
        assert!(max / min < 3.0, "{scaled:?}");
    }

    #[test]
    fn optimal_alpha_beats_asymptotic() {
        for m in [50u64, 100, 1000] {
            let c = cfg(2, m);
            let opt = convergence_error(&c, Strategy::OptimalAlpha, 0.0).unwrap();
            let asym = convergence_error(&c, Strategy::Asymptotic, 0.0).unwrap();
            assert!(opt < asym, "m={m}: {opt} vs {asym}");
        }
    }

    #[test]
    fn error_is_positive_at_generic_point() {
        for s in Strategy::ALL {
            let e = convergence_error(&cfg(2, 200), s, 0.37).unwrap();
            assert!(e > 0.0, "{s}");
        }
    }

    #[test]
    fn kolmogorov_distance_shrinks_with_m() {
        for n in [1u32, 2, 5] {
            let d: Vec<f64> = [2u64, 5, 10, 20]
                .iter()
                .map(|&m| {
                    let c = cfg(n, m);
                    let fit = normalizing_constants(&c, Strategy::LemmaExact).unwrap();
                    kolmogorov_distance_grid(&c, &fit, fit.location() + 15.0 * fit.scale(), 1000)
                })
                .collect();
            assert!(d.windows(2).all(|w| w[1] < w[0]), "n={n}: {d:?}");
        }
    }

    proptest! {
        #[test]
        fn approx_cdf_monotone(loc in -5.0f64..20.0, scale in 0.1f64..3.0, x in -30.0f64..60.0, d in 0.0f64..4.0) {
            let fit = GumbelFit::raw(loc, scale).unwrap();
            let (a, b) = (fit.cdf(x), fit.cdf(x + d));
            prop_assert!(a <= b);
            prop_assert!((0.0..=1.0).contains(&a));
        }
    }
}

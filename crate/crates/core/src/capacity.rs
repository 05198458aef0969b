//! Outage and ergodic capacity of the selection link `log₂(1 + ρ X_(m))`.
//!
//! All SINR values here are linear; dB conversion belongs to callers.

use std::f64::consts::LN_2;
use std::fmt;

use crate::error::{Error, Result};
use crate::gumbel::{normalizing_constants, Strategy};
use crate::order_stats::{self, SelectionConfig};
use crate::quadrature::{self, Integral, Options};
use crate::EULER_GAMMA;

/// Absolute tolerance for every capacity/moment quadrature.
pub const QUADRATURE_TOL: f64 = 1e-9;
/// Upper-tail mass of `X_(m)` dropped beyond the integration cutoff.
pub const TRUNCATION_MASS: f64 = 1e-12;

/// Linear SINR `ρ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkParams {
    rho: f64,
}

impl LinkParams {
    pub fn new(rho: f64) -> Result<Self> {
        if !(rho > 0.0) || !rho.is_finite() {
            return Err(Error::invalid(
                "rho",
                format!("SINR must be positive and finite, got {rho}"),
            ));
        }
        Ok(Self { rho })
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// `log₂(1 + ρx)`.
    pub fn rate(&self, x: f64) -> f64 {
        (self.rho * x).ln_1p() / LN_2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ExactQuadrature,
    BoundLower,
    BoundUpper,
    GumbelApprox,
    QmGammaApprox,
    MonteCarlo,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ExactQuadrature => "exact-quadrature",
            Method::BoundLower => "bound-lower",
            Method::BoundUpper => "bound-upper",
            Method::GumbelApprox => "gumbel-approx",
            Method::QmGammaApprox => "qm-gamma-approx",
            Method::MonteCarlo => "monte-carlo",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A capacity in bits/s/Hz with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapacityResult {
    pub value: f64,
    pub method: Method,
    /// Quadrature tolerance, Monte Carlo standard error, or 0 for closed forms.
    pub error_estimate: f64,
    /// Set when an approximation fell outside the support and was clamped to 0.
    pub degenerate: bool,
}

impl CapacityResult {
    pub(crate) fn closed_form(value: f64, method: Method) -> Self {
        Self {
            value,
            method,
            error_estimate: 0.0,
            degenerate: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutageMode {
    Exact,
    /// Gumbel law with `a_m = q_m`, `b_m = R(q_m)`.
    Gumbel,
}

/// SINR threshold `(2^{c0} − 1)/ρ` below which rate `c0` is not supported.
fn rate_threshold(link: &LinkParams, c0: f64) -> f64 {
    (c0 * LN_2).exp_m1() / link.rho
}

/// `Pr{log₂(1 + ρ X_(m)) ≤ c0}`.
pub fn outage_probability(
    cfg: &SelectionConfig,
    link: &LinkParams,
    c0: f64,
    mode: OutageMode,
) -> Result<f64> {
    if !(c0 >= 0.0) {
        return Err(Error::invalid(
            "c0",
            format!("rate must be non-negative, got {c0}"),
        ));
    }
    let x = rate_threshold(link, c0);
    match mode {
        OutageMode::Exact => Ok(order_stats::max_cdf(cfg, x)),
        OutageMode::Gumbel => Ok(normalizing_constants(cfg, Strategy::LemmaExact)?.cdf(x)),
    }
}

/// Rate achieved with outage probability exactly `p0`.
pub fn outage_capacity(
    cfg: &SelectionConfig,
    link: &LinkParams,
    p0: f64,
    mode: OutageMode,
) -> Result<CapacityResult> {
    if !(p0 > 0.0 && p0 < 1.0) {
        return Err(Error::invalid(
            "p0",
            format!("outage probability must lie in (0, 1), got {p0}"),
        ));
    }
    match mode {
        OutageMode::Exact => {
            // F(x) = p0^{1/m}, expressed through its tail for accuracy at large m
            let tail = -(p0.ln() / cfg.m_f64()).exp_m1();
            let x = order_stats::inverse_survival(cfg.n(), tail)?;
            Ok(CapacityResult::closed_form(
                link.rate(x),
                Method::ExactQuadrature,
            ))
        }
        OutageMode::Gumbel => {
            let fit = normalizing_constants(cfg, Strategy::LemmaExact)?;
            let inner = fit.location() - fit.scale() * (-p0.ln()).ln();
            let mut result = CapacityResult::closed_form(0.0, Method::GumbelApprox);
            if inner < 0.0 {
                result.degenerate = true;
            } else {
                result.value = link.rate(inner);
            }
            Ok(result)
        }
    }
}

/// Integration cutoff: the `(1 − 1e-12)` quantile of `X_(m)`.
pub fn integration_cutoff(cfg: &SelectionConfig) -> Result<f64> {
    let tail = -((-TRUNCATION_MASS).ln_1p() / cfg.m_f64()).exp_m1();
    order_stats::inverse_survival(cfg.n(), tail)
}

/// `∫₀^{X_hi} g(x) f_(m)(x) dx`.
pub fn expect_over_selection_gain<G: Fn(f64) -> f64>(
    cfg: &SelectionConfig,
    g: G,
) -> Result<Integral> {
    let hi = integration_cutoff(cfg)?;
    let opts = Options {
        abs_tol: QUADRATURE_TOL,
        ..Options::default()
    };
    quadrature::integrate(|x| g(x) * order_stats::max_pdf(cfg, x), 0.0, hi, opts)
}

/// `E[log₂(1 + ρ X_(m))]` by adaptive quadrature.
pub fn ergodic_capacity(cfg: &SelectionConfig, link: &LinkParams) -> Result<CapacityResult> {
    let integral = expect_over_selection_gain(cfg, |x| link.rate(x))?;
    Ok(CapacityResult {
        value: integral.value,
        method: Method::ExactQuadrature,
        error_estimate: QUADRATURE_TOL,
        degenerate: false,
    })
}

/// `log₂(1 + ρ q_m) ≤ C̄ ≤ log₂(1 + ρ q_{e^γ(m+1)})`.
pub fn ergodic_bounds(
    cfg: &SelectionConfig,
    link: &LinkParams,
) -> Result<(CapacityResult, CapacityResult)> {
    let (lo, hi) = mean_bounds(cfg)?;
    Ok((
        CapacityResult::closed_form(link.rate(lo), Method::BoundLower),
        CapacityResult::closed_form(link.rate(hi), Method::BoundUpper),
    ))
}

/// `(q_m, q_{e^γ(m+1)})`, which sandwich `E[X_(m)]`.
pub fn mean_bounds(cfg: &SelectionConfig) -> Result<(f64, f64)> {
    let lo = order_stats::q_m(cfg)?;
    let hi = order_stats::quantile_level(cfg.n(), EULER_GAMMA.exp() * (cfg.m_f64() + 1.0))?;
    Ok((lo, hi))
}

/// `log₂(1 + ρ(q_m + γ))`.
pub fn ergodic_approx(cfg: &SelectionConfig, link: &LinkParams) -> Result<CapacityResult> {
    let q = order_stats::q_m(cfg)?;
    Ok(CapacityResult::closed_form(
        link.rate(q + EULER_GAMMA),
        Method::QmGammaApprox,
    ))
}

/// `E[X_(m)]` by quadrature.
pub fn mean_selection_gain(cfg: &SelectionConfig) -> Result<f64> {
    Ok(expect_over_selection_gain(cfg, |x| x)?.value)
}

/// `Var[X_(m)]` by quadrature of `(x − E[X_(m)])²`.
pub fn selection_gain_variance(cfg: &SelectionConfig) -> Result<f64> {
    let mean = mean_selection_gain(cfg)?;
    Ok(expect_over_selection_gain(cfg, |x| (x - mean) * (x - mean))?.value)
}

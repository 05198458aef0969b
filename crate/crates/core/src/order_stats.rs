//! Exact distribution theory of the selection gain `X_(m)`.
//!
//! Each branch gain `X_l = Σ_i |H_il|^2` is Gamma(n, 1) (chi-square with
//! `2n` degrees of freedom, unit-mean components), and `X_(m)` is the maximum
//! of `m` independent copies. Tails are evaluated from the
//! exponential-times-polynomial form so that `F^m` stays accurate when `m`
//! is in the thousands.

use crate::error::{Error, Result};
use crate::special::{ln_exp_series_tail, ln_factorial, ln_truncated_exp_series};

const QUANTILE_MAX_ITER: usize = 200;
const ALPHA_MAX_ITER: usize = 200;

/// `(n, m)`: `n` receive antennas, `m` transmit antennas to select from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SelectionConfig {
    n: u32,
    m: u64,
}

impl SelectionConfig {
    pub fn new(n: u32, m: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid(
                "n",
                "receive antenna count must be at least 1",
            ));
        }
        if m == 0 {
            return Err(Error::invalid(
                "m",
                "transmit antenna count must be at least 1",
            ));
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Same `n`, different number of candidates (e.g. `m·K` for greedy scheduling).
    pub fn with_m(&self, m: u64) -> Result<Self> {
        Self::new(self.n, m)
    }

    pub(crate) fn m_f64(&self) -> f64 {
        self.m as f64
    }
}

/// Upper-tail probability `1 − F(x)` together with its logarithm.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailValue {
    pub survival: f64,
    pub log_survival: f64,
}

impl TailValue {
    fn from_log(log_survival: f64) -> Self {
        let log_survival = log_survival.min(0.0);
        Self {
            survival: log_survival.exp(),
            log_survival,
        }
    }
}

/// `ln f(x)` for the Gamma(n, 1) density.
pub fn ln_pdf(n: u32, x: f64) -> f64 {
    if x < 0.0 {
        return f64::NEG_INFINITY;
    }
    if x == 0.0 {
        return if n == 1 { 0.0 } else { f64::NEG_INFINITY };
    }
    -x + f64::from(n - 1) * x.ln() - ln_factorial(n - 1)
}

/// `f(x) = e^{-x} x^{n-1} / (n-1)!`, zero for negative `x`.
pub fn pdf(n: u32, x: f64) -> f64 {
    ln_pdf(n, x).exp()
}

/// `1 − F(x) = e^{-x} Σ_{k<n} x^k / k!`.
pub fn survival(n: u32, x: f64) -> TailValue {
    if x <= 0.0 {
        return TailValue::from_log(0.0);
    }
    TailValue::from_log(-x + ln_truncated_exp_series(x, n))
}

/// `ln F(x)`.
///
/// Below `x = n` the lower tail is summed directly (`e^{-x} Σ_{k≥n} x^k/k!`),
/// above it `ln(1 − survival)` is taken through `expm1`.
pub fn ln_cdf(n: u32, x: f64) -> f64 {
    if x <= 0.0 {
        return f64::NEG_INFINITY;
    }
    if x < f64::from(n) {
        (-x + ln_exp_series_tail(x, n)).min(0.0)
    } else {
        let log_s = survival(n, x).log_survival;
        (-log_s.exp_m1()).ln()
    }
}

pub fn cdf(n: u32, x: f64) -> f64 {
    ln_cdf(n, x).exp()
}

/// `F_(m)(x) = F(x)^m`, evaluated as `exp(m ln F(x))`.
pub fn max_cdf(cfg: &SelectionConfig, x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    (cfg.m_f64() * ln_cdf(cfg.n, x)).exp()
}

/// `f_(m)(x) = m F(x)^{m-1} f(x)`.
pub fn max_pdf(cfg: &SelectionConfig, x: f64) -> f64 {
    if x < 0.0 {
        return 0.0;
    }
    if cfg.m == 1 {
        return pdf(cfg.n, x);
    }
    let lf = ln_cdf(cfg.n, x);
    if lf == f64::NEG_INFINITY {
        return 0.0;
    }
    cfg.m_f64() * ((cfg.m_f64() - 1.0) * lf + ln_pdf(cfg.n, x)).exp()
}

/// Which side of the distribution a quantile target is expressed on.
#[derive(Debug, Clone, Copy)]
enum Level {
    /// `ln F(x) = ln p`
    Lower(f64),
    /// `ln(1 − F(x)) = ln tail`
    Upper(f64),
}

/// `F^{-1}(p)` for `0 ≤ p < 1`; `|F(x) − p| ≤ 1e-12` on return.
pub fn quantile(n: u32, p: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&p) {
        return Err(Error::invalid(
            "p",
            format!("probability must lie in [0, 1), got {p}"),
        ));
    }
    if p == 0.0 {
        return Ok(0.0);
    }
    let level = if p <= 0.5 {
        Level::Lower(p.ln())
    } else {
        Level::Upper((-p).ln_1p())
    };
    solve_quantile(n, level)
}

/// `x` with `1 − F(x) = tail`, for `0 < tail ≤ 1`.
///
/// Preferred over [`quantile`] for deep upper quantiles, where `1 − tail`
/// is not representable.
pub fn inverse_survival(n: u32, tail: f64) -> Result<f64> {
    if !(tail > 0.0 && tail <= 1.0) {
        return Err(Error::invalid(
            "tail",
            format!("tail probability must lie in (0, 1], got {tail}"),
        ));
    }
    if tail == 1.0 {
        return Ok(0.0);
    }
    let level = if tail < 0.5 {
        Level::Upper(tail.ln())
    } else {
        Level::Lower((-tail).ln_1p())
    };
    solve_quantile(n, level)
}

/// Generalized quantile `q_t = F^{-1}(1 − 1/t)` for real `t ≥ 1`.
pub fn quantile_level(n: u32, t: f64) -> Result<f64> {
    if !(t >= 1.0) || !t.is_finite() {
        return Err(Error::invalid(
            "level",
            format!("quantile level must be finite and >= 1, got {t}"),
        ));
    }
    inverse_survival(n, 1.0 / t)
}

/// `q_m = F^{-1}(1 − 1/m)`, with `q_1 = 0`.
pub fn q_m(cfg: &SelectionConfig) -> Result<f64> {
    if cfg.m == 1 {
        return Ok(0.0);
    }
    inverse_survival(cfg.n, 1.0 / cfg.m_f64())
}

/// Leading-order location `ln m + (n−1) ln ln m − ln (n−1)!`, or `None`
/// when `ln ln m` is undefined.
pub(crate) fn asymptotic_location(n: u32, m: f64) -> Option<f64> {
    let lm = m.ln();
    if n == 1 {
        return (lm > 0.0).then_some(lm);
    }
    if lm <= 1.0 {
        return None;
    }
    Some(lm + f64::from(n - 1) * lm.ln() - ln_factorial(n - 1))
}

fn solve_quantile(n: u32, level: Level) -> Result<f64> {
    // h(x) increasing in x, root at the quantile
    let h = |x: f64| -> (f64, f64) {
        let lp = ln_pdf(n, x);
        match level {
            Level::Lower(target) => {
                let lf = ln_cdf(n, x);
                (lf - target, (lp - lf).exp())
            }
            Level::Upper(target) => {
                let ls = survival(n, x).log_survival;
                (target - ls, (lp - ls).exp())
            }
        }
    };

    let tail_ln = match level {
        Level::Lower(lp) => (-lp.exp()).ln_1p(),
        Level::Upper(lt) => lt,
    };
    let seed = asymptotic_location(n, (-tail_ln).exp())
        .unwrap_or(f64::from(n))
        .max(1e-3);

    let mut lo = 0.0;
    let mut hi = (2.0 * seed).max(1.0);
    let mut grow = 0;
    while h(hi).0 < 0.0 {
        lo = hi;
        hi *= 2.0;
        grow += 1;
        if grow > 64 {
            return Err(Error::NoConvergence {
                what: "quantile bracket",
                iterations: grow,
                estimate: hi,
            });
        }
    }

    let mut x = if seed > lo && seed < hi {
        seed
    } else {
        0.5 * (lo + hi)
    };
    for _ in 0..QUANTILE_MAX_ITER {
        let (hv, dh) = h(x);
        if hv.abs() <= 1e-14 {
            return Ok(x);
        }
        if hv < 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let mut next = x - hv / dh;
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 4.0 * f64::EPSILON * x.abs() || hi - lo <= 4.0 * f64::EPSILON * hi {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::NoConvergence {
        what: "quantile solver",
        iterations: QUANTILE_MAX_ITER,
        estimate: x,
    })
}

/// Mean residual life ratio `R(t) = ∫_t^∞ (1 − F) dy / (1 − F(t))`.
///
/// Closed form `Σ_{i<n} (n − i) t^i/i! / Σ_{i<n} t^i/i!`; exactly 1 for `n = 1`.
pub fn residual_mean(n: u32, t: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::invalid(
            "t",
            format!("must be finite and non-negative, got {t}"),
        ));
    }
    if n == 1 {
        return Ok(1.0);
    }
    if t == 0.0 {
        return Ok(f64::from(n));
    }
    let ln_terms: Vec<f64> = (0..n)
        .map(|i| f64::from(i) * t.ln() - ln_factorial(i))
        .collect();
    let peak = ln_terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let (mut num, mut den) = (0.0, 0.0);
    for (i, lt) in ln_terms.iter().enumerate() {
        let w = (lt - peak).exp();
        num += f64::from(n - i as u32) * w;
        den += w;
    }
    Ok(num / den)
}

/// `ln g(n−1)`: log of the density's mode value.
fn ln_mode_value(n: u32) -> f64 {
    let k = f64::from(n - 1);
    -k + k * k.ln() - ln_factorial(n - 1)
}

/// Whether `α_m` exists, i.e. `1/m` lies strictly below the density's mode value.
pub fn alpha_defined(cfg: &SelectionConfig) -> bool {
    cfg.n == 1 || -cfg.m_f64().ln() < ln_mode_value(cfg.n)
}

/// `α_m`: the largest `x` with `f(x) = 1/m`.
pub fn alpha_m(cfg: &SelectionConfig) -> Result<f64> {
    let n = cfg.n;
    let ln_m = cfg.m_f64().ln();
    if n == 1 {
        return Ok(ln_m);
    }
    if !alpha_defined(cfg) {
        return Err(Error::AlphaUndefined { n, m: cfg.m });
    }
    let k = f64::from(n - 1);
    let c = ln_factorial(n - 1);
    // phi decreasing on (n−1, ∞), positive at the mode
    let phi = |x: f64| -x + k * x.ln() - c + ln_m;
    let dphi = |x: f64| -1.0 + k / x;

    let mut lo = k;
    let seed = asymptotic_location(n, cfg.m_f64())
        .filter(|s| *s > k)
        .unwrap_or(k + 1.0);
    let mut hi = (2.0 * seed).max(k + 1.0);
    let mut grow = 0;
    while phi(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
        grow += 1;
        if grow > 64 {
            return Err(Error::NoConvergence {
                what: "alpha_m bracket",
                iterations: grow,
                estimate: hi,
            });
        }
    }
    let mut x = if seed > lo && seed < hi {
        seed
    } else {
        0.5 * (lo + hi)
    };
    for _ in 0..ALPHA_MAX_ITER {
        let v = phi(x);
        if v.abs() <= 1e-14 {
            return Ok(x);
        }
        if v > 0.0 {
            lo = x;
        } else {
            hi = x;
        }
        let mut next = x - v / dphi(x);
        if !next.is_finite() || next <= lo || next >= hi {
            next = 0.5 * (lo + hi);
        }
        if (next - x).abs() <= 4.0 * f64::EPSILON * x {
            return Ok(next);
        }
        x = next;
    }
    Err(Error::NoConvergence {
        what: "alpha_m solver",
        iterations: ALPHA_MAX_ITER,
        estimate: x,
    })
}

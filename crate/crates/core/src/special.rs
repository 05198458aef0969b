//! Small special-function helpers shared by the distribution code.

use std::f64::consts::PI;

/// `ln(k!)`, exact summation for small `k` and a Stirling series above.
pub fn ln_factorial(k: u32) -> f64 {
    if k < 32 {
        (2..=k).map(|i| f64::from(i).ln()).sum()
    } else {
        let x = f64::from(k) + 1.0;
        // ln Γ(x) with the asymptotic series, error < 1e-16 for x > 32
        let inv = 1.0 / x;
        let inv2 = inv * inv;
        let series = inv
            * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0 - inv2 * (1.0 / 1680.0))));
        (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + series
    }
}

/// `ln Σ_{k=0}^{terms-1} x^k / k!` without overflow for large `x`.
///
/// The sum is anchored at its largest term and accumulated outward with
/// term ratios, so no intermediate exceeds 1.
pub fn ln_truncated_exp_series(x: f64, terms: u32) -> f64 {
    debug_assert!(terms >= 1);
    if x <= 0.0 {
        return 0.0;
    }
    let last = terms - 1;
    let peak = (x.floor() as u64).min(u64::from(last)) as u32;
    let ln_peak = f64::from(peak) * x.ln() - ln_factorial(peak);

    let mut sum = 1.0;
    // downward: t_{k-1} = t_k * k / x
    let mut t = 1.0;
    for k in (1..=peak).rev() {
        t *= f64::from(k) / x;
        sum += t;
        if t < sum * 1e-18 {
            break;
        }
    }
    // upward: t_{k+1} = t_k * x / (k+1)
    let mut t = 1.0;
    for k in peak..last {
        t *= x / f64::from(k + 1);
        sum += t;
        if t < sum * 1e-18 {
            break;
        }
    }
    ln_peak + sum.ln()
}

/// `ln Σ_{k>=start} x^k / k!`, the upper tail of the exponential series.
///
/// Only used for `x` comfortably below `start`, where the terms decay
/// geometrically from the first one.
pub fn ln_exp_series_tail(x: f64, start: u32) -> f64 {
    debug_assert!(x > 0.0);
    let ln_first = f64::from(start) * x.ln() - ln_factorial(start);
    let mut sum = 1.0;
    let mut t = 1.0;
    let mut k = start;
    loop {
        k += 1;
        t *= x / f64::from(k);
        sum += t;
        if t < sum * 1e-18 {
            break;
        }
    }
    ln_first + sum.ln()
}

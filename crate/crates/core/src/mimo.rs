//! Open-loop MIMO baseline: `log₂ det(I_n + (ρ/m) H H†)` with equal power
//! per transmit antenna and no channel knowledge at the transmitter.

use num_complex::Complex64;

use crate::capacity::{CapacityResult, LinkParams, Method};
use crate::error::{Error, Result};
use crate::oracle::{nearest_rank, McConfig, McRun};
use crate::rng;
use rand::Rng;

/// Largest receive dimension handled by the fixed-size Gram factorization.
pub const MAX_RECEIVE: u32 = 8;
pub const BOOTSTRAP_RESAMPLES: usize = 100;

const MIN_ERGODIC_SAMPLES: usize = 1_000;
const MIN_OUTAGE_SAMPLES: usize = 10_000;

/// `log₂ det(I_n + scale · H H†)` for `H` stored row-major as `n × m`.
///
/// The Gram matrix is Hermitian positive definite, so a Cholesky
/// elimination gives the determinant as `Π L_ii²`.
pub fn log2_det_gram(h: &[Complex64], n: usize, m: usize, scale: f64) -> f64 {
    debug_assert!(n as u32 <= MAX_RECEIVE && h.len() == n * m);
    let mut g = [[Complex64::new(0.0, 0.0); MAX_RECEIVE as usize]; MAX_RECEIVE as usize];
    for i in 0..n {
        for j in 0..=i {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..m {
                acc += h[i * m + k] * h[j * m + k].conj();
            }
            g[i][j] = acc * scale;
        }
        g[i][i] += 1.0;
    }
    let mut log_det = 0.0;
    for j in 0..n {
        let d = g[j][j].re - g[j][..j].iter().map(|z| z.norm_sqr()).sum::<f64>();
        let ljj = d.sqrt();
        log_det += d.ln();
        for i in j + 1..n {
            let s = g[i][j] - (0..j).map(|k| g[i][k] * g[j][k].conj()).sum::<Complex64>();
            g[i][j] = s / ljj;
        }
        g[j][j] = Complex64::new(ljj, 0.0);
    }
    log_det / std::f64::consts::LN_2
}

fn validate(n: u32, m: u64) -> Result<()> {
    if n == 0 || n > MAX_RECEIVE {
        return Err(Error::invalid(
            "n",
            format!("receive antennas must be in 1..={MAX_RECEIVE}, got {n}"),
        ));
    }
    if m == 0 {
        return Err(Error::invalid(
            "m",
            "transmit antenna count must be at least 1",
        ));
    }
    Ok(())
}

/// Per-sample open-loop rates. With `users > 1` each sample is the best of
/// `users` independent channels (greedy scheduling).
pub fn mimo_rates(
    n: u32,
    m: u64,
    users: u64,
    link: &LinkParams,
    mc: &McConfig,
) -> Result<Vec<f64>> {
    validate(n, m)?;
    if users == 0 {
        return Err(Error::invalid("users", "need at least one user"));
    }
    mc.require(MIN_ERGODIC_SAMPLES)?;
    let (nu, mu) = (n as usize, m as usize);
    let scale = link.rho() / m as f64;
    let chunks = rng::chunks(mc.samples);
    let parts = mc.execution.map_indexed(chunks.len(), |c| {
        let mut r = rng::stream(mc.seed, c as u64);
        let mut h = vec![Complex64::new(0.0, 0.0); nu * mu];
        (0..chunks[c].1)
            .map(|_| {
                let mut best = f64::NEG_INFINITY;
                for _ in 0..users {
                    h.iter_mut()
                        .for_each(|e| *e = rng::complex_gaussian(&mut r));
                    best = best.max(log2_det_gram(&h, nu, mu, scale));
                }
                best
            })
            .collect::<Vec<f64>>()
    });
    Ok(parts.concat())
}

/// Open-loop ergodic capacity by Monte Carlo.
pub fn mimo_ergodic(n: u32, m: u64, link: &LinkParams, mc: &McConfig) -> Result<CapacityResult> {
    Ok(mimo_ergodic_run(n, m, 1, link, mc)?.into_capacity())
}

/// Ergodic capacity with greedy scheduling over `users` open-loop MIMO users.
pub fn mimo_scheduled_ergodic(
    n: u32,
    m: u64,
    users: u64,
    link: &LinkParams,
    mc: &McConfig,
) -> Result<CapacityResult> {
    Ok(mimo_ergodic_run(n, m, users, link, mc)?.into_capacity())
}

pub fn mimo_ergodic_run(
    n: u32,
    m: u64,
    users: u64,
    link: &LinkParams,
    mc: &McConfig,
) -> Result<McRun> {
    let rates = mimo_rates(n, m, users, link, mc)?;
    Ok(McRun::from_values(&rates, mc.seed))
}

/// Empirical `p0`-quantile of the open-loop rate, with a bootstrap standard
/// error over [`BOOTSTRAP_RESAMPLES`] resamples.
pub fn mimo_outage(
    n: u32,
    m: u64,
    link: &LinkParams,
    p0: f64,
    mc: &McConfig,
) -> Result<CapacityResult> {
    mimo_scheduled_outage(n, m, 1, link, p0, mc)
}

/// [`mimo_outage`] for the greedy best of `users` channels.
pub fn mimo_scheduled_outage(
    n: u32,
    m: u64,
    users: u64,
    link: &LinkParams,
    p0: f64,
    mc: &McConfig,
) -> Result<CapacityResult> {
    if !(p0 > 0.0 && p0 < 1.0) {
        return Err(Error::invalid(
            "p0",
            format!("outage probability must lie in (0, 1), got {p0}"),
        ));
    }
    mc.require(MIN_OUTAGE_SAMPLES)?;
    let mut rates = mimo_rates(n, m, users, link, mc)?;
    rates.sort_by(f64::total_cmp);
    let value = nearest_rank(&rates, p0);

    let len = rates.len();
    let rank = ((p0 * len as f64).ceil() as usize).clamp(1, len) - 1;
    // A resample's k-th order statistic is the original value at the k-th
    // smallest drawn index, since `rates` is sorted.
    let boot = mc.execution.map_indexed(BOOTSTRAP_RESAMPLES, |b| {
        let mut r = rng::stream(mc.seed, rng::BOOTSTRAP_STREAM_BASE + b as u64);
        let mut idx: Vec<usize> = (0..len).map(|_| r.random_range(0..len)).collect();
        let (_, kth, _) = idx.select_nth_unstable(rank);
        rates[*kth]
    });
    let (_, var) = crate::oracle::mean_and_variance(&boot);
    Ok(CapacityResult {
        value,
        method: Method::MonteCarlo,
        error_estimate: var.sqrt(),
        degenerate: false,
    })
}

//! Greedy vs. round-robin scheduling over `K` statistically identical users.
//!
//! Greedy scheduling picks the best of `m·K` independent branches, so its
//! capacity is the selection capacity with `m` replaced by `m·K`. Round robin
//! serves one user at a time and sees the single-user capacity.

use crate::capacity::{self, CapacityResult, LinkParams};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::order_stats::{self, SelectionConfig};
use crate::EULER_GAMMA;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SchedulingScenario {
    cfg: SelectionConfig,
    users: u64,
    link: LinkParams,
}

impl SchedulingScenario {
    pub fn new(cfg: SelectionConfig, users: u64, link: LinkParams) -> Result<Self> {
        if users == 0 {
            return Err(Error::invalid("users", "need at least one user"));
        }
        cfg.m()
            .checked_mul(users)
            .ok_or_else(|| Error::invalid("users", "m * K overflows"))?;
        Ok(Self { cfg, users, link })
    }

    pub fn cfg(&self) -> &SelectionConfig {
        &self.cfg
    }

    pub fn users(&self) -> u64 {
        self.users
    }

    pub fn link(&self) -> &LinkParams {
        &self.link
    }

    /// Per-user configuration with `m·K` candidate branches.
    pub fn pooled(&self) -> SelectionConfig {
        self.cfg
            .with_m(self.cfg.m() * self.users)
            .expect("validated at construction")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GainMode {
    /// Difference of the two quadrature capacities.
    Exact,
    /// `log₂((1 + ρ(q_{mK} + γ)) / (1 + ρ(q_m + γ)))`.
    Approx,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GainReport {
    pub exact_gain: f64,
    pub approx_gain: f64,
    pub greedy: CapacityResult,
    pub round_robin: CapacityResult,
    /// `exact_gain / round_robin.value`.
    pub fractional: f64,
}

pub fn greedy_capacity(scen: &SchedulingScenario) -> Result<CapacityResult> {
    capacity::ergodic_capacity(&scen.pooled(), &scen.link)
}

pub fn round_robin_capacity(scen: &SchedulingScenario) -> Result<CapacityResult> {
    capacity::ergodic_capacity(&scen.cfg, &scen.link)
}

fn approx_gain(scen: &SchedulingScenario) -> Result<f64> {
    let rho = scen.link.rho();
    let q = order_stats::q_m(&scen.cfg)?;
    let q_pooled = order_stats::q_m(&scen.pooled())?;
    Ok(((1.0 + rho * (q_pooled + EULER_GAMMA)) / (1.0 + rho * (q + EULER_GAMMA))).log2())
}

pub fn scheduling_gain(scen: &SchedulingScenario, mode: GainMode) -> Result<f64> {
    match mode {
        GainMode::Exact => {
            if scen.users == 1 {
                return Ok(0.0);
            }
            Ok(greedy_capacity(scen)?.value - round_robin_capacity(scen)?.value)
        }
        GainMode::Approx => approx_gain(scen),
    }
}

/// High-SINR simplification `log₂(1 + (q_{mK} − q_m)/q_m)`; diagnostic only.
pub fn gain_high_sinr(scen: &SchedulingScenario) -> Result<f64> {
    let q = order_stats::q_m(&scen.cfg)?;
    if q <= 0.0 {
        return Err(Error::invalid("m", "needs q_m > 0, i.e. m >= 2"));
    }
    let q_pooled = order_stats::q_m(&scen.pooled())?;
    Ok((1.0 + (q_pooled - q) / q).log2())
}

/// `log₂(1 + ln K / q_m)`; diagnostic only.
pub fn gain_log_users(scen: &SchedulingScenario) -> Result<f64> {
    let q = order_stats::q_m(&scen.cfg)?;
    if q <= 0.0 {
        return Err(Error::invalid("m", "needs q_m > 0, i.e. m >= 2"));
    }
    Ok((1.0 + (scen.users as f64).ln() / q).log2())
}

/// Greedy gain relative to the round-robin capacity.
pub fn fractional_gain(scen: &SchedulingScenario) -> Result<f64> {
    Ok(gain_report(scen)?.fractional)
}

pub fn gain_report(scen: &SchedulingScenario) -> Result<GainReport> {
    let round_robin = round_robin_capacity(scen)?;
    let greedy = if scen.users == 1 {
        round_robin
    } else {
        greedy_capacity(scen)?
    };
    // the quotient is meaningless once the base capacity is lost in quadrature noise
    if round_robin.value <= 10.0 * round_robin.error_estimate {
        return Err(Error::invalid(
            "rho",
            "round-robin capacity indistinguishable from zero; fractional gain undefined",
        ));
    }
    let exact_gain = greedy.value - round_robin.value;
    Ok(GainReport {
        exact_gain,
        approx_gain: approx_gain(scen)?,
        greedy,
        round_robin,
        fractional: exact_gain / round_robin.value,
    })
}

/// Parameters of the gain table (defaults: `K = 32`, `n = 1`, `m = 1..20`,
/// `ρ ∈ {−5, 0, 5, 10}` dB).
#[derive(Debug, Clone, PartialEq)]
pub struct TableSpec {
    pub users: u64,
    pub n: u32,
    pub m_values: Vec<u64>,
    pub rho_db: Vec<f64>,
}

impl Default for TableSpec {
    fn default() -> Self {
        Self {
            users: 32,
            n: 1,
            m_values: (1..=20).collect(),
            rho_db: vec![-5.0, 0.0, 5.0, 10.0],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableCell {
    pub m: u64,
    pub rho_db: f64,
    pub exact_gain: f64,
    /// `None` for `m = 1`, where the approximation is not tabulated.
    pub approx_gain: Option<f64>,
}

/// Exact and approximate gains for every `(m, ρ)` cell, in row-major
/// `(m, ρ)` order regardless of `exec`.
pub fn gain_table(spec: &TableSpec, exec: Execution) -> Result<Vec<TableCell>> {
    let cells: Vec<(u64, f64)> = spec
        .m_values
        .iter()
        .flat_map(|&m| spec.rho_db.iter().map(move |&d| (m, d)))
        .collect();
    exec.map_indexed(cells.len(), |i| {
        let (m, rho_db) = cells[i];
        let scen = SchedulingScenario::new(
            SelectionConfig::new(spec.n, m)?,
            spec.users,
            LinkParams::new(10f64.powf(rho_db / 10.0))?,
        )?;
        Ok(TableCell {
            m,
            rho_db,
            exact_gain: scheduling_gain(&scen, GainMode::Exact)?,
            approx_gain: if m >= 2 {
                Some(scheduling_gain(&scen, GainMode::Approx)?)
            } else {
                None
            },
        })
    })
    .into_iter()
    .collect()
}

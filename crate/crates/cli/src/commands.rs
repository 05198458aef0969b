//! Subcommand bodies. Grid points are evaluated in parallel and written in
//! grid order.

use antsel::capacity::{
    ergodic_approx, ergodic_bounds, ergodic_capacity, expect_over_selection_gain,
    integration_cutoff, mean_selection_gain, outage_capacity, outage_probability,
    selection_gain_variance, LinkParams, OutageMode,
};
use antsel::gumbel::{
    fit_error, kolmogorov_distance_grid, normalizing_constants, GumbelFit, Strategy,
};
use antsel::mimo::{mimo_ergodic, mimo_scheduled_ergodic, mimo_scheduled_outage};
use antsel::oracle::{empirical_ergodic, sample_selection_gain, sample_selection_gains, McConfig};
use antsel::order_stats::{max_cdf, max_pdf};
use antsel::scheduling::{
    gain_report, gain_table, scheduling_gain, GainMode, SchedulingScenario, TableSpec,
};
use antsel::{Execution, SelectionConfig};

use crate::args::{Command, Mode};
use crate::error::CliError;
use crate::grid::{db_to_linear, parse_counts, parse_probabilities, parse_reals, Grid};
use crate::output::Table;

pub const DIST_COLUMNS: &[&str] = &[
    "n",
    "m",
    "x",
    "exact_cdf",
    "exact_pdf",
    "strategy",
    "gumbel_location",
    "gumbel_scale",
    "gumbel_cdf",
    "gumbel_abs_error",
    "empirical_cdf",
];
pub const FIT_COLUMNS: &[&str] = &[
    "n",
    "m",
    "strategy",
    "location",
    "scale",
    "gumbel_mean",
    "gumbel_variance",
    "error_at_zero",
    "ks_grid",
    "exact_mean",
    "exact_variance",
    "mc_mean",
    "mc_mean_se",
    "mc_variance",
    "mc_variance_se",
    "mc_ks",
];
pub const OUTAGE_COLUMNS: &[&str] = &[
    "n",
    "m",
    "rho_db",
    "rho",
    "p0",
    "exact_quadrature",
    "gumbel_approx",
    "gumbel_degenerate",
    "mimo_monte_carlo",
    "mimo_monte_carlo_se",
];
pub const ERGODIC_COLUMNS: &[&str] = &[
    "n",
    "m",
    "rho_db",
    "rho",
    "exact_quadrature",
    "exact_quadrature_err",
    "bound_lower",
    "bound_upper",
    "qm_gamma_approx",
    "monte_carlo",
    "monte_carlo_se",
    "mimo_monte_carlo",
    "mimo_monte_carlo_se",
];
pub const SCHEDULING_COLUMNS: &[&str] = &[
    "n",
    "m",
    "users",
    "rho_db",
    "rho",
    "round_robin",
    "greedy",
    "gain_exact",
    "fractional_gain",
    "gain_approx",
    "mimo_round_robin",
    "mimo_round_robin_se",
    "mimo_greedy",
    "mimo_greedy_se",
];
pub const TABLE1_COLUMNS: &[&str] = &[
    "m",
    "rho_db",
    "exact_gain",
    "exact_gain_display",
    "approx_gain",
    "approx_gain_display",
];
pub const MIMO_COLUMNS: &[&str] = &[
    "n",
    "m",
    "users",
    "rho_db",
    "rho",
    "p0",
    "mimo_ergodic",
    "mimo_ergodic_se",
    "mimo_outage",
    "mimo_outage_se",
    "selection_ergodic",
    "selection_outage",
];
pub const VERIFY_COLUMNS: &[&str] = &["check", "passed", "observed", "expected", "tolerance"];

/// Column schema of each subcommand, in subcommand order.
pub const SCHEMAS: &[(&str, &[&str])] = &[
    ("dist", DIST_COLUMNS),
    ("fit", FIT_COLUMNS),
    ("outage", OUTAGE_COLUMNS),
    ("ergodic", ERGODIC_COLUMNS),
    ("scheduling", SCHEDULING_COLUMNS),
    ("table1", TABLE1_COLUMNS),
    ("mimo", MIMO_COLUMNS),
    ("verify", VERIFY_COLUMNS),
];

/// Grid resolution for the Kolmogorov distance in `fit`.
const KS_GRID_POINTS: usize = 1000;

struct Defaults {
    n: &'static str,
    m: &'static str,
    users: &'static str,
    rho_db: &'static str,
    p0: &'static str,
    modes: &'static [Mode],
    supported: &'static [Mode],
}

fn fixed<T>(r: Result<T, String>) -> T {
    r.expect("built-in default parses")
}

fn defaults(command: &str) -> Defaults {
    use Mode::*;
    let base = Defaults {
        n: "1",
        m: "1..20",
        users: "32",
        rho_db: "-5:5:10",
        p0: "0.1",
        modes: &[Exact, Approx],
        supported: &[Exact, Approx, Mc],
    };
    match command {
        "dist" => Defaults {
            m: "2,5,10,20",
            ..base
        },
        "fit" => Defaults {
            n: "1,2",
            m: "2,5,10,20,50,100",
            ..base
        },
        "ergodic" => Defaults {
            modes: &[Exact, Bounds, Approx],
            supported: &[Exact, Bounds, Approx, Mc],
            ..base
        },
        "table1" => Defaults {
            supported: &[Exact, Approx],
            ..base
        },
        "mimo" => Defaults {
            m: "1..8",
            users: "1",
            modes: &[Mc, Exact],
            supported: &[Mc, Exact],
            ..base
        },
        "verify" => Defaults {
            modes: &[],
            supported: &[],
            ..base
        },
        _ => base,
    }
}

/// Fully resolved inputs of one run.
#[derive(Debug, Clone)]
pub struct Params {
    pub n: Vec<u32>,
    pub m: Vec<u64>,
    pub users: Vec<u64>,
    pub rho_db: Vec<f64>,
    pub p0: Vec<f64>,
    pub modes: Vec<Mode>,
    pub strategy: Strategy,
    pub mc: McConfig,
}

impl Params {
    pub fn resolve(command: &Command) -> Result<Self, CliError> {
        let name = command.name();
        let c = command.common();
        let d = defaults(name);
        let n = c.n.clone().unwrap_or_else(|| fixed(parse_counts(d.n)));
        let n = n
            .0
            .iter()
            .map(|&v| {
                u32::try_from(v).map_err(|_| CliError::Usage(format!("--n value {v} is too large")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let modes = if c.mode.is_empty() {
            d.modes.to_vec()
        } else {
            c.mode.clone()
        };
        if let Some(bad) = modes.iter().find(|m| !d.supported.contains(m)) {
            return Err(CliError::Usage(format!(
                "--mode {} is not available for {name}",
                bad.name()
            )));
        }
        Ok(Self {
            n,
            m: c.m.clone().unwrap_or_else(|| fixed(parse_counts(d.m))).0,
            users: c
                .users
                .clone()
                .unwrap_or_else(|| fixed(parse_counts(d.users)))
                .0,
            rho_db: c
                .rho_db
                .clone()
                .unwrap_or_else(|| fixed(parse_reals(d.rho_db)))
                .0,
            p0: c
                .p0
                .clone()
                .unwrap_or_else(|| fixed(parse_probabilities(d.p0)))
                .0,
            modes,
            strategy: c.strategy.into(),
            mc: McConfig::new(c.samples, c.seed),
        })
    }

    fn has(&self, mode: Mode) -> bool {
        self.modes.contains(&mode)
    }

    fn comment(&self) -> String {
        let modes: Vec<&str> = self.modes.iter().map(|m| m.name()).collect();
        format!(
            "n={} m={} users={} rho_db={} p0={} modes={} strategy={} samples={} seed={}",
            Grid(self.n.clone()),
            Grid(self.m.clone()),
            Grid(self.users.clone()),
            Grid(self.rho_db.clone()),
            Grid(self.p0.clone()),
            modes.join(","),
            self.strategy.name(),
            self.mc.samples,
            self.mc.seed,
        )
    }
}

/// Result of a run: the table and, for `verify`, whether every check passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub table: Table,
    pub passed: bool,
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    let p = Params::resolve(command)?;
    let mut passed = true;
    let mut table = match command {
        Command::Dist { x, .. } => dist(&p, &x.0)?,
        Command::Fit(_) => fit(&p)?,
        Command::Outage(_) => outage(&p)?,
        Command::Ergodic(_) => ergodic(&p)?,
        Command::Scheduling(_) => scheduling(&p)?,
        Command::Table1(_) => table1(&p)?,
        Command::Mimo(_) => mimo(&p)?,
        Command::Verify(_) => {
            let t = verify(&p)?;
            passed = t.rows.iter().all(|r| r[1] == "true");
            t
        }
    };
    let mut comments = vec![
        format!("antsel {} {}", env!("CARGO_PKG_VERSION"), command.name()),
        p.comment(),
    ];
    if let Command::Dist { x, .. } = command {
        comments.push(format!("x={x}"));
    }
    table.comments = comments;
    Ok(Outcome { table, passed })
}

/// Evaluate `f` at every grid point in parallel and keep grid order.
fn rows_for<P: Sync, F>(points: &[P], f: F) -> Result<Vec<Vec<String>>, CliError>
where
    F: Fn(&P) -> Result<Vec<Vec<String>>, CliError> + Sync + Send,
{
    let parts = Execution::Parallel.map_indexed(points.len(), |i| f(&points[i]));
    let mut rows = Vec::new();
    for part in parts {
        rows.extend(part?);
    }
    Ok(rows)
}

fn cfg(n: u32, m: u64) -> Result<SelectionConfig, CliError> {
    Ok(SelectionConfig::new(n, m)?)
}

fn link(rho_db: f64) -> Result<LinkParams, CliError> {
    Ok(LinkParams::new(db_to_linear(rho_db))?)
}

fn nm_grid(p: &Params) -> Vec<(u32, u64)> {
    p.n.iter()
        .flat_map(|&n| p.m.iter().map(move |&m| (n, m)))
        .collect()
}

fn nm_rho_grid(p: &Params) -> Vec<(u32, u64, f64)> {
    nm_grid(p)
        .into_iter()
        .flat_map(|(n, m)| p.rho_db.iter().map(move |&d| (n, m, d)))
        .collect()
}

fn dist(p: &Params, xs: &[f64]) -> Result<Table, CliError> {
    let mut t = Table::new(DIST_COLUMNS);
    t.rows = rows_for(&nm_grid(p), |&(n, m)| {
        let c = cfg(n, m)?;
        let fit = if p.has(Mode::Approx) {
            Some(normalizing_constants(&c, p.strategy)?)
        } else {
            None
        };
        let samples = if p.has(Mode::Mc) {
            let mut v = sample_selection_gains(&c, &p.mc)?;
            v.sort_by(f64::total_cmp);
            Some(v)
        } else {
            None
        };
        Ok(xs
            .iter()
            .map(|&x| {
                let mut r = t.row();
                r.set("n", n).set("m", m).set("x", x);
                if p.has(Mode::Exact) {
                    r.set("exact_cdf", max_cdf(&c, x))
                        .set("exact_pdf", max_pdf(&c, x));
                }
                if let Some(f) = &fit {
                    let g = f.cdf(x);
                    r.set("strategy", p.strategy.name())
                        .set("gumbel_location", f.location())
                        .set("gumbel_scale", f.scale())
                        .set("gumbel_cdf", g)
                        .set("gumbel_abs_error", (max_cdf(&c, x) - g).abs());
                }
                if let Some(v) = &samples {
                    r.set(
                        "empirical_cdf",
                        v.partition_point(|&s| s <= x) as f64 / v.len() as f64,
                    );
                }
                r.finish()
            })
            .collect())
    })?;
    Ok(t)
}

fn set_fit(r: &mut crate::output::Row, c: &SelectionConfig, f: &GumbelFit) -> Result<(), CliError> {
    let (mean, var) = f.moments();
    r.set("strategy", f.strategy().map_or("raw", Strategy::name))
        .set("location", f.location())
        .set("scale", f.scale())
        .set("gumbel_mean", mean)
        .set("gumbel_variance", var)
        .set("error_at_zero", fit_error(c, f, 0.0))
        .set(
            "ks_grid",
            kolmogorov_distance_grid(c, f, integration_cutoff(c)?, KS_GRID_POINTS),
        );
    Ok(())
}

fn fit(p: &Params) -> Result<Table, CliError> {
    let mut t = Table::new(FIT_COLUMNS);
    t.rows = rows_for(&nm_grid(p), |&(n, m)| {
        let c = cfg(n, m)?;
        let mut r = t.row();
        r.set("n", n).set("m", m);
        if p.has(Mode::Approx) {
            set_fit(&mut r, &c, &normalizing_constants(&c, p.strategy)?)?;
        }
        if p.has(Mode::Exact) {
            r.set("exact_mean", mean_selection_gain(&c)?)
                .set("exact_variance", selection_gain_variance(&c)?);
        }
        if p.has(Mode::Mc) {
            let s = sample_selection_gain(&c, &p.mc)?;
            r.set("mc_mean", s.mean)
                .set("mc_mean_se", s.mean_std_error)
                .set("mc_variance", s.variance)
                .set("mc_variance_se", s.variance_std_error)
                .set("mc_ks", s.ks_distance);
        }
        Ok(vec![r.finish()])
    })?;
    Ok(t)
}

fn outage(p: &Params) -> Result<Table, CliError> {
    let mut t = Table::new(OUTAGE_COLUMNS);
    let points: Vec<(u32, u64, f64, f64)> = nm_rho_grid(p)
        .into_iter()
        .flat_map(|(n, m, d)| p.p0.iter().map(move |&q| (n, m, d, q)))
        .collect();
    t.rows = rows_for(&points, |&(n, m, d, p0)| {
        let (c, l) = (cfg(n, m)?, link(d)?);
        let mut r = t.row();
        r.set("n", n)
            .set("m", m)
            .set("rho_db", d)
            .set("rho", l.rho())
            .set("p0", p0);
        if p.has(Mode::Exact) {
            r.set(
                "exact_quadrature",
                outage_capacity(&c, &l, p0, OutageMode::Exact)?.value,
            );
        }
        if p.has(Mode::Approx) {
            let g = outage_capacity(&c, &l, p0, OutageMode::Gumbel)?;
            r.set("gumbel_approx", g.value)
                .set("gumbel_degenerate", g.degenerate);
        }
        if p.has(Mode::Mc) {
            let s = mimo_scheduled_outage(n, m, 1, &l, p0, &p.mc)?;
            r.set("mimo_monte_carlo", s.value)
                .set("mimo_monte_carlo_se", s.error_estimate);
        }
        Ok(vec![r.finish()])
    })?;
    Ok(t)
}

fn ergodic(p: &Params) -> Result<Table, CliError> {
    let mut t = Table::new(ERGODIC_COLUMNS);
    t.rows = rows_for(&nm_rho_grid(p), |&(n, m, d)| {
        let (c, l) = (cfg(n, m)?, link(d)?);
        let mut r = t.row();
        r.set("n", n)
            .set("m", m)
            .set("rho_db", d)
            .set("rho", l.rho());
        if p.has(Mode::Exact) {
            let e = ergodic_capacity(&c, &l)?;
            r.set("exact_quadrature", e.value)
                .set("exact_quadrature_err", e.error_estimate);
        }
        if p.has(Mode::Bounds) {
            let (lo, hi) = ergodic_bounds(&c, &l)?;
            r.set("bound_lower", lo.value).set("bound_upper", hi.value);
        }
        if p.has(Mode::Approx) {
            r.set("qm_gamma_approx", ergodic_approx(&c, &l)?.value);
        }
        if p.has(Mode::Mc) {
            let s = empirical_ergodic(&c, &l, &p.mc)?;
            let mimo = mimo_ergodic(n, m, &l, &p.mc)?;
            r.set("monte_carlo", s.value)
                .set("monte_carlo_se", s.error_estimate)
                .set("mimo_monte_carlo", mimo.value)
                .set("mimo_monte_carlo_se", mimo.error_estimate);
        }
        Ok(vec![r.finish()])
    })?;
    Ok(t)
}

fn scheduling(p: &Params) -> Result<Table, CliError> {
    let mut t = Table::new(SCHEDULING_COLUMNS);
    let points: Vec<(u32, u64, u64, f64)> = nm_grid(p)
        .into_iter()
        .flat_map(|(n, m)| {
            p.users
                .iter()
                .flat_map(move |&k| p.rho_db.iter().map(move |&d| (n, m, k, d)))
        })
        .collect();
    t.rows = rows_for(&points, |&(n, m, k, d)| {
        let scen = SchedulingScenario::new(cfg(n, m)?, k, link(d)?)?;
        let l = scen.link();
        let mut r = t.row();
        r.set("n", n)
            .set("m", m)
            .set("users", k)
            .set("rho_db", d)
            .set("rho", l.rho());
        if p.has(Mode::Exact) {
            let g = gain_report(&scen)?;
            r.set("round_robin", g.round_robin.value)
                .set("greedy", g.greedy.value)
                .set("gain_exact", g.exact_gain)
                .set("fractional_gain", g.fractional);
        }
        if p.has(Mode::Approx) {
            r.set("gain_approx", scheduling_gain(&scen, GainMode::Approx)?);
        }
        if p.has(Mode::Mc) {
            let rr = mimo_ergodic(n, m, l, &p.mc)?;
            let gr = mimo_scheduled_ergodic(n, m, k, l, &p.mc)?;
            r.set("mimo_round_robin", rr.value)
                .set("mimo_round_robin_se", rr.error_estimate)
                .set("mimo_greedy", gr.value)
                .set("mimo_greedy_se", gr.error_estimate);
        }
        Ok(vec![r.finish()])
    })?;
    Ok(t)
}

fn single<T: Copy>(values: &[T], flag: &str) -> Result<T, CliError> {
    match values {
        [v] => Ok(*v),
        _ => Err(CliError::Usage(format!(
            "table1 takes a single --{flag} value"
        ))),
    }
}

fn table1(p: &Params) -> Result<Table, CliError> {
    let spec = TableSpec {
        users: single(&p.users, "users")?,
        n: single(&p.n, "n")?,
        m_values: p.m.clone(),
        rho_db: p.rho_db.clone(),
    };
    let mut t = Table::new(TABLE1_COLUMNS);
    for cell in gain_table(&spec, Execution::Parallel)? {
        let mut r = t.row();
        r.set("m", cell.m).set("rho_db", cell.rho_db);
        if p.has(Mode::Exact) {
            r.set("exact_gain", cell.exact_gain)
                .set("exact_gain_display", format!("{:.4}", cell.exact_gain));
        }
        if let (true, Some(a)) = (p.has(Mode::Approx), cell.approx_gain) {
            r.set("approx_gain", a)
                .set("approx_gain_display", format!("{a:.2}"));
        }
        t.rows.push(r.finish());
    }
    Ok(t)
}

fn mimo(p: &Params) -> Result<Table, CliError> {
    let mut t = Table::new(MIMO_COLUMNS);
    let points: Vec<(u32, u64, u64, f64, f64)> = nm_grid(p)
        .into_iter()
        .flat_map(|(n, m)| {
            p.users.iter().flat_map(move |&k| {
                p.rho_db
                    .iter()
                    .flat_map(move |&d| p.p0.iter().map(move |&q| (n, m, k, d, q)))
            })
        })
        .collect();
    t.rows = rows_for(&points, |&(n, m, k, d, p0)| {
        let scen = SchedulingScenario::new(cfg(n, m)?, k, link(d)?)?;
        let l = scen.link();
        let mut r = t.row();
        r.set("n", n)
            .set("m", m)
            .set("users", k)
            .set("rho_db", d)
            .set("rho", l.rho())
            .set("p0", p0);
        if p.has(Mode::Mc) {
            let e = mimo_scheduled_ergodic(n, m, k, l, &p.mc)?;
            let o = mimo_scheduled_outage(n, m, k, l, p0, &p.mc)?;
            r.set("mimo_ergodic", e.value)
                .set("mimo_ergodic_se", e.error_estimate)
                .set("mimo_outage", o.value)
                .set("mimo_outage_se", o.error_estimate);
        }
        if p.has(Mode::Exact) {
            // greedy selection over K users is selection over the pooled mK antennas
            let pooled = scen.pooled();
            r.set("selection_ergodic", ergodic_capacity(&pooled, l)?.value)
                .set(
                    "selection_outage",
                    outage_capacity(&pooled, l, p0, OutageMode::Exact)?.value,
                );
        }
        Ok(vec![r.finish()])
    })?;
    Ok(t)
}

struct Check {
    name: String,
    observed: f64,
    expected: f64,
    tolerance: f64,
}

impl Check {
    fn new(name: impl Into<String>, observed: f64, expected: f64, tolerance: f64) -> Self {
        Self {
            name: name.into(),
            observed,
            expected,
            tolerance,
        }
    }

    fn passed(&self) -> bool {
        (self.observed - self.expected).abs() <= self.tolerance
    }
}

fn harmonic(m: u64) -> f64 {
    (1..=m).map(|k| 1.0 / k as f64).sum()
}

/// Simulation-versus-analytic checks at the requested sample size and seed.
fn verify(p: &Params) -> Result<Table, CliError> {
    let mc = p.mc;
    let mut checks = Vec::new();

    let mut worst: f64 = 0.0;
    for n in 1..=3 {
        for m in [1u64, 5, 20] {
            let mass = expect_over_selection_gain(&cfg(n, m)?, |_| 1.0)?.value;
            worst = worst.max((mass - 1.0).abs());
        }
    }
    checks.push(Check::new(
        "density_integrates_to_one",
        1.0 + worst,
        1.0,
        1e-8,
    ));

    for m in [1u64, 3, 10] {
        let h = harmonic(m);
        checks.push(Check::new(
            format!("harmonic_mean_quadrature_m{m}"),
            mean_selection_gain(&cfg(1, m)?)?,
            h,
            1e-7,
        ));
        let s = sample_selection_gain(&cfg(1, m)?, &mc)?;
        checks.push(Check::new(
            format!("harmonic_mean_mc_m{m}"),
            s.mean,
            h,
            3.0 * s.mean_std_error,
        ));
    }

    let s = sample_selection_gain(&cfg(1, 100)?, &mc)?;
    let target: f64 = (1..=100).map(|k| 1.0 / (k as f64).powi(2)).sum();
    checks.push(Check::new(
        "variance_mc_n1_m100",
        s.variance,
        target,
        3.0 * s.variance_std_error,
    ));

    let s = sample_selection_gain(&cfg(1, 5)?, &mc)?;
    // 99.9% critical value of the KS statistic
    let ks_crit = 1.95 / (s.samples as f64).sqrt();
    checks.push(Check::new("ks_mc_n1_m5", s.ks_distance, 0.0, ks_crit));

    for n in [1u32, 2] {
        for m in [1u64, 5, 20] {
            for d in [-5.0, 5.0] {
                let (c, l) = (cfg(n, m)?, link(d)?);
                let exact = ergodic_capacity(&c, &l)?.value;
                let sim = empirical_ergodic(&c, &l, &mc)?;
                checks.push(Check::new(
                    format!("ergodic_mc_n{n}_m{m}_rho{d}db"),
                    sim.value,
                    exact,
                    3.0 * sim.error_estimate,
                ));
            }
        }
    }

    let mut violation: f64 = 0.0;
    let mut round_trip: f64 = 0.0;
    for n in 1..=3 {
        for m in 1..=20 {
            for d in [-5.0, 0.0, 5.0, 10.0] {
                let (c, l) = (cfg(n, m)?, link(d)?);
                let exact = ergodic_capacity(&c, &l)?.value;
                let (lo, hi) = ergodic_bounds(&c, &l)?;
                violation = violation.max(lo.value - exact).max(exact - hi.value);
                for p0 in [0.01, 0.1, 0.5] {
                    let cap = outage_capacity(&c, &l, p0, OutageMode::Exact)?.value;
                    let back = outage_probability(&c, &l, cap, OutageMode::Exact)?;
                    round_trip = round_trip.max((back - p0).abs());
                }
            }
        }
    }
    checks.push(Check::new(
        "bound_sandwich_max_violation",
        violation.max(0.0),
        0.0,
        1e-6,
    ));
    checks.push(Check::new(
        "outage_round_trip_max_error",
        round_trip,
        0.0,
        1e-9,
    ));

    for (n, m) in [(1u32, 2u64), (2, 2), (2, 4)] {
        let l = link(0.0)?;
        let c = mimo_ergodic(n, m, &l, &mc)?;
        let ceiling = f64::from(n) * (1.0 + l.rho()).log2();
        // one-sided: only exceeding the ceiling counts
        let excess = (c.value - ceiling).max(0.0);
        checks.push(Check::new(
            format!("mimo_ceiling_n{n}_m{m}"),
            excess,
            0.0,
            3.0 * c.error_estimate,
        ));
    }

    let seq = sample_selection_gains(&cfg(2, 3)?, &mc.with_execution(Execution::Sequential))?;
    let par = sample_selection_gains(&cfg(2, 3)?, &mc.with_execution(Execution::Parallel))?;
    checks.push(Check::new(
        "execution_determinism",
        f64::from(u8::from(seq != par)),
        0.0,
        0.0,
    ));

    let mut t = Table::new(VERIFY_COLUMNS);
    for c in checks {
        let mut r = t.row();
        r.set("check", &c.name)
            .set("passed", c.passed())
            .set("observed", c.observed)
            .set("expected", c.expected)
            .set("tolerance", c.tolerance);
        t.rows.push(r.finish());
    }
    Ok(t)
}

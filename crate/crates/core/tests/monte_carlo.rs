//! Sampling oracle checks against exact results.

use antsel::capacity::{ergodic_capacity, mean_bounds, LinkParams};
use antsel::gumbel::{normalizing_constants, Strategy};
use antsel::mimo::{mimo_ergodic, mimo_outage, mimo_scheduled_ergodic};
use antsel::oracle::{ks_against, sample_selection_gain, sample_selection_gains, McConfig};
use antsel::{Execution, SelectionConfig};

fn cfg(n: u32, m: u64) -> SelectionConfig {
    SelectionConfig::new(n, m).unwrap()
}

fn link(rho: f64) -> LinkParams {
    LinkParams::new(rho).unwrap()
}

#[test]
fn empirical_mean_is_harmonic_number() {
    for (i, m) in [1u64, 3, 10, 100].into_iter().enumerate() {
        let h: f64 = (1..=m).map(|k| 1.0 / k as f64).sum();
        let s = sample_selection_gain(&cfg(1, m), &McConfig::new(200_000, 100 + i as u64)).unwrap();
        assert!(
            (s.mean - h).abs() <= 3.0 * s.mean_std_error,
            "m={m}: {} vs {h}",
            s.mean
        );
    }
}

#[test]
fn empirical_mean_within_quantile_sandwich() {
    let mut seed = 200;
    for n in 1..=3 {
        for m in [1u64, 2, 5, 10, 20] {
            seed += 1;
            let c = cfg(n, m);
            let (lo, hi) = mean_bounds(&c).unwrap();
            let s = sample_selection_gain(&c, &McConfig::new(50_000, seed)).unwrap();
            let slack = 3.0 * s.mean_std_error;
            assert!(
                lo - slack <= s.mean && s.mean <= hi + slack,
                "n={n} m={m}: {lo} {} {hi}",
                s.mean
            );
        }
    }
}

#[test]
fn ks_distance_against_exact_law() {
    let samples = 1_000_000;
    let s = sample_selection_gain(&cfg(1, 5), &McConfig::new(samples, 300)).unwrap();
    // 99.9% critical value of the one-sample KS statistic
    assert!(
        s.ks_distance <= 1.95 / (samples as f64).sqrt(),
        "{}",
        s.ks_distance
    );
}

#[test]
fn gumbel_fit_improves_with_m_empirically() {
    let mc = McConfig::new(200_000, 301);
    let ks = |m: u64| {
        let c = cfg(2, m);
        let fit = normalizing_constants(&c, Strategy::LemmaExact).unwrap();
        ks_against(&c, &mc, |x| fit.cdf(x)).unwrap()
    };
    assert!(ks(20) < ks(2));
}

#[test]
fn ergodic_matches_quadrature() {
    for (n, m, rho) in [(1, 4, 0.5), (2, 3, 3.0), (3, 7, 1.0)] {
        let c = cfg(n, m);
        let l = link(rho);
        let exact = ergodic_capacity(&c, &l).unwrap().value;
        let sim = antsel::oracle::empirical_ergodic(&c, &l, &McConfig::new(200_000, 400)).unwrap();
        assert!(
            (sim.value - exact).abs() <= 3.0 * sim.error_estimate,
            "n={n} m={m}"
        );
    }
}

#[test]
fn selection_exceeds_one_bit_once_m_reaches_three() {
    for m in 3..=20 {
        let c = ergodic_capacity(&cfg(1, m), &link(1.0)).unwrap().value;
        assert!(c > 1.0, "m={m}: {c}");
    }
}

#[test]
fn scheduled_selection_rises_while_scheduled_mimo_falls() {
    let l = link(1.0);
    let users = 8;
    let mc = McConfig::new(20_000, 500);
    let ms = [1u64, 2, 4, 8];
    let greedy: Vec<f64> = ms
        .iter()
        .map(|&m| ergodic_capacity(&cfg(1, m * users), &l).unwrap().value)
        .collect();
    let mimo: Vec<_> = ms
        .iter()
        .map(|&m| mimo_scheduled_ergodic(1, m, users, &l, &mc).unwrap())
        .collect();
    assert!(greedy.windows(2).all(|w| w[1] > w[0]), "{greedy:?}");
    assert!(
        mimo.windows(2)
            .all(|w| w[1].value + 3.0 * w[1].error_estimate < w[0].value),
        "{mimo:?}"
    );
}

#[test]
fn outputs_do_not_depend_on_execution_mode() {
    let base = McConfig::new(20_000, 600);
    let seq = base.with_execution(Execution::Sequential);
    let par = base.with_execution(Execution::Parallel);
    assert_eq!(
        sample_selection_gains(&cfg(3, 4), &seq).unwrap(),
        sample_selection_gains(&cfg(3, 4), &par).unwrap()
    );
    assert_eq!(
        mimo_ergodic(2, 3, &link(2.0), &seq).unwrap(),
        mimo_ergodic(2, 3, &link(2.0), &par).unwrap()
    );
    assert_eq!(
        mimo_outage(2, 3, &link(2.0), 0.05, &seq).unwrap(),
        mimo_outage(2, 3, &link(2.0), 0.05, &par).unwrap()
    );
    // repeated runs agree bit for bit
    assert_eq!(
        sample_selection_gain(&cfg(1, 7), &par).unwrap(),
        sample_selection_gain(&cfg(1, 7), &par).unwrap()
    );
}

#[test]
fn open_loop_mimo_under_jensen_ceiling() {
    let mc = McConfig::new(20_000, 700);
    for n in 1..=4u32 {
        for m in [1u64, 2, 4, 8] {
            for rho in [0.3, 1.0, 3.0, 10.0] {
                let c = mimo_ergodic(n, m, &link(rho), &mc).unwrap();
                assert!(c.value <= f64::from(n) * (1.0f64 + rho).log2() + 3.0 * c.error_estimate);
            }
        }
    }
}

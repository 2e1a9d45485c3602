use std::f64::consts::PI;

use emitter_mirror::analytic::excitation_probability_exact;
use emitter_mirror::trajectory::{
    ensemble_average, run_trajectory, EnsembleAverage, TrajectoryConfig,
};
use emitter_mirror::{SystemParams, C64};

const CASES: [(f64, f64, f64); 4] = [
    (0.0, 1.0, PI),
    (-0.5, 1.0, PI),
    (-1.0, 1.0, 2.0 * PI),
    (-1.0, 4.0, PI),
];

fn config(
    r: f64,
    tau: f64,
    phase: f64,
    boxes: usize,
    n: usize,
    seed: u64,
) -> (SystemParams, TrajectoryConfig) {
    let p = SystemParams::from_round_trip_phase(phase, tau, C64::new(r, 0.0)).unwrap();
    let c = TrajectoryConfig::from_params(&p, boxes, n, 10.0, seed).unwrap();
    (p, c)
}

#[test]
fn free_decay_within_three_standard_errors() {
    for &tau in &[0.5, 1.0, 3.0] {
        let (p, c) = config(0.0, tau, PI, 25, 5000, 99);
        let avg = ensemble_average(&c).unwrap();
        for ((&t, &m), &se) in avg.times.iter().zip(&avg.mean).zip(&avg.standard_error) {
            let exact = excitation_probability_exact(&p, t).unwrap();
            // Once every trajectory has jumped the sample error collapses to
            // zero; the Bernoulli bound of a [0, 1] variable takes over.
            let floor = (exact * (1.0 - exact) / 5000.0).sqrt();
            assert!(
                (m - exact).abs() <= 3.0 * se.max(floor) + 1e-12,
                "tau {tau} t {t}: {m} vs {exact} (se {se})"
            );
        }
    }
}

#[test]
fn standard_error_bound_and_band_match_seed_spread() {
    for &(r, tau, phase) in &CASES {
        let runs: Vec<EnsembleAverage> = (0..10)
            .map(|seed| ensemble_average(&config(r, tau, phase, 25, 5000, 1000 + seed).1).unwrap())
            .collect();
        let len = runs[0].mean.len();
        let mut spread_sq = 0.0;
        let mut band_sq = 0.0;
        for j in 0..len {
            let mean = runs.iter().map(|a| a.mean[j]).sum::<f64>() / 10.0;
            spread_sq += runs.iter().map(|a| (a.mean[j] - mean).powi(2)).sum::<f64>() / 9.0;
            band_sq += runs
                .iter()
                .map(|a| a.standard_error[j].powi(2))
                .sum::<f64>()
                / 10.0;
            for a in &runs {
                assert!(a.standard_error[j] <= (0.25f64 / 5000.0).sqrt() + 1e-12);
            }
        }
        let ratio = (spread_sq / band_sq).sqrt();
        assert!(
            (0.5..=2.0).contains(&ratio),
            "r {r} tau {tau}: spread/band = {ratio}"
        );
    }
}

#[test]
fn doubling_boxes_stays_within_statistical_band() {
    for &(r, tau, phase) in &CASES {
        let coarse = ensemble_average(&config(r, tau, phase, 25, 5000, 7).1).unwrap();
        let fine = ensemble_average(&config(r, tau, phase, 49, 5000, 7).1).unwrap();
        let mut max_diff: f64 = 0.0;
        let mut max_band: f64 = 0.0;
        for (j, (&m, &se)) in coarse.mean.iter().zip(&coarse.standard_error).enumerate() {
            let (mf, sef) = (fine.mean[2 * j], fine.standard_error[2 * j]);
            assert!((coarse.times[j] - fine.times[2 * j]).abs() < 1e-12);
            max_diff = max_diff.max((m - mf).abs());
            max_band = max_band.max(3.0 * (se * se + sef * sef).sqrt());
        }
        assert!(
            max_diff < max_band,
            "r {r} tau {tau}: {max_diff} vs band {max_band}"
        );
    }
}

#[test]
fn ensemble_of_one_is_the_first_trajectory() {
    let (_, c) = config(-1.0, 1.0, 2.0 * PI, 25, 1, 3);
    assert_eq!(
        ensemble_average(&c).unwrap().mean,
        run_trajectory(&c, 0).unwrap()
    );
}

#[test]
fn photon_leaves_once_and_for_all() {
    let (_, c) = config(-0.5, 1.0, PI, 25, 1, 5);
    for index in 0..50 {
        let series = run_trajectory(&c, index).unwrap();
        if let Some(first_zero) = series.iter().position(|&p| p == 0.0) {
            assert!(series[first_zero..].iter().all(|&p| p == 0.0));
        }
    }
}

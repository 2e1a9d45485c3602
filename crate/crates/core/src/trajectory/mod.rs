//! Discrete-space quantum-trajectory simulation of the emitter and mirror.
//!
//! Space is cut into `N` boxes per direction of width `cΔt`. Each step
//! records `P_e`, applies the local emitter-box propagator, simulates a
//! photon counter on the two output boxes, moves the field one box along
//! (reflecting and transmitting at the mirror) and renormalizes.

mod config;
mod ensemble;
mod propagator;
mod state;

use num_complex::Complex64 as C64;
use rand::distributions::Open01;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::blip::Direction;
use crate::error::{Error, Result};

pub use config::TrajectoryConfig;
pub use ensemble::{ensemble_average, EnsembleAverage};
pub use propagator::Propagator;
pub use state::TrajectoryState;

/// Smallest pre-renormalization norm accepted by [`step`].
pub const NORM_FLOOR: f64 = 1e-300;

/// Random stream for one trajectory: ChaCha20 keyed by `master_seed`, with
/// the trajectory index as the stream number.
pub fn trajectory_rng(master_seed: u64, trajectory_index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(master_seed);
    rng.set_stream(trajectory_index);
    rng
}

/// Result of one time step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepOutcome {
    /// `P_e` at the start of the step.
    pub excitation: f64,
    pub detection: Option<Direction>,
}

impl StepOutcome {
    pub fn detected(&self) -> bool {
        self.detection.is_some()
    }
}

/// Photon counter on right box `N−1` and left box 0.
pub fn measure<R: Rng>(state: &mut TrajectoryState, rng: &mut R) -> Option<Direction> {
    let n = state.boxes();
    let p_right = state.right(n - 1).norm_sqr();
    let p_left = state.left(0).norm_sqr();
    let p_total = p_right + p_left;
    let first: f64 = rng.sample(Open01);
    if first <= p_total {
        let second: f64 = p_total * rng.sample::<f64, _>(Open01);
        state.collapse_to_vacuum();
        return Some(if second <= p_left {
            Direction::Left
        } else {
            Direction::Right
        });
    }
    state.set_right(n - 1, C64::new(0.0, 0.0));
    state.set_left(0, C64::new(0.0, 0.0));
    None
}

/// Moves every photon one box along. Right box `N−1` receives `t_m` times the
/// old right box `N−2`, left box `N−2` receives `r_m` times it, and the left
/// input box `N−1` is left empty.
pub fn shift_boxes(state: &mut TrajectoryState, r_m: f64, t_m: f64) {
    let n = state.boxes();
    let at_mirror = state.right(n - 2);
    for k in 0..n.saturating_sub(2) {
        let next = state.left(k + 1);
        state.set_left(k, next);
    }
    state.set_left(n - 2, at_mirror * r_m);
    state.set_left(n - 1, C64::new(0.0, 0.0));
    for k in (1..n - 1).rev() {
        let previous = state.right(k - 1);
        state.set_right(k, previous);
    }
    state.set_right(n - 1, at_mirror * t_m);
    state.set_right(0, C64::new(0.0, 0.0));
}

/// One full step: record, propagate, measure, shift, renormalize.
pub fn step<R: Rng>(
    state: &mut TrajectoryState,
    config: &TrajectoryConfig,
    propagator: &Propagator,
    rng: &mut R,
) -> Result<StepOutcome> {
    let excitation = state.excitation_probability();
    propagator.apply(state);
    let detection = measure(state, rng);
    shift_boxes(state, config.r_m, config.t_m());
    let norm_sqr = state.norm_sqr();
    let norm = norm_sqr.sqrt();
    if !(norm >= NORM_FLOOR) {
        return Err(Error::NormUnderflow(norm));
    }
    let scale = norm.recip();
    state.amplitudes_mut().iter_mut().for_each(|z| *z *= scale);
    Ok(StepOutcome {
        excitation,
        detection,
    })
}

/// `P_e` at every sample time of a single trajectory.
pub fn run_trajectory(config: &TrajectoryConfig, trajectory_index: u64) -> Result<Vec<f64>> {
    config.validate()?;
    let propagator = Propagator::from_config(config);
    let mut rng = trajectory_rng(config.master_seed, trajectory_index);
    let mut state = TrajectoryState::excited(config.boxes);
    let samples = config.sample_count();
    let mut series = Vec::with_capacity(samples);
    for j in 0..samples {
        if state.is_vacuum() {
            series.resize(samples, 0.0);
            break;
        }
        if j + 1 == samples {
            series.push(state.excitation_probability());
            break;
        }
        series.push(step(&mut state, config, &propagator, &mut rng)?.excitation);
    }
    Ok(series)
}

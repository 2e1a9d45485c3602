use crate::error::{Error, Result};
use crate::params::SystemParams;

/// Discretization and sampling parameters of the trajectory simulation.
///
/// Box `n` of either direction has width `Δt = τ / (2(N − 1))`, so that
/// `N − 1` boxes span the emitter-mirror distance `τ/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryConfig {
    pub boxes: usize,
    pub tau: f64,
    pub v_right: f64,
    pub v_left: f64,
    pub r_m: f64,
    pub omega_e: f64,
    pub n_trajectories: usize,
    pub t_max: f64,
    pub master_seed: u64,
}

impl TrajectoryConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidTrajectoryConfig(msg));
        if self.boxes < 2 {
            return bad(format!("boxes must be >= 2, got {}", self.boxes));
        }
        if !(self.tau > 0.0) || !self.tau.is_finite() {
            return bad(format!("tau must be finite and > 0, got {}", self.tau));
        }
        if !(self.v_right >= 0.0 && self.v_left >= 0.0) || !(self.v_right + self.v_left).is_finite()
        {
            return bad(format!(
                "coupling rates must be finite and >= 0, got v_right = {}, v_left = {}",
                self.v_right, self.v_left
            ));
        }
        if !(self.r_m.abs() <= 1.0) {
            return bad(format!("r_m must lie in [-1, 1], got {}", self.r_m));
        }
        if !(self.omega_e >= 0.0) || !self.omega_e.is_finite() {
            return bad(format!(
                "omega_e must be finite and >= 0, got {}",
                self.omega_e
            ));
        }
        if self.n_trajectories < 1 {
            return bad("n_trajectories must be >= 1".into());
        }
        if !(self.t_max >= 0.0) || !self.t_max.is_finite() {
            return bad(format!("t_max must be finite and >= 0, got {}", self.t_max));
        }
        Ok(())
    }

    /// Configuration matching `params`, with the decay split evenly between
    /// both directions. The reflection coefficient must be real.
    pub fn from_params(
        params: &SystemParams,
        boxes: usize,
        n_trajectories: usize,
        t_max: f64,
        master_seed: u64,
    ) -> Result<Self> {
        if !params.has_real_reflection() {
            return Err(Error::InvalidTrajectoryConfig(format!(
                "the trajectory model needs a real r_m, got {}",
                params.r_m()
            )));
        }
        let half = 0.5 * params.gamma();
        let config = Self {
            boxes,
            tau: params.tau(),
            v_right: half,
            v_left: half,
            r_m: params.r_m().re,
            omega_e: params.omega_e(),
            n_trajectories,
            t_max,
            master_seed,
        };
        config.validate()?;
        Ok(config)
    }

    /// Total decay rate `Γ = V_R + V_L`.
    pub fn gamma(&self) -> f64 {
        self.v_right + self.v_left
    }

    pub fn dt(&self) -> f64 {
        self.tau / (2.0 * (self.boxes - 1) as f64)
    }

    pub fn t_m(&self) -> f64 {
        (1.0 - self.r_m * self.r_m).max(0.0).sqrt()
    }

    /// Number of recorded samples, one per step starting at `t = 0`.
    pub fn sample_count(&self) -> usize {
        (self.t_max / self.dt() + 1e-9).floor() as usize + 1
    }

    /// Sample times `j·Δt`.
    pub fn times(&self) -> Vec<f64> {
        let dt = self.dt();
        (0..self.sample_count()).map(|j| j as f64 * dt).collect()
    }
}

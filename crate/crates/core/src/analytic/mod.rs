//! Exact, long-time and Markovian excitation dynamics.

mod dyson;
mod exact;
mod longtime;
mod markov;

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::params::SystemParams;

pub use dyson::{dyson_coefficient_closed, dyson_coefficient_iterative, dyson_partial_sum};
pub use exact::{delay_sum, excitation_amplitude_exact, excitation_probability_exact};
pub use longtime::{
    excitation_probability_longtime, longtime_probability, solve_longtime, solve_xi,
    untruncated_history,
};
pub use markov::{dressed_params, excitation_probability_markovian, DressedParams};

/// `points` equally spaced times on `[0, t_max]`, each formed as `j·t_max/(points−1)`.
pub fn time_grid(t_max: f64, points: usize) -> Result<Vec<f64>> {
    if points < 2 {
        return Err(Error::InvalidParams(format!(
            "a grid needs at least 2 points, got {points}"
        )));
    }
    if !(t_max > 0.0) || !t_max.is_finite() {
        return Err(Error::InvalidParams(format!(
            "grid end must be finite and > 0, got {t_max}"
        )));
    }
    let last = (points - 1) as f64;
    Ok((0..points).map(|j| t_max * j as f64 / last).collect())
}

/// Exact excited-state amplitude and probability on a time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcitationCurve {
    pub times: Vec<f64>,
    pub probabilities: Vec<f64>,
    pub amplitudes: Vec<C64>,
}

impl ExcitationCurve {
    /// Evaluates every grid point in parallel; the result does not depend on
    /// the number of threads.
    pub fn exact(params: &SystemParams, times: &[f64]) -> Result<Self> {
        let amplitudes = times
            .par_iter()
            .map(|&t| excitation_amplitude_exact(params, t))
            .collect::<Result<Vec<_>>>()?;
        let probabilities = amplitudes.iter().map(|z| z.norm_sqr()).collect();
        Ok(Self {
            times: times.to_vec(),
            probabilities,
            amplitudes,
        })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }
}

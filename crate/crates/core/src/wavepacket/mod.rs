//! Spatial profile and spectrum of the emitted photon.
//!
//! Every field amplitude is a retarded copy of the excited-state amplitude
//! `c_e(s) = e^{−iΩs} f(s)`. With the emitter at `x = 0` and the mirror at
//! `x = τ/2`:
//!
//! * left-movers at `x < 0`: `−ig[c_e(t+x) + r_m c_e(t+x−τ)]`,
//! * right-movers at `0 ≤ x < τ/2`: `−ig c_e(t−x)`,
//! * right-movers at `x ≥ τ/2`: `−ig t_m c_e(t−x)`,
//! * left-movers at `0 ≤ x < τ/2`: `−ig r_m c_e(t−τ+x)`,
//!
//! where `c_e(s) = 0` for `s < 0`.

mod spectrum;

use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::analytic::excitation_probability_exact;
use crate::blip::Direction;
use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::quadrature::GaussLegendre;

pub use spectrum::{fwhm, lorentzian, spectral_transform, spectrum, SpectralTransform, Spectrum};

/// Excited-state amplitude at a retarded time, zero before emission starts.
fn retarded_amplitude(params: &SystemParams, s: f64) -> C64 {
    if s < 0.0 {
        return C64::new(0.0, 0.0);
    }
    crate::analytic::excitation_amplitude_exact(params, s).expect("non-negative time")
}

fn emission_prefactor(params: &SystemParams) -> C64 {
    C64::new(0.0, -params.coupling())
}

/// Left-moving amplitude `Φ_L(x, t)` on the emitter's far side, `−t ≤ x < 0`.
pub fn left_amplitude(params: &SystemParams, x: f64, t: f64) -> Result<C64> {
    if !(x < 0.0 && x >= -t) {
        return Err(Error::OutOfDomain { x, t });
    }
    let u = x + t;
    let direct = retarded_amplitude(params, u);
    let reflected = retarded_amplitude(params, u - params.tau()) * params.r_m();
    Ok(emission_prefactor(params) * (direct + reflected))
}

/// Index `n` of the round-trip interval `nτ ≤ x + t < (n+1)τ` holding a
/// left-mover at `x < 0`.
pub fn left_interval_index(params: &SystemParams, x: f64, t: f64) -> Option<usize> {
    let u = x + t;
    if !(x < 0.0 && u >= 0.0) {
        return None;
    }
    if params.tau() == 0.0 {
        return Some(0);
    }
    Some((u / params.tau()).floor() as usize)
}

/// Photon amplitude at `(x, direction)` for any position; zero outside the
/// light cone and for `t ≤ 0`.
pub fn photon_amplitude(params: &SystemParams, x: f64, direction: Direction, t: f64) -> C64 {
    let zero = C64::new(0.0, 0.0);
    if !(t > 0.0) || x.abs() > t {
        return zero;
    }
    let mirror = 0.5 * params.tau();
    match direction {
        Direction::Left if x < 0.0 => left_amplitude(params, x, t).unwrap_or(zero),
        Direction::Left if x < mirror => {
            emission_prefactor(params)
                * params.r_m()
                * retarded_amplitude(params, t - params.tau() + x)
        }
        Direction::Left => zero,
        Direction::Right if x < 0.0 => zero,
        Direction::Right => {
            let transmission = if x < mirror { 1.0 } else { params.t_m() };
            emission_prefactor(params) * retarded_amplitude(params, t - x) * transmission
        }
    }
}

/// Probability per unit length `|Φ|²` of finding the photon at `(x, direction)`.
pub fn photon_density(params: &SystemParams, x: f64, direction: Direction, t: f64) -> f64 {
    photon_amplitude(params, x, direction, t).norm_sqr()
}

/// Excited-state and photon probabilities at one instant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbabilityBudget {
    pub excitation: f64,
    pub left: f64,
    pub right: f64,
}

impl ProbabilityBudget {
    pub fn total(&self) -> f64 {
        self.excitation + self.left + self.right
    }
}

/// Integrates the photon density in both directions with Gauss-Legendre
/// pieces that never straddle a kink of the amplitude.
pub fn probability_budget(params: &SystemParams, t: f64) -> Result<ProbabilityBudget> {
    let excitation = excitation_probability_exact(params, t)?;
    if t == 0.0 {
        return Ok(ProbabilityBudget {
            excitation,
            left: 0.0,
            right: 0.0,
        });
    }
    let tau = params.tau();
    let mirror = 0.5 * tau;
    let mut breaks = vec![0.0, mirror];
    if tau > 0.0 {
        let rounds = (t / tau).ceil() as i64 + 2;
        for k in -1..=rounds {
            let kt = k as f64 * tau;
            breaks.extend([kt - t, t - kt, kt + tau - t]);
        }
    }
    let rule = GaussLegendre::new(16);
    let width = 0.25;
    let density = |d: Direction| move |x: f64| photon_density(params, x, d, t);
    let left =
        rule.integrate_piecewise(density(Direction::Left), -t, mirror.min(t), &breaks, width);
    let right = rule.integrate_piecewise(density(Direction::Right), 0.0, t, &breaks, width);
    Ok(ProbabilityBudget {
        excitation,
        left,
        right,
    })
}

/// Photon amplitudes and densities on a grid of positions at a fixed time.
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialProfile {
    pub time: f64,
    pub direction: Direction,
    pub positions: Vec<f64>,
    pub amplitudes: Vec<C64>,
    pub density: Vec<f64>,
    /// Round-trip interval of each left-mover behind the emitter, `None`
    /// elsewhere.
    pub intervals: Vec<Option<usize>>,
}

impl SpatialProfile {
    pub fn sample(params: &SystemParams, direction: Direction, t: f64, positions: &[f64]) -> Self {
        let amplitudes: Vec<C64> = positions
            .par_iter()
            .map(|&x| photon_amplitude(params, x, direction, t))
            .collect();
        let density = amplitudes.iter().map(|z| z.norm_sqr()).collect();
        let intervals = positions
            .iter()
            .map(|&x| match direction {
                Direction::Left => left_interval_index(params, x, t),
                Direction::Right => None,
            })
            .collect();
        Self {
            time: t,
            direction,
            positions: positions.to_vec(),
            amplitudes,
            density,
            intervals,
        }
    }

    /// Density rescaled to a unit maximum, as used for plotting.
    pub fn peak_normalized(&self) -> Vec<f64> {
        let peak = self.density.iter().copied().fold(0.0, f64::max);
        if peak == 0.0 {
            return self.density.clone();
        }
        self.density.iter().map(|d| d / peak).collect()
    }
}

//! Exact excitation amplitude as a finite delay sum.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::summation::ComplexSum;

/// `z^k / k!` evaluated as `exp(k ln z − ln k! + log_scale)` so that neither
/// factor overflows on its own.
pub(crate) fn scaled_power_term(z: C64, k: usize, ln_factorial: f64, log_scale: f64) -> C64 {
    if k == 0 {
        return C64::new(log_scale.exp(), 0.0);
    }
    if z == C64::new(0.0, 0.0) {
        return C64::new(0.0, 0.0);
    }
    (z.ln() * k as f64 + (log_scale - ln_factorial)).exp()
}

/// `e^{log_scale} · Σ_{k=0}^{⌊u/τ⌋} a^k (u − kτ)^k / k!`, or `e^{log_scale + a u}`
/// when `τ = 0`. Returns zero for `u < 0`.
pub(crate) fn scaled_delay_sum(a: C64, tau: f64, u: f64, log_scale: f64) -> C64 {
    if u < 0.0 {
        return C64::new(0.0, 0.0);
    }
    if tau == 0.0 {
        return (a * u + log_scale).exp();
    }
    let last = (u / tau).floor() as usize;
    let mut acc = ComplexSum::new();
    let mut ln_factorial = 0.0;
    for k in 0..=last {
        if k > 0 {
            ln_factorial += (k as f64).ln();
        }
        let s = u - k as f64 * tau;
        if s < 0.0 {
            break;
        }
        acc.add(scaled_power_term(a * s, k, ln_factorial, log_scale));
    }
    acc.value()
}

/// The delay sum `f(u) = Σ_{k=0}^{⌊u/τ⌋} a^k (u − kτ)^k / k!`, the solution of
/// `f′(u) = a f(u − τ)` with `f = 1` on `[0, τ)`; zero for `u < 0`.
pub fn delay_sum(a: C64, tau: f64, u: f64) -> C64 {
    scaled_delay_sum(a, tau, u, 0.0)
}

/// Excited-state amplitude `⟨e,0|ψ(t)⟩ = e^{−iΩt} f(t)`.
pub fn excitation_amplitude_exact(params: &SystemParams, t: f64) -> Result<C64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::NegativeTime(t));
    }
    let a = params.derived().a;
    let damping = -0.5 * params.gamma() * t;
    let phase = C64::from_polar(1.0, -params.omega_e() * t);
    Ok(phase * scaled_delay_sum(a, params.tau(), t, damping))
}

/// `P_e(t) = |⟨e,0|ψ(t)⟩|²`.
pub fn excitation_probability_exact(params: &SystemParams, t: f64) -> Result<f64> {
    excitation_amplitude_exact(params, t).map(|z| z.norm_sqr())
}

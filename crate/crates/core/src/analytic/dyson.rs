//! Even-order Dyson coefficients `c_n(t)` of the excited-state amplitude.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::piecewise::PiecewisePolynomial;
use crate::summation::ComplexSum;

fn check_order(n: usize) -> Result<usize> {
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    Ok(n / 2)
}

/// Closed form
/// `c_n(t) = (−Γ/2)^m / m! · Σ_k C(m,k) w^k Θ(t − kτ) (t − kτ)^m`,
/// with `m = n/2` and `w = r_m e^{iω_eτ}`.
pub fn dyson_coefficient_closed(params: &SystemParams, n: usize, t: f64) -> Result<C64> {
    let m = check_order(n)?;
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    let w = params.feedback_weight();
    let tau = params.tau();
    let mut prefactor = 1.0;
    for j in 1..=m {
        prefactor *= -0.5 * params.gamma() / j as f64;
    }
    let mut acc = ComplexSum::new();
    let mut binomial = 1.0;
    let mut w_power = C64::new(1.0, 0.0);
    for k in 0..=m {
        let s = t - k as f64 * tau;
        if s < 0.0 {
            break;
        }
        acc.add(w_power * (binomial * s.powi(m as i32)));
        binomial = binomial * (m - k) as f64 / (k + 1) as f64;
        w_power *= w;
    }
    Ok(acc.value() * prefactor)
}

/// Builds `c_n` through `c_{n+2} = −(Γ/2)[I_n(t) + w Θ(t−τ) I_n(t−τ)]`,
/// `I_n(t) = ∫₀^t c_n`, starting from `c_0 = 1`.
pub fn dyson_coefficient_iterative(params: &SystemParams, n: usize) -> Result<PiecewisePolynomial> {
    let m = check_order(n)?;
    let w = params.feedback_weight();
    let half_gamma = C64::new(-0.5 * params.gamma(), 0.0);
    let mut c = PiecewisePolynomial::constant(C64::new(1.0, 0.0));
    for _ in 0..m {
        let integral = c.integrate();
        let delayed = integral.shift(params.tau())?.scaled(w);
        c = integral.try_add(&delayed)?.scaled(half_gamma);
    }
    Ok(c)
}

/// `e^{−iω_e t} Σ_{n even ≤ max_order} c_n(t)`, the truncated Dyson series
/// for `⟨e,0|ψ(t)⟩`.
pub fn dyson_partial_sum(params: &SystemParams, max_order: usize, t: f64) -> Result<C64> {
    let mut acc = ComplexSum::new();
    for n in (0..=max_order).step_by(2) {
        acc.add(dyson_coefficient_closed(params, n, t)?);
    }
    Ok(acc.value() * C64::from_polar(1.0, -params.omega_e() * t))
}

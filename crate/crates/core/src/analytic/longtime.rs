//! Long-time exponential `f(t) ≈ ξ0 e^{ξt}` of the delay sum.

use num_complex::Complex64 as C64;

use crate::analytic::exact::scaled_power_term;
use crate::error::{Error, Result};
use crate::params::{DerivedConstants, SystemParams};
use crate::summation::ComplexSum;

const MAX_NEWTON_ITERATIONS: usize = 200;
const MAX_HALVINGS: usize = 60;
const RESIDUAL_TOLERANCE: f64 = 1e-12;
const SERIES_TOLERANCE: f64 = 1e-14;
const GROWTH_LIMIT: usize = 8;
const MAX_SERIES_TERMS: usize = 1_000_000;

/// Solves `ξ e^{ξτ} = a` by damped Newton iteration started at `ξ = a`.
///
/// For real `a` the root is searched on the real axis, where it exists only
/// when `aτ ≥ −1/e`.
pub fn solve_xi(a: C64, tau: f64) -> Result<C64> {
    if tau == 0.0 || a == C64::new(0.0, 0.0) {
        return Ok(a);
    }
    let scale = a.norm().max(1.0);
    let real = a.im.abs() <= 1e-12 * a.norm();
    let a = if real { C64::new(a.re, 0.0) } else { a };
    if real && a.re * tau < -(-1.0f64).exp() {
        return Err(Error::NoLongtimeSolution {
            reason: format!(
                "a·tau = {:.6e} is below -1/e, so xi·exp(xi·tau) = a has no real root",
                a.re * tau
            ),
        });
    }
    let residual = |xi: C64| xi * (xi * tau).exp() - a;
    let mut xi = a;
    let mut r = residual(xi);
    for _ in 0..MAX_NEWTON_ITERATIONS {
        if r.norm() <= RESIDUAL_TOLERANCE * scale {
            return Ok(xi);
        }
        let derivative = (xi * tau).exp() * (1.0 + xi * tau);
        if derivative.norm() == 0.0 {
            break;
        }
        let mut step = r / derivative;
        let mut candidate = xi - step;
        let mut r_candidate = residual(candidate);
        let mut halvings = 0;
        while !(r_candidate.norm() < r.norm()) && halvings < MAX_HALVINGS {
            step *= 0.5;
            candidate = xi - step;
            r_candidate = residual(candidate);
            halvings += 1;
        }
        if !(r_candidate.norm() <= r.norm()) {
            break;
        }
        if real {
            candidate.im = 0.0;
            r_candidate = residual(candidate);
        }
        xi = candidate;
        r = r_candidate;
    }
    if r.norm() <= RESIDUAL_TOLERANCE * scale {
        return Ok(xi);
    }
    Err(Error::NoLongtimeSolution {
        reason: format!(
            "Newton iteration for xi did not converge in {MAX_NEWTON_ITERATIONS} iterations (residual {:.3e})",
            r.norm()
        ),
    })
}

/// `Σ_{k≥0} a^k (t − kτ)^k / k!` with every step function set to one.
///
/// At `t = 0` this is the long-time prefactor `ξ0`. Terms with `kτ < t + τ`
/// are always summed, so no term near a zero of `t − kτ` can end the series;
/// beyond that it stops once a term drops below `1e−14·max(1, |sum|)` and
/// fails after 8 consecutive growing terms.
pub fn untruncated_history(a: C64, tau: f64, t: f64) -> Result<C64> {
    if tau == 0.0 {
        return Ok((a * t).exp());
    }
    let onset = if t > 0.0 {
        (t / tau).floor() as usize + 1
    } else {
        0
    };
    let mut acc = ComplexSum::new();
    let mut ln_factorial = 0.0;
    let mut previous = f64::INFINITY;
    let mut growing = 0;
    for k in 0..MAX_SERIES_TERMS {
        if k > 0 {
            ln_factorial += (k as f64).ln();
        }
        let term = scaled_power_term(a * (t - k as f64 * tau), k, ln_factorial, 0.0);
        acc.add(term);
        if k <= onset {
            continue;
        }
        let magnitude = term.norm();
        if !magnitude.is_finite() {
            return Err(Error::Xi0Diverges {
                consecutive: growing,
                order: k,
            });
        }
        if magnitude < SERIES_TOLERANCE * acc.value().norm().max(1.0) {
            return Ok(acc.value());
        }
        if magnitude > previous {
            growing += 1;
            if growing >= GROWTH_LIMIT {
                return Err(Error::Xi0Diverges {
                    consecutive: growing,
                    order: k,
                });
            }
        } else {
            growing = 0;
        }
        previous = magnitude;
    }
    Err(Error::Xi0Diverges {
        consecutive: growing,
        order: MAX_SERIES_TERMS,
    })
}

/// Populates `ξ` and `ξ0` for the given parameters.
pub fn solve_longtime(params: &SystemParams) -> Result<DerivedConstants> {
    let mut constants = params.derived();
    let xi = solve_xi(constants.a, params.tau())?;
    let xi0 = if params.tau() == 0.0 {
        C64::new(1.0, 0.0)
    } else {
        untruncated_history(constants.a, params.tau(), 0.0)?
    };
    constants.xi = Some(xi);
    constants.xi0 = Some(xi0);
    Ok(constants)
}

/// `|ξ0|² e^{−(Γ − 2 Re ξ) t}`.
pub fn excitation_probability_longtime(params: &SystemParams, t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::NegativeTime(t));
    }
    let constants = solve_longtime(params)?;
    Ok(longtime_probability(&constants, params.gamma(), t))
}

/// Evaluates the long-time formula for already solved constants.
pub fn longtime_probability(constants: &DerivedConstants, gamma: f64, t: f64) -> f64 {
    match (constants.xi, constants.xi0) {
        (Some(xi), Some(xi0)) => xi0.norm_sqr() * (-(gamma - 2.0 * xi.re) * t).exp(),
        _ => f64::NAN,
    }
}

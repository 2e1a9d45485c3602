//! Physical configuration of the emitter-mirror system.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Allowed violation of `t_m² + |r_m|² = 1`.
pub const UNITARITY_TOLERANCE: f64 = 1e-12;

/// Emitter and mirror parameters in Γ-normalized units (`c = 1`).
///
/// The emitter sits at `x = 0` and the mirror at `x = d/2`, so the photon
/// round-trip time is `tau = d/c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    omega_e: f64,
    gamma: f64,
    tau: f64,
    r_m: C64,
    t_m: f64,
}

impl SystemParams {
    /// Fully general constructor; every invariant is checked.
    pub fn new(omega_e: f64, gamma: f64, tau: f64, r_m: C64, t_m: f64) -> Result<Self> {
        let finite = [omega_e, gamma, tau, r_m.re, r_m.im, t_m]
            .iter()
            .all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidParams("all parameters must be finite".into()));
        }
        if gamma <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "gamma must be > 0, got {gamma}"
            )));
        }
        if tau < 0.0 {
            return Err(Error::InvalidParams(format!("tau must be >= 0, got {tau}")));
        }
        if omega_e < 0.0 {
            return Err(Error::InvalidParams(format!(
                "omega_e must be >= 0, got {omega_e}"
            )));
        }
        if r_m.norm() > 1.0 + UNITARITY_TOLERANCE {
            return Err(Error::InvalidParams(format!(
                "|r_m| must be <= 1, got {}",
                r_m.norm()
            )));
        }
        if t_m < 0.0 {
            return Err(Error::InvalidParams(format!("t_m must be >= 0, got {t_m}")));
        }
        let defect = t_m * t_m + r_m.norm_sqr() - 1.0;
        if defect.abs() > UNITARITY_TOLERANCE {
            return Err(Error::InvalidParams(format!(
                "mirror is not unitary: t_m^2 + |r_m|^2 - 1 = {defect:e}"
            )));
        }
        Ok(Self {
            omega_e,
            gamma,
            tau,
            r_m,
            t_m,
        })
    }

    /// Normalized units (`Γ = 1`) with the transmission fixed by unitarity.
    pub fn normalized(omega_e: f64, tau: f64, r_m: C64) -> Result<Self> {
        let t_m = (1.0 - r_m.norm_sqr()).max(0.0).sqrt();
        Self::new(omega_e, 1.0, tau, r_m, t_m)
    }

    /// Normalized units with a real reflection coefficient.
    pub fn normalized_real(omega_e: f64, tau: f64, r_m: f64) -> Result<Self> {
        Self::normalized(omega_e, tau, C64::new(r_m, 0.0))
    }

    /// Normalized units specified through the round-trip phase `ω_e τ`
    /// instead of the transition frequency.
    pub fn from_round_trip_phase(phase: f64, tau: f64, r_m: C64) -> Result<Self> {
        if tau <= 0.0 {
            if phase == 0.0 && tau == 0.0 {
                return Self::normalized(0.0, 0.0, r_m);
            }
            return Err(Error::InvalidParams(format!(
                "a round-trip phase needs tau > 0, got tau = {tau}"
            )));
        }
        Self::normalized(phase / tau, tau, r_m)
    }

    /// Normalized units with the mirror described by its coupling `J/c`.
    ///
    /// The transmission is stored as `|t_m|`; its sign only changes the phase
    /// of transmitted light, which no observable here depends on.
    pub fn from_mirror_coupling(omega_e: f64, tau: f64, j_over_c: f64) -> Result<Self> {
        if !(j_over_c >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "J/c must be >= 0, got {j_over_c}"
            )));
        }
        let (t_m, r_m) = mirror_coefficients(j_over_c);
        Self::new(omega_e, 1.0, tau, r_m, t_m.abs())
    }

    pub fn omega_e(&self) -> f64 {
        self.omega_e
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn r_m(&self) -> C64 {
        self.r_m
    }

    pub fn t_m(&self) -> f64 {
        self.t_m
    }

    /// Round-trip phase `ω_e τ`.
    pub fn round_trip_phase(&self) -> f64 {
        self.omega_e * self.tau
    }

    /// Complex frequency `Ω = ω_e − iΓ/2`.
    pub fn complex_frequency(&self) -> C64 {
        C64::new(self.omega_e, -0.5 * self.gamma)
    }

    /// Emitter-field coupling `g`, real and positive, from `Γ = 2|g|²/c`.
    pub fn coupling(&self) -> f64 {
        (0.5 * self.gamma).sqrt()
    }

    /// `r_m e^{iω_e τ}`: amplitude returned to the emitter after one round trip.
    pub fn feedback_weight(&self) -> C64 {
        self.r_m * C64::from_polar(1.0, self.round_trip_phase())
    }

    /// Whether the reflection coefficient has no imaginary part.
    pub fn has_real_reflection(&self) -> bool {
        self.r_m.im == 0.0
    }

    pub fn derived(&self) -> DerivedConstants {
        derived_constants(self)
    }
}

/// Transmission and reflection of a mirror with coupling rate `J` between
/// right- and left-moving photons.
///
/// Returns `(t_m, r_m)` with `r_m` purely imaginary and `t_m² + |r_m|² = 1`.
pub fn mirror_coefficients(j_over_c: f64) -> (f64, C64) {
    let q = 0.25 * j_over_c * j_over_c;
    let denom = 1.0 + q;
    let t_m = (1.0 - q) / denom;
    let r_m = C64::new(0.0, -j_over_c / denom);
    (t_m, r_m)
}

/// Complex constants governing the delay equation `f'(t) = a f(t − τ)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedConstants {
    /// `a = −r_m e^{iΩτ} Γ/2`.
    pub a: C64,
    /// `Ω = ω_e − iΓ/2`.
    pub omega_complex: C64,
    /// Root of `ξ e^{ξτ} = a`, set by [`crate::analytic::solve_longtime`].
    pub xi: Option<C64>,
    /// Long-time prefactor `Σ_k (−k)^k (aτ)^k / k!`.
    pub xi0: Option<C64>,
}

/// Computes `a` and `Ω`; the long-time constants are left unset.
///
/// The exponent uses the complex `Ω`, so `|a|` carries the factor `e^{Γτ/2}`.
pub fn derived_constants(params: &SystemParams) -> DerivedConstants {
    let omega_complex = params.complex_frequency();
    let round_trip = (C64::i() * omega_complex * params.tau()).exp();
    let a = -params.r_m() * round_trip * (0.5 * params.gamma());
    DerivedConstants {
        a,
        omega_complex,
        xi: None,
        xi0: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn transparent_and_perfect_mirror_limits() {
        let (t, r) = mirror_coefficients(0.0);
        assert_eq!(t, 1.0);
        assert_eq!(r, C64::new(0.0, 0.0));

        let (t, r) = mirror_coefficients(2.0);
        assert_eq!(t, 0.0);
        assert_eq!(r, C64::new(0.0, -1.0));
    }

    #[test]
    fn unit_coupling_gives_three_four_five_mirror() {
        let (t, r) = mirror_coefficients(1.0);
        assert!((t - 0.6).abs() < 1e-15);
        assert!((r - C64::new(0.0, -0.8)).norm() < 1e-15);
        assert!((t * t + r.norm_sqr() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn no_reflection_means_a_vanishes() {
        let p = SystemParams::normalized_real(3.0, 1.0, 0.0).unwrap();
        let d = p.derived();
        assert_eq!(d.a, C64::new(0.0, 0.0));
        assert_eq!(d.omega_complex, C64::new(3.0, -0.5));
        assert!(d.xi.is_none() && d.xi0.is_none());
    }

    #[test]
    fn trapping_configuration_feedback_constant() {
        let p = SystemParams::from_round_trip_phase(2.0 * PI, 1.0, C64::new(-1.0, 0.0)).unwrap();
        let a = p.derived().a;
        let expected = 0.5 * 0.5f64.exp();
        assert!((a.re - expected).abs() < 1e-14);
        assert!(a.im.abs() < 1e-14);
        assert!((a.re - 0.8244).abs() < 1e-4);
    }

    #[test]
    fn markovian_configuration_feedback_constant() {
        let p = SystemParams::from_round_trip_phase(PI, 0.01, C64::new(-1.0, 0.0)).unwrap();
        let a = p.derived().a;
        assert!((a.re + 0.5 * 0.005f64.exp()).abs() < 1e-14);
        assert!((a.re + 0.5025).abs() < 1e-4);
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(SystemParams::new(1.0, 0.0, 1.0, C64::new(0.0, 0.0), 1.0).is_err());
        assert!(SystemParams::new(1.0, 1.0, -1.0, C64::new(0.0, 0.0), 1.0).is_err());
        assert!(SystemParams::new(-1.0, 1.0, 1.0, C64::new(0.0, 0.0), 1.0).is_err());
        assert!(SystemParams::new(1.0, 1.0, 1.0, C64::new(0.5, 0.0), 0.5).is_err());
        assert!(SystemParams::normalized_real(1.0, 1.0, 1.5).is_err());
        assert!(SystemParams::from_round_trip_phase(1.0, 0.0, C64::new(0.0, 0.0)).is_err());
        assert!(SystemParams::new(f64::NAN, 1.0, 1.0, C64::new(0.0, 0.0), 1.0).is_err());
    }

    #[test]
    fn mirror_coupling_constructor_is_unitary_beyond_perfect_reflection() {
        let p = SystemParams::from_mirror_coupling(1.0, 1.0, 5.0).unwrap();
        assert!(p.t_m() >= 0.0);
        assert!((p.t_m().powi(2) + p.r_m().norm_sqr() - 1.0).abs() < 1e-12);
    }
}

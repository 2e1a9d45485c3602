//! Markovian limit and dressed emitter parameters.

use crate::params::SystemParams;

/// Mirror-induced frequency shift and decay rate in the Markovian limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DressedParams {
    pub delta_eff: f64,
    pub gamma_eff: f64,
}

/// `e^{−Γ_eff t}` with `Γ_eff = Γ[1 + Re(r_m e^{iω_eτ})]`, which reduces to
/// `Γ[1 + r_m cos ω_eτ]` for real `r_m`.
pub fn excitation_probability_markovian(params: &SystemParams, t: f64) -> f64 {
    (-dressed_params(params).gamma_eff * t).exp()
}

/// `Δ_eff = (Γ/2) Im(r_m e^{iω_eτ})` and `Γ_eff = Γ[1 + Re(r_m e^{iω_eτ})]`.
pub fn dressed_params(params: &SystemParams) -> DressedParams {
    let w = params.feedback_weight();
    let gamma = params.gamma();
    DressedParams {
        delta_eff: 0.5 * gamma * w.im,
        gamma_eff: gamma * (1.0 + w.re),
    }
}

//! Spectrum of the left-moving wave packet after the emitter has decayed.

use std::f64::consts::PI;

use num_complex::Complex64 as C64;
use rayon::prelude::*;
use rustfft::FftPlanner;

use crate::analytic::excitation_probability_exact;
use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::wavepacket::left_amplitude;

/// Largest excited-state probability at `t_final` for which the field is
/// considered fully emitted.
pub const DECAY_THRESHOLD: f64 = 1e-6;

/// Peak-normalized spectral density on an absolute frequency axis.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub frequencies: Vec<f64>,
    pub spectral_density: Vec<f64>,
    pub t_final: f64,
    pub sample_count: usize,
    /// Spacing of the position (and hence time) samples.
    pub spacing: f64,
}

/// Raw samples and their unitary discrete Fourier transform.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralTransform {
    pub positions: Vec<f64>,
    pub samples: Vec<C64>,
    /// Frequencies in ascending order, `ω_j = 2πj/(MΔ)` for `j = −M/2..M/2−1`.
    pub frequencies: Vec<f64>,
    /// `M^{−1/2} Σ_n Φ_n e^{iω_j x_n}` up to a global phase, ordered like
    /// `frequencies`.
    pub amplitudes: Vec<C64>,
    pub spacing: f64,
}

/// Samples `Φ_L(x, t_final)` at `x_n = −t_final + nΔ`, `Δ = t_final/M`, and
/// transforms with the `e^{+iωx}` kernel so that emission at `ω_e` appears at
/// positive frequency.
pub fn spectral_transform(
    params: &SystemParams,
    t_final: f64,
    sample_count: usize,
) -> Result<SpectralTransform> {
    if sample_count < 2 || !sample_count.is_power_of_two() {
        return Err(Error::InvalidSampleCount(sample_count));
    }
    if !(t_final > 0.0) || !t_final.is_finite() {
        return Err(Error::InvalidParams(format!(
            "t_final must be finite and > 0, got {t_final}"
        )));
    }
    let excitation = excitation_probability_exact(params, t_final)?;
    if excitation > DECAY_THRESHOLD {
        return Err(Error::EmitterNotDecayed {
            t_final,
            excitation,
            threshold: DECAY_THRESHOLD,
        });
    }
    let m = sample_count;
    let spacing = t_final / m as f64;
    let positions: Vec<f64> = (0..m).map(|n| -t_final + n as f64 * spacing).collect();
    let samples = positions
        .par_iter()
        .map(|&x| left_amplitude(params, x, t_final))
        .collect::<Result<Vec<_>>>()?;

    let mut buffer = samples.clone();
    FftPlanner::new().plan_fft_inverse(m).process(&mut buffer);
    let norm = (m as f64).sqrt().recip();
    let half = m / 2;
    let mut frequencies = Vec::with_capacity(m);
    let mut amplitudes = Vec::with_capacity(m);
    for j in 0..m {
        // Ascending order: bins M/2..M−1 are the negative frequencies.
        let bin = (j + half) % m;
        let index = j as i64 - half as i64;
        frequencies.push(2.0 * PI * index as f64 / (m as f64 * spacing));
        amplitudes.push(buffer[bin] * norm);
    }
    Ok(SpectralTransform {
        positions,
        samples,
        frequencies,
        amplitudes,
        spacing,
    })
}

/// `|amplitude|²` of [`spectral_transform`], rescaled to a unit peak.
pub fn spectrum(params: &SystemParams, t_final: f64, sample_count: usize) -> Result<Spectrum> {
    let transform = spectral_transform(params, t_final, sample_count)?;
    let power: Vec<f64> = transform.amplitudes.iter().map(|z| z.norm_sqr()).collect();
    let peak = power.iter().copied().fold(0.0, f64::max);
    let spectral_density = if peak > 0.0 {
        power.iter().map(|p| p / peak).collect()
    } else {
        power
    };
    Ok(Spectrum {
        frequencies: transform.frequencies,
        spectral_density,
        t_final,
        sample_count,
        spacing: transform.spacing,
    })
}

/// Full width at half maximum around the global peak, with linear
/// interpolation of both half-maximum crossings.
pub fn fwhm(frequencies: &[f64], density: &[f64]) -> Option<f64> {
    let (peak_index, &peak) = density
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))?;
    let half = 0.5 * peak;
    let crossing = |i: usize, j: usize| {
        let (d0, d1) = (density[i], density[j]);
        let w = (half - d0) / (d1 - d0);
        frequencies[i] + w * (frequencies[j] - frequencies[i])
    };
    let mut lo = peak_index;
    while lo > 0 && density[lo - 1] > half {
        lo -= 1;
    }
    if lo == 0 {
        return None;
    }
    let mut hi = peak_index;
    while hi + 1 < density.len() && density[hi + 1] > half {
        hi += 1;
    }
    if hi + 1 == density.len() {
        return None;
    }
    Some(crossing(hi, hi + 1) - crossing(lo - 1, lo))
}

/// Lorentzian `(Γ/2π) / ((ω − ω_e)² + Γ²/4)`.
pub fn lorentzian(omega: f64, omega_e: f64, gamma: f64) -> f64 {
    let d = omega - omega_e;
    gamma / (2.0 * PI) / (d * d + 0.25 * gamma * gamma)
}

//! Exact dynamics of a two-level single-photon emitter coupled to a
//! one-dimensional field that is terminated by a partially transparent mirror.
//!
//! All quantities are expressed in units normalized to the free-space decay
//! rate: times in `1/Γ`, frequencies in `Γ`, positions in `c/Γ`. The speed of
//! light is fixed to one, so the emitter-field coupling obeys `|g|² = Γ/2`.
//!
//! The crate is organised bottom-up:
//!
//! * [`params`]: system parameters, mirror coefficients and the derived
//!   complex constants of the delay equation.
//! * [`piecewise`]: complex piecewise polynomials on a uniform breakpoint
//!   lattice, used to build Dyson coefficients exactly.
//! * [`analytic`]: exact, long-time and Markovian excitation amplitudes.
//! * [`wavepacket`]: spatial profile and spectrum of the emitted photon.
//! * [`trajectory`]: discrete-space quantum-trajectory Monte Carlo, used as an
//!   independent check of the analytic solution.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod blip;
pub mod error;
pub mod params;
pub mod piecewise;
pub mod quadrature;
pub mod summation;
pub mod trajectory;
pub mod wavepacket;

pub use blip::{BlipComponent, Direction};
pub use error::{Error, Result};
pub use params::{mirror_coefficients, DerivedConstants, SystemParams};
pub use piecewise::PiecewisePolynomial;

pub use num_complex::Complex64 as C64;

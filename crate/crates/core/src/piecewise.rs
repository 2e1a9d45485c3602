//! Complex piecewise polynomials on a uniform breakpoint lattice.
//!
//! Segment `k` covers `[k·step, (k+1)·step)` and the last segment extends to
//! `+∞`. Coefficients are stored in ascending powers of the local offset
//! `s = t − k·step`. Breakpoints are always formed as `k as f64 * step`.

use std::ops::{Add, Mul};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Relative slack when deciding whether a delay sits on the lattice.
const LATTICE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePolynomial {
    step: f64,
    segments: Vec<Vec<C64>>,
}

impl PiecewisePolynomial {
    /// A single polynomial valid for all `t`, coefficients in powers of `t`.
    pub fn polynomial(coefficients: Vec<C64>) -> Self {
        let coefficients = if coefficients.is_empty() {
            vec![C64::new(0.0, 0.0)]
        } else {
            coefficients
        };
        Self {
            step: 0.0,
            segments: vec![coefficients],
        }
    }

    pub fn constant(value: C64) -> Self {
        Self::polynomial(vec![value])
    }

    /// Builds a polynomial from per-segment local coefficients.
    pub fn from_segments(step: f64, segments: Vec<Vec<C64>>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::InvalidParams(
                "at least one segment is required".into(),
            ));
        }
        if !(step.is_finite() && step >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "lattice step must be finite and >= 0, got {step}"
            )));
        }
        if segments.len() > 1 && step == 0.0 {
            return Err(Error::InvalidParams(
                "several segments need a positive lattice step".into(),
            ));
        }
        let segments = segments
            .into_iter()
            .map(|s| {
                if s.is_empty() {
                    vec![C64::new(0.0, 0.0)]
                } else {
                    s
                }
            })
            .collect();
        Ok(Self { step, segments })
    }

    /// Lattice spacing; meaningless (and zero) for a single segment that was
    /// never shifted.
    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn segments(&self) -> &[Vec<C64>] {
        &self.segments
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    pub fn degree(&self) -> usize {
        self.segments.iter().map(|s| s.len() - 1).max().unwrap_or(0)
    }

    /// Left ends of the segments, `k·step` for `k = 0..K`.
    pub fn breakpoints(&self) -> Vec<f64> {
        (0..self.segments.len())
            .map(|k| self.breakpoint(k))
            .collect()
    }

    fn breakpoint(&self, k: usize) -> f64 {
        k as f64 * self.step
    }

    fn segment_index(&self, t: f64) -> usize {
        let last = self.segments.len() - 1;
        if last == 0 || t <= 0.0 {
            return 0;
        }
        let k = (t / self.step).floor();
        if k >= last as f64 {
            last
        } else {
            k as usize
        }
    }

    /// Evaluates at `t`; times before the first breakpoint use segment 0.
    pub fn eval(&self, t: f64) -> C64 {
        let k = self.segment_index(t);
        horner(&self.segments[k], t - self.breakpoint(k))
    }

    /// Exact antiderivative `∫₀^t p(t') dt'` on the same lattice.
    pub fn integrate(&self) -> Self {
        let mut offset = C64::new(0.0, 0.0);
        let mut segments = Vec::with_capacity(self.segments.len());
        for (k, seg) in self.segments.iter().enumerate() {
            let mut integrated = Vec::with_capacity(seg.len() + 1);
            integrated.push(offset);
            integrated.extend(seg.iter().enumerate().map(|(j, &c)| c / (j + 1) as f64));
            if k + 1 < self.segments.len() {
                offset = horner(&integrated, self.step);
            }
            segments.push(integrated);
        }
        Self {
            step: self.step,
            segments,
        }
    }

    /// Delays the polynomial: `q(t) = p(t − delay)` for `t ≥ delay`, zero before.
    ///
    /// A multi-segment polynomial can only be delayed by a whole number of
    /// lattice steps; a single segment adopts `delay` as its lattice step.
    pub fn shift(&self, delay: f64) -> Result<Self> {
        if !(delay.is_finite() && delay >= 0.0) {
            return Err(Error::InvalidParams(format!(
                "delay must be finite and >= 0, got {delay}"
            )));
        }
        if delay == 0.0 {
            return Ok(self.clone());
        }
        let zero = vec![C64::new(0.0, 0.0)];
        if self.segments.len() == 1 {
            return Ok(Self {
                step: delay,
                segments: vec![zero, self.segments[0].clone()],
            });
        }
        let steps = delay / self.step;
        let whole = steps.round();
        if (steps - whole).abs() > LATTICE_SLACK * whole.max(1.0) {
            return Err(Error::OffLattice {
                delay,
                step: self.step,
            });
        }
        let whole = whole as usize;
        let mut segments = vec![zero; whole];
        segments.extend(self.segments.iter().cloned());
        Ok(Self {
            step: self.step,
            segments,
        })
    }

    /// Re-expresses the polynomial with `count` segments of width `step`,
    /// splitting the unbounded last segment as needed.
    fn on_lattice(&self, step: f64, count: usize) -> Self {
        let mut segments = self.segments.clone();
        while segments.len() < count {
            let last = segments.last().expect("non-empty");
            segments.push(taylor_shift(last, step));
        }
        Self { step, segments }
    }

    fn common_lattice(&self, other: &Self) -> Result<(f64, usize)> {
        let count = self.segments.len().max(other.segments.len());
        let step = match (self.segments.len(), other.segments.len()) {
            (1, 1) => self.step.max(other.step),
            (1, _) => other.step,
            (_, 1) => self.step,
            _ => {
                let scale = self.step.abs().max(other.step.abs());
                if (self.step - other.step).abs() > LATTICE_SLACK * scale {
                    return Err(Error::OffLattice {
                        delay: other.step,
                        step: self.step,
                    });
                }
                self.step
            }
        };
        Ok((step, count))
    }

    /// Pointwise sum; fails when both operands carry different lattices.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (step, count) = self.common_lattice(other)?;
        let lhs = self.on_lattice(step, count);
        let rhs = other.on_lattice(step, count);
        let segments = lhs
            .segments
            .iter()
            .zip(&rhs.segments)
            .map(|(a, b)| {
                let n = a.len().max(b.len());
                (0..n)
                    .map(|j| {
                        a.get(j).copied().unwrap_or_default()
                            + b.get(j).copied().unwrap_or_default()
                    })
                    .collect()
            })
            .collect();
        Ok(Self { step, segments })
    }

    pub fn scaled(&self, factor: C64) -> Self {
        Self {
            step: self.step,
            segments: self
                .segments
                .iter()
                .map(|s| s.iter().map(|&c| c * factor).collect())
                .collect(),
        }
    }
}

impl Add for &PiecewisePolynomial {
    type Output = PiecewisePolynomial;

    /// Panics when the operands live on incompatible lattices.
    fn add(self, rhs: Self) -> PiecewisePolynomial {
        self.try_add(rhs)
            .expect("piecewise polynomials on different lattices")
    }
}

impl Mul<C64> for &PiecewisePolynomial {
    type Output = PiecewisePolynomial;

    fn mul(self, rhs: C64) -> PiecewisePolynomial {
        self.scaled(rhs)
    }
}

fn horner(coefficients: &[C64], s: f64) -> C64 {
    coefficients
        .iter()
        .rev()
        .fold(C64::new(0.0, 0.0), |acc, &c| acc * s + c)
}

/// Coefficients of `p(s + h)` given those of `p(s)`.
fn taylor_shift(coefficients: &[C64], h: f64) -> Vec<C64> {
    let mut d = coefficients.to_vec();
    let n = d.len();
    for i in 0..n.saturating_sub(1) {
        for j in (i..n - 1).rev() {
            let next = d[j + 1];
            d[j] += next * h;
        }
    }
    d
}

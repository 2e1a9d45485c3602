//! Gauss-Legendre quadrature on piecewise-smooth integrands.

use std::f64::consts::PI;

/// Nodes and weights of an `n`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "quadrature order must be positive");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 1.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Integrates `f` over `[a, b]` with a single application of the rule.
    pub fn integrate(&self, f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        half * self
            .nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(mid + half * x))
            .sum::<f64>()
    }

    /// Integrates over `[a, b]`, restarting the rule at every breakpoint and
    /// splitting pieces longer than `max_width`.
    pub fn integrate_piecewise(
        &self,
        f: impl Fn(f64) -> f64,
        a: f64,
        b: f64,
        breakpoints: &[f64],
        max_width: f64,
    ) -> f64 {
        if b <= a {
            return 0.0;
        }
        let mut cuts: Vec<f64> = std::iter::once(a)
            .chain(breakpoints.iter().copied().filter(|&x| x > a && x < b))
            .chain(std::iter::once(b))
            .collect();
        cuts.sort_by(f64::total_cmp);
        cuts.dedup();
        cuts.windows(2)
            .map(|w| {
                let (lo, hi) = (w[0], w[1]);
                let pieces = ((hi - lo) / max_width).ceil().max(1.0) as usize;
                let h = (hi - lo) / pieces as f64;
                (0..pieces)
                    .map(|k| {
                        let x0 = lo + k as f64 * h;
                        let x1 = if k + 1 == pieces {
                            hi
                        } else {
                            lo + (k + 1) as f64 * h
                        };
                        self.integrate(&f, x0, x1)
                    })
                    .sum::<f64>()
            })
            .sum()
    }
}

/// `P_n(x)` and its derivative by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_interval_length() {
        for n in [1, 2, 5, 16, 33] {
            let rule = GaussLegendre::new(n);
            let s: f64 = rule.weights().iter().sum();
            assert!((s - 2.0).abs() < 1e-13, "n = {n}");
        }
    }

    #[test]
    fn exact_for_polynomials_up_to_degree_2n_minus_1() {
        let rule = GaussLegendre::new(6);
        for p in 0..12 {
            let got = rule.integrate(|x| x.powi(p), 0.0, 2.0);
            let exact = 2f64.powi(p + 1) / (p + 1) as f64;
            assert!((got - exact).abs() < 1e-12 * exact.max(1.0), "p = {p}");
        }
    }

    #[test]
    fn piecewise_handles_kinks() {
        let rule = GaussLegendre::new(8);
        let f = |x: f64| (x - 1.0).abs();
        let got = rule.integrate_piecewise(f, 0.0, 3.0, &[1.0], 0.5);
        assert!((got - 2.5).abs() < 1e-13);
        let smooth = rule.integrate_piecewise(|x| x.exp(), 0.0, 10.0, &[], 0.5);
        assert!((smooth - (10f64.exp() - 1.0)).abs() < 1e-9 * 10f64.exp());
    }
}

use rayon::prelude::*;

use super::{run_trajectory, TrajectoryConfig};
use crate::error::Result;

/// Trajectories per work unit.
const CHUNK: usize = 64;

/// Pointwise ensemble mean of `P_e` with its standard error.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleAverage {
    pub times: Vec<f64>,
    pub mean: Vec<f64>,
    pub standard_error: Vec<f64>,
    pub n_trajectories: usize,
}

#[derive(Debug, Clone)]
struct Moments {
    count: f64,
    mean: Vec<f64>,
    m2: Vec<f64>,
}

impl Moments {
    fn new(len: usize) -> Self {
        Self {
            count: 0.0,
            mean: vec![0.0; len],
            m2: vec![0.0; len],
        }
    }

    fn push(&mut self, sample: &[f64]) {
        self.count += 1.0;
        for ((m, s), &x) in self.mean.iter_mut().zip(&mut self.m2).zip(sample) {
            let delta = x - *m;
            *m += delta / self.count;
            *s += delta * (x - *m);
        }
    }

    fn merge(&mut self, other: &Self) {
        if other.count == 0.0 {
            return;
        }
        if self.count == 0.0 {
            *self = other.clone();
            return;
        }
        let total = self.count + other.count;
        for i in 0..self.mean.len() {
            let delta = other.mean[i] - self.mean[i];
            self.mean[i] += delta * other.count / total;
            self.m2[i] += other.m2[i] + delta * delta * self.count * other.count / total;
        }
        self.count = total;
    }
}

/// Averages `n_trajectories` runs with indices `0..n`. Chunks of 64
/// trajectories run in parallel and are merged in index order, so the result
/// is bit-identical for any thread count.
pub fn ensemble_average(config: &TrajectoryConfig) -> Result<EnsembleAverage> {
    config.validate()?;
    let len = config.sample_count();
    let n = config.n_trajectories;
    let chunks: Vec<Moments> = (0..n.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let mut moments = Moments::new(len);
            for index in c * CHUNK..((c + 1) * CHUNK).min(n) {
                moments.push(&run_trajectory(config, index as u64)?);
            }
            Ok(moments)
        })
        .collect::<Result<_>>()?;
    let mut total = Moments::new(len);
    for chunk in &chunks {
        total.merge(chunk);
    }
    let standard_error = if n < 2 {
        vec![0.0; len]
    } else {
        let nf = n as f64;
        total
            .m2
            .iter()
            .map(|&s| (s / (nf - 1.0) / nf).sqrt())
            .collect()
    };
    Ok(EnsembleAverage {
        times: config.times(),
        mean: total.mean,
        standard_error,
        n_trajectories: n,
    })
}

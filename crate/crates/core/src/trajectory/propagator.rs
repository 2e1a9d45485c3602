use nalgebra::{Matrix3, SymmetricEigen};
use num_complex::Complex64 as C64;

use super::state::{TrajectoryState, EXCITED};

/// `e^{−iHΔt}` restricted to span{excited, right box 0, left box 0}; the
/// identity on every other basis element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Propagator {
    matrix: [[C64; 3]; 3],
}

impl Propagator {
    /// `H = [[ω_e, √(V_R/Δt), √(V_L/Δt)], [√(V_R/Δt), 0, 0], [√(V_L/Δt), 0, 0]]`,
    /// exponentiated through its real symmetric eigendecomposition.
    pub fn new(omega_e: f64, v_right: f64, v_left: f64, dt: f64) -> Self {
        let gr = (v_right / dt).sqrt();
        let gl = (v_left / dt).sqrt();
        let h = Matrix3::new(omega_e, gr, gl, gr, 0.0, 0.0, gl, 0.0, 0.0);
        let eigen = SymmetricEigen::new(h);
        let phases: Vec<C64> = eigen
            .eigenvalues
            .iter()
            .map(|&lambda| C64::from_polar(1.0, -lambda * dt))
            .collect();
        let v = eigen.eigenvectors;
        let mut matrix = [[C64::new(0.0, 0.0); 3]; 3];
        for (i, row) in matrix.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = (0..3).map(|k| phases[k] * (v[(i, k)] * v[(j, k)])).sum();
            }
        }
        Self { matrix }
    }

    pub fn from_config(config: &super::TrajectoryConfig) -> Self {
        Self::new(config.omega_e, config.v_right, config.v_left, config.dt())
    }

    pub fn matrix(&self) -> &[[C64; 3]; 3] {
        &self.matrix
    }

    pub fn apply(&self, state: &mut TrajectoryState) {
        let idx = [EXCITED, state.right_index(0), state.left_index(0)];
        let amps = state.amplitudes_mut();
        let input = idx.map(|i| amps[i]);
        for (row, &i) in self.matrix.iter().zip(&idx) {
            amps[i] = row[0] * input[0] + row[1] * input[1] + row[2] * input[2];
        }
    }
}

use std::f64::consts::PI;
use std::path::PathBuf;

use emitter_mirror::trajectory::TrajectoryConfig;
use emitter_mirror::{SystemParams, C64};
use serde_json::{json, Value};

/// Fully resolved inputs of one CLI run.
#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub name: String,
    pub params: SystemParams,
    pub t_max: f64,
    pub grid: usize,
    pub out: Option<PathBuf>,
    pub trajectory: Option<TrajectoryConfig>,
}

/// Physical inputs as given on the command line.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalInputs {
    pub tau: f64,
    pub omega_e: Option<f64>,
    pub phase: Option<f64>,
    pub rm: f64,
    pub rm_phase: f64,
}

impl PhysicalInputs {
    /// `r_m = rm·e^{i·rm_phase}`; `ω_e` is taken directly or from the
    /// round-trip phase (default π).
    pub fn resolve(&self) -> Result<SystemParams, String> {
        let r_m = if self.rm_phase == 0.0 {
            C64::new(self.rm, 0.0)
        } else {
            C64::from_polar(self.rm, self.rm_phase)
        };
        let result = match (self.omega_e, self.phase) {
            (Some(_), Some(_)) => return Err("give either --omega-e or --phase, not both".into()),
            (Some(omega_e), None) => SystemParams::normalized(omega_e, self.tau, r_m),
            (None, phase) => {
                SystemParams::from_round_trip_phase(phase.unwrap_or(PI), self.tau, r_m)
            }
        };
        result.map_err(|e| e.to_string())
    }
}

pub fn params_json(p: &SystemParams) -> Value {
    json!({
        "omega_e": p.omega_e(),
        "gamma": p.gamma(),
        "tau": p.tau(),
        "round_trip_phase": p.round_trip_phase(),
        "r_m": {"re": p.r_m().re, "im": p.r_m().im},
        "t_m": p.t_m(),
    })
}

impl ScenarioConfig {
    pub fn metadata(&self) -> Value {
        let mut meta = json!({
            "scenario": self.name,
            "params": params_json(&self.params),
            "units": "normalized: time 1/Gamma, frequency Gamma, position c/Gamma",
            "grid": {"t_max": self.t_max, "points": self.grid},
            "out": self.out.as_ref().map(|p| p.display().to_string()),
        });
        if let Some(c) = &self.trajectory {
            meta["trajectory"] = json!({
                "boxes": c.boxes,
                "dt": c.dt(),
                "v_right": c.v_right,
                "v_left": c.v_left,
                "r_m": c.r_m,
                "t_m": c.t_m(),
                "omega_e": c.omega_e,
                "n_trajectories": c.n_trajectories,
                "t_max": c.t_max,
                "master_seed": c.master_seed,
                "rng": "ChaCha20, seed_from_u64(master_seed), stream = trajectory index",
            });
        }
        meta
    }
}

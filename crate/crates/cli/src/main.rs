//! Scenario runner for the emitter-mirror library. Every subcommand writes
//! one CSV table preceded by its resolved configuration as JSON comments.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod scenario;
mod table;

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use emitter_mirror::analytic::{
    dressed_params, excitation_probability_markovian, longtime_probability, solve_longtime,
    time_grid, ExcitationCurve,
};
use emitter_mirror::trajectory::{ensemble_average, TrajectoryConfig};
use emitter_mirror::wavepacket::{fwhm, probability_budget, spectrum, SpatialProfile};
use emitter_mirror::{Direction, SystemParams};
use serde_json::json;

use scenario::{params_json, PhysicalInputs, ScenarioConfig};
use table::Table;

#[derive(Parser, Debug)]
#[command(
    name = "emitter-mirror",
    version,
    about = "Emitter in front of a partially transparent mirror (units of Gamma, c = 1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact, long-time and Markovian excitation probability on a time grid.
    Excitation(TimeArgs),
    /// Markovian excitation probability and dressed parameters.
    Markovian(TimeArgs),
    /// Dressed shift and decay rate over a sweep of the round-trip phase in [0, 4 pi].
    Dressed(DressedArgs),
    /// Left-moving photon density behind the emitter at one or more times.
    Wavepacket(WavepacketArgs),
    /// Peak-normalized spectrum of the emitted photon.
    Spectrum(SpectrumArgs),
    /// Trajectory ensemble mean of the excitation probability.
    Trajectory(TrajectoryArgs),
    /// Exact solution against the trajectory ensemble, with a PASS/FAIL verdict.
    Compare(CompareArgs),
}

#[derive(Args, Debug, Clone)]
struct PhysicalArgs {
    /// Round-trip time tau = d/c.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    tau: f64,
    /// Transition frequency omega_e.
    #[arg(long, conflicts_with = "phase", allow_negative_numbers = true)]
    omega_e: Option<f64>,
    /// Round-trip phase omega_e tau (default pi).
    #[arg(long, allow_negative_numbers = true)]
    phase: Option<f64>,
    /// Mirror reflection amplitude (signed).
    #[arg(long, default_value_t = -1.0, allow_negative_numbers = true)]
    rm: f64,
    /// Extra phase of the reflection coefficient, r_m = rm·exp(i·rm_phase).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    rm_phase: f64,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

impl PhysicalArgs {
    fn resolve(&self) -> Result<SystemParams, String> {
        PhysicalInputs {
            tau: self.tau,
            omega_e: self.omega_e,
            phase: self.phase,
            rm: self.rm,
            rm_phase: self.rm_phase,
        }
        .resolve()
    }
}

#[derive(Args, Debug, Clone)]
struct TimeArgs {
    #[command(flatten)]
    physical: PhysicalArgs,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    tmax: f64,
    /// Number of time points.
    #[arg(long, default_value_t = 2001)]
    grid: usize,
}

#[derive(Args, Debug, Clone)]
struct DressedArgs {
    #[command(flatten)]
    physical: PhysicalArgs,
    /// Number of phase points.
    #[arg(long, default_value_t = 401)]
    grid: usize,
}

#[derive(Args, Debug, Clone)]
struct WavepacketArgs {
    #[command(flatten)]
    physical: PhysicalArgs,
    /// Comma-separated snapshot times (default: tmax).
    #[arg(long, value_delimiter = ',')]
    snapshots: Vec<f64>,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    tmax: f64,
    /// Number of positions per snapshot.
    #[arg(long, default_value_t = 4001)]
    grid: usize,
}

#[derive(Args, Debug, Clone)]
struct SpectrumArgs {
    #[command(flatten)]
    physical: PhysicalArgs,
    #[arg(long, default_value_t = 40.0, allow_negative_numbers = true)]
    t_final: f64,
    /// Number of samples, a power of two.
    #[arg(long, default_value_t = 16384)]
    samples: usize,
}

#[derive(Args, Debug, Clone)]
struct TrajectoryArgs {
    #[command(flatten)]
    physical: PhysicalArgs,
    #[arg(long, default_value_t = 10.0, allow_negative_numbers = true)]
    tmax: f64,
    /// Boxes per direction N.
    #[arg(long, default_value_t = 25)]
    boxes: usize,
    #[arg(long, default_value_t = 5000)]
    trajectories: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug, Clone)]
struct CompareArgs {
    #[command(flatten)]
    run: TrajectoryArgs,
    /// Largest accepted |P_trajectory - P_exact|.
    #[arg(long, default_value_t = 0.03)]
    tolerance: f64,
}

/// Why a run did not produce a passing table.
enum Failure {
    Config(String),
    Io(std::io::Error),
    Validation,
}

impl From<emitter_mirror::Error> for Failure {
    fn from(e: emitter_mirror::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

impl From<String> for Failure {
    fn from(e: String) -> Self {
        Failure::Config(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: cannot write output: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Validation) => ExitCode::from(2),
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let (table, out, verdict) = match command {
        Command::Excitation(args) => {
            let (table, out) = run_excitation(&args, false)?;
            (table, out, true)
        }
        Command::Markovian(args) => {
            let (table, out) = run_excitation(&args, true)?;
            (table, out, true)
        }
        Command::Dressed(args) => (run_dressed(&args)?, args.physical.out.clone(), true),
        Command::Wavepacket(args) => (run_wavepacket(&args)?, args.physical.out.clone(), true),
        Command::Spectrum(args) => (run_spectrum(&args)?, args.physical.out.clone(), true),
        Command::Trajectory(args) => (run_trajectory(&args)?.0, args.physical.out.clone(), true),
        Command::Compare(args) => {
            let (table, pass) = run_compare(&args)?;
            (table, args.run.physical.out.clone(), pass)
        }
    };
    table.write_to(out.as_deref()).map_err(Failure::Io)?;
    if verdict {
        Ok(())
    } else {
        Err(Failure::Validation)
    }
}

fn scenario(
    name: &str,
    physical: &PhysicalArgs,
    t_max: f64,
    grid: usize,
) -> Result<ScenarioConfig, Failure> {
    Ok(ScenarioConfig {
        name: name.into(),
        params: physical.resolve()?,
        t_max,
        grid,
        out: physical.out.clone(),
        trajectory: None,
    })
}

fn run_excitation(
    args: &TimeArgs,
    markovian_only: bool,
) -> Result<(Table, Option<PathBuf>), Failure> {
    let name = if markovian_only {
        "markovian"
    } else {
        "excitation"
    };
    let config = scenario(name, &args.physical, args.tmax, args.grid)?;
    let p = config.params;
    let times = time_grid(args.tmax, args.grid)?;
    let mut meta = config.metadata();
    let dressed = dressed_params(&p);
    meta["dressed"] = json!({"delta_eff": dressed.delta_eff, "gamma_eff": dressed.gamma_eff});

    if markovian_only {
        let mut table = Table::new(meta, vec!["t".into(), "P_markovian".into()]);
        table.rows = times
            .iter()
            .map(|&t| vec![t, excitation_probability_markovian(&p, t)])
            .collect();
        return Ok((table, config.out));
    }

    let curve = ExcitationCurve::exact(&p, &times)?;
    let longtime = solve_longtime(&p);
    let mut columns = vec!["t".to_string(), "P_exact".to_string()];
    match &longtime {
        Ok(c) => {
            let (xi, xi0) = (c.xi.unwrap(), c.xi0.unwrap());
            meta["longtime"] = json!({
                "xi": {"re": xi.re, "im": xi.im},
                "xi0": {"re": xi0.re, "im": xi0.im},
                "gamma_eff": p.gamma() - 2.0 * xi.re,
            });
            columns.push("P_longtime".into());
        }
        Err(e) => meta["longtime"] = json!({"failure": e.to_string()}),
    }
    columns.push("P_markovian".into());
    let mut table = Table::new(meta, columns);
    for (&t, &pe) in times.iter().zip(&curve.probabilities) {
        let mut row = vec![t, pe];
        if let Ok(c) = &longtime {
            row.push(longtime_probability(c, p.gamma(), t));
        }
        row.push(excitation_probability_markovian(&p, t));
        table.rows.push(row);
    }
    Ok((table, config.out))
}

fn run_dressed(args: &DressedArgs) -> Result<Table, Failure> {
    if args.grid < 2 {
        return Err(Failure::Config(format!(
            "--grid must be >= 2, got {}",
            args.grid
        )));
    }
    let base = args.physical.resolve()?;
    let tau = if base.tau() > 0.0 { base.tau() } else { 1.0 };
    let mut meta = json!({
        "scenario": "dressed",
        "params": params_json(&base),
        "sweep": {"phase_min": 0.0, "phase_max": 4.0 * PI, "points": args.grid, "tau_used": tau},
        "out": args.physical.out.as_ref().map(|p| p.display().to_string()),
    });
    meta["units"] = json!("normalized: frequency and rates in Gamma");
    let mut table = Table::new(
        meta,
        vec!["phase".into(), "delta_eff".into(), "gamma_eff".into()],
    );
    let last = (args.grid - 1) as f64;
    for j in 0..args.grid {
        let phase = 4.0 * PI * j as f64 / last;
        let p = SystemParams::from_round_trip_phase(phase, tau, base.r_m())?;
        let d = dressed_params(&p);
        table.rows.push(vec![phase, d.delta_eff, d.gamma_eff]);
    }
    Ok(table)
}

fn run_wavepacket(args: &WavepacketArgs) -> Result<Table, Failure> {
    let snapshots = if args.snapshots.is_empty() {
        vec![args.tmax]
    } else {
        args.snapshots.clone()
    };
    if snapshots.iter().any(|&t| !(t > 0.0) || !t.is_finite()) {
        return Err(Failure::Config(
            "snapshot times must be finite and > 0".into(),
        ));
    }
    if args.grid < 2 {
        return Err(Failure::Config(format!(
            "--grid must be >= 2, got {}",
            args.grid
        )));
    }
    let t_span = snapshots.iter().copied().fold(0.0, f64::max);
    let config = scenario("wavepacket", &args.physical, t_span, args.grid)?;
    let p = config.params;
    let step = t_span / args.grid as f64;
    let positions: Vec<f64> = (0..args.grid).map(|j| -t_span + j as f64 * step).collect();

    let mut meta = config.metadata();
    meta["grid"] =
        json!({"x_min": -t_span, "x_max_exclusive": 0.0, "points": args.grid, "spacing": step});
    let mut snapshot_meta = Vec::new();
    let mut columns = vec!["x".to_string()];
    let mut profiles = Vec::new();
    for &t in &snapshots {
        let profile = SpatialProfile::sample(&p, Direction::Left, t, &positions);
        let budget = probability_budget(&p, t)?;
        let peak = profile.density.iter().copied().fold(0.0, f64::max);
        snapshot_meta.push(json!({
            "t": t,
            "peak_density": peak,
            "excitation": budget.excitation,
            "left_probability": budget.left,
            "right_probability": budget.right,
            "total_probability": budget.total(),
        }));
        columns.push(format!("density_t={t}"));
        profiles.push(profile.peak_normalized());
    }
    meta["snapshots"] = json!(snapshot_meta);
    meta["scaling"] = json!("each density column is divided by its own peak_density");
    let mut table = Table::new(meta, columns);
    for (i, &x) in positions.iter().enumerate() {
        let mut row = vec![x];
        row.extend(profiles.iter().map(|d| d[i]));
        table.rows.push(row);
    }
    Ok(table)
}

fn run_spectrum(args: &SpectrumArgs) -> Result<Table, Failure> {
    let config = scenario("spectrum", &args.physical, args.t_final, args.samples)?;
    let p = config.params;
    let s = spectrum(&p, args.t_final, args.samples)?;
    let mut meta = config.metadata();
    meta["grid"] = json!({
        "t_final": s.t_final,
        "sample_count": s.sample_count,
        "spacing": s.spacing,
        "frequency_step": 2.0 * PI / (s.sample_count as f64 * s.spacing),
    });
    meta["omega_e"] = json!(p.omega_e());
    meta["fwhm"] = json!(fwhm(&s.frequencies, &s.spectral_density));
    meta["normalization"] = json!("peak = 1");
    let mut table = Table::new(meta, vec!["omega".into(), "spectral_density".into()]);
    table.rows = s
        .frequencies
        .iter()
        .zip(&s.spectral_density)
        .map(|(&w, &d)| vec![w, d])
        .collect();
    Ok(table)
}

fn trajectory_scenario(args: &TrajectoryArgs, name: &str) -> Result<ScenarioConfig, Failure> {
    let mut config = scenario(name, &args.physical, args.tmax, 0)?;
    let traj = TrajectoryConfig::from_params(
        &config.params,
        args.boxes,
        args.trajectories,
        args.tmax,
        args.seed,
    )?;
    config.grid = traj.sample_count();
    config.trajectory = Some(traj);
    Ok(config)
}

fn run_trajectory(args: &TrajectoryArgs) -> Result<(Table, ScenarioConfig), Failure> {
    let config = trajectory_scenario(args, "trajectory")?;
    let avg = ensemble_average(config.trajectory.as_ref().unwrap())?;
    let mut table = Table::new(
        config.metadata(),
        vec!["t".into(), "P_trajectory_mean".into(), "stderr".into()],
    );
    for i in 0..avg.times.len() {
        table
            .rows
            .push(vec![avg.times[i], avg.mean[i], avg.standard_error[i]]);
    }
    Ok((table, config))
}

fn run_compare(args: &CompareArgs) -> Result<(Table, bool), Failure> {
    if !(args.tolerance >= 0.0) {
        return Err(Failure::Config(format!(
            "--tolerance must be >= 0, got {}",
            args.tolerance
        )));
    }
    let config = trajectory_scenario(&args.run, "compare")?;
    let p = config.params;
    let avg = ensemble_average(config.trajectory.as_ref().unwrap())?;
    let curve = ExcitationCurve::exact(&p, &avg.times)?;
    let max_dev = curve
        .probabilities
        .iter()
        .zip(&avg.mean)
        .map(|(e, m)| (e - m).abs())
        .fold(0.0, f64::max);
    let pass = max_dev <= args.tolerance;
    let verdict = if pass { "PASS" } else { "FAIL" };
    let mut meta = config.metadata();
    meta["tolerance"] = json!(args.tolerance);
    let mut table = Table::new(
        meta,
        vec![
            "t".into(),
            "P_exact".into(),
            "P_trajectory_mean".into(),
            "stderr".into(),
        ],
    );
    for i in 0..avg.times.len() {
        table.rows.push(vec![
            avg.times[i],
            curve.probabilities[i],
            avg.mean[i],
            avg.standard_error[i],
        ]);
    }
    table.footer.push(
        json!({"summary": {"max_abs_deviation": max_dev, "tolerance": args.tolerance, "verdict": verdict}}).to_string(),
    );
    eprintln!(
        "compare: max |P_trajectory - P_exact| = {max_dev:.6} (tolerance {}) {verdict}",
        args.tolerance
    );
    Ok((table, pass))
}

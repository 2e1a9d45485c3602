use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("Dyson coefficients exist only for even orders, got n = {0}")]
    OddOrder(usize),

    #[error("time must be non-negative, got t = {0}")]
    NegativeTime(f64),

    #[error("no long-time exponential: {reason}")]
    NoLongtimeSolution { reason: String },

    #[error("long-time prefactor series diverges (terms grew for {consecutive} consecutive orders up to k = {order})")]
    Xi0Diverges { consecutive: usize, order: usize },

    #[error("position x = {x} lies outside the left-moving support [-t, 0) at t = {t}")]
    OutOfDomain { x: f64, t: f64 },

    #[error(
        "emitter has not decayed by t_final = {t_final}: P_e = {excitation:e} > {threshold:e}"
    )]
    EmitterNotDecayed {
        t_final: f64,
        excitation: f64,
        threshold: f64,
    },

    #[error("sample count must be a power of two >= 2, got {0}")]
    InvalidSampleCount(usize),

    #[error("delay {delay} is not a multiple of the breakpoint spacing {step}")]
    OffLattice { delay: f64, step: f64 },

    #[error("state norm underflowed to {0:e} before renormalization")]
    NormUnderflow(f64),

    #[error("invalid trajectory configuration: {0}")]
    InvalidTrajectoryConfig(String),
}

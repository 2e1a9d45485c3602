//! Single-excitation field components ("blips").

use num_complex::Complex64 as C64;

/// Propagation direction of a field excitation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Moving towards `−x`, away from the mirror (`s = −1`).
    Left,
    /// Moving towards `+x`, towards the mirror (`s = +1`).
    Right,
}

impl Direction {
    pub fn sign(self) -> i8 {
        match self {
            Direction::Left => -1,
            Direction::Right => 1,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Direction::Left => "left",
            Direction::Right => "right",
        }
    }
}

/// A photon localized at `position` travelling in `direction`, carrying a
/// complex amplitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlipComponent {
    pub direction: Direction,
    pub position: f64,
    pub amplitude: C64,
}

impl BlipComponent {
    pub fn new(direction: Direction, position: f64, amplitude: C64) -> Self {
        Self {
            direction,
            position,
            amplitude,
        }
    }

    /// Free propagation for a time `dt` at unit speed.
    pub fn propagated(self, dt: f64) -> Self {
        Self {
            position: self.position + f64::from(self.direction.sign()) * dt,
            ..self
        }
    }
}

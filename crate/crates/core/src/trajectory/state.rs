use num_complex::Complex64 as C64;

/// Emitter-field state in the single-excitation discrete-box basis.
///
/// Layout of the `2N + 2` amplitudes: index 0 is the vacuum (emitter in the
/// ground state, no photon), index 1 the excited emitter, indices `2..=N+1`
/// the right-moving boxes `0..N`, and indices `N+2..=2N+1` the left-moving
/// boxes `N−1` down to `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrajectoryState {
    boxes: usize,
    amplitudes: Vec<C64>,
}

pub const VACUUM: usize = 0;
pub const EXCITED: usize = 1;

impl TrajectoryState {
    /// Emitter excited, field empty.
    pub fn excited(boxes: usize) -> Self {
        let mut state = Self::zero(boxes);
        state.amplitudes[EXCITED] = C64::new(1.0, 0.0);
        state
    }

    /// The all-zero vector, for building test states.
    pub fn zero(boxes: usize) -> Self {
        assert!(boxes >= 2, "at least two boxes per direction");
        Self {
            boxes,
            amplitudes: vec![C64::new(0.0, 0.0); 2 * boxes + 2],
        }
    }

    pub fn boxes(&self) -> usize {
        self.boxes
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut [C64] {
        &mut self.amplitudes
    }

    pub fn right_index(&self, n: usize) -> usize {
        debug_assert!(n < self.boxes);
        2 + n
    }

    pub fn left_index(&self, n: usize) -> usize {
        debug_assert!(n < self.boxes);
        2 * self.boxes + 1 - n
    }

    pub fn right(&self, n: usize) -> C64 {
        self.amplitudes[self.right_index(n)]
    }

    pub fn left(&self, n: usize) -> C64 {
        self.amplitudes[self.left_index(n)]
    }

    pub fn set_right(&mut self, n: usize, value: C64) {
        let i = self.right_index(n);
        self.amplitudes[i] = value;
    }

    pub fn set_left(&mut self, n: usize, value: C64) {
        let i = self.left_index(n);
        self.amplitudes[i] = value;
    }

    pub fn excitation_probability(&self) -> f64 {
        self.amplitudes[EXCITED].norm_sqr()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Projects onto the vacuum, as after the photon has been detected.
    pub fn collapse_to_vacuum(&mut self) {
        self.amplitudes
            .iter_mut()
            .for_each(|z| *z = C64::new(0.0, 0.0));
        self.amplitudes[VACUUM] = C64::new(1.0, 0.0);
    }

    /// Whether all weight sits on the vacuum; no further dynamics can occur.
    pub fn is_vacuum(&self) -> bool {
        self.amplitudes[1..]
            .iter()
            .all(|z| *z == C64::new(0.0, 0.0))
    }
}

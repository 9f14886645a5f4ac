//! Dense three-qubit state vectors and single-qubit gates.
//!
//! Qubit 0 belongs to player 1, qubit 1 to player 2 and qubit 2 to player 3.
//! Basis index `4·b₁ + 2·b₂ + b₃`, so index 1 is `|001⟩` and index 4 is
//! `|100⟩` when the ket is read left to right as (player 1, player 2, player 3).

use core::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_4};
use core::ops::Mul;

use crate::consts::{NORM_TOL, UNITARY_TOL};
use crate::error::{Error, Result};
use crate::math;

pub type Complex = num_complex::Complex64;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

pub const NUM_QUBITS: usize = 3;
pub const DIM: usize = 1 << NUM_QUBITS;

/// A 2×2 complex matrix acting on one qubit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingleQubitGate {
    m: [[Complex; 2]; 2],
}

impl SingleQubitGate {
    /// Wraps a matrix without checking unitarity; [`apply_single_qubit_gate`]
    /// rejects non-unitary gates.
    pub const fn new(m: [[Complex; 2]; 2]) -> Self {
        Self { m }
    }

    pub const fn identity() -> Self {
        Self::new([[ONE, ZERO], [ZERO, ONE]])
    }

    pub fn hadamard() -> Self {
        tilted_hadamard(0.0)
    }

    pub fn matrix(&self) -> &[[Complex; 2]; 2] {
        &self.m
    }

    pub fn dagger(&self) -> Self {
        let m = &self.m;
        Self::new([[m[0][0].conj(), m[1][0].conj()], [m[0][1].conj(), m[1][1].conj()]])
    }

    /// Largest entrywise modulus of `m·m† - I`.
    pub fn unitarity_deviation(&self) -> f64 {
        let p = *self * self.dagger();
        let mut worst = 0.0f64;
        for (i, row) in p.m.iter().enumerate() {
            for (j, z) in row.iter().enumerate() {
                let target = if i == j { ONE } else { ZERO };
                let d = (*z - target).norm_sqr();
                worst = worst.max(math::sqrt(d));
            }
        }
        worst
    }

    pub fn is_unitary(&self) -> bool {
        self.unitarity_deviation() < UNITARY_TOL
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max(math::sqrt((self.m[i][j] - other.m[i][j]).norm_sqr()));
            }
        }
        worst
    }
}

impl Mul for SingleQubitGate {
    type Output = SingleQubitGate;

    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.m, &rhs.m);
        let mut out = [[ZERO; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        SingleQubitGate::new(out)
    }
}

/// `diag(1, e^{i·angle})`: rotation about the z axis up to global phase.
pub fn phase_gate(angle: f64) -> SingleQubitGate {
    let phase = Complex::new(math::cos(angle), math::sin(angle));
    SingleQubitGate::new([[ONE, ZERO], [ZERO, phase]])
}

/// The Hadamard gate with its rotation angle off by `epsilon`:
/// `[cos θ, sin θ; sin θ, -cos θ]` with `θ = π/4 + ε/2`.
pub fn tilted_hadamard(epsilon: f64) -> SingleQubitGate {
    let theta = FRAC_PI_4 + epsilon / 2.0;
    let (s, c) = (math::sin(theta), math::cos(theta));
    SingleQubitGate::new([
        [Complex::new(c, 0.0), Complex::new(s, 0.0)],
        [Complex::new(s, 0.0), Complex::new(-c, 0.0)],
    ])
}

/// Pure state of the shared three-qubit register.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureState3Q {
    amp: [Complex; DIM],
}

impl PureState3Q {
    /// Accepts any amplitude vector whose squared norm is 1 within [`NORM_TOL`].
    pub fn from_amplitudes(amp: [Complex; DIM]) -> Result<Self> {
        let s = Self { amp };
        let dev = (s.norm_sqr() - 1.0).abs();
        if dev.is_nan() || dev >= NORM_TOL {
            return Err(Error::NotNormalized(dev));
        }
        Ok(s)
    }

    /// Computational basis state `|index⟩`.
    ///
    /// # Panics
    ///
    /// If `index >= 8`.
    pub fn basis(index: usize) -> Self {
        assert!(index < DIM, "basis index {index} out of range");
        let mut amp = [ZERO; DIM];
        amp[index] = ONE;
        Self { amp }
    }

    pub fn ghz() -> Self {
        let mut amp = [ZERO; DIM];
        amp[0] = Complex::new(FRAC_1_SQRT_2, 0.0);
        amp[DIM - 1] = Complex::new(FRAC_1_SQRT_2, 0.0);
        Self { amp }
    }

    pub fn amplitudes(&self) -> &[Complex; DIM] {
        &self.amp
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amp.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Applies `gate` to `qubit` without validating either argument.
    pub(crate) fn apply_unchecked(&self, gate: &SingleQubitGate, qubit: usize) -> Self {
        let mask = 1usize << (NUM_QUBITS - 1 - qubit);
        let m = gate.matrix();
        let mut out = self.amp;
        for i in (0..DIM).filter(|i| i & mask == 0) {
            let j = i | mask;
            let (a0, a1) = (self.amp[i], self.amp[j]);
            out[i] = m[0][0] * a0 + m[0][1] * a1;
            out[j] = m[1][0] * a0 + m[1][1] * a1;
        }
        Self { amp: out }
    }

    /// Squared moduli of the amplitudes: the diagonal of `|ψ⟩⟨ψ|`.
    pub fn outcome_probabilities(&self) -> [f64; DIM] {
        self.amp.map(|a| a.norm_sqr())
    }
}

pub fn ghz_state() -> PureState3Q {
    PureState3Q::ghz()
}

/// `(I ⊗ … ⊗ gate ⊗ … ⊗ I)·state`, with `gate` at position `qubit`.
pub fn apply_single_qubit_gate(
    state: &PureState3Q,
    gate: &SingleQubitGate,
    qubit: usize,
) -> Result<PureState3Q> {
    if qubit >= NUM_QUBITS {
        return Err(Error::QubitOutOfRange(qubit));
    }
    let dev = gate.unitarity_deviation();
    if dev.is_nan() || dev >= UNITARY_TOL {
        return Err(Error::NonUnitaryGate(dev));
    }
    Ok(state.apply_unchecked(gate, qubit))
}

pub fn outcome_probabilities(state: &PureState3Q) -> [f64; DIM] {
    state.outcome_probabilities()
}

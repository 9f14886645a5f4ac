//! Exact simulation and analysis of the Mermin-GHZ pseudo-telepathy game
//! when one player performs the rotations of the quantum winning strategy
//! with an incorrect angle.
//!
//! The crate is `no_std` (it needs `alloc` for sweep and report output) and
//! is organised bottom-up:
//!
//! * [`qkernel`]: three-qubit pure states and single-qubit gates.
//! * [`game`]: promise, winning condition and the exhaustive classical value.
//! * [`strategy`]: the noisy quantum strategy, exact for systematic errors and
//!   averaged (Simpson quadrature or Monte Carlo) for random errors.
//! * [`closed_forms`]: the analytic success probabilities for noise on the
//!   phase gate, on the Hadamard gate, and on both.
//! * [`analysis`]: sweeps, advantage thresholds and the verification harness.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analysis;
pub mod closed_forms;
pub mod consts;
mod error;
pub mod game;
mod math;
pub mod numeric;
pub mod qkernel;
pub mod strategy;

pub use error::{Error, Result};
pub use game::{Answer, Question};
pub use qkernel::{Complex, PureState3Q, SingleQubitGate};

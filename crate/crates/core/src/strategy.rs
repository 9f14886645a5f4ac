//! The quantum winning strategy with one player's rotations off by an angle.
//!
//! Every player shares the GHZ state, applies `U = diag(1, e^{iπx/2})` for
//! input bit `x`, then a Hadamard, then measures. The noisy player instead
//! applies `diag(1, e^{i(π/2 + ε_u)x})` and [`tilted_hadamard`]`(ε_h)`.
//! Systematic errors are evaluated exactly on the state vector; random
//! errors are uniform on `[-δ, δ]` (independently per gate) and averaged
//! either by Simpson quadrature or by seeded Monte Carlo.

use alloc::vec::Vec;
use core::f64::consts::FRAC_PI_2;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::consts::{DEFAULT_SAMPLES, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::game::{promise_holds, promise_position, winning_outcome_indices, Question, PROMISE};
use crate::math;
use crate::numeric::{simpson_mean, symmetric_nodes};
use crate::qkernel::{phase_gate, tilted_hadamard, PureState3Q, SingleQubitGate, NUM_QUBITS};

pub use crate::numeric::QuadratureConfig;

/// Angle error on one gate of the noisy player.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum GateError {
    None,
    /// Constant offset ε, in radians.
    Systematic(f64),
    /// Offset drawn uniformly from `[-δ, δ]` each round; δ is a half-width.
    Random(f64),
}

impl GateError {
    fn validate(&self) -> Result<()> {
        match *self {
            GateError::None => Ok(()),
            GateError::Systematic(e) if !e.is_finite() => Err(Error::NonFiniteAngle(e)),
            GateError::Random(d) if !(d.is_finite() && d >= 0.0) => Err(Error::InvalidBound(d)),
            _ => Ok(()),
        }
    }

    pub fn is_random(&self) -> bool {
        matches!(self, GateError::Random(_))
    }

    /// A zero-width random error is the same as no error at all.
    fn degenerate(self) -> Self {
        match self {
            GateError::Random(0.0) => GateError::Systematic(0.0),
            other => other,
        }
    }

    /// Fixed angle, or `None` for a (non-degenerate) random component.
    fn fixed_angle(&self) -> Option<f64> {
        match *self {
            GateError::None => Some(0.0),
            GateError::Systematic(e) => Some(e),
            GateError::Random(_) => None,
        }
    }
}

/// Errors made by a single player on the phase gate (`u_error`) and on the
/// Hadamard gate (`h_error`). The other two players are noiseless.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NoiseModel {
    player: usize,
    u_error: GateError,
    h_error: GateError,
}

impl NoiseModel {
    pub fn new(player: usize, u_error: GateError, h_error: GateError) -> Result<Self> {
        if player >= NUM_QUBITS {
            return Err(Error::PlayerOutOfRange(player));
        }
        u_error.validate()?;
        h_error.validate()?;
        Ok(Self {
            player,
            u_error,
            h_error,
        })
    }

    pub fn noiseless(player: usize) -> Result<Self> {
        Self::new(player, GateError::None, GateError::None)
    }

    pub fn player(&self) -> usize {
        self.player
    }

    pub fn u_error(&self) -> GateError {
        self.u_error
    }

    pub fn h_error(&self) -> GateError {
        self.h_error
    }

    pub fn has_random(&self) -> bool {
        self.u_error.is_random() || self.h_error.is_random()
    }
}

/// Gate constructors used by the strategy. Swapping one out is how the
/// verification harness is shown to detect a wrong gate.
#[derive(Clone, Copy, Debug)]
pub struct GateKit {
    /// Maps a total rotation angle to the phase gate.
    pub phase: fn(f64) -> SingleQubitGate,
    /// Maps an angle error to the (possibly tilted) Hadamard gate.
    pub hadamard: fn(f64) -> SingleQubitGate,
}

impl GateKit {
    pub const STANDARD: GateKit = GateKit {
        phase: phase_gate,
        hadamard: tilted_hadamard,
    };
}

impl Default for GateKit {
    fn default() -> Self {
        Self::STANDARD
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct McConfig {
    samples: usize,
    seed: u64,
}

impl McConfig {
    pub fn new(samples: usize, seed: u64) -> Result<Self> {
        if samples == 0 {
            return Err(Error::NoSamples);
        }
        Ok(Self { samples, seed })
    }

    pub fn samples(&self) -> usize {
        self.samples
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

impl Default for McConfig {
    fn default() -> Self {
        Self {
            samples: DEFAULT_SAMPLES,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    pub estimate: f64,
    /// Sample standard deviation over `√samples`.
    pub std_error: f64,
    pub samples: usize,
}

/// ChaCha words consumed per sample: two `f64` draws of two words each,
/// whether or not both error axes are random.
const WORDS_PER_SAMPLE: u128 = 4;

/// Error angles `(ε_u, ε_h)` of sample `k` in the stream for `seed`.
///
/// The stream is positioned directly, so any subrange of samples can be
/// generated independently and agrees with a sequential run.
pub fn sample_angles(model: &NoiseModel, seed: u64, k: u64) -> (f64, f64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_word_pos(k as u128 * WORDS_PER_SAMPLE);
    draw(&mut rng, model)
}

fn draw(rng: &mut ChaCha8Rng, model: &NoiseModel) -> (f64, f64) {
    let (r_u, r_h): (f64, f64) = (rng.random(), rng.random());
    (pick(model.u_error, r_u), pick(model.h_error, r_h))
}

fn pick(e: GateError, unit: f64) -> f64 {
    match e {
        GateError::None => 0.0,
        GateError::Systematic(x) => x,
        GateError::Random(d) => d * (2.0 * unit - 1.0),
    }
}

/// The strategy, parameterized by the gates it uses.
#[derive(Clone, Copy, Debug)]
pub struct WinningStrategy {
    kit: GateKit,
    clean_phase: [SingleQubitGate; 2],
    clean_hadamard: SingleQubitGate,
}

impl Default for WinningStrategy {
    fn default() -> Self {
        Self::new(GateKit::STANDARD)
    }
}

impl WinningStrategy {
    pub fn new(kit: GateKit) -> Self {
        Self {
            kit,
            clean_phase: [(kit.phase)(0.0), (kit.phase)(FRAC_PI_2)],
            clean_hadamard: (kit.hadamard)(0.0),
        }
    }

    fn noisy_phase(&self, x: bool, eps_u: f64) -> SingleQubitGate {
        let bit = if x { 1.0 } else { 0.0 };
        (self.kit.phase)((FRAC_PI_2 + eps_u) * bit)
    }

    fn check_inputs(q: Question, player: usize) -> Result<()> {
        if !promise_holds(q) {
            return Err(Error::OffPromise(q));
        }
        if player >= NUM_QUBITS {
            return Err(Error::PlayerOutOfRange(player));
        }
        Ok(())
    }

    fn check_gate(g: &SingleQubitGate) -> Result<()> {
        let dev = g.unitarity_deviation();
        if dev.is_nan() || dev >= crate::consts::UNITARY_TOL {
            return Err(Error::NonUnitaryGate(dev));
        }
        Ok(())
    }

    /// Applies all six gates; inputs are assumed already validated.
    fn evolve(
        &self,
        q: Question,
        player: usize,
        noisy_u: &SingleQubitGate,
        noisy_h: &SingleQubitGate,
    ) -> PureState3Q {
        let bits = q.bits();
        let mut s = PureState3Q::ghz();
        for (qubit, &x) in bits.iter().enumerate() {
            let (u, h) = if qubit == player {
                (noisy_u, noisy_h)
            } else {
                (&self.clean_phase[x as usize], &self.clean_hadamard)
            };
            s = s.apply_unchecked(u, qubit);
            s = s.apply_unchecked(h, qubit);
        }
        s
    }

    fn winning_mass(q: Question, s: &PureState3Q) -> f64 {
        let p = s.outcome_probabilities();
        let win = winning_outcome_indices(q).expect("question checked against promise");
        win.iter().map(|&i| p[i]).sum()
    }

    /// Pre-measurement state for fixed angle errors on `player`.
    pub fn run_fixed(&self, q: Question, player: usize, eps_u: f64, eps_h: f64) -> Result<PureState3Q> {
        Self::check_inputs(q, player)?;
        for e in [eps_u, eps_h] {
            if !e.is_finite() {
                return Err(Error::NonFiniteAngle(e));
            }
        }
        let u = self.noisy_phase(q.bit(player), eps_u);
        let h = (self.kit.hadamard)(eps_h);
        for g in [&u, &h, &self.clean_phase[0], &self.clean_phase[1], &self.clean_hadamard] {
            Self::check_gate(g)?;
        }
        Ok(self.evolve(q, player, &u, &h))
    }

    fn fixed_unchecked(&self, q: Question, player: usize, eps_u: f64, eps_h: f64) -> f64 {
        let u = self.noisy_phase(q.bit(player), eps_u);
        let h = (self.kit.hadamard)(eps_h);
        Self::winning_mass(q, &self.evolve(q, player, &u, &h))
    }

    /// Probability of a winning measurement outcome when every error is
    /// systematic (or absent).
    pub fn success_fixed(&self, q: Question, model: &NoiseModel) -> Result<f64> {
        let (Some(eps_u), Some(eps_h)) = (model.u_error.fixed_angle(), model.h_error.fixed_angle())
        else {
            return Err(Error::RandomComponent);
        };
        let s = self.run_fixed(q, model.player, eps_u, eps_h)?;
        Ok(Self::winning_mass(q, &s))
    }

    /// Success averaged over the random error box by composite Simpson
    /// quadrature, one axis per random component.
    pub fn success_random_quadrature(
        &self,
        q: Question,
        model: &NoiseModel,
        cfg: QuadratureConfig,
    ) -> Result<f64> {
        if !model.has_random() {
            return Err(Error::NoRandomComponent);
        }
        let reduced = NoiseModel {
            u_error: model.u_error.degenerate(),
            h_error: model.h_error.degenerate(),
            ..*model
        };
        // Validates the question, player and gate kit at the box centre.
        let centre = self.run_fixed(
            q,
            model.player,
            reduced.u_error.fixed_angle().unwrap_or(0.0),
            reduced.h_error.fixed_angle().unwrap_or(0.0),
        )?;
        let player = model.player;
        let x = q.bit(player);
        match (reduced.u_error, reduced.h_error) {
            (GateError::Random(du), GateError::Random(dh)) => {
                let u_nodes = symmetric_nodes(du, cfg);
                let h_nodes = symmetric_nodes(dh, cfg);
                let us: Vec<_> = u_nodes.iter().map(|&(e, _)| self.noisy_phase(x, e)).collect();
                let hs: Vec<_> = h_nodes.iter().map(|&(e, _)| (self.kit.hadamard)(e)).collect();
                let mut total = 0.0;
                for (hg, &(_, wh)) in hs.iter().zip(&h_nodes) {
                    let mut row = 0.0;
                    for (ug, &(_, wu)) in us.iter().zip(&u_nodes) {
                        row += wu * Self::winning_mass(q, &self.evolve(q, player, ug, hg));
                    }
                    total += wh * row;
                }
                Ok(total)
            }
            (GateError::Random(du), h) => {
                let hg = (self.kit.hadamard)(h.fixed_angle().unwrap_or(0.0));
                Ok(simpson_mean(
                    |eu| Self::winning_mass(q, &self.evolve(q, player, &self.noisy_phase(x, eu), &hg)),
                    du,
                    cfg,
                ))
            }
            (u, GateError::Random(dh)) => {
                let ug = self.noisy_phase(x, u.fixed_angle().unwrap_or(0.0));
                Ok(simpson_mean(
                    |eh| Self::winning_mass(q, &self.evolve(q, player, &ug, &(self.kit.hadamard)(eh))),
                    dh,
                    cfg,
                ))
            }
            _ => Ok(Self::winning_mass(q, &centre)),
        }
    }

    /// Seeded Monte Carlo estimate of the random-error success probability.
    pub fn success_random_mc(&self, q: Question, model: &NoiseModel, cfg: McConfig) -> Result<McEstimate> {
        if !model.has_random() {
            return Err(Error::NoRandomComponent);
        }
        let reduced = NoiseModel {
            u_error: model.u_error.degenerate(),
            h_error: model.h_error.degenerate(),
            ..*model
        };
        if !reduced.has_random() {
            return Ok(McEstimate {
                estimate: self.success_fixed(q, &reduced)?,
                std_error: 0.0,
                samples: cfg.samples,
            });
        }
        self.run_fixed(q, model.player, 0.0, 0.0)?;

        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        // Welford, in sample order.
        let (mut mean, mut m2) = (0.0f64, 0.0f64);
        for k in 0..cfg.samples {
            let (eu, eh) = draw(&mut rng, &reduced);
            let v = self.fixed_unchecked(q, model.player, eu, eh);
            let n = (k + 1) as f64;
            let d = v - mean;
            mean += d / n;
            m2 += d * (v - mean);
        }
        let n = cfg.samples as f64;
        let std_error = if cfg.samples > 1 {
            math::sqrt(m2 / (n - 1.0) / n)
        } else {
            0.0
        };
        Ok(McEstimate {
            estimate: mean,
            std_error,
            samples: cfg.samples,
        })
    }

    /// One success value per promise question, in canonical order.
    pub fn per_question<F>(&self, mut f: F) -> Result<[f64; 4]>
    where
        F: FnMut(&Self, Question) -> Result<f64>,
    {
        let mut out = [0.0; 4];
        for (slot, q) in out.iter_mut().zip(PROMISE) {
            *slot = f(self, q)?;
        }
        Ok(out)
    }
}

pub fn run_fixed(q: Question, player: usize, eps_u: f64, eps_h: f64) -> Result<PureState3Q> {
    WinningStrategy::default().run_fixed(q, player, eps_u, eps_h)
}

pub fn success_fixed(q: Question, model: &NoiseModel) -> Result<f64> {
    WinningStrategy::default().success_fixed(q, model)
}

pub fn success_random_quadrature(q: Question, model: &NoiseModel, cfg: QuadratureConfig) -> Result<f64> {
    WinningStrategy::default().success_random_quadrature(q, model, cfg)
}

pub fn success_random_mc(q: Question, model: &NoiseModel, cfg: McConfig) -> Result<McEstimate> {
    WinningStrategy::default().success_random_mc(q, model, cfg)
}

/// Success for a question drawn uniformly from the promise.
///
/// `per_question` must name every promise question exactly once; values
/// are summed in canonical promise order.
pub fn average_over_promise(per_question: &[(Question, f64)]) -> Result<f64> {
    let mut slots: [Option<f64>; 4] = [None; 4];
    for &(q, v) in per_question {
        let i = promise_position(q).ok_or(Error::PromiseCoverage)?;
        if slots[i].replace(v).is_some() {
            return Err(Error::PromiseCoverage);
        }
    }
    let mut total = 0.0;
    for s in slots {
        total += s.ok_or(Error::PromiseCoverage)?;
    }
    Ok(total / 4.0)
}

/// Mean of values already in canonical promise order.
pub fn promise_mean(values: &[f64; 4]) -> f64 {
    values.iter().sum::<f64>() / 4.0
}

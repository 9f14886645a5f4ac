//! Tolerances and defaults shared by every module.

/// Entrywise tolerance on `m·m† = I` for a gate to count as unitary.
pub const UNITARY_TOL: f64 = 1e-12;

/// Tolerance on `Σ|amp|² = 1` for a state to count as normalized.
pub const NORM_TOL: f64 = 1e-12;

/// Below this bound the removable singularities of the random-error formulas
/// are evaluated through their Taylor expansion.
pub const SERIES_CUTOFF: f64 = 1e-6;

/// Composite Simpson subintervals per integration axis.
pub const DEFAULT_PANELS: usize = 256;

/// Minimum accepted number of Simpson subintervals.
pub const MIN_PANELS: usize = 8;

/// Simulation vs closed form, systematic errors.
pub const SYSTEMATIC_TOL: f64 = 1e-10;

/// Quadrature vs closed form, random errors.
pub const QUADRATURE_TOL: f64 = 1e-8;

/// Monte Carlo estimates must land within this many standard errors.
pub const MC_SIGMAS: f64 = 4.0;

/// Absolute slack added to the Monte Carlo band so a degenerate estimator
/// (zero sample variance) is not failed by rounding in the last ulp.
pub const MC_FLOOR: f64 = 1e-12;

/// Classical deterministic value of the game.
pub const CLASSICAL_BOUND: f64 = 0.75;

/// Bisection stops once `|P(level) - 3/4|` is at most this.
pub const THRESHOLD_RESIDUAL: f64 = 1e-10;

pub const MAX_BISECTION_ITERS: usize = 200;

pub const DEFAULT_SAMPLES: usize = 100_000;

pub const DEFAULT_SEED: u64 = 42;

use crate::game::Question;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("qubit index {0} is outside 0..=2")]
    QubitOutOfRange(usize),

    #[error("player index {0} is outside 0..=2")]
    PlayerOutOfRange(usize),

    #[error("gate is not unitary: max |m·m† - I| = {0:e}")]
    NonUnitaryGate(f64),

    #[error("state is not normalized: |norm² - 1| = {0:e}")]
    NotNormalized(f64),

    #[error("question {0} violates the even-parity promise")]
    OffPromise(Question),

    #[error("angle must be finite, got {0}")]
    NonFiniteAngle(f64),

    #[error("random error bound must be finite and non-negative, got {0}")]
    InvalidBound(f64),

    #[error("bound must be strictly positive, got {0}")]
    NonPositiveBound(f64),

    #[error("noise model has a random component; use a random-error estimator")]
    RandomComponent,

    #[error("noise model has no random component")]
    NoRandomComponent,

    #[error("per-question values must cover each promise question exactly once")]
    PromiseCoverage,

    #[error("quadrature needs an even number of subintervals >= {min}, got {got}")]
    InvalidPanels { got: usize, min: usize },

    #[error("Monte Carlo needs at least one sample")]
    NoSamples,

    #[error("invalid sweep range [{lo}, {hi}] with {steps} steps")]
    InvalidRange { lo: f64, hi: f64, steps: usize },

    #[error("random-error levels are half-widths and must be >= 0, got {0}")]
    NegativeRandomLevel(f64),

    #[error("scenario needs a single error axis")]
    NotSingleAxis,

    #[error("average success does not cross 3/4 in [{lo}, {hi}]")]
    NoCrossing { lo: f64, hi: f64 },

    #[error("bisection stopped with residual {0:e} above tolerance")]
    NotConverged(f64),

    #[error("verification grid density must be >= 5, got {0}")]
    GridTooCoarse(usize),
}

//! Sweeps over the error level, advantage thresholds against the classical
//! bound, and a harness that checks every closed form against the
//! simulator.

use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use crate::closed_forms::{self as cf, TheoremId};
use crate::consts::{
    CLASSICAL_BOUND, MAX_BISECTION_ITERS, MC_FLOOR, MC_SIGMAS, QUADRATURE_TOL, SYSTEMATIC_TOL,
    THRESHOLD_RESIDUAL,
};
use crate::error::{Error, Result};
use crate::game::{Question, PROMISE};
use crate::numeric::{bisect, QuadratureConfig};
use crate::strategy::{promise_mean, GateError, McConfig, NoiseModel, WinningStrategy};

/// Which of the noisy player's gates carries the error.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NoisyGate {
    U,
    H,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    Systematic,
    Random,
}

/// How the two error levels relate when both gates are noisy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coupling {
    /// One level drives both gates (`ε₁ = ε₂` or `δ₁ = δ₂`).
    Locked,
    /// Two free levels; only usable for grid export.
    Independent,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NoiseScenario {
    gate: NoisyGate,
    kind: ErrorKind,
    coupling: Option<Coupling>,
}

impl NoiseScenario {
    /// Noise on `gate`; both-gate scenarios default to [`Coupling::Locked`].
    pub const fn new(gate: NoisyGate, kind: ErrorKind) -> Self {
        let coupling = match gate {
            NoisyGate::Both => Some(Coupling::Locked),
            _ => None,
        };
        Self {
            gate,
            kind,
            coupling,
        }
    }

    /// Both gates noisy with an explicit coupling.
    pub const fn both(kind: ErrorKind, coupling: Coupling) -> Self {
        Self {
            gate: NoisyGate::Both,
            kind,
            coupling: Some(coupling),
        }
    }

    pub fn gate(&self) -> NoisyGate {
        self.gate
    }

    pub fn kind(&self) -> ErrorKind {
        self.kind
    }

    pub fn coupling(&self) -> Option<Coupling> {
        self.coupling
    }

    pub fn is_single_axis(&self) -> bool {
        self.coupling != Some(Coupling::Independent)
    }

    pub fn theorem(&self) -> TheoremId {
        use ErrorKind::*;
        use NoisyGate::*;
        match (self.gate, self.kind) {
            (U, Systematic) => TheoremId::T1SysU,
            (U, Random) => TheoremId::T2RndU,
            (H, Systematic) => TheoremId::T3SysH,
            (H, Random) => TheoremId::T4RndH,
            (Both, Systematic) => TheoremId::T5SysBoth,
            (Both, Random) => TheoremId::T6RndBoth,
        }
    }

    /// The six single-axis scenarios plotted against the error level: phase
    /// gate, Hadamard gate and both (locked), each systematic then random.
    pub fn figure_scenarios() -> [NoiseScenario; 6] {
        use ErrorKind::*;
        use NoisyGate::*;
        [
            Self::new(U, Systematic),
            Self::new(U, Random),
            Self::new(H, Systematic),
            Self::new(H, Random),
            Self::new(Both, Systematic),
            Self::new(Both, Random),
        ]
    }

    fn gate_error(&self, level: f64) -> GateError {
        match self.kind {
            ErrorKind::Systematic => GateError::Systematic(level),
            ErrorKind::Random => GateError::Random(level),
        }
    }

    /// Noise model with separate levels for the phase and Hadamard gates;
    /// the level of a gate this scenario leaves clean is ignored.
    pub fn model_split(&self, player: usize, level_u: f64, level_h: f64) -> Result<NoiseModel> {
        let (u, h) = match self.gate {
            NoisyGate::U => (self.gate_error(level_u), GateError::None),
            NoisyGate::H => (GateError::None, self.gate_error(level_h)),
            NoisyGate::Both => (self.gate_error(level_u), self.gate_error(level_h)),
        };
        NoiseModel::new(player, u, h)
    }

    /// Noise model at a single error level.
    pub fn model(&self, player: usize, level: f64) -> Result<NoiseModel> {
        if !self.is_single_axis() {
            return Err(Error::NotSingleAxis);
        }
        self.model_split(player, level, level)
    }

    /// Closed-form success for a question whose noisy-player bit is `x`.
    /// A zero random bound evaluates to the noiseless limit.
    pub fn analytic_split(&self, x: bool, level_u: f64, level_h: f64) -> Result<f64> {
        match self.theorem() {
            TheoremId::T1SysU => Ok(cf::thm1_per_question(x, level_u)),
            TheoremId::T3SysH => Ok(cf::thm3_value(level_h)),
            TheoremId::T5SysBoth => Ok(cf::thm5_per_question(x, level_u, level_h)),
            TheoremId::T2RndU if level_u == 0.0 => Ok(1.0),
            TheoremId::T2RndU => cf::thm2_per_question(x, level_u),
            TheoremId::T4RndH if level_h == 0.0 => Ok(1.0),
            TheoremId::T4RndH => cf::thm4_value(level_h),
            TheoremId::T6RndBoth => match (level_u == 0.0, level_h == 0.0) {
                (true, true) => Ok(1.0),
                (true, false) => cf::thm4_value(level_h),
                (false, true) => cf::thm2_per_question(x, level_u),
                (false, false) => cf::thm6_per_question(x, level_u, level_h),
            },
        }
    }

    /// Closed-form promise average at a single error level.
    pub fn analytic_average(&self, level: f64) -> Result<f64> {
        self.analytic_average_split(level, level)
    }

    pub fn analytic_average_split(&self, level_u: f64, level_h: f64) -> Result<f64> {
        // Half of the promise questions have a given noisy-player bit.
        Ok(0.5 * self.analytic_split(false, level_u, level_h)?
            + 0.5 * self.analytic_split(true, level_u, level_h)?)
    }

    /// Simulated success on every promise question, canonical order.
    pub fn simulate(
        &self,
        strategy: &WinningStrategy,
        model: &NoiseModel,
        quad: QuadratureConfig,
    ) -> Result<[f64; 4]> {
        strategy.per_question(|s, q| match self.kind {
            ErrorKind::Systematic => s.success_fixed(q, model),
            ErrorKind::Random => s.success_random_quadrature(q, model, quad),
        })
    }
}

impl fmt::Display for NoiseScenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gate = match self.gate {
            NoisyGate::U => "u",
            NoisyGate::H => "h",
            NoisyGate::Both => "both",
        };
        let kind = match self.kind {
            ErrorKind::Systematic => "systematic",
            ErrorKind::Random => "random",
        };
        write!(f, "{gate}/{kind}")?;
        match self.coupling {
            Some(Coupling::Locked) => f.write_str("/locked"),
            Some(Coupling::Independent) => f.write_str("/independent"),
            None => Ok(()),
        }
    }
}

/// Equally spaced levels from `lo` to `hi` inclusive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LevelRange {
    lo: f64,
    hi: f64,
    steps: usize,
}

impl LevelRange {
    pub fn new(lo: f64, hi: f64, steps: usize) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi && steps >= 2) {
            return Err(Error::InvalidRange { lo, hi, steps });
        }
        Ok(Self { lo, hi, steps })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn level(&self, i: usize) -> f64 {
        if i + 1 == self.steps {
            self.hi
        } else {
            self.lo + (self.hi - self.lo) * i as f64 / (self.steps - 1) as f64
        }
    }

    pub fn levels(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|i| self.level(i))
    }

    fn check_kind(&self, kind: ErrorKind) -> Result<()> {
        if kind == ErrorKind::Random && self.lo < 0.0 {
            return Err(Error::NegativeRandomLevel(self.lo));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub error_level: f64,
    /// Canonical promise order: 000, 011, 101, 110.
    pub per_question: [f64; 4],
    pub average: f64,
    pub analytic_average: f64,
    pub abs_gap: f64,
}

/// Simulated and closed-form success along one error axis.
pub fn sweep(
    scenario: &NoiseScenario,
    player: usize,
    range: LevelRange,
    quad: QuadratureConfig,
) -> Result<Vec<SweepRow>> {
    sweep_with(&WinningStrategy::default(), scenario, player, range, quad)
}

pub fn sweep_with(
    strategy: &WinningStrategy,
    scenario: &NoiseScenario,
    player: usize,
    range: LevelRange,
    quad: QuadratureConfig,
) -> Result<Vec<SweepRow>> {
    if !scenario.is_single_axis() {
        return Err(Error::NotSingleAxis);
    }
    range.check_kind(scenario.kind)?;
    range
        .levels()
        .map(|level| {
            let model = scenario.model(player, level)?;
            let per_question = scenario.simulate(strategy, &model, quad)?;
            let average = promise_mean(&per_question);
            let analytic_average = scenario.analytic_average(level)?;
            Ok(SweepRow {
                error_level: level,
                per_question,
                average,
                analytic_average,
                abs_gap: (average - analytic_average).abs(),
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridRow {
    pub level_u: f64,
    pub level_h: f64,
    pub per_question: [f64; 4],
    pub average: f64,
    pub analytic_average: f64,
    pub abs_gap: f64,
}

/// Both gates noisy with independent levels, on the product of two ranges.
/// Rows run over `range_h` fastest.
pub fn sweep_grid(
    kind: ErrorKind,
    player: usize,
    range_u: LevelRange,
    range_h: LevelRange,
    quad: QuadratureConfig,
) -> Result<Vec<GridRow>> {
    range_u.check_kind(kind)?;
    range_h.check_kind(kind)?;
    let scenario = NoiseScenario::both(kind, Coupling::Independent);
    let strategy = WinningStrategy::default();
    let mut rows = Vec::with_capacity(range_u.steps * range_h.steps);
    for lu in range_u.levels() {
        for lh in range_h.levels() {
            let model = scenario.model_split(player, lu, lh)?;
            let per_question = scenario.simulate(&strategy, &model, quad)?;
            let average = promise_mean(&per_question);
            let analytic_average = scenario.analytic_average_split(lu, lh)?;
            rows.push(GridRow {
                level_u: lu,
                level_h: lh,
                per_question,
                average,
                analytic_average,
                abs_gap: (average - analytic_average).abs(),
            });
        }
    }
    Ok(rows)
}

/// True if `rows` never increase by more than `tol` from one level to the next.
pub fn is_nonincreasing(rows: &[SweepRow], tol: f64) -> bool {
    rows.windows(2).all(|w| w[1].average <= w[0].average + tol)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThresholdResult {
    pub scenario: NoiseScenario,
    /// Positive error level at which the average success equals 3/4.
    pub threshold: f64,
    /// `|P(threshold) - 3/4|` on the closed form.
    pub residual: f64,
    pub iterations: usize,
    /// Simulated promise average at the threshold (player 1).
    pub simulated_average: f64,
}

/// Search bracket for the positive crossing of 3/4.
pub fn threshold_bracket(scenario: &NoiseScenario) -> (f64, f64) {
    match (scenario.gate, scenario.kind) {
        // (δ + sin δ)/(2δ) only drops to 3/4 near 1.9.
        (NoisyGate::H, ErrorKind::Random) => (0.0, 2.0 * PI),
        _ => (0.0, PI),
    }
}

/// Error level where the closed-form promise average falls to the
/// classical bound, by bisection; the interval of advantage is symmetric.
pub fn advantage_threshold(scenario: &NoiseScenario) -> Result<ThresholdResult> {
    if !scenario.is_single_axis() {
        return Err(Error::NotSingleAxis);
    }
    let (lo, hi) = threshold_bracket(scenario);
    let f = |level: f64| {
        scenario
            .analytic_average(level)
            .map(|p| p - CLASSICAL_BOUND)
            .unwrap_or(f64::NAN)
    };
    let root = bisect(f, lo, hi, THRESHOLD_RESIDUAL, MAX_BISECTION_ITERS)?;
    let model = scenario.model(0, root.x)?;
    let simulated =
        scenario.simulate(&WinningStrategy::default(), &model, QuadratureConfig::default())?;
    Ok(ThresholdResult {
        scenario: *scenario,
        threshold: root.x,
        residual: root.residual,
        iterations: root.iterations,
        simulated_average: promise_mean(&simulated),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    /// Exact state-vector simulation vs a systematic-error formula.
    Systematic,
    /// Simpson average of the simulation vs a random-error formula.
    Quadrature,
    /// Monte Carlo estimate vs a random-error formula.
    MonteCarlo,
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckKind::Systematic => "systematic",
            CheckKind::Quadrature => "quadrature",
            CheckKind::MonteCarlo => "monte_carlo",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    pub systematic: f64,
    pub quadrature: f64,
    pub mc_sigmas: f64,
    pub mc_floor: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            systematic: SYSTEMATIC_TOL,
            quadrature: QUADRATURE_TOL,
            mc_sigmas: MC_SIGMAS,
            mc_floor: MC_FLOOR,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerificationRow {
    pub theorem: TheoremId,
    pub check: CheckKind,
    /// `None` for the promise average.
    pub question: Option<Question>,
    /// Error levels on the phase and Hadamard gates (0 where clean).
    pub level_u: f64,
    pub level_h: f64,
    pub simulated: f64,
    pub analytic: f64,
    pub difference: f64,
    /// Allowed `|difference|` for this row.
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub rows: Vec<VerificationRow>,
    pub pass: bool,
    pub tolerances: Tolerances,
}

impl VerificationReport {
    pub fn failures(&self) -> impl Iterator<Item = &VerificationRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    /// `(passed, total)` for one theorem and check kind.
    pub fn tally(&self, theorem: TheoremId, check: CheckKind) -> (usize, usize) {
        let rows = self.rows.iter().filter(|r| r.theorem == theorem && r.check == check);
        rows.fold((0, 0), |(p, t), r| (p + r.pass as usize, t + 1))
    }
}

struct Harness<'a> {
    strategy: &'a WinningStrategy,
    quad: QuadratureConfig,
    tol: Tolerances,
    rows: Vec<VerificationRow>,
}

impl Harness<'_> {
    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        theorem: TheoremId,
        check: CheckKind,
        question: Option<Question>,
        (level_u, level_h): (f64, f64),
        simulated: f64,
        analytic: f64,
        tolerance: f64,
    ) {
        let difference = simulated - analytic;
        self.rows.push(VerificationRow {
            theorem,
            check,
            question,
            level_u,
            level_h,
            simulated,
            analytic,
            difference,
            tolerance,
            pass: difference.abs() <= tolerance,
        });
    }

    /// Per-question and average rows for one scenario at one point.
    fn compare(&mut self, scenario: &NoiseScenario, levels: (f64, f64)) -> Result<()> {
        let theorem = scenario.theorem();
        let (check, tol) = match scenario.kind {
            ErrorKind::Systematic => (CheckKind::Systematic, self.tol.systematic),
            ErrorKind::Random => (CheckKind::Quadrature, self.tol.quadrature),
        };
        let model = scenario.model_split(0, levels.0, levels.1)?;
        let simulated = scenario
            .simulate(self.strategy, &model, self.quad)
            .unwrap_or([f64::NAN; 4]);
        for (q, sim) in PROMISE.into_iter().zip(simulated) {
            let analytic = scenario.analytic_split(q.x1, levels.0, levels.1)?;
            self.push(theorem, check, Some(q), levels, sim, analytic, tol);
        }
        let analytic = scenario.analytic_average_split(levels.0, levels.1)?;
        self.push(theorem, check, None, levels, promise_mean(&simulated), analytic, tol);
        Ok(())
    }

    fn compare_mc(&mut self, scenario: &NoiseScenario, levels: (f64, f64), mc: McConfig, salt: u64) -> Result<()> {
        let model = scenario.model_split(0, levels.0, levels.1)?;
        for (i, q) in PROMISE.into_iter().enumerate() {
            let cfg = McConfig::new(mc.samples(), mc.seed().wrapping_add(salt * 4 + i as u64))?;
            let (sim, tol) = match self.strategy.success_random_mc(q, &model, cfg) {
                Ok(e) => (e.estimate, self.tol.mc_sigmas * e.std_error + self.tol.mc_floor),
                Err(_) => (f64::NAN, 0.0),
            };
            let analytic = scenario.analytic_split(q.x1, levels.0, levels.1)?;
            self.push(scenario.theorem(), CheckKind::MonteCarlo, Some(q), levels, sim, analytic, tol);
        }
        Ok(())
    }
}

fn grid(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> + Clone {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}

/// Bounds `kπ/n` for `k = 1..=n`.
fn bound_grid(n: usize) -> impl Iterator<Item = f64> + Clone {
    (1..=n).map(move |k| PI * k as f64 / n as f64)
}

/// Bound values used for the Monte Carlo rows of each random-error formula.
pub const MC_BOUNDS: [(f64, f64); 3] = [(0.5, 1.5), (1.5, 0.5), (PI, PI)];

/// Checks all six closed forms against the simulator.
///
/// Systematic formulas are compared on `grid_density` levels over `[-π, π]`
/// (a `grid_density²` grid for both gates); random ones on bounds
/// `kπ/grid_density` by quadrature, with a coarser `⌈grid_density/5⌉²`
/// grid for the two-dimensional case, and by Monte Carlo at
/// [`MC_BOUNDS`].
pub fn verify_all(grid_density: usize, quad: QuadratureConfig, mc: McConfig) -> Result<VerificationReport> {
    verify_all_with(&WinningStrategy::default(), grid_density, quad, mc)
}

pub fn verify_all_with(
    strategy: &WinningStrategy,
    grid_density: usize,
    quad: QuadratureConfig,
    mc: McConfig,
) -> Result<VerificationReport> {
    if grid_density < 5 {
        return Err(Error::GridTooCoarse(grid_density));
    }
    let mut h = Harness {
        strategy,
        quad,
        tol: Tolerances::default(),
        rows: Vec::new(),
    };
    use ErrorKind::*;
    use NoisyGate::*;
    let n = grid_density;

    for e in grid(-PI, PI, n) {
        h.compare(&NoiseScenario::new(U, Systematic), (e, 0.0))?;
        h.compare(&NoiseScenario::new(H, Systematic), (0.0, e))?;
    }
    let both_sys = NoiseScenario::both(Systematic, Coupling::Independent);
    for e1 in grid(-PI, PI, n) {
        for e2 in grid(-PI, PI, n) {
            h.compare(&both_sys, (e1, e2))?;
        }
    }

    for d in bound_grid(n) {
        h.compare(&NoiseScenario::new(U, Random), (d, 0.0))?;
        h.compare(&NoiseScenario::new(H, Random), (0.0, d))?;
    }
    let both_rnd = NoiseScenario::both(Random, Coupling::Independent);
    let m = n.div_ceil(5);
    for d1 in bound_grid(m) {
        for d2 in bound_grid(m) {
            h.compare(&both_rnd, (d1, d2))?;
        }
    }

    let mut salt = 0;
    for &(a, b) in &MC_BOUNDS {
        h.compare_mc(&NoiseScenario::new(U, Random), (a, 0.0), mc, salt)?;
        h.compare_mc(&NoiseScenario::new(H, Random), (0.0, b), mc, salt + 1)?;
        h.compare_mc(&both_rnd, (a, b), mc, salt + 2)?;
        salt += 3;
    }

    let pass = h.rows.iter().all(|r| r.pass);
    Ok(VerificationReport {
        rows: h.rows,
        pass,
        tolerances: h.tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::math;
    use crate::qkernel::{phase_gate, SingleQubitGate};
    use crate::strategy::GateKit;
    use crate::Complex;
    use core::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4};

    use ErrorKind::*;
    use NoisyGate::*;

    #[test]
    fn scenario_shape() {
        assert_eq!(NoiseScenario::new(U, Random).coupling(), None);
        assert_eq!(NoiseScenario::new(Both, Random).coupling(), Some(Coupling::Locked));
        let ind = NoiseScenario::both(Systematic, Coupling::Independent);
        assert!(!ind.is_single_axis());
        assert_eq!(ind.model(0, 0.1), Err(Error::NotSingleAxis));
        assert_eq!(std::format!("{ind}"), "both/systematic/independent");
        assert_eq!(NoiseScenario::new(H, Random).theorem(), TheoremId::T4RndH);
    }

    #[test]
    fn systematic_u_sweep_values() {
        let rows = sweep(
            &NoiseScenario::new(U, Systematic),
            0,
            LevelRange::new(0.0, PI, 5).unwrap(),
            QuadratureConfig::default(),
        )
        .unwrap();
        let expect = [
            1.0,
            0.5 + (1.0 + math::cos(FRAC_PI_4)) / 4.0,
            0.75,
            0.5 + (1.0 + math::cos(3.0 * FRAC_PI_4)) / 4.0,
            0.5,
        ];
        for (r, e) in rows.iter().zip(expect) {
            assert!((r.average - e).abs() < 1e-12, "{r:?}");
            assert!(r.abs_gap <= 1e-10);
        }
        assert_eq!(rows[4].error_level, PI);
    }

    #[test]
    fn systematic_h_endpoints() {
        let rows = sweep(
            &NoiseScenario::new(H, Systematic),
            1,
            LevelRange::new(-FRAC_PI_3, FRAC_PI_3, 7).unwrap(),
            QuadratureConfig::default(),
        )
        .unwrap();
        assert!((rows[0].average - 0.75).abs() < 1e-10);
        assert!((rows[6].average - 0.75).abs() < 1e-10);
        for (a, b) in rows.iter().zip(rows.iter().rev()) {
            assert!((a.average - b.average).abs() < 1e-12);
        }
    }

    #[test]
    fn random_sweep_rows_close() {
        for gate in [U, H, Both] {
            let rows = sweep(
                &NoiseScenario::new(gate, Random),
                2,
                LevelRange::new(0.0, PI, 4).unwrap(),
                QuadratureConfig::default(),
            )
            .unwrap();
            assert!((rows[0].average - 1.0).abs() < 1e-12);
            assert!(rows.iter().all(|r| r.abs_gap <= 1e-8), "{gate:?}: {rows:?}");
            assert!(is_nonincreasing(&rows, 1e-12));
        }
    }

    #[test]
    fn sweep_rejects_bad_input() {
        assert!(LevelRange::new(1.0, 1.0, 3).is_err());
        assert!(LevelRange::new(0.0, 1.0, 1).is_err());
        assert!(LevelRange::new(0.0, f64::INFINITY, 3).is_err());
        let r = LevelRange::new(-0.5, 1.0, 3).unwrap();
        assert_eq!(
            sweep(&NoiseScenario::new(U, Random), 0, r, QuadratureConfig::default()),
            Err(Error::NegativeRandomLevel(-0.5))
        );
        assert_eq!(
            sweep(
                &NoiseScenario::both(Random, Coupling::Independent),
                0,
                LevelRange::new(0.0, 1.0, 3).unwrap(),
                QuadratureConfig::default()
            ),
            Err(Error::NotSingleAxis)
        );
    }

    #[test]
    fn grid_sweep() {
        let r = LevelRange::new(-1.0, 1.0, 3).unwrap();
        let rows = sweep_grid(Systematic, 0, r, r, QuadratureConfig::default()).unwrap();
        assert_eq!(rows.len(), 9);
        assert_eq!((rows[1].level_u, rows[1].level_h), (-1.0, 0.0));
        assert!(rows.iter().all(|r| r.abs_gap < 1e-10));
        assert!(sweep_grid(Random, 0, r, r, QuadratureConfig::default()).is_err());
    }

    #[test]
    fn thresholds() {
        let t = advantage_threshold(&NoiseScenario::new(U, Systematic)).unwrap();
        assert!((t.threshold - FRAC_PI_2).abs() < 1e-9);
        assert!(t.residual <= 1e-10);
        assert!((t.simulated_average - 0.75).abs() < 1e-8);

        let t = advantage_threshold(&NoiseScenario::new(U, Random)).unwrap();
        assert!((t.threshold - PI).abs() < 1e-9);

        let t = advantage_threshold(&NoiseScenario::new(H, Systematic)).unwrap();
        assert!((t.threshold - FRAC_PI_3).abs() < 1e-9);

        let t = advantage_threshold(&NoiseScenario::new(H, Random)).unwrap();
        assert!((t.threshold - 1.896).abs() < 1e-3);
        assert!((math::sin(t.threshold) - t.threshold / 2.0).abs() < 1e-9);
        assert!((t.simulated_average - 0.75).abs() < 1e-8);

        // cos ε (1 + cos ε) = 1
        let t = advantage_threshold(&NoiseScenario::new(Both, Systematic)).unwrap();
        let golden = (libm::sqrt(5.0) - 1.0) / 2.0;
        assert!((t.threshold - libm::acos(golden)).abs() < 1e-9);

        // sinc δ (1 + sinc δ) = 1
        let t = advantage_threshold(&NoiseScenario::new(Both, Random)).unwrap();
        let s = math::sin(t.threshold) / t.threshold;
        assert!((s * (1.0 + s) - 1.0).abs() < 1e-9);

        assert_eq!(
            advantage_threshold(&NoiseScenario::both(Random, Coupling::Independent)),
            Err(Error::NotSingleAxis)
        );
    }

    #[test]
    fn verification_passes() {
        let report = verify_all(5, QuadratureConfig::default(), McConfig::new(20_000, 3).unwrap()).unwrap();
        let bad: std::vec::Vec<_> = report.failures().collect();
        assert!(report.pass, "{bad:?}");
        assert_eq!(report.tally(TheoremId::T5SysBoth, CheckKind::Systematic), (125, 125));
        assert_eq!(report.tally(TheoremId::T6RndBoth, CheckKind::MonteCarlo), (12, 12));
        assert!(verify_all(4, QuadratureConfig::default(), McConfig::default()).is_err());
    }

    #[test]
    fn verification_detects_wrong_hadamard() {
        fn rotated(eps: f64) -> SingleQubitGate {
            let t = FRAC_PI_4 + eps / 2.0;
            let (s, c) = (math::sin(t), math::cos(t));
            SingleQubitGate::new([
                [Complex::new(c, 0.0), Complex::new(-s, 0.0)],
                [Complex::new(s, 0.0), Complex::new(c, 0.0)],
            ])
        }
        let mutant = WinningStrategy::new(GateKit {
            phase: phase_gate,
            hadamard: rotated,
        });
        let report = verify_all_with(
            &mutant,
            5,
            QuadratureConfig::new(16).unwrap(),
            McConfig::new(1_000, 3).unwrap(),
        )
        .unwrap();
        assert!(!report.pass);
    }

    #[test]
    fn verification_records_gate_faults_as_failures() {
        fn broken(_: f64) -> SingleQubitGate {
            SingleQubitGate::new([[Complex::new(1.0, 0.0); 2]; 2])
        }
        let mutant = WinningStrategy::new(GateKit {
            phase: phase_gate,
            hadamard: broken,
        });
        let report = verify_all_with(
            &mutant,
            5,
            QuadratureConfig::new(8).unwrap(),
            McConfig::new(10, 3).unwrap(),
        )
        .unwrap();
        assert!(!report.pass);
        assert!(report.rows.iter().all(|r| !r.pass));
    }
}

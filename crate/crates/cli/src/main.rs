//! `ghz-noise`: sweeps, advantage thresholds, verification and Monte Carlo
//! runs for the Mermin-GHZ game with a noisy player.
//!
//! Exit codes: 0 on success, 1 on verification failure or a runtime error,
//! 2 on a usage error.

mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ghz_noise::analysis::{
    self, Coupling, ErrorKind, LevelRange, NoiseScenario, NoisyGate, VerificationReport,
};
use ghz_noise::closed_forms::TheoremId;
use ghz_noise::consts::{QUADRATURE_TOL, SYSTEMATIC_TOL};
use ghz_noise::game::{classical_optimum, PROMISE};
use ghz_noise::numeric::QuadratureConfig;
use ghz_noise::strategy::{McConfig, WinningStrategy};

use output::{GridRecord, McRecord, SweepRecord, ThresholdRecord, VerifyRecord};

#[derive(Parser)]
#[command(name = "ghz-noise", version, about = "Mermin-GHZ game under rotation-angle noise")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare simulation, quadrature and Monte Carlo against the closed forms.
    Verify(VerifyArgs),
    /// Success probabilities over a range of error levels.
    Sweep(SweepArgs),
    /// Error level where the average success falls to 3/4.
    Threshold(ThresholdArgs),
    /// Best deterministic classical strategy.
    Classical,
    /// Seeded Monte Carlo estimates for random errors.
    Mc(McArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Gate {
    U,
    H,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Systematic,
    Random,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CouplingArg {
    Locked,
    Independent,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Points per axis of the systematic grids; random bounds are kπ/grid.
    #[arg(long, default_value_t = 25)]
    grid: usize,
    #[arg(long, default_value_t = 256)]
    panels: usize,
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Full per-row report destination; only the summary is printed otherwise.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    gate: Gate,
    #[arg(long = "error", value_enum)]
    kind: Kind,
    /// Noisy player, 1 to 3.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    player: u8,
    #[arg(long, allow_negative_numbers = true)]
    min: f64,
    #[arg(long, allow_negative_numbers = true)]
    max: f64,
    #[arg(long)]
    steps: usize,
    /// Both-gate coupling; `independent` emits a grid over a second range.
    #[arg(long, value_enum, default_value_t = CouplingArg::Locked)]
    coupling: CouplingArg,
    /// Hadamard-gate range for an independent grid.
    #[arg(long, allow_negative_numbers = true)]
    min2: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    max2: Option<f64>,
    #[arg(long)]
    steps2: Option<usize>,
    #[arg(long, default_value_t = 256)]
    panels: usize,
    /// Read range bounds in degrees.
    #[arg(long)]
    degrees: bool,
    /// Fail with exit 1 if any row strays from its closed form beyond tolerance.
    #[arg(long)]
    strict: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ThresholdArgs {
    /// Restrict to one gate; all six single-axis scenarios otherwise.
    #[arg(long, value_enum, requires = "kind")]
    gate: Option<Gate>,
    #[arg(long = "error", value_enum, requires = "gate")]
    kind: Option<Kind>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct McArgs {
    #[arg(long, value_enum)]
    gate: Gate,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
    player: u8,
    /// Error bounds; both gates share the bound when `--gate both`.
    #[arg(long)]
    min: f64,
    #[arg(long)]
    max: f64,
    #[arg(long)]
    steps: usize,
    #[arg(long, default_value_t = 100_000)]
    samples: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long)]
    degrees: bool,
    #[command(flatten)]
    output: OutputArgs,
}

enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

impl From<ghz_noise::Error> for Failure {
    fn from(e: ghz_noise::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Runtime(format!("write failed: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
        Command::Threshold(a) => threshold(a),
        Command::Classical => classical(),
        Command::Mc(a) => mc(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn usage<T>(r: ghz_noise::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match out {
        Some(path) => {
            let f = File::create(path)
                .map_err(|e| Failure::Runtime(format!("cannot create {}: {e}", path.display())))?;
            Box::new(BufWriter::new(f))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn scenario(gate: Gate, kind: Kind, coupling: CouplingArg) -> NoiseScenario {
    let kind = match kind {
        Kind::Systematic => ErrorKind::Systematic,
        Kind::Random => ErrorKind::Random,
    };
    match gate {
        Gate::U => NoiseScenario::new(NoisyGate::U, kind),
        Gate::H => NoiseScenario::new(NoisyGate::H, kind),
        Gate::Both => NoiseScenario::both(
            kind,
            match coupling {
                CouplingArg::Locked => Coupling::Locked,
                CouplingArg::Independent => Coupling::Independent,
            },
        ),
    }
}

fn range(min: f64, max: f64, steps: usize, degrees: bool) -> Result<LevelRange, Failure> {
    let (lo, hi) = if degrees {
        (min.to_radians(), max.to_radians())
    } else {
        (min, max)
    };
    usage(LevelRange::new(lo, hi, steps))
}

fn verify(a: VerifyArgs) -> CmdResult {
    let quad = usage(QuadratureConfig::new(a.panels))?;
    let mc = usage(McConfig::new(a.samples, a.seed))?;
    if a.grid < 5 {
        return Err(Failure::Usage(format!("--grid must be at least 5, got {}", a.grid)));
    }
    let report = analysis::verify_all(a.grid, quad, mc)?;
    summarize(&mut io::stdout().lock(), &report)?;
    if a.out.is_some() {
        let rows: Vec<VerifyRecord> = report.rows.iter().map(Into::into).collect();
        let mut w = sink(&a.out)?;
        match a.format {
            Format::Csv => output::verify_csv(&mut w, &rows)?,
            Format::Json => output::json(&mut w, &rows)?,
        }
        w.flush()?;
    }
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn summarize(w: &mut impl Write, report: &VerificationReport) -> io::Result<()> {
    use analysis::CheckKind::*;
    for t in TheoremId::ALL {
        let checks: &[_] = if t.is_random() {
            &[Quadrature, MonteCarlo]
        } else {
            &[Systematic]
        };
        for &c in checks {
            let (pass, total) = report.tally(t, c);
            writeln!(w, "{t} {c}: {pass}/{total}")?;
        }
    }
    for r in report.failures().take(10) {
        writeln!(
            w,
            "FAIL {} {} q={} levels=({}, {}) simulated={} analytic={} tol={:e}",
            r.theorem,
            r.check,
            r.question.map(|q| q.to_string()).unwrap_or_else(|| "avg".into()),
            r.level_u,
            r.level_h,
            r.simulated,
            r.analytic,
            r.tolerance
        )?;
    }
    let verdict = if report.pass { "PASS" } else { "FAIL" };
    writeln!(w, "overall: {verdict} ({} rows)", report.rows.len())
}

fn sweep(a: SweepArgs) -> CmdResult {
    let quad = usage(QuadratureConfig::new(a.panels))?;
    let r1 = range(a.min, a.max, a.steps, a.degrees)?;
    let player = a.player as usize - 1;
    let sc = scenario(a.gate, a.kind, a.coupling);
    let tol = match a.kind {
        Kind::Systematic => SYSTEMATIC_TOL,
        Kind::Random => QUADRATURE_TOL,
    };
    let second = a.min2.is_some() || a.max2.is_some() || a.steps2.is_some();
    let independent = a.coupling == CouplingArg::Independent;
    if independent && !matches!(a.gate, Gate::Both) {
        return Err(Failure::Usage("--coupling independent needs --gate both".into()));
    }
    if second != independent {
        return Err(Failure::Usage(
            "--min2/--max2/--steps2 go together with --coupling independent".into(),
        ));
    }

    let mut w = sink(&a.output.out)?;
    let worst = if independent {
        let (Some(min2), Some(max2), Some(steps2)) = (a.min2, a.max2, a.steps2) else {
            return Err(Failure::Usage("--min2, --max2 and --steps2 are all required".into()));
        };
        let r2 = range(min2, max2, steps2, a.degrees)?;
        let kind = sc.kind();
        let rows = match analysis::sweep_grid(kind, player, r1, r2, quad) {
            Err(e @ ghz_noise::Error::NegativeRandomLevel(_)) => return Err(Failure::Usage(e.to_string())),
            r => r?,
        };
        let recs: Vec<GridRecord> = rows.iter().map(Into::into).collect();
        match a.output.format {
            Format::Csv => {
                if a.strict {
                    writeln!(w, "# abs_gap_tolerance={tol:e}")?;
                }
                output::grid_csv(&mut w, &recs)?
            }
            Format::Json => output::json(&mut w, &recs)?,
        }
        rows.iter().map(|r| r.abs_gap).fold(0.0, f64::max)
    } else {
        let rows = match analysis::sweep(&sc, player, r1, quad) {
            Err(e @ ghz_noise::Error::NegativeRandomLevel(_)) => return Err(Failure::Usage(e.to_string())),
            r => r?,
        };
        let recs: Vec<SweepRecord> = rows.iter().map(Into::into).collect();
        match a.output.format {
            Format::Csv => {
                if a.strict {
                    writeln!(w, "# abs_gap_tolerance={tol:e}")?;
                }
                output::sweep_csv(&mut w, &recs)?
            }
            Format::Json => output::json(&mut w, &recs)?,
        }
        rows.iter().map(|r| r.abs_gap).fold(0.0, f64::max)
    };
    w.flush()?;
    if a.strict && (worst.is_nan() || worst > tol) {
        eprintln!("abs_gap {worst:e} exceeds {tol:e}");
        return Err(Failure::Verification);
    }
    Ok(())
}

fn threshold(a: ThresholdArgs) -> CmdResult {
    let scenarios: Vec<NoiseScenario> = match (a.gate, a.kind) {
        (Some(g), Some(k)) => vec![scenario(g, k, CouplingArg::Locked)],
        _ => NoiseScenario::figure_scenarios().to_vec(),
    };
    let rows = scenarios
        .iter()
        .map(|sc| analysis::advantage_threshold(sc).map(|t| ThresholdRecord::from(&t)))
        .collect::<ghz_noise::Result<Vec<_>>>()?;
    let mut w = sink(&a.output.out)?;
    match a.output.format {
        Format::Csv => output::threshold_csv(&mut w, &rows)?,
        Format::Json => output::json(&mut w, &rows)?,
    }
    w.flush()?;
    Ok(())
}

fn classical() -> CmdResult {
    let c = classical_optimum();
    let mut w = io::stdout().lock();
    writeln!(w, "omega_d = {}", c.omega_d)?;
    writeln!(w, "optimal_count = {}", c.optimal_count)?;
    writeln!(w, "witness: {}", c.witness)?;
    for q in PROMISE {
        let ans = c.witness.answer(q);
        let verdict = if ghz_noise::game::wins(q, ans) { "win" } else { "lose" };
        writeln!(w, "  {q} -> {ans} {verdict}")?;
    }
    Ok(())
}

fn mc(a: McArgs) -> CmdResult {
    let r = range(a.min, a.max, a.steps, a.degrees)?;
    if r.lo() < 0.0 {
        return Err(Failure::Usage(format!("random bounds must be >= 0, got {}", r.lo())));
    }
    let player = a.player as usize - 1;
    let sc = scenario(a.gate, Kind::Random, CouplingArg::Locked);
    let strategy = WinningStrategy::default();
    let labels = output::question_labels();
    let mut rows = Vec::new();
    for level in r.levels() {
        let model = sc.model(player, level)?;
        for (i, q) in PROMISE.into_iter().enumerate() {
            let cfg = usage(McConfig::new(a.samples, a.seed.wrapping_add(i as u64)))?;
            let est = strategy.success_random_mc(q, &model, cfg)?;
            let analytic = sc.analytic_split(q.bit(player), level, level)?;
            rows.push(McRecord {
                error_level: level,
                question: labels[i].clone(),
                estimate: est.estimate,
                std_error: est.std_error,
                analytic,
                abs_gap: (est.estimate - analytic).abs(),
            });
        }
    }
    let mut w = sink(&a.output.out)?;
    match a.output.format {
        Format::Csv => output::mc_csv(&mut w, &rows)?,
        Format::Json => output::json(&mut w, &rows)?,
    }
    w.flush()?;
    Ok(())
}

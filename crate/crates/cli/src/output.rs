//! CSV and JSON emission. CSV reals use 12 decimals and LF line endings.

use std::io::{self, Write};

use ghz_noise::analysis::{GridRow, SweepRow, ThresholdResult, VerificationRow};
use ghz_noise::game::PROMISE;
use serde::Serialize;

pub const SWEEP_HEADER: &str = "error_level,p_q000,p_q011,p_q101,p_q110,average,analytic_average,abs_gap";
pub const GRID_HEADER: &str =
    "error_level_u,error_level_h,p_q000,p_q011,p_q101,p_q110,average,analytic_average,abs_gap";
pub const MC_HEADER: &str = "error_level,question,estimate,std_error,analytic,abs_gap";
pub const THRESHOLD_HEADER: &str = "scenario,threshold,residual,iterations,simulated_average";
pub const VERIFY_HEADER: &str =
    "theorem,check,question,level_u,level_h,simulated,analytic,difference,tolerance,pass";

/// Fixed 12-decimal rendering with negative zero folded into zero.
pub fn real(x: f64) -> String {
    let s = format!("{x:.12}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

#[derive(Serialize)]
pub struct SweepRecord {
    pub error_level: f64,
    pub p_q000: f64,
    pub p_q011: f64,
    pub p_q101: f64,
    pub p_q110: f64,
    pub average: f64,
    pub analytic_average: f64,
    pub abs_gap: f64,
}

impl From<&SweepRow> for SweepRecord {
    fn from(r: &SweepRow) -> Self {
        let [p_q000, p_q011, p_q101, p_q110] = r.per_question;
        Self {
            error_level: r.error_level,
            p_q000,
            p_q011,
            p_q101,
            p_q110,
            average: r.average,
            analytic_average: r.analytic_average,
            abs_gap: r.abs_gap,
        }
    }
}

#[derive(Serialize)]
pub struct GridRecord {
    pub error_level_u: f64,
    pub error_level_h: f64,
    pub p_q000: f64,
    pub p_q011: f64,
    pub p_q101: f64,
    pub p_q110: f64,
    pub average: f64,
    pub analytic_average: f64,
    pub abs_gap: f64,
}

impl From<&GridRow> for GridRecord {
    fn from(r: &GridRow) -> Self {
        let [p_q000, p_q011, p_q101, p_q110] = r.per_question;
        Self {
            error_level_u: r.level_u,
            error_level_h: r.level_h,
            p_q000,
            p_q011,
            p_q101,
            p_q110,
            average: r.average,
            analytic_average: r.analytic_average,
            abs_gap: r.abs_gap,
        }
    }
}

#[derive(Serialize)]
pub struct McRecord {
    pub error_level: f64,
    pub question: String,
    pub estimate: f64,
    pub std_error: f64,
    pub analytic: f64,
    pub abs_gap: f64,
}

#[derive(Serialize)]
pub struct ThresholdRecord {
    pub scenario: String,
    pub threshold: f64,
    pub residual: f64,
    pub iterations: usize,
    pub simulated_average: f64,
}

impl From<&ThresholdResult> for ThresholdRecord {
    fn from(t: &ThresholdResult) -> Self {
        Self {
            scenario: t.scenario.to_string(),
            threshold: t.threshold,
            residual: t.residual,
            iterations: t.iterations,
            simulated_average: t.simulated_average,
        }
    }
}

#[derive(Serialize)]
pub struct VerifyRecord {
    pub theorem: String,
    pub check: String,
    /// Empty for the promise average.
    pub question: String,
    pub level_u: f64,
    pub level_h: f64,
    pub simulated: f64,
    pub analytic: f64,
    pub difference: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl From<&VerificationRow> for VerifyRecord {
    fn from(r: &VerificationRow) -> Self {
        Self {
            theorem: r.theorem.to_string(),
            check: r.check.to_string(),
            question: r.question.map(|q| q.to_string()).unwrap_or_default(),
            level_u: r.level_u,
            level_h: r.level_h,
            simulated: r.simulated,
            analytic: r.analytic,
            difference: r.difference,
            tolerance: r.tolerance,
            pass: r.pass,
        }
    }
}

pub fn sweep_csv(w: &mut impl Write, rows: &[SweepRecord]) -> io::Result<()> {
    writeln!(w, "{SWEEP_HEADER}")?;
    for r in rows {
        let cols = [
            r.error_level,
            r.p_q000,
            r.p_q011,
            r.p_q101,
            r.p_q110,
            r.average,
            r.analytic_average,
            r.abs_gap,
        ];
        writeln!(w, "{}", join(&cols))?;
    }
    Ok(())
}

pub fn grid_csv(w: &mut impl Write, rows: &[GridRecord]) -> io::Result<()> {
    writeln!(w, "{GRID_HEADER}")?;
    for r in rows {
        let cols = [
            r.error_level_u,
            r.error_level_h,
            r.p_q000,
            r.p_q011,
            r.p_q101,
            r.p_q110,
            r.average,
            r.analytic_average,
            r.abs_gap,
        ];
        writeln!(w, "{}", join(&cols))?;
    }
    Ok(())
}

pub fn mc_csv(w: &mut impl Write, rows: &[McRecord]) -> io::Result<()> {
    writeln!(w, "{MC_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{}",
            real(r.error_level),
            r.question,
            join(&[r.estimate, r.std_error, r.analytic, r.abs_gap])
        )?;
    }
    Ok(())
}

pub fn threshold_csv(w: &mut impl Write, rows: &[ThresholdRecord]) -> io::Result<()> {
    writeln!(w, "{THRESHOLD_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{:e},{},{}",
            r.scenario,
            real(r.threshold),
            r.residual,
            r.iterations,
            real(r.simulated_average)
        )?;
    }
    Ok(())
}

pub fn verify_csv(w: &mut impl Write, rows: &[VerifyRecord]) -> io::Result<()> {
    writeln!(w, "{VERIFY_HEADER}")?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{},{},{:e},{:e},{}",
            r.theorem,
            r.check,
            r.question,
            real(r.level_u),
            real(r.level_h),
            join(&[r.simulated, r.analytic]),
            r.difference,
            r.tolerance,
            r.pass
        )?;
    }
    Ok(())
}

pub fn json<T: Serialize>(w: &mut impl Write, rows: &[T]) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, rows)?;
    writeln!(w)
}

fn join(cols: &[f64]) -> String {
    cols.iter().map(|&x| real(x)).collect::<Vec<_>>().join(",")
}

/// Promise-question labels in canonical order.
pub fn question_labels() -> [String; 4] {
    PROMISE.map(|q| q.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_have_twelve_decimals() {
        assert_eq!(real(1.0), "1.000000000000");
        assert_eq!(real(0.75), "0.750000000000");
        assert_eq!(real(-0.5), "-0.500000000000");
    }

    #[test]
    fn negative_zero_is_folded() {
        assert_eq!(real(-0.0), "0.000000000000");
        assert_eq!(real(-1e-17), "0.000000000000");
    }

    #[test]
    fn noiseless_row_prints_ones() {
        let rec = SweepRecord {
            error_level: 0.0,
            p_q000: 1.0,
            p_q011: 1.0,
            p_q101: 1.0,
            p_q110: 1.0,
            average: 1.0,
            analytic_average: 1.0,
            abs_gap: 0.0,
        };
        let mut buf = Vec::new();
        sweep_csv(&mut buf, &[rec]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.split('\n');
        assert_eq!(lines.next(), Some(SWEEP_HEADER));
        assert_eq!(
            lines.next(),
            Some("0.000000000000,1.000000000000,1.000000000000,1.000000000000,1.000000000000,1.000000000000,1.000000000000,0.000000000000")
        );
        assert_eq!(lines.next(), Some(""));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn json_uses_csv_field_names() {
        let rec = SweepRecord {
            error_level: 0.5,
            p_q000: 1.0,
            p_q011: 0.9,
            p_q101: 0.9,
            p_q110: 1.0,
            average: 0.95,
            analytic_average: 0.95,
            abs_gap: 0.0,
        };
        let mut buf = Vec::new();
        json(&mut buf, &[rec]).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        let obj = v[0].as_object().unwrap();
        let keys: Vec<_> = obj.keys().cloned().collect();
        let mut want: Vec<_> = SWEEP_HEADER.split(',').map(String::from).collect();
        want.sort();
        let mut got = keys;
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn labels_follow_promise_order() {
        assert_eq!(question_labels(), ["000", "011", "101", "110"]);
    }
}

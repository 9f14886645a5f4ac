//! Analytic success probabilities of the noisy strategy, one pair of
//! formulas (per question and promise average) for each noise scenario.
//!
//! `x1` is always the input bit of the noisy player. The top-level
//! functions use compact trigonometric forms; [`literal`] keeps the same
//! quantities written as `sin(π/4 + t/2)cos(π/4 + t/2)` and
//! `sin²(π/4 + t/2) - sin²(π/4 - t/2)`, and the two are tested against each
//! other.

use core::fmt;

use crate::consts::SERIES_CUTOFF;
use crate::error::{Error, Result};
use crate::math;

/// The six noise scenarios with a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Systematic error on the phase gate.
    T1SysU,
    /// Random error on the phase gate.
    T2RndU,
    /// Systematic error on the Hadamard gate.
    T3SysH,
    /// Random error on the Hadamard gate.
    T4RndH,
    /// Systematic errors on both gates.
    T5SysBoth,
    /// Random errors on both gates.
    T6RndBoth,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::T1SysU,
        TheoremId::T2RndU,
        TheoremId::T3SysH,
        TheoremId::T4RndH,
        TheoremId::T5SysBoth,
        TheoremId::T6RndBoth,
    ];

    pub fn number(&self) -> u8 {
        *self as u8 + 1
    }

    pub fn is_random(&self) -> bool {
        matches!(self, TheoremId::T2RndU | TheoremId::T4RndH | TheoremId::T6RndBoth)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoremId::T1SysU => "T1_SysU",
            TheoremId::T2RndU => "T2_RndU",
            TheoremId::T3SysH => "T3_SysH",
            TheoremId::T4RndH => "T4_RndH",
            TheoremId::T5SysBoth => "T5_SysBoth",
            TheoremId::T6RndBoth => "T6_RndBoth",
        };
        f.write_str(s)
    }
}

/// `sin δ / δ`, the mean of `cos ε` over `[-δ, δ]`; defined as 1 at 0.
pub(crate) fn mean_cos(delta: f64) -> f64 {
    if delta.abs() < SERIES_CUTOFF {
        let d2 = delta * delta;
        1.0 - d2 / 6.0 + d2 * d2 / 120.0
    } else {
        math::sin(delta) / delta
    }
}

/// `(δ + sin δ) / (2δ)`, the mean of `(1 + cos ε)/2` over `[-δ, δ]`.
pub(crate) fn mean_half_one_plus_cos(delta: f64) -> f64 {
    if delta.abs() < SERIES_CUTOFF {
        let d2 = delta * delta;
        1.0 - d2 / 12.0 + d2 * d2 / 240.0
    } else {
        (delta + math::sin(delta)) / (2.0 * delta)
    }
}

fn positive(delta: f64) -> Result<f64> {
    if delta > 0.0 && delta.is_finite() {
        Ok(delta)
    } else {
        Err(Error::NonPositiveBound(delta))
    }
}

pub fn thm1_per_question(x1: bool, eps: f64) -> f64 {
    if x1 {
        (1.0 + math::cos(eps)) / 2.0
    } else {
        1.0
    }
}

pub fn thm1_average(eps: f64) -> f64 {
    0.5 + (1.0 + math::cos(eps)) / 4.0
}

pub fn thm2_per_question(x1: bool, delta: f64) -> Result<f64> {
    let d = positive(delta)?;
    Ok(if x1 { mean_half_one_plus_cos(d) } else { 1.0 })
}

pub fn thm2_average(delta: f64) -> Result<f64> {
    let d = positive(delta)?;
    Ok(0.5 + mean_half_one_plus_cos(d) / 2.0)
}

/// Same for every promise question.
pub fn thm3_value(eps: f64) -> f64 {
    (1.0 + math::cos(eps)) / 2.0
}

/// Same for every promise question.
pub fn thm4_value(delta: f64) -> Result<f64> {
    positive(delta).map(mean_half_one_plus_cos)
}

pub fn thm5_per_question(x1: bool, eps1: f64, eps2: f64) -> f64 {
    let h = math::cos(eps2) / 2.0;
    if x1 {
        0.5 + h * math::cos(eps1)
    } else {
        0.5 + h
    }
}

pub fn thm5_average(eps1: f64, eps2: f64) -> f64 {
    0.5 * (1.0 + math::cos(eps2) / 2.0 * (1.0 + math::cos(eps1)))
}

/// The `x1 = 0` branch depends on the Hadamard bound `delta2` alone.
pub fn thm6_per_question(x1: bool, delta1: f64, delta2: f64) -> Result<f64> {
    let (d1, d2) = (positive(delta1)?, positive(delta2)?);
    Ok(if x1 {
        0.5 + 0.5 * mean_cos(d1) * mean_cos(d2)
    } else {
        mean_half_one_plus_cos(d2)
    })
}

/// Average of the two branches; each branch covers half the promise.
pub fn thm6_average(delta1: f64, delta2: f64) -> Result<f64> {
    Ok(0.5 * thm6_per_question(false, delta1, delta2)? + 0.5 * thm6_per_question(true, delta1, delta2)?)
}

/// The success formulas in their uncondensed trigonometric form.
///
/// These have no series fallback and divide by the bounds directly.
pub mod literal {
    use core::f64::consts::FRAC_PI_4;

    use crate::error::Result;
    use crate::math;

    /// `sin(π/4 + t/2)·cos(π/4 + t/2)`, equal to `cos(t)/2`.
    pub fn sin_cos_quarter(t: f64) -> f64 {
        let a = FRAC_PI_4 + t / 2.0;
        math::sin(a) * math::cos(a)
    }

    /// `sin²(π/4 + t/2) - sin²(π/4 - t/2)`, equal to `sin t`.
    pub fn sin2_difference(t: f64) -> f64 {
        let a = math::sin(FRAC_PI_4 + t / 2.0);
        let b = math::sin(FRAC_PI_4 - t / 2.0);
        a * a - b * b
    }

    pub fn thm3_value(eps: f64) -> f64 {
        0.5 + sin_cos_quarter(eps)
    }

    pub fn thm4_value(delta: f64) -> Result<f64> {
        let d = super::positive(delta)?;
        Ok((d + sin2_difference(d)) / (2.0 * d))
    }

    pub fn thm5_per_question(x1: bool, eps1: f64, eps2: f64) -> f64 {
        if x1 {
            0.5 + sin_cos_quarter(eps2) * math::cos(eps1)
        } else {
            0.5 + sin_cos_quarter(eps2)
        }
    }

    pub fn thm5_average(eps1: f64, eps2: f64) -> f64 {
        0.5 * (1.0 + sin_cos_quarter(eps2) * (1.0 + math::cos(eps1)))
    }

    pub fn thm6_per_question(x1: bool, delta1: f64, delta2: f64) -> Result<f64> {
        let (d1, d2) = (super::positive(delta1)?, super::positive(delta2)?);
        Ok(if x1 {
            (math::sin(d1) * sin2_difference(d2) + d1 * d2) / (2.0 * d1 * d2)
        } else {
            (d2 + sin2_difference(d2)) / (2.0 * d2)
        })
    }

    /// `¼(1 + S/δ₂ + (sin δ₁·S + δ₁δ₂)/(δ₁δ₂))` with `S` the sine-squared
    /// difference at `δ₂`, closing the outer parenthesis after the last term.
    pub fn thm6_average(delta1: f64, delta2: f64) -> Result<f64> {
        let (d1, d2) = (super::positive(delta1)?, super::positive(delta2)?);
        let s = sin2_difference(d2);
        Ok(0.25 * (1.0 + s / d2 + (math::sin(d1) * s + d1 * d2) / (d1 * d2)))
    }
}

//! The "around" fuzzy number and per-pixel / per-gesture matching degrees.
//!
//! Each axis is scored with a symmetric trapezoid centred on the reference
//! coordinate: degree 1 inside the core half-width `a`, falling linearly to 0
//! at the support half-width `b`. The two axis degrees are joined with a
//! t-norm, and a gesture's score is the mean of its pixel degrees.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gesture::TimedPoint;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FuzzyError {
    #[error("membership needs 0 <= core_halfwidth < support_halfwidth, got a={core}, b={support}")]
    InvalidParams { core: f64, support: f64 },
    #[error("cannot aggregate an empty degree sequence")]
    EmptySequence,
}

/// Fuzzy conjunction used to combine the x and y degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TNorm {
    #[default]
    Minimum,
    Product,
}

impl TNorm {
    pub fn apply(self, a: f64, b: f64) -> f64 {
        match self {
            TNorm::Minimum => a.min(b),
            TNorm::Product => a * b,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MembershipParams {
    pub core_halfwidth: f64,
    pub support_halfwidth: f64,
    #[serde(default)]
    pub tnorm: TNorm,
}

impl Default for MembershipParams {
    /// Triangle with a 20 px support, the same reach as a PassPoints tolerance square.
    fn default() -> Self {
        MembershipParams {
            core_halfwidth: 0.0,
            support_halfwidth: 20.0,
            tnorm: TNorm::Minimum,
        }
    }
}

impl MembershipParams {
    pub fn new(
        core_halfwidth: f64,
        support_halfwidth: f64,
        tnorm: TNorm,
    ) -> Result<Self, FuzzyError> {
        let p = MembershipParams {
            core_halfwidth,
            support_halfwidth,
            tnorm,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), FuzzyError> {
        let (a, b) = (self.core_halfwidth, self.support_halfwidth);
        if a >= 0.0 && b > a && b.is_finite() {
            Ok(())
        } else {
            Err(FuzzyError::InvalidParams {
                core: a,
                support: b,
            })
        }
    }
}

/// Degree of a matched pixel together with its two axis degrees.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PixelMatch {
    pub degree: f64,
    pub axis_degrees: (f64, f64),
}

/// How much `cand_coord` is "around" `ref_coord` on one axis.
pub fn mu_around_1d(ref_coord: f64, cand_coord: f64, params: &MembershipParams) -> f64 {
    let d = (ref_coord - cand_coord).abs();
    let (a, b) = (params.core_halfwidth, params.support_halfwidth);
    if d <= a {
        1.0
    } else if d < b {
        (b - d) / (b - a)
    } else {
        0.0
    }
}

/// Two-dimensional match of a counterpart pixel against its reference pixel.
/// Timestamps play no part.
pub fn mu_match(rp: &TimedPoint, cp: &TimedPoint, params: &MembershipParams) -> PixelMatch {
    let dx = mu_around_1d(rp.x, cp.x, params);
    let dy = mu_around_1d(rp.y, cp.y, params);
    PixelMatch {
        degree: params.tnorm.apply(dx, dy),
        axis_degrees: (dx, dy),
    }
}

/// Arithmetic mean of pixel degrees.
pub fn aggregate(degrees: &[f64]) -> Result<f64, FuzzyError> {
    if degrees.is_empty() {
        return Err(FuzzyError::EmptySequence);
    }
    let sum: f64 = degrees.iter().sum();
    let mean = sum / degrees.len() as f64;
    // rounding in the sum can push the mean a ulp past the extremes
    let lo = degrees.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = degrees.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(mean.clamp(lo, hi))
}

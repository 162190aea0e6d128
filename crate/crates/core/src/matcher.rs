//! End-to-end gesture scoring.
//!
//! The fuzzy pipeline is: rescale the candidate onto the reference canvas,
//! correct a global shift, resample both to the same count, score each pixel
//! pair, average, and compare against the threshold (inclusive).

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::align::{apply_shift, find_shift, AlignmentParams, Offset};
use crate::crisp::{crisp_gesture_match, CrispError, CrispParams, Verdict};
use crate::fuzzy::{aggregate, mu_match, FuzzyError, MembershipParams, PixelMatch};
use crate::gesture::{
    resample_points, rescale, validate, Gesture, GestureError, TimedPoint, DEFAULT_RESAMPLE_N,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatchError {
    #[error("invalid gesture: {0}")]
    Gesture(#[from] GestureError),
    #[error(transparent)]
    Fuzzy(#[from] FuzzyError),
    #[error(transparent)]
    Crisp(#[from] CrispError),
    #[error("invalid match config: {0}")]
    Config(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MatchConfig {
    pub membership: MembershipParams,
    pub alignment: AlignmentParams,
    pub resample_n: usize,
    pub threshold: f64,
}

impl Default for MatchConfig {
    fn default() -> Self {
        MatchConfig {
            membership: MembershipParams::default(),
            alignment: AlignmentParams::default(),
            resample_n: DEFAULT_RESAMPLE_N,
            threshold: 0.8,
        }
    }
}

impl MatchConfig {
    pub fn validate(&self) -> Result<(), MatchError> {
        self.membership.validate()?;
        if !self.alignment.is_valid() {
            return Err(MatchError::Config(
                "lead_window must be >= 1 and max_shift >= 0".into(),
            ));
        }
        if self.resample_n < 2 {
            return Err(MatchError::Config(format!(
                "resample_n must be >= 2, got {}",
                self.resample_n
            )));
        }
        if !is_valid_threshold(self.threshold) {
            return Err(MatchError::Config(format!(
                "threshold must lie in [0, 1], got {}",
                self.threshold
            )));
        }
        Ok(())
    }

    pub fn with_threshold(mut self, threshold: f64) -> Self {
        self.threshold = threshold;
        self
    }
}

pub fn is_valid_threshold(threshold: f64) -> bool {
    (0.0..=1.0).contains(&threshold)
}

/// The accept rule: a degree equal to the threshold passes.
pub fn accepts(degree: f64, threshold: f64) -> bool {
    degree >= threshold
}

#[derive(Debug, Clone, PartialEq)]
pub struct MatchResult {
    pub degree: f64,
    pub per_pixel: Vec<PixelMatch>,
    pub offset: Offset,
    pub accepted: bool,
}

impl MatchResult {
    /// Whole-percent display of the degree, rounding halves up.
    pub fn percent(&self) -> u32 {
        percent(self.degree)
    }
}

pub fn percent(degree: f64) -> u32 {
    (degree * 100.0 + 0.5).floor().clamp(0.0, 100.0) as u32
}

#[derive(Serialize, Deserialize)]
struct MatchResultWire {
    degree: f64,
    accepted: bool,
    offset: Offset,
    per_pixel: Vec<f64>,
}

impl Serialize for MatchResult {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatchResultWire {
            degree: self.degree,
            accepted: self.accepted,
            offset: self.offset,
            per_pixel: self.per_pixel.iter().map(|m| m.degree).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MatchResult {
    /// Axis degrees are not on the wire, so both are filled with the pixel degree.
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let wire = MatchResultWire::deserialize(deserializer)?;
        Ok(MatchResult {
            degree: wire.degree,
            accepted: wire.accepted,
            offset: wire.offset,
            per_pixel: wire
                .per_pixel
                .into_iter()
                .map(|d| PixelMatch {
                    degree: d,
                    axis_degrees: (d, d),
                })
                .collect(),
        })
    }
}

fn prepare(
    reference: &Gesture,
    candidate: &Gesture,
) -> Result<(Vec<TimedPoint>, Vec<TimedPoint>), MatchError> {
    validate(reference)?;
    validate(candidate)?;
    let candidate = rescale(candidate, reference.canvas_width, reference.canvas_height)?;
    Ok((reference.flatten(), candidate.flatten()))
}

/// Fuzzy matching degree of `candidate` against `reference`.
pub fn match_gestures(
    reference: &Gesture,
    candidate: &Gesture,
    config: &MatchConfig,
) -> Result<MatchResult, MatchError> {
    config.validate()?;
    let (ref_points, cand_points) = prepare(reference, candidate)?;

    let offset = find_shift(&ref_points, &cand_points, &config.alignment)
        .map_err(|_| GestureError::EmptyGesture)?
        .offset;
    let cand_points = apply_shift(&cand_points, offset);

    let ref_points = resample_points(&ref_points, config.resample_n)?;
    let cand_points = resample_points(&cand_points, config.resample_n)?;

    let per_pixel: Vec<PixelMatch> = ref_points
        .iter()
        .zip(&cand_points)
        .map(|(rp, cp)| mu_match(rp, cp, &config.membership))
        .collect();
    let degrees: Vec<f64> = per_pixel.iter().map(|m| m.degree).collect();
    let degree = aggregate(&degrees)?;

    Ok(MatchResult {
        degree,
        per_pixel,
        offset,
        accepted: accepts(degree, config.threshold),
    })
}

/// All-or-nothing baseline over the same rescale and resample steps, without alignment.
pub fn match_gestures_crisp(
    reference: &Gesture,
    candidate: &Gesture,
    params: &CrispParams,
    resample_n: usize,
) -> Result<Verdict, MatchError> {
    let (ref_points, cand_points) = prepare(reference, candidate)?;
    let ref_points = resample_points(&ref_points, resample_n)?;
    let cand_points = resample_points(&cand_points, resample_n)?;
    Ok(crisp_gesture_match(&ref_points, &cand_points, params)?)
}

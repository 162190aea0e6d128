//! Shift correction between a login attempt and the stored reference.
//!
//! A login drawing is often the right shape in a slightly different place.
//! The first reference pixel is looked up among the candidate's leading
//! pixels; the chosen anchor fixes a global `(dx, dy)` that moves the
//! candidate back over the reference before per-pixel matching.

use serde::{Deserialize, Serialize};

use crate::gesture::TimedPoint;

pub const DEFAULT_LEAD_WINDOW: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlignmentParams {
    pub lead_window: usize,
    /// Per-axis cap on the correction; 0 disables alignment.
    pub max_shift: f64,
}

impl AlignmentParams {
    /// Default window with the cap set to three support half-widths.
    pub fn for_support(support_halfwidth: f64) -> Self {
        AlignmentParams {
            lead_window: DEFAULT_LEAD_WINDOW,
            max_shift: 3.0 * support_halfwidth,
        }
    }

    pub fn disabled() -> Self {
        AlignmentParams {
            lead_window: DEFAULT_LEAD_WINDOW,
            max_shift: 0.0,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.lead_window >= 1 && self.max_shift >= 0.0
    }
}

impl Default for AlignmentParams {
    fn default() -> Self {
        AlignmentParams::for_support(crate::fuzzy::MembershipParams::default().support_halfwidth)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Offset {
    pub dx: f64,
    pub dy: f64,
}

impl Offset {
    pub fn new(dx: f64, dy: f64) -> Self {
        Offset { dx, dy }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlignmentResult {
    pub offset: Offset,
    /// Index of the candidate pixel paired with the first reference pixel.
    pub anchor_index: usize,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
#[error("alignment needs non-empty reference and candidate sequences")]
pub struct EmptySequence;

/// Finds the translation that carries the candidate onto the reference.
///
/// Every pixel in the candidate's leading window is tried as the counterpart
/// of `reference[0]`. Each trial shift is scored by how far the shifted
/// candidate run starting at that pixel lands from the reference's leading
/// pixels (mean distance to the nearest one). The lowest score wins; scores
/// equal to within 1e-9 fall back to the pixel closest to `reference[0]` and
/// then to the lowest index. A candidate that is an exact translate of the
/// reference therefore anchors at 0.
pub fn find_shift(
    reference: &[TimedPoint],
    candidate: &[TimedPoint],
    params: &AlignmentParams,
) -> Result<AlignmentResult, EmptySequence> {
    let origin = reference.first().ok_or(EmptySequence)?;
    if candidate.is_empty() {
        return Err(EmptySequence);
    }
    let k = params.lead_window.max(1);
    let lead_cand = &candidate[..k.min(candidate.len())];
    let lead_ref = &reference[..k.min(reference.len())];
    // every anchor is scored over a run of the same length
    let run = k.min(candidate.len() + 1 - lead_cand.len());
    let cap = params.max_shift.max(0.0);

    let mut best: Option<(f64, f64, usize, Offset)> = None;
    for (j, cp) in lead_cand.iter().enumerate() {
        let offset = Offset::new(
            (origin.x - cp.x).clamp(-cap, cap),
            (origin.y - cp.y).clamp(-cap, cap),
        );
        let residual = candidate[j..j + run]
            .iter()
            .map(|p| {
                let moved = p.translated(offset.dx, offset.dy);
                lead_ref
                    .iter()
                    .map(|r| r.distance(&moved))
                    .fold(f64::INFINITY, f64::min)
            })
            .sum::<f64>()
            / run as f64;
        let anchor_distance = origin.distance(cp);
        let better = match best {
            None => true,
            Some((r, d, _, _)) => {
                if (residual - r).abs() <= 1e-9 * (1.0 + r) {
                    anchor_distance < d
                } else {
                    residual < r
                }
            }
        };
        if better {
            best = Some((residual, anchor_distance, j, offset));
        }
    }
    let (_, _, anchor_index, offset) = best.ok_or(EmptySequence)?;
    Ok(AlignmentResult {
        offset,
        anchor_index,
    })
}

/// Translates every point by `offset`.
pub fn apply_shift(candidate: &[TimedPoint], offset: Offset) -> Vec<TimedPoint> {
    candidate
        .iter()
        .map(|p| p.translated(offset.dx, offset.dy))
        .collect()
}

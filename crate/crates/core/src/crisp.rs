//! Crisp (two-valued) matching schemes used as baselines.
//!
//! Covers the tolerance-region pixel test, all-or-nothing gesture matching,
//! the cued-click-points password-space count, and the bounding-box grid
//! encodings (cell path, corners, distinct-cell count).

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gesture::{flatten, Gesture, TimedPoint};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CrispError {
    #[error("tolerance must be positive, got {0}")]
    InvalidTolerance(f64),
    #[error("reference has {reference} points but candidate has {candidate}")]
    LengthMismatch { reference: usize, candidate: usize },
    #[error("cannot match empty point sequences")]
    EmptySequence,
    #[error("image width, image height and tolerance must all be positive")]
    ZeroInput,
    #[error("grid needs at least one row and one column")]
    InvalidGrid,
    #[error("grid box has zero width or height")]
    DegenerateBox,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ToleranceShape {
    Circle,
    #[default]
    Square,
}

/// Tolerance region around a reference pixel. For a square, `tolerance` is
/// the half-side, so PassPoints' 20x20 square is `tolerance = 10`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CrispParams {
    pub tolerance: f64,
    #[serde(default)]
    pub shape: ToleranceShape,
}

impl Default for CrispParams {
    fn default() -> Self {
        CrispParams {
            tolerance: 10.0,
            shape: ToleranceShape::Square,
        }
    }
}

impl CrispParams {
    pub fn new(tolerance: f64, shape: ToleranceShape) -> Result<Self, CrispError> {
        let p = CrispParams { tolerance, shape };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), CrispError> {
        if self.tolerance > 0.0 && self.tolerance.is_finite() {
            Ok(())
        } else {
            Err(CrispError::InvalidTolerance(self.tolerance))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected,
}

impl Verdict {
    pub fn is_accepted(self) -> bool {
        self == Verdict::Accepted
    }
}

impl From<bool> for Verdict {
    fn from(accepted: bool) -> Self {
        if accepted {
            Verdict::Accepted
        } else {
            Verdict::Rejected
        }
    }
}

/// 1 if `cp` falls inside the tolerance region of `rp` (boundary inclusive), else 0.
pub fn crisp_pixel_match(rp: &TimedPoint, cp: &TimedPoint, params: &CrispParams) -> u8 {
    let (dx, dy) = ((rp.x - cp.x).abs(), (rp.y - cp.y).abs());
    let inside = match params.shape {
        ToleranceShape::Circle => dx.hypot(dy) <= params.tolerance,
        ToleranceShape::Square => dx.max(dy) <= params.tolerance,
    };
    u8::from(inside)
}

/// Accepts only when every counterpart pixel is inside its reference's region.
pub fn crisp_gesture_match(
    reference: &[TimedPoint],
    candidate: &[TimedPoint],
    params: &CrispParams,
) -> Result<Verdict, CrispError> {
    params.validate()?;
    if reference.len() != candidate.len() {
        return Err(CrispError::LengthMismatch {
            reference: reference.len(),
            candidate: candidate.len(),
        });
    }
    if reference.is_empty() {
        return Err(CrispError::EmptySequence);
    }
    let all = reference
        .iter()
        .zip(candidate)
        .all(|(rp, cp)| crisp_pixel_match(rp, cp, params) == 1);
    Ok(all.into())
}

/// Theoretical password space `floor(w*h / t^2) ^ c` for cued-click-point schemes.
pub fn password_space(
    width: u64,
    height: u64,
    tolerance: u64,
    clicks: u32,
) -> Result<BigUint, CrispError> {
    if width == 0 || height == 0 || tolerance == 0 {
        return Err(CrispError::ZeroInput);
    }
    let area = u128::from(width) * u128::from(height);
    let square = u128::from(tolerance) * u128::from(tolerance);
    Ok(BigUint::from(area / square).pow(clicks))
}

/// Top-left and bottom-right corners of an axis-aligned box.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Corners {
    pub top_left: (f64, f64),
    pub bottom_right: (f64, f64),
}

impl Corners {
    pub fn width(&self) -> f64 {
        self.bottom_right.0 - self.top_left.0
    }

    pub fn height(&self) -> f64 {
        self.bottom_right.1 - self.top_left.1
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        (self.top_left.0..=self.bottom_right.0).contains(&x)
            && (self.top_left.1..=self.bottom_right.1).contains(&y)
    }
}

/// Bounding box of every point in the gesture.
pub fn corner_detect(g: &Gesture) -> Corners {
    let mut tl = (f64::INFINITY, f64::INFINITY);
    let mut br = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in g.strokes.iter().flatten() {
        tl = (tl.0.min(p.x), tl.1.min(p.y));
        br = (br.0.max(p.x), br.1.max(p.y));
    }
    Corners {
        top_left: tl,
        bottom_right: br,
    }
}

/// Which rectangle the grid is laid over.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum GridRegion {
    /// The gesture's own bounding box.
    #[default]
    BoundingBox,
    /// The whole canvas the gesture was drawn on.
    Canvas,
    Explicit(Corners),
}

/// A `rows x cols` grid with cells numbered row-major from 1 at the top left.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub rows: u32,
    pub cols: u32,
    pub region: GridRegion,
}

impl GridSpec {
    pub fn new(rows: u32, cols: u32) -> Self {
        GridSpec {
            rows,
            cols,
            region: GridRegion::BoundingBox,
        }
    }

    pub fn with_region(mut self, region: GridRegion) -> Self {
        self.region = region;
        self
    }

    fn resolve_box(&self, g: &Gesture) -> Result<Corners, CrispError> {
        if self.rows == 0 || self.cols == 0 {
            return Err(CrispError::InvalidGrid);
        }
        let bx = match self.region {
            GridRegion::BoundingBox => corner_detect(g),
            GridRegion::Canvas => Corners {
                top_left: (0.0, 0.0),
                bottom_right: (f64::from(g.canvas_width), f64::from(g.canvas_height)),
            },
            GridRegion::Explicit(c) => c,
        };
        if !(bx.width() > 0.0 && bx.height() > 0.0) {
            return Err(CrispError::DegenerateBox);
        }
        Ok(bx)
    }
}

// Points on an inner border go to the higher-index cell; the far edge of the
// box belongs to the last cell.
fn cell_of(x: f64, y: f64, bx: &Corners, rows: u32, cols: u32) -> u32 {
    let index = |v: f64, lo: f64, extent: f64, n: u32| -> u32 {
        let raw = ((v - lo) * f64::from(n) / extent).floor();
        raw.clamp(0.0, f64::from(n - 1)) as u32
    };
    let col = index(x, bx.top_left.0, bx.width(), cols);
    let row = index(y, bx.top_left.1, bx.height(), rows);
    row * cols + col + 1
}

/// Sequence of grid cells the drawn path passes through, consecutive repeats removed.
pub fn grid_encode(g: &Gesture, spec: &GridSpec) -> Result<Vec<u32>, CrispError> {
    let bx = spec.resolve_box(g)?;
    let points = flatten(g);
    let step = (bx.width() / f64::from(spec.cols)).min(bx.height() / f64::from(spec.rows)) / 2.0;

    let mut cells: Vec<u32> = Vec::new();
    let mut push = |x: f64, y: f64| {
        let c = cell_of(x, y, &bx, spec.rows, spec.cols);
        if cells.last() != Some(&c) {
            cells.push(c);
        }
    };
    if let Some(first) = points.first() {
        push(first.x, first.y);
    }
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let steps = (a.distance(&b) / step).ceil().max(1.0) as usize;
        for k in 1..=steps {
            let f = k as f64 / steps as f64;
            push(a.x + f * (b.x - a.x), a.y + f * (b.y - a.y));
        }
    }
    Ok(cells)
}

/// Number of distinct grid cells the gesture touches.
pub fn region_pixel_count(g: &Gesture, spec: &GridSpec) -> Result<usize, CrispError> {
    let cells = grid_encode(g, spec)?;
    Ok(cells.into_iter().collect::<BTreeSet<_>>().len())
}

/// Comma-separated cell list, e.g. `13,9,5,1`.
pub fn format_cells(cells: &[u32]) -> String {
    cells
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

//! Gesture data types, validation, coordinate scaling and arc-length resampling.
//!
//! A [`Gesture`] is what a touch surface reports: one or more strokes, each an
//! ordered run of [`TimedPoint`]s, plus the size of the canvas it was drawn on.
//! Matching works on the flattened point sequence, so strokes are concatenated
//! in drawing order and then resampled to a fixed count before pixels are
//! paired index-wise.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Resample count used when nothing else is configured.
pub const DEFAULT_RESAMPLE_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GestureError {
    #[error("gesture has no points")]
    EmptyGesture,
    #[error("point {index} ({x}, {y}) lies outside the {width}x{height} canvas")]
    OutOfBounds {
        index: usize,
        x: f64,
        y: f64,
        width: u32,
        height: u32,
    },
    #[error("timestamp at point {index} goes backwards or is negative")]
    NonMonotoneTime { index: usize },
    #[error("canvas dimensions must be positive")]
    ZeroDimension,
    #[error("resampling needs at least 2 input points, got {0}")]
    TooFewPoints(usize),
    #[error("resample count must be at least 2, got {0}")]
    InvalidCount(usize),
}

/// One sampled pixel of a stroke. `t` is milliseconds since the stroke began.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TimedPoint {
    pub x: f64,
    pub y: f64,
    pub t: f64,
}

impl TimedPoint {
    pub fn new(x: f64, y: f64, t: f64) -> Self {
        TimedPoint { x, y, t }
    }

    pub fn distance(&self, other: &TimedPoint) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn translated(&self, dx: f64, dy: f64) -> TimedPoint {
        TimedPoint {
            x: self.x + dx,
            y: self.y + dy,
            t: self.t,
        }
    }
}

/// A stroke is a contiguous pointer-down to pointer-up run of points.
pub type Stroke = Vec<TimedPoint>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Gesture {
    pub canvas_width: u32,
    pub canvas_height: u32,
    pub strokes: Vec<Stroke>,
}

impl Gesture {
    pub fn new(canvas_width: u32, canvas_height: u32, strokes: Vec<Stroke>) -> Self {
        Gesture {
            canvas_width,
            canvas_height,
            strokes,
        }
    }

    /// Builds a single-stroke gesture from `(x, y)` pairs, stamping points 10 ms apart.
    pub fn from_xy(canvas_width: u32, canvas_height: u32, xy: &[(f64, f64)]) -> Self {
        let stroke = xy
            .iter()
            .enumerate()
            .map(|(i, &(x, y))| TimedPoint::new(x, y, i as f64 * 10.0))
            .collect();
        Gesture::new(canvas_width, canvas_height, vec![stroke])
    }

    pub fn point_count(&self) -> usize {
        self.strokes.iter().map(Vec::len).sum()
    }

    pub fn validate(&self) -> Result<(), GestureError> {
        validate(self)
    }

    pub fn flatten(&self) -> Vec<TimedPoint> {
        flatten(self)
    }
}

/// Checks every [`Gesture`] invariant.
pub fn validate(g: &Gesture) -> Result<(), GestureError> {
    if g.strokes.is_empty() || g.strokes.iter().any(Vec::is_empty) {
        return Err(GestureError::EmptyGesture);
    }
    if g.canvas_width == 0 || g.canvas_height == 0 {
        return Err(GestureError::ZeroDimension);
    }
    let (w, h) = (f64::from(g.canvas_width), f64::from(g.canvas_height));
    let mut index = 0;
    for stroke in &g.strokes {
        let mut last_t = 0.0;
        for p in stroke {
            // Written so that NaN coordinates fail the range check too.
            if !((0.0..=w).contains(&p.x) && (0.0..=h).contains(&p.y)) {
                return Err(GestureError::OutOfBounds {
                    index,
                    x: p.x,
                    y: p.y,
                    width: g.canvas_width,
                    height: g.canvas_height,
                });
            }
            if !(p.t >= last_t && p.t.is_finite()) {
                return Err(GestureError::NonMonotoneTime { index });
            }
            last_t = p.t;
            index += 1;
        }
    }
    Ok(())
}

/// Concatenates strokes in drawing order.
pub fn flatten(g: &Gesture) -> Vec<TimedPoint> {
    g.strokes.iter().flatten().copied().collect()
}

/// Maps the gesture proportionally onto a canvas of the given size.
pub fn rescale(
    g: &Gesture,
    target_width: u32,
    target_height: u32,
) -> Result<Gesture, GestureError> {
    if target_width == 0 || target_height == 0 || g.canvas_width == 0 || g.canvas_height == 0 {
        return Err(GestureError::ZeroDimension);
    }
    if target_width == g.canvas_width && target_height == g.canvas_height {
        return Ok(g.clone());
    }
    let sx = f64::from(target_width) / f64::from(g.canvas_width);
    let sy = f64::from(target_height) / f64::from(g.canvas_height);
    let strokes = g
        .strokes
        .iter()
        .map(|s| {
            s.iter()
                .map(|p| TimedPoint::new(p.x * sx, p.y * sy, p.t))
                .collect()
        })
        .collect();
    Ok(Gesture::new(target_width, target_height, strokes))
}

/// Resamples the flattened gesture to `n` points spaced evenly by arc length.
///
/// The result is a single stroke on the same canvas.
pub fn resample(g: &Gesture, n: usize) -> Result<Gesture, GestureError> {
    validate(g)?;
    let points = resample_points(&continuous_time(g), n)?;
    Ok(Gesture::new(g.canvas_width, g.canvas_height, vec![points]))
}

/// Flattens strokes and offsets each stroke's clock so time keeps increasing
/// across stroke boundaries.
fn continuous_time(g: &Gesture) -> Vec<TimedPoint> {
    let mut out = Vec::with_capacity(g.point_count());
    let mut base = 0.0;
    for stroke in &g.strokes {
        let start = out.len();
        out.extend(stroke.iter().map(|p| TimedPoint::new(p.x, p.y, p.t + base)));
        if let Some(last) = out.get(start..).and_then(<[TimedPoint]>::last) {
            base = last.t;
        }
    }
    out
}

/// Arc-length resampling over a raw point sequence.
///
/// First and last input points are copied through unchanged. Timestamps of
/// synthetic points are interpolated along the segment they fall on.
pub fn resample_points(points: &[TimedPoint], n: usize) -> Result<Vec<TimedPoint>, GestureError> {
    if n < 2 {
        return Err(GestureError::InvalidCount(n));
    }
    if points.len() < 2 {
        return Err(GestureError::TooFewPoints(points.len()));
    }

    let mut cumulative = Vec::with_capacity(points.len());
    cumulative.push(0.0);
    for w in points.windows(2) {
        let last = *cumulative.last().unwrap_or(&0.0);
        cumulative.push(last + w[0].distance(&w[1]));
    }
    let total = cumulative[cumulative.len() - 1];
    let first = points[0];
    let last = points[points.len() - 1];

    let mut out = Vec::with_capacity(n);
    out.push(first);
    let mut seg = 0;
    for i in 1..n - 1 {
        let target = total * i as f64 / (n - 1) as f64;
        while seg + 2 < points.len() && cumulative[seg + 1] < target {
            seg += 1;
        }
        let (a, b) = (points[seg], points[seg + 1]);
        let len = cumulative[seg + 1] - cumulative[seg];
        let f = if len > 0.0 {
            ((target - cumulative[seg]) / len).clamp(0.0, 1.0)
        } else {
            0.0
        };
        out.push(TimedPoint::new(
            a.x + f * (b.x - a.x),
            a.y + f * (b.y - a.y),
            a.t + f * (b.t - a.t),
        ));
    }
    out.push(last);
    Ok(out)
}

#![allow(dead_code)]

use gesturelock::{Gesture, MembershipParams, TimedPoint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A wandering single stroke: 20-60 points, 3-15 px steps, smoothly turning,
/// kept at least `margin` px inside a `size x size` canvas.
pub fn random_gesture(rng: &mut ChaCha8Rng, size: u32, margin: f64) -> Gesture {
    let n = rng.random_range(20..=60);
    let lo = margin;
    let hi = f64::from(size) - margin;
    let mut x = rng.random_range(lo + 50.0..hi - 50.0);
    let mut y = rng.random_range(lo + 50.0..hi - 50.0);
    let mut heading: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let mut t = 0.0;
    let mut stroke = Vec::with_capacity(n);
    for _ in 0..n {
        stroke.push(TimedPoint::new(x, y, t));
        heading += rng.random_range(-0.6..0.6);
        let step = rng.random_range(3.0..15.0);
        let (nx, ny) = (x + step * heading.cos(), y + step * heading.sin());
        if !(lo..=hi).contains(&nx) || !(lo..=hi).contains(&ny) {
            heading += std::f64::consts::PI;
        }
        x = (x + step * heading.cos()).clamp(lo, hi);
        y = (y + step * heading.sin()).clamp(lo, hi);
        t += rng.random_range(5.0..20.0);
    }
    Gesture::new(size, size, vec![stroke])
}

/// Piecewise-linear interpolation through the trapezoid's breakpoints,
/// located by linear scan. Shares nothing with the library's branch logic.
pub fn around_oracle(distance: f64, params: &MembershipParams) -> f64 {
    let knots = [
        (0.0, 1.0),
        (params.core_halfwidth, 1.0),
        (params.support_halfwidth, 0.0),
        (f64::MAX, 0.0),
    ];
    for w in knots.windows(2) {
        let ((x0, y0), (x1, y1)) = (w[0], w[1]);
        if distance >= x0 && distance <= x1 {
            if x1 == x0 {
                return y1;
            }
            return y0 + (y1 - y0) * (distance - x0) / (x1 - x0);
        }
    }
    0.0
}

/// Point at arc length `s` along the polyline, found by walking from the
/// start every time.
pub fn point_at_arc_length(points: &[(f64, f64)], s: f64) -> (f64, f64) {
    let mut travelled = 0.0;
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        let len = ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2)).sqrt();
        if len > 0.0 && travelled + len >= s {
            let f = (s - travelled) / len;
            return (a.0 + f * (b.0 - a.0), a.1 + f * (b.1 - a.1));
        }
        travelled += len;
    }
    *points.last().unwrap()
}

pub fn polyline_length(points: &[(f64, f64)]) -> f64 {
    points
        .windows(2)
        .map(|w| ((w[1].0 - w[0].0).powi(2) + (w[1].1 - w[0].1).powi(2)).sqrt())
        .sum()
}

/// Brute-force arc-length resampling oracle.
pub fn resample_oracle(points: &[(f64, f64)], n: usize) -> Vec<(f64, f64)> {
    let total = polyline_length(points);
    (0..n)
        .map(|i| point_at_arc_length(points, total * i as f64 / (n - 1) as f64))
        .collect()
}

pub fn xy(g: &Gesture) -> Vec<(f64, f64)> {
    g.flatten().iter().map(|p| (p.x, p.y)).collect()
}

pub fn translate(g: &Gesture, dx: f64, dy: f64) -> Gesture {
    let strokes = g
        .strokes
        .iter()
        .map(|s| s.iter().map(|p| p.translated(dx, dy)).collect())
        .collect();
    Gesture::new(g.canvas_width, g.canvas_height, strokes)
}

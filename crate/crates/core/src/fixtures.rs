//! Hand-built gestures that reproduce known matching outcomes.
//!
//! Used by the test suites and the runnable examples.

use crate::gesture::Gesture;

/// Reference/candidate pair whose per-pixel degrees are `(1, 0.2, 0, 1)`
/// under the default triangle (a = 0, b = 20, minimum) with alignment off
/// and `resample_n = 4`, for an overall degree of 0.55.
///
/// Both are zig-zags with equal segment lengths, so resampling to four points
/// returns the vertices. Counterpart offsets are (0,0), (16,0), (25,1), (0,0).
pub fn partial_match_pair() -> (Gesture, Gesture) {
    let reference = Gesture::from_xy(
        300,
        300,
        &[
            (100.0, 200.0),
            (101.0, 168.0),
            (109.0, 199.0),
            (117.0, 168.0),
        ],
    );
    let candidate = Gesture::from_xy(
        300,
        300,
        &[
            (100.0, 200.0),
            (117.0, 168.0),
            (134.0, 200.0),
            (117.0, 168.0),
        ],
    );
    (reference, candidate)
}

/// An arch drawn up the left side, across the top and down the right side.
/// On a 4x4 bounding-box grid it parses as `13,9,5,1,2,3,4,8,12,16`.
pub fn arch() -> Gesture {
    Gesture::from_xy(
        100,
        100,
        &[(5.0, 35.0), (5.0, 5.0), (35.0, 5.0), (35.0, 35.0)],
    )
}

/// A vertical stroke and a copy whose far end leans `lean` pixels sideways.
///
/// Both start at the same pixel and are sampled uniformly, so the counterpart
/// offset grows linearly along the stroke. With the default triangle
/// (b = 20) and `lean <= 20` the matching degree is close to `1 - lean / 40`:
/// a lean of 4 scores about 0.90 and a lean of 10.4 about 0.74.
pub fn leaning_pair(lean: f64) -> (Gesture, Gesture) {
    const POINTS: usize = 41;
    let (x0, y0, height) = (100.0, 100.0, 200.0);
    let line = |lean: f64| -> Vec<(f64, f64)> {
        (0..POINTS)
            .map(|i| {
                let f = i as f64 / (POINTS - 1) as f64;
                (x0 + lean * f, y0 + height * f)
            })
            .collect()
    };
    (
        Gesture::from_xy(400, 400, &line(0.0)),
        Gesture::from_xy(400, 400, &line(lean)),
    )
}

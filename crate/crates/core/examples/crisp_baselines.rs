//! The all-or-nothing baselines: tolerance-region matching, grid encoding,
//! corner detection and the theoretical password space.
//!
//! `cargo run --example crisp_baselines`

use gesturelock::crisp::format_cells;
use gesturelock::fixtures::{arch, partial_match_pair};
use gesturelock::{
    corner_detect, grid_encode, match_gestures_crisp, password_space, region_pixel_count,
    CrispParams, Gesture, GridRegion, GridSpec, ToleranceShape,
};

fn main() {
    let (reference, candidate) = partial_match_pair();
    for (shape, tolerance) in [
        (ToleranceShape::Square, 10.0),
        (ToleranceShape::Circle, 20.0),
        (ToleranceShape::Square, 30.0),
    ] {
        let params = CrispParams::new(tolerance, shape).unwrap();
        let verdict = match_gestures_crisp(&reference, &candidate, &params, 4).unwrap();
        println!("{shape:?} tolerance {tolerance}: {verdict:?}");
    }

    let g = arch();
    let corners = corner_detect(&g);
    let spec = GridSpec::new(4, 4);
    let cells = grid_encode(&g, &spec).unwrap();
    println!(
        "arch box {:?}-{:?}: cells {} ({} regions)",
        corners.top_left,
        corners.bottom_right,
        format_cells(&cells),
        region_pixel_count(&g, &spec).unwrap()
    );

    // a flat stroke has no bounding-box height; grid it against the canvas
    let flat = Gesture::from_xy(400, 400, &[(10.0, 50.0), (390.0, 50.0)]);
    println!(
        "bounding-box grid of a flat stroke: {:?}",
        grid_encode(&flat, &spec)
    );
    let canvas = spec.with_region(GridRegion::Canvas);
    println!(
        "canvas grid of a flat stroke: {}",
        format_cells(&grid_encode(&flat, &canvas).unwrap())
    );

    for (w, h, t, c) in [(380, 380, 19, 5), (451, 331, 19, 5), (1920, 1080, 13, 8)] {
        println!(
            "password space {w}x{h}, tolerance {t}, {c} clicks: {}",
            password_space(w, h, t, c).unwrap()
        );
    }
}

//! The same gesture drawn somewhere else on the image: the alignment step
//! recovers the offset before scoring.
//!
//! `cargo run --example shift_alignment`

use gesturelock::{find_shift, match_gestures, AlignmentParams, Gesture, MatchConfig, TimedPoint};

fn spiral() -> Gesture {
    let points: Vec<(f64, f64)> = (0..30)
        .map(|i| {
            let a = i as f64 * 0.35;
            let r = 20.0 + 3.0 * i as f64;
            (250.0 + r * a.cos(), 250.0 + r * a.sin())
        })
        .collect();
    Gesture::from_xy(500, 500, &points)
}

fn shifted(g: &Gesture, dx: f64, dy: f64) -> Gesture {
    let strokes = g
        .strokes
        .iter()
        .map(|s| s.iter().map(|p| p.translated(dx, dy)).collect())
        .collect();
    Gesture::new(g.canvas_width, g.canvas_height, strokes)
}

fn main() {
    let reference = spiral();
    let aligned = MatchConfig::default();
    let unaligned = MatchConfig {
        alignment: AlignmentParams::disabled(),
        ..aligned
    };
    println!("max shift: {} px", aligned.alignment.max_shift);
    for (dx, dy) in [
        (0.0, 0.0),
        (12.0, -7.0),
        (-35.0, 20.0),
        (55.0, 55.0),
        (90.0, 0.0),
    ] {
        let candidate = shifted(&reference, dx, dy);
        let with = match_gestures(&reference, &candidate, &aligned).unwrap();
        let without = match_gestures(&reference, &candidate, &unaligned).unwrap();
        println!(
            "drawn at ({dx:>5},{dy:>5}): offset ({:>6.1},{:>6.1}) aligned {:.3} unaligned {:.3}",
            with.offset.dx, with.offset.dy, with.degree, without.degree
        );
    }

    // a shaky start: the first two touches land off the line
    let mut shaky: Vec<TimedPoint> = reference.flatten();
    let first = shaky[0];
    shaky.insert(0, TimedPoint::new(first.x + 9.0, first.y - 6.0, -20.0));
    shaky.insert(1, TimedPoint::new(first.x - 4.0, first.y + 8.0, -10.0));
    let r = find_shift(&reference.flatten(), &shaky, &AlignmentParams::default()).unwrap();
    println!(
        "shaky start: anchored on candidate point {} with offset ({}, {})",
        r.anchor_index, r.offset.dx, r.offset.dy
    );
}

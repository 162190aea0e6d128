//! Scores candidate drawings against a reference with the full pipeline and
//! shows the accept/reject decision at the default threshold of 0.8.
//!
//! `cargo run --example match_gestures`

use gesturelock::fixtures::{leaning_pair, partial_match_pair};
use gesturelock::{match_gestures, AlignmentParams, MatchConfig};

fn main() {
    let config = MatchConfig::default();
    for lean in [0.0, 4.0, 8.0, 10.4, 16.0] {
        let (reference, candidate) = leaning_pair(lean);
        let r = match_gestures(&reference, &candidate, &config).unwrap();
        println!(
            "stroke leaning {lean:>4} px: degree {:.4} ({}%) -> {}",
            r.degree,
            r.percent(),
            if r.accepted { "accept" } else { "reject" }
        );
    }

    // four counterpart pixels scoring 1, 0.2, 0 and 1
    let (reference, candidate) = partial_match_pair();
    let four_points = MatchConfig {
        alignment: AlignmentParams::disabled(),
        resample_n: 4,
        ..config
    };
    let r = match_gestures(&reference, &candidate, &four_points).unwrap();
    let per_pixel: Vec<f64> = r.per_pixel.iter().map(|m| m.degree).collect();
    println!(
        "partial match: per-pixel {per_pixel:?} -> {}%, accepted: {}",
        r.percent(),
        r.accepted
    );
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
}

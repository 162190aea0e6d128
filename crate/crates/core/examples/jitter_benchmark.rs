//! Fuzzy versus crisp acceptance when the reference is redrawn with
//! Gaussian hand jitter.
//!
//! `cargo run --release --example jitter_benchmark`

use gesturelock::{
    run_benchmark, AlignmentParams, CrispParams, Gesture, JitterModel, MatchConfig,
    MembershipParams, Offset, TNorm, ToleranceShape,
};

fn main() {
    let reference = Gesture::from_xy(
        400,
        400,
        &[
            (80.0, 300.0),
            (110.0, 150.0),
            (180.0, 90.0),
            (260.0, 120.0),
            (300.0, 220.0),
            (240.0, 300.0),
        ],
    );
    let tolerance = 10.0;
    let crisp = CrispParams::new(tolerance, ToleranceShape::Square).unwrap();
    // core as wide as the crisp square, so fuzzy never rejects what crisp accepts
    let config = MatchConfig {
        membership: MembershipParams::new(tolerance, 25.0, TNorm::Minimum).unwrap(),
        alignment: AlignmentParams::disabled(),
        ..MatchConfig::default()
    };

    println!("sigma  shift    fuzzy  crisp  mean degree");
    for (sigma, shift) in [(1.0, 0.0), (3.0, 0.0), (5.0, 0.0), (8.0, 0.0), (3.0, 8.0)] {
        let jitter = JitterModel {
            sigma,
            shift: Offset::new(shift, shift),
            trials: 1000,
            rng_seed: 42,
        };
        let r = run_benchmark(&reference, &jitter, &config, &crisp).unwrap();
        println!(
            "{sigma:>5}  {shift:>5}  {:>6.3} {:>6.3}  {:.4}",
            r.fuzzy_accept_rate, r.crisp_accept_rate, r.mean_degree
        );
    }
}

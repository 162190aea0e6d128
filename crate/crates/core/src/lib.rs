//! Fuzzy matching of hand-drawn touch gestures, with a graphical-password
//! login service built on top.
//!
//! A login drawing is compared with the stored reference pixel by pixel.
//! Instead of the usual all-or-nothing tolerance test, each counterpart pixel
//! gets a degree in `[0, 1]` from a two-dimensional "around" fuzzy number, and
//! the gesture's matching degree is the mean of those. A login passes when the
//! degree reaches the user's own threshold.
//!
//! | module | what it holds |
//! |---|---|
//! | [`gesture`] | points, strokes, validation, rescaling, arc-length resampling |
//! | [`fuzzy`] | the per-axis membership, per-pixel degree, aggregate degree |
//! | [`crisp`] | tolerance-region baselines, password space, grid encodings |
//! | [`align`] | global shift correction before matching |
//! | [`matcher`] | the end-to-end fuzzy and crisp pipelines |
//! | [`auth`] | profile store, enrollment/login service, HTTP API |
//! | [`bench`] | seeded jitter benchmark, fuzzy vs. crisp |
//!
//! ```
//! use gesturelock::{fixtures, match_gestures, AlignmentParams, MatchConfig};
//!
//! let (reference, candidate) = fixtures::partial_match_pair();
//! let config = MatchConfig {
//!     alignment: AlignmentParams::disabled(),
//!     resample_n: 4,
//!     ..MatchConfig::default()
//! };
//! let result = match_gestures(&reference, &candidate, &config).unwrap();
//! assert_eq!(result.percent(), 55);
//! assert!(!result.accepted);
//! ```

pub mod align;
pub mod auth;
pub mod bench;
pub mod config;
pub mod crisp;
pub mod fixtures;
pub mod fuzzy;
pub mod gesture;
pub mod matcher;

pub use align::{apply_shift, find_shift, AlignmentParams, AlignmentResult, Offset};
pub use bench::{run_benchmark, BenchReport, JitterModel};
pub use crisp::{
    corner_detect, crisp_gesture_match, crisp_pixel_match, grid_encode, password_space,
    region_pixel_count, CrispParams, GridRegion, GridSpec, ToleranceShape, Verdict,
};
pub use fuzzy::{aggregate, mu_around_1d, mu_match, MembershipParams, PixelMatch, TNorm};
pub use gesture::{flatten, resample, rescale, validate, Gesture, GestureError, TimedPoint};
pub use matcher::{match_gestures, match_gestures_crisp, MatchConfig, MatchError, MatchResult};

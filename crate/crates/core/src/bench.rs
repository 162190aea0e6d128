//! Seeded jitter benchmark comparing fuzzy and crisp acceptance.
//!
//! Each trial redraws the reference with isotropic Gaussian noise on every
//! point plus one global shift, then scores the copy with both pipelines.
//! Trial `i` draws from a ChaCha stream selected by `i`, so results do not
//! depend on how trials are scheduled across threads.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::align::Offset;
use crate::crisp::CrispParams;
use crate::gesture::{validate, Gesture, TimedPoint};
use crate::matcher::{accepts, match_gestures, match_gestures_crisp, MatchConfig, MatchError};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JitterModel {
    /// Per-point standard deviation in pixels.
    pub sigma: f64,
    pub shift: Offset,
    pub trials: usize,
    pub rng_seed: u64,
}

impl Default for JitterModel {
    fn default() -> Self {
        JitterModel {
            sigma: 3.0,
            shift: Offset::default(),
            trials: 1000,
            rng_seed: 0,
        }
    }
}

/// Per-trial outcome, kept so acceptance can be re-evaluated at other thresholds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialScore {
    pub degree: f64,
    pub crisp_accepted: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub trials: usize,
    pub fuzzy_accept_rate: f64,
    pub crisp_accept_rate: f64,
    pub mean_degree: f64,
    #[serde(skip)]
    pub fuzzy_accepted: usize,
    #[serde(skip)]
    pub crisp_accepted: usize,
}

impl BenchReport {
    pub fn from_scores(scores: &[TrialScore], threshold: f64) -> BenchReport {
        let trials = scores.len();
        let fuzzy_accepted = scores
            .iter()
            .filter(|s| accepts(s.degree, threshold))
            .count();
        let crisp_accepted = scores.iter().filter(|s| s.crisp_accepted).count();
        // summed in trial order so the report is reproducible bit for bit
        let total: f64 = scores.iter().map(|s| s.degree).sum();
        let n = trials.max(1) as f64;
        BenchReport {
            trials,
            fuzzy_accept_rate: fuzzy_accepted as f64 / n,
            crisp_accept_rate: crisp_accepted as f64 / n,
            mean_degree: total / n,
            fuzzy_accepted,
            crisp_accepted,
        }
    }
}

/// Reference redrawn with jitter, clamped to the canvas.
pub fn perturb(reference: &Gesture, sigma: f64, shift: Offset, rng: &mut ChaCha8Rng) -> Gesture {
    let noise =
        (sigma > 0.0).then(|| Normal::new(0.0, sigma).expect("sigma is finite and positive"));
    let (w, h) = (
        f64::from(reference.canvas_width),
        f64::from(reference.canvas_height),
    );
    let draw = |rng: &mut ChaCha8Rng| noise.as_ref().map_or(0.0, |n| n.sample(rng));
    let strokes = reference
        .strokes
        .iter()
        .map(|stroke| {
            stroke
                .iter()
                .map(|p| {
                    let x = p.x + shift.dx + draw(rng);
                    let y = p.y + shift.dy + draw(rng);
                    TimedPoint::new(x.clamp(0.0, w), y.clamp(0.0, h), p.t)
                })
                .collect()
        })
        .collect();
    Gesture::new(reference.canvas_width, reference.canvas_height, strokes)
}

pub fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

/// Scores every trial with both pipelines.
pub fn score_trials(
    reference: &Gesture,
    jitter: &JitterModel,
    match_config: &MatchConfig,
    crisp: &CrispParams,
) -> Result<Vec<TrialScore>, MatchError> {
    validate(reference)?;
    match_config.validate()?;
    crisp.validate()?;
    if !(jitter.sigma >= 0.0 && jitter.sigma.is_finite()) {
        return Err(MatchError::Config(format!(
            "sigma must be >= 0, got {}",
            jitter.sigma
        )));
    }
    if jitter.trials == 0 {
        return Err(MatchError::Config("trials must be >= 1".into()));
    }
    (0..jitter.trials)
        .into_par_iter()
        .map(|i| {
            let mut rng = trial_rng(jitter.rng_seed, i);
            let candidate = perturb(reference, jitter.sigma, jitter.shift, &mut rng);
            let fuzzy = match_gestures(reference, &candidate, match_config)?;
            let crisp =
                match_gestures_crisp(reference, &candidate, crisp, match_config.resample_n)?;
            Ok(TrialScore {
                degree: fuzzy.degree,
                crisp_accepted: crisp.is_accepted(),
            })
        })
        .collect()
}

pub fn run_benchmark(
    reference: &Gesture,
    jitter: &JitterModel,
    match_config: &MatchConfig,
    crisp: &CrispParams,
) -> Result<BenchReport, MatchError> {
    let scores = score_trials(reference, jitter, match_config, crisp)?;
    Ok(BenchReport::from_scores(&scores, match_config.threshold))
}

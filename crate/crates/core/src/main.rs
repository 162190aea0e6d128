use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use gesturelock::auth::{api, AuthService, ProfileStore};
use gesturelock::config::ServiceConfig;
use gesturelock::crisp::format_cells;
use gesturelock::{
    grid_encode, match_gestures, password_space, run_benchmark, CrispParams, Gesture, GridRegion,
    GridSpec, JitterModel, MatchConfig, Offset, ToleranceShape,
};

#[derive(Parser)]
#[command(
    name = "gesturelock",
    version,
    about = "Fuzzy gesture matching and graphical-password login"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Score a candidate gesture against a reference; exit 0 if accepted, 1 if rejected
    Match {
        reference: PathBuf,
        candidate: PathBuf,
        /// MatchConfig JSON
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        threshold: Option<f64>,
    },
    /// Theoretical password space floor(w*h/t^2)^c
    Space {
        width: u64,
        height: u64,
        #[arg(default_value_t = 19)]
        tolerance: u64,
        #[arg(default_value_t = 5)]
        clicks: u32,
    },
    /// Grid cells the gesture passes through, comma-separated
    Grid {
        gesture: PathBuf,
        rows: u32,
        cols: u32,
        #[arg(long, value_enum, default_value_t = Region::Bbox)]
        region: Region,
    },
    /// Fuzzy vs. crisp acceptance under seeded jitter
    Bench {
        reference: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = 3.0)]
        sigma: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        shift_x: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        shift_y: f64,
        #[arg(long, default_value_t = 10.0)]
        crisp_tolerance: f64,
        #[arg(long, value_enum, default_value_t = Shape::Square)]
        crisp_shape: Shape,
    },
    /// Run the enrollment/login HTTP service
    Serve {
        /// Service config JSON (defaults to $GESTURELOCK_CONFIG)
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        listen: Option<String>,
        #[arg(long)]
        store: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Region {
    Bbox,
    Canvas,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Circle,
    Square,
}

type BoxError = Box<dyn std::error::Error>;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, BoxError> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?)
}

fn match_config(path: Option<&Path>, threshold: Option<f64>) -> Result<MatchConfig, BoxError> {
    let mut cfg = match path {
        Some(p) => read_json(p)?,
        None => MatchConfig::default(),
    };
    if let Some(t) = threshold {
        cfg.threshold = t;
    }
    Ok(cfg)
}

fn run(cli: Cli) -> Result<ExitCode, BoxError> {
    match cli.command {
        Command::Match {
            reference,
            candidate,
            config,
            threshold,
        } => {
            let reference: Gesture = read_json(&reference)?;
            let candidate: Gesture = read_json(&candidate)?;
            let cfg = match_config(config.as_deref(), threshold)?;
            let result = match_gestures(&reference, &candidate, &cfg)?;
            println!("{}", serde_json::to_string(&result)?);
            Ok(if result.accepted {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Space {
            width,
            height,
            tolerance,
            clicks,
        } => {
            println!("{}", password_space(width, height, tolerance, clicks)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Grid {
            gesture,
            rows,
            cols,
            region,
        } => {
            let gesture: Gesture = read_json(&gesture)?;
            gesture.validate()?;
            let region = match region {
                Region::Bbox => GridRegion::BoundingBox,
                Region::Canvas => GridRegion::Canvas,
            };
            let cells = grid_encode(&gesture, &GridSpec::new(rows, cols).with_region(region))?;
            println!("{}", format_cells(&cells));
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            reference,
            config,
            threshold,
            seed,
            trials,
            sigma,
            shift_x,
            shift_y,
            crisp_tolerance,
            crisp_shape,
        } => {
            let reference: Gesture = read_json(&reference)?;
            let cfg = match_config(config.as_deref(), threshold)?;
            let shape = match crisp_shape {
                Shape::Circle => ToleranceShape::Circle,
                Shape::Square => ToleranceShape::Square,
            };
            let crisp = CrispParams::new(crisp_tolerance, shape)?;
            let jitter = JitterModel {
                sigma,
                shift: Offset::new(shift_x, shift_y),
                trials,
                rng_seed: seed,
            };
            let report = run_benchmark(&reference, &jitter, &cfg, &crisp)?;
            println!("{}", serde_json::to_string(&report)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Serve {
            config,
            listen,
            store,
        } => {
            let mut cfg = ServiceConfig::load(config.as_deref())?;
            if let Some(l) = listen {
                cfg.listen = l;
            }
            if let Some(s) = store {
                cfg.store_dir = s;
            }
            let service = Arc::new(AuthService::new(
                ProfileStore::open(&cfg.store_dir)?,
                cfg.matching,
            )?);
            let runtime = tokio::runtime::Runtime::new()?;
            eprintln!(
                "listening on {} (store: {})",
                cfg.listen,
                cfg.store_dir.display()
            );
            runtime.block_on(api::serve(service, &cfg.listen))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! Experiment tooling around `pursuit-core`: configuration files, Monte Carlo
//! aggregation, trace CSV files and trajectory plots.

pub mod config;
pub mod error;
pub mod experiment;
pub mod export;
pub mod plot;

pub use config::{load_config, parse_config, ExperimentSpec};
pub use error::{HarnessError, Result};
pub use experiment::{run_cells, run_experiment, AggregateReport, CellReport, EpisodeSummary};
pub use export::{export_trace, read_trace};
pub use plot::render_trajectories;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use pursuit_core::{run_episode, Mode, Outcome};
use pursuit_harness::{
    export_trace, load_config, read_trace, render_trajectories, run_experiment, ExperimentSpec,
    HarnessError,
};

#[derive(Parser)]
#[command(name = "pursuit", version, about = "Relay pursuit by potential-game negotiation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate one episode and write its trace.
    Run {
        /// Optional config file providing the scenario.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, value_parser = parse_mode)]
        mode: Option<Mode>,
        #[arg(long)]
        dt: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Trace CSV output.
        #[arg(long)]
        out: PathBuf,
        /// Also render the trajectories to this SVG file.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run a Monte Carlo experiment described by a config file.
    Experiment {
        #[arg(long)]
        config: PathBuf,
    },
    /// Render a trace CSV as an SVG trajectory plot.
    Plot {
        #[arg(long)]
        trace: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: pursuit_core::Error| e.to_string())
}

fn run(command: Command) -> Result<(), HarnessError> {
    match command {
        Command::Run { config, mode, dt, seed, out, svg } => {
            let spec = match config {
                Some(path) => load_config(&path)?,
                None => ExperimentSpec::default(),
            };
            let mut game = spec.base;
            if let Some(m) = mode {
                game.mode = m;
            }
            if let Some(dt) = dt {
                game.dt = dt;
            }
            if let Some(s) = seed {
                game.seed = s;
            }
            game.validate()?;
            let trace = run_episode(&game)?;
            export_trace(&trace, &out)?;
            if let Some(svg) = svg {
                render_trajectories(&trace, &svg)?;
            }
            match trace.outcome {
                Outcome::Captured { by, at } => {
                    println!("{} dt={} seed={}: captured by pursuer {by} at t={at}", game.mode, game.dt, game.seed)
                }
                Outcome::Timeout => {
                    println!("{} dt={} seed={}: not captured by t_f={}", game.mode, game.dt, game.seed, game.t_f)
                }
            }
        }
        Command::Experiment { config } => {
            let spec = load_config(&config)?;
            let report = run_experiment(&spec)?;
            print!("{}", report.to_csv());
            eprintln!("wrote results to {}", spec.output_dir.display());
        }
        Command::Plot { trace, out } => {
            let trace = read_trace(&trace)?;
            render_trajectories(&trace, &out)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::fs;
use std::path::Path;

use pursuit_core::{run_episode, GameConfig, Mode, Outcome, Vec2};
use pursuit_harness::experiment::{run_one, trace_file_name};
use pursuit_harness::export::trace_from_csv;
use pursuit_harness::plot::trajectories_svg;
use pursuit_harness::{read_trace, run_cells, run_experiment, ExperimentSpec};

fn small_spec(out: &Path) -> ExperimentSpec {
    ExperimentSpec {
        dt_grid: vec![0.1, 0.05],
        n_runs: 4,
        master_seed: 17,
        output_dir: out.to_path_buf(),
        ..ExperimentSpec::default()
    }
}

fn files(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    for entry in walk(dir) {
        let rel = entry.strip_prefix(dir).unwrap().display().to_string();
        out.push((rel, fs::read(&entry).unwrap()));
    }
    out.sort();
    out
}

fn walk(dir: &Path) -> Vec<std::path::PathBuf> {
    let mut out = Vec::new();
    for e in fs::read_dir(dir).unwrap() {
        let p = e.unwrap().path();
        if p.is_dir() {
            out.extend(walk(&p));
        } else {
            out.push(p);
        }
    }
    out
}

#[test]
fn experiment_outputs_are_reproducible() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    run_experiment(&small_spec(a.path())).unwrap();
    run_experiment(&small_spec(b.path())).unwrap();
    let (fa, fb) = (files(a.path()), files(b.path()));
    assert_eq!(fa.len(), 2 + 2 * 2 * 4);
    assert_eq!(fa, fb);
}

#[test]
fn cells_do_not_depend_on_order() {
    let dir = tempfile::tempdir().unwrap();
    let spec = small_spec(dir.path());
    let forward = run_cells(&spec).unwrap();
    let reversed = run_cells(&ExperimentSpec {
        modes: vec![Mode::Decentralized, Mode::Centralized],
        dt_grid: vec![0.05, 0.1],
        ..spec
    })
    .unwrap();
    for cell in &forward.cells {
        assert_eq!(reversed.cell(cell.mode, cell.dt), Some(cell));
    }
}

#[test]
fn single_run_cell_matches_direct_episode() {
    let dir = tempfile::tempdir().unwrap();
    let spec = ExperimentSpec { n_runs: 1, dt_grid: vec![0.1], ..small_spec(dir.path()) };
    let report = run_cells(&spec).unwrap();
    for mode in [Mode::Centralized, Mode::Decentralized] {
        let trace = run_episode(&spec.episode_config(mode, 0.1, 0)).unwrap();
        let cell = report.cell(mode, 0.1).unwrap();
        let totals = pursuit_core::active_time_totals(&trace, 0.1);
        assert_eq!(cell.mean_active_time_by_pursuer, totals);
        assert_eq!(cell.capture_rate, if trace.outcome.is_captured() { 1.0 } else { 0.0 });
        if let Outcome::Captured { at, .. } = trace.outcome {
            assert_eq!(cell.mean_capture_time, at);
        }
    }
}

#[test]
fn exported_trace_reads_back_identically() {
    let dir = tempfile::tempdir().unwrap();
    let spec = small_spec(dir.path());
    run_one(&spec, Mode::Decentralized, 0.05, 2, Some(dir.path())).unwrap();
    let path = dir.path().join(trace_file_name(Mode::Decentralized, 0.05, 2));
    let direct = run_episode(&spec.episode_config(Mode::Decentralized, 0.05, 2)).unwrap();
    assert_eq!(read_trace(&path).unwrap(), direct);
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(trace_from_csv(&text).unwrap(), direct);
}

fn attr(tag: &str, name: &str) -> String {
    let key = format!("{name}=\"");
    let start = tag.find(&key).unwrap() + key.len();
    tag[start..].split('"').next().unwrap().to_string()
}

#[test]
fn plot_has_one_path_per_player_and_marks_capture() {
    let config = GameConfig { mode: Mode::Centralized, seed: 5, ..GameConfig::default() };
    let trace = run_episode(&config).unwrap();
    let svg = trajectories_svg(&trace).unwrap();
    let polylines: Vec<&str> = svg.split("<polyline").skip(1).collect();
    assert_eq!(polylines.len(), config.n_pursuers + 1);

    // a pursuer that never chased is drawn as a single point
    let totals = pursuit_core::active_time_totals(&trace, config.dt);
    let idle = totals.iter().position(|&t| t == 0.0).expect("some pursuer never chases");
    let tag = polylines.iter().find(|p| attr(p, "data-player") == format!("p{idle}")).unwrap();
    assert_eq!(attr(tag, "data-points").split_whitespace().count(), 1);

    let Outcome::Captured { .. } = trace.outcome else { panic!("expected capture") };
    let marker = svg.split("<circle class=\"capture\"").nth(1).expect("capture marker");
    let at = Vec2::new(attr(marker, "data-x").parse().unwrap(), attr(marker, "data-y").parse().unwrap());
    assert!(at.distance(trace.final_world.evader_pos) <= config.capture_radius);
}

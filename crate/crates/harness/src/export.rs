//! Comma-separated episode traces.
//!
//! Header, then one row per turn:
//!
//! ```text
//! step,t,p0_x,p0_y,...,e_x,e_y,a0,...,wlu0,...,potential
//! ```
//!
//! Positions are the world observed at the start of the turn and the actions
//! the assignment chosen from it. The last row describes how the episode
//! ended: `step` is the literal `end`, `t` and the positions are those of the
//! final world, each action column holds `captured` for the capturing
//! pursuer and `-` otherwise, the `wlu` columns hold the pursuer speeds and
//! the `potential` column the evader speed.
//!
//! Numbers are written in shortest round-trip form, so output bytes are a
//! pure function of the trace.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use pursuit_core::{Action, ActionProfile, EpisodeTrace, Outcome, StepRecord, Vec2, WorldState};

use crate::error::{HarnessError, Result};

const END_TAG: &str = "end";
const CAPTURED_TAG: &str = "captured";
const NOT_CAPTURED_TAG: &str = "-";

/// Column names for `n` pursuers.
pub fn trace_header(n: usize) -> Vec<String> {
    let mut cols = vec!["step".to_string(), "t".to_string()];
    for i in 0..n {
        cols.push(format!("p{i}_x"));
        cols.push(format!("p{i}_y"));
    }
    cols.push("e_x".into());
    cols.push("e_y".into());
    cols.extend((0..n).map(|i| format!("a{i}")));
    cols.extend((0..n).map(|i| format!("wlu{i}")));
    cols.push("potential".into());
    cols
}

fn push_world(row: &mut String, world: &WorldState) {
    write!(row, ",{}", world.t).unwrap();
    for p in &world.pursuer_pos {
        write!(row, ",{},{}", p.x, p.y).unwrap();
    }
    write!(row, ",{},{}", world.evader_pos.x, world.evader_pos.y).unwrap();
}

/// Render a trace as CSV text.
pub fn trace_to_csv(trace: &EpisodeTrace) -> Result<String> {
    if trace.is_empty() {
        return Err(HarnessError::EmptyTrace);
    }
    let n = trace.n_pursuers();
    let mut out = trace_header(n).join(",");
    out.push('\n');

    for (k, r) in trace.records.iter().enumerate() {
        let mut row = k.to_string();
        push_world(&mut row, &r.world);
        for a in r.profile.actions() {
            write!(row, ",{a}").unwrap();
        }
        for w in &r.wlu {
            write!(row, ",{w}").unwrap();
        }
        write!(row, ",{}", r.potential).unwrap();
        out.push_str(&row);
        out.push('\n');
    }

    let mut row = END_TAG.to_string();
    push_world(&mut row, &trace.final_world);
    let capturer = match trace.outcome {
        Outcome::Captured { by, .. } => Some(by),
        Outcome::Timeout => None,
    };
    for i in 0..n {
        row.push(',');
        row.push_str(if capturer == Some(i) { CAPTURED_TAG } else { NOT_CAPTURED_TAG });
    }
    for v in &trace.pursuer_speeds {
        write!(row, ",{v}").unwrap();
    }
    write!(row, ",{}", trace.evader_speed).unwrap();
    out.push_str(&row);
    out.push('\n');
    Ok(out)
}

/// Write a trace to `path`.
pub fn export_trace(trace: &EpisodeTrace, path: &Path) -> Result<()> {
    let csv = trace_to_csv(trace)?;
    fs::write(path, csv).map_err(|e| HarnessError::io(path, e))
}

struct Row<'a> {
    line: usize,
    fields: Vec<&'a str>,
}

impl Row<'_> {
    fn err(&self, reason: impl Into<String>) -> HarnessError {
        HarnessError::TraceFormat { line: self.line, reason: reason.into() }
    }

    fn num(&self, col: usize) -> Result<f64> {
        self.fields[col]
            .parse()
            .map_err(|_| self.err(format!("column {}: `{}` is not a number", col + 1, self.fields[col])))
    }

    fn world(&self, n: usize) -> Result<WorldState> {
        let t = self.num(1)?;
        let pursuers = (0..n)
            .map(|i| Ok(Vec2::new(self.num(2 + 2 * i)?, self.num(3 + 2 * i)?)))
            .collect::<Result<Vec<_>>>()?;
        let e = Vec2::new(self.num(2 + 2 * n)?, self.num(3 + 2 * n)?);
        Ok(WorldState::new(t, pursuers, e))
    }
}

/// Parse CSV text written by [`trace_to_csv`].
pub fn trace_from_csv(text: &str) -> Result<EpisodeTrace> {
    let mut lines = text.lines().enumerate().map(|(i, l)| Row { line: i + 1, fields: l.split(',').collect() });
    let header = lines.next().ok_or(HarnessError::EmptyTrace)?;
    let cols = header.fields.len();
    if cols < 9 || (cols - 5) % 4 != 0 {
        return Err(header.err(format!("unexpected column count {cols}")));
    }
    let n = (cols - 5) / 4;
    if header.fields != trace_header(n) {
        return Err(header.err("header does not match the trace schema"));
    }
    let actions_at = 4 + 2 * n;
    let wlu_at = actions_at + n;

    let mut records = Vec::new();
    let mut tail = None;
    for row in lines {
        if row.fields.len() != cols {
            return Err(row.err(format!("expected {cols} columns, got {}", row.fields.len())));
        }
        if tail.is_some() {
            return Err(row.err("data after the `end` row"));
        }
        if row.fields[0] == END_TAG {
            tail = Some(row);
            continue;
        }
        let step: usize = row.fields[0].parse().map_err(|_| row.err("bad step index"))?;
        if step != records.len() {
            return Err(row.err(format!("expected step {}, got {step}", records.len())));
        }
        let actions = (0..n)
            .map(|i| match row.fields[actions_at + i] {
                "CHASE" => Ok(Action::Chase),
                "IDLE" => Ok(Action::Idle),
                other => Err(row.err(format!("unknown action `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let world = row.world(n)?;
        records.push(StepRecord {
            t: world.t,
            world,
            profile: ActionProfile::new(actions),
            wlu: (0..n).map(|i| row.num(wlu_at + i)).collect::<Result<_>>()?,
            potential: row.num(cols - 1)?,
        });
    }

    let tail = tail.ok_or(HarnessError::TraceFormat {
        line: text.lines().count(),
        reason: "missing `end` row".into(),
    })?;
    if records.is_empty() {
        return Err(HarnessError::EmptyTrace);
    }
    let final_world = tail.world(n)?;
    let mut capturer = None;
    for i in 0..n {
        match tail.fields[actions_at + i] {
            CAPTURED_TAG if capturer.is_none() => capturer = Some(i),
            NOT_CAPTURED_TAG => {}
            other => return Err(tail.err(format!("unexpected outcome tag `{other}`"))),
        }
    }
    let outcome = match capturer {
        Some(by) => Outcome::Captured { by, at: final_world.t },
        None => Outcome::Timeout,
    };
    Ok(EpisodeTrace {
        records,
        outcome,
        final_world,
        pursuer_speeds: (0..n).map(|i| tail.num(wlu_at + i)).collect::<Result<_>>()?,
        evader_speed: tail.num(cols - 1)?,
    })
}

/// Read a trace file.
pub fn read_trace(path: &Path) -> Result<EpisodeTrace> {
    let text = fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
    trace_from_csv(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use pursuit_core::{run_episode, GameConfig, Mode};

    fn tiny_trace(steps: usize) -> EpisodeTrace {
        let world = |t: f64| WorldState::new(t, vec![Vec2::new(0.0, 0.0), Vec2::new(1.0, 2.5)], Vec2::new(3.0, 0.0));
        EpisodeTrace {
            records: (0..steps)
                .map(|k| StepRecord {
                    t: k as f64 * 0.1,
                    world: world(k as f64 * 0.1),
                    profile: ActionProfile::only(2, 1),
                    wlu: vec![0.0, f64::NEG_INFINITY],
                    potential: f64::NEG_INFINITY,
                })
                .collect(),
            outcome: Outcome::Timeout,
            final_world: world(steps as f64 * 0.1),
            pursuer_speeds: vec![1.0, 2.0],
            evader_speed: 0.9,
        }
    }

    #[test]
    fn schema_shape() {
        let csv = trace_to_csv(&tiny_trace(3)).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 5);
        // header + 3 turns + end row
        for l in &lines {
            assert_eq!(l.split(',').count(), 2 + 4 + 2 + 2 + 2 + 1);
        }
        assert_eq!(lines[0], "step,t,p0_x,p0_y,p1_x,p1_y,e_x,e_y,a0,a1,wlu0,wlu1,potential");
        assert_eq!(lines[1], "0,0,0,0,1,2.5,3,0,IDLE,CHASE,0,-inf,-inf");
        assert!(lines[4].starts_with("end,"));
    }

    #[test]
    fn empty_trace_is_rejected() {
        assert!(matches!(trace_to_csv(&tiny_trace(0)), Err(HarnessError::EmptyTrace)));
    }

    #[test]
    fn round_trip_is_exact() {
        for mode in [Mode::Centralized, Mode::Decentralized] {
            let config = GameConfig { mode, seed: 17, ..GameConfig::default() };
            let trace = run_episode(&config).unwrap();
            let csv = trace_to_csv(&trace).unwrap();
            let back = trace_from_csv(&csv).unwrap();
            assert_eq!(back, trace);
            assert_eq!(trace_to_csv(&back).unwrap(), csv);
        }
    }

    #[test]
    fn rejects_damaged_files() {
        let csv = trace_to_csv(&tiny_trace(2)).unwrap();
        let no_end: String = csv.lines().take(3).map(|l| format!("{l}\n")).collect();
        assert!(matches!(trace_from_csv(&no_end), Err(HarnessError::TraceFormat { .. })));
        let bad_action = csv.replacen("CHASE", "RUN", 1);
        assert!(matches!(trace_from_csv(&bad_action), Err(HarnessError::TraceFormat { line: 2, .. })));
        assert!(trace_from_csv("a,b,c\n").is_err());
    }
}

//! Standalone SVG of an episode's trajectories.
//!
//! One `<polyline>` per player. Start markers follow the usual colour code:
//! gold circles for pursuers faster than the evader, blue circles for the
//! rest, a red diamond for the evader. A captured episode gets a black ring
//! at the final evader position.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use pursuit_core::{EpisodeTrace, Outcome, Vec2};

use crate::error::{HarnessError, Result};

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;
const MARKER: f64 = 6.0;

const SUPER_COLOR: &str = "#f2c200";
const PURSUER_COLOR: &str = "#2f6fdb";
const EVADER_COLOR: &str = "#d62728";

/// World-to-pixel mapping with equal scale on both axes, y pointing up.
struct Frame {
    min: Vec2,
    scale: f64,
    offset: Vec2,
}

impl Frame {
    fn fit(points: impl Iterator<Item = Vec2>) -> Self {
        let (mut lo, mut hi) = (Vec2::new(f64::INFINITY, f64::INFINITY), Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in points {
            lo = Vec2::new(lo.x.min(p.x), lo.y.min(p.y));
            hi = Vec2::new(hi.x.max(p.x), hi.y.max(p.y));
        }
        let span = (hi.x - lo.x).max(hi.y - lo.y).max(1e-9);
        let pad = 0.05 * span;
        let min = Vec2::new(lo.x - pad, lo.y - pad);
        let scale = (SIZE - 2.0 * MARGIN) / (span + 2.0 * pad);
        // centre the shorter axis
        let offset = Vec2::new(
            MARGIN + 0.5 * (span - (hi.x - lo.x)) * scale,
            MARGIN + 0.5 * (span - (hi.y - lo.y)) * scale,
        );
        Self { min, scale, offset }
    }

    fn px(&self, p: Vec2) -> (f64, f64) {
        let x = self.offset.x + (p.x - self.min.x) * self.scale;
        let y = SIZE - (self.offset.y + (p.y - self.min.y) * self.scale);
        (x, y)
    }
}

/// Drop consecutive repeats so a stationary player collapses to one point.
fn dedup(path: Vec<Vec2>) -> Vec<Vec2> {
    let mut out: Vec<Vec2> = Vec::with_capacity(path.len());
    for p in path {
        if out.last() != Some(&p) {
            out.push(p);
        }
    }
    out
}

fn polyline(svg: &mut String, frame: &Frame, class: &str, player: &str, color: &str, path: &[Vec2]) {
    let points: Vec<String> = path
        .iter()
        .map(|&p| {
            let (x, y) = frame.px(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    writeln!(
        svg,
        r#"<polyline class="{class}" data-player="{player}" data-points="{}" points="{}" fill="none" stroke="{color}" stroke-width="1.5" stroke-linecap="round" stroke-linejoin="round"/>"#,
        path.len(),
        points.join(" ")
    )
    .unwrap();
}

/// SVG document for a trace.
pub fn trajectories_svg(trace: &EpisodeTrace) -> Result<String> {
    if trace.is_empty() {
        return Err(HarnessError::EmptyTrace);
    }
    let n = trace.n_pursuers();
    let supers: Vec<usize> = trace.super_pursuers().collect();
    let pursuer_paths: Vec<Vec<Vec2>> = (0..n).map(|i| dedup(trace.pursuer_path(i))).collect();
    let evader_path = dedup(trace.evader_path());
    let frame = Frame::fit(pursuer_paths.iter().flatten().chain(&evader_path).copied());

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    writeln!(svg, r#"<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#).unwrap();
    let inner = SIZE - 2.0 * MARGIN;
    writeln!(
        svg,
        r##"<rect x="{MARGIN}" y="{MARGIN}" width="{inner}" height="{inner}" fill="none" stroke="#999999"/>"##
    )
    .unwrap();

    for (i, path) in pursuer_paths.iter().enumerate() {
        let color = if supers.contains(&i) { SUPER_COLOR } else { PURSUER_COLOR };
        polyline(&mut svg, &frame, "pursuer", &format!("p{i}"), color, path);
    }
    polyline(&mut svg, &frame, "evader", "e", EVADER_COLOR, &evader_path);

    for (i, path) in pursuer_paths.iter().enumerate() {
        let (x, y) = frame.px(path[0]);
        let (class, color) =
            if supers.contains(&i) { ("start super", SUPER_COLOR) } else { ("start pursuer", PURSUER_COLOR) };
        writeln!(
            svg,
            r##"<circle class="{class}" cx="{x:.2}" cy="{y:.2}" r="{MARKER}" fill="{color}" stroke="#333333"/>"##
        )
        .unwrap();
    }
    let (ex, ey) = frame.px(evader_path[0]);
    let m = MARKER * 1.3;
    writeln!(
        svg,
        r##"<polygon class="start evader" points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="{EVADER_COLOR}" stroke="#333333"/>"##,
        ex, ey - m, ex + m, ey, ex, ey + m, ex - m, ey
    )
    .unwrap();

    if let Outcome::Captured { by, at } = trace.outcome {
        let p = trace.final_world.evader_pos;
        let (x, y) = frame.px(p);
        writeln!(
            svg,
            r#"<circle class="capture" data-by="{by}" data-t="{at}" data-x="{}" data-y="{}" cx="{x:.2}" cy="{y:.2}" r="{}" fill="none" stroke="black" stroke-width="2"/>"#,
            p.x,
            p.y,
            MARKER * 1.6
        )
        .unwrap();
    }

    let caption = match trace.outcome {
        Outcome::Captured { by, at } => format!("captured by pursuer {by} at t = {at:.3}"),
        Outcome::Timeout => "evader not captured".to_string(),
    };
    writeln!(
        svg,
        r#"<text x="{MARGIN}" y="{:.0}" font-family="sans-serif" font-size="16">{caption}</text>"#,
        MARGIN - 12.0
    )
    .unwrap();
    svg.push_str("</svg>\n");
    Ok(svg)
}

/// Write the trajectory plot of `trace` to `path`.
pub fn render_trajectories(trace: &EpisodeTrace, path: &Path) -> Result<()> {
    let svg = trajectories_svg(trace)?;
    fs::write(path, svg).map_err(|e| HarnessError::io(path, e))
}

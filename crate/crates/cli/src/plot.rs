//! SVG rendering of the bounds on `c(r)`.

use std::fmt::Write as _;
use std::path::Path;

use dartboard_core::bounds::{StepPoint, StepSeries};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PlotError {
    #[error("cannot plot an empty series")]
    Empty,
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 600.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 360.0;

pub const EXACT_SHADE: &str = "#000000";
pub const LOWER_SHADE: &str = "#707070";
pub const UPPER_SHADE: &str = "#b8b8b8";

fn px(r: f64, c: f64) -> (f64, f64) {
    (LEFT + r * (RIGHT - LEFT), BOTTOM - c * (BOTTOM - TOP))
}

/// Polyline in data coordinates; the enclosing group maps them to pixels.
fn polyline(out: &mut String, class: &str, shade: &str, width: f64, pts: &[(f64, f64)]) {
    let coords: Vec<String> = pts.iter().map(|(r, c)| format!("{r},{c}")).collect();
    let _ = writeln!(
        out,
        r#"    <polyline class="{class}" fill="none" stroke="{shade}" stroke-width="{width}" vector-effect="non-scaling-stroke" points="{}"/>"#,
        coords.join(" ")
    );
}

/// Consecutive exact points with equal value.
fn exact_segments(points: &[StepPoint]) -> Vec<Vec<(f64, f64)>> {
    let mut segments: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut open = false;
    for p in points {
        if p.is_exact() {
            match segments.last_mut() {
                Some(seg) if open && (seg[0].1 - p.c_lower).abs() <= 1e-9 => {
                    seg.push((p.r, p.c_lower))
                }
                _ => segments.push(vec![(p.r, p.c_lower)]),
            }
            open = true;
        } else {
            open = false;
        }
    }
    segments
}

pub fn render_svg(series: &StepSeries) -> Result<String, PlotError> {
    let points = &series.points;
    if points.is_empty() {
        return Err(PlotError::Empty);
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(
        out,
        r#"  <rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );

    let _ = writeln!(
        out,
        r#"  <path class="axes" d="M{LEFT},{TOP} L{LEFT},{BOTTOM} L{RIGHT},{BOTTOM}" fill="none" stroke="black"/>"#
    );
    for i in 0..=4 {
        let v = i as f64 / 4.0;
        let (x, _) = px(v, 0.0);
        let (_, y) = px(0.0, v);
        let _ = writeln!(
            out,
            r#"  <text x="{x}" y="{}" font-size="11" text-anchor="middle">{v}</text>"#,
            BOTTOM + 16.0
        );
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="11" text-anchor="end">{v}</text>"#,
            LEFT - 6.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        out,
        r#"  <text class="x-label" x="{}" y="{}" font-size="14" text-anchor="middle">r</text>"#,
        (LEFT + RIGHT) / 2.0,
        BOTTOM + 40.0
    );
    let _ = writeln!(
        out,
        r#"  <text class="y-label" x="18" y="{}" font-size="14" text-anchor="middle" transform="rotate(-90 18 {})">c(r)</text>"#,
        (TOP + BOTTOM) / 2.0,
        (TOP + BOTTOM) / 2.0
    );

    if let [p] = points.as_slice() {
        let (x, y) = px(p.r, p.c_lower);
        let (_, yu) = px(p.r, p.c_upper);
        let _ = writeln!(
            out,
            r#"  <circle class="marker" cx="{x}" cy="{y}" r="4" fill="{EXACT_SHADE}"/>"#
        );
        if !p.is_exact() {
            let _ = writeln!(
                out,
                r#"  <circle class="marker" cx="{x}" cy="{yu}" r="4" fill="{UPPER_SHADE}"/>"#
            );
        }
    } else {
        let _ = writeln!(
            out,
            r#"  <g transform="translate({LEFT} {BOTTOM}) scale({} {})">"#,
            RIGHT - LEFT,
            -(BOTTOM - TOP)
        );
        let upper: Vec<_> = points.iter().map(|p| (p.r, p.c_upper)).collect();
        let lower: Vec<_> = points.iter().map(|p| (p.r, p.c_lower)).collect();
        polyline(&mut out, "upper", UPPER_SHADE, 1.5, &upper);
        polyline(&mut out, "lower", LOWER_SHADE, 1.5, &lower);
        for seg in exact_segments(points) {
            polyline(&mut out, "exact", EXACT_SHADE, 3.0, &seg);
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn emit_plot(series: &StepSeries, path: &Path) -> Result<(), PlotError> {
    let svg = render_svg(series)?;
    std::fs::write(path, svg).map_err(|source| PlotError::Io {
        path: path.display().to_string(),
        source,
    })
}

//! Point set files: one `x,y` pair per line, `#` comment lines, or the JSON
//! form `{"points": [[x, y], ...]}`.

use std::fmt::Write as _;
use std::path::Path;

use dartboard_core::{Point, PointSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("invalid JSON point set: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Set(#[from] dartboard_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

#[derive(Serialize, Deserialize)]
struct JsonPoints {
    points: Vec<[f64; 2]>,
}

pub fn parse_point_set(text: &str) -> Result<PointSet, ParseError> {
    if text.trim_start().starts_with('{') {
        let parsed: JsonPoints = serde_json::from_str(text)?;
        let points = parsed
            .points
            .into_iter()
            .map(|[x, y]| Point::new(x, y))
            .collect();
        return Ok(PointSet::new(points)?);
    }
    let mut points = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fail = |message: String| ParseError::Line {
            line: i + 1,
            message,
        };
        let mut fields = line.split(',').map(str::trim);
        let (Some(x), Some(y), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(fail(format!("expected \"x,y\", found {line:?}")));
        };
        let coord = |s: &str| -> Result<f64, ParseError> {
            let v: f64 = s
                .parse()
                .map_err(|_| fail(format!("not a number: {s:?}")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(fail(format!("non-finite coordinate {s:?}")))
            }
        };
        points.push(Point::new(coord(x)?, coord(y)?));
    }
    Ok(PointSet::new(points)?)
}

pub fn read_point_set(path: &Path) -> Result<PointSet, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_point_set(&text)
}

/// Text form with each header line prefixed by `# `. Coordinates carry 17
/// significant digits, so they read back bit for bit.
pub fn format_point_set(set: &PointSet, header: &[String]) -> String {
    let mut out = String::new();
    for line in header {
        let _ = writeln!(out, "# {line}");
    }
    for p in set {
        let _ = writeln!(out, "{:.16e},{:.16e}", p.x, p.y);
    }
    out
}

pub fn format_point_set_json(set: &PointSet) -> String {
    let points = set.iter().map(|p| [p.x, p.y]).collect();
    serde_json::to_string(&JsonPoints { points }).expect("finite coordinates serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip_is_exact() {
        let set = PointSet::new(vec![
            Point::new(0.1, -1.0 / 3.0),
            Point::new(3f64.sqrt() / 2.0, 1e-300),
            Point::new(-0.0, 12345.678),
        ])
        .unwrap();
        let text = format_point_set(&set, &["name test".into()]);
        assert!(text.starts_with("# name test\n"));
        assert_eq!(parse_point_set(&text).unwrap(), set);
        assert_eq!(parse_point_set(&format_point_set_json(&set)).unwrap(), set);
    }

    #[test]
    fn comments_blank_lines_and_spaces() {
        let set = parse_point_set("# header\n\n 0.5 , 1\n#x\n2,3\n").unwrap();
        assert_eq!(set.points(), &[Point::new(0.5, 1.0), Point::new(2.0, 3.0)]);
    }

    #[test]
    fn errors_name_the_line() {
        let err = parse_point_set("# c\n0,0\n1;2\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 3, .. }), "{err}");
        let err = parse_point_set("0,0\n1,x\n").unwrap_err();
        assert_eq!(err.to_string(), "line 2: not a number: \"x\"");
        assert!(matches!(
            parse_point_set("1,2,3"),
            Err(ParseError::Line { line: 1, .. })
        ));
        assert!(matches!(
            parse_point_set("inf,0"),
            Err(ParseError::Line { line: 1, .. })
        ));
        assert!(matches!(
            parse_point_set("# only\n"),
            Err(ParseError::Set(_))
        ));
        assert!(matches!(
            parse_point_set("{\"points\": [[1]]}"),
            Err(ParseError::Json(_))
        ));
    }
}

//! Serialization of boundary curves (CSV, JSON, SVG) and atomic file writes.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::regions::{BoundaryCurve, RegionSpec};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(Error::Domain(format!(
                "unknown format {other:?}; expected csv, json, or svg"
            ))),
        }
    }
}

/// JSON carrier for a boundary curve: `points` rows are `[param, re, im]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundaryJson {
    pub family: String,
    pub r: f64,
    pub approximate: bool,
    pub points: Vec<[f64; 3]>,
}

impl BoundaryJson {
    pub fn from_curve(spec: RegionSpec, curve: &BoundaryCurve) -> Self {
        let points = curve
            .polyline
            .params()
            .iter()
            .zip(curve.polyline.points())
            .map(|(&t, p)| [t, p.re, p.im])
            .collect();
        BoundaryJson {
            family: spec.family.to_string(),
            r: spec.r,
            approximate: curve.approximate,
            points,
        }
    }
}

/// 17 significant digits, enough to round-trip any f64.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn render_csv(spec: RegionSpec, curve: &BoundaryCurve) -> String {
    let mut out = String::from("param,re,im\n");
    let _ = spec;
    for (&t, p) in curve.polyline.params().iter().zip(curve.polyline.points()) {
        let _ = writeln!(out, "{},{},{}", num(t), num(p.re), num(p.im));
    }
    out
}

pub fn render_json(spec: RegionSpec, curve: &BoundaryCurve) -> Result<String> {
    serde_json::to_string_pretty(&BoundaryJson::from_curve(spec, curve))
        .map_err(|e| Error::Internal(format!("json encoding failed: {e}")))
}

/// Single closed path in a unit-square viewBox. The affine map from data
/// coordinates to the unit square is recorded as JSON metadata
/// (`x' = (x - min_x) * scale`, `y' = 1 - (y - min_y) * scale`).
pub fn render_svg(spec: RegionSpec, curve: &BoundaryCurve) -> String {
    let pts = curve.polyline.points();
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in pts {
        min_x = min_x.min(p.re);
        max_x = max_x.max(p.re);
        min_y = min_y.min(p.im);
        max_y = max_y.max(p.im);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1e-300);
    let scale = 1.0 / span;
    let mut path = String::new();
    for (k, p) in pts.iter().enumerate() {
        let x = (p.re - min_x) * scale;
        let y = 1.0 - (p.im - min_y) * scale;
        let _ = write!(path, "{}{:.6} {:.6} ", if k == 0 { "M" } else { "L" }, x, y);
    }
    path.push('Z');
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\">\n",
            "  <metadata>{{\"family\":\"{}\",\"r\":{},\"min_x\":{},\"min_y\":{},",
            "\"scale\":{},\"approximate\":{}}}</metadata>\n",
            "  <path d=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"0.003\"/>\n",
            "</svg>\n"
        ),
        spec.family,
        num(spec.r),
        num(min_x),
        num(min_y),
        num(scale),
        curve.approximate,
        path
    )
}

pub fn render_boundary(
    spec: RegionSpec,
    curve: &BoundaryCurve,
    format: OutputFormat,
) -> Result<String> {
    Ok(match format {
        OutputFormat::Csv => render_csv(spec, curve),
        OutputFormat::Json => render_json(spec, curve)?,
        OutputFormat::Svg => render_svg(spec, curve),
    })
}

/// Writes via a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
    let tmp = match dir {
        Some(d) => d.join(format!(
            ".{}.tmp",
            path.file_name().unwrap_or_default().to_string_lossy()
        )),
        None => Path::new(&format!(
            ".{}.tmp",
            path.file_name().unwrap_or_default().to_string_lossy()
        ))
        .to_path_buf(),
    };
    std::fs::write(&tmp, contents)?;
    std::fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::{boundary_curve, Family};

    fn sample() -> (RegionSpec, BoundaryCurve) {
        let spec = RegionSpec::new(Family::U, 0.5).unwrap();
        let curve = boundary_curve(spec, 64).unwrap();
        (spec, curve)
    }

    #[test]
    fn csv_header_and_first_row() {
        let (spec, curve) = sample();
        let text = render_csv(spec, &curve);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("param,re,im"));
        let first: Vec<f64> = lines
            .next()
            .unwrap()
            .split(',')
            .map(|v| v.parse().unwrap())
            .collect();
        assert_eq!(first[0], 0.0);
        assert!((first[1] - 2.25).abs() < 1e-14);
        assert_eq!(first[2], 0.0);
    }

    #[test]
    fn csv_round_trips_doubles() {
        let (spec, curve) = sample();
        let text = render_csv(spec, &curve);
        for (line, (&t, p)) in text
            .lines()
            .skip(1)
            .zip(curve.polyline.params().iter().zip(curve.polyline.points()))
        {
            let cols: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
            assert_eq!(cols[0], t);
            assert_eq!(cols[1], p.re);
            assert_eq!(cols[2], p.im);
        }
    }

    #[test]
    fn json_round_trip_full_precision() {
        let (spec, curve) = sample();
        let text = render_json(spec, &curve).unwrap();
        let back: BoundaryJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back.family, "U");
        assert_eq!(back.r, 0.5);
        assert!(!back.approximate);
        for (row, (&t, p)) in back
            .points
            .iter()
            .zip(curve.polyline.params().iter().zip(curve.polyline.points()))
        {
            assert_eq!(row[0], t);
            assert_eq!(row[1], p.re);
            assert_eq!(row[2], p.im);
        }
    }

    #[test]
    fn svg_shape() {
        let (spec, curve) = sample();
        let text = render_svg(spec, &curve);
        assert!(text.contains("viewBox=\"0 0 1 1\""));
        assert_eq!(text.matches("<path").count(), 1);
        assert!(text.contains("<metadata>"));
        assert!(text.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn atomic_write_and_determinism() {
        let (spec, curve) = sample();
        let a = render_boundary(spec, &curve, OutputFormat::Json).unwrap();
        let b = render_boundary(spec, &curve, OutputFormat::Json).unwrap();
        assert_eq!(a, b);
        let dir = std::env::temp_dir().join("varreg-output-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("curve.json");
        write_atomic(&path, &a).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
        assert!(!dir.join(".curve.json.tmp").exists());
    }
}

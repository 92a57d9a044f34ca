//! Lower and upper bounds on `N_n(r)` and on its limit fraction `c(r)`.
//!
//! Lower bounds come from certified coverings (pigeonhole), upper bounds from
//! closed-form counts of the constructions. Interval endpoints are compared
//! with a slack of `1e-12`, so a radius within that distance of an endpoint
//! is treated as the endpoint itself.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use libm::asin;

use crate::constructions::{
    concentric_construction, concentric_epsilon, reuleaux_3n, reuleaux_midpoint_construction,
    small_n_construction, square_construction, triangle_construction, uniform_circle_bound,
    uniform_circle_construction, ConstructionParams, SQUARE_SIDE,
};
use crate::covers::{certified_builtins, CoveringCertificate, DEFAULT_GRID_H};
use crate::error::{Error, Result};
use crate::geom::{max_coverage, CountMode, PointSet};

const PI: f64 = core::f64::consts::PI;
const EPS: f64 = 1e-12;

/// Radii at which the bounds change form.
pub mod radii {
    pub const QUARTER: f64 = 0.25;
    pub const SQUARE: f64 = 0.353_553_390_593_273_8; // √2/4
    pub const BORSUK: f64 = 0.433_012_701_892_219_3; // √3/4
    pub const HALF: f64 = 0.5;
    pub const MIDPOINTS: f64 = 0.517_638_090_205_041_4; // (√3-1)/√2
    pub const HALF_HEXAGON: f64 = 0.520_416_499_866_533_2; // √(13/48)
    pub const JUNG: f64 = 0.577_350_269_189_625_8; // 1/√3
}

/// Label of the upper-bound formula (and of the construction behind it).
pub mod labels {
    pub const TRIVIAL: &str = "trivial";
    pub const TRIANGLE: &str = "triangle";
    pub const SQUARE: &str = "square";
    pub const UNIFORM_CIRCLE: &str = "uniform-circle";
    pub const MIDPOINTS: &str = "reuleaux-midpoints";
    pub const REULEAUX_3N: &str = "reuleaux-3n";
    pub const SMALL_N: &str = "small-n";
    pub const CONCENTRIC: &str = "concentric";
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsRecord {
    pub n: usize,
    pub r: f64,
    pub lower: usize,
    pub upper: usize,
    pub lower_witness: String,
    pub upper_witness: String,
}

/// One row of the summary table with the bounds at its sample point.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub label: &'static str,
    pub interval: &'static str,
    pub statement: &'static str,
    pub record: BoundsRecord,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepPoint {
    pub r: f64,
    pub c_lower: f64,
    pub c_upper: f64,
}

impl StepPoint {
    /// Whether the two bounds agree, so `c(r)` is known.
    pub fn is_exact(&self) -> bool {
        (self.c_upper - self.c_lower).abs() <= 1e-9
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct StepSeries {
    pub points: Vec<StepPoint>,
}

impl StepSeries {
    /// Maximal runs of consecutive exact points, as `(first r, last r, value)`.
    pub fn exact_runs(&self) -> Vec<(f64, f64, f64)> {
        let mut out: Vec<(f64, f64, f64)> = Vec::new();
        let mut open = false;
        for p in &self.points {
            if p.is_exact() {
                match out.last_mut() {
                    Some(run) if open && (run.2 - p.c_lower).abs() <= 1e-9 => run.1 = p.r,
                    _ => out.push((p.r, p.r, p.c_lower)),
                }
                open = true;
            } else {
                open = false;
            }
        }
        out
    }
}

/// `r` from 0.05 to 1.0 in steps of 0.005, merged with every radius in
/// [`radii`].
pub fn default_grid() -> Vec<f64> {
    let mut grid: Vec<f64> = (10..=200).map(|i| i as f64 * 0.005).collect();
    grid.extend([
        radii::QUARTER,
        radii::SQUARE,
        radii::BORSUK,
        radii::HALF,
        radii::MIDPOINTS,
        radii::HALF_HEXAGON,
        radii::JUNG,
    ]);
    grid.sort_by(f64::total_cmp);
    grid.dedup_by(|a, b| (*a - *b).abs() <= EPS);
    grid
}

fn check_query(n: usize, r: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if !(r.is_finite() && r > 0.0) {
        return Err(Error::InvalidRadius(r));
    }
    Ok(())
}

#[inline]
fn below(r: f64, edge: f64) -> bool {
    r < edge - EPS
}

#[inline]
fn at(r: f64, edge: f64) -> bool {
    (r - edge).abs() <= EPS
}

/// Upper bound on `N_n(r)` with the label of the formula attaining it.
///
/// Candidates, in tie-break order:
///
/// - `r <= 1/4`: 1 when `n <= 6`, 2 when `n = 7`, else `⌈n/7⌉`
/// - `r < 1/2`: `⌈n/3⌉`; `1/2 <= r < 1/√3`: `⌈2n/3⌉`
/// - `r < 0.35`: `⌈n/4⌉`
/// - `r < 1/2`: `⌈(n/π)·arcsin(2r)⌉`
/// - `1/2 <= r < (√3-1)/√2`: `⌈3n/5⌉`
/// - `r = 1/2`: `n/3 + 1` when `3 | n`, else `⌈n/3⌉ + 1`
///
/// Without a candidate at or below `n` the bound is `n` itself.
pub fn upper_bound(n: usize, r: f64) -> Result<(usize, &'static str)> {
    check_query(n, r)?;
    let mut best: Option<(usize, &'static str)> = None;
    let mut offer = |value: usize, label: &'static str| {
        if best.is_none_or(|b| value < b.0) {
            best = Some((value, label));
        }
    };
    if r <= radii::QUARTER + EPS {
        match n {
            1..=6 => offer(1, labels::SMALL_N),
            7 => offer(2, labels::CONCENTRIC),
            _ => offer(n.div_ceil(7), labels::CONCENTRIC),
        }
    }
    if below(r, radii::HALF) {
        offer(n.div_ceil(3), labels::TRIANGLE);
    } else if below(r, radii::JUNG) {
        offer((2 * n).div_ceil(3), labels::TRIANGLE);
    }
    if below(r, 0.5 * SQUARE_SIDE) {
        offer(n.div_ceil(4), labels::SQUARE);
    }
    if below(r, radii::HALF) {
        offer(uniform_circle_bound(n, r)?, labels::UNIFORM_CIRCLE);
    }
    if !below(r, radii::HALF) && below(r, radii::MIDPOINTS) {
        offer((3 * n).div_ceil(5), labels::MIDPOINTS);
    }
    if at(r, radii::HALF) {
        offer(n.div_ceil(3) + 1, labels::REULEAUX_3N);
    }
    Ok(match best {
        Some(b) if b.0 <= n => b,
        _ => (n, labels::TRIVIAL),
    })
}

/// The `n`-point set behind an upper-bound label, if there is one.
pub fn upper_witness_set(label: &str, n: usize) -> Result<Option<PointSet>> {
    let set = match label {
        labels::TRIANGLE => triangle_construction(n)?,
        labels::SQUARE => square_construction(n)?,
        labels::UNIFORM_CIRCLE => uniform_circle_construction(n)?,
        labels::MIDPOINTS => reuleaux_midpoint_construction(n)?,
        labels::SMALL_N => small_n_construction(n)?,
        labels::CONCENTRIC => concentric_construction(n, concentric_epsilon(n))?,
        labels::REULEAUX_3N => {
            let built = reuleaux_3n(ConstructionParams::new(n.div_ceil(3)))?;
            let mut points = built.points.into_points();
            points.truncate(n);
            PointSet::new(points)?
        }
        _ => return Ok(None),
    };
    Ok(Some(set))
}

/// Certificates backing the lower bounds, each certified.
#[derive(Debug, Clone)]
pub struct BoundsEngine {
    certificates: Vec<CoveringCertificate>,
}

impl Default for BoundsEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl BoundsEngine {
    /// Verifies the builtin certificates at the default grid step and keeps
    /// those that pass.
    pub fn new() -> Self {
        Self::with_certificates(certified_builtins(DEFAULT_GRID_H))
    }

    /// Keeps only the certified members of `certificates`, in order.
    pub fn with_certificates(certificates: Vec<CoveringCertificate>) -> Self {
        Self {
            certificates: certificates
                .into_iter()
                .filter(|c| c.verified.is_certified())
                .collect(),
        }
    }

    pub fn certificates(&self) -> &[CoveringCertificate] {
        &self.certificates
    }

    fn applicable(&self, r: f64) -> impl Iterator<Item = &CoveringCertificate> {
        self.certificates
            .iter()
            .filter(move |c| c.claim_radius() <= r + EPS)
    }

    /// Largest `⌈n/k⌉` over certificates whose radius is at most `r`, with the
    /// certificate's provenance; 1 and `"trivial"` when none applies.
    pub fn lower_bound(&self, n: usize, r: f64) -> Result<(usize, String)> {
        check_query(n, r)?;
        let mut best = (1, labels::TRIVIAL.to_string());
        for cert in self.applicable(r) {
            let value = n.div_ceil(cert.k());
            if value > best.0 {
                best = (value, cert.provenance.clone());
            }
        }
        Ok(best)
    }

    pub fn upper_bound(&self, n: usize, r: f64) -> Result<(usize, &'static str)> {
        upper_bound(n, r)
    }

    pub fn record(&self, n: usize, r: f64) -> Result<BoundsRecord> {
        let (lower, lower_witness) = self.lower_bound(n, r)?;
        let (upper, upper_witness) = upper_bound(n, r)?;
        Ok(BoundsRecord {
            n,
            r,
            lower,
            upper,
            lower_witness,
            upper_witness: upper_witness.to_string(),
        })
    }

    /// Builds the construction behind the upper bound and measures it.
    ///
    /// Returns the claimed bound and the measured maximum coverage, or `None`
    /// for the trivial bound.
    pub fn check_upper(&self, n: usize, r: f64, mode: CountMode) -> Result<Option<(usize, usize)>> {
        let (claimed, label) = upper_bound(n, r)?;
        match upper_witness_set(label, n)? {
            Some(set) => Ok(Some((claimed, max_coverage(&set, r, mode)?.count))),
            None => Ok(None),
        }
    }

    /// One record per summary-table row, at a sample point inside the row's
    /// interval, followed by the `n = 7, r = 1/4` case.
    pub fn table_reproduce(&self) -> Vec<TableRow> {
        let rows: [(&str, &str, &str, usize, f64); 10] = [
            ("A", "[sqrt(3)/3, 1]", "N = n", 12, 0.6),
            ("B", "[sqrt(3)/4, 1/2)", "N = ceil(n/3)", 10, 0.45),
            ("b", "r = 1/2", "m <= N_3m <= m+1", 30, radii::HALF),
            ("c", "r = sqrt(2)/4", "N = ceil(n/4)", 28, radii::SQUARE),
            ("d", "r = 1/4", "N = ceil(n/7), n != 7", 21, radii::QUARTER),
            (
                "E",
                "[(sqrt(3)-1)/sqrt(2), sqrt(3)/3)",
                "N <= ceil(2n/3)",
                30,
                0.55,
            ),
            ("F", "(0, 1/2)", "N <= ceil((n/pi) asin(2r))", 30, 0.3),
            (
                "G",
                "[1/2, (sqrt(3)-1)/sqrt(2))",
                "N <= ceil(3n/5)",
                10,
                0.51,
            ),
            ("H", "[sqrt(13/48), sqrt(3)/3)", "N >= ceil(n/2)", 10, 0.53),
            ("N7", "r = 1/4", "1 <= N_7 <= 2", 7, radii::QUARTER),
        ];
        rows.iter()
            .map(|&(label, interval, statement, n, r)| TableRow {
                label,
                interval,
                statement,
                record: self.record(n, r).expect("table samples are valid queries"),
            })
            .collect()
    }

    /// Bounds on `c(r)` along `grid`.
    ///
    /// `c_lower` is the largest `1/k` over applicable certificates (0 if
    /// none); `c_upper` is the smallest applicable limit of the upper-bound
    /// formulas (1 if none).
    pub fn step_function_data(&self, grid: &[f64]) -> Result<StepSeries> {
        let mut points = Vec::with_capacity(grid.len());
        for &r in grid {
            if !(r > 0.0 && r <= 1.0) {
                return Err(Error::Domain(alloc::format!(
                    "grid radius {r} outside (0, 1]"
                )));
            }
            let c_lower = self
                .applicable(r)
                .map(|c| 1.0 / c.k() as f64)
                .fold(0.0, f64::max);
            points.push(StepPoint {
                r,
                c_lower,
                c_upper: c_upper(r),
            });
        }
        if points.windows(2).any(|w| w[1].r < w[0].r) {
            return Err(Error::Domain("grid must be sorted".into()));
        }
        Ok(StepSeries { points })
    }
}

fn c_upper(r: f64) -> f64 {
    let mut best = 1.0f64;
    if below(r, radii::HALF) {
        best = best.min(1.0 / 3.0).min(asin(2.0 * r) / PI);
    } else if below(r, radii::JUNG) {
        best = best.min(2.0 / 3.0);
    }
    if at(r, radii::HALF) {
        best = best.min(1.0 / 3.0);
    }
    if !below(r, radii::HALF) && below(r, radii::MIDPOINTS) {
        best = best.min(3.0 / 5.0);
    }
    if below(r, 0.5 * SQUARE_SIDE) {
        best = best.min(0.25);
    }
    if r <= radii::QUARTER + EPS {
        best = best.min(1.0 / 7.0);
    }
    best
}

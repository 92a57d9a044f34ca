//! Planar primitives and the maximum disk coverage engine.
//!
//! Disks are closed throughout. [`max_coverage`] is the production routine
//! (an angular sweep around every point, `O(n² log n)`), while
//! [`max_coverage_brute`] enumerates [`candidate_centers`] and counts
//! directly in `O(n³)`. The two are kept independent so each can check the
//! other.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use libm::{acos, atan2, cos, sin, sqrt};

use crate::error::{Error, Result};

const TAU: f64 = core::f64::consts::TAU;

/// Pairs whose distance is within this much of `2r` get a single (midpoint)
/// candidate center.
pub const TANGENT_EPS: f64 = 1e-12;

/// Threshold on twice the signed area below which three points count as
/// collinear.
pub const COLLINEAR_EPS: f64 = 1e-12;

/// Containment slack used while growing the smallest enclosing circle.
const ENCLOSE_EPS: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    #[inline]
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    /// Point at `radius` from the origin in direction `angle`.
    #[inline]
    pub fn polar(radius: f64, angle: f64) -> Self {
        Self::new(radius * cos(angle), radius * sin(angle))
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn dot(self, other: Point) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the cross product; twice the signed area of the
    /// triangle `(0, self, other)`.
    #[inline]
    pub fn cross(self, other: Point) -> f64 {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> f64 {
        sqrt(self.norm_sq())
    }

    #[inline]
    pub fn distance_sq(self, other: Point) -> f64 {
        (self - other).norm_sq()
    }

    #[inline]
    pub fn distance(self, other: Point) -> f64 {
        sqrt(self.distance_sq(other))
    }

    #[inline]
    pub fn midpoint(self, other: Point) -> Point {
        Point::new(0.5 * (self.x + other.x), 0.5 * (self.y + other.y))
    }

    /// Counter-clockwise quarter turn.
    #[inline]
    pub fn perp(self) -> Point {
        Point::new(-self.y, self.x)
    }

    /// Rotation about the origin.
    #[inline]
    pub fn rotate(self, angle: f64) -> Point {
        let (s, c) = (sin(angle), cos(angle));
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    #[inline]
    pub fn rotate_about(self, pivot: Point, angle: f64) -> Point {
        pivot + (self - pivot).rotate(angle)
    }
}

impl Add for Point {
    type Output = Point;
    #[inline]
    fn add(self, rhs: Point) -> Point {
        Point::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for Point {
    type Output = Point;
    #[inline]
    fn sub(self, rhs: Point) -> Point {
        Point::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for Point {
    type Output = Point;
    #[inline]
    fn mul(self, rhs: f64) -> Point {
        Point::new(self.x * rhs, self.y * rhs)
    }
}

impl Neg for Point {
    type Output = Point;
    #[inline]
    fn neg(self) -> Point {
        Point::new(-self.x, -self.y)
    }
}

impl From<(f64, f64)> for Point {
    fn from((x, y): (f64, f64)) -> Self {
        Point::new(x, y)
    }
}

/// A nonempty multiset of finite planar points.
///
/// Repeated points are legal and every copy counts.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        if let Some(index) = points.iter().position(|p| !p.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { points })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; a `PointSet` holds at least one point.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    #[inline]
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// Applies `f` to every point.
    pub fn map(&self, f: impl Fn(Point) -> Point) -> Result<PointSet> {
        PointSet::new(self.points.iter().map(|&p| f(p)).collect())
    }

    /// Each point repeated `copies` times, copies kept adjacent.
    pub fn stacked(&self, copies: usize) -> Result<PointSet> {
        let points = self
            .points
            .iter()
            .flat_map(|&p| core::iter::repeat_n(p, copies))
            .collect();
        PointSet::new(points)
    }

    pub fn centroid(&self) -> Point {
        let sum = self.points.iter().fold(Point::ORIGIN, |acc, &p| acc + p);
        sum * (1.0 / self.points.len() as f64)
    }
}

impl TryFrom<Vec<Point>> for PointSet {
    type Error = Error;

    fn try_from(points: Vec<Point>) -> Result<Self> {
        PointSet::new(points)
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = core::slice::Iter<'a, Point>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// A closed disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    #[inline]
    pub const fn new(center: Point, radius: f64) -> Self {
        Self { center, radius }
    }

    /// Plain `distance <= radius`.
    #[inline]
    pub fn contains(&self, p: Point) -> bool {
        p.distance(self.center) <= self.radius
    }
}

/// How boundary points are adjudicated when counting.
///
/// `Inflated(τ)` counts points within `r + τ`, `Deflated(τ)` within `r - τ`.
/// For every `τ > 0` the deflated count is at most the exact count, which is
/// at most the inflated count.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum CountMode {
    #[default]
    Exact,
    Inflated(f64),
    Deflated(f64),
}

impl CountMode {
    /// The radius actually compared against for a query radius `r`.
    pub fn effective_radius(self, r: f64) -> Result<f64> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::InvalidRadius(r));
        }
        match self {
            CountMode::Exact => Ok(r),
            CountMode::Inflated(tau) if tau.is_finite() && tau > 0.0 => Ok(r + tau),
            CountMode::Deflated(tau) if tau.is_finite() && tau > 0.0 && tau < r => Ok(r - tau),
            CountMode::Inflated(tau) | CountMode::Deflated(tau) => {
                Err(Error::InvalidSlack { tau, radius: r })
            }
        }
    }
}

/// Largest pairwise distance (all pairs).
pub fn diameter(set: &PointSet) -> f64 {
    let pts = set.points();
    let mut best = 0.0f64;
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            best = best.max(p.distance_sq(q));
        }
    }
    sqrt(best)
}

/// Circle through three non-collinear points.
pub fn circumcircle(a: Point, b: Point, c: Point) -> Result<Disk> {
    let ab = b - a;
    let ac = c - a;
    let cross = ab.cross(ac);
    if cross.abs() <= COLLINEAR_EPS {
        return Err(Error::Degenerate(
            "circumcircle of collinear or coincident points",
        ));
    }
    let d = 2.0 * cross;
    let ab2 = ab.norm_sq();
    let ac2 = ac.norm_sq();
    let offset = Point::new((ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d);
    Ok(Disk::new(a + offset, offset.norm()))
}

fn diametral(a: Point, b: Point) -> Disk {
    Disk::new(a.midpoint(b), 0.5 * a.distance(b))
}

#[inline]
fn encloses(disk: &Disk, p: Point) -> bool {
    p.distance(disk.center) <= disk.radius + ENCLOSE_EPS
}

/// Minimum-radius closed disk containing every point (incremental Welzl).
pub fn smallest_enclosing_circle(set: &PointSet) -> Disk {
    let pts = set.points();
    let mut disk = Disk::new(pts[0], 0.0);
    for i in 1..pts.len() {
        if encloses(&disk, pts[i]) {
            continue;
        }
        disk = Disk::new(pts[i], 0.0);
        for j in 0..i {
            if encloses(&disk, pts[j]) {
                continue;
            }
            disk = diametral(pts[i], pts[j]);
            for k in 0..j {
                if encloses(&disk, pts[k]) {
                    continue;
                }
                disk = circumcircle(pts[i], pts[j], pts[k]).unwrap_or_else(|_| {
                    // Numerically collinear: the widest pair spans the triple.
                    let pairs = [(pts[i], pts[j]), (pts[i], pts[k]), (pts[j], pts[k])];
                    let (a, b) = pairs
                        .into_iter()
                        .max_by(|x, y| x.0.distance_sq(x.1).total_cmp(&y.0.distance_sq(y.1)))
                        .unwrap();
                    diametral(a, b)
                });
            }
        }
    }
    disk
}

enum PairCenters {
    None,
    One(Point),
    Two(Point, Point),
}

/// Centers of radius-`r` circles through both `p` and `q`.
fn pair_centers(p: Point, q: Point, r: f64) -> PairCenters {
    let d = p.distance(q);
    if d == 0.0 || d > 2.0 * r + TANGENT_EPS {
        return PairCenters::None;
    }
    let mid = p.midpoint(q);
    if (d - 2.0 * r).abs() <= TANGENT_EPS {
        return PairCenters::One(mid);
    }
    let h = sqrt(r * r - 0.25 * d * d);
    let normal = (q - p).perp() * (1.0 / d);
    PairCenters::Two(mid + normal * h, mid - normal * h)
}

/// All points of `set`, then for each pair at distance `0 < d <= 2r` the
/// centers of the radius-`r` circles through both.
pub fn candidate_centers(set: &PointSet, r: f64) -> Vec<Point> {
    let pts = set.points();
    let mut out = pts.to_vec();
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            match pair_centers(p, q, r) {
                PairCenters::None => {}
                PairCenters::One(c) => out.push(c),
                PairCenters::Two(a, b) => {
                    out.push(a);
                    out.push(b);
                }
            }
        }
    }
    out
}

/// Result of a maximum coverage query. The witness disk has the query radius;
/// its center attains `count` under the query's [`CountMode`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coverage {
    pub count: usize,
    pub witness: Disk,
}

/// Number of points of `set` within the mode-adjusted radius of `disk`.
pub fn count_covered(set: &PointSet, disk: &Disk, mode: CountMode) -> Result<usize> {
    let rho = mode.effective_radius(disk.radius)?;
    Ok(set
        .iter()
        .filter(|p| p.distance(disk.center) <= rho)
        .count())
}

/// Maximum number of points (with multiplicity) coverable by one closed disk
/// of radius `r`, by angular sweep.
///
/// For each pivot point the centers on the circle of radius `r` around it
/// that also cover another point form an arc; the best center on that circle
/// lies where most arcs overlap. Arc endpoints are inclusive.
pub fn max_coverage(set: &PointSet, r: f64, mode: CountMode) -> Result<Coverage> {
    const START: u8 = 0;
    const END: u8 = 1;

    let rho = mode.effective_radius(r)?;
    let pts = set.points();
    let mut best = Coverage {
        count: 0,
        witness: Disk::new(pts[0], r),
    };
    let mut events: Vec<(f64, u8)> = Vec::with_capacity(2 * pts.len());

    for &pivot in pts {
        events.clear();
        let mut base = 0usize;
        let mut wrapped = 0usize;
        for &q in pts {
            let d = pivot.distance(q);
            if d == 0.0 {
                base += 1;
                continue;
            }
            if d > 2.0 * rho + TANGENT_EPS {
                continue;
            }
            let half = acos((d / (2.0 * rho)).min(1.0));
            let dir = atan2(q.y - pivot.y, q.x - pivot.x);
            let mut start = dir - half;
            if start < 0.0 {
                start += TAU;
            }
            if start >= TAU {
                start -= TAU;
            }
            let end = start + 2.0 * half;
            events.push((start, START));
            if end >= TAU {
                wrapped += 1;
                events.push((end - TAU, END));
            } else {
                events.push((end, END));
            }
        }

        if events.is_empty() {
            if base > best.count {
                best = Coverage {
                    count: base,
                    witness: Disk::new(pivot, r),
                };
            }
            continue;
        }

        events.sort_by(|a, b| match a.0.total_cmp(&b.0) {
            Ordering::Equal => a.1.cmp(&b.1),
            other => other,
        });

        let mut active = wrapped;
        if base + active > best.count {
            best = Coverage {
                count: base + active,
                witness: Disk::new(pivot + Point::polar(rho, 0.0), r),
            };
        }
        for &(angle, kind) in &events {
            if kind == START {
                active += 1;
                if base + active > best.count {
                    best = Coverage {
                        count: base + active,
                        witness: Disk::new(pivot + Point::polar(rho, angle), r),
                    };
                }
            } else {
                active -= 1;
            }
        }
    }
    Ok(best)
}

/// Same quantity as [`max_coverage`], computed by counting at every
/// candidate center.
///
/// Points that define a candidate center lie on its circle by construction
/// and are counted without a distance test.
pub fn max_coverage_brute(set: &PointSet, r: f64, mode: CountMode) -> Result<Coverage> {
    let rho = mode.effective_radius(r)?;
    let pts = set.points();
    let mut best = Coverage {
        count: 0,
        witness: Disk::new(pts[0], r),
    };
    let mut consider = |center: Point, defining: Option<(Point, Point)>| {
        let count = pts
            .iter()
            .filter(|&&p| {
                defining.is_some_and(|(a, b)| p == a || p == b) || p.distance(center) <= rho
            })
            .count();
        if count > best.count {
            best = Coverage {
                count,
                witness: Disk::new(center, r),
            };
        }
    };

    for &p in pts {
        consider(p, None);
    }
    for (i, &p) in pts.iter().enumerate() {
        for &q in &pts[i + 1..] {
            match pair_centers(p, q, rho) {
                PairCenters::None => {}
                PairCenters::One(c) => consider(c, Some((p, q))),
                PairCenters::Two(a, b) => {
                    consider(a, Some((p, q)));
                    consider(b, Some((p, q)));
                }
            }
        }
    }
    Ok(best)
}

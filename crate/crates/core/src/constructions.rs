//! Point sets that keep the best single-disk coverage small.
//!
//! Every generator returns a set of diameter at most 1 and is deterministic.
//! Reuleaux-based sets use the canonical placement `U = (0, 0)`, `V = (1, 0)`,
//! `W = (1/2, √3/2)`, with arc positions measured by arc length.

use alloc::format;
use alloc::vec::Vec;

use libm::{asin, ceil, floor, sin, sqrt};

use crate::error::{Error, Result};
use crate::geom::{circumcircle, Point, PointSet};

const PI: f64 = core::f64::consts::PI;
const FRAC_PI_3: f64 = core::f64::consts::FRAC_PI_3;

pub const DEFAULT_EPSILON: f64 = 0.02;
pub const DEFAULT_DELTA: f64 = 1e-4;
/// Inner radius of the concentric construction and the outward shift of the
/// six-point configuration.
pub const SMALL_EPSILON: f64 = 0.005;
pub const SQUARE_SIDE: f64 = 0.7;

/// Arc-parameter resolution of the chain bisection.
const CHAIN_RESOLUTION: f64 = 1e-10;
const MAX_RESTARTS: u32 = 50;

/// One of the three boundary arcs of a Reuleaux triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arc {
    /// From `U` to `V`, centered at `W`.
    UV,
    /// From `V` to `W`, centered at `U`.
    VW,
    /// From `W` to `U`, centered at `V`.
    WU,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReuleauxTriangle {
    pub u: Point,
    pub v: Point,
    pub w: Point,
    pub width: f64,
}

impl Default for ReuleauxTriangle {
    fn default() -> Self {
        Self::new(1.0)
    }
}

impl ReuleauxTriangle {
    /// Canonical placement scaled to `width`.
    pub fn new(width: f64) -> Self {
        Self {
            u: Point::ORIGIN,
            v: Point::new(width, 0.0),
            w: Point::new(0.5 * width, 0.5 * sqrt(3.0) * width),
            width,
        }
    }

    /// Length of each boundary arc.
    pub fn arc_length(&self) -> f64 {
        FRAC_PI_3 * self.width
    }

    pub fn centroid(&self) -> Point {
        (self.u + self.v + self.w) * (1.0 / 3.0)
    }

    /// Point at arc length `s` from the arc's starting vertex.
    pub fn arc_point(&self, arc: Arc, s: f64) -> Point {
        let (center, start) = match arc {
            Arc::UV => (self.w, -2.0 * FRAC_PI_3),
            Arc::VW => (self.u, 0.0),
            Arc::WU => (self.v, 2.0 * FRAC_PI_3),
        };
        center + Point::polar(self.width, start + s / self.width)
    }

    pub fn arc_midpoint(&self, arc: Arc) -> Point {
        self.arc_point(arc, 0.5 * self.arc_length())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstructionParams {
    pub n: usize,
    pub epsilon: f64,
    pub delta: f64,
}

impl ConstructionParams {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            epsilon: DEFAULT_EPSILON,
            delta: DEFAULT_DELTA,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Domain("n must be at least 1".into()));
        }
        check_epsilon(self.epsilon)?;
        if !(self.delta > 0.0 && self.delta < 0.01) {
            return Err(Error::Domain(format!(
                "delta must lie in (0, 0.01), got {}",
                self.delta
            )));
        }
        Ok(())
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < 0.1 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "epsilon must lie in (0, 0.1), got {epsilon}"
        )))
    }
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n >= min {
        Ok(())
    } else {
        Err(Error::Domain(format!("n must be at least {min}, got {n}")))
    }
}

/// `n` points spread over `anchors` as evenly as possible, the remainder
/// going one each to the leading anchors. Copies of an anchor are adjacent.
fn distribute(anchors: &[Point], n: usize) -> Result<PointSet> {
    let k = anchors.len();
    let mut points = Vec::with_capacity(n);
    for (i, &a) in anchors.iter().enumerate() {
        let copies = n / k + usize::from(i < n % k);
        points.extend(core::iter::repeat_n(a, copies));
    }
    PointSet::new(points)
}

/// `n` points at angles `2πi/n` on the circle of `radius` about the origin.
fn regular(n: usize, radius: f64) -> impl Iterator<Item = Point> {
    (0..n).map(move |i| Point::polar(radius, 2.0 * PI * i as f64 / n as f64))
}

/// `n` points stacked on the vertices of a unit equilateral triangle.
pub fn triangle_construction(n: usize) -> Result<PointSet> {
    check_n(n, 1)?;
    let t = ReuleauxTriangle::default();
    distribute(&[t.u, t.v, t.w], n)
}

/// `n` equally spaced points on the circle of radius 1/2.
pub fn uniform_circle_construction(n: usize) -> Result<PointSet> {
    check_n(n, 1)?;
    PointSet::new(regular(n, 0.5).collect())
}

/// Most points of [`uniform_circle_construction`] a radius-`r` disk can
/// cover, `⌈(n/π)·arcsin(2r)⌉`.
///
/// Values within `1e-9` of an integer are snapped to it before the ceiling,
/// so tangent configurations such as `r = √2/4, n = 28` give 7, not 8.
pub fn uniform_circle_bound(n: usize, r: f64) -> Result<usize> {
    check_n(n, 1)?;
    if !(r > 0.0 && r < 0.5) {
        return Err(Error::Domain(format!(
            "radius must lie in (0, 1/2), got {r}"
        )));
    }
    let x = n as f64 * asin(2.0 * r) / PI;
    let nearest = libm::round(x);
    let k = if (x - nearest).abs() <= 1e-9 {
        nearest
    } else {
        ceil(x)
    };
    Ok((k as usize).max(1))
}

/// Reuleaux vertices plus, on each arc, the two points at arc length
/// `epsilon` from its ends.
pub fn reuleaux_nine(epsilon: f64) -> Result<PointSet> {
    check_epsilon(epsilon)?;
    let t = ReuleauxTriangle::default();
    let far = t.arc_length() - epsilon;
    let mut points = alloc::vec![t.u, t.v, t.w];
    for arc in [Arc::UV, Arc::VW, Arc::WU] {
        points.push(t.arc_point(arc, epsilon));
        points.push(t.arc_point(arc, far));
    }
    PointSet::new(points)
}

/// Output of [`reuleaux_3n`].
#[derive(Debug, Clone, PartialEq)]
pub struct Reuleaux3n {
    /// `X_1..X_n` on arc `UV`, then `Y_1..Y_n` on `VW`, then `Z_1..Z_n` on `WU`.
    pub points: PointSet,
    /// Arc parameters `t_1 < ... < t_n`, shared by the three families.
    pub params: Vec<f64>,
    /// `circumradius(X_i, Y_i, Y_{i+1}) - 1/2` for `i < n`.
    pub chain_slacks: Vec<f64>,
    /// Starting offset that succeeded.
    pub epsilon: f64,
    /// Restarts used (0 when the first attempt succeeded).
    pub restarts: u32,
}

/// Distance along each arc, from its start, up to which points stay outside
/// the radius-1/2 circle about the centroid.
pub fn reuleaux_outer_limit() -> f64 {
    let t = ReuleauxTriangle::default();
    let g = t.centroid();
    let (mut lo, mut hi) = (0.0, 0.5 * t.arc_length());
    while hi - lo > 1e-15 {
        let mid = 0.5 * (lo + hi);
        if t.arc_point(Arc::UV, mid).distance(g) > 0.5 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

fn chain_circumradius(t: &ReuleauxTriangle, ti: f64, next: f64) -> f64 {
    let x = t.arc_point(Arc::UV, ti);
    let y = t.arc_point(Arc::VW, ti);
    let y_next = t.arc_point(Arc::VW, next);
    circumcircle(x, y, y_next).map_or(f64::INFINITY, |d| d.radius)
}

fn chain_params(
    t: &ReuleauxTriangle,
    n: usize,
    epsilon: f64,
    delta: f64,
    limit: f64,
) -> Option<Vec<f64>> {
    let target = 0.5 + delta;
    let mut params = Vec::with_capacity(n);
    params.push(epsilon);
    for _ in 1..n {
        let ti = *params.last().unwrap();
        if chain_circumradius(t, ti, limit) < target {
            return None;
        }
        let (mut lo, mut hi) = (ti, limit);
        while hi - lo > CHAIN_RESOLUTION {
            let mid = 0.5 * (lo + hi);
            if chain_circumradius(t, ti, mid) >= target {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        params.push(hi);
    }
    Some(params)
}

/// `3n` points with 3-fold symmetry, `n` per arc, such that consecutive
/// triples `X_i, Y_i, Y_{i+1}` have circumradius at least `1/2 + delta`.
///
/// `X_1` sits at arc length `epsilon` from `U`; each next parameter is the
/// smallest advance (by bisection) meeting the circumradius target. All
/// parameters must stay outside the radius-1/2 circle about the centroid.
/// On failure the placement restarts with `epsilon` halved.
pub fn reuleaux_3n(params: ConstructionParams) -> Result<Reuleaux3n> {
    params.validate()?;
    let t = ReuleauxTriangle::default();
    let limit = reuleaux_outer_limit();
    let mut epsilon = params.epsilon;
    for restarts in 0..=MAX_RESTARTS {
        if epsilon < limit {
            if let Some(ts) = chain_params(&t, params.n, epsilon, params.delta, limit) {
                let mut points = Vec::with_capacity(3 * params.n);
                for arc in [Arc::UV, Arc::VW, Arc::WU] {
                    points.extend(ts.iter().map(|&s| t.arc_point(arc, s)));
                }
                let chain_slacks = ts
                    .windows(2)
                    .map(|w| chain_circumradius(&t, w[0], w[1]) - 0.5)
                    .collect();
                return Ok(Reuleaux3n {
                    points: PointSet::new(points)?,
                    params: ts,
                    chain_slacks,
                    epsilon,
                    restarts,
                });
            }
        }
        if restarts < MAX_RESTARTS {
            epsilon *= 0.5;
        }
    }
    Err(Error::ConstructionFailure {
        n: params.n,
        attempts: MAX_RESTARTS + 1,
        epsilon,
        delta: params.delta,
    })
}

/// `⌊6n/7⌋` points on the radius-1/2 circle and `⌈n/7⌉` on the concentric
/// radius-`epsilon` circle.
pub fn concentric_construction(n: usize, epsilon: f64) -> Result<PointSet> {
    check_n(n, 7)?;
    if !(epsilon > 0.0 && epsilon <= 0.01) {
        return Err(Error::Domain(format!(
            "epsilon must lie in (0, 0.01], got {epsilon}"
        )));
    }
    let outer = 6 * n / 7;
    let inner = n - outer;
    PointSet::new(regular(outer, 0.5).chain(regular(inner, epsilon)).collect())
}

/// Largest inner radius for which no radius-1/4 disk holding two outer points
/// of [`concentric_construction`] reaches the center, halved, and capped at
/// 0.005.
pub fn concentric_epsilon(n: usize) -> f64 {
    let outer = (6 * n / 7).max(1);
    let half = PI / outer as f64;
    let r = 0.25;
    let chord_half = 0.5 * sin(half);
    if chord_half > r {
        return SMALL_EPSILON;
    }
    let reach = 0.5 * libm::cos(half) - sqrt(r * r - chord_half * chord_half) - r;
    SMALL_EPSILON.min(0.5 * reach)
}

/// `n ≤ 5`: a regular `n`-gon of diameter 1. `n = 6`: five points on the
/// circle of radius `1/2 + 0.005` and its center.
pub fn small_n_construction(n: usize) -> Result<PointSet> {
    match n {
        0 => Err(Error::Domain("n must be at least 1".into())),
        1 => PointSet::new(alloc::vec![Point::ORIGIN]),
        2..=5 => {
            let spread = sin(PI * floor(n as f64 / 2.0) / n as f64);
            PointSet::new(regular(n, 0.5 / spread).collect())
        }
        6 => PointSet::new(
            regular(5, 0.5 + SMALL_EPSILON)
                .chain(core::iter::once(Point::ORIGIN))
                .collect(),
        ),
        _ => Err(Error::Domain(format!("n must be at most 6, got {n}"))),
    }
}

/// The anchors `U, V, W, M1, M2`, where `M1` and `M2` are the midpoints of
/// arcs `UV` and `UW`.
pub fn reuleaux_midpoint_anchors() -> [Point; 5] {
    let t = ReuleauxTriangle::default();
    [
        t.u,
        t.v,
        t.w,
        t.arc_midpoint(Arc::UV),
        t.arc_midpoint(Arc::WU),
    ]
}

/// `n` points over [`reuleaux_midpoint_anchors`], remainder in anchor order.
pub fn reuleaux_midpoint_construction(n: usize) -> Result<PointSet> {
    check_n(n, 1)?;
    distribute(&reuleaux_midpoint_anchors(), n)
}

/// `n` points stacked on the corners of an axis-aligned square of side 0.7.
pub fn square_construction(n: usize) -> Result<PointSet> {
    check_n(n, 1)?;
    let s = SQUARE_SIDE;
    distribute(
        &[
            Point::new(0.0, 0.0),
            Point::new(s, 0.0),
            Point::new(s, s),
            Point::new(0.0, s),
        ],
        n,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{diameter, max_coverage, smallest_enclosing_circle, CountMode};

    const INFLATED: CountMode = CountMode::Inflated(1e-6);
    const DEFLATED: CountMode = CountMode::Deflated(1e-9);

    fn multiplicities(set: &PointSet) -> Vec<usize> {
        let mut out: Vec<(Point, usize)> = Vec::new();
        for &p in set {
            match out.iter_mut().find(|(q, _)| *q == p) {
                Some((_, c)) => *c += 1,
                None => out.push((p, 1)),
            }
        }
        out.into_iter().map(|(_, c)| c).collect()
    }

    fn count(set: &PointSet, r: f64, mode: CountMode) -> usize {
        max_coverage(set, r, mode).unwrap().count
    }

    #[test]
    fn reuleaux_geometry() {
        let t = ReuleauxTriangle::default();
        for (a, b) in [(t.u, t.v), (t.v, t.w), (t.u, t.w)] {
            assert!((a.distance(b) - 1.0).abs() < 1e-12);
        }
        for arc in [Arc::UV, Arc::VW, Arc::WU] {
            let start = t.arc_point(arc, 0.0);
            let end = t.arc_point(arc, t.arc_length());
            let (a, b) = match arc {
                Arc::UV => (t.u, t.v),
                Arc::VW => (t.v, t.w),
                Arc::WU => (t.w, t.u),
            };
            assert!(start.distance(a) < 1e-15 && end.distance(b) < 1e-15);
        }
        let [_, _, _, m1, m2] = reuleaux_midpoint_anchors();
        assert!(m1.distance(Point::new(0.5, sqrt(3.0) / 2.0 - 1.0)) < 1e-15);
        assert!(m2.distance(Point::new(1.0 - sqrt(3.0) / 2.0, 0.5)) < 1e-15);
    }

    #[test]
    fn triangle_multiplicities_and_counts() {
        assert_eq!(
            multiplicities(&triangle_construction(9).unwrap()),
            [3, 3, 3]
        );
        assert_eq!(
            multiplicities(&triangle_construction(10).unwrap()),
            [4, 3, 3]
        );
        assert_eq!(
            multiplicities(&triangle_construction(11).unwrap()),
            [4, 4, 3]
        );
        let t30 = triangle_construction(30).unwrap();
        assert_eq!(count(&t30, 0.45, CountMode::Exact), 10);
        assert_eq!(count(&t30, 0.52, CountMode::Exact), 20);
        assert_eq!(count(&t30, 0.58, CountMode::Exact), 30);
        for n in 1..20 {
            let t = triangle_construction(n).unwrap();
            assert_eq!(count(&t, 0.44, CountMode::Exact), n.div_ceil(3));
            assert_eq!(count(&t, 0.499, CountMode::Exact), n.div_ceil(3));
            assert_eq!(count(&t, 0.5, CountMode::Exact), (2 * n).div_ceil(3));
            assert_eq!(count(&t, 0.57, CountMode::Exact), (2 * n).div_ceil(3));
        }
        assert!(triangle_construction(0).is_err());
    }

    #[test]
    fn uniform_circle_examples() {
        let sq = uniform_circle_construction(4).unwrap();
        let expect = [(0.5, 0.0), (0.0, 0.5), (-0.5, 0.0), (0.0, -0.5)];
        for (p, (x, y)) in sq.iter().zip(expect) {
            assert!(p.distance(Point::new(x, y)) < 1e-15);
        }
        assert!((diameter(&uniform_circle_construction(6).unwrap()) - 1.0).abs() < 1e-12);
        assert!(diameter(&uniform_circle_construction(7).unwrap()) < 1.0 - 1e-3);

        let c28 = uniform_circle_construction(28).unwrap();
        assert!(count(&c28, sqrt(2.0) / 4.0, DEFLATED) <= 7);
        // The closed disk reaches one more point on the tangent chord.
        assert_eq!(count(&c28, sqrt(2.0) / 4.0, CountMode::Exact), 8);
    }

    #[test]
    fn uniform_circle_bound_examples() {
        assert_eq!(uniform_circle_bound(28, sqrt(2.0) / 4.0), Ok(7));
        assert_eq!(uniform_circle_bound(7, 1e-300), Ok(1));
        assert_eq!(uniform_circle_bound(20, 0.25), Ok(4));
        assert!(uniform_circle_bound(20, 0.5).is_err());
        assert!(uniform_circle_bound(20, 0.0).is_err());

        let c20 = uniform_circle_construction(20).unwrap();
        assert!(count(&c20, 0.25, CountMode::Exact) <= 4);
        let c12 = uniform_circle_construction(12).unwrap();
        for i in 1..100 {
            let r = 0.005 * i as f64;
            let bound = uniform_circle_bound(12, r).unwrap();
            assert!(count(&c12, r, DEFLATED) <= bound);
            assert!(count(&c12, r, CountMode::Exact) <= bound + 1);
        }
        // At r = 1/4 the 60° chord equals 2r: the closed disk takes one extra point.
        assert_eq!(uniform_circle_bound(12, 0.25), Ok(2));
        assert_eq!(count(&c12, 0.25, CountMode::Exact), 3);
    }

    #[test]
    fn nine_points() {
        let p = reuleaux_nine(0.02).unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(multiplicities(&p).len(), 9);
        assert!(diameter(&p) <= 1.0 + 1e-12);
        assert_eq!(count(&p, 0.5, DEFLATED), 4);
        assert_eq!(count(&p.stacked(3).unwrap(), 0.5, DEFLATED), 12);
        // U and any point of arc VW are exactly 1 apart, so the closed disk on
        // that diameter also takes both points of arc UV and the one near U on WU.
        assert_eq!(count(&p, 0.5, CountMode::Exact), 5);
        assert_eq!(count(&p, 0.5, INFLATED), 5);
        assert!(reuleaux_nine(0.1).is_err());
    }

    #[test]
    fn chain_for_small_n() {
        for n in 1..=2 {
            let c = reuleaux_3n(ConstructionParams::new(n)).unwrap();
            assert_eq!(c.points.len(), 3 * n);
            assert!(diameter(&c.points) <= 1.0 + 1e-12);
            assert!(c.chain_slacks.iter().all(|&s| s >= DEFAULT_DELTA));
            assert!(c.params.windows(2).all(|w| w[0] < w[1]));
            assert!(count(&c.points, 0.5, INFLATED) <= n + 1);
            let g = ReuleauxTriangle::default().centroid();
            assert!(c.points.iter().all(|p| p.distance(g) > 0.5));
        }
    }

    #[test]
    fn chain_failure_is_reported() {
        let err = reuleaux_3n(ConstructionParams::new(6)).unwrap_err();
        assert!(matches!(
            err,
            Error::ConstructionFailure {
                n: 6,
                attempts: 51,
                ..
            }
        ));
    }

    #[test]
    fn outer_limit_matches_circle() {
        let t = ReuleauxTriangle::default();
        let s = reuleaux_outer_limit();
        assert!((t.arc_point(Arc::UV, s).distance(t.centroid()) - 0.5).abs() < 1e-12);
        assert!((s - 0.1702).abs() < 1e-3);
    }

    #[test]
    fn concentric_counts() {
        for (n, expect) in [(7, 2), (14, 2), (21, 3)] {
            let p = concentric_construction(n, 0.001).unwrap();
            assert_eq!(p.len(), n);
            assert!(diameter(&p) <= 1.0 + 1e-12);
            assert_eq!(count(&p, 0.25, DEFLATED), expect);
        }
        // Three outer points 30° apart fit in the closed disk on the 0.5 chord.
        let p = concentric_construction(14, 0.005).unwrap();
        assert_eq!(count(&p, 0.25, CountMode::Exact), 3);
        assert!(concentric_construction(6, 0.001).is_err());
        assert!(concentric_construction(14, 0.02).is_err());
    }

    #[test]
    fn concentric_epsilon_stays_clear() {
        assert_eq!(concentric_epsilon(7), SMALL_EPSILON);
        let eps = concentric_epsilon(28);
        assert!(eps < 0.0025 && eps > 0.002);
        for n in 7..=60 {
            let p = concentric_construction(n, concentric_epsilon(n)).unwrap();
            let expect = if n == 7 { 2 } else { n.div_ceil(7) };
            assert_eq!(count(&p, 0.25, DEFLATED), expect, "n = {n}");
        }
    }

    #[test]
    fn small_n_counts() {
        for n in 1..=6 {
            let p = small_n_construction(n).unwrap();
            assert_eq!(p.len(), n);
            assert!(diameter(&p) <= 1.0 + 1e-12);
            if (2..=5).contains(&n) {
                assert!((diameter(&p) - 1.0).abs() < 1e-12);
            }
            assert_eq!(count(&p, 0.25, INFLATED), 1);
        }
        assert!(small_n_construction(7).is_err());
    }

    #[test]
    fn midpoint_construction() {
        assert_eq!(
            multiplicities(&reuleaux_midpoint_construction(5).unwrap()),
            [1; 5]
        );
        assert_eq!(
            multiplicities(&reuleaux_midpoint_construction(13).unwrap()),
            [3, 3, 3, 2, 2]
        );
        let p = reuleaux_midpoint_construction(10).unwrap();
        assert!(diameter(&p) <= 1.0 + 1e-12);
        assert!(count(&p, 0.51, CountMode::Exact) <= 6);

        let [u, v, _, m1, m2] = reuleaux_midpoint_anchors();
        let sec = smallest_enclosing_circle(&PointSet::new(alloc::vec![u, v, m1, m2]).unwrap());
        assert!((sec.radius - (sqrt(3.0) - 1.0) / sqrt(2.0)).abs() < 1e-9);
    }

    #[test]
    fn square_examples() {
        let p = square_construction(16).unwrap();
        assert_eq!(multiplicities(&p), [4, 4, 4, 4]);
        assert!(diameter(&p) <= 1.0);
        assert_eq!(count(&p, 1.0 / 3.0, CountMode::Exact), 4);
        assert_eq!(
            count(
                &square_construction(4).unwrap(),
                1.0 / 3.0,
                CountMode::Exact
            ),
            1
        );
        let p = square_construction(17).unwrap();
        assert_eq!(multiplicities(&p), [5, 4, 4, 4]);
        assert_eq!(count(&p, 1.0 / 3.0, CountMode::Exact), 5);
    }

    #[test]
    fn generators_are_deterministic() {
        assert_eq!(reuleaux_nine(0.03).unwrap(), reuleaux_nine(0.03).unwrap());
        assert_eq!(
            reuleaux_3n(ConstructionParams::new(2)).unwrap(),
            reuleaux_3n(ConstructionParams::new(2)).unwrap()
        );
        assert_eq!(
            concentric_construction(30, 0.004).unwrap(),
            concentric_construction(30, 0.004).unwrap()
        );
    }
}

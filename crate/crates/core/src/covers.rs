//! Universal covers, disk coverings of them, and pigeonhole lower bounds.
//!
//! Every set of diameter at most 1 fits, after a rigid motion, inside the
//! regular hexagon of width 1 and inside the unit square. If `k` disks of
//! radius `r` cover such a region, one of them holds at least `⌈n/k⌉` of the
//! `n` embedded points.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use libm::{ceil, sqrt};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{diameter, smallest_enclosing_circle, Point, PointSet};

const FRAC_PI_3: f64 = core::f64::consts::FRAC_PI_3;
const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// Containment tolerance for embedded points.
pub const EMBED_TOL: f64 = 1e-9;
/// Rotation samples over `[0, π/3]` (step just under `10⁻³` rad).
const EMBED_STEPS: usize = 1048;
/// Deepest subdivision of a grid cell before a region is left unverified.
const MAX_DEPTH: u32 = 20;
/// Default grid step for certification.
pub const DEFAULT_GRID_H: f64 = 1e-3;
/// Radius slack added to optimized coverings before certification.
pub const OPTIMIZE_SLACK: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConvexRegion {
    /// Regular hexagon centered at the origin with horizontal top and bottom
    /// sides; `width` is the distance between opposite sides.
    Hexagon { width: f64 },
    /// Axis-aligned square with a corner at the origin.
    Square { side: f64 },
}

impl ConvexRegion {
    pub const UNIT_HEXAGON: ConvexRegion = ConvexRegion::Hexagon { width: 1.0 };
    pub const UNIT_SQUARE: ConvexRegion = ConvexRegion::Square { side: 1.0 };

    pub fn validate(&self) -> Result<()> {
        let size = match *self {
            ConvexRegion::Hexagon { width } => width,
            ConvexRegion::Square { side } => side,
        };
        if size.is_finite() && size > 0.0 {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "region size must be positive, got {size}"
            )))
        }
    }

    /// Vertices in counter-clockwise order.
    pub fn vertices(&self) -> Vec<Point> {
        match *self {
            ConvexRegion::Hexagon { width } => {
                let circumradius = width / SQRT_3;
                (0..6)
                    .map(|i| Point::polar(circumradius, FRAC_PI_3 * i as f64))
                    .collect()
            }
            ConvexRegion::Square { side } => vec![
                Point::new(0.0, 0.0),
                Point::new(side, 0.0),
                Point::new(side, side),
                Point::new(0.0, side),
            ],
        }
    }

    /// Outward unit normals `a` and offsets `b` with the region equal to the
    /// intersection of `a·p <= b`.
    fn half_planes(&self) -> Vec<(Point, f64)> {
        match *self {
            ConvexRegion::Hexagon { width } => (0..6)
                .map(|i| {
                    let angle = FRAC_PI_3 * (i as f64 + 0.5);
                    (Point::polar(1.0, angle), 0.5 * width)
                })
                .collect(),
            ConvexRegion::Square { side } => vec![
                (Point::new(1.0, 0.0), side),
                (Point::new(0.0, 1.0), side),
                (Point::new(-1.0, 0.0), 0.0),
                (Point::new(0.0, -1.0), 0.0),
            ],
        }
    }

    /// Lower-left and upper-right corners of the bounding box.
    pub fn bounding_box(&self) -> (Point, Point) {
        let vs = self.vertices();
        let mut lo = vs[0];
        let mut hi = vs[0];
        for v in &vs[1..] {
            lo = Point::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Point::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        (lo, hi)
    }

    /// Uniform sample by rejection from the bounding box.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Point {
        let (lo, hi) = self.bounding_box();
        loop {
            let p = Point::new(
                lo.x + (hi.x - lo.x) * rng.random::<f64>(),
                lo.y + (hi.y - lo.y) * rng.random::<f64>(),
            );
            if region_contains(self, p, 0.0) {
                return p;
            }
        }
    }
}

/// Whether `p` lies in `region` dilated by `tol` (edge half-plane tests).
pub fn region_contains(region: &ConvexRegion, p: Point, tol: f64) -> bool {
    region
        .half_planes()
        .iter()
        .all(|&(a, b)| a.dot(p) <= b + tol)
}

/// Rotation about the origin followed by a translation.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RigidMotion {
    pub rotation: f64,
    pub translation: Point,
}

impl RigidMotion {
    pub const IDENTITY: RigidMotion = RigidMotion {
        rotation: 0.0,
        translation: Point::ORIGIN,
    };

    pub fn new(rotation: f64, translation: Point) -> Self {
        Self {
            rotation,
            translation,
        }
    }

    #[inline]
    pub fn apply(&self, p: Point) -> Point {
        p.rotate(self.rotation) + self.translation
    }

    pub fn apply_set(&self, set: &PointSet) -> Result<PointSet> {
        set.map(|p| self.apply(p))
    }

    pub fn inverse(&self) -> RigidMotion {
        RigidMotion {
            rotation: -self.rotation,
            translation: (-self.translation).rotate(-self.rotation),
        }
    }
}

/// Strip normals at 30°, 90° and 150°; the first plus the last is the middle.
fn strip_normals() -> [Point; 3] {
    [
        Point::new(0.5 * SQRT_3, 0.5),
        Point::new(0.0, 1.0),
        Point::new(-0.5 * SQRT_3, 0.5),
    ]
}

/// For a rotation `theta`, the admissible intervals of the translation's
/// projections onto the three strip normals.
fn strip_intervals(points: &[Point], theta: f64, width: f64) -> [(f64, f64); 3] {
    let normals = strip_normals();
    let half = 0.5 * width;
    let mut out = [(0.0, 0.0); 3];
    for (slot, n) in out.iter_mut().zip(normals) {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        for p in points {
            let t = n.dot(p.rotate(theta));
            min = min.min(t);
            max = max.max(t);
        }
        *slot = (-half - min, half - max);
    }
    out
}

/// Range of `a30 - a90 + a150` over the three intervals; a translation
/// exists iff it contains 0.
fn relation_range(iv: &[(f64, f64); 3]) -> (f64, f64) {
    (iv[0].0 - iv[1].1 + iv[2].0, iv[0].1 - iv[1].0 + iv[2].1)
}

fn translation_for(iv: &[(f64, f64); 3]) -> Point {
    let (lo, hi) = relation_range(iv);
    let lambda = if hi > lo {
        (-lo / (hi - lo)).clamp(0.0, 1.0)
    } else {
        0.5
    };
    let a30 = iv[0].0 + lambda * (iv[0].1 - iv[0].0);
    let a90 = iv[1].1 - lambda * (iv[1].1 - iv[1].0);
    Point::new((a30 - 0.5 * a90) / (0.5 * SQRT_3), a90)
}

/// A rigid motion taking `set` into the hexagon of width 1.
pub fn embed_in_hexagon(set: &PointSet) -> Result<RigidMotion> {
    embed_in_region(&ConvexRegion::UNIT_HEXAGON, set)
}

/// A rigid motion taking `set` into `region`.
///
/// For the hexagon, rotations over `[0, π/3]` are scanned and the one with
/// the widest feasibility margin is kept; if rounding leaves every sample
/// infeasible, the zero of the odd-under-60° imbalance is bisected instead.
pub fn embed_in_region(region: &ConvexRegion, set: &PointSet) -> Result<RigidMotion> {
    region.validate()?;
    let diam = diameter(set);
    let pts = set.points();
    let motion = match *region {
        ConvexRegion::Square { side } => {
            let (lo, hi) = bbox(pts);
            if hi.x - lo.x > side + EMBED_TOL || hi.y - lo.y > side + EMBED_TOL {
                return Err(Error::EmbeddingFailure { diameter: diam });
            }
            RigidMotion::new(0.0, -lo)
        }
        ConvexRegion::Hexagon { width } => {
            if diam > width + 1e-12 {
                return Err(Error::EmbeddingFailure { diameter: diam });
            }
            let margin = |iv: &[(f64, f64); 3]| {
                let (lo, hi) = relation_range(iv);
                (-lo).min(hi)
            };
            let mut best_theta = 0.0;
            let mut best_iv = strip_intervals(pts, 0.0, width);
            let mut best_margin = margin(&best_iv);
            for i in 1..=EMBED_STEPS {
                let theta = FRAC_PI_3 * i as f64 / EMBED_STEPS as f64;
                let iv = strip_intervals(pts, theta, width);
                let m = margin(&iv);
                if m > best_margin + 1e-12 {
                    best_theta = theta;
                    best_iv = iv;
                    best_margin = m;
                }
            }
            if best_margin < 0.0 {
                let imbalance = |theta: f64| {
                    let (lo, hi) = relation_range(&strip_intervals(pts, theta, width));
                    -lo - hi
                };
                let (mut a, mut b) = (0.0, FRAC_PI_3);
                let fa = imbalance(a);
                for _ in 0..200 {
                    let mid = 0.5 * (a + b);
                    if (imbalance(mid) > 0.0) == (fa > 0.0) {
                        a = mid;
                    } else {
                        b = mid;
                    }
                }
                best_theta = 0.5 * (a + b);
                best_iv = strip_intervals(pts, best_theta, width);
            }
            RigidMotion::new(best_theta, translation_for(&best_iv))
        }
    };
    if pts
        .iter()
        .all(|&p| region_contains(region, motion.apply(p), EMBED_TOL))
    {
        Ok(motion)
    } else {
        Err(Error::EmbeddingFailure { diameter: diam })
    }
}

fn bbox(pts: &[Point]) -> (Point, Point) {
    pts.iter().fold(
        (
            Point::new(f64::INFINITY, f64::INFINITY),
            Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        ),
        |(lo, hi), p| {
            (
                Point::new(lo.x.min(p.x), lo.y.min(p.y)),
                Point::new(hi.x.max(p.x), hi.y.max(p.y)),
            )
        },
    )
}

/// Keeps the part of a convex polygon with `a·p <= b`.
fn clip(poly: &[Point], a: Point, b: f64) -> Vec<Point> {
    let mut out = Vec::with_capacity(poly.len() + 1);
    for (i, &p) in poly.iter().enumerate() {
        let q = poly[(i + 1) % poly.len()];
        let fp = a.dot(p) - b;
        let fq = a.dot(q) - b;
        if fp <= 0.0 {
            out.push(p);
        }
        if (fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0) {
            let t = fp / (fp - fq);
            out.push(p + (q - p) * t);
        }
    }
    out
}

fn clip_to_box(poly: &[Point], lo: Point, hi: Point) -> Vec<Point> {
    let mut q = clip(poly, Point::new(1.0, 0.0), hi.x);
    if !q.is_empty() {
        q = clip(&q, Point::new(-1.0, 0.0), -lo.x);
    }
    if !q.is_empty() {
        q = clip(&q, Point::new(0.0, 1.0), hi.y);
    }
    if !q.is_empty() {
        q = clip(&q, Point::new(0.0, -1.0), -lo.y);
    }
    q
}

/// Outcome of [`verify_covering`].
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum Verification {
    #[default]
    Unverified,
    /// Every region point is covered; established on a grid of step `grid_h`.
    Certified { grid_h: f64 },
    /// `witness` lies in the region and outside every disk.
    Failed { witness: Point },
}

impl Verification {
    pub fn is_certified(&self) -> bool {
        matches!(self, Verification::Certified { .. })
    }
}

/// A region and `k` equal disks claimed to cover it.
#[derive(Debug, Clone, PartialEq)]
pub struct CoveringCertificate {
    pub region: ConvexRegion,
    /// Radius used for verification, possibly inflated above the exact value.
    pub radius: f64,
    /// The exact radius of the covering when known analytically.
    pub nominal_radius: Option<f64>,
    pub centers: Vec<Point>,
    pub provenance: String,
    pub verified: Verification,
}

impl CoveringCertificate {
    pub fn new(
        region: ConvexRegion,
        radius: f64,
        centers: Vec<Point>,
        provenance: impl Into<String>,
    ) -> Result<Self> {
        region.validate()?;
        if !(radius.is_finite() && radius > 0.0) {
            return Err(Error::InvalidRadius(radius));
        }
        if centers.is_empty() {
            return Err(Error::Domain(
                "a certificate needs at least one center".into(),
            ));
        }
        if let Some(index) = centers.iter().position(|c| !c.is_finite()) {
            return Err(Error::NonFinite { index });
        }
        Ok(Self {
            region,
            radius,
            nominal_radius: None,
            centers,
            provenance: provenance.into(),
            verified: Verification::Unverified,
        })
    }

    pub fn with_nominal(mut self, nominal: f64) -> Self {
        self.nominal_radius = Some(nominal);
        self
    }

    pub fn k(&self) -> usize {
        self.centers.len()
    }

    /// Radius at which the certificate supports a lower bound.
    pub fn claim_radius(&self) -> f64 {
        self.nominal_radius.unwrap_or(self.radius)
    }

    /// Runs [`verify_covering`] and stores the outcome.
    pub fn verified(mut self, h: f64) -> Self {
        self.verified = verify_covering(&self, h);
        self
    }
}

struct Verifier<'a> {
    centers: &'a [Point],
    r2: f64,
    radius: f64,
    unverified: bool,
}

impl Verifier<'_> {
    fn covered(&self, p: Point) -> bool {
        self.centers.iter().any(|&c| p.distance_sq(c) <= self.r2)
    }

    fn one_disk_holds(&self, poly: &[Point]) -> bool {
        self.centers
            .iter()
            .any(|&c| poly.iter().all(|&v| v.distance_sq(c) <= self.r2))
    }

    fn check(&mut self, poly: &[Point], lo: Point, hi: Point, depth: u32) -> Option<Point> {
        if poly.len() < 3 || self.one_disk_holds(poly) {
            return None;
        }
        let s = (hi.x - lo.x).max(hi.y - lo.y);
        let inner = self.radius - s * core::f64::consts::FRAC_1_SQRT_2;
        if inner > 0.0 {
            let inner2 = inner * inner;
            let corners = [lo, Point::new(hi.x, lo.y), hi, Point::new(lo.x, hi.y)];
            if corners
                .iter()
                .all(|&q| self.centers.iter().any(|&c| q.distance_sq(c) <= inner2))
            {
                return None;
            }
        }
        if let Some(&w) = poly.iter().find(|&&v| !self.covered(v)) {
            return Some(w);
        }
        if depth >= MAX_DEPTH {
            self.unverified = true;
            return None;
        }
        let mid = lo.midpoint(hi);
        let quads = [
            (lo, mid),
            (Point::new(mid.x, lo.y), Point::new(hi.x, mid.y)),
            (Point::new(lo.x, mid.y), Point::new(mid.x, hi.y)),
            (mid, hi),
        ];
        for (a, b) in quads {
            let sub = clip_to_box(poly, a, b);
            if let Some(w) = self.check(&sub, a, b, depth + 1) {
                return Some(w);
            }
        }
        None
    }
}

/// Decides whether the certificate's disks cover its region.
///
/// The bounding box is cut into square cells of side `h`; each cell is
/// clipped to the region. A cell passes when one disk holds every vertex of
/// the clipped polygon, or when every cell corner lies within
/// `radius - side/√2` of some center. Otherwise it is quartered, down to a
/// fixed depth. Any region point found outside all disks fails the
/// certificate; a cell still undecided at full depth leaves it unverified.
pub fn verify_covering(cert: &CoveringCertificate, h: f64) -> Verification {
    if !(h.is_finite() && h > 0.0) {
        return Verification::Unverified;
    }
    let region = cert.region.vertices();
    let (lo, hi) = cert.region.bounding_box();
    let nx = ceil((hi.x - lo.x) / h).max(1.0) as usize;
    let ny = ceil((hi.y - lo.y) / h).max(1.0) as usize;
    let mut v = Verifier {
        centers: &cert.centers,
        r2: cert.radius * cert.radius,
        radius: cert.radius,
        unverified: false,
    };
    let planes = cert.region.half_planes();
    for j in 0..ny {
        let y0 = lo.y + h * j as f64;
        let y1 = if j + 1 == ny { hi.y } else { y0 + h };
        for i in 0..nx {
            let x0 = lo.x + h * i as f64;
            let x1 = if i + 1 == nx { hi.x } else { x0 + h };
            let a = Point::new(x0, y0);
            let b = Point::new(x1, y1);
            let corners = [a, Point::new(x1, y0), b, Point::new(x0, y1)];
            let interior = corners
                .iter()
                .all(|&q| planes.iter().all(|&(n, off)| n.dot(q) <= off));
            let poly = if interior {
                corners.to_vec()
            } else {
                clip_to_box(&region, a, b)
            };
            if let Some(witness) = v.check(&poly, a, b, 0) {
                return Verification::Failed { witness };
            }
        }
    }
    if v.unverified {
        Verification::Unverified
    } else {
        Verification::Certified { grid_h: h }
    }
}

/// Part of `region` closer to `centers[i]` than to any other center.
fn voronoi_cell(region: &[Point], centers: &[Point], i: usize) -> Vec<Point> {
    let c = centers[i];
    let mut cell = region.to_vec();
    for (j, &d) in centers.iter().enumerate() {
        if j == i || d == c || cell.is_empty() {
            continue;
        }
        cell = clip(&cell, d - c, 0.5 * (d.norm_sq() - c.norm_sq()));
    }
    cell
}

/// Largest distance from a region point to its nearest center.
///
/// Exact up to rounding: within each clipped Voronoi cell the distance to
/// the cell's center is convex, so its maximum sits at a cell vertex.
pub fn covering_radius(region: &ConvexRegion, centers: &[Point]) -> f64 {
    let poly = region.vertices();
    let mut worst = 0.0f64;
    for (i, &c) in centers.iter().enumerate() {
        for v in voronoi_cell(&poly, centers, i) {
            worst = worst.max(v.distance(c));
        }
    }
    if centers.is_empty() {
        f64::INFINITY
    } else {
        worst
    }
}

fn hexagon_cert(
    radius: f64,
    nominal: f64,
    centers: Vec<Point>,
    label: &str,
) -> CoveringCertificate {
    CoveringCertificate::new(ConvexRegion::UNIT_HEXAGON, radius, centers, label)
        .expect("builtin certificate is well formed")
        .with_nominal(nominal)
}

fn ring(count: usize, distance: f64, start: f64) -> impl Iterator<Item = Point> {
    (0..count).map(move |j| Point::polar(distance, start + FRAC_PI_3 * (6 / count * j) as f64))
}

/// Five centers for the width-1 hexagon with covering radius below 1/3,
/// found by [`optimize_covering`] with `k = 5`, 8 restarts, seed 4.
pub const FIVE_DISK_CENTERS: [(f64, f64); 5] = [
    (-0.3962476707048702, 0.12578314677486324),
    (-0.003968909194867269, 0.40089876793610846),
    (0.3101577503379074, 0.13608898673424236),
    (-0.1476897947798352, -0.21053257956152938),
    (0.25180341274978957, -0.30805746727943384),
];

/// The stock coverings, unverified. Radii are rounded up from the exact
/// values, which are kept as `nominal_radius`.
pub fn builtin_certificates() -> Vec<CoveringCertificate> {
    let s3 = SQRT_3;
    let mut out = vec![
        hexagon_cert(0.57736, 1.0 / s3, vec![Point::ORIGIN], "jung-disk"),
        // Halves of the hexagon on either side of the y-axis; each enclosing
        // circle passes through four of its pentagon's five corners.
        hexagon_cert(
            0.52043,
            sqrt(13.0 / 48.0),
            vec![
                Point::new(1.0 / (4.0 * s3), 0.0),
                Point::new(-1.0 / (4.0 * s3), 0.0),
            ],
            "half-hexagon-pentagons",
        ),
        hexagon_cert(
            0.43302,
            s3 / 4.0,
            ring(3, 0.25, core::f64::consts::FRAC_PI_2).collect(),
            "borsuk-pentagons",
        ),
        hexagon_cert(
            0.33334,
            1.0 / 3.0,
            ring(6, 1.0 / 3.0, FRAC_PI_3 / 2.0).collect(),
            "six-triangles",
        ),
        hexagon_cert(
            0.25001,
            0.25,
            core::iter::once(Point::ORIGIN)
                .chain(ring(6, s3 / 4.0, 0.0))
                .collect(),
            "seven-disks",
        ),
        hexagon_cert(
            0.33334,
            1.0 / 3.0,
            FIVE_DISK_CENTERS.iter().map(|&p| p.into()).collect(),
            "five-disks",
        ),
    ];
    out.push(
        CoveringCertificate::new(
            ConvexRegion::UNIT_SQUARE,
            0.35356,
            vec![
                Point::new(0.25, 0.25),
                Point::new(0.75, 0.25),
                Point::new(0.25, 0.75),
                Point::new(0.75, 0.75),
            ],
            "square-quarters",
        )
        .expect("builtin certificate is well formed")
        .with_nominal(sqrt(2.0) / 4.0),
    );
    out
}

/// Builtin certificates, each verified at step `h`.
pub fn certified_builtins(h: f64) -> Vec<CoveringCertificate> {
    builtin_certificates()
        .into_iter()
        .map(|c| c.verified(h))
        .collect()
}

/// Random number stream for restart `restart` of a run seeded with `seed`.
pub fn restart_rng(seed: u64, restart: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart);
    rng
}

const LLOYD_STEPS: usize = 400;

/// Minimax Lloyd iteration: each center moves to the center of the smallest
/// circle enclosing its clipped Voronoi cell. Returns the best centers seen
/// and their covering radius.
fn minimax_lloyd(region: &ConvexRegion, mut centers: Vec<Point>) -> (Vec<Point>, f64) {
    let poly = region.vertices();
    let mut best = (centers.clone(), covering_radius(region, &centers));
    for _ in 0..LLOYD_STEPS {
        let mut moved = 0.0f64;
        let next: Vec<Point> = (0..centers.len())
            .map(|i| {
                let cell = voronoi_cell(&poly, &centers, i);
                match PointSet::new(cell) {
                    Ok(cell) => smallest_enclosing_circle(&cell).center,
                    Err(_) => centers[i],
                }
            })
            .collect();
        for (a, b) in centers.iter().zip(&next) {
            moved = moved.max(a.distance(*b));
        }
        centers = next;
        let radius = covering_radius(region, &centers);
        if radius < best.1 {
            best = (centers.clone(), radius);
        }
        if moved < 1e-13 {
            break;
        }
    }
    best
}

/// Seeded multi-start search for `k` centers that locally minimize the
/// covering radius of `region`.
///
/// Each restart draws `k` uniform centers from its own stream and runs the
/// minimax Lloyd iteration to a fixed point. The best restart (earliest on
/// ties) is certified at radius `covering_radius + 1e-4` on a grid of step
/// `1e-3`; its exact covering radius is stored as the nominal radius.
pub fn optimize_covering(
    region: &ConvexRegion,
    k: usize,
    restarts: u32,
    seed: u64,
) -> Result<CoveringCertificate> {
    region.validate()?;
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    let restarts = restarts.max(1);
    let mut best: Option<(Vec<Point>, f64)> = None;
    for restart in 0..restarts {
        let mut rng = restart_rng(seed, restart as u64);
        let start = (0..k).map(|_| region.sample(&mut rng)).collect();
        let found = minimax_lloyd(region, start);
        if best.as_ref().is_none_or(|b| found.1 < b.1) {
            best = Some(found);
        }
    }
    let (centers, radius) = best.expect("at least one restart");
    let cert = CoveringCertificate::new(
        *region,
        radius + OPTIMIZE_SLACK,
        centers,
        format!("optimized k={k} restarts={restarts} seed={seed}"),
    )?
    .with_nominal(radius);
    Ok(cert.verified(DEFAULT_GRID_H))
}

/// `⌈n/k⌉`, the pigeonhole count guaranteed by a certified covering.
pub fn pigeonhole_bound(cert: &CoveringCertificate, n: usize) -> Result<usize> {
    if !cert.verified.is_certified() {
        return Err(Error::NotCertified(cert.provenance.clone()));
    }
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    Ok(n.div_ceil(cert.k()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::triangle_construction;

    fn hex_cert(radius: f64, centers: Vec<Point>) -> CoveringCertificate {
        CoveringCertificate::new(ConvexRegion::UNIT_HEXAGON, radius, centers, "test").unwrap()
    }

    #[test]
    fn region_contains_examples() {
        let hex = ConvexRegion::UNIT_HEXAGON;
        assert!(region_contains(&hex, Point::ORIGIN, 0.0));
        assert!(!region_contains(
            &hex,
            Point::new(1.0 / SQRT_3 + 0.01, 0.0),
            0.0
        ));
        assert!(region_contains(&hex, Point::new(0.0, 0.5), 0.0));
        assert!(!region_contains(&hex, Point::new(0.0, 0.5 + 1e-6), 0.0));
        assert!(region_contains(&hex, Point::new(0.0, 0.5 + 1e-6), 1e-5));
        assert!(region_contains(
            &ConvexRegion::UNIT_SQUARE,
            Point::new(0.5, 0.5),
            0.0
        ));
        assert!(!region_contains(
            &ConvexRegion::UNIT_SQUARE,
            Point::new(-0.1, 0.5),
            0.0
        ));
    }

    #[test]
    fn hexagon_shape() {
        let vs = ConvexRegion::UNIT_HEXAGON.vertices();
        for v in &vs {
            assert!((v.norm() - 1.0 / SQRT_3).abs() < 1e-15);
            assert!(region_contains(&ConvexRegion::UNIT_HEXAGON, *v, 1e-15));
        }
        assert!((vs[1].y - 0.5).abs() < 1e-15 && (vs[2].y - 0.5).abs() < 1e-15);
    }

    #[test]
    fn rigid_motion_inverse() {
        let m = RigidMotion::new(0.7, Point::new(0.3, -1.2));
        let p = Point::new(-0.4, 2.5);
        assert!(m.inverse().apply(m.apply(p)).distance(p) < 1e-12);
        assert!(m.apply(m.inverse().apply(p)).distance(p) < 1e-12);
    }

    #[test]
    fn embed_examples() {
        let single = PointSet::new(vec![Point::new(3.0, -2.0)]).unwrap();
        let m = embed_in_hexagon(&single).unwrap();
        assert_eq!(m.rotation, 0.0);
        assert!(m.apply(Point::new(3.0, -2.0)).norm() < 1e-15);

        let tri = triangle_construction(3).unwrap();
        let m = embed_in_hexagon(&tri).unwrap();
        assert!(tri.iter().all(|&p| region_contains(
            &ConvexRegion::UNIT_HEXAGON,
            m.apply(p),
            EMBED_TOL
        )));

        let wide = PointSet::new(vec![Point::ORIGIN, Point::new(1.1, 0.0)]).unwrap();
        assert!(matches!(
            embed_in_hexagon(&wide),
            Err(Error::EmbeddingFailure { .. })
        ));

        let m = embed_in_region(&ConvexRegion::UNIT_SQUARE, &tri).unwrap();
        assert!(tri.iter().all(|&p| region_contains(
            &ConvexRegion::UNIT_SQUARE,
            m.apply(p),
            EMBED_TOL
        )));
    }

    #[test]
    fn embed_width_one_pairs_at_every_angle() {
        for i in 0..360 {
            let d = Point::polar(0.5, i as f64 * core::f64::consts::PI / 180.0);
            let set =
                PointSet::new(vec![d + Point::new(2.0, 1.0), -d + Point::new(2.0, 1.0)]).unwrap();
            embed_in_hexagon(&set).unwrap();
        }
    }

    #[test]
    fn verify_examples() {
        let jung = hex_cert(1.0 / SQRT_3, vec![Point::ORIGIN]);
        assert!(verify_covering(&jung, 1e-3).is_certified());

        let small = hex_cert(0.2, vec![Point::ORIGIN]);
        assert!(matches!(
            verify_covering(&small, 1e-2),
            Verification::Failed { .. }
        ));

        let short = hex_cert(1.0 / SQRT_3 - 1e-4, vec![Point::ORIGIN]);
        assert!(matches!(
            verify_covering(&short, 1e-3),
            Verification::Failed { .. }
        ));
        assert_eq!(verify_covering(&jung, 0.0), Verification::Unverified);
    }

    #[test]
    fn failure_witness_is_uncovered_region_point() {
        let cert = hex_cert(0.3, vec![Point::new(0.2, 0.0), Point::new(-0.2, 0.0)]);
        match verify_covering(&cert, 1e-2) {
            Verification::Failed { witness } => {
                assert!(region_contains(&cert.region, witness, 1e-12));
                assert!(cert
                    .centers
                    .iter()
                    .all(|c| c.distance(witness) > cert.radius));
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn exact_covering_radii_of_builtins() {
        for cert in builtin_certificates() {
            let exact = covering_radius(&cert.region, &cert.centers);
            let nominal = cert.nominal_radius.unwrap();
            assert!(
                exact <= nominal + 1e-12,
                "{}: {exact} > {nominal}",
                cert.provenance
            );
            assert!(nominal <= cert.radius, "{}", cert.provenance);
        }
        let half = &builtin_certificates()[1];
        let exact = covering_radius(&half.region, &half.centers);
        assert!((exact - sqrt(13.0 / 48.0)).abs() < 1e-12);
    }

    #[test]
    fn covering_radius_single_disk() {
        let r = covering_radius(&ConvexRegion::UNIT_HEXAGON, &[Point::ORIGIN]);
        assert!((r - 1.0 / SQRT_3).abs() < 1e-15);
        let r = covering_radius(&ConvexRegion::UNIT_SQUARE, &[Point::new(0.5, 0.5)]);
        assert!((r - sqrt(0.5)).abs() < 1e-15);
    }

    #[test]
    fn pigeonhole_examples() {
        let uncertified = builtin_certificates().remove(3);
        assert!(matches!(
            pigeonhole_bound(&uncertified, 25),
            Err(Error::NotCertified(_))
        ));
        let six = uncertified.verified(1e-2);
        assert!(six.verified.is_certified());
        assert_eq!(pigeonhole_bound(&six, 25), Ok(5));
        assert_eq!(pigeonhole_bound(&six, 1), Ok(1));
        assert!(pigeonhole_bound(&six, 0).is_err());
    }

    #[test]
    fn five_disk_centers_reproduce() {
        let cert = optimize_covering(&ConvexRegion::UNIT_HEXAGON, 5, 8, 4).unwrap();
        let frozen: Vec<Point> = FIVE_DISK_CENTERS.iter().map(|&p| p.into()).collect();
        assert_eq!(cert.centers, frozen);
        assert!(covering_radius(&cert.region, &frozen) < 0.322);
        let exact = hex_cert(1.0 / 3.0, frozen);
        assert!(verify_covering(&exact, 1e-3).is_certified());
    }

    #[test]
    fn optimizer_single_disk() {
        let cert = optimize_covering(&ConvexRegion::UNIT_HEXAGON, 1, 2, 3).unwrap();
        assert!(cert.verified.is_certified());
        assert!(cert.nominal_radius.unwrap() <= 1.0 / SQRT_3 + 1e-3);
    }
}

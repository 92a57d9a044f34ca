//! Simulated annealing for unit-diameter sets with small maximum coverage.

use alloc::vec::Vec;

use libm::exp;
use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::covers::restart_rng;
use crate::error::{Error, Result};
use crate::geom::{diameter, max_coverage, CountMode, Point, PointSet};

/// Counting mode of the search objective.
pub const OBJECTIVE_MODE: CountMode = CountMode::Inflated(1e-6);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchConfig {
    pub n: usize,
    pub r: f64,
    pub iterations: u32,
    pub restarts: u32,
    pub seed: u64,
    pub initial_temperature: f64,
    /// Factor applied to the temperature after every step.
    pub cooling: f64,
    /// Standard deviation of each coordinate of a move.
    pub move_scale: f64,
}

impl SearchConfig {
    pub fn new(n: usize, r: f64, seed: u64) -> Self {
        Self {
            n,
            r,
            iterations: 50_000,
            restarts: 8,
            seed,
            initial_temperature: 1.0,
            cooling: 0.999,
            move_scale: 0.05,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Domain(msg.into()));
        if self.n < 2 {
            return fail("n must be at least 2");
        }
        if !(self.r > 0.0 && self.r <= 1.0) {
            return fail("r must lie in (0, 1]");
        }
        if self.iterations == 0 || self.restarts == 0 {
            return fail("iterations and restarts must be positive");
        }
        if !(self.cooling > 0.0 && self.cooling < 1.0) {
            return fail("cooling must lie in (0, 1)");
        }
        if !(self.initial_temperature.is_finite() && self.initial_temperature > 0.0) {
            return fail("initial temperature must be positive");
        }
        if !(self.move_scale.is_finite() && self.move_scale > 0.0) {
            return fail("move scale must be positive");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    /// Best configuration, scaled to diameter 1.
    pub best: PointSet,
    /// `max_coverage(best, r)` under [`OBJECTIVE_MODE`].
    pub objective: usize,
    pub min_distance: f64,
    /// Restart that produced `best`.
    pub best_restart: u32,
    /// Best objective of each restart.
    pub trace: Vec<usize>,
}

/// Scales `set` about its centroid to diameter 1.
pub fn normalize_diameter(set: &PointSet) -> Result<PointSet> {
    let d = diameter(set);
    if d == 0.0 {
        return Err(Error::Degenerate("all points coincide"));
    }
    let c = set.centroid();
    set.map(|p| c + (p - c) * (1.0 / d))
}

fn min_distance(points: &[Point]) -> f64 {
    let mut best = f64::INFINITY;
    for (i, &p) in points.iter().enumerate() {
        for &q in &points[i + 1..] {
            best = best.min(p.distance_sq(q));
        }
    }
    libm::sqrt(best)
}

struct State {
    set: PointSet,
    count: usize,
    spread: f64,
}

impl State {
    fn new(set: PointSet, r: f64) -> Result<Self> {
        let count = max_coverage(&set, r, OBJECTIVE_MODE)?.count;
        let spread = min_distance(set.points());
        Ok(Self { set, count, spread })
    }

    /// Coverage count, with wider spacing breaking ties.
    fn energy(&self) -> f64 {
        self.count as f64 - self.spread
    }
}

fn anneal(cfg: &SearchConfig, restart: u32) -> Result<State> {
    let mut rng = restart_rng(cfg.seed, restart as u64);
    let step =
        Normal::new(0.0, cfg.move_scale).map_err(|_| Error::Domain("bad move scale".into()))?;

    let start: Vec<Point> = (0..cfg.n)
        .map(|_| {
            let radius = 0.5 * libm::sqrt(rng.random::<f64>());
            let angle = core::f64::consts::TAU * rng.random::<f64>();
            Point::polar(radius, angle)
        })
        .collect();
    let mut current = State::new(normalize_diameter(&PointSet::new(start)?)?, cfg.r)?;
    let mut best = State {
        set: current.set.clone(),
        count: current.count,
        spread: current.spread,
    };
    let mut temperature = cfg.initial_temperature;

    for _ in 0..cfg.iterations {
        let i = rng.random_range(0..cfg.n);
        let pts = current.set.points();
        let moved = pts[i] + Point::new(step.sample(&mut rng), step.sample(&mut rng));
        let fits = pts
            .iter()
            .enumerate()
            .all(|(j, &q)| j == i || moved.distance(q) <= 1.0);
        if fits {
            let mut next = pts.to_vec();
            next[i] = moved;
            if let Ok(set) = normalize_diameter(&PointSet::new(next)?) {
                let candidate = State::new(set, cfg.r)?;
                let delta = candidate.energy() - current.energy();
                if delta <= 0.0 || rng.random::<f64>() < exp(-delta / temperature) {
                    current = candidate;
                    if current.energy() < best.energy() {
                        best = State {
                            set: current.set.clone(),
                            count: current.count,
                            spread: current.spread,
                        };
                    }
                }
            }
        }
        temperature *= cfg.cooling;
    }
    Ok(best)
}

/// Multi-restart annealing for an `n`-point set of diameter 1 whose maximum
/// radius-`r` coverage is as small as possible.
///
/// Restart `i` draws from its own stream derived from `(seed, i)`, so results
/// do not depend on how many restarts run or in what order. The returned
/// configuration is the lowest-objective restart, earliest on ties.
pub fn extremal_search(cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let mut trace = Vec::with_capacity(cfg.restarts as usize);
    let mut best: Option<(u32, State)> = None;
    for restart in 0..cfg.restarts {
        let found = anneal(cfg, restart)?;
        trace.push(found.count);
        if best.as_ref().is_none_or(|(_, b)| found.count < b.count) {
            best = Some((restart, found));
        }
    }
    let (best_restart, state) = best.expect("at least one restart");
    Ok(SearchResult {
        objective: state.count,
        min_distance: state.spread,
        best: state.set,
        best_restart,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn quick(n: usize, r: f64, seed: u64) -> SearchConfig {
        SearchConfig {
            iterations: 3000,
            restarts: 2,
            ..SearchConfig::new(n, r, seed)
        }
    }

    #[test]
    fn normalize_examples() {
        let two = PointSet::new(vec![Point::new(0.0, 0.0), Point::new(2.0, 0.0)]).unwrap();
        assert!((diameter(&normalize_diameter(&two).unwrap()) - 1.0).abs() < 1e-15);

        let tri = PointSet::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.5, 0.0),
            Point::new(0.25, 0.25 * libm::sqrt(3.0)),
        ])
        .unwrap();
        let out = normalize_diameter(&tri).unwrap();
        let p = out.points();
        for (a, b) in [(0, 1), (1, 2), (0, 2)] {
            assert!((p[a].distance(p[b]) - 1.0).abs() < 1e-12);
        }

        let stack = PointSet::new(vec![Point::new(1.0, 1.0); 3]).unwrap();
        assert!(matches!(
            normalize_diameter(&stack),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn config_validation() {
        assert!(SearchConfig::new(1, 0.5, 0).validate().is_err());
        assert!(SearchConfig::new(5, 0.0, 0).validate().is_err());
        assert!(SearchConfig {
            cooling: 1.0,
            ..SearchConfig::new(5, 0.5, 0)
        }
        .validate()
        .is_err());
        assert!(SearchConfig {
            iterations: 0,
            ..SearchConfig::new(5, 0.5, 0)
        }
        .validate()
        .is_err());
        assert!(SearchConfig::new(5, 0.5, 0).validate().is_ok());
    }

    #[test]
    fn three_points_below_half() {
        let res = extremal_search(&quick(3, 0.45, 7)).unwrap();
        assert_eq!(res.objective, 1);
    }

    #[test]
    fn result_is_feasible_and_sound() {
        let cfg = quick(6, 0.3, 11);
        let res = extremal_search(&cfg).unwrap();
        assert!((diameter(&res.best) - 1.0).abs() <= 1e-9);
        assert_eq!(
            max_coverage(&res.best, cfg.r, OBJECTIVE_MODE)
                .unwrap()
                .count,
            res.objective
        );
        assert_eq!(res.trace.len(), 2);
        assert_eq!(res.trace.iter().min(), Some(&res.objective));
        assert_eq!(res, extremal_search(&cfg).unwrap());
    }
}

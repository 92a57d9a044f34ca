//! Bounds on how many points of a unit-diameter set one disk can cover.
//!
//! For a point set `P` of diameter at most 1 and a radius `r`, the quantity
//! of interest is the largest number of points a closed disk of radius `r`
//! can cover. Taking the worst case over all `n`-point sets gives `N_n(r)`.
//!
//! - [`geom`] computes the maximum coverage of a concrete set exactly.
//! - [`constructions`] builds sets that keep the coverage small (upper bounds).
//! - [`covers`] certifies disk coverings of universal covers (lower bounds).
//! - [`bounds`] combines both into per-`(n, r)` records and the `c(r)` graph.
//! - [`search`] anneals for new small-coverage configurations.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod constructions;
pub mod covers;
mod error;
pub mod geom;
pub mod search;

pub use error::{Error, Result};
pub use geom::{CountMode, Coverage, Disk, Point, PointSet};

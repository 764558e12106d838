//! Exact convex hulls over the corner points of a polyomino's cells.
//!
//! Planar hulls use a monotone chain and the shoelace formula. For higher
//! dimensions the hull is grown by randomized incremental insertion with
//! exact integer orientation tests and its volume is summed over a simplex
//! fan from an interior point. No floating point is involved anywhere.

mod det;
mod planar;
mod simplicial;

use crate::error::{Error, Result};
use crate::lattice::{Polyomino, MAX_DIM};
use crate::rational::{frac, Rational};

pub use det::determinant;
pub use planar::{convex_hull_2d, twice_signed_area, HullPolygon2D};
pub use simplicial::simplicial_volume;

/// A lattice point (corner of some unit cell).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    dim: u8,
    coords: [i64; MAX_DIM],
}

impl LatticePoint {
    pub fn new(coords: &[i64]) -> Result<Self> {
        crate::lattice::check_dim(coords.len())?;
        let mut c = [0; MAX_DIM];
        c[..coords.len()].copy_from_slice(coords);
        Ok(LatticePoint {
            dim: coords.len() as u8,
            coords: c,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.dim()]
    }

    pub(crate) fn raw(&self) -> [i64; MAX_DIM] {
        self.coords
    }
}

/// All `2^d` corners of every cell, deduplicated and sorted.
pub fn corner_points(p: &Polyomino) -> Vec<LatticePoint> {
    let d = p.dim();
    let mut pts = Vec::with_capacity(p.size() << d);
    for c in p.cells() {
        for mask in 0u32..(1 << d) {
            let mut x = [0i64; MAX_DIM];
            for (i, xi) in x.iter_mut().enumerate().take(d) {
                *xi = c.coord(i) as i64 + ((mask >> i) & 1) as i64;
            }
            pts.push(LatticePoint { dim: d as u8, coords: x });
        }
    }
    pts.sort_unstable();
    pts.dedup();
    pts
}

/// Hull polygon of a planar polyomino.
pub fn hull_polygon_2d(p: &Polyomino) -> Result<HullPolygon2D> {
    if p.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: p.dim(),
        });
    }
    let pts: Vec<(i64, i64)> = corner_points(p)
        .iter()
        .map(|q| (q.coords[0], q.coords[1]))
        .collect();
    Ok(HullPolygon2D::from_points(&pts))
}

/// Exact d-volume of the convex hull of the polyomino.
pub fn hull_volume(p: &Polyomino) -> Result<Rational> {
    match p.dim() {
        1 => Ok(frac(p.size() as i64, 1)),
        2 => Ok(hull_polygon_2d(p)?.area()),
        3 | 4 => simplicial_hull_volume(p),
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// The dimension-generic incremental route, also usable on planar input.
pub fn simplicial_hull_volume(p: &Polyomino) -> Result<Rational> {
    let pts: Vec<[i64; MAX_DIM]> = corner_points(p).iter().map(LatticePoint::raw).collect();
    simplicial_volume(&pts, p.dim())
}

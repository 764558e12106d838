//! Randomized incremental (beneath-beyond) hull in dimension 2..=4.
//!
//! Facets are oriented simplices with the interior reference point on their
//! negative side. A point is inserted when it lies strictly beyond at least
//! one facet; the horizon is the set of ridges that occur in exactly one
//! visible facet. Coplanar neighbouring facets are allowed, so the boundary
//! triangulation need not be minimal, but the fan volume is exact.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::det::{determinant, rank};
use crate::error::{Error, Result};
use crate::lattice::MAX_DIM;
use crate::rational::{frac, Rational};

type Pt = [i64; MAX_DIM];
type Facet = [u32; MAX_DIM];

const SHUFFLE_SEED: u64 = 0x5eed_c0de;

/// Keeps only points that are extreme on every axis-parallel line through
/// them; hull vertices always are.
fn axis_extremes(points: &[Pt], d: usize) -> Vec<Pt> {
    let mut keep = vec![true; points.len()];
    for axis in 0..d {
        let mut lines: HashMap<Pt, (i64, i64)> = HashMap::new();
        for p in points {
            let mut key = *p;
            key[axis] = 0;
            let e = lines.entry(key).or_insert((p[axis], p[axis]));
            e.0 = e.0.min(p[axis]);
            e.1 = e.1.max(p[axis]);
        }
        for (k, p) in points.iter().enumerate() {
            let mut key = *p;
            key[axis] = 0;
            let (lo, hi) = lines[&key];
            if p[axis] != lo && p[axis] != hi {
                keep[k] = false;
            }
        }
    }
    points
        .iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(*p))
        .collect()
}

struct Hull<'a> {
    d: usize,
    pts: &'a [Pt],
    /// Sum of the initial simplex vertices, i.e. `(d + 1)` times its centroid.
    centroid_sum: [i128; MAX_DIM],
    facets: Vec<Facet>,
}

impl Hull<'_> {
    /// Sign of the point relative to the facet hyperplane.
    fn orient(&self, f: &Facet, q: &Pt) -> i128 {
        let d = self.d;
        let base = &self.pts[f[0] as usize];
        let mut rows = [[0i128; MAX_DIM]; MAX_DIM];
        for k in 1..d {
            let v = &self.pts[f[k] as usize];
            for i in 0..d {
                rows[k - 1][i] = (v[i] - base[i]) as i128;
            }
        }
        for i in 0..d {
            rows[d - 1][i] = (q[i] - base[i]) as i128;
        }
        determinant(&rows, d).signum()
    }

    fn orient_centroid(&self, f: &Facet) -> i128 {
        let d = self.d;
        let base = &self.pts[f[0] as usize];
        let mut rows = [[0i128; MAX_DIM]; MAX_DIM];
        for k in 1..d {
            let v = &self.pts[f[k] as usize];
            for i in 0..d {
                rows[k - 1][i] = (v[i] - base[i]) as i128;
            }
        }
        let scale = (d + 1) as i128;
        for i in 0..d {
            rows[d - 1][i] = self.centroid_sum[i] - scale * base[i] as i128;
        }
        determinant(&rows, d).signum()
    }

    fn oriented(&self, mut f: Facet) -> Facet {
        let s = self.orient_centroid(&f);
        debug_assert!(s != 0, "degenerate facet");
        if s > 0 {
            f.swap(0, 1);
        }
        f
    }

    fn insert(&mut self, idx: u32) {
        let q = self.pts[idx as usize];
        let (visible, kept): (Vec<Facet>, Vec<Facet>) = self
            .facets
            .iter()
            .partition(|f| self.orient(f, &q) > 0);
        if visible.is_empty() {
            return;
        }
        let d = self.d;
        let mut ridges: HashMap<Facet, u32> = HashMap::new();
        for f in &visible {
            for skip in 0..d {
                let mut r = [u32::MAX; MAX_DIM];
                let mut k = 0;
                for (j, &v) in f[..d].iter().enumerate() {
                    if j != skip {
                        r[k] = v;
                        k += 1;
                    }
                }
                r[..d - 1].sort_unstable();
                *ridges.entry(r).or_insert(0) += 1;
            }
        }
        let mut horizon: Vec<Facet> = ridges
            .into_iter()
            .filter_map(|(r, count)| (count == 1).then_some(r))
            .collect();
        horizon.sort_unstable();
        self.facets = kept;
        for r in horizon {
            let mut f = r;
            f[d - 1] = idx;
            let f = self.oriented(f);
            self.facets.push(f);
        }
    }

    /// Fan volume from the centroid, scaled by `d! (d+1)^d`.
    fn scaled_volume(&self) -> i128 {
        let d = self.d;
        let scale = (d + 1) as i128;
        self.facets
            .iter()
            .map(|f| {
                let mut rows = [[0i128; MAX_DIM]; MAX_DIM];
                for k in 0..d {
                    let v = &self.pts[f[k] as usize];
                    for i in 0..d {
                        rows[k][i] = scale * v[i] as i128 - self.centroid_sum[i];
                    }
                }
                determinant(&rows, d).abs()
            })
            .sum()
    }
}

/// Exact volume of the convex hull of `points` (first `d` coordinates).
///
/// Fails on a lower-dimensional point set.
pub fn simplicial_volume(points: &[Pt], d: usize) -> Result<Rational> {
    if !(2..=MAX_DIM).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    let mut pts = axis_extremes(points, d);
    pts.sort_unstable();
    pts.dedup();
    pts.shuffle(&mut ChaCha8Rng::seed_from_u64(SHUFFLE_SEED));

    // greedy affinely independent start
    let mut simplex: Vec<usize> = vec![0];
    let mut diffs: Vec<[i128; MAX_DIM]> = Vec::new();
    for (k, p) in pts.iter().enumerate().skip(1) {
        if simplex.len() == d + 1 {
            break;
        }
        let mut row = [0i128; MAX_DIM];
        for i in 0..d {
            row[i] = (p[i] - pts[0][i]) as i128;
        }
        diffs.push(row);
        if rank(&diffs, d) == diffs.len() {
            simplex.push(k);
        } else {
            diffs.pop();
        }
    }
    if simplex.len() < d + 1 {
        return Err(Error::Argument(format!(
            "point set spans fewer than {d} dimensions"
        )));
    }
    // move the simplex to the front so indices are stable
    for (slot, &k) in simplex.iter().enumerate() {
        pts.swap(slot, k);
    }

    let mut centroid_sum = [0i128; MAX_DIM];
    for p in &pts[..=d] {
        for i in 0..d {
            centroid_sum[i] += p[i] as i128;
        }
    }
    let mut hull = Hull {
        d,
        pts: &pts,
        centroid_sum,
        facets: Vec::new(),
    };
    for skip in 0..=d {
        let mut f = [u32::MAX; MAX_DIM];
        let mut k = 0;
        for v in 0..=d {
            if v != skip {
                f[k] = v as u32;
                k += 1;
            }
        }
        let f = hull.oriented(f);
        hull.facets.push(f);
    }
    for idx in (d + 1)..pts.len() {
        hull.insert(idx as u32);
    }

    let factorial: i128 = (1..=d as i128).product();
    let denom = factorial * ((d + 1) as i128).pow(d as u32);
    let num = hull.scaled_volume();
    let g = num_integer::gcd(num, denom);
    let (num, denom) = (num / g, denom / g);
    let num = i64::try_from(num).map_err(|_| Error::Overflow)?;
    let denom = i64::try_from(denom).map_err(|_| Error::Overflow)?;
    Ok(frac(num, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn box_points(sides: &[i64]) -> Vec<Pt> {
        let d = sides.len();
        (0..1u32 << d)
            .map(|m| {
                let mut p = [0; MAX_DIM];
                for i in 0..d {
                    p[i] = if m >> i & 1 == 1 { sides[i] } else { 0 };
                }
                p
            })
            .collect()
    }

    #[test]
    fn boxes() {
        assert_eq!(simplicial_volume(&box_points(&[2, 3]), 2).unwrap(), int(6));
        assert_eq!(simplicial_volume(&box_points(&[2, 3, 5]), 3).unwrap(), int(30));
        assert_eq!(simplicial_volume(&box_points(&[1, 2, 1, 3]), 4).unwrap(), int(6));
    }

    #[test]
    fn standard_simplices() {
        let tri: Vec<Pt> = vec![[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]];
        assert_eq!(simplicial_volume(&tri, 3).unwrap(), frac(1, 6));
        let s4: Vec<Pt> = vec![
            [0, 0, 0, 0],
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, 0, 1],
        ];
        assert_eq!(simplicial_volume(&s4, 4).unwrap(), frac(1, 24));
    }

    #[test]
    fn octahedron_with_interior_and_coplanar_points() {
        let mut pts: Vec<Pt> = vec![
            [1, 0, 0, 0],
            [-1, 0, 0, 0],
            [0, 1, 0, 0],
            [0, -1, 0, 0],
            [0, 0, 1, 0],
            [0, 0, -1, 0],
            [0, 0, 0, 0],
        ];
        // edge midpoints are not lattice points; use a doubled copy instead
        for p in pts.iter_mut() {
            for x in p.iter_mut() {
                *x *= 2;
            }
        }
        pts.push([1, 1, 0, 0]);
        pts.push([1, 0, 1, 0]);
        // |x|+|y|+|z| <= 2 has volume 4 * 2^3 / 3
        assert_eq!(simplicial_volume(&pts, 3).unwrap(), frac(32, 3));
    }

    #[test]
    fn degenerate_input_is_rejected() {
        let flat: Vec<Pt> = vec![[0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0]];
        assert!(simplicial_volume(&flat, 3).is_err());
        assert!(simplicial_volume(&flat, 5).is_err());
    }
}

//! Cells, polyominoes and the build-tuple machinery.
//!
//! A [`Polyomino`] is a non-empty, duplicate-free, facet-connected set of
//! unit hypercubes in dimension 1 to [`MAX_DIM`]. Cells are kept sorted
//! lexicographically so equality, hashing and canonical comparison are all
//! plain slice operations.

mod build;
mod io;
pub(crate) mod symmetry;

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub use build::{admissible_tuples, all_build_tuples, BuildOrder, BuildTuple, BUILD_TUPLE_GUARD};
pub use io::parse_cell_list;
pub use symmetry::{hyperoctahedral_group, SignedPermutation};

/// Largest supported ambient dimension.
pub const MAX_DIM: usize = 4;

/// Raw coordinates with the unused trailing axes zeroed.
pub(crate) type Coords = [i32; MAX_DIM];

/// A unit hypercube `[c_1, c_1 + 1] x ... x [c_d, c_d + 1]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    dim: u8,
    coords: Coords,
}

impl Cell {
    pub fn new(coords: &[i32]) -> Result<Self> {
        let d = coords.len();
        check_dim(d)?;
        let mut c = [0; MAX_DIM];
        c[..d].copy_from_slice(coords);
        Ok(Cell { dim: d as u8, coords: c })
    }

    pub(crate) fn from_raw(dim: usize, coords: Coords) -> Self {
        debug_assert!((1..=MAX_DIM).contains(&dim));
        debug_assert!(coords[dim..].iter().all(|&x| x == 0));
        Cell { dim: dim as u8, coords }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.coords[..self.dim()]
    }

    pub fn coord(&self, axis: usize) -> i32 {
        self.coords[axis]
    }

    pub(crate) fn raw(&self) -> Coords {
        self.coords
    }

    /// The cell shifted by `delta` along `axis`.
    pub fn offset(&self, axis: usize, delta: i32) -> Result<Cell> {
        let mut c = self.coords;
        c[axis] = c[axis].checked_add(delta).ok_or(Error::Overflow)?;
        Ok(Cell { dim: self.dim, coords: c })
    }

    /// Whether the two cells share a full facet.
    pub fn is_facet_adjacent(&self, other: &Cell) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let mut diff = 0u64;
        for i in 0..self.dim() {
            diff += (self.coords[i] as i64 - other.coords[i] as i64).unsigned_abs();
        }
        diff == 1
    }

    fn neighbors(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.dim()).flat_map(move |axis| {
            [-1, 1]
                .into_iter()
                .filter_map(move |delta| self.offset(axis, delta).ok())
        })
    }
}

impl fmt::Debug for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn check_dim(d: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&d) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(d))
    }
}

/// Facet-connectivity of an arbitrary cell set. The empty set is not connected.
pub fn is_connected(cells: &[Cell], d: usize) -> Result<bool> {
    check_dim(d)?;
    if let Some(bad) = cells.iter().find(|c| c.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bad.dim(),
        });
    }
    let Some(&first) = cells.first() else {
        return Ok(false);
    };
    let set: HashSet<Cell> = cells.iter().copied().collect();
    let mut seen = HashSet::with_capacity(set.len());
    seen.insert(first);
    let mut stack = vec![first];
    while let Some(c) = stack.pop() {
        for nb in c.neighbors() {
            if set.contains(&nb) && seen.insert(nb) {
                stack.push(nb);
            }
        }
    }
    Ok(seen.len() == set.len())
}

/// A facet-connected set of unit hypercubes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polyomino {
    dim: u8,
    cells: Vec<Cell>,
}

impl Polyomino {
    /// Validates and sorts `cells`.
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        let first = cells.first().ok_or(Error::Empty)?;
        let d = first.dim();
        if let Some(bad) = cells.iter().find(|c| c.dim() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: bad.dim(),
            });
        }
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCell(w[0].to_string()));
        }
        if !is_connected(&cells, d)? {
            return Err(Error::Disconnected);
        }
        Ok(Polyomino {
            dim: d as u8,
            cells,
        })
    }

    /// Builds from fixed-size coordinate arrays.
    pub fn from_points<const D: usize>(points: &[[i32; D]]) -> Result<Self> {
        let cells = points
            .iter()
            .map(|p| Cell::new(p))
            .collect::<Result<Vec<_>>>()?;
        Polyomino::new(cells)
    }

    /// Planar shorthand.
    pub fn from_xy(points: &[(i32, i32)]) -> Result<Self> {
        let cells = points
            .iter()
            .map(|&(x, y)| Cell::new(&[x, y]))
            .collect::<Result<Vec<_>>>()?;
        Polyomino::new(cells)
    }

    /// Trusted constructor for already sorted, validated data.
    pub(crate) fn from_sorted_unchecked(dim: usize, cells: Vec<Cell>) -> Self {
        debug_assert!(cells.windows(2).all(|w| w[0] < w[1]));
        Polyomino {
            dim: dim as u8,
            cells,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    /// Number of cells `n`.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.cells.binary_search(c).is_ok()
    }

    /// The polyomino with one more cell; the new cell must touch it.
    pub fn with_cell(&self, c: Cell) -> Result<Polyomino> {
        if c.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: c.dim(),
            });
        }
        if self.contains(&c) {
            return Err(Error::DuplicateCell(c.to_string()));
        }
        if !self.cells.iter().any(|x| x.is_facet_adjacent(&c)) {
            return Err(Error::Disconnected);
        }
        let mut cells = self.cells.clone();
        let pos = cells.binary_search(&c).unwrap_err();
        cells.insert(pos, c);
        Ok(Polyomino { dim: self.dim, cells })
    }

    pub(crate) fn min_corner(&self) -> Coords {
        let mut lo = [i32::MAX; MAX_DIM];
        for c in &self.cells {
            for (i, l) in lo.iter_mut().enumerate().take(self.dim()) {
                *l = (*l).min(c.coords[i]);
            }
        }
        for l in lo.iter_mut().skip(self.dim()) {
            *l = 0;
        }
        lo
    }

    /// Side lengths `l_i = max_i - min_i + 1` of the smallest enclosing box.
    pub fn bounding_box(&self) -> Vec<u32> {
        (0..self.dim())
            .map(|i| {
                let (lo, hi) = self
                    .cells
                    .iter()
                    .fold((i32::MAX, i32::MIN), |(lo, hi), c| {
                        (lo.min(c.coords[i]), hi.max(c.coords[i]))
                    });
                (hi as i64 - lo as i64 + 1) as u32
            })
            .collect()
    }

    /// Translates by `shift` (one entry per axis).
    pub fn translate(&self, shift: &[i32]) -> Result<Polyomino> {
        if shift.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: shift.len(),
            });
        }
        let mut cells = Vec::with_capacity(self.size());
        for c in &self.cells {
            let mut x = c.coords;
            for (xi, s) in x.iter_mut().zip(shift) {
                *xi = xi.checked_add(*s).ok_or(Error::Overflow)?;
            }
            cells.push(Cell { dim: self.dim, coords: x });
        }
        // translation preserves order
        Ok(Polyomino { dim: self.dim, cells })
    }

    /// Translate so the bounding box starts at the origin.
    pub fn normalize(&self) -> Polyomino {
        let lo = self.min_corner();
        let cells = self
            .cells
            .iter()
            .map(|c| {
                let mut x = c.coords;
                for i in 0..self.dim() {
                    x[i] -= lo[i];
                }
                Cell { dim: self.dim, coords: x }
            })
            .collect();
        Polyomino { dim: self.dim, cells }
    }

    /// Image under a signed axis permutation (not normalized).
    pub fn transform(&self, g: &SignedPermutation) -> Result<Polyomino> {
        if g.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: g.dim(),
            });
        }
        let mut cells: Vec<Cell> = self
            .cells
            .iter()
            .map(|c| Cell {
                dim: self.dim,
                coords: g.apply_cell(&c.coords),
            })
            .collect();
        cells.sort_unstable();
        Ok(Polyomino { dim: self.dim, cells })
    }

    /// Lexicographically least normalized image under the full
    /// hyperoctahedral group; equal exactly for congruent polyominoes.
    pub fn canonical_free(&self) -> Polyomino {
        let raw: Vec<Coords> = self.cells.iter().map(|c| c.coords).collect();
        let best = symmetry::canonical_raw(self.dim(), &raw);
        let cells = best
            .into_iter()
            .map(|x| Cell { dim: self.dim, coords: x })
            .collect();
        Polyomino { dim: self.dim, cells }
    }

    /// Whether `self` already is its own free canonical form.
    pub fn is_canonical_free(&self) -> bool {
        let raw: Vec<Coords> = self.cells.iter().map(|c| c.coords).collect();
        self.min_corner() == [0; MAX_DIM] && symmetry::is_canonical_raw(self.dim(), &raw)
    }

    /// The text cell-list rendering (see [`parse_cell_list`]).
    pub fn to_cell_list(&self) -> String {
        io::write_cell_list(self)
    }

    pub fn from_cell_list(text: &str) -> Result<Polyomino> {
        let rows = parse_cell_list(text)?;
        Polyomino::new(rows.iter().map(|r| Cell::new(r)).collect::<Result<Vec<_>>>()?)
    }
}

impl fmt::Debug for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polyomino{{")?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// Free function form of [`Polyomino::normalize`].
pub fn normalize(p: &Polyomino) -> Polyomino {
    p.normalize()
}

/// Free function form of [`Polyomino::canonical_free`].
pub fn canonical_free(p: &Polyomino) -> Polyomino {
    p.canonical_free()
}

/// Free function form of [`Polyomino::bounding_box`].
pub fn bounding_box(p: &Polyomino) -> Vec<u32> {
    p.bounding_box()
}

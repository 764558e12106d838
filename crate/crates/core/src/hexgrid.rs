//! Polyhexes: edge-connected sets of regular unit hexagons, and the
//! conjectured bound `⌊n² + 14n/3 + 1⌋ / 6` on their hull areas.
//!
//! Hexagons are flat-topped with unit side. Cell `(q, r)` (axial
//! coordinates) has its centre at Euclidean `(3q/2, (2r + q)·√3/2)`.
//! Points are carried exactly as [`HexPoint`] `(p, s)` meaning
//! `(p/2, s·√3/2)`; the centre is then `(3q, 2r + q)` and the six corners
//! sit at offsets `(±2, 0)` and `(±1, ±1)`.
//!
//! Areas are in hexagon units: one hexagon has area 1 (absolute area
//! `3√3/2`). Twice the shoelace area in `(p, s)` coordinates is an integer
//! `k`; the absolute area is `k·√3/8` and the area in hexagon units is
//! `k/12`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::enumeration::{Engine, LatticeGraph};
use crate::error::{Error, Result};
use crate::hull::HullPolygon2D;
use crate::rational::{fmt_exact, frac, Rational};

/// Axial neighbour offsets `(dq, dr)`.
pub const HEX_OFFSETS: [[i32; 2]; 6] = [[1, 0], [-1, 0], [0, 1], [0, -1], [1, -1], [-1, 1]];

/// Corner offsets from a centre, counter-clockwise from the right.
const CORNERS: [(i64, i64); 6] = [(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)];

/// Largest polyhex size accepted by the enumerator.
pub const HEX_GUARD: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HexCell {
    pub q: i32,
    pub r: i32,
}

impl HexCell {
    pub fn new(q: i32, r: i32) -> Self {
        HexCell { q, r }
    }

    pub fn neighbours(&self) -> impl Iterator<Item = HexCell> + '_ {
        HEX_OFFSETS.iter().map(|o| HexCell::new(self.q + o[0], self.r + o[1]))
    }

    pub fn is_adjacent(&self, other: &HexCell) -> bool {
        self.neighbours().any(|c| c == *other)
    }

    pub fn centre(&self) -> HexPoint {
        HexPoint {
            p: 3 * self.q as i64,
            s: 2 * self.r as i64 + self.q as i64,
        }
    }

    /// The six corners, counter-clockwise.
    pub fn corners(&self) -> [HexPoint; 6] {
        let c = self.centre();
        CORNERS.map(|(dp, ds)| HexPoint {
            p: c.p + dp,
            s: c.s + ds,
        })
    }

    /// Cube coordinates `(q, −q−r, r)`.
    fn cube(&self) -> [i32; 3] {
        [self.q, -self.q - self.r, self.r]
    }

    fn from_cube(c: [i32; 3]) -> Self {
        HexCell::new(c[0], c[2])
    }
}

impl fmt::Display for HexCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.q, self.r)
    }
}

/// The Euclidean point `(p/2, s·√3/2)`. Every hexagon corner has
/// `p ≡ s (mod 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HexPoint {
    pub p: i64,
    pub s: i64,
}

impl HexPoint {
    /// Floating-point position, for drawing only.
    pub fn euclidean(&self) -> (f64, f64) {
        (self.p as f64 / 2.0, self.s as f64 * 3f64.sqrt() / 2.0)
    }
}

/// One of the 12 point symmetries of the lattice: a permutation of cube
/// coordinates, optionally negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HexSymmetry {
    perm: [usize; 3],
    negate: bool,
}

impl HexSymmetry {
    pub fn apply(&self, c: &HexCell) -> HexCell {
        let x = c.cube();
        let sign = if self.negate { -1 } else { 1 };
        HexCell::from_cube(self.perm.map(|i| sign * x[i]))
    }
}

/// All 12 symmetries, identity first.
pub fn hex_symmetries() -> Vec<HexSymmetry> {
    let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut out = Vec::with_capacity(12);
    for negate in [false, true] {
        for perm in perms {
            out.push(HexSymmetry { perm, negate });
        }
    }
    out
}

/// A nonempty edge-connected set of hexagons, stored sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HexPolyomino {
    cells: Vec<HexCell>,
}

impl fmt::Debug for HexPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HexPolyomino{{")?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

impl HexPolyomino {
    pub fn new(cells: impl IntoIterator<Item = HexCell>) -> Result<Self> {
        let mut cells: Vec<HexCell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::Empty);
        }
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateCell(w[0].to_string()));
        }
        let set: BTreeSet<HexCell> = cells.iter().copied().collect();
        let mut seen = BTreeSet::from([cells[0]]);
        let mut queue = VecDeque::from([cells[0]]);
        while let Some(c) = queue.pop_front() {
            for nb in c.neighbours() {
                if set.contains(&nb) && seen.insert(nb) {
                    queue.push_back(nb);
                }
            }
        }
        if seen.len() != cells.len() {
            return Err(Error::Disconnected);
        }
        Ok(HexPolyomino { cells })
    }

    pub fn from_axial(cells: &[(i32, i32)]) -> Result<Self> {
        Self::new(cells.iter().map(|&(q, r)| HexCell::new(q, r)))
    }

    pub fn cells(&self) -> &[HexCell] {
        &self.cells
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    /// Translated so the least `q` and the least `r` are both zero.
    pub fn normalize(&self) -> HexPolyomino {
        let q0 = self.cells.iter().map(|c| c.q).min().unwrap_or(0);
        let r0 = self.cells.iter().map(|c| c.r).min().unwrap_or(0);
        let mut cells: Vec<HexCell> = self
            .cells
            .iter()
            .map(|c| HexCell::new(c.q - q0, c.r - r0))
            .collect();
        cells.sort_unstable();
        HexPolyomino { cells }
    }

    pub fn transform(&self, g: &HexSymmetry) -> HexPolyomino {
        let mut cells: Vec<HexCell> = self.cells.iter().map(|c| g.apply(c)).collect();
        cells.sort_unstable();
        HexPolyomino { cells }
    }

    /// Least normalized image under the 12 symmetries.
    pub fn canonical_free(&self) -> HexPolyomino {
        hex_symmetries()
            .iter()
            .map(|g| self.transform(g).normalize())
            .min()
            .expect("nonempty group")
    }

    pub fn is_canonical_free(&self) -> bool {
        *self == self.canonical_free()
    }
}

/// The distinct corners of all hexagons, sorted.
pub fn hex_corner_points(p: &HexPolyomino) -> Vec<HexPoint> {
    let mut pts: Vec<HexPoint> = p.cells.iter().flat_map(|c| c.corners()).collect();
    pts.sort_unstable();
    pts.dedup();
    pts
}

/// Hull polygon in `(p, s)` coordinates.
pub fn hex_hull_polygon(p: &HexPolyomino) -> HullPolygon2D {
    let pts: Vec<(i64, i64)> = hex_corner_points(p).iter().map(|q| (q.p, q.s)).collect();
    HullPolygon2D::from_points(&pts)
}

/// Twelve times the hull area in hexagon units.
pub fn hex_hull_twelfths(p: &HexPolyomino) -> i64 {
    hex_hull_polygon(p).twice_area() as i64
}

/// Hull area in hexagon units.
pub fn hex_hull_area(p: &HexPolyomino) -> Rational {
    frac(hex_hull_twelfths(p), 12)
}

/// `⌊n² + 14n/3 + 1⌋ / 6`.
pub fn hex_bound(n: u64) -> Rational {
    let n = n as i64;
    let floor = (3 * n * n + 14 * n + 3).div_euclid(3);
    frac(floor, 6)
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Argument("n must be positive".into()));
    }
    if n > HEX_GUARD {
        return Err(Error::ResourceLimit {
            what: "polyhex size",
            value: n,
            limit: HEX_GUARD,
        });
    }
    Ok(())
}

fn hex_fold<T, I, V>(n: usize, free: bool, workers: usize, init: I, visit: V) -> Result<Vec<T>>
where
    T: Send,
    I: Fn() -> T + Sync,
    V: Fn(&mut T, HexPolyomino) + Sync,
{
    check_size(n)?;
    let engine = Engine::new(&LatticeGraph::with_offsets(2, &HEX_OFFSETS), n);
    Ok(engine.fold(workers, init, |acc, raw| {
        let mut cells: Vec<HexCell> = raw.iter().map(|c| HexCell::new(c[0], c[1])).collect();
        cells.sort_unstable();
        let p = HexPolyomino { cells }.normalize();
        if !free || p.is_canonical_free() {
            visit(acc, p);
        }
    }))
}

/// One normalized representative per translation class.
pub fn hex_enum_fixed(n: usize) -> Result<Vec<HexPolyomino>> {
    Ok(hex_fold(n, false, 1, Vec::new, |acc, p| acc.push(p))?.concat())
}

/// One canonical representative per congruence class.
pub fn hex_enum_free(n: usize) -> Result<Vec<HexPolyomino>> {
    Ok(hex_fold(n, true, 1, Vec::new, |acc, p| acc.push(p))?.concat())
}

/// Outcome of checking the bound for one size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HexReport {
    pub n: usize,
    /// Number of free polyhexes examined.
    pub count: u64,
    pub max_area: Rational,
    pub bound: Rational,
    pub witness: HexPolyomino,
}

impl HexReport {
    pub fn holds(&self) -> bool {
        self.max_area <= self.bound
    }

    pub fn equality(&self) -> bool {
        self.max_area == self.bound
    }

    pub fn max_k(&self) -> i64 {
        (self.max_area * 12).to_integer()
    }

    pub fn bound_k(&self) -> i64 {
        (self.bound * 12).to_integer()
    }

    /// A one-line verdict; a violation is reported, never hidden.
    pub fn summary(&self) -> String {
        let verdict = if !self.holds() {
            "COUNTEREXAMPLE"
        } else if self.equality() {
            "holds with equality"
        } else {
            "holds"
        };
        format!(
            "n={} polyhexes={} max={} bound={} {}",
            self.n,
            self.count,
            fmt_exact(&self.max_area),
            fmt_exact(&self.bound),
            verdict
        )
    }
}

/// Largest hull area over all free n-hexes against [`hex_bound`].
pub fn check_hex_conjecture(n: usize, workers: usize) -> Result<HexReport> {
    let parts = hex_fold(
        n,
        true,
        workers,
        || (0u64, None::<(i64, HexPolyomino)>),
        |acc, p| {
            acc.0 += 1;
            let k = hex_hull_twelfths(&p);
            if acc.1.as_ref().is_none_or(|(best, _)| k > *best) {
                acc.1 = Some((k, p));
            }
        },
    )?;
    let mut count = 0;
    let mut best: Option<(i64, HexPolyomino)> = None;
    for (c, b) in parts {
        count += c;
        if let Some((k, p)) = b {
            if best.as_ref().is_none_or(|(bk, _)| k > *bk) {
                best = Some((k, p));
            }
        }
    }
    let (k, witness) = best.expect("at least one polyhex");
    Ok(HexReport {
        n,
        count,
        max_area: frac(k, 12),
        bound: hex_bound(n as u64),
        witness,
    })
}

#[derive(Serialize)]
struct HexCsvRow {
    n: usize,
    max_k: i64,
    bound_k: i64,
    equality_flag: bool,
    witness: String,
}

/// Columns `n, max_k, bound_k, equality_flag, witness`; the k columns are
/// twelve times the areas.
pub fn hex_reports_csv(reports: &[HexReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        let witness = r
            .witness
            .cells()
            .iter()
            .map(|c| format!("{},{}", c.q, c.r))
            .collect::<Vec<_>>()
            .join(";");
        w.serialize(HexCsvRow {
            n: r.n,
            max_k: r.max_k(),
            bound_k: r.bound_k(),
            equality_flag: r.equality(),
            witness,
        })
        .map_err(|e| Error::Argument(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Argument(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("ascii"))
}

//! Exhaustive enumeration of polyominoes, polycubes and their 4-d analogues,
//! with the hull-area spectra and the extremal-shape checks built on it.
//!
//! Fixed animals come from Redelmeier's algorithm ([`redelmeier`]); a free
//! animal is kept exactly when its normalized fixed form is the canonical
//! one, so no set of seen shapes is needed.

pub mod redelmeier;
mod shapes;
mod spectrum;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::max_area_2d;
use crate::hull::hull_volume;
use crate::lattice::symmetry::is_canonical_raw;
use crate::lattice::{Cell, Polyomino, MAX_DIM};
use crate::rational::Rational;

pub use redelmeier::{Engine, LatticeGraph};
pub use shapes::{
    classify_extremal_shape, contains_forbidden_pattern, count_extremal_via_shapes,
    extremal_shapes, forbidden_pattern, ExtremalShape,
};
pub use spectrum::{area_spectrum, spectrum_of, volume_spectrum, SpectrumEntry, SpectrumReport};

/// Largest `n` accepted per dimension.
pub fn size_guard(d: usize) -> Option<usize> {
    match d {
        2 => Some(14),
        3 => Some(9),
        4 => Some(7),
        _ => None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Up to translation.
    Fixed,
    /// Up to translation, rotation and reflection.
    Free,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Fixed => "fixed",
            Mode::Free => "free",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fixed" => Ok(Mode::Fixed),
            "free" => Ok(Mode::Free),
            _ => Err(Error::Argument(format!("unknown mode {s:?}"))),
        }
    }
}

/// One enumeration job.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationTask {
    n: usize,
    d: usize,
    mode: Mode,
    workers: usize,
}

impl EnumerationTask {
    /// Checks the size guards; runs single-threaded unless
    /// [`with_workers`](Self::with_workers) says otherwise.
    pub fn new(n: usize, d: usize, mode: Mode) -> Result<Self> {
        let limit = size_guard(d).ok_or(Error::UnsupportedDimension(d))?;
        if n == 0 {
            return Err(Error::Argument("n must be positive".into()));
        }
        if n > limit {
            return Err(Error::ResourceLimit {
                what: "enumeration size",
                value: n,
                limit,
            });
        }
        Ok(EnumerationTask {
            n,
            d,
            mode,
            workers: 1,
        })
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    /// Folds every emitted (normalized) polyomino; one accumulator per work
    /// unit, in search order.
    pub fn fold<T, I, V>(&self, init: I, visit: V) -> Vec<T>
    where
        T: Send,
        I: Fn() -> T + Sync,
        V: Fn(&mut T, Polyomino) + Sync,
    {
        let d = self.d;
        let free = self.mode == Mode::Free;
        let engine = Engine::new(&LatticeGraph::cubic(d), self.n);
        engine.fold(self.workers, init, |acc, raw| {
            let mut sorted: Vec<[i32; MAX_DIM]> = raw.to_vec();
            sorted.sort_unstable();
            if free && !is_canonical_raw(d, &sorted) {
                return;
            }
            let cells = sorted.into_iter().map(|c| Cell::from_raw(d, c)).collect();
            visit(acc, Polyomino::from_sorted_unchecked(d, cells).normalize());
        })
    }

    /// Every polyomino, in deterministic search order.
    pub fn collect(&self) -> Vec<Polyomino> {
        self.fold(Vec::new, |acc, p| acc.push(p)).concat()
    }

    pub fn count(&self) -> u64 {
        self.fold(|| 0u64, |acc, _| *acc += 1).iter().sum()
    }
}

/// One normalized representative of every fixed polyomino.
pub fn enum_fixed(n: usize, d: usize) -> Result<Vec<Polyomino>> {
    Ok(EnumerationTask::new(n, d, Mode::Fixed)?.collect())
}

/// The canonical representative of every free polyomino.
pub fn enum_free(n: usize, d: usize) -> Result<Vec<Polyomino>> {
    Ok(EnumerationTask::new(n, d, Mode::Free)?.collect())
}

/// Free planar polyominoes of maximum hull area.
pub fn extremal_polyominoes(n: usize, workers: usize) -> Result<Vec<Polyomino>> {
    let task = EnumerationTask::new(n, 2, Mode::Free)?.with_workers(workers);
    let max = max_area_2d(n as u64);
    let parts = task.fold(Vec::new, |acc, p| {
        if hull_volume(&p).expect("planar") == max {
            acc.push(p);
        }
    });
    Ok(parts.concat())
}

/// Number of free planar polyominoes of maximum hull area, by enumeration.
pub fn count_extremal(n: usize, workers: usize) -> Result<u64> {
    let task = EnumerationTask::new(n, 2, Mode::Free)?.with_workers(workers);
    let max = max_area_2d(n as u64);
    let parts = task.fold(
        || 0u64,
        |acc, p| {
            if hull_volume(&p).expect("planar") == max {
                *acc += 1;
            }
        },
    );
    Ok(parts.iter().sum())
}

/// Largest hull volume over all free polyominoes of the task's size, with
/// the first witness found.
pub fn max_hull_volume(n: usize, d: usize, workers: usize) -> Result<(Rational, Polyomino)> {
    let task = EnumerationTask::new(n, d, Mode::Free)?.with_workers(workers);
    let parts = task.fold(
        || None::<(Rational, Polyomino)>,
        |acc, p| {
            let v = hull_volume(&p).expect("supported dimension");
            if acc.as_ref().is_none_or(|(best, _)| v > *best) {
                *acc = Some((v, p));
            }
        },
    );
    let mut best: Option<(Rational, Polyomino)> = None;
    for (v, p) in parts.into_iter().flatten() {
        if best.as_ref().is_none_or(|(b, _)| v > *b) {
            best = Some((v, p));
        }
    }
    Ok(best.expect("at least one polyomino"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn fixed_and_free_counts() {
        assert_eq!(enum_fixed(1, 2).unwrap().len(), 1);
        assert_eq!(enum_fixed(4, 2).unwrap().len(), 19);
        assert_eq!(enum_fixed(2, 3).unwrap().len(), 3);
        assert_eq!(enum_free(4, 2).unwrap().len(), 5);
        assert_eq!(enum_free(5, 2).unwrap().len(), 12);
        assert_eq!(enum_free(6, 2).unwrap().len(), 35);
        for d in 2..=4 {
            assert_eq!(enum_free(1, d).unwrap().len(), 1);
        }
    }

    #[test]
    fn free_output_is_canonical_and_distinct() {
        let all = enum_free(7, 2).unwrap();
        assert_eq!(all.len(), 108);
        for p in &all {
            assert!(p.is_canonical_free());
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), all.len());
    }

    #[test]
    fn guards() {
        assert!(matches!(
            EnumerationTask::new(15, 2, Mode::Free),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(EnumerationTask::new(10, 3, Mode::Fixed).is_err());
        assert!(EnumerationTask::new(8, 4, Mode::Fixed).is_err());
        assert!(EnumerationTask::new(3, 5, Mode::Fixed).is_err());
        assert!(EnumerationTask::new(0, 2, Mode::Fixed).is_err());
        assert!(EnumerationTask::new(14, 2, Mode::Free).is_ok());
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let base = EnumerationTask::new(8, 2, Mode::Free).unwrap();
        assert_eq!(base.collect(), base.with_workers(3).collect());
    }

    #[test]
    fn small_extremal_counts() {
        let expect = [1, 1, 1, 3, 5, 11];
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(count_extremal(k + 1, 1).unwrap(), e);
        }
        assert_eq!(max_hull_volume(4, 2, 1).unwrap().0, int(5));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("free".parse::<Mode>().unwrap(), Mode::Free);
        assert!("one-sided".parse::<Mode>().is_err());
        assert_eq!(Mode::Fixed.to_string(), "fixed");
    }
}

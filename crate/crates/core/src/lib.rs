//! Exact convex hulls of polyominoes.
//!
//! The crate computes convex-hull areas and volumes of facet-connected
//! lattice animals (polyominoes, polycubes and their four-dimensional
//! analogues) in exact rational arithmetic, evaluates the closed-form
//! maxima and counting formulas for those hulls, enumerates the animals
//! exhaustively to cross-check every formula, builds explicit witnesses for
//! every attainable planar hull area, and probes the analogous question on
//! the hexagonal lattice.
//!
//! Module map:
//!
//! * [`lattice`]: cells, polyominoes, symmetry, build tuples, cell-list IO.
//! * [`hull`]: exact hull polygon / polytope volume over cell corners.
//! * [`formulas`]: closed forms: `f_2`, `f_d`, maxima, `c_2(n)`, area sets.
//! * [`enumeration`]: Redelmeier enumeration, spectra, extremal shapes.
//! * [`constructions`]: explicit witnesses for every attainable area.
//! * [`hexgrid`]: polyhexes and the hexagon hull bound.
//!
//! ```
//! use polyhull::constructions::construct;
//! use polyhull::formulas::{max_area_2d, max_m_2d};
//! use polyhull::hull::hull_volume;
//!
//! let c = construct(12, max_m_2d(12))?;
//! assert_eq!(hull_volume(&c.polyomino)?, max_area_2d(12));
//! # Ok::<(), polyhull::Error>(())
//! ```

pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod formulas;
pub mod hexgrid;
pub mod hull;
pub mod lattice;
pub mod rational;

pub use error::{Error, Result};
pub use lattice::{BuildOrder, BuildTuple, Cell, Polyomino, MAX_DIM};
pub use rational::Rational;

//! Explicit polyominoes for every attainable planar hull area, and the
//! extremal crosses in every dimension.
//!
//! Areas are written `n + m/2`. Each generator checks its output against
//! the hull oracle before returning it.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::{is_attainable_2d, max_volume_d};
use crate::hull::hull_volume;
use crate::lattice::{Cell, Polyomino, MAX_DIM};
use crate::rational::{fmt_exact, frac, int, Rational};

/// Which family produced a witness, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum ConstructionParams {
    Bar,
    RectMinusCorner { s: u32, t: u32 },
    One { a: u32, b: u32, l: u32 },
    Two,
    Three { b: u32, k1: u32, k2: u32 },
    /// The tall L with a notch; `j` is the row of the loose cell.
    Four { j: u32 },
    /// Variants 1..=3 of the near-maximal L shapes.
    Five { variant: u8 },
    Extremal { d: u32 },
}

impl fmt::Display for ConstructionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionParams::Bar => write!(f, "bar"),
            ConstructionParams::RectMinusCorner { s, t } => write!(f, "rect-minus-corner(s={s},t={t})"),
            ConstructionParams::One { a, b, l } => write!(f, "construction-1(a={a},b={b},l={l})"),
            ConstructionParams::Two => write!(f, "construction-2"),
            ConstructionParams::Three { b, k1, k2 } => {
                write!(f, "construction-3(b={b},k1={k1},k2={k2})")
            }
            ConstructionParams::Four { j } => write!(f, "construction-4(j={j})"),
            ConstructionParams::Five { variant } => write!(f, "construction-5(variant={variant})"),
            ConstructionParams::Extremal { d } => write!(f, "extremal(d={d})"),
        }
    }
}

/// A verified witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub params: ConstructionParams,
    pub polyomino: Polyomino,
    pub area: Rational,
}

fn build(cells: &[(i32, i32)]) -> Result<Polyomino> {
    Polyomino::from_xy(cells)
}

/// Fails unless `p` has `n` cells and hull area `n + m/2`.
fn expect_area(p: &Polyomino, n: u64, m: u64) -> Result<Rational> {
    let want = int(n as i64) + frac(m as i64, 2);
    let got = hull_volume(p)?;
    if p.size() as u64 != n || got != want {
        return Err(Error::Postcondition(format!(
            "expected {n} cells with hull {}, got {} cells with hull {}",
            fmt_exact(&want),
            p.size(),
            fmt_exact(&got)
        )));
    }
    Ok(got)
}

fn arg(msg: String) -> Error {
    Error::Argument(msg)
}

/// The polyomino of maximum hull volume: for d = 2 an L with legs
/// `⌊(n+1)/2⌋` and `⌊(n+2)/2⌋`, otherwise a central cube with one arm of
/// `⌊(n−2+i)/d⌋` cubes along each axis i.
pub fn extremal_max(n: u64, d: usize) -> Result<Polyomino> {
    if n == 0 {
        return Err(arg("n must be positive".into()));
    }
    if d == 0 || d > MAX_DIM {
        return Err(Error::UnsupportedDimension(d));
    }
    let mut cells = vec![Cell::new(&vec![0; d])?];
    for i in 1..=d as u64 {
        let arm = (n + i - 2) / d as u64;
        for k in 1..=arm {
            let mut c = vec![0; d];
            c[i as usize - 1] = k as i32;
            cells.push(Cell::new(&c)?);
        }
    }
    let p = Polyomino::new(cells)?;
    let v = hull_volume(&p)?;
    if p.size() as u64 != n || v != max_volume_d(n, d) {
        return Err(Error::Postcondition(format!(
            "extremal cross for n={n}, d={d} has hull {}",
            fmt_exact(&v)
        )));
    }
    Ok(p)
}

/// The `s × t` rectangle without its top right cell: `st − 1` cells, hull
/// area one half more.
pub fn rect_minus_corner(s: u32, t: u32) -> Result<Polyomino> {
    if s < 2 || t < 2 {
        return Err(arg(format!("rectangle {s}x{t} needs both sides >= 2")));
    }
    let (s, t) = (s as i32, t as i32);
    let cells: Vec<(i32, i32)> = (0..s)
        .flat_map(|x| (0..t).map(move |y| (x, y)))
        .filter(|&c| c != (s - 1, t - 1))
        .collect();
    let p = build(&cells)?;
    expect_area(&p, (s * t - 1) as u64, 1)?;
    Ok(p)
}

/// Bottom row of `a` cells, top row of `b` cells and one more top cell `l`
/// places to the right of that row: `n = a + b + 1`, `m = 2a − n + l`.
pub fn construct1(a: u32, b: u32, l: u32) -> Result<Polyomino> {
    let n = a + b + 1;
    if b < 1 || a < n.div_ceil(2) || a > n - 2 || l + b + 1 > a {
        return Err(arg(format!("construction 1 needs b >= 1, ceil(n/2) <= a <= n-2, l <= a-b-1; got a={a}, b={b}, l={l}")));
    }
    let (a, b, l) = (a as i32, b as i32, l as i32);
    let mut cells: Vec<(i32, i32)> = (0..a).map(|x| (x, 0)).collect();
    cells.extend((0..b).map(|x| (x, 1)));
    cells.push((b + l, 1));
    let p = build(&cells)?;
    expect_area(&p, n as u64, (2 * a - n as i32 + l) as u64)?;
    Ok(p)
}

/// An n-cell polyomino with `m = 2n − 7`, for n >= 7.
pub fn construct2(n: u64) -> Result<Polyomino> {
    if n < 7 {
        return Err(arg(format!("construction 2 needs n >= 7, got {n}")));
    }
    let k = n as i32;
    let cells: Vec<(i32, i32)> = if n <= 8 {
        let mut c: Vec<(i32, i32)> = (1..k - 2).map(|x| (x, 0)).collect();
        c.extend([(0, 1), (1, 1), (0, 2)]);
        c
    } else {
        let mut c: Vec<(i32, i32)> = (0..k - 4).map(|x| (x, 1)).collect();
        c.extend([(0, 0), (4, 0), (0, 2), (3, 2)]);
        c
    };
    let p = build(&cells)?;
    expect_area(&p, n, 2 * n - 7)?;
    Ok(p)
}

/// Column of height `H = n − 2b − 1` capped by a top row of `b + 1` cells,
/// with one cell left of the column `k1` rows below the top and a strip of
/// `b − 1` cells right of it `k2` rows below the top:
/// `m = bn − 2b² − 2b + k1 + k2(b − 1)`.
pub fn construct3(n: u64, b: u32, k1: u32, k2: u32) -> Result<Polyomino> {
    let (ni, bi) = (n as i64, b as i64);
    let k_max = ni - 2 * bi - 2;
    if b < 2 || bi > ni / 4 || k_max < bi || k1 as i64 > k_max || k2 as i64 > k_max {
        return Err(arg(format!(
            "construction 3 needs 2 <= b <= n/4, n-2b-2 >= b, k1,k2 <= n-2b-2; got n={n}, b={b}, k1={k1}, k2={k2}"
        )));
    }
    let h = (ni - 2 * bi - 1) as i32;
    let (b, k1, k2) = (b as i32, k1 as i32, k2 as i32);
    let mut cells: Vec<(i32, i32)> = (0..=b).map(|x| (x, h)).collect();
    cells.extend((0..h).map(|y| (1, y)));
    cells.push((0, h - 1 - k1));
    cells.extend((2..=b).map(|x| (x, h - 1 - k2)));
    let p = build(&cells)?;
    let m = bi * ni - 2 * bi * bi - 2 * bi + k1 as i64 + k2 as i64 * (bi - 1);
    expect_area(&p, n, m as u64)?;
    Ok(p)
}

/// The two ranges served by [`construct_high`]: construction 4 covers
/// `⌊(n²−4n)/4⌋ ..= ⌊(n²−2n−8)/4⌋`, construction 5 covers
/// `⌊(n²−2n−6)/4⌋ ..= ⌊(n²−2n+2)/4⌋`.
pub fn high_ranges(n: u64) -> ((u64, u64), (u64, u64)) {
    let sq = (n * n) as i64;
    let n = n as i64;
    let fl = |v: i64| v.div_euclid(4).max(0) as u64;
    (
        (fl(sq - 4 * n), fl(sq - 2 * n - 8)),
        (fl(sq - 2 * n - 6), fl(sq - 2 * n + 2)),
    )
}

fn high(n: u64, m: u64) -> Result<(Polyomino, ConstructionParams)> {
    let ((lo4, hi4), (t0, t2)) = high_ranges(n);
    let t1 = ((n * n) as i64 - 2 * n as i64 - 2).div_euclid(4) as u64;
    let k = n as i32;
    if n >= 5 && (lo4..=hi4).contains(&m) {
        let (a, b) = ((k - 1) / 2, k / 2);
        let j = (hi4 - m) as i32;
        let mut cells: Vec<(i32, i32)> = (0..b).map(|y| (1, y)).collect();
        cells.extend((2..=a).map(|x| (x, 0)));
        cells.extend([(0, b - 1), (0, j)]);
        return Ok((build(&cells)?, ConstructionParams::Four { j: j as u32 }));
    }
    let (h, w) = ((k - 1) / 2, k / 2);
    let (cells, variant): (Vec<(i32, i32)>, u8) = if m == t2 {
        let mut c: Vec<(i32, i32)> = (0..=h).map(|y| (0, y)).collect();
        c.extend((1..=w).map(|x| (x, 0)));
        (c, 3)
    } else if m == t1 {
        let mut c: Vec<(i32, i32)> = (1..=h).map(|y| (0, y)).collect();
        c.push((1, 1));
        c.extend((1..=w).map(|x| (x, 0)));
        (c, 2)
    } else if m == t0 && n >= 7 {
        let mut c: Vec<(i32, i32)> = (1..=h).map(|y| (0, y)).collect();
        c.extend([(1, 1), (2, 1)]);
        c.extend((2..=w).map(|x| (x, 0)));
        (c, 1)
    } else if m == t0 {
        // only n = 5 reaches this; m = 2 there
        let a = n.div_ceil(2) as u32;
        let b = n as u32 - a - 1;
        let l = m as u32 + n as u32 - 2 * a;
        return Ok((construct1(a, b, l)?, ConstructionParams::One { a, b, l }));
    } else {
        return Err(arg(format!(
            "m={m} outside {lo4}..={hi4} and {t0}..={t2} for n={n}"
        )));
    };
    Ok((build(&cells)?, ConstructionParams::Five { variant }))
}

/// Near-maximal areas: `m` in either range of [`high_ranges`].
pub fn construct_high(n: u64, m: u64) -> Result<Polyomino> {
    if n < 5 {
        return Err(arg(format!("constructions 4 and 5 need n >= 5, got {n}")));
    }
    let (p, _) = high(n, m)?;
    expect_area(&p, n, m)?;
    Ok(p)
}

fn construct3_for(n: u64, m: u64) -> Option<(u32, u32, u32)> {
    for b in 2..=(n / 4) {
        let k_max = n as i64 - 2 * b as i64 - 2;
        if k_max < b as i64 {
            continue;
        }
        let base = (b * n) as i64 - 2 * (b * b) as i64 - 2 * b as i64;
        for k2 in 0..=k_max {
            let k1 = m as i64 - base - k2 * (b as i64 - 1);
            if (0..=k_max).contains(&k1) {
                return Some((b as u32, k1 as u32, k2 as u32));
            }
        }
    }
    None
}

/// A polyomino with `n` cells and hull area exactly `n + m/2`.
///
/// Fails with [`Error::Unachievable`] when no such polyomino exists.
pub fn construct(n: u64, m: u64) -> Result<Construction> {
    if n == 0 {
        return Err(arg("n must be positive".into()));
    }
    if !is_attainable_2d(n, m) {
        return Err(Error::Unachievable { n: n as u32, m });
    }
    let (polyomino, params) = dispatch(n, m)?;
    let area = expect_area(&polyomino, n, m)?;
    Ok(Construction {
        params,
        polyomino,
        area,
    })
}

fn dispatch(n: u64, m: u64) -> Result<(Polyomino, ConstructionParams)> {
    if m == 0 {
        let cells: Vec<(i32, i32)> = (0..n as i32).map(|x| (x, 0)).collect();
        return Ok((build(&cells)?, ConstructionParams::Bar));
    }
    if m == 1 {
        let s = (2..=n + 1).find(|s| (n + 1).is_multiple_of(*s)).expect("n + 1 composite") as u32;
        let t = (n as u32 + 1) / s;
        return Ok((rect_minus_corner(s, t)?, ConstructionParams::RectMinusCorner { s, t }));
    }
    if m + 8 <= 2 * n {
        let a = n.div_ceil(2).max((m + 2 * n).div_ceil(4)) as u32;
        let b = n as u32 - a - 1;
        let l = m as u32 + n as u32 - 2 * a;
        return Ok((construct1(a, b, l)?, ConstructionParams::One { a, b, l }));
    }
    if n >= 7 && m == 2 * n - 7 {
        return Ok((construct2(n)?, ConstructionParams::Two));
    }
    let ((lo4, hi4), _) = high_ranges(n);
    let top3 = (n * n - 4 * n).div_ceil(4);
    if m + 6 >= 2 * n && m <= top3 && !(lo4..=hi4).contains(&m) {
        if let Some((b, k1, k2)) = construct3_for(n, m) {
            return Ok((construct3(n, b, k1, k2)?, ConstructionParams::Three { b, k1, k2 }));
        }
    }
    high(n, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{attainable_set_2d, max_m_2d};

    #[test]
    fn extremal_examples() {
        let l = extremal_max(4, 2).unwrap();
        assert_eq!(l.bounding_box(), [2, 3]);
        assert_eq!(hull_volume(&l).unwrap(), int(5));
        assert_eq!(hull_volume(&extremal_max(4, 3).unwrap()).unwrap(), frac(17, 3));
        for d in 1..=4 {
            assert_eq!(extremal_max(1, d).unwrap().size(), 1);
        }
        assert!(extremal_max(3, 5).is_err());
    }

    #[test]
    fn rectangle_minus_corner() {
        for (s, t, area) in [(2, 3, frac(11, 2)), (2, 2, frac(7, 2)), (3, 3, frac(17, 2))] {
            assert_eq!(hull_volume(&rect_minus_corner(s, t).unwrap()).unwrap(), area);
        }
        assert!(rect_minus_corner(1, 4).is_err());
    }

    #[test]
    fn construction1() {
        assert!(construct1(5, 2, 0).is_ok());
        assert!(construct1(5, 2, 2).is_ok());
        assert!(construct1(5, 2, 3).is_err());
        assert!(construct1(2, 5, 0).is_err());
        // all (a, l) for n = 10 sweep 2..=12 and more
        let mut ms = std::collections::BTreeSet::new();
        for a in 5..=8u32 {
            let b = 9 - a;
            for l in 0..=(2 * a - 10) {
                if b >= 1 {
                    construct1(a, b, l).unwrap();
                    ms.insert(2 * a - 10 + l);
                }
            }
        }
        assert!((2..=12).all(|m| ms.contains(&m)));
    }

    #[test]
    fn construction2() {
        for n in 7..40 {
            construct2(n).unwrap();
        }
        assert!(construct2(6).is_err());
    }

    #[test]
    fn construction3() {
        construct3(10, 2, 0, 0).unwrap();
        construct3(10, 2, 1, 0).unwrap();
        assert!(construct3(10, 2, 5, 0).is_err());
        let n = 16;
        let mut ms = std::collections::BTreeSet::new();
        for b in 2..=4u32 {
            let k_max = n as i64 - 2 * b as i64 - 2;
            if k_max < b as i64 {
                continue;
            }
            for k1 in 0..=k_max as u32 {
                for k2 in 0..=k_max as u32 {
                    construct3(n, b, k1, k2).unwrap();
                    let bb = b as u64;
                    ms.insert(bb * n - 2 * bb * bb - 2 * bb + (k1 + k2 * (b - 1)) as u64);
                }
            }
        }
        assert!((2 * n - 6..=(n * n - 4 * n).div_ceil(4)).all(|m| ms.contains(&m)));
    }

    #[test]
    fn high_ranges_are_served() {
        for n in 5..40u64 {
            let ((lo4, hi4), (t0, t2)) = high_ranges(n);
            for m in (lo4..=hi4).chain(t0..=t2) {
                construct_high(n, m).unwrap();
            }
            assert_eq!(t2, max_m_2d(n));
        }
        let p = construct_high(8, 12).unwrap();
        assert_eq!(hull_volume(&p).unwrap(), int(14));
        let p = construct_high(9, 14).unwrap();
        assert_eq!(hull_volume(&p).unwrap(), int(16));
        assert!(construct_high(9, 3).is_err());
    }

    #[test]
    fn dispatcher() {
        assert_eq!(construct(7, 0).unwrap().params, ConstructionParams::Bar);
        let p = construct(5, 1).unwrap();
        assert_eq!(p.params, ConstructionParams::RectMinusCorner { s: 2, t: 3 });
        assert_eq!(p.area, frac(11, 2));
        assert!(matches!(construct(4, 1), Err(Error::Unachievable { n: 4, m: 1 })));
        assert!(matches!(construct(5, 5), Err(Error::Unachievable { .. })));
        for n in 1..=20 {
            for m in attainable_set_2d(n).unwrap().m_values() {
                construct(n, m).unwrap();
            }
        }
    }
}

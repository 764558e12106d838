//! Closed forms: the hull bounds `f_2` and `f_d`, the maxima, the count
//! `c_2(n)` of extremal polyominoes with its generating function, and the
//! sets of attainable hull areas.
//!
//! The planar maximum is `n + ½⌊(n−1)/2⌋⌊n/2⌋`. Some printings drop the
//! factor ½; that reading is contradicted by the square tetrominoes
//! (n = 4 gives 5, not 6) and by the d = 2 case of [`max_volume_d`].

use crate::error::{Error, Result};
use crate::lattice::MAX_DIM;
use crate::rational::{frac, int, Rational};

fn check_lv(l: &[i64], v: &[i64]) -> Result<()> {
    if l.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: l.len(),
            found: v.len(),
        });
    }
    if let Some(x) = l.iter().find(|&&x| x < 1) {
        return Err(Error::Argument(format!("box length {x} < 1")));
    }
    if let Some(x) = v.iter().find(|&&x| x < 0) {
        return Err(Error::Argument(format!("counter {x} < 0")));
    }
    Ok(())
}

/// The planar bound
/// `1 + (l1−1) + (l2−1) + (l1−1)(l2−1)/2 + v1 + v2 + v1(l2−1)/2 + v2(l1−1)/2 + v1·v2/2`.
pub fn f2(l1: i64, l2: i64, v1: i64, v2: i64) -> Result<Rational> {
    check_lv(&[l1, l2], &[v1, v2])?;
    let (a, b) = (l1 - 1, l2 - 1);
    let twice = 2 + 2 * a + 2 * b + a * b + 2 * v1 + 2 * v2 + v1 * b + v2 * a + v1 * v2;
    Ok(frac(twice, 2))
}

/// Arguments of [`fd`]: box lengths `l_i ≥ 1` and counters `v_i ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FdArguments {
    l: Vec<i64>,
    v: Vec<i64>,
}

impl FdArguments {
    pub fn new(l: Vec<i64>, v: Vec<i64>) -> Result<Self> {
        check_lv(&l, &v)?;
        if l.is_empty() || l.len() > MAX_DIM {
            return Err(Error::UnsupportedDimension(l.len()));
        }
        Ok(FdArguments { l, v })
    }

    /// Box lengths only, all counters zero.
    pub fn boxed(l: Vec<i64>) -> Result<Self> {
        let v = vec![0; l.len()];
        Self::new(l, v)
    }

    pub fn d(&self) -> usize {
        self.l.len()
    }

    pub fn l(&self) -> &[i64] {
        &self.l
    }

    pub fn v(&self) -> &[i64] {
        &self.v
    }
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// The d-dimensional bound
/// `Σ_{I⊆[d]} 1/(|I|!·2^{d−|I|}) Σ_{b<2^d} Π_{i∈I} q_{b,i}`
/// where `q_{b,i}` is `l_i − 1` when bit i of b is clear and `v_i` when set.
///
/// Evaluated term by term over every `I` and `b`.
pub fn fd(args: &FdArguments) -> Rational {
    let d = args.d();
    let mut total = int(0);
    for set in 0u32..1 << d {
        let size = set.count_ones() as usize;
        let mut inner: i64 = 0;
        for b in 0u32..1 << d {
            let mut prod: i64 = 1;
            for i in 0..d {
                if set >> i & 1 == 1 {
                    prod *= if b >> i & 1 == 0 { args.l[i] - 1 } else { args.v[i] };
                }
            }
            inner += prod;
        }
        total += frac(inner, factorial(size) << (d - size));
    }
    total
}

/// `⌊(n−1)/2⌋·⌊n/2⌋`, the largest admissible `m` in `n + m/2`.
pub fn max_m_2d(n: u64) -> u64 {
    (n.saturating_sub(1) / 2) * (n / 2)
}

/// Largest hull area of an n-cell polyomino: `n + ½⌊(n−1)/2⌋⌊n/2⌋`.
pub fn max_area_2d(n: u64) -> Rational {
    int(n as i64) + frac(max_m_2d(n) as i64, 2)
}

/// Largest hull volume of an n-cell polyomino in dimension d:
/// `Σ_{I⊆[d]} (1/|I|!) Π_{i∈I} ⌊(n−2+i)/d⌋`.
pub fn max_volume_d(n: u64, d: usize) -> Rational {
    let arms: Vec<i64> = (1..=d as i64)
        .map(|i| (n as i64 - 2 + i).div_euclid(d as i64))
        .collect();
    let mut total = int(0);
    for set in 0u32..1 << d {
        let prod: i64 = (0..d)
            .filter(|i| set >> i & 1 == 1)
            .map(|i| arms[i])
            .product();
        total += frac(prod, factorial(set.count_ones() as usize));
    }
    total
}

/// Box lengths `l_i = ⌊(n−2+i+d)/d⌋` of the extremal cross.
pub fn extremal_box(n: u64, d: usize) -> Vec<i64> {
    (1..=d as i64)
        .map(|i| (n as i64 - 2 + i + d as i64).div_euclid(d as i64))
        .collect()
}

/// Number of free n-cell polyominoes of maximum hull area.
pub fn c2_closed(n: u64) -> u64 {
    let n = n as i128;
    let cube = n * n * n - 2 * n * n;
    let (num, den) = match n % 4 {
        0 => (cube + 4 * n, 16),
        1 => (cube + 13 * n + 20, 32),
        2 => (cube + 4 * n + 8, 16),
        _ => (cube + 5 * n + 8, 32),
    };
    assert_eq!(num % den, 0, "c2 branch not integral at n = {n}");
    (num / den) as u64
}

const C2_GF_NUMERATOR: [i64; 13] = [1, 1, -1, -1, 0, 2, 8, 2, 4, 2, -1, 0, 1];

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `x^1..x^count` in
/// `(1+x−x²−x³+2x⁵+8x⁶+2x⁷+4x⁸+2x⁹−x¹⁰+x¹²) / ((1−x²)²(1−x⁴)²)`,
/// by exact power-series division.
pub fn c2_gf_coeffs(count: usize) -> Result<Vec<i64>> {
    let sq = [1, 0, -1];
    let quad = [1, 0, 0, 0, -1];
    let den = poly_mul(&poly_mul(&sq, &sq), &poly_mul(&quad, &quad));
    debug_assert_eq!(den[0], 1);
    let mut series: Vec<i64> = Vec::with_capacity(count + 1);
    for k in 0..=count {
        let mut a = C2_GF_NUMERATOR.get(k).copied().unwrap_or(0);
        for (j, dj) in den.iter().enumerate().skip(1).take(k) {
            let t = dj.checked_mul(series[k - j]).ok_or(Error::Overflow)?;
            a = a.checked_sub(t).ok_or(Error::Overflow)?;
        }
        series.push(a);
    }
    series.remove(0);
    Ok(series)
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Whether `n + m/2` is the hull area of some n-cell polyomino.
pub fn is_attainable_2d(n: u64, m: u64) -> bool {
    n >= 1 && m <= max_m_2d(n) && !(m == 1 && is_prime(n + 1))
}

/// The set of attainable planar hull areas for a fixed n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttainableSet2D {
    n: u64,
    values: Vec<Rational>,
}

impl AttainableSet2D {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Areas in increasing order.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// The `m` with area `n + m/2`, increasing.
    pub fn m_values(&self) -> Vec<u64> {
        let n = int(self.n as i64);
        self.values
            .iter()
            .map(|v| ((*v - n) * int(2)).to_integer() as u64)
            .collect()
    }

    pub fn contains(&self, area: &Rational) -> bool {
        self.values.binary_search(area).is_ok()
    }

    pub fn min(&self) -> Rational {
        self.values[0]
    }

    pub fn max(&self) -> Rational {
        *self.values.last().expect("nonempty")
    }
}

/// `{n + m/2 : 0 ≤ m ≤ ⌊(n−1)/2⌋⌊n/2⌋}`, without `m = 1` when `n + 1` is prime.
pub fn attainable_set_2d(n: u64) -> Result<AttainableSet2D> {
    if n == 0 {
        return Err(Error::Argument("n must be positive".into()));
    }
    let values = (0..=max_m_2d(n))
        .filter(|&m| is_attainable_2d(n, m))
        .map(|m| int(n as i64) + frac(m as i64, 2))
        .collect();
    Ok(AttainableSet2D { n, values })
}

/// Membership test for the candidate hull volumes of n-cell polyominoes in
/// dimension d: values `n + m/d!` with `m ≥ 0`, capped at [`max_volume_d`].
///
/// The cap is the proved maximum. A looser printed cap of
/// `n + Σ_I (1/|I|!) Π ⌊(n−2+i)/d⌋` (which double counts the empty set)
/// would admit strictly more values; it is not used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VolumeSuperset {
    n: u64,
    d: usize,
    cap: Rational,
}

impl VolumeSuperset {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn cap(&self) -> Rational {
        self.cap
    }

    /// Grid spacing `1/d!`.
    pub fn step(&self) -> Rational {
        frac(1, factorial(self.d))
    }

    pub fn contains(&self, v: &Rational) -> bool {
        let excess = *v - int(self.n as i64);
        excess >= int(0) && (excess / self.step()).is_integer() && *v <= self.cap
    }

    /// Number of grid values in the set.
    pub fn len(&self) -> u64 {
        ((self.cap - int(self.n as i64)) / self.step()).to_integer() as u64 + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub fn attainable_superset_d(n: u64, d: usize) -> Result<VolumeSuperset> {
    if n == 0 {
        return Err(Error::Argument("n must be positive".into()));
    }
    if d == 0 || d > MAX_DIM {
        return Err(Error::UnsupportedDimension(d));
    }
    Ok(VolumeSuperset {
        n,
        d,
        cap: max_volume_d(n, d),
    })
}

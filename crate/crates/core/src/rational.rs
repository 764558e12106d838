//! Exact rational numbers.
//!
//! Every area and volume in the crate is a [`Rational`]; values stay small
//! (the largest appear in `max_volume_d` for n in the low thousands), so a
//! 64-bit numerator and denominator are plenty.

use num_rational::Ratio;

pub type Rational = Ratio<i64>;

/// Integer as a rational.
#[inline]
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// `num / den`, reduced.
#[inline]
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

/// Renders as `p/q` (or `p` when the denominator is one).
pub fn fmt_exact(r: &Rational) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `r * k` as an integer, or `None` if it is not integral.
pub fn scaled_integer(r: &Rational, k: i64) -> Option<i64> {
    let s = *r * int(k);
    s.is_integer().then(|| s.to_integer())
}

/// Parses `p`, `p/q` or `-p/q`.
pub fn parse_exact(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            (q != 0).then(|| frac(p, q))
        }
        None => s.parse().ok().map(int),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(fmt_exact(&frac(7, 2)), "7/2");
        assert_eq!(fmt_exact(&frac(10, 2)), "5");
        assert_eq!(fmt_exact(&frac(-17, 3)), "-17/3");
    }

    #[test]
    fn parse_roundtrip() {
        for r in [frac(7, 2), int(5), frac(-17, 6)] {
            assert_eq!(parse_exact(&fmt_exact(&r)), Some(r));
        }
        assert_eq!(parse_exact("1/0"), None);
        assert_eq!(parse_exact("x"), None);
    }

    #[test]
    fn scaling() {
        assert_eq!(scaled_integer(&frac(17, 3), 6), Some(34));
        assert_eq!(scaled_integer(&frac(1, 4), 2), None);
    }
}

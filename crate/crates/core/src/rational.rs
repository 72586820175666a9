//! Exact rational scalars and the few helpers the rest of the crate needs on
//! top of [`num_rational::BigRational`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in canonical reduced form.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half(v: &Rational) -> Rational {
    v / int(2)
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Formats as `p/q`, including a denominator of 1.
pub fn format(v: &Rational) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Parses `p/q` or a bare integer `p`.
pub fn parse(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidInput(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn to_f64(v: &Rational) -> f64 {
    v.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: fall back to a shifted division.
        let n = v.numer().to_f64().unwrap_or(f64::MAX);
        let d = v.denom().to_f64().unwrap_or(f64::MAX);
        n / d
    })
}

/// The rational with the smallest denominator strictly inside `(lo, hi)`.
///
/// Used wherever a construction is free to pick any point of an open interval;
/// picking simple values keeps coordinate sizes from compounding.
pub fn simplest_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "empty interval");
    if lo.is_negative() && hi.is_positive() {
        return zero();
    }
    if !hi.is_positive() {
        return -simplest_nonneg(&-hi, &-lo);
    }
    simplest_nonneg(lo, hi)
}

// 0 <= lo < hi
fn simplest_nonneg(lo: &Rational, hi: &Rational) -> Rational {
    let fl = lo.floor();
    let next = &fl + one();
    if &next < hi {
        // An integer fits; prefer the smallest one above lo.
        return next;
    }
    // lo and hi share the unit interval [fl, fl + 1].
    let lo_frac = lo - &fl;
    let hi_frac = hi - &fl;
    if lo_frac.is_zero() {
        // (0, hi_frac): 1/m with m the smallest integer above 1/hi_frac.
        let m = (hi_frac.recip()).floor() + one();
        return fl + m.recip();
    }
    let inner = simplest_nonneg(&hi_frac.recip(), &lo_frac.recip());
    fl + inner.recip()
}

/// Bit length of the denominator, handy for sizing diagnostics.
pub fn denominator_bits(v: &Rational) -> u64 {
    v.denom().bits()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        let v = parse("6/-4").unwrap();
        assert_eq!(v, frac(-3, 2));
        assert_eq!(format(&v), "-3/2");
        assert_eq!(parse("7").unwrap(), int(7));
        assert_eq!(format(&int(7)), "7/1");
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn simplest_between_picks_small_denominators() {
        assert_eq!(simplest_between(&frac(1, 3), &frac(1, 2)), frac(2, 5));
        assert_eq!(simplest_between(&frac(-1, 2), &frac(1, 2)), zero());
        assert_eq!(simplest_between(&int(2), &int(5)), int(3));
        assert_eq!(simplest_between(&int(0), &frac(1, 10)), frac(1, 11));
        assert_eq!(simplest_between(&frac(-5, 2), &frac(-7, 3)), frac(-12, 5));
        let lo = frac(355, 113);
        let hi = frac(22, 7);
        let s = simplest_between(&lo, &hi);
        assert!(lo < s && s < hi);
    }

    #[test]
    fn simplest_between_is_strictly_inside() {
        for a in -20..20 {
            for b in 1..12 {
                let lo = frac(a, b);
                for w in 1..6 {
                    let hi = &lo + frac(1, w * 7);
                    let s = simplest_between(&lo, &hi);
                    assert!(lo < s && s < hi, "{lo} {hi} {s}");
                }
            }
        }
    }
}

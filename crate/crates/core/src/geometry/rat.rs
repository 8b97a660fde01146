//! Exact rational scalar type and parsing/formatting helpers.
//!
//! All correctness-bearing arithmetic in this crate is exact. `Rat` is an
//! arbitrary-precision rational kept in canonical form (gcd 1, positive
//! denominator) by construction. Serialized form is `"n"` or `"n/d"` with the
//! sign on the numerator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical string form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `"n"` or `"n/d"`. Result is canonicalized; `d == 0` is rejected.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    match s.split_once('/') {
        None => {
            let n = BigInt::from_str(s.trim()).map_err(|e| format!("bad integer {s:?}: {e}"))?;
            Ok(BigRational::from_integer(n))
        }
        Some((ns, ds)) => {
            let n = BigInt::from_str(ns.trim()).map_err(|e| format!("bad numerator {ns:?}: {e}"))?;
            let d = BigInt::from_str(ds.trim()).map_err(|e| format!("bad denominator {ds:?}: {e}"))?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Approximate value as f64, for display and float-seeded candidate points only.
pub fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer();
    let d = r.denom();
    // Exact conversion is fine for moderate sizes; fall back to a digit-based
    // estimate when the parts exceed f64 range.
    let nf = bigint_to_f64(n);
    let df = bigint_to_f64(d);
    nf / df
}

fn bigint_to_f64(x: &BigInt) -> f64 {
    // `to_string`-free conversion: use the built-in lossy conversion.
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(if x.is_negative() { f64::MIN } else { f64::MAX })
}

/// Rational with small denominator from an f64, by snapping to a dyadic grid.
pub fn rat_from_f64_dyadic(x: f64, grid_log2: u32) -> Rat {
    let scale = (1u64 << grid_log2.min(52)) as f64;
    let scaled = (x * scale).round();
    // Clamp to avoid overflow on absurd inputs.
    let scaled = scaled.clamp(-9.0e15, 9.0e15) as i64;
    BigRational::new(BigInt::from(scaled), BigInt::from(1u64 << grid_log2.min(52)))
}

/// The simplest rational (smallest denominator, then smallest numerator) in
/// the open interval `(lo, hi)`. Used to keep constructed coordinates small.
pub fn simplest_in_open(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo < hi, "empty interval");
    simplest_rec(lo, hi)
}

fn simplest_rec(lo: &Rat, hi: &Rat) -> Rat {
    let zero = Rat::zero();
    if *lo < zero && zero < *hi {
        return zero;
    }
    if *hi <= zero {
        return -simplest_rec(&-hi.clone(), &-lo.clone());
    }
    // 0 <= lo < hi
    let fl = lo.floor();
    let next_int = &fl + Rat::one();
    if *lo < next_int && next_int < *hi {
        return next_int;
    }
    if lo.denom().is_one() && &fl + Rat::one() == *hi && *lo == fl {
        // (n, n+1): no integer inside; recurse into the fractional part below.
    }
    // Both endpoints within [fl, fl+1); strip the integer part and invert.
    let lo_f = lo - &fl;
    let hi_f = hi - &fl;
    if lo_f.is_zero() {
        // (0, hi_f): simplest is 1/(floor(1/hi_f)+1)
        let inv = hi_f.recip();
        let d = inv.floor() + Rat::one();
        return &fl + d.recip();
    }
    let inner = simplest_rec(&hi_f.recip(), &lo_f.recip());
    &fl + inner.recip()
}

/// Bit length of the larger of numerator and denominator, a coordinate-size
/// measure reported by `bench`.
pub fn rat_bits(r: &Rat) -> u64 {
    r.numer().bits().max(r.denom().bits())
}

/// Round to the nearest multiple of `2^-grid_log2`, exactly.
pub fn round_to_dyadic(r: &Rat, grid_log2: u32) -> Rat {
    let scale = BigRational::new(BigInt::from(1) << grid_log2, BigInt::from(1));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    ((r * &scale) + half).floor() / scale
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_format_round_trip() {
        for s in ["0", "-3", "7/2", "-7/2", "1000000000000000000000/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // canonicalization
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert_eq!(format_rat(&parse_rat("2/-4").unwrap()), "-1/2");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn simplest_in_open_picks_small_denominators() {
        let r = simplest_in_open(&ratio(1, 3), &ratio(2, 3));
        assert_eq!(r, ratio(1, 2));
        let r = simplest_in_open(&ratio(-5, 2), &ratio(7, 2));
        assert_eq!(r, rat(0));
        let r = simplest_in_open(&ratio(15, 7), &ratio(16, 7));
        assert!(ratio(15, 7) < r && r < ratio(16, 7));
        assert!(r.denom() <= &num_bigint::BigInt::from(7));
        let r = simplest_in_open(&rat(3), &rat(4));
        assert!(rat(3) < r && r < rat(4));
    }
}

//! Arbitrary-precision rationals: the coefficient carrier for everything exact.
//!
//! `Rat` is `num_rational::BigRational`, which keeps values in lowest terms
//! with a positive denominator. Helpers here cover construction from small
//! integers, parsing/formatting of the `"a/b"` wire format, and integer powers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational n/d. Panics on d = 0.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse the exact wire format: "a", "-a", or "a/b".
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let num: BigInt = n.trim().parse().map_err(|e| format!("bad numerator {n:?}: {e}"))?;
        let den: BigInt = d.trim().parse().map_err(|e| format!("bad denominator {d:?}: {e}"))?;
        if den.is_zero() {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(BigRational::new(num, den))
    } else {
        let num: BigInt = s.parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
        Ok(BigRational::from_integer(num))
    }
}

/// Exact wire format: integers render without "/1".
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// r^k for signed k; errors on inverting zero.
pub fn rat_pow(r: &Rat, k: i32) -> Rat {
    if k >= 0 {
        num_traits::pow::pow(r.clone(), k as usize)
    } else {
        num_traits::pow::pow(r.recip(), (-k) as usize)
    }
}

/// Nearest f64, for display only. Exact paths never call this.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // fall back to a scaled division for very large entries
        let num = r.numer();
        let den = r.denom();
        let shift = (num.bits() as i64 - den.bits() as i64).max(0);
        let scaled = num >> shift;
        (scaled.to_f64().unwrap_or(f64::NAN) / den.to_f64().unwrap_or(f64::NAN))
            * 2f64.powi(shift as i32)
    })
}

/// True if r is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// True if r >= 0.
pub fn is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["0", "1", "-7", "3/4", "-22/7", "123456789012345678901234567890/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert_eq!(parse_rat("4/2").unwrap(), rat(2));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn pow_and_helpers() {
        assert_eq!(rat_pow(&ratio(2, 3), 3), ratio(8, 27));
        assert_eq!(rat_pow(&ratio(2, 1), -2), ratio(1, 4));
        assert!(is_integer(&rat(5)));
        assert!(!is_integer(&ratio(1, 2)));
    }
}

//! Exact rational scalars and their text form.
//!
//! Text is either `a` or `a/b` with an optional leading `-` on `a` and
//! `b > 0`. Output is always reduced, so `format(parse(t))` is canonical and
//! re-parses to the same value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn half() -> Scalar {
    ratio(1, 2)
}

pub fn is_integer(x: &Scalar) -> bool {
    x.is_integer()
}

/// True when `2x` is an integer.
pub fn is_half_integer(x: &Scalar) -> bool {
    (x * int(2)).is_integer()
}

/// `2x` as a machine integer, if `x` is a half-integer that fits.
pub fn doubled_i64(x: &Scalar) -> Option<i64> {
    let d = x * int(2);
    if d.is_integer() {
        d.to_integer().to_i64()
    } else {
        None
    }
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Scalar::new(n, d))
}

pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_scalar("3").unwrap(), int(3));
        assert_eq!(parse_scalar("-7/2").unwrap(), ratio(-7, 2));
        assert_eq!(parse_scalar("4/6").unwrap(), ratio(2, 3));
        assert_eq!(parse_scalar(" 0 ").unwrap(), int(0));
    }

    #[test]
    fn rejects_malformed_text() {
        for t in ["", "-", "1/", "/2", "1/0", "1/-2", "+1", "1.5", "a", "1/2/3", "--1"] {
            assert!(parse_scalar(t).is_err(), "{t:?} should be rejected");
        }
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_scalar(&ratio(6, 4)), "3/2");
        assert_eq!(format_scalar(&ratio(-6, 3)), "-2");
        assert_eq!(format_scalar(&ratio(1, -2)), "-1/2");
    }

    #[test]
    fn half_integer_helpers() {
        assert!(is_half_integer(&ratio(3, 2)));
        assert!(!is_half_integer(&ratio(1, 3)));
        assert_eq!(doubled_i64(&ratio(-5, 2)), Some(-5));
        assert_eq!(doubled_i64(&ratio(1, 3)), None);
    }

    proptest! {
        #[test]
        fn sum_round_trips_through_text(a in -1000i64..1000, b in 1i64..60, c in -1000i64..1000, d in 1i64..60) {
            let x = ratio(a, b) + ratio(c, d);
            let back = parse_scalar(&format_scalar(&x)).unwrap();
            prop_assert_eq!(&back, &x);
            // reduced form
            prop_assert!(num_integer::Integer::gcd(back.numer(), back.denom()).is_one());
        }

        #[test]
        fn addition_is_associative_and_commutative(a in -50i64..50, b in 1i64..9, c in -50i64..50, d in 1i64..9, e in -50i64..50, f in 1i64..9) {
            let (x, y, z) = (ratio(a, b), ratio(c, d), ratio(e, f));
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!((&x + &y) + &z, &x + (&y + &z));
        }
    }
}

//! Exact rational scalars.
//!
//! Every numeric quantity in this crate is an arbitrary-precision rational.
//! [`Scalar`] values are always stored in lowest terms with a positive
//! denominator (the backing type normalizes on construction), so equality
//! is plain structural equality and no tolerance ever appears.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, the coefficient field for everything here.
pub type Scalar = num_rational::BigRational;

/// The scalar `v/1`.
pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

/// The scalar `num/den` in lowest terms.
///
/// Panics if `den == 0`; use [`parse`] for fallible construction.
pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"` or `"p/q"` into a scalar.
pub fn parse(text: &str) -> Result<Scalar> {
    let make_err = || Error::Invalid(format!("cannot parse scalar from {text:?}"));
    match text.split_once('/') {
        None => text
            .trim()
            .parse::<BigInt>()
            .map(Scalar::from_integer)
            .map_err(|_| make_err()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| make_err())?;
            let q: BigInt = q.trim().parse().map_err(|_| make_err())?;
            if q.is_zero() {
                return Err(Error::Invalid(format!("zero denominator in {text:?}")));
            }
            Ok(Scalar::new(p, q))
        }
    }
}

/// Exact value as `i64` if the scalar is an integer that fits.
pub fn to_i64(s: &Scalar) -> Option<i64> {
    if !s.is_integer() {
        return None;
    }
    let n = s.numer();
    i64::try_from(n.clone()).ok()
}

/// Least positive integer `q` such that `q * s` is an integer for every
/// scalar in `values`; `1` for an empty list.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    let mut q = BigInt::one();
    for v in values {
        q = num_integer::lcm(q, v.denom().abs());
    }
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_normalizes() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(1, -2), ratio(-1, 2));
        assert_eq!(ratio(0, 7), int(0));
        assert!(ratio(-1, 2).denom() > &BigInt::zero());
    }

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!(parse("6").unwrap(), int(6));
        assert_eq!(parse("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse(" 4 / 6 ").unwrap(), ratio(2, 3));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in [int(6), ratio(-3, 2), int(0), ratio(22, 7)] {
            assert_eq!(parse(&s.to_string()).unwrap(), s);
        }
    }

    #[test]
    fn common_denominator_is_lcm() {
        let vals = [ratio(1, 2), ratio(1, 3), int(5)];
        assert_eq!(common_denominator(&vals), BigInt::from(6));
        assert_eq!(common_denominator([]), BigInt::one());
    }

    #[test]
    fn to_i64_only_for_integers() {
        assert_eq!(to_i64(&int(-7)), Some(-7));
        assert_eq!(to_i64(&ratio(1, 2)), None);
    }
}

//! Exact rational scalars.
//!
//! Every resistance, conductance, matrix entry and derived quantity in this
//! crate is a [`Rational`]: an arbitrary-precision fraction kept in canonical
//! form (positive denominator, gcd 1). There is no floating-point mode; all
//! identities are checked with exact equality.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

/// Arbitrary-precision rational number in canonical form.
///
/// The canonical serialization is `p/q` with `q > 0` and `gcd(|p|, q) = 1`,
/// shortened to `p` when `q = 1`; that is exactly what `Display` produces.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses `INT`, `INT "/" POSINT` or a terminating decimal, with an optional
/// leading minus. Decimals convert exactly: `"0.25"` is 1/4, never a float.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let malformed = || RationalParseError::Malformed(text.to_owned());
    let (negative, digits) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };

    let value = if let Some((num, den)) = digits.split_once('/') {
        let num = parse_digits(num).ok_or_else(malformed)?;
        let den = parse_digits(den).ok_or_else(malformed)?;
        if den.is_zero() {
            return Err(RationalParseError::ZeroDenominator(text.to_owned()));
        }
        Rational::new(num.into(), den.into())
    } else if let Some((int_part, frac_part)) = digits.split_once('.') {
        let int_part = parse_digits(int_part).ok_or_else(malformed)?;
        let frac_digits = frac_part.len();
        let frac_part = parse_digits(frac_part).ok_or_else(malformed)?;
        let scale = BigUint::from(10u32).pow(frac_digits as u32);
        let numer = int_part * &scale + frac_part;
        Rational::new(numer.into(), scale.into())
    } else {
        let num = parse_digits(digits).ok_or_else(malformed)?;
        Rational::from_integer(num.into())
    };

    Ok(if negative { -value } else { value })
}

fn parse_digits(s: &str) -> Option<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Shorthand for small rational constants.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// The multiplicative inverse. Panics on zero, which callers rule out:
/// resistances are validated positive.
pub fn reciprocal(r: &Rational) -> Rational {
    assert!(!r.is_zero(), "reciprocal of zero");
    Rational::new(r.denom().clone(), r.numer().clone())
}

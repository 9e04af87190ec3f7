//! Display-only formatting of exact rationals.

use num_bigint::BigInt;
use num_traits::Signed;

use dualohm::Rational;

/// Canonical `p/q` form, or a rounded decimal when `decimal` digits are
/// requested. Decimals are for reading, never for computing.
pub fn rational_cell(r: &Rational, decimal: Option<u32>) -> String {
    match decimal {
        None => r.to_string(),
        Some(digits) => decimal_string(r, digits),
    }
}

/// Fixed-point decimal with `digits` fractional digits, rounded half away
/// from zero.
pub fn decimal_string(r: &Rational, digits: u32) -> String {
    let sign = if r.is_negative() { "-" } else { "" };
    let numer = r.numer().abs();
    let denom = r.denom().clone();
    let two = BigInt::from(2);
    let scale = BigInt::from(10u32).pow(digits);
    let scaled: BigInt = (&numer * &scale * &two + &denom) / (&denom * &two);
    let int_part = &scaled / &scale;
    let frac_part = &scaled % &scale;
    if digits == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits as usize)
    }
}

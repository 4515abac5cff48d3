//! Exact rational scalars.
//!
//! `BigRational` already maintains the canonical form this crate relies on
//! (reduced fraction, positive denominator, zero stored as 0/1), so the
//! module only adds literal helpers, a non-panicking parser for the
//! `"p"` / `"-p"` / `"p/q"` wire format, and checked division.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RatError {
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("division by zero")]
    DivisionByZero,
}

/// Integer as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Fraction literal; panics on a zero denominator (use [`parse_rational`]
/// for untrusted input).
pub fn frac(n: i64, d: i64) -> Rational {
    assert!(d != 0, "frac: zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"`, or `"p/q"`. Never panics; a zero denominator is an
/// explicit error.
pub fn parse_rational(s: &str) -> Result<Rational, RatError> {
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n = BigInt::from_str(num).map_err(|_| RatError::Invalid(s.to_string()))?;
    let d = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| RatError::Invalid(s.to_string()))?,
        None => BigInt::from(1),
    };
    if d.is_zero() {
        return Err(RatError::ZeroDenominator(s.to_string()));
    }
    Ok(Rational::new(n, d))
}

/// Exact division; `None` when the divisor is zero.
pub fn checked_div(a: &Rational, b: &Rational) -> Option<Rational> {
    if b.is_zero() {
        None
    } else {
        Some(a / b)
    }
}

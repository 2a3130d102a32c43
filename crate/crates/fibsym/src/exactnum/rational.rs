//! Helpers around `num_rational::BigRational`: construction shorthands,
//! integer powers, parsing of the accepted input grammar and deterministic
//! rendering.
//!
//! `BigRational` already keeps itself canonical (gcd-reduced, positive
//! denominator), so the helpers here only add the crate's parsing and
//! formatting conventions on top.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d` as an exact rational. Panics if `d == 0`; callers validate first.
pub fn rat(n: i64, d: i64) -> BigRational {
    assert!(d != 0, "rational with zero denominator");
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `n` as an exact rational, for an already-big numerator.
pub fn rat_big(n: BigInt) -> BigRational {
    BigRational::from_integer(n)
}

/// `base^exponent` with an arbitrary (possibly negative) integer exponent.
///
/// Panics if `base == 0` and `exponent < 0`; callers guard division by zero
/// explicitly so that the failure carries context.
pub fn pow_rational(base: &BigRational, exponent: i64) -> BigRational {
    if exponent == 0 {
        return BigRational::one();
    }
    assert!(
        !base.is_zero() || exponent > 0,
        "zero raised to a negative power"
    );
    if base.is_zero() {
        return BigRational::zero();
    }
    let mag = exponent.unsigned_abs();
    let mut acc = BigRational::one();
    let mut sq = base.clone();
    let mut e = mag;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &sq;
        }
        e >>= 1;
        if e > 0 {
            sq = &sq * &sq;
        }
    }
    if exponent < 0 {
        acc.recip()
    } else {
        acc
    }
}

/// Renders a rational as `n` when integral and `n/d` otherwise. This is the
/// single canonical text form used by reports, so it must stay stable.
pub fn render_rational(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Rounds `value` to `digits` fractional decimal digits (half away from
/// zero is *not* used; ties round up, i.e. `floor(x * 10^digits + 1/2)`)
/// and renders the result with a fixed number of places.
pub fn decimal_string_rational(value: &BigRational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = value * BigRational::from_integer(scale) + rat(1, 2);
    let units = scaled.floor().to_integer();
    let negative = units.is_negative();
    let mut mag = units.magnitude().to_string();
    if digits == 0 {
        return format!("{}{}", if negative { "-" } else { "" }, mag);
    }
    let d = digits as usize;
    if mag.len() <= d {
        mag = format!("{}{}", "0".repeat(d + 1 - mag.len()), mag);
    }
    let split = mag.len() - d;
    format!(
        "{}{}.{}",
        if negative { "-" } else { "" },
        &mag[..split],
        &mag[split..]
    )
}

/// Failure to parse a rational from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse {input:?} as a rational number: {reason}")]
pub struct ParseRationalError {
    pub input: String,
    pub reason: String,
}

fn parse_err(input: &str, reason: impl Into<String>) -> ParseRationalError {
    ParseRationalError {
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Parses the accepted exact-rational grammar:
///
/// * integers: `42`, `-7`
/// * fractions: `3/4`, `-22/7`
/// * decimals: `0.125`, `-2.5`
/// * scientific notation with integer or decimal mantissa: `1e-12`, `2.5e-3`
///
/// Every form is converted exactly; no rounding occurs.
pub fn parse_rational(input: &str) -> Result<BigRational, ParseRationalError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(parse_err(input, "empty string"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| parse_err(input, "numerator is not an integer"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| parse_err(input, "denominator is not an integer"))?;
        if d.is_zero() {
            return Err(parse_err(input, "denominator is zero"));
        }
        return Ok(BigRational::new(n, d));
    }
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e
                .trim()
                .parse()
                .map_err(|_| parse_err(input, "exponent is not an integer"))?;
            (m.trim(), exp)
        }
        None => (s, 0),
    };
    let mantissa_rat = match mantissa.split_once('.') {
        Some((int_part, frac_part)) => {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(input, "fractional part is not made of digits"));
            }
            let digits = format!("{int_part}{frac_part}");
            let n: BigInt = digits
                .parse()
                .map_err(|_| parse_err(input, "mantissa is not numeric"))?;
            let d = BigInt::from(10u32).pow(frac_part.len() as u32);
            BigRational::new(n, d)
        }
        None => {
            let n: BigInt = mantissa
                .parse()
                .map_err(|_| parse_err(input, "not an integer, fraction or decimal"))?;
            BigRational::from_integer(n)
        }
    };
    Ok(mantissa_rat * pow_rational(&rat_int(10), exponent))
}

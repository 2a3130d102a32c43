//! Elements of the real quadratic field Q(sqrt(D)), represented as
//! `a + b*sqrt(D)` with exact rational `a`, `b` and a fixed natural
//! radicand `D`.
//!
//! Design points:
//!
//! * A perfect-square radicand is folded away at construction
//!   (`new(0, 1, 9)` is the rational `3`), so a value with a nonzero
//!   radical part always carries an irrational `sqrt(D)`. That invariant
//!   is what makes exact sign determination and the floor loop terminate.
//! * A value whose radical part is zero is a plain rational and is
//!   compatible with every radicand; mixing two *irrational* values from
//!   different fields is a structural error ([`QuadError::RadicandMismatch`]).
//! * Comparisons are exact. The sign of `a + b*sqrt(D)` is decided by the
//!   signs of `a`, `b` and the comparison of `a^2` with `b^2*D`; no
//!   enclosure is involved.
//! * [`QuadElem::to_interval`] produces a two-sided rational enclosure of
//!   requested dyadic width via integer-only bisection on `sqrt(D)`,
//!   starting from the integer bracket `(isqrt(D), isqrt(D)+1)`. Repeated
//!   calls with more bits refine (nest within) earlier enclosures.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::rational::{decimal_string_rational, rat, render_rational};

/// Structural or arithmetic failure inside Q(sqrt(D)).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuadError {
    /// Two irrational operands live in different quadratic fields.
    #[error("radicand mismatch: sqrt({0}) and sqrt({1}) span different fields")]
    RadicandMismatch(u64, u64),
    /// Inversion or division by the zero element.
    #[error("division by zero in quadratic field")]
    DivisionByZero,
}

/// An element `a + b*sqrt(D)` of Q(sqrt(D)).
///
/// Always canonical: if the radical part is zero, or `D` is a perfect
/// square, the value is stored as a pure rational with radicand `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadElem {
    rational: BigRational,
    radical: BigRational,
    radicand: u64,
}

/// Rational enclosure of `sqrt(d)` of width exactly `2^-steps`
/// (degenerating to width `<= 2^-steps` when `d` is a perfect square).
///
/// Integer-only bisection: the enclosure after `k` steps is
/// `[l/2^k, (l+1)/2^k]` for an integer `l`, and each step tests the
/// midpoint by comparing `(2l+1)^2` against `d * 4^(k+1)`. Enclosures for
/// increasing `steps` are nested, which downstream interval refinement
/// relies on.
pub fn sqrt_enclosure(d: u64, steps: u32) -> (BigRational, BigRational) {
    let big_d = BigInt::from(d);
    let mut l = BigInt::from(d.sqrt());
    let mut scaled_d = big_d; // d * 4^k, maintained incrementally
    for _ in 0..steps {
        scaled_d *= 4;
        let mid = 2 * &l + 1;
        if &mid * &mid <= scaled_d {
            l = mid;
        } else {
            l *= 2;
        }
    }
    let denom = BigInt::one() << steps;
    (
        BigRational::new(l.clone(), denom.clone()),
        BigRational::new(l + 1, denom),
    )
}

fn is_perfect_square(d: u64) -> bool {
    let r = d.sqrt();
    r * r == d
}

impl QuadElem {
    /// Builds `rational + radical*sqrt(radicand)`, canonicalizing eagerly:
    /// perfect-square radicands (including 0 and 1) fold into the rational
    /// part, and a zero radical part resets the radicand to 1.
    pub fn new(rational: BigRational, radical: BigRational, radicand: u64) -> Self {
        if is_perfect_square(radicand) {
            let root = BigRational::from_integer(BigInt::from(radicand.sqrt()));
            return QuadElem {
                rational: rational + radical * root,
                radical: BigRational::zero(),
                radicand: 1,
            };
        }
        if radical.is_zero() {
            return QuadElem {
                rational,
                radical,
                radicand: 1,
            };
        }
        QuadElem {
            rational,
            radical,
            radicand,
        }
    }

    pub fn from_rational(rational: BigRational) -> Self {
        QuadElem::new(rational, BigRational::zero(), 1)
    }

    pub fn from_int(n: i64) -> Self {
        QuadElem::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        QuadElem::from_int(0)
    }

    pub fn one() -> Self {
        QuadElem::from_int(1)
    }

    /// `sqrt(d)` itself (a rational when `d` is a perfect square).
    pub fn sqrt(d: u64) -> Self {
        QuadElem::new(BigRational::zero(), BigRational::one(), d)
    }

    /// The golden ratio `(1 + sqrt(5)) / 2`.
    pub fn golden_ratio() -> Self {
        QuadElem::new(rat(1, 2), rat(1, 2), 5)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.radical
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    /// True when the value lies in Q (radical part zero).
    pub fn is_rational(&self) -> bool {
        self.radical.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.radical.is_zero()
    }

    /// The radicand both operands agree to live under, or a mismatch error.
    /// A pure rational is compatible with any field.
    fn common_radicand(&self, other: &QuadElem) -> Result<u64, QuadError> {
        if self.radical.is_zero() {
            Ok(other.radicand)
        } else if other.radical.is_zero() || self.radicand == other.radicand {
            Ok(self.radicand)
        } else {
            Err(QuadError::RadicandMismatch(self.radicand, other.radicand))
        }
    }

    pub fn checked_add(&self, other: &QuadElem) -> Result<QuadElem, QuadError> {
        let d = self.common_radicand(other)?;
        Ok(QuadElem::new(
            &self.rational + &other.rational,
            &self.radical + &other.radical,
            d,
        ))
    }

    pub fn checked_sub(&self, other: &QuadElem) -> Result<QuadElem, QuadError> {
        self.checked_add(&other.clone().neg())
    }

    pub fn checked_mul(&self, other: &QuadElem) -> Result<QuadElem, QuadError> {
        let d = self.common_radicand(other)?;
        let big_d = BigRational::from_integer(BigInt::from(d));
        let rational =
            &self.rational * &other.rational + &self.radical * &other.radical * &big_d;
        let radical = &self.rational * &other.radical + &self.radical * &other.rational;
        Ok(QuadElem::new(rational, radical, d))
    }

    /// Multiplicative inverse via the conjugate: for a nonzero value with
    /// irrational part, `a^2 - b^2*D` is automatically nonzero because
    /// `sqrt(D)` is irrational.
    pub fn inv(&self) -> Result<QuadElem, QuadError> {
        if self.is_zero() {
            return Err(QuadError::DivisionByZero);
        }
        if self.radical.is_zero() {
            return Ok(QuadElem::from_rational(self.rational.clone().recip()));
        }
        let big_d = BigRational::from_integer(BigInt::from(self.radicand));
        let norm = &self.rational * &self.rational - &self.radical * &self.radical * &big_d;
        debug_assert!(!norm.is_zero(), "norm of an irrational element vanished");
        Ok(QuadElem::new(
            &self.rational / &norm,
            -&self.radical / &norm,
            self.radicand,
        ))
    }

    pub fn checked_div(&self, other: &QuadElem) -> Result<QuadElem, QuadError> {
        self.checked_mul(&other.inv()?)
    }

    /// `self^exponent` for any integer exponent (negative via `inv`).
    pub fn pow(&self, exponent: i64) -> Result<QuadElem, QuadError> {
        if exponent == 0 {
            return Ok(QuadElem::one());
        }
        let base = if exponent < 0 {
            self.inv()?
        } else {
            self.clone()
        };
        let mut acc = QuadElem::one();
        let mut sq = base;
        let mut e = exponent.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.checked_mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// The field conjugate `a - b*sqrt(D)`.
    pub fn conjugate(&self) -> QuadElem {
        QuadElem::new(self.rational.clone(), -&self.radical, self.radicand)
    }

    /// Exact sign: `-1`, `0` or `1`. Decided without any enclosure by
    /// comparing `a^2` with `b^2*D` when `a` and `b` disagree in sign.
    pub fn signum(&self) -> i32 {
        let sa = rational_signum(&self.rational);
        let sb = rational_signum(&self.radical);
        match (sa, sb) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (s, t) if s == t => s,
            (s, t) => {
                // a and b have opposite signs; |a| vs |b|*sqrt(D) decides,
                // and equality is impossible since sqrt(D) is irrational.
                let a2 = &self.rational * &self.rational;
                let b2d = &self.radical
                    * &self.radical
                    * BigRational::from_integer(BigInt::from(self.radicand));
                match a2.cmp(&b2d) {
                    Ordering::Greater => s,
                    Ordering::Less => t,
                    Ordering::Equal => unreachable!("irrational sqrt cannot equal a rational"),
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Two-sided rational enclosure `lo <= self <= hi` with
    /// `hi - lo <= 2^-bits`. For a pure rational the enclosure is exact
    /// (`lo == hi`). Enclosures refine as `bits` grows because the
    /// underlying bisection of `sqrt(D)` is deterministic and nested.
    pub fn to_interval(&self, bits: u32) -> (BigRational, BigRational) {
        if self.radical.is_zero() {
            return (self.rational.clone(), self.rational.clone());
        }
        // Need |b| * 2^-steps <= 2^-bits, i.e. steps >= bits + log2|b|.
        let numer_bits = self.radical.numer().magnitude().bits();
        let denom_bits = self.radical.denom().magnitude().bits();
        let excess = numer_bits.saturating_sub(denom_bits - 1);
        let steps = bits + u32::try_from(excess).expect("enclosure step count overflow");
        let (root_lo, root_hi) = sqrt_enclosure(self.radicand, steps);
        if self.radical.is_positive() {
            (
                &self.rational + &self.radical * root_lo,
                &self.rational + &self.radical * root_hi,
            )
        } else {
            (
                &self.rational + &self.radical * root_hi,
                &self.rational + &self.radical * root_lo,
            )
        }
    }

    /// Exact floor. For an irrational value the interval refinement loop
    /// terminates because the value cannot equal an integer.
    pub fn floor(&self) -> BigInt {
        if self.radical.is_zero() {
            return self.rational.floor().to_integer();
        }
        let mut bits = 8;
        loop {
            let (lo, hi) = self.to_interval(bits);
            let fl = lo.floor().to_integer();
            let fh = hi.floor().to_integer();
            if fl == fh {
                return fl;
            }
            bits *= 2;
        }
    }

    /// Exact decimal rendering with `digits` fractional places, rounding
    /// by `floor(x * 10^digits + 1/2)`.
    pub fn decimal_string(&self, digits: u32) -> String {
        if self.radical.is_zero() {
            return decimal_string_rational(&self.rational, digits);
        }
        let scale = BigRational::from_integer(BigInt::from(10u32).pow(digits));
        let shifted = QuadElem::new(
            &self.rational * &scale + rat(1, 2),
            &self.radical * &scale,
            self.radicand,
        );
        let units = BigRational::from_integer(shifted.floor());
        decimal_string_rational(&(units / scale), digits)
    }
}

fn rational_signum(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QuadElem {
    /// Exact order within one field; `None` across distinct irrational
    /// fields.
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let diff = self.checked_sub(other).ok()?;
        Some(diff.signum().cmp(&0))
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: QuadElem) -> QuadElem {
        self.checked_add(&rhs).expect("radicand mismatch in add")
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: QuadElem) -> QuadElem {
        self.checked_sub(&rhs).expect("radicand mismatch in sub")
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: QuadElem) -> QuadElem {
        self.checked_mul(&rhs).expect("radicand mismatch in mul")
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            rational: -self.rational,
            radical: -self.radical,
            radicand: self.radicand,
        }
    }
}

impl fmt::Display for QuadElem {
    /// `0`, `3/2`, `sqrt(5)`, `2*sqrt(5)`, `1/2 - 1/2*sqrt(5)`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical.is_zero() {
            return f.write_str(&render_rational(&self.rational));
        }
        let radical_term = |coeff: &BigRational, d: u64| -> String {
            if coeff.is_one() {
                format!("sqrt({d})")
            } else {
                format!("{}*sqrt({d})", render_rational(coeff))
            }
        };
        if self.rational.is_zero() {
            if self.radical.is_negative() {
                return write!(f, "-{}", radical_term(&-&self.radical, self.radicand));
            }
            return f.write_str(&radical_term(&self.radical, self.radicand));
        }
        let (op, mag) = if self.radical.is_negative() {
            ("-", -&self.radical)
        } else {
            ("+", self.radical.clone())
        };
        write!(
            f,
            "{} {} {}",
            render_rational(&self.rational),
            op,
            radical_term(&mag, self.radicand)
        )
    }
}

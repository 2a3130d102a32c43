//! A generic engine for three telescoping-summation exchange lemmas over
//! abstract exact-valued sequences.
//!
//! All three lemmas swap the roles of two counts `v` and `w` in a double
//! difference pattern built from one sequence `f` evaluated on the
//! arithmetic progression `u, 2u, 3u, ...`:
//!
//! * [`telescope_fs`]:  `sum_{k=1..w} [f(uk+uv) - f(uk)]
//!   = sum_{k=1..v} [f(uk+uw) - f(uk)]` for positive `u`, `v`, `w`;
//! * [`telescope_fs1`]: the same sides carrying a weight `(+/-1)^(k-1)`,
//!   valid when `v` and `w` are even;
//! * [`telescope_fs2`]: `sum_{k=1..w} (-1)^(k-1) [f(uk+uv) + f(uk)]
//!   = sum_{k=1..v} (-1)^(k-1) [f(uk+uw) + f(uk)]`, valid when `v*w` is
//!   odd.
//!
//! The engine is generic over the value type through [`ExactValue`], so
//! the same code path serves rational-valued and quadratic-field-valued
//! sequences; both sides are returned so callers can assert equality or
//! feed either side onward.
//!
//! Hypothesis violations are reported as typed domain errors rather than
//! silently producing an unwarranted verdict, and a failure inside `f`
//! (for example a vanishing denominator) aborts the evaluation with the
//! offending index attached.

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::exactnum::QuadElem;
use crate::Sign;

/// Minimal additive-group interface the engine needs: exact equality,
/// zero, addition and negation.
pub trait ExactValue: Clone + PartialEq {
    fn zero_value() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
}

impl ExactValue for BigRational {
    fn zero_value() -> Self {
        BigRational::zero()
    }

    fn plus(&self, other: &Self) -> Self {
        self + other
    }

    fn negated(&self) -> Self {
        -self
    }
}

impl ExactValue for QuadElem {
    fn zero_value() -> Self {
        QuadElem::zero()
    }

    /// Panics on a radicand mismatch; one lemma evaluation lives entirely
    /// inside a single quadratic field.
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(other)
            .expect("telescoping mixes values from one field only")
    }

    fn negated(&self) -> Self {
        -self.clone()
    }
}

/// An abstract sequence `k -> f(k)` that may fail pointwise (for example
/// when a denominator inside `f` vanishes); failures surface as
/// [`TelescopeError::Eval`] with the offending index.
pub struct AbstractSequence<'a, T> {
    eval: Box<dyn Fn(i64) -> Result<T, String> + 'a>,
}

impl<'a, T> AbstractSequence<'a, T> {
    pub fn new(eval: impl Fn(i64) -> Result<T, String> + 'a) -> Self {
        AbstractSequence {
            eval: Box::new(eval),
        }
    }

    /// Wraps a total function.
    pub fn infallible(eval: impl Fn(i64) -> T + 'a) -> Self {
        AbstractSequence {
            eval: Box::new(move |k| Ok(eval(k))),
        }
    }

    pub fn eval(&self, k: i64) -> Result<T, String> {
        (self.eval)(k)
    }
}

/// Both sides of a lemma, evaluated independently, with the number of
/// summands each side consumed.
#[derive(Debug, Clone, PartialEq)]
pub struct LemmaSides<T> {
    pub lhs: T,
    pub rhs: T,
    pub lhs_terms: u64,
    pub rhs_terms: u64,
}

impl<T: PartialEq> LemmaSides<T> {
    pub fn balanced(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Hypothesis violations and evaluation failures of the lemma engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum TelescopeError {
    #[error("parameter {name} must be a positive integer (got {value})")]
    NonPositive { name: &'static str, value: i64 },
    #[error("the alternating-weight exchange needs even v and w (got v={v}, w={w})")]
    NeedsEvenCounts { v: i64, w: i64 },
    #[error("the plus-form exchange needs v*w odd (got v={v}, w={w})")]
    NeedsOddProduct { v: i64, w: i64 },
    #[error("index arithmetic overflowed at summand k={k}")]
    IndexOverflow { k: i64 },
    #[error("sequence evaluation failed at index {index}: {reason}")]
    Eval { index: i64, reason: String },
}

#[derive(Clone, Copy)]
enum Weight {
    Unit,
    /// `(-1)^(k-1)` over the 1-based summation index.
    Alternating,
}

#[derive(Clone, Copy)]
enum Inner {
    Difference,
    Sum,
}

fn check_positive(name: &'static str, value: i64) -> Result<(), TelescopeError> {
    if value <= 0 {
        Err(TelescopeError::NonPositive { name, value })
    } else {
        Ok(())
    }
}

/// `sum_{k=1..count} weight(k) * [f(u*(k+shift)) op f(u*k)]`.
fn exchange_side<T: ExactValue>(
    f: &AbstractSequence<T>,
    u: i64,
    shift: i64,
    count: i64,
    weight: Weight,
    inner: Inner,
) -> Result<T, TelescopeError> {
    let eval_at = |k: i64, offset: i64| -> Result<T, TelescopeError> {
        let idx_wide = (k as i128 + offset as i128) * u as i128;
        let idx = i64::try_from(idx_wide).map_err(|_| TelescopeError::IndexOverflow { k })?;
        f.eval(idx)
            .map_err(|reason| TelescopeError::Eval { index: idx, reason })
    };
    let mut acc = T::zero_value();
    for k in 1..=count {
        let high = eval_at(k, shift)?;
        let low = eval_at(k, 0)?;
        let bracket = match inner {
            Inner::Difference => high.minus(&low),
            Inner::Sum => high.plus(&low),
        };
        let term = match weight {
            Weight::Unit => bracket,
            Weight::Alternating => {
                if (k - 1) % 2 == 0 {
                    bracket
                } else {
                    bracket.negated()
                }
            }
        };
        acc = acc.plus(&term);
    }
    Ok(acc)
}

/// Unweighted exchange: `sum_{k=1..w} [f(uk+uv) - f(uk)] =
/// sum_{k=1..v} [f(uk+uw) - f(uk)]` for positive `u`, `v`, `w`.
///
/// Both sides telescope to the same block sums over `f`, which is why the
/// counts can trade places. The engine evaluates the two sides
/// independently and returns both.
pub fn telescope_fs<T: ExactValue>(
    f: &AbstractSequence<T>,
    u: i64,
    v: i64,
    w: i64,
) -> Result<LemmaSides<T>, TelescopeError> {
    check_positive("u", u)?;
    check_positive("v", v)?;
    check_positive("w", w)?;
    let lhs = exchange_side(f, u, v, w, Weight::Unit, Inner::Difference)?;
    let rhs = exchange_side(f, u, w, v, Weight::Unit, Inner::Difference)?;
    Ok(LemmaSides {
        lhs,
        rhs,
        lhs_terms: w as u64,
        rhs_terms: v as u64,
    })
}

/// Weighted exchange with `sign^(k-1)` on both sides, requiring even `v`
/// and `w`. With `sign = Plus` the weight is identically one (the even
/// hypothesis still applies; this is a different statement from
/// [`telescope_fs`] even though the weight coincides).
pub fn telescope_fs1<T: ExactValue>(
    f: &AbstractSequence<T>,
    u: i64,
    v: i64,
    w: i64,
    sign: Sign,
) -> Result<LemmaSides<T>, TelescopeError> {
    check_positive("u", u)?;
    check_positive("v", v)?;
    check_positive("w", w)?;
    if v % 2 != 0 || w % 2 != 0 {
        return Err(TelescopeError::NeedsEvenCounts { v, w });
    }
    let weight = match sign {
        Sign::Plus => Weight::Unit,
        Sign::Minus => Weight::Alternating,
    };
    let lhs = exchange_side(f, u, v, w, weight, Inner::Difference)?;
    let rhs = exchange_side(f, u, w, v, weight, Inner::Difference)?;
    Ok(LemmaSides {
        lhs,
        rhs,
        lhs_terms: w as u64,
        rhs_terms: v as u64,
    })
}

/// Alternating plus-form exchange:
/// `sum_{k=1..w} (-1)^(k-1) [f(uk+uv) + f(uk)] =
/// sum_{k=1..v} (-1)^(k-1) [f(uk+uw) + f(uk)]`, requiring `v*w` odd.
pub fn telescope_fs2<T: ExactValue>(
    f: &AbstractSequence<T>,
    u: i64,
    v: i64,
    w: i64,
) -> Result<LemmaSides<T>, TelescopeError> {
    check_positive("u", u)?;
    check_positive("v", v)?;
    check_positive("w", w)?;
    if v % 2 == 0 || w % 2 == 0 {
        return Err(TelescopeError::NeedsOddProduct { v, w });
    }
    let lhs = exchange_side(f, u, v, w, Weight::Alternating, Inner::Sum)?;
    let rhs = exchange_side(f, u, w, v, Weight::Alternating, Inner::Sum)?;
    Ok(LemmaSides {
        lhs,
        rhs,
        lhs_terms: w as u64,
        rhs_terms: v as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat_big, rat_int};
    use crate::sequences::fibonacci;

    fn identity_seq<'a>() -> AbstractSequence<'a, BigRational> {
        AbstractSequence::infallible(rat_int)
    }

    #[test]
    fn unweighted_exchange_on_the_identity_sequence() {
        let f = identity_seq();
        let sides = telescope_fs(&f, 1, 2, 3).unwrap();
        assert_eq!(sides.lhs, rat_int(6));
        assert_eq!(sides.rhs, rat_int(6));
        assert!(sides.balanced());
        assert_eq!((sides.lhs_terms, sides.rhs_terms), (3, 2));
    }

    #[test]
    fn unweighted_exchange_telescopes_fibonacci_blocks() {
        let f = AbstractSequence::infallible(|k| rat_big(fibonacci(k)));
        let sides = telescope_fs(&f, 2, 1, 3).unwrap();
        // Both sides collapse to F(8) - F(2) = 21 - 1.
        assert_eq!(sides.lhs, rat_int(20));
        assert!(sides.balanced());
    }

    #[test]
    fn alternating_exchange_on_squares() {
        let f = AbstractSequence::infallible(|k| rat_int(k * k));
        let sides = telescope_fs1(&f, 1, 2, 4, Sign::Minus).unwrap();
        assert_eq!(sides.lhs, rat_int(-8));
        assert_eq!(sides.rhs, rat_int(-8));
        let plus = telescope_fs1(&f, 1, 2, 4, Sign::Plus).unwrap();
        assert!(plus.balanced());
    }

    #[test]
    fn plus_form_exchange_on_the_identity_sequence() {
        let f = identity_seq();
        let sides = telescope_fs2(&f, 1, 1, 3).unwrap();
        assert_eq!(sides.lhs, rat_int(5));
        assert_eq!(sides.rhs, rat_int(5));
    }

    #[test]
    fn quadratic_field_values_flow_through_the_same_engine() {
        let phi = QuadElem::golden_ratio();
        let f = AbstractSequence::infallible(move |k| phi.pow(k).unwrap());
        for (u, v, w) in [(1, 2, 3), (2, 3, 5), (3, 1, 1)] {
            let sides = telescope_fs(&f, u, v, w).unwrap();
            assert!(sides.balanced(), "u={u} v={v} w={w}");
        }
        let sides = telescope_fs2(&f, 2, 3, 5).unwrap();
        assert!(sides.balanced());
    }

    #[test]
    fn hypothesis_violations_are_typed() {
        let f = identity_seq();
        assert_eq!(
            telescope_fs(&f, 0, 1, 1).unwrap_err(),
            TelescopeError::NonPositive {
                name: "u",
                value: 0
            }
        );
        assert_eq!(
            telescope_fs(&f, 1, -2, 1).unwrap_err(),
            TelescopeError::NonPositive {
                name: "v",
                value: -2
            }
        );
        assert_eq!(
            telescope_fs1(&f, 1, 2, 3, Sign::Minus).unwrap_err(),
            TelescopeError::NeedsEvenCounts { v: 2, w: 3 }
        );
        assert_eq!(
            telescope_fs2(&f, 1, 2, 3).unwrap_err(),
            TelescopeError::NeedsOddProduct { v: 2, w: 3 }
        );
    }

    #[test]
    fn pointwise_failures_carry_the_offending_index() {
        let f = AbstractSequence::new(|k| {
            if k == 6 {
                Err("denominator vanished".to_string())
            } else {
                Ok(rat_int(k))
            }
        });
        let err = telescope_fs(&f, 2, 2, 2).unwrap_err();
        assert_eq!(
            err,
            TelescopeError::Eval {
                index: 6,
                reason: "denominator vanished".to_string()
            }
        );
    }

    #[test]
    fn index_overflow_is_reported_not_wrapped() {
        let f = identity_seq();
        let err = telescope_fs(&f, i64::MAX / 2, 3, 3).unwrap_err();
        assert!(matches!(err, TelescopeError::IndexOverflow { .. }));
    }
}

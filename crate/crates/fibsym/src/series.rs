//! Exact evaluation of the infinite alternating reciprocal Fibonacci
//! series
//!
//! ```text
//! sum_{k=1..inf} (-1)^(pk) / (F(pk) * F(pk+pq))
//! ```
//!
//! for positive integers `p`, `q`, against its exact closed form in
//! Q(sqrt(5)):
//!
//! ```text
//! (1/F(pq)) * sum_{k=1..q} (-1)^(pk) / (phi^(pk) * F(pk))
//! ```
//!
//! Three guarantees are kept exact end to end:
//!
//! * [`partial_sum`] is an exact rational — no rounding ever;
//! * [`closed_form`] is an exact element of Q(sqrt(5)) — decimal output
//!   is a rendering concern left to callers;
//! * [`tail_bound`] is a certified upper bound on the absolute remainder,
//!   derived from `F(m) >= phi^(m-2)` and a geometric majorant, evaluated
//!   through outward-rounded rational enclosures of sqrt(5).
//!
//! [`evaluate`] ties them together and refuses to return an estimate whose
//! certified interval fails to contain the closed form — such a failure
//! would mean a bug or a false closed form, and must surface loudly.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::exactnum::{rat_big, QuadElem};
use crate::sequences::fibonacci;

/// Parameters `(p, q)` of the series; both must be positive, which keeps
/// every Fibonacci denominator `F(pk)`, `F(pk+pq)` strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesSpec {
    p: i64,
    q: i64,
}

/// Failures around series evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SeriesError {
    #[error("series parameters must be positive (got p={p}, q={q})")]
    InvalidSpec { p: i64, q: i64 },
    #[error("target radius must be positive")]
    NonPositiveRadius,
    /// The certified interval failed to contain the closed form. This is
    /// an integrity failure — either a bug or a false closed form — and is
    /// never swallowed.
    #[error(
        "closed form {closed} escaped the certified interval [{lo}, {hi}] after {n_terms} terms"
    )]
    Containment {
        closed: String,
        lo: String,
        hi: String,
        n_terms: u64,
    },
}

impl SeriesSpec {
    pub fn new(p: i64, q: i64) -> Result<Self, SeriesError> {
        if p < 1 || q < 1 {
            return Err(SeriesError::InvalidSpec { p, q });
        }
        Ok(SeriesSpec { p, q })
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }
}

/// A finished evaluation: `closed` is guaranteed to lie inside
/// `[partial - tail_radius, partial + tail_radius]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesEstimate {
    /// Exact sum of the first `n_terms` terms.
    pub partial: BigRational,
    pub n_terms: u64,
    /// Certified bound on the absolute value of the omitted remainder.
    pub tail_radius: BigRational,
    /// The exact closed form in Q(sqrt(5)).
    pub closed: QuadElem,
}

/// Exact sum of the first `n` terms (`n >= 1`):
/// `sum_{k=1..n} (-1)^(pk) / (F(pk) * F(pk+pq))`.
pub fn partial_sum(spec: SeriesSpec, n: u64) -> BigRational {
    assert!(n >= 1, "partial sums start at one term");
    let p = spec.p;
    let q = spec.q;
    let mut acc = BigRational::zero();
    for k in 1..=(n as i64) {
        let denom = rat_big(fibonacci(p * k) * fibonacci(p * k + p * q));
        let term = denom.recip();
        if (p * k) % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// The exact closed form
/// `(1/F(pq)) * sum_{k=1..q} (-1)^(pk) * phi^(-pk) / F(pk)`
/// as an element of Q(sqrt(5)). Powers of the golden ratio are computed
/// exactly in the field (negative powers via `phi^-1 = phi - 1`).
pub fn closed_form(spec: SeriesSpec) -> QuadElem {
    let p = spec.p;
    let q = spec.q;
    let phi = QuadElem::golden_ratio();
    let mut acc = QuadElem::zero();
    for k in 1..=q {
        let power = phi.pow(-(p * k)).expect("phi is invertible");
        let coeff = QuadElem::from_rational(rat_big(fibonacci(p * k)).recip());
        let mut term = power.checked_mul(&coeff).expect("same field");
        if (p * k) % 2 != 0 {
            term = -term;
        }
        acc = acc.checked_add(&term).expect("same field");
    }
    let front = QuadElem::from_rational(rat_big(fibonacci(p * q)).recip());
    acc.checked_mul(&front).expect("same field")
}

/// Certified upper bound on `|sum_{k>n} (-1)^(pk)/(F(pk)F(pk+pq))|`.
///
/// From `F(m) >= phi^(m-2)` (valid for all `m >= 1`), each term is
/// majorized by `phi^(4 - pq - 2pk)`, and the tail sums geometrically to
///
/// ```text
/// phi^(4 - pq - 2p(n+1)) / (1 - phi^(-2p))
/// ```
///
/// That value is computed exactly in Q(sqrt(5)) and then rounded outward
/// to a rational via enclosure refinement, so the returned rational is
/// provably `>=` the true tail — and still strictly decreasing in `n`,
/// because the refinement stops only once the enclosure is tight relative
/// to the value itself.
pub fn tail_bound(spec: SeriesSpec, n: u64) -> BigRational {
    assert!(n >= 1, "tail bounds start after one term");
    let p = spec.p as i128;
    let q = spec.q as i128;
    let exponent = i64::try_from(4 - p * q - 2 * p * (n as i128 + 1))
        .expect("tail-bound exponent exceeds supported range");
    let phi = QuadElem::golden_ratio();
    let lead = phi.pow(exponent).expect("phi is invertible");
    let ratio = phi.pow(-2 * spec.p).expect("phi is invertible");
    let denom = QuadElem::one().checked_sub(&ratio).expect("same field");
    let exact = lead.checked_div(&denom).expect("1 - phi^(-2p) > 0");
    upper_bound_tight(&exact)
}

/// A rational `hi >= value` with `hi - value <= value / 256`; the
/// relative tightness is what preserves strict monotonicity when the
/// exact values themselves shrink geometrically. `value` must be
/// positive.
fn upper_bound_tight(value: &QuadElem) -> BigRational {
    debug_assert!(value.is_positive());
    let mut bits = 32;
    loop {
        let (lo, hi) = value.to_interval(bits);
        if lo.is_positive() && (&hi - &lo) * BigRational::from_integer(256.into()) <= lo {
            return hi;
        }
        bits *= 2;
    }
}

/// Evaluates the series to the requested certified radius: finds the
/// smallest `n` with `tail_bound(n) <= target_radius`, forms the partial
/// sum, and asserts the containment invariant — the exact closed form
/// must lie inside `[partial - tail, partial + tail]` — before returning.
///
/// The containment check runs through interval refinement on the closed
/// form ([`QuadElem::to_interval`]); since the closed form sits strictly
/// inside the certified interval whenever everything is correct, the
/// refinement always reaches a verdict.
pub fn evaluate(spec: SeriesSpec, target_radius: &BigRational) -> Result<SeriesEstimate, SeriesError> {
    if !target_radius.is_positive() {
        return Err(SeriesError::NonPositiveRadius);
    }
    // Exponential search then bisection; tail_bound is strictly
    // decreasing in n, so the minimal n is well-defined.
    let mut n = 1u64;
    if &tail_bound(spec, n) > target_radius {
        let mut step = 1u64;
        let mut low = n; // invariant: tail_bound(low) > radius
        loop {
            let probe = low + step;
            if &tail_bound(spec, probe) <= target_radius {
                let mut hi = probe; // tail_bound(hi) <= radius
                while hi - low > 1 {
                    let mid = low + (hi - low) / 2;
                    if &tail_bound(spec, mid) <= target_radius {
                        hi = mid;
                    } else {
                        low = mid;
                    }
                }
                n = hi;
                break;
            }
            low = probe;
            step *= 2;
        }
    }
    let partial = partial_sum(spec, n);
    let tail_radius = tail_bound(spec, n);
    let closed = closed_form(spec);
    let lo_bound = &partial - &tail_radius;
    let hi_bound = &partial + &tail_radius;
    if !interval_contains(&closed, &lo_bound, &hi_bound) {
        return Err(SeriesError::Containment {
            closed: closed.to_string(),
            lo: crate::exactnum::render_rational(&lo_bound),
            hi: crate::exactnum::render_rational(&hi_bound),
            n_terms: n,
        });
    }
    Ok(SeriesEstimate {
        partial,
        n_terms: n,
        tail_radius,
        closed,
    })
}

/// Decides `lo_bound <= value <= hi_bound` by refining the value's
/// rational enclosure until the verdict is unambiguous. A value strictly
/// inside or strictly outside always resolves; the depth cap is an
/// unreachable safety net that fails closed (reports non-containment).
fn interval_contains(value: &QuadElem, lo_bound: &BigRational, hi_bound: &BigRational) -> bool {
    let mut bits = 32;
    loop {
        let (lo, hi) = value.to_interval(bits);
        if &lo >= lo_bound && &hi <= hi_bound {
            return true;
        }
        if &hi < lo_bound || &lo > hi_bound {
            return false;
        }
        if bits >= 8192 {
            return false;
        }
        bits *= 2;
    }
}

//! Convergence of the finite symmetric form to the series closed form.
//!
//! With Fibonacci seeds, swapping the two length parameters of the
//! reciprocal-pair identity rewrites an `n`-term partial sum as a
//! `q`-term expression carrying `F(pn)`; letting `n` grow in that
//! swapped form must drive it toward the closed form of the infinite
//! series. This module measures the gap exactly: for a doubling
//! schedule of `n` it encloses `|swapped(n) - closed|` in a certified
//! rational interval and reports whether consecutive enclosures
//! strictly decrease.
//!
//! The gap is never zero — the closed form is irrational while every
//! finite form is rational — so each enclosure can be refined until it
//! excludes zero, and "strictly decreasing" is a meaningful comparison
//! between disjoint intervals.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactnum::{rat_big, QuadElem};
use crate::sequences::fibonacci;
use crate::series::{closed_form, SeriesError, SeriesSpec};

/// One measured gap `|swapped(n) - closed|`, enclosed in `[lo, hi]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyEntry {
    pub n: u64,
    pub lo: BigRational,
    pub hi: BigRational,
}

/// The full convergence record for one `(p, q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub p: i64,
    pub q: i64,
    pub entries: Vec<ConsistencyEntry>,
    /// True when every consecutive pair of enclosures is strictly
    /// separated: `next.hi < previous.lo`.
    pub strictly_shrinking: bool,
}

/// The swapped finite form
/// `F(pn)/F(pq) * sum_{k=1..q} (-1)^(pk) / (F(pk) F(pk+pn))`,
/// which equals the `n`-term partial sum of the series.
pub(crate) fn swapped_partial(spec: SeriesSpec, n: u64) -> BigRational {
    let p = spec.p();
    let q = spec.q();
    let pn = p
        .checked_mul(i64::try_from(n).expect("length parameter fits an index"))
        .expect("index arithmetic stays in range");
    let mut acc = BigRational::zero();
    for k in 1..=q {
        let term = rat_big(fibonacci(p * k)) * rat_big(fibonacci(p * k + pn));
        let signed = if (p * k) % 2 == 0 {
            term.recip()
        } else {
            -term.recip()
        };
        acc += signed;
    }
    rat_big(fibonacci(pn)) / rat_big(fibonacci(p * q)) * acc
}

/// Encloses `|x|` for nonzero `x` in a rational interval with relative
/// width at most `2^-10`.
fn abs_enclosure(x: &QuadElem) -> (BigRational, BigRational) {
    if x.is_zero() {
        return (BigRational::zero(), BigRational::zero());
    }
    let mut bits = 32u32;
    loop {
        let (lo, hi) = x.to_interval(bits);
        let (alo, ahi) = if lo.is_positive() {
            (lo, hi)
        } else if hi.is_negative() {
            (-hi, -lo)
        } else {
            bits *= 2;
            continue;
        };
        if (&ahi - &alo) * BigRational::from_integer(1024.into()) <= alo {
            return (alo, ahi);
        }
        bits = bits.checked_mul(2).expect("enclosure refinement diverged");
    }
}

/// Measures the gap between the swapped finite form and the series
/// closed form over the schedule `n = 1, 2, 4, ... , n_max`.
pub fn limit_consistency(p: i64, q: i64, n_max: u64) -> Result<ConsistencyReport, SeriesError> {
    let spec = SeriesSpec::new(p, q)?;
    assert!(n_max >= 1, "the schedule needs at least one length");
    let closed = closed_form(spec);

    let mut schedule = Vec::new();
    let mut n = 1u64;
    while n < n_max {
        schedule.push(n);
        n *= 2;
    }
    schedule.push(n_max);

    let mut entries = Vec::with_capacity(schedule.len());
    for n in schedule {
        let finite = QuadElem::from_rational(swapped_partial(spec, n));
        let gap = finite
            .checked_sub(&closed)
            .expect("a rational joins any quadratic field");
        let (lo, hi) = abs_enclosure(&gap);
        entries.push(ConsistencyEntry { n, lo, hi });
    }
    let strictly_shrinking = entries
        .windows(2)
        .all(|pair| pair[1].hi < pair[0].lo);
    Ok(ConsistencyReport {
        p,
        q,
        entries,
        strictly_shrinking,
    })
}

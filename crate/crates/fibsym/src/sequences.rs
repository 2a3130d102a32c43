//! Fibonacci, Lucas, seeded generalized Fibonacci and Horadam sequences at
//! arbitrary — also negative — integer indices.
//!
//! Two independent computation routes are provided on purpose:
//!
//! * closed-route functions ([`fibonacci`], [`lucas`], [`gen_fib`],
//!   [`binet_w`]) built on fast doubling and the quadratic-field closed
//!   form, and
//! * the recurrence route ([`SequenceHandle`], [`horadam_w`],
//!   [`horadam_u`]) that walks the defining recurrence from the seeds.
//!
//! Tests hold the two routes against each other; production code may pick
//! whichever fits, and the identity checker deliberately keeps both alive
//! as mutual cross-checks.
//!
//! Index conventions: every sequence is extended to negative indices by
//! running its recurrence backwards. For Horadam sequences the backward
//! step divides by the parameter `q`, which is why Horadam values are
//! rationals rather than integers.

use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactnum::{rat, rat_int, QuadElem};

/// Invalid sequence parameterization.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("invalid Horadam parameters (a={a}, b={b}, p={p}, q={q}): {reason}")]
    InvalidHoradam {
        a: i64,
        b: i64,
        p: i64,
        q: i64,
        reason: String,
    },
}

/// Seeds `(g0, g1)` of a generalized Fibonacci sequence
/// `G(i+1) = G(i) + G(i-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SeedPair {
    pub g0: i64,
    pub g1: i64,
}

impl SeedPair {
    pub fn new(g0: i64, g1: i64) -> Self {
        SeedPair { g0, g1 }
    }

    /// `(0, 1)`: the Fibonacci numbers.
    pub fn fibonacci() -> Self {
        SeedPair::new(0, 1)
    }

    /// `(2, 1)`: the Lucas numbers.
    pub fn lucas() -> Self {
        SeedPair::new(2, 1)
    }
}

impl fmt::Display for SeedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.g0, self.g1)
    }
}

/// Parameters of a Horadam sequence `W(i) = p*W(i-1) - q*W(i-2)` with
/// seeds `W(0) = a`, `W(1) = b`.
///
/// Validated at construction: `p*q != 0` (the backward step divides by
/// `q`, and `p = 0` collapses the recurrence) and the discriminant
/// `p^2 - 4q` must be positive, so the characteristic roots are real and
/// distinct and the closed form lives in Q(sqrt(p^2 - 4q)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HoradamParams {
    a: i64,
    b: i64,
    p: i64,
    q: i64,
}

impl HoradamParams {
    pub fn new(a: i64, b: i64, p: i64, q: i64) -> Result<Self, SequenceError> {
        let fail = |reason: &str| SequenceError::InvalidHoradam {
            a,
            b,
            p,
            q,
            reason: reason.to_string(),
        };
        if p == 0 || q == 0 {
            return Err(fail("p and q must both be nonzero"));
        }
        let disc = (p as i128) * (p as i128) - 4 * (q as i128);
        if disc <= 0 {
            return Err(fail("discriminant p^2 - 4q must be positive"));
        }
        if u64::try_from(disc).is_err() {
            return Err(fail("discriminant p^2 - 4q exceeds the supported range"));
        }
        Ok(HoradamParams { a, b, p, q })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// The discriminant `p^2 - 4q` (positive by construction).
    pub fn discriminant(&self) -> u64 {
        let disc = (self.p as i128) * (self.p as i128) - 4 * (self.q as i128);
        u64::try_from(disc).expect("validated discriminant is positive")
    }

    /// Same recurrence with seeds `(0, 1)`: the fundamental solution.
    pub fn fundamental(&self) -> HoradamParams {
        HoradamParams {
            a: 0,
            b: 1,
            ..*self
        }
    }
}

impl fmt::Display for HoradamParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.p, self.q)
    }
}

/// `(F(n), F(n+1))` by fast doubling, for `n >= 0`.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (f, g) = fib_pair(n / 2); // (F(k), F(k+1)) with k = n/2
    let two_g_minus_f = (&g << 1) - &f;
    let even = &f * &two_g_minus_f; // F(2k)
    let odd = &f * &f + &g * &g; // F(2k+1)
    if n.is_multiple_of(2) {
        (even, odd)
    } else {
        let next = even + &odd; // F(2k+2)
        (odd, next)
    }
}

/// Fibonacci number `F(i)` at any integer index, with
/// `F(-i) = (-1)^(i+1) * F(i)`.
pub fn fibonacci(i: i64) -> BigInt {
    if i >= 0 {
        fib_pair(i as u64).0
    } else {
        let mag = i.unsigned_abs();
        let f = fib_pair(mag).0;
        if mag.is_multiple_of(2) {
            -f
        } else {
            f
        }
    }
}

/// Lucas number `L(i)` at any integer index, via `L(i) = 2F(i+1) - F(i)`
/// and `L(-i) = (-1)^i * L(i)`.
pub fn lucas(i: i64) -> BigInt {
    if i >= 0 {
        let (f, g) = fib_pair(i as u64);
        (g << 1) - f
    } else {
        let mag = i.unsigned_abs();
        let (f, g) = fib_pair(mag);
        let l = (g << 1) - f;
        if mag.is_multiple_of(2) {
            l
        } else {
            -l
        }
    }
}

/// Generalized Fibonacci value `G(i)` for the given seeds, by the linear
/// decomposition `G(i) = g0*F(i-1) + g1*F(i)` over the fast-doubling
/// route.
pub fn gen_fib(seeds: SeedPair, i: i64) -> BigInt {
    seeds.g0 * fibonacci(i - 1) + seeds.g1 * fibonacci(i)
}

/// Horadam value `W(i)` by walking the recurrence from the seeds.
/// Negative indices use the exact backward step
/// `W(i-2) = (p*W(i-1) - W(i)) / q`.
pub fn horadam_w(params: &HoradamParams, i: i64) -> BigRational {
    let p = rat_int(params.p);
    let q = rat_int(params.q);
    let mut lo = rat_int(params.a); // W(0)
    let mut hi = rat_int(params.b); // W(1)
    if i >= 0 {
        // Slide the window (W(j), W(j+1)) up from j = 0 to j = i.
        for _ in 0..i {
            let next = &p * &hi - &q * &lo;
            lo = std::mem::replace(&mut hi, next);
        }
        lo
    } else {
        // Slide the window down: W(j-1) = (p*W(j) - W(j+1)) / q.
        for _ in 0..(-i) {
            let prev = (&p * &lo - &hi) / &q;
            hi = std::mem::replace(&mut lo, prev);
        }
        lo
    }
}

/// The fundamental Horadam solution `U(i)`: same recurrence, seeds
/// `(0, 1)`.
pub fn horadam_u(params: &HoradamParams, i: i64) -> BigRational {
    horadam_w(&params.fundamental(), i)
}

/// The characteristic roots `alpha = (p + sqrt(D))/2` and
/// `beta = (p - sqrt(D))/2` with `D = p^2 - 4q`, as exact elements of
/// Q(sqrt(D)). When `D` is a perfect square both roots are rational.
pub fn alpha_beta(params: &HoradamParams) -> (QuadElem, QuadElem) {
    let d = params.discriminant();
    let half_p = rat(params.p, 2);
    let alpha = QuadElem::new(half_p.clone(), rat(1, 2), d);
    let beta = QuadElem::new(half_p, rat(-1, 2), d);
    (alpha, beta)
}

/// Closed form of the Horadam value:
/// `W(i) = (A*alpha^i - B*beta^i) / (alpha - beta)` with
/// `A = b - beta*a` and `B = b - alpha*a`.
///
/// The result always lies in Q (the radical parts cancel); it is returned
/// as a [`QuadElem`] so callers can keep computing in the field, and it is
/// the second, independent route to the same values as [`horadam_w`].
pub fn binet_w(params: &HoradamParams, i: i64) -> QuadElem {
    let (alpha, beta) = alpha_beta(params);
    let a = QuadElem::from_int(params.a);
    let b = QuadElem::from_int(params.b);
    let big_a = b.checked_sub(&beta.checked_mul(&a).expect("same field")).expect("same field");
    let big_b = b.checked_sub(&alpha.checked_mul(&a).expect("same field")).expect("same field");
    let numerator = big_a
        .checked_mul(&alpha.pow(i).expect("alpha is nonzero"))
        .expect("same field")
        .checked_sub(
            &big_b
                .checked_mul(&beta.pow(i).expect("beta is nonzero; q != 0"))
                .expect("same field"),
        )
        .expect("same field");
    let root_gap = alpha.checked_sub(&beta).expect("same field");
    numerator
        .checked_div(&root_gap)
        .expect("distinct real roots")
}

/// Constant coefficients `(A, B)` of the closed form, `A = b - beta*a`,
/// `B = b - alpha*a`.
pub fn binet_coefficients(params: &HoradamParams) -> (QuadElem, QuadElem) {
    let (alpha, beta) = alpha_beta(params);
    let a = QuadElem::from_int(params.a);
    let b = QuadElem::from_int(params.b);
    let big_a = b.checked_sub(&beta.checked_mul(&a).expect("same field")).expect("same field");
    let big_b = b.checked_sub(&alpha.checked_mul(&a).expect("same field")).expect("same field");
    (big_a, big_b)
}

/// Which sequence a [`SequenceHandle`] memoizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceKind {
    Fibonacci,
    Lucas,
    /// Generalized Fibonacci with explicit seeds.
    Seeded(SeedPair),
    /// Horadam `W` with full parameters.
    HoradamW(HoradamParams),
    /// Horadam fundamental `U` (seeds `(0, 1)`).
    HoradamU(HoradamParams),
}

/// Contiguous two-sided memo of one sequence's values.
struct MemoState {
    /// `forward[i]` holds the value at index `i` (seeded with indices 0, 1).
    forward: Vec<BigRational>,
    /// `backward[j]` holds the value at index `-(j+1)`.
    backward: Vec<BigRational>,
}

/// A memoizing view of one sequence. Values are cached contiguously in
/// both directions and only ever appended, so a value once returned never
/// changes. Interior mutability keeps lookups `&self`.
pub struct SequenceHandle {
    kind: SequenceKind,
    memo: Mutex<MemoState>,
}

impl SequenceHandle {
    pub fn new(kind: SequenceKind) -> Self {
        let (v0, v1) = match kind {
            SequenceKind::Fibonacci => (rat_int(0), rat_int(1)),
            SequenceKind::Lucas => (rat_int(2), rat_int(1)),
            SequenceKind::Seeded(s) => (rat_int(s.g0), rat_int(s.g1)),
            SequenceKind::HoradamW(h) => (rat_int(h.a), rat_int(h.b)),
            SequenceKind::HoradamU(_) => (rat_int(0), rat_int(1)),
        };
        SequenceHandle {
            kind,
            memo: Mutex::new(MemoState {
                forward: vec![v0, v1],
                backward: Vec::new(),
            }),
        }
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    /// `(p, q)` of the recurrence `v(i) = p*v(i-1) - q*v(i-2)` this handle
    /// runs; the additive family uses `(1, -1)`.
    fn recurrence(&self) -> (BigRational, BigRational) {
        match self.kind {
            SequenceKind::Fibonacci | SequenceKind::Lucas | SequenceKind::Seeded(_) => {
                (rat_int(1), rat_int(-1))
            }
            SequenceKind::HoradamW(h) | SequenceKind::HoradamU(h) => {
                (rat_int(h.p), rat_int(h.q))
            }
        }
    }

    /// The value at index `i`, filling the memo as needed.
    pub fn value(&self, i: i64) -> BigRational {
        let (p, q) = self.recurrence();
        let mut memo = self.memo.lock().expect("sequence memo poisoned");
        if i >= 0 {
            let idx = i as usize;
            while memo.forward.len() <= idx {
                let n = memo.forward.len();
                let next = &p * &memo.forward[n - 1] - &q * &memo.forward[n - 2];
                memo.forward.push(next);
            }
            memo.forward[idx].clone()
        } else {
            let idx = (-i - 1) as usize;
            while memo.backward.len() <= idx {
                // v(i-2) = (p*v(i-1) - v(i)) / q, stepping the front down.
                let (last, prior) = match memo.backward.len() {
                    0 => (memo.forward[0].clone(), memo.forward[1].clone()),
                    1 => (memo.backward[0].clone(), memo.forward[0].clone()),
                    n => (memo.backward[n - 1].clone(), memo.backward[n - 2].clone()),
                };
                let prev = (&p * &last - &prior) / &q;
                memo.backward.push(prev);
            }
            memo.backward[idx].clone()
        }
    }

    /// Convenience: the value as a `BigInt`, panicking if non-integral
    /// (only Horadam handles can produce non-integers).
    pub fn value_int(&self, i: i64) -> BigInt {
        let v = self.value(i);
        assert!(v.is_integer(), "sequence value at {i} is not an integer");
        v.to_integer()
    }
}

/// Exact check that a rational is zero; used by denominator scans.
pub fn is_zero_rat(v: &BigRational) -> bool {
    v.is_zero()
}

#[allow(unused)]
fn bigint_sign(v: &BigInt) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

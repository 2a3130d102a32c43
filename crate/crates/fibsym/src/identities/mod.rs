//! The identity catalog and its verification machinery.
//!
//! Twenty summation and product identities over generalized Fibonacci and
//! Horadam sequences, each stored as a (hypothesis predicate, LHS
//! evaluator, RHS evaluator) triple:
//!
//! * [`eval_sides`] computes both sides exactly and reports a structured
//!   [`CheckResult`] — it distinguishes "identity false" from "hypothesis
//!   violated" from "a denominator vanished", and never returns a partial
//!   answer as a verdict;
//! * [`rederive_sides`] re-derives both sides of every entry that admits a
//!   telescoping route, as an independent second opinion on the direct
//!   summation;
//! * [`sweep`] runs [`eval_sides`] over a finite parameter grid and
//!   reports counts plus the complete, deterministically ordered list of
//!   in-hypothesis counterexamples;
//! * [`limit_consistency`] tracks how the finite symmetric form converges
//!   toward the series module's closed form as the free length parameter
//!   grows.

mod catalog;
mod eval;
mod limit;
mod rederive;
mod sweep;

pub use catalog::{Dim, IdentityId};
pub use eval::{
    check_jeannin41, check_lemma_howard, check_lemma_vajda10a, check_lemma_vajda21, eval_sides,
};
pub use limit::{limit_consistency, ConsistencyEntry, ConsistencyReport};
pub use rederive::{rederive_sides, RederiveError};
pub use sweep::{sweep, Counterexample, SweepGrid, SweepReport};

use num_rational::BigRational;

use crate::exactnum::{render_rational, QuadElem};
use crate::sequences::{HoradamParams, SeedPair};
use crate::Sign;

/// One instantiation of a catalog entry. Fields an entry does not consume
/// (see [`IdentityId::dims`]) are ignored by its evaluator.
#[derive(Debug, Clone)]
pub struct IdentityParams {
    pub p: i64,
    pub q: i64,
    pub n: i64,
    pub t: i64,
    pub k: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub seeds: SeedPair,
    pub horadam: HoradamParams,
    pub sign: Sign,
}

impl Default for IdentityParams {
    fn default() -> Self {
        IdentityParams {
            p: 1,
            q: 1,
            n: 1,
            t: 0,
            k: 1,
            a: 0,
            b: 0,
            c: 0,
            seeds: SeedPair::fibonacci(),
            horadam: HoradamParams::new(0, 1, 1, -1).expect("default parameters are valid"),
            sign: Sign::Plus,
        }
    }
}

macro_rules! chainable_setters {
    ($($(#[$meta:meta])* $setter:ident => $field:ident: $ty:ty),* $(,)?) => {
        impl IdentityParams {
            $($(#[$meta])*
            pub fn $setter(mut self, value: $ty) -> Self {
                self.$field = value;
                self
            })*
        }
    };
}

// Chainable setters used pervasively by tests and the CLI.
chainable_setters! {
    with_p => p: i64,
    with_q => q: i64,
    with_n => n: i64,
    with_t => t: i64,
    with_k => k: i64,
    with_a => a: i64,
    with_b => b: i64,
    with_c => c: i64,
    with_seeds => seeds: SeedPair,
    with_horadam => horadam: HoradamParams,
    with_sign => sign: Sign,
}

/// An exact value: a rational, or an element of a quadratic field.
#[derive(Debug, Clone)]
pub enum Value {
    Rational(BigRational),
    Quadratic(QuadElem),
}

impl Value {
    pub fn render(&self) -> String {
        match self {
            Value::Rational(r) => render_rational(r),
            Value::Quadratic(x) => x.to_string(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Value::Rational(r) => Some(r),
            Value::Quadratic(_) => None,
        }
    }

    pub fn as_quadratic(&self) -> Option<&QuadElem> {
        match self {
            Value::Quadratic(x) => Some(x),
            Value::Rational(_) => None,
        }
    }
}

impl PartialEq for Value {
    /// Value equality: a field element with zero radical part equals the
    /// rational it embeds.
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Rational(a), Value::Rational(b)) => a == b,
            (Value::Quadratic(x), Value::Quadratic(y)) => x == y,
            (Value::Rational(r), Value::Quadratic(x)) | (Value::Quadratic(x), Value::Rational(r)) => {
                x.is_rational() && x.rational_part() == r
            }
        }
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// One reason a check could not (or should not) produce a verdict:
/// either a violated hypothesis (`index: None`) or a vanished denominator
/// at a specific sequence index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub index: Option<i64>,
    pub reason: String,
}

impl Diagnostic {
    pub fn hypothesis(reason: impl Into<String>) -> Self {
        Diagnostic {
            index: None,
            reason: reason.into(),
        }
    }

    pub fn at_index(index: i64, reason: impl Into<String>) -> Self {
        Diagnostic {
            index: Some(index),
            reason: reason.into(),
        }
    }
}

impl std::fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.index {
            Some(i) => write!(f, "[index {i}] {}", self.reason),
            None => f.write_str(&self.reason),
        }
    }
}

/// Outcome of checking one identity at one parameter point.
///
/// `equal` is meaningful only when `domain_ok` is true; when the
/// hypothesis fails or a denominator vanishes, both sides are withheld
/// (`None`) and the diagnostics say why.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckResult {
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub equal: bool,
    /// True when the hypothesis held *and* every denominator was nonzero.
    pub domain_ok: bool,
    /// True when the entry's hypothesis predicate held (regardless of
    /// later denominator trouble).
    pub hypothesis_ok: bool,
    pub diagnostics: Vec<Diagnostic>,
}

impl CheckResult {
    /// The check ran to completion and both sides agreed.
    pub fn passed(&self) -> bool {
        self.domain_ok && self.equal
    }
}

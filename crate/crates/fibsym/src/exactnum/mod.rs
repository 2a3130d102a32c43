//! Exact arithmetic substrate: arbitrary-precision rationals, the real
//! quadratic field Q(sqrt(D)), rational interval enclosures and exact
//! decimal rendering.
//!
//! All downstream modules funnel their arithmetic through this one. The
//! governing rule is that nothing here ever rounds silently: a value is
//! either exact (a [`BigRational`] or a [`QuadElem`]) or an explicit
//! two-sided rational enclosure produced by [`QuadElem::to_interval`].

mod quad;
mod rational;

pub use quad::{sqrt_enclosure, QuadElem, QuadError};
pub use rational::{
    decimal_string_rational, parse_rational, pow_rational, rat, rat_big, rat_int, render_rational,
    ParseRationalError,
};

/// Re-exported so that dependants do not need a direct `num-rational`
/// dependency to name the type.
pub use num_rational::BigRational;
pub use num_bigint::BigInt;

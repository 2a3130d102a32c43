//! Exact verification of symmetry identities for sums over generalized
//! Fibonacci and Horadam sequences.
//!
//! Everything here is computed in exact arithmetic: arbitrary-precision
//! rationals ([`exactnum::BigRational`]) and elements of the real quadratic
//! field Q(sqrt(D)) ([`exactnum::QuadElem`]). There is no floating point
//! anywhere in the crate, so every equality verdict is a theorem about
//! integers, not an approximation.
//!
//! The crate is organised in layers:
//!
//! * [`exactnum`] — the arithmetic substrate (rationals, Q(sqrt(D)),
//!   rational interval enclosures, exact decimal rendering);
//! * [`sequences`] — Fibonacci, Lucas, seeded generalized Fibonacci and
//!   Horadam sequences at arbitrary (also negative) indices;
//! * [`telescope`] — a generic engine for three telescoping-summation
//!   lemmas over abstract exact-valued sequences;
//! * [`identities`] — the identity catalog, an exact checker, a telescoping
//!   re-derivation used as an independent second route, and a grid sweeper
//!   that hunts counterexamples;
//! * [`series`] — exact evaluation of the infinite alternating reciprocal
//!   series against its closed form in Q(sqrt(5)), with a certified tail
//!   bound.

pub mod exactnum;
pub mod identities;
pub mod sequences;
pub mod series;
pub mod telescope;

use serde::{Deserialize, Serialize};

/// Sign choice realizing the `(+/-1)^...` weights that several identities
/// carry. `Plus` makes the weight identically one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// The sign raised to `exponent`, as `+1` or `-1`.
    pub fn pow(self, exponent: i64) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => {
                if exponent.rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Sign::Plus => "plus",
            Sign::Minus => "minus",
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[cfg(test)]
mod sign_tests {
    use super::Sign;

    #[test]
    fn minus_pow_follows_parity_for_negative_exponents() {
        assert_eq!(Sign::Minus.pow(-3), -1);
        assert_eq!(Sign::Minus.pow(-4), 1);
        assert_eq!(Sign::Minus.pow(0), 1);
        assert_eq!(Sign::Plus.pow(-3), 1);
    }
}

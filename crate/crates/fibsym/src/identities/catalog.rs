//! The enumerated identity catalog: one tag per entry, plus
//! machine-readable metadata (display slug, statement, hypothesis text,
//! and which parameters the entry consumes).
//!
//! Notation used in the statement strings: `F`, `L` are the Fibonacci and
//! Lucas numbers; `G` is the generalized Fibonacci sequence for the given
//! seeds; `W` is the Horadam sequence for parameters `(a, b, P, Q)` and
//! `U` its `(0, 1)`-seeded companion; `s` is the selectable sign `+1` or
//! `-1`; `beta = (P - sqrt(P^2 - 4Q))/2` and `A = b - beta*a`.

use serde::Serialize;

/// Tag of one catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdentityId {
    GoodEq1,
    MainEq2,
    ThmEvenPM,
    T1a,
    T1b,
    TX,
    T5,
    T9,
    T8,
    R1a,
    R1b,
    R2,
    R3,
    R4,
    HowardCor35,
    Vajda10a,
    Vajda21,
    Jeannin41,
    HorW,
    HorWEven,
}

/// A parameter dimension an identity consumes; everything else in
/// `IdentityParams` is ignored by its evaluator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim {
    P,
    Q,
    N,
    T,
    K,
    A,
    B,
    C,
    Seeds,
    Horadam,
    SignChoice,
}

use Dim::*;
use IdentityId::*;

impl IdentityId {
    /// Every catalog entry, in canonical (display and sweep) order.
    pub const ALL: [IdentityId; 20] = [
        GoodEq1, MainEq2, ThmEvenPM, T1a, T1b, TX, T5, T9, T8, R1a, R1b, R2, R3, R4,
        HowardCor35, Vajda10a, Vajda21, Jeannin41, HorW, HorWEven,
    ];

    /// Short lowercase name used by the command-line interface and in
    /// reports.
    pub fn slug(self) -> &'static str {
        match self {
            GoodEq1 => "good",
            MainEq2 => "main",
            ThmEvenPM => "evenpm",
            T1a => "t1a",
            T1b => "t1b",
            TX => "tx",
            T5 => "t5",
            T9 => "t9",
            T8 => "t8",
            R1a => "r1a",
            R1b => "r1b",
            R2 => "r2",
            R3 => "r3",
            R4 => "r4",
            HowardCor35 => "howard",
            Vajda10a => "vajda10a",
            Vajda21 => "vajda21",
            Jeannin41 => "jeannin41",
            HorW => "horw",
            HorWEven => "horweven",
        }
    }

    pub fn from_slug(slug: &str) -> Option<IdentityId> {
        IdentityId::ALL.into_iter().find(|id| id.slug() == slug)
    }

    /// The checked equation, in plain ASCII notation.
    pub fn statement(self) -> &'static str {
        match self {
            GoodEq1 => {
                "F(q) * sum_{k=1..n} (-1)^k / (G(k) G(k+q)) = \
                 F(n) * sum_{k=1..q} (-1)^k / (G(k) G(k+n))"
            }
            MainEq2 => {
                "F(pq) * sum_{k=1..n} (-1)^(pk) / (G(pk) G(pk+pq)) = \
                 F(pn) * sum_{k=1..q} (-1)^(pk) / (G(pk) G(pk+pn))"
            }
            ThmEvenPM => {
                "F(pq) * sum_{k=1..n} s^(k(p-1)) / (G(pk) G(pk+pq)) = \
                 F(pn) * sum_{k=1..q} s^(k(p-1)) / (G(pk) G(pk+pn))"
            }
            T1a => {
                "L(pq) * sum_{k=1..2n} s^(k-1) G(pk+pq+t) = \
                 L(pn) * sum_{k=1..2q} s^(k-1) G(pk+pn+t)"
            }
            T1b => {
                "L(pq) * sum_{k=1..n} G(2pk+pq+t) = \
                 L(pn) * sum_{k=1..q} G(2pk+pn+t)"
            }
            TX => {
                "F(pq) * sum_{k=1..n} (-1)^(k-1) G(2pk+pq+t) = \
                 F(pn) * sum_{k=1..q} (-1)^(k-1) G(2pk+pn+t)"
            }
            T5 => {
                "F(pq) * sum_{k=1..n} G(2pk+pq+t) = \
                 F(pn) * sum_{k=1..q} G(2pk+pn+t)"
            }
            T9 => {
                "F(pq) * sum_{k=1..2n} s^(k-1) G(pk+pq+t) = \
                 F(pn) * sum_{k=1..2q} s^(k-1) G(pk+pn+t)"
            }
            T8 => {
                "L(pq) * sum_{k=1..n} (-1)^(k-1) G(2pk+pq+t) = \
                 L(pn) * sum_{k=1..q} (-1)^(k-1) G(2pk+pn+t)"
            }
            R1a => {
                "L(pq) * sum_{k=1..2n} s^(k-1) G(pk+pq+t) / (G(pk+t) G(pk+2pq+t)) = \
                 L(pn) * sum_{k=1..2q} s^(k-1) G(pk+pn+t) / (G(pk+t) G(pk+2pn+t))"
            }
            R1b => {
                "L(pq) * sum_{k=1..n} G(2pk+pq+t) / (G(2pk+t) G(2pk+2pq+t)) = \
                 L(pn) * sum_{k=1..q} G(2pk+pn+t) / (G(2pk+t) G(2pk+2pn+t))"
            }
            R2 => {
                "L(pq) * sum_{k=1..n} (-1)^(k-1) G(2pk+pq+t) / (G(2pk+t) G(2pk+2pq+t)) = \
                 L(pn) * sum_{k=1..q} (-1)^(k-1) G(2pk+pn+t) / (G(2pk+t) G(2pk+2pn+t))"
            }
            R3 => {
                "F(pq) * sum_{k=1..n} G(2pk+pq+t) / (F(pk) G(pk+t) F(pk+pq) G(pk+pq+t)) = \
                 F(pn) * sum_{k=1..q} G(2pk+pn+t) / (F(pk) G(pk+t) F(pk+pn) G(pk+pn+t))"
            }
            R4 => {
                "F(pq) * sum_{k=1..n} (-1)^(k-1) G(2pk+pq+t) / (F(pk) G(pk+t) F(pk+pq) G(pk+pq+t)) = \
                 F(pn) * sum_{k=1..q} (-1)^(k-1) G(2pk+pn+t) / (F(pk) G(pk+t) F(pk+pn) G(pk+pn+t))"
            }
            HowardCor35 => {
                "F(a) G(2b+a+c) = F(a+b) G(a+b+c) - F(b) G(b+c) for even a; \
                 F(a) G(2b+a+c) = F(a+b) G(a+b+c) + F(b) G(b+c) for odd a"
            }
            Vajda10a => {
                "L(a) G(b) = G(b+a) + G(b-a) for even a; \
                 L(a) G(b) = G(b+a) - G(b-a) for odd a"
            }
            Vajda21 => "F(b) G(a) - F(a) G(b) = (-1)^a G(0) F(b-a)",
            Jeannin41 => {
                "beta^(pk)/W(pk) - beta^(pk+pq)/W(pk+pq) = \
                 A Q^(pk) U(pq) / (W(pk) W(pk+pq))"
            }
            HorW => {
                "U(pq) * sum_{k=1..n} Q^(pk) / (W(pk) W(pk+pq)) = \
                 U(pn) * sum_{k=1..q} Q^(pk) / (W(pk) W(pk+pn))"
            }
            HorWEven => {
                "U(pq) * sum_{k=1..n} (s Q^p)^k / (W(pk) W(pk+pq)) = \
                 U(pn) * sum_{k=1..q} (s Q^p)^k / (W(pk) W(pk+pn))"
            }
        }
    }

    /// The hypothesis under which the identity is claimed, as stated.
    /// Denominator nonvanishing is always additionally required and is
    /// checked term by term during evaluation.
    pub fn hypothesis(self) -> &'static str {
        match self {
            GoodEq1 => "q >= 0 and n >= 0; every G value in a denominator nonzero",
            MainEq2 => "p != 0, q >= 0, n >= 0; every G value in a denominator nonzero",
            ThmEvenPM => "p != 0; q and n nonnegative even; denominators nonzero",
            T1a | T1b => "p*q*n odd",
            TX => "p*q*n odd, or q and n both even",
            T5 => "p even, or q and n both even",
            T9 => "p even",
            T8 => "p even and n*q odd",
            R1a | R1b => "p, q, n, t >= 1 and p*n*q odd; denominators nonzero",
            R2 => "p, q, n, t >= 1, p even, n*q odd; denominators nonzero",
            R3 => "p, q, n, t >= 1 and (p even, or n and q both even); denominators nonzero",
            R4 => "p, q, n, t >= 1 and (p odd, or n and q both even); denominators nonzero",
            HowardCor35 | Vajda10a | Vajda21 => "none: holds for all integer arguments",
            Jeannin41 => "p*k >= 0 and p*k + p*q >= 0; W(pk) and W(pk+pq) nonzero",
            HorW => "p != 0, q >= 0, n >= 0; every W value in a denominator nonzero",
            HorWEven => "p != 0; q and n nonnegative even; denominators nonzero",
        }
    }

    /// Which parameters the entry's evaluator consumes.
    pub fn dims(self) -> &'static [Dim] {
        match self {
            GoodEq1 => &[Q, N, Seeds],
            MainEq2 => &[P, Q, N, Seeds],
            ThmEvenPM => &[P, Q, N, Seeds, SignChoice],
            T1a => &[P, Q, N, T, Seeds, SignChoice],
            T1b | TX | T5 | T8 => &[P, Q, N, T, Seeds],
            T9 => &[P, Q, N, T, Seeds, SignChoice],
            R1a => &[P, Q, N, T, Seeds, SignChoice],
            R1b | R2 | R3 | R4 => &[P, Q, N, T, Seeds],
            HowardCor35 => &[A, B, C, Seeds],
            Vajda10a | Vajda21 => &[A, B, Seeds],
            Jeannin41 => &[P, Q, K, Horadam],
            HorW => &[P, Q, N, Horadam],
            HorWEven => &[P, Q, N, Horadam, SignChoice],
        }
    }

    pub fn uses(self, dim: Dim) -> bool {
        self.dims().contains(&dim)
    }

    /// True when both sides live in a quadratic field rather than in Q.
    pub fn is_quadratic(self) -> bool {
        matches!(self, Jeannin41)
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.slug())
    }
}

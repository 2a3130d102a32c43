//! Direct evaluation of both sides of every catalog entry.
//!
//! Structure: each summation identity's two sides are images of a single
//! side-expression under swapping the two length parameters `(q, n)`, so
//! every family is implemented as one side function evaluated twice —
//! once as `side(q, n)` (the LHS) and once as `side(n, q)` (the RHS).
//! That construction makes the swap symmetry of the catalog hold
//! literally, and keeps each formula transcribed exactly once.
//!
//! Denominator discipline: every factor that ends up in a denominator is
//! tested for zero before inversion; the first vanishing factor aborts
//! that side with a [`Diagnostic`] naming the sequence index and the
//! summand. No partial value is ever reported as a verdict.
//!
//! Index arithmetic is carried out in `i128` and checked back into `i64`,
//! so extreme parameter choices produce a diagnostic instead of a wrapped
//! index.

use num_rational::BigRational;
use num_traits::Zero;

use crate::exactnum::{pow_rational, rat_int, QuadElem};
use crate::sequences::{
    alpha_beta, binet_coefficients, HoradamParams, SeedPair, SequenceHandle, SequenceKind,
};
use crate::Sign;

use super::{CheckResult, Diagnostic, IdentityId, IdentityParams, Value};

/// Memoized sequence handles for one (seeds, horadam) configuration; a
/// sweep reuses one context across its whole grid slice.
pub(crate) struct Ctx {
    pub fib: SequenceHandle,
    pub luc: SequenceHandle,
    pub g: SequenceHandle,
    pub w: SequenceHandle,
    pub wu: SequenceHandle,
}

impl Ctx {
    pub fn new(seeds: SeedPair, horadam: HoradamParams) -> Ctx {
        Ctx {
            fib: SequenceHandle::new(SequenceKind::Fibonacci),
            luc: SequenceHandle::new(SequenceKind::Lucas),
            g: SequenceHandle::new(SequenceKind::Seeded(seeds)),
            w: SequenceHandle::new(SequenceKind::HoradamW(horadam)),
            wu: SequenceHandle::new(SequenceKind::HoradamU(horadam)),
        }
    }

    pub fn for_params(params: &IdentityParams) -> Ctx {
        Ctx::new(params.seeds, params.horadam)
    }
}

type SideResult = Result<BigRational, Diagnostic>;

/// Narrows an `i128` index computation back to `i64`, reporting the
/// summand it came from on overflow.
fn to_index(summand: i64, wide: i128) -> Result<i64, Diagnostic> {
    i64::try_from(wide).map_err(|_| {
        Diagnostic::hypothesis(format!("index arithmetic overflowed in summand k={summand}"))
    })
}

/// Guards one denominator factor against zero.
fn nonzero(
    summand: i64,
    label: &str,
    index: i64,
    value: BigRational,
) -> Result<BigRational, Diagnostic> {
    if value.is_zero() {
        Err(Diagnostic::at_index(
            index,
            format!("denominator factor {label}({index}) vanishes in summand k={summand}"),
        ))
    } else {
        Ok(value)
    }
}

fn apply_sign(sign: i64, value: BigRational) -> BigRational {
    if sign < 0 {
        -value
    } else {
        value
    }
}

/// `(-1)^k` for a 1-based summation index.
fn alt(k: i64) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `(-1)^(k-1)`.
fn alt1(k: i64) -> i64 {
    -alt(k)
}

/// `sign^exponent` with a wide exponent.
fn sign_pow(sign: Sign, exponent: i128) -> i64 {
    match sign {
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

// ---------------------------------------------------------------------
// Side expressions, one per structural family.
// ---------------------------------------------------------------------

/// `F(p*qq) * sum_{k=1..nn} weight(k) / (G(pk) * G(pk + p*qq))`.
fn recip_pair_side(
    ctx: &Ctx,
    p: i64,
    qq: i64,
    nn: i64,
    weight: &dyn Fn(i64) -> i64,
) -> SideResult {
    let shift = p as i128 * qq as i128;
    let mut acc = BigRational::zero();
    for k in 1..=nn {
        let i1 = to_index(k, p as i128 * k as i128)?;
        let i2 = to_index(k, p as i128 * k as i128 + shift)?;
        let g1 = nonzero(k, "G", i1, ctx.g.value(i1))?;
        let g2 = nonzero(k, "G", i2, ctx.g.value(i2))?;
        acc += apply_sign(weight(k), (g1 * g2).recip());
    }
    Ok(ctx.fib.value(to_index(0, shift)?) * acc)
}

/// Which sequence provides the outer multiplier of a first-power side.
#[derive(Clone, Copy)]
enum Front {
    Fib,
    Luc,
}

/// `FRONT(p*qq) * sum_{k=1..len_mult*nn} weight(k) * G(stride*p*k + p*qq + t)`.
#[allow(clippy::too_many_arguments)]
fn linear_side(
    ctx: &Ctx,
    front: Front,
    stride: i64,
    len_mult: i64,
    p: i64,
    t: i64,
    qq: i64,
    nn: i64,
    weight: &dyn Fn(i64) -> i64,
) -> SideResult {
    let shift = p as i128 * qq as i128;
    let count = to_index(0, len_mult as i128 * nn as i128)?;
    let mut acc = BigRational::zero();
    for k in 1..=count {
        let idx = to_index(
            k,
            stride as i128 * p as i128 * k as i128 + shift + t as i128,
        )?;
        acc += apply_sign(weight(k), ctx.g.value(idx));
    }
    let front_value = match front {
        Front::Fib => ctx.fib.value(to_index(0, shift)?),
        Front::Luc => ctx.luc.value(to_index(0, shift)?),
    };
    Ok(front_value * acc)
}

/// `L(p*qq) * sum_{k=1..2nn} s^(k-1) G(pk+p*qq+t) / (G(pk+t) G(pk+2p*qq+t))`.
fn recip_single_stride_side(
    ctx: &Ctx,
    p: i64,
    t: i64,
    qq: i64,
    nn: i64,
    sign: Sign,
) -> SideResult {
    let shift = p as i128 * qq as i128;
    let count = to_index(0, 2 * nn as i128)?;
    let mut acc = BigRational::zero();
    for k in 1..=count {
        let base = p as i128 * k as i128 + t as i128;
        let i_num = to_index(k, base + shift)?;
        let i_lo = to_index(k, base)?;
        let i_hi = to_index(k, base + 2 * shift)?;
        let d1 = nonzero(k, "G", i_lo, ctx.g.value(i_lo))?;
        let d2 = nonzero(k, "G", i_hi, ctx.g.value(i_hi))?;
        let term = ctx.g.value(i_num) / (d1 * d2);
        acc += apply_sign(sign_pow(sign, k as i128 - 1), term);
    }
    Ok(ctx.luc.value(to_index(0, shift)?) * acc)
}

/// `L(p*qq) * sum_{k=1..nn} weight(k) * G(2pk+p*qq+t) / (G(2pk+t) G(2pk+2p*qq+t))`.
fn recip_double_stride_side(
    ctx: &Ctx,
    p: i64,
    t: i64,
    qq: i64,
    nn: i64,
    weight: &dyn Fn(i64) -> i64,
) -> SideResult {
    let shift = p as i128 * qq as i128;
    let mut acc = BigRational::zero();
    for k in 1..=nn {
        let base = 2 * p as i128 * k as i128 + t as i128;
        let i_num = to_index(k, base + shift)?;
        let i_lo = to_index(k, base)?;
        let i_hi = to_index(k, base + 2 * shift)?;
        let d1 = nonzero(k, "G", i_lo, ctx.g.value(i_lo))?;
        let d2 = nonzero(k, "G", i_hi, ctx.g.value(i_hi))?;
        let term = ctx.g.value(i_num) / (d1 * d2);
        acc += apply_sign(weight(k), term);
    }
    Ok(ctx.luc.value(to_index(0, shift)?) * acc)
}

/// `F(p*qq) * sum_{k=1..nn} weight(k) * G(2pk+p*qq+t)
///  / (F(pk) G(pk+t) F(pk+p*qq) G(pk+p*qq+t))`.
fn recip_mixed_side(
    ctx: &Ctx,
    p: i64,
    t: i64,
    qq: i64,
    nn: i64,
    weight: &dyn Fn(i64) -> i64,
) -> SideResult {
    let shift = p as i128 * qq as i128;
    let mut acc = BigRational::zero();
    for k in 1..=nn {
        let pk = p as i128 * k as i128;
        let i_num = to_index(k, 2 * pk + shift + t as i128)?;
        let i_f1 = to_index(k, pk)?;
        let i_g1 = to_index(k, pk + t as i128)?;
        let i_f2 = to_index(k, pk + shift)?;
        let i_g2 = to_index(k, pk + shift + t as i128)?;
        let f1 = nonzero(k, "F", i_f1, ctx.fib.value(i_f1))?;
        let g1 = nonzero(k, "G", i_g1, ctx.g.value(i_g1))?;
        let f2 = nonzero(k, "F", i_f2, ctx.fib.value(i_f2))?;
        let g2 = nonzero(k, "G", i_g2, ctx.g.value(i_g2))?;
        let term = ctx.g.value(i_num) / (f1 * g1 * f2 * g2);
        acc += apply_sign(weight(k), term);
    }
    Ok(ctx.fib.value(to_index(0, shift)?) * acc)
}

/// `U(p*qq) * sum_{k=1..nn} weight(k) / (W(pk) * W(pk + p*qq))`.
fn horadam_recip_side(
    ctx: &Ctx,
    p: i64,
    qq: i64,
    nn: i64,
    weight: &dyn Fn(i64) -> Result<BigRational, Diagnostic>,
) -> SideResult {
    let shift = p as i128 * qq as i128;
    let mut acc = BigRational::zero();
    for k in 1..=nn {
        let i1 = to_index(k, p as i128 * k as i128)?;
        let i2 = to_index(k, p as i128 * k as i128 + shift)?;
        let w1 = nonzero(k, "W", i1, ctx.w.value(i1))?;
        let w2 = nonzero(k, "W", i2, ctx.w.value(i2))?;
        acc += weight(k)? / (w1 * w2);
    }
    Ok(ctx.wu.value(to_index(0, shift)?) * acc)
}

// ---------------------------------------------------------------------
// Hypothesis predicates.
// ---------------------------------------------------------------------

pub(crate) fn hypothesis_violations(id: IdentityId, pr: &IdentityParams) -> Vec<Diagnostic> {
    let mut out = Vec::new();
    let mut need = |ok: bool, reason: String| {
        if !ok {
            out.push(Diagnostic::hypothesis(reason));
        }
    };
    let even = |x: i64| x % 2 == 0;
    let odd = |x: i64| x % 2 != 0;
    let (p, q, n, t) = (pr.p, pr.q, pr.n, pr.t);
    match id {
        IdentityId::GoodEq1 => {
            need(q >= 0, format!("hypothesis needs q >= 0 (got q={q})"));
            need(n >= 0, format!("hypothesis needs n >= 0 (got n={n})"));
        }
        IdentityId::MainEq2 | IdentityId::HorW => {
            need(p != 0, "hypothesis needs p nonzero".to_string());
            need(q >= 0, format!("hypothesis needs q >= 0 (got q={q})"));
            need(n >= 0, format!("hypothesis needs n >= 0 (got n={n})"));
        }
        IdentityId::ThmEvenPM | IdentityId::HorWEven => {
            need(p != 0, "hypothesis needs p nonzero".to_string());
            need(
                q >= 0 && even(q),
                format!("hypothesis needs q nonnegative and even (got q={q})"),
            );
            need(
                n >= 0 && even(n),
                format!("hypothesis needs n nonnegative and even (got n={n})"),
            );
        }
        IdentityId::T1a | IdentityId::T1b => {
            need(
                odd(p) && odd(q) && odd(n),
                format!("hypothesis needs p*q*n odd (got p={p}, q={q}, n={n})"),
            );
        }
        IdentityId::TX => {
            need(
                (odd(p) && odd(q) && odd(n)) || (even(q) && even(n)),
                format!(
                    "hypothesis needs p*q*n odd, or q and n both even (got p={p}, q={q}, n={n})"
                ),
            );
        }
        IdentityId::T5 => {
            need(
                even(p) || (even(q) && even(n)),
                format!("hypothesis needs p even, or q and n both even (got p={p}, q={q}, n={n})"),
            );
        }
        IdentityId::T9 => {
            need(even(p), format!("hypothesis needs p even (got p={p})"));
        }
        IdentityId::T8 => {
            need(
                even(p) && odd(n) && odd(q),
                format!("hypothesis needs p even and n*q odd (got p={p}, q={q}, n={n})"),
            );
        }
        IdentityId::R1a | IdentityId::R1b => {
            need(
                p >= 1 && q >= 1 && n >= 1 && t >= 1,
                format!("hypothesis needs p, q, n, t >= 1 (got p={p}, q={q}, n={n}, t={t})"),
            );
            need(
                odd(p) && odd(n) && odd(q),
                format!("hypothesis needs p*n*q odd (got p={p}, q={q}, n={n})"),
            );
        }
        IdentityId::R2 => {
            need(
                p >= 1 && q >= 1 && n >= 1 && t >= 1,
                format!("hypothesis needs p, q, n, t >= 1 (got p={p}, q={q}, n={n}, t={t})"),
            );
            need(even(p), format!("hypothesis needs p even (got p={p})"));
            need(
                odd(n) && odd(q),
                format!("hypothesis needs n*q odd (got q={q}, n={n})"),
            );
        }
        IdentityId::R3 => {
            need(
                p >= 1 && q >= 1 && n >= 1 && t >= 1,
                format!("hypothesis needs p, q, n, t >= 1 (got p={p}, q={q}, n={n}, t={t})"),
            );
            need(
                even(p) || (even(n) && even(q)),
                format!("hypothesis needs p even, or n and q both even (got p={p}, q={q}, n={n})"),
            );
        }
        IdentityId::R4 => {
            need(
                p >= 1 && q >= 1 && n >= 1 && t >= 1,
                format!("hypothesis needs p, q, n, t >= 1 (got p={p}, q={q}, n={n}, t={t})"),
            );
            need(
                odd(p) || (even(n) && even(q)),
                format!("hypothesis needs p odd, or n and q both even (got p={p}, q={q}, n={n})"),
            );
        }
        IdentityId::HowardCor35 | IdentityId::Vajda10a | IdentityId::Vajda21 => {}
        IdentityId::Jeannin41 => {
            let pk = p as i128 * pr.k as i128;
            let pkq = pk + p as i128 * q as i128;
            need(
                pk >= 0,
                format!("hypothesis needs p*k >= 0 (got p={p}, k={})", pr.k),
            );
            need(
                pkq >= 0,
                format!("hypothesis needs p*k + p*q >= 0 (got p={p}, q={q}, k={})", pr.k),
            );
        }
    }
    out
}

// ---------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------

/// Evaluates both sides of `id` at `params` exactly.
pub fn eval_sides(id: IdentityId, params: &IdentityParams) -> CheckResult {
    eval_sides_in_ctx(id, params, &Ctx::for_params(params))
}

/// As [`eval_sides`], but reusing an existing sequence context (the sweep
/// calls this with one context per seeds/horadam combination).
pub(crate) fn eval_sides_in_ctx(id: IdentityId, params: &IdentityParams, ctx: &Ctx) -> CheckResult {
    let hyp = hypothesis_violations(id, params);
    if !hyp.is_empty() {
        return CheckResult {
            lhs: None,
            rhs: None,
            equal: false,
            domain_ok: false,
            hypothesis_ok: false,
            diagnostics: hyp,
        };
    }
    match compute_sides(id, params, ctx) {
        Ok((lhs, rhs)) => {
            let equal = lhs == rhs;
            CheckResult {
                lhs: Some(lhs),
                rhs: Some(rhs),
                equal,
                domain_ok: true,
                hypothesis_ok: true,
                diagnostics: Vec::new(),
            }
        }
        Err(diagnostics) => CheckResult {
            lhs: None,
            rhs: None,
            equal: false,
            domain_ok: false,
            hypothesis_ok: true,
            diagnostics,
        },
    }
}

/// Runs one side expression as `(side(q, n), side(n, q))`, collecting the
/// failures of both sides when either fails.
fn swap_pair(
    q: i64,
    n: i64,
    side: impl Fn(i64, i64) -> SideResult,
) -> Result<(Value, Value), Vec<Diagnostic>> {
    let annotate = |tag: &str, d: Diagnostic| Diagnostic {
        index: d.index,
        reason: format!("{tag}: {}", d.reason),
    };
    match (side(q, n), side(n, q)) {
        (Ok(l), Ok(r)) => Ok((Value::Rational(l), Value::Rational(r))),
        (lhs, rhs) => {
            let mut diags = Vec::new();
            if let Err(d) = lhs {
                diags.push(annotate("lhs", d));
            }
            if let Err(d) = rhs {
                diags.push(annotate("rhs", d));
            }
            Err(diags)
        }
    }
}

fn compute_sides(
    id: IdentityId,
    pr: &IdentityParams,
    ctx: &Ctx,
) -> Result<(Value, Value), Vec<Diagnostic>> {
    match id {
        IdentityId::GoodEq1 => {
            swap_pair(pr.q, pr.n, |qq, nn| recip_pair_side(ctx, 1, qq, nn, &alt))
        }
        IdentityId::MainEq2 => swap_pair(pr.q, pr.n, |qq, nn| {
            let weight = |k: i64| {
                if (pr.p as i128 * k as i128).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                }
            };
            recip_pair_side(ctx, pr.p, qq, nn, &weight)
        }),
        IdentityId::ThmEvenPM => swap_pair(pr.q, pr.n, |qq, nn| {
            let weight =
                |k: i64| sign_pow(pr.sign, k as i128 * (pr.p as i128 - 1));
            recip_pair_side(ctx, pr.p, qq, nn, &weight)
        }),
        IdentityId::T1a => swap_pair(pr.q, pr.n, |qq, nn| {
            let weight = |k: i64| sign_pow(pr.sign, k as i128 - 1);
            linear_side(ctx, Front::Luc, 1, 2, pr.p, pr.t, qq, nn, &weight)
        }),
        IdentityId::T1b => swap_pair(pr.q, pr.n, |qq, nn| {
            linear_side(ctx, Front::Luc, 2, 1, pr.p, pr.t, qq, nn, &|_| 1)
        }),
        IdentityId::TX => swap_pair(pr.q, pr.n, |qq, nn| {
            linear_side(ctx, Front::Fib, 2, 1, pr.p, pr.t, qq, nn, &alt1)
        }),
        IdentityId::T5 => swap_pair(pr.q, pr.n, |qq, nn| {
            linear_side(ctx, Front::Fib, 2, 1, pr.p, pr.t, qq, nn, &|_| 1)
        }),
        IdentityId::T9 => swap_pair(pr.q, pr.n, |qq, nn| {
            let weight = |k: i64| sign_pow(pr.sign, k as i128 - 1);
            linear_side(ctx, Front::Fib, 1, 2, pr.p, pr.t, qq, nn, &weight)
        }),
        IdentityId::T8 => swap_pair(pr.q, pr.n, |qq, nn| {
            linear_side(ctx, Front::Luc, 2, 1, pr.p, pr.t, qq, nn, &alt1)
        }),
        IdentityId::R1a => swap_pair(pr.q, pr.n, |qq, nn| {
            recip_single_stride_side(ctx, pr.p, pr.t, qq, nn, pr.sign)
        }),
        IdentityId::R1b => swap_pair(pr.q, pr.n, |qq, nn| {
            recip_double_stride_side(ctx, pr.p, pr.t, qq, nn, &|_| 1)
        }),
        IdentityId::R2 => swap_pair(pr.q, pr.n, |qq, nn| {
            recip_double_stride_side(ctx, pr.p, pr.t, qq, nn, &alt1)
        }),
        IdentityId::R3 => swap_pair(pr.q, pr.n, |qq, nn| {
            recip_mixed_side(ctx, pr.p, pr.t, qq, nn, &|_| 1)
        }),
        IdentityId::R4 => swap_pair(pr.q, pr.n, |qq, nn| {
            recip_mixed_side(ctx, pr.p, pr.t, qq, nn, &alt1)
        }),
        IdentityId::HowardCor35 => howard_sides(ctx, pr.a, pr.b, pr.c),
        IdentityId::Vajda10a => vajda10a_sides(ctx, pr.a, pr.b),
        IdentityId::Vajda21 => vajda21_sides(ctx, pr.a, pr.b),
        IdentityId::Jeannin41 => jeannin_sides(ctx, pr.horadam, pr.p, pr.q, pr.k),
        IdentityId::HorW => swap_pair(pr.q, pr.n, |qq, nn| {
            let big_q = rat_int(pr.horadam.q());
            let weight = |k: i64| -> Result<BigRational, Diagnostic> {
                let e = to_index(k, pr.p as i128 * k as i128)?;
                Ok(pow_rational(&big_q, e))
            };
            horadam_recip_side(ctx, pr.p, qq, nn, &weight)
        }),
        IdentityId::HorWEven => swap_pair(pr.q, pr.n, |qq, nn| {
            // Base (s * Q^p) of the running weight (s * Q^p)^k.
            let base = apply_sign(
                pr.sign.as_i64(),
                pow_rational(&rat_int(pr.horadam.q()), pr.p),
            );
            let weight = |k: i64| Ok(pow_rational(&base, k));
            horadam_recip_side(ctx, pr.p, qq, nn, &weight)
        }),
    }
}

// ---------------------------------------------------------------------
// Product-form entries (no summation).
// ---------------------------------------------------------------------

/// `F(a) G(2b+a+c) = F(a+b) G(a+b+c) -/+ F(b) G(b+c)` (minus for even
/// `a`, plus for odd `a`).
fn howard_sides(ctx: &Ctx, a: i64, b: i64, c: i64) -> Result<(Value, Value), Vec<Diagnostic>> {
    let wrap = |d: Diagnostic| vec![d];
    let i_lhs = to_index(0, 2 * b as i128 + a as i128 + c as i128).map_err(wrap)?;
    let i_ab = to_index(0, a as i128 + b as i128).map_err(wrap)?;
    let i_abc = to_index(0, a as i128 + b as i128 + c as i128).map_err(wrap)?;
    let i_bc = to_index(0, b as i128 + c as i128).map_err(wrap)?;
    let lhs = ctx.fib.value(a) * ctx.g.value(i_lhs);
    let first = ctx.fib.value(i_ab) * ctx.g.value(i_abc);
    let second = ctx.fib.value(b) * ctx.g.value(i_bc);
    let rhs = if a % 2 == 0 { first - second } else { first + second };
    Ok((Value::Rational(lhs), Value::Rational(rhs)))
}

/// `L(a) G(b) = G(b+a) +/- G(b-a)` (plus for even `a`, minus for odd).
fn vajda10a_sides(ctx: &Ctx, a: i64, b: i64) -> Result<(Value, Value), Vec<Diagnostic>> {
    let wrap = |d: Diagnostic| vec![d];
    let i_sum = to_index(0, b as i128 + a as i128).map_err(wrap)?;
    let i_diff = to_index(0, b as i128 - a as i128).map_err(wrap)?;
    let lhs = ctx.luc.value(a) * ctx.g.value(b);
    let (hi, lo) = (ctx.g.value(i_sum), ctx.g.value(i_diff));
    let rhs = if a % 2 == 0 { hi + lo } else { hi - lo };
    Ok((Value::Rational(lhs), Value::Rational(rhs)))
}

/// `F(b) G(a) - F(a) G(b) = (-1)^a G(0) F(b-a)`.
fn vajda21_sides(ctx: &Ctx, a: i64, b: i64) -> Result<(Value, Value), Vec<Diagnostic>> {
    let wrap = |d: Diagnostic| vec![d];
    let i_diff = to_index(0, b as i128 - a as i128).map_err(wrap)?;
    let lhs = ctx.fib.value(b) * ctx.g.value(a) - ctx.fib.value(a) * ctx.g.value(b);
    let rhs = apply_sign(alt(a), ctx.g.value(0) * ctx.fib.value(i_diff));
    Ok((Value::Rational(lhs), Value::Rational(rhs)))
}

/// The quadratic-field difference identity:
/// `beta^(pk)/W(pk) - beta^(pk+pq)/W(pk+pq) = A Q^(pk) U(pq) / (W(pk) W(pk+pq))`
/// with `A = b - beta*a`, evaluated exactly in Q(sqrt(P^2-4Q)).
fn jeannin_sides(
    ctx: &Ctx,
    horadam: HoradamParams,
    p: i64,
    q: i64,
    k: i64,
) -> Result<(Value, Value), Vec<Diagnostic>> {
    let wrap = |d: Diagnostic| vec![d];
    let pk = to_index(k, p as i128 * k as i128).map_err(wrap)?;
    let pkq = to_index(k, p as i128 * k as i128 + p as i128 * q as i128).map_err(wrap)?;
    let pq = to_index(0, p as i128 * q as i128).map_err(wrap)?;
    let w1 = nonzero(k, "W", pk, ctx.w.value(pk)).map_err(wrap)?;
    let w2 = nonzero(k, "W", pkq, ctx.w.value(pkq)).map_err(wrap)?;
    let (_, beta) = alpha_beta(&horadam);
    let (coeff_a, _) = binet_coefficients(&horadam);
    let field = |r: &BigRational| QuadElem::from_rational(r.clone());
    let lhs = beta
        .pow(pk)
        .expect("beta is nonzero when Q is nonzero")
        .checked_div(&field(&w1))
        .expect("guarded nonzero")
        .checked_sub(
            &beta
                .pow(pkq)
                .expect("beta is nonzero when Q is nonzero")
                .checked_div(&field(&w2))
                .expect("guarded nonzero"),
        )
        .expect("same field");
    let rhs = coeff_a
        .checked_mul(&field(&pow_rational(&rat_int(horadam.q()), pk)))
        .expect("same field")
        .checked_mul(&field(&ctx.wu.value(pq)))
        .expect("same field")
        .checked_div(&field(&(w1 * w2)))
        .expect("guarded nonzero")
        ;
    Ok((Value::Quadratic(lhs), Value::Quadratic(rhs)))
}

// ---------------------------------------------------------------------
// Named check entry points.
// ---------------------------------------------------------------------

/// Checks `F(a) G(2b+a+c) = F(a+b) G(a+b+c) -/+ F(b) G(b+c)`.
pub fn check_lemma_howard(a: i64, b: i64, c: i64, seeds: SeedPair) -> CheckResult {
    let params = IdentityParams::default()
        .with_a(a)
        .with_b(b)
        .with_c(c)
        .with_seeds(seeds);
    eval_sides(IdentityId::HowardCor35, &params)
}

/// Checks `L(a) G(b) = G(b+a) +/- G(b-a)`.
pub fn check_lemma_vajda10a(a: i64, b: i64, seeds: SeedPair) -> CheckResult {
    let params = IdentityParams::default().with_a(a).with_b(b).with_seeds(seeds);
    eval_sides(IdentityId::Vajda10a, &params)
}

/// Checks `F(b) G(a) - F(a) G(b) = (-1)^a G(0) F(b-a)`.
pub fn check_lemma_vajda21(a: i64, b: i64, seeds: SeedPair) -> CheckResult {
    let params = IdentityParams::default().with_a(a).with_b(b).with_seeds(seeds);
    eval_sides(IdentityId::Vajda21, &params)
}

/// Checks the quadratic-field difference identity for one `(p, q, k)`.
pub fn check_jeannin41(horadam: HoradamParams, p: i64, q: i64, k: i64) -> CheckResult {
    let params = IdentityParams::default()
        .with_horadam(horadam)
        .with_p(p)
        .with_q(q)
        .with_k(k);
    eval_sides(IdentityId::Jeannin41, &params)
}

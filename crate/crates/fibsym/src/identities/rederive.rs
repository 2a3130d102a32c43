//! Rederivation of catalog entries through the exchange-lemma engine.
//!
//! For each supported entry this module rebuilds both sides from the
//! route that proves it: choose an auxiliary sequence, run the matching
//! exchange lemma over it, and rescale by a constant. The result must
//! agree with [`eval_sides`](super::eval_sides), which transcribes the
//! summation formulas literally — so the two paths check each other
//! without sharing any arithmetic beyond the sequence layer.
//!
//! Routes are narrower than hypotheses: the lemmas demand positive
//! counts, and the pair-ratio routes divide by a seed-dependent
//! constant. Points outside a route report an error instead of a value,
//! which is itself informative — the entries' hypotheses admit points
//! (negative lengths, degenerate seeds) that no route reaches, and the
//! direct evaluator adjudicates those alone.

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::exactnum::{rat_int, QuadElem};
use crate::telescope::{
    telescope_fs, telescope_fs1, telescope_fs2, AbstractSequence, LemmaSides, TelescopeError,
};
use crate::Sign;

use super::eval::{hypothesis_violations, Ctx};
use super::{IdentityId, IdentityParams, Value};

/// Why a rederivation could not produce a value.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RederiveError {
    /// The entry has no exchange-lemma route here (the product-form
    /// lemmas, the quadratic difference identity, and the one summation
    /// entry whose validity region is mapped empirically rather than
    /// derived).
    #[error("no exchange-lemma route is implemented for `{id}`")]
    Unsupported { id: IdentityId },
    /// The route exists but does not cover this parameter point.
    #[error("the route does not apply: {0}")]
    OutsideRoute(String),
    /// The underlying lemma rejected the parameters or the auxiliary
    /// sequence failed pointwise.
    #[error(transparent)]
    Telescope(#[from] TelescopeError),
}

type Rederived = Result<(Value, Value), RederiveError>;

/// Rebuilds both sides of `id` at `params` from its proof route.
pub fn rederive_sides(id: IdentityId, params: &IdentityParams) -> Rederived {
    let hyp = hypothesis_violations(id, params);
    if let Some(first) = hyp.first() {
        return Err(RederiveError::OutsideRoute(format!(
            "hypothesis not satisfied: {}",
            first.reason
        )));
    }
    let ctx = Ctx::for_params(params);
    let pr = params;
    match id {
        IdentityId::GoodEq1 => pair_ratio_route(&ctx, pr, 1, RatioWeight::Unit),
        IdentityId::MainEq2 => pair_ratio_route(&ctx, pr, pr.p, RatioWeight::Unit),
        IdentityId::ThmEvenPM => pair_ratio_route(&ctx, pr, pr.p, RatioWeight::Signed(pr.sign)),
        IdentityId::T1a => {
            let f = g_shifted(&ctx, pr.t);
            scale_unit(telescope_fs1(&f, pr.p, 2 * pr.q, 2 * pr.n, pr.sign)?)
        }
        IdentityId::T1b => {
            let f = g_shifted(&ctx, pr.t);
            scale_unit(telescope_fs(&f, 2 * pr.p, pr.q, pr.n)?)
        }
        IdentityId::TX => {
            let f = fib_times_g(&ctx, pr.t);
            let odd = |x: i64| x % 2 != 0;
            if odd(pr.p) && odd(pr.q) && odd(pr.n) {
                scale_unit(telescope_fs2(&f, pr.p, pr.q, pr.n)?)
            } else {
                scale_unit(telescope_fs1(&f, pr.p, pr.q, pr.n, Sign::Minus)?)
            }
        }
        IdentityId::T5 => {
            let f = fib_times_g(&ctx, pr.t);
            scale_unit(telescope_fs(&f, pr.p, pr.q, pr.n)?)
        }
        IdentityId::T9 => {
            let f = fib_times_g(&ctx, pr.t);
            scale_unit(telescope_fs1(&f, pr.p / 2, 2 * pr.q, 2 * pr.n, pr.sign)?)
        }
        IdentityId::T8 => {
            let f = g_shifted(&ctx, pr.t);
            scale_unit(telescope_fs2(&f, 2 * pr.p, pr.q, pr.n)?)
        }
        IdentityId::R1a => {
            let f = recip_g_shifted(&ctx, pr.t, 1);
            scale_by(telescope_fs1(&f, pr.p, 2 * pr.q, 2 * pr.n, pr.sign)?, -1)
        }
        IdentityId::R1b => {
            let f = recip_g_shifted(&ctx, pr.t, 2);
            scale_by(telescope_fs(&f, pr.p, pr.q, pr.n)?, -1)
        }
        IdentityId::R2 => {
            let f = recip_g_shifted(&ctx, pr.t, 2);
            scale_by(telescope_fs2(&f, pr.p, pr.q, pr.n)?, 1)
        }
        IdentityId::R3 => {
            let f = recip_fib_g(&ctx, pr.t);
            scale_by(telescope_fs(&f, pr.p, pr.q, pr.n)?, -1)
        }
        IdentityId::HorW => horadam_route(&ctx, pr, None),
        IdentityId::HorWEven => horadam_route(&ctx, pr, Some(pr.sign)),
        IdentityId::R4
        | IdentityId::HowardCor35
        | IdentityId::Vajda10a
        | IdentityId::Vajda21
        | IdentityId::Jeannin41 => Err(RederiveError::Unsupported { id }),
    }
}

// ---------------------------------------------------------------------
// Auxiliary sequences.
// ---------------------------------------------------------------------

fn shifted_index(j: i64, stride: i64, t: i64) -> Result<i64, String> {
    j.checked_mul(stride)
        .and_then(|x| x.checked_add(t))
        .ok_or_else(|| "index arithmetic overflowed".to_string())
}

/// `j -> G(j + t)`.
fn g_shifted<'a>(ctx: &'a Ctx, t: i64) -> AbstractSequence<'a, BigRational> {
    AbstractSequence::new(move |j| Ok(ctx.g.value(shifted_index(j, 1, t)?)))
}

/// `j -> F(j) * G(j + t)`.
fn fib_times_g<'a>(ctx: &'a Ctx, t: i64) -> AbstractSequence<'a, BigRational> {
    AbstractSequence::new(move |j| Ok(ctx.fib.value(j) * ctx.g.value(shifted_index(j, 1, t)?)))
}

/// `j -> 1 / G(stride*j + t)`.
fn recip_g_shifted<'a>(ctx: &'a Ctx, t: i64, stride: i64) -> AbstractSequence<'a, BigRational> {
    AbstractSequence::new(move |j| {
        let idx = shifted_index(j, stride, t)?;
        let g = ctx.g.value(idx);
        if g.is_zero() {
            Err(format!("G({idx}) vanishes"))
        } else {
            Ok(g.recip())
        }
    })
}

/// `j -> 1 / (F(j) * G(j + t))`.
fn recip_fib_g<'a>(ctx: &'a Ctx, t: i64) -> AbstractSequence<'a, BigRational> {
    AbstractSequence::new(move |j| {
        let f = ctx.fib.value(j);
        if f.is_zero() {
            return Err(format!("F({j}) vanishes"));
        }
        let idx = shifted_index(j, 1, t)?;
        let g = ctx.g.value(idx);
        if g.is_zero() {
            return Err(format!("G({idx}) vanishes"));
        }
        Ok((f * g).recip())
    })
}

// ---------------------------------------------------------------------
// Scaling.
// ---------------------------------------------------------------------

fn scale_unit(sides: LemmaSides<BigRational>) -> Rederived {
    Ok((Value::Rational(sides.lhs), Value::Rational(sides.rhs)))
}

fn scale_by(sides: LemmaSides<BigRational>, sign: i64) -> Rederived {
    let s = rat_int(sign);
    Ok((
        Value::Rational(sides.lhs * &s),
        Value::Rational(sides.rhs * &s),
    ))
}

fn divide_by(sides: LemmaSides<BigRational>, divisor: &BigRational) -> Rederived {
    Ok((
        Value::Rational(sides.lhs / divisor),
        Value::Rational(sides.rhs / divisor),
    ))
}

// ---------------------------------------------------------------------
// The pair-ratio route shared by the reciprocal-pair entries.
// ---------------------------------------------------------------------

enum RatioWeight {
    Unit,
    Signed(Sign),
}

/// Route for the reciprocal-pair family: telescope the ratio `H(j)/G(j)`
/// of two independent recurrence solutions along stride `u`, then divide
/// by the constant the cross determinant of `H` and `G` contributes.
///
/// `H = F` works whenever `G(0)` is nonzero; when `G(0) = 0` the
/// sequence `G` is proportional to `F` itself, and `H = L` takes over.
fn pair_ratio_route(ctx: &Ctx, pr: &IdentityParams, u: i64, weight: RatioWeight) -> Rederived {
    let (g0, g1) = (pr.seeds.g0, pr.seeds.g1);
    // divisor = -C with C the cross determinant H(0)G(1) - H(1)G(0).
    let (companion_fib, divisor) = if g0 != 0 {
        (true, rat_int(g0))
    } else if g1 != 0 {
        (false, rat_int(-2 * g1))
    } else {
        return Err(RederiveError::OutsideRoute(
            "the seed pair (0, 0) makes every denominator vanish".to_string(),
        ));
    };
    let f = AbstractSequence::new(move |j: i64| {
        let g = ctx.g.value(j);
        if g.is_zero() {
            return Err(format!("G({j}) vanishes"));
        }
        let h = if companion_fib {
            ctx.fib.value(j)
        } else {
            ctx.luc.value(j)
        };
        Ok(h / g)
    });
    match weight {
        RatioWeight::Unit => {
            let sides = telescope_fs(&f, u, pr.q, pr.n)?;
            divide_by(sides, &divisor)
        }
        RatioWeight::Signed(sign) => {
            if u % 2 == 0 {
                // The target weight collapses to sign^k; the engine's
                // sign^(k-1) differs by one factor of the sign.
                let sides = telescope_fs1(&f, u, pr.q, pr.n, sign)?;
                let adjusted = match sign {
                    Sign::Plus => divisor,
                    Sign::Minus => -divisor,
                };
                divide_by(sides, &adjusted)
            } else {
                // Odd stride: the target weight is identically one, and
                // the alternating engine weight cancels the alternation
                // of the brackets.
                let sides = telescope_fs1(&f, u, pr.q, pr.n, Sign::Minus)?;
                divide_by(sides, &-divisor)
            }
        }
    }
}

// ---------------------------------------------------------------------
// The quadratic-field route for the Horadam entries.
// ---------------------------------------------------------------------

/// Normalizes a field element that landed on the rational axis back to a
/// plain rational value.
fn quad_value(x: QuadElem) -> Value {
    if x.is_rational() {
        Value::Rational(x.rational_part().clone())
    } else {
        Value::Quadratic(x)
    }
}

/// Telescopes `j -> beta^j / W(j)`; the bracket differences contribute
/// the closed-form coefficient `b - beta*a`, which is divided back out.
fn horadam_route(ctx: &Ctx, pr: &IdentityParams, sign: Option<Sign>) -> Rederived {
    let (_, beta) = crate::sequences::alpha_beta(&pr.horadam);
    let (coeff_a, _) = crate::sequences::binet_coefficients(&pr.horadam);
    if coeff_a.is_zero() {
        return Err(RederiveError::OutsideRoute(
            "the closed-form coefficient b - beta*a vanishes for these parameters".to_string(),
        ));
    }
    let f = AbstractSequence::new(move |j: i64| {
        let w = ctx.w.value(j);
        if w.is_zero() {
            return Err(format!("W({j}) vanishes"));
        }
        let numer = beta.pow(j).map_err(|e| e.to_string())?;
        numer
            .checked_div(&QuadElem::from_rational(w))
            .map_err(|e| e.to_string())
    });
    let (sides, divisor) = match sign {
        None => (
            telescope_fs(&f, pr.p, pr.q, pr.n)?,
            -coeff_a.clone(),
        ),
        Some(s) => {
            let sides = telescope_fs1(&f, pr.p, pr.q, pr.n, s)?;
            let divisor = match s {
                Sign::Plus => -coeff_a.clone(),
                Sign::Minus => coeff_a.clone(),
            };
            (sides, divisor)
        }
    };
    let lhs = sides
        .lhs
        .checked_div(&divisor)
        .map_err(|e| RederiveError::OutsideRoute(e.to_string()))?;
    let rhs = sides
        .rhs
        .checked_div(&divisor)
        .map_err(|e| RederiveError::OutsideRoute(e.to_string()))?;
    Ok((quad_value(lhs), quad_value(rhs)))
}

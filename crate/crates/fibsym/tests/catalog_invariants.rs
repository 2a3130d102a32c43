//! Cross-cutting invariants of the identity catalog: swap symmetry,
//! specialization chains, seed homogeneity, denominator accounting, and
//! agreement between direct evaluation and telescoping rederivation.

use num_rational::BigRational;
use proptest::prelude::*;

use fibsym::exactnum::{pow_rational, rat_int};
use fibsym::identities::{eval_sides, rederive_sides, IdentityId, IdentityParams, Value};
use fibsym::sequences::{HoradamParams, SeedPair};
use fibsym::Sign;

fn seeds_strategy() -> impl Strategy<Value = SeedPair> {
    (-5i64..=5, -5i64..=5)
        .prop_map(|(g0, g1)| SeedPair::new(g0, g1))
        .prop_filter("degenerate seeds", |s| (s.g0, s.g1) != (0, 0))
}

fn sign_strategy() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

/// Entries whose two sides swap under exchanging the length parameters.
const SWAPPABLE: [IdentityId; 15] = [
    IdentityId::GoodEq1,
    IdentityId::MainEq2,
    IdentityId::ThmEvenPM,
    IdentityId::T1a,
    IdentityId::T1b,
    IdentityId::TX,
    IdentityId::T5,
    IdentityId::T9,
    IdentityId::T8,
    IdentityId::R1a,
    IdentityId::R1b,
    IdentityId::R2,
    IdentityId::R3,
    IdentityId::R4,
    IdentityId::HorW,
];

fn swappable() -> impl Strategy<Value = IdentityId> {
    prop::sample::select(&SWAPPABLE[..])
}

/// Seed-degree of each summation family: how a side scales when both
/// seeds are multiplied by `m`.
fn seed_degree(id: IdentityId) -> Option<i64> {
    use IdentityId::*;
    match id {
        GoodEq1 | MainEq2 | ThmEvenPM => Some(-2),
        T1a | T1b | TX | T5 | T9 | T8 => Some(1),
        R1a | R1b | R2 | R3 | R4 => Some(-1),
        HowardCor35 | Vajda10a | Vajda21 => Some(1),
        Jeannin41 | HorW | HorWEven => None,
    }
}

fn as_rat(value: &Value) -> BigRational {
    value
        .as_rational()
        .expect("seeded-family sides are rational")
        .clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn swapping_lengths_swaps_sides(
        id in swappable(),
        seeds in seeds_strategy(),
        sign in sign_strategy(),
        p in 1i64..=4,
        q in 0i64..=6,
        n in 0i64..=6,
        t in 0i64..=3,
    ) {
        let pr = IdentityParams::default()
            .with_seeds(seeds)
            .with_sign(sign)
            .with_p(p)
            .with_q(q)
            .with_n(n)
            .with_t(t);
        let swapped = pr.clone().with_q(n).with_n(q);
        let fwd = eval_sides(id, &pr);
        let bwd = eval_sides(id, &swapped);
        prop_assert_eq!(fwd.hypothesis_ok, bwd.hypothesis_ok);
        if fwd.domain_ok && bwd.domain_ok {
            prop_assert_eq!(fwd.lhs, bwd.rhs);
            prop_assert_eq!(fwd.rhs, bwd.lhs);
            prop_assert_eq!(fwd.equal, bwd.equal);
        }
    }

    #[test]
    fn stride_one_general_entry_collapses_to_the_unit_entry(
        seeds in seeds_strategy(),
        q in 0i64..=8,
        n in 0i64..=8,
    ) {
        let pr = IdentityParams::default().with_seeds(seeds).with_p(1).with_q(q).with_n(n);
        let general = eval_sides(IdentityId::MainEq2, &pr);
        let unit = eval_sides(IdentityId::GoodEq1, &pr);
        prop_assert_eq!(general.domain_ok, unit.domain_ok);
        prop_assert_eq!(general.lhs, unit.lhs);
        prop_assert_eq!(general.rhs, unit.rhs);
        prop_assert_eq!(general.equal, unit.equal);
    }

    #[test]
    fn additive_horadam_entry_collapses_to_the_general_entry(
        a in -5i64..=5,
        b in -5i64..=5,
        p in 1i64..=3,
        q in 0i64..=5,
        n in 0i64..=5,
    ) {
        // With recurrence parameters (1, -1) the Horadam recurrence is the
        // additive one: W is the seeded sequence and U is Fibonacci, so the
        // weight (-Q)^... collapses and the two catalog entries coincide.
        let horadam = HoradamParams::new(a, b, 1, -1).unwrap();
        let seeds = SeedPair::new(a, b);
        let pr = IdentityParams::default()
            .with_horadam(horadam)
            .with_seeds(seeds)
            .with_p(p)
            .with_q(q)
            .with_n(n);
        let horadam_result = eval_sides(IdentityId::HorW, &pr);
        let general = eval_sides(IdentityId::MainEq2, &pr);
        prop_assert_eq!(horadam_result.domain_ok, general.domain_ok);
        prop_assert_eq!(horadam_result.lhs, general.lhs);
        prop_assert_eq!(horadam_result.rhs, general.rhs);
    }

    #[test]
    fn scaling_seeds_scales_sides_by_the_family_degree(
        id in prop::sample::select(
            &fibsym::identities::IdentityId::ALL[..]
        ).prop_filter("seedless entries", |id| seed_degree(*id).is_some()),
        seeds in seeds_strategy(),
        m in prop_oneof![-3i64..=-2, 2i64..=3],
        sign in sign_strategy(),
        p in 1i64..=3,
        q in 1i64..=4,
        n in 1i64..=4,
        t in 1i64..=3,
    ) {
        let degree = seed_degree(id).unwrap();
        let pr = IdentityParams::default()
            .with_seeds(seeds)
            .with_sign(sign)
            .with_p(p)
            .with_q(q)
            .with_n(n)
            .with_t(t)
            .with_a(p)
            .with_b(q)
            .with_c(t);
        let scaled_seeds = SeedPair::new(seeds.g0 * m, seeds.g1 * m);
        let base = eval_sides(id, &pr);
        let scaled = eval_sides(id, &pr.clone().with_seeds(scaled_seeds));
        prop_assert_eq!(base.hypothesis_ok, scaled.hypothesis_ok);
        // Scaling seeds by a nonzero integer cannot create or destroy a
        // vanishing denominator.
        prop_assert_eq!(base.domain_ok, scaled.domain_ok);
        if base.domain_ok {
            let factor = pow_rational(&rat_int(m), degree);
            prop_assert_eq!(
                as_rat(scaled.lhs.as_ref().unwrap()),
                as_rat(base.lhs.as_ref().unwrap()) * &factor
            );
            prop_assert_eq!(
                as_rat(scaled.rhs.as_ref().unwrap()),
                as_rat(base.rhs.as_ref().unwrap()) * &factor
            );
        }
    }

    #[test]
    fn vanishing_denominators_are_reported_exactly_when_index_two_occurs(
        q in 0i64..=8,
        n in 0i64..=8,
    ) {
        // Seeds (1, -1) vanish at index 2 and nowhere else among the
        // nonnegative indices this entry touches, so domain failure can be
        // predicted from the index sets alone.
        let pr = IdentityParams::default()
            .with_seeds(SeedPair::new(1, -1))
            .with_q(q)
            .with_n(n);
        let result = eval_sides(IdentityId::GoodEq1, &pr);
        let occurs = |qq: i64, nn: i64| (1..=nn).any(|k| k == 2 || k + qq == 2);
        let expect_failure = occurs(q, n) || occurs(n, q);
        prop_assert_eq!(result.domain_ok, !expect_failure);
        if expect_failure {
            prop_assert!(result
                .diagnostics
                .iter()
                .all(|d| d.index == Some(2)));
            prop_assert!(!result.diagnostics.is_empty());
        }
    }

    #[test]
    fn rederivation_agrees_with_direct_evaluation_on_routed_entries(
        raw_p in 1i64..=3,
        raw_q in 1i64..=3,
        raw_n in 1i64..=3,
        t in 1i64..=3,
        seeds in seeds_strategy(),
        sign in sign_strategy(),
        which in 0usize..12,
    ) {
        // Adjust parities per entry so the point satisfies its hypothesis.
        let odd = |x: i64| 2 * x - 1;
        let even = |x: i64| 2 * x;
        let (id, p, q, n) = match which {
            0 => (IdentityId::GoodEq1, 1, raw_q, raw_n),
            1 => (IdentityId::MainEq2, raw_p, raw_q, raw_n),
            2 => (IdentityId::ThmEvenPM, raw_p, even(raw_q), even(raw_n)),
            3 => (IdentityId::T1a, odd(raw_p), odd(raw_q), odd(raw_n)),
            4 => (IdentityId::T1b, odd(raw_p), odd(raw_q), odd(raw_n)),
            5 => (IdentityId::TX, odd(raw_p), odd(raw_q), odd(raw_n)),
            6 => (IdentityId::T5, even(raw_p), raw_q, raw_n),
            7 => (IdentityId::T9, even(raw_p), raw_q, raw_n),
            8 => (IdentityId::T8, even(raw_p), odd(raw_q), odd(raw_n)),
            9 => (IdentityId::R1a, odd(raw_p), odd(raw_q), odd(raw_n)),
            10 => (IdentityId::R2, even(raw_p), odd(raw_q), odd(raw_n)),
            _ => (IdentityId::R3, even(raw_p), raw_q, raw_n),
        };
        let pr = IdentityParams::default()
            .with_seeds(seeds)
            .with_sign(sign)
            .with_p(p)
            .with_q(q)
            .with_n(n)
            .with_t(t);
        let direct = eval_sides(id, &pr);
        match rederive_sides(id, &pr) {
            Ok((lhs, rhs)) => {
                prop_assert!(direct.domain_ok);
                prop_assert_eq!(Some(lhs), direct.lhs);
                prop_assert_eq!(Some(rhs), direct.rhs);
            }
            Err(e) => {
                // Every index the routes touch is a denominator of the
                // direct form, so a route failure must coincide with a
                // domain failure of the direct evaluation.
                prop_assert!(
                    !direct.domain_ok,
                    "route failed ({e}) on a point the direct evaluator accepted"
                );
            }
        }
    }
}

#[test]
fn catalog_enumeration_is_complete_and_self_describing() {
    assert_eq!(IdentityId::ALL.len(), 20);
    for id in IdentityId::ALL {
        assert!(!id.statement().is_empty());
        assert!(!id.hypothesis().is_empty());
        assert!(!id.dims().is_empty());
        assert_eq!(IdentityId::from_slug(id.slug()), Some(id));
    }
}

//! Property tests for the arithmetic layers: quadratic-field axioms,
//! interval certification, recurrence structure, and the closed form
//! against the recurrence walk.

use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use fibsym::exactnum::{parse_rational, rat, render_rational, QuadElem};
use fibsym::sequences::{
    binet_w, fibonacci, gen_fib, horadam_w, lucas, HoradamParams, SeedPair,
};
use fibsym::telescope::{telescope_fs, telescope_fs1, telescope_fs2, AbstractSequence};
use fibsym::Sign;

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-200i64..=200, 1i64..=60).prop_map(|(n, d)| rat(n, d))
}

fn radicand() -> impl Strategy<Value = u64> {
    prop_oneof![
        Just(2u64),
        Just(3),
        Just(5),
        Just(6),
        Just(7),
        Just(10),
        Just(13),
    ]
}

fn quad_elem() -> impl Strategy<Value = (QuadElem, u64)> {
    (small_rational(), small_rational(), radicand())
        .prop_map(|(a, b, d)| (QuadElem::new(a, b, d), d))
}

proptest! {
    #[test]
    fn field_operations_satisfy_ring_axioms(
        (x, d) in quad_elem(),
        (a1, b1) in (small_rational(), small_rational()),
        (a2, b2) in (small_rational(), small_rational()),
    ) {
        let y = QuadElem::new(a1, b1, d);
        let z = QuadElem::new(a2, b2, d);
        prop_assert_eq!((x.clone() + y.clone()) + z.clone(), x.clone() + (y.clone() + z.clone()));
        prop_assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        prop_assert_eq!(
            x.clone() * (y.clone() + z.clone()),
            x.clone() * y.clone() + x.clone() * z.clone()
        );
        prop_assert_eq!(x.clone() - x.clone(), QuadElem::zero());
    }

    #[test]
    fn nonzero_elements_invert_exactly((x, _) in quad_elem()) {
        prop_assume!(!x.is_zero());
        let inv = x.inv().unwrap();
        prop_assert_eq!(x * inv, QuadElem::one());
    }

    #[test]
    fn conjugation_fixes_norm_and_trace((x, _) in quad_elem()) {
        let c = x.conjugate();
        let norm = x.clone() * c.clone();
        let trace = x.clone() + c;
        prop_assert!(norm.is_rational());
        prop_assert!(trace.is_rational());
    }

    #[test]
    fn interval_certificates_bracket_and_nest((x, _) in quad_elem()) {
        let (lo32, hi32) = x.to_interval(32);
        let (lo64, hi64) = x.to_interval(64);
        prop_assert!(QuadElem::from_rational(lo32.clone()) <= x);
        prop_assert!(x <= QuadElem::from_rational(hi32.clone()));
        prop_assert!(lo32 <= lo64);
        prop_assert!(hi64 <= hi32);
        prop_assert!(lo64 <= hi64);
    }

    #[test]
    fn signum_agrees_with_certified_intervals((x, _) in quad_elem()) {
        let (lo, hi) = x.to_interval(128);
        match x.signum() {
            1 => prop_assert!(hi > BigRational::zero()),
            -1 => prop_assert!(lo < BigRational::zero()),
            0 => prop_assert!(x.is_zero()),
            other => prop_assert!(false, "impossible signum {other}"),
        }
    }

    #[test]
    fn rendered_rationals_parse_back(r in small_rational()) {
        prop_assert_eq!(parse_rational(&render_rational(&r)).unwrap(), r);
    }

    #[test]
    fn seeded_sequences_satisfy_the_recurrence(
        g0 in -50i64..=50,
        g1 in -50i64..=50,
        i in -30i64..=30,
    ) {
        let seeds = SeedPair::new(g0, g1);
        prop_assert_eq!(
            gen_fib(seeds, i + 1),
            gen_fib(seeds, i) + gen_fib(seeds, i - 1)
        );
    }

    #[test]
    fn reflection_laws_hold(i in 0i64..=40) {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        prop_assert_eq!(fibonacci(-i), fibonacci(i) * sign);
        prop_assert_eq!(lucas(-i), lucas(i) * -sign);
    }

    #[test]
    fn closed_form_matches_the_recurrence_walk(
        a in -10i64..=10,
        b in -10i64..=10,
        p in prop_oneof![-6i64..=-1, 1i64..=6],
        q in prop_oneof![-6i64..=-1, 1i64..=6],
        i in -20i64..=20,
    ) {
        prop_assume!(p * p - 4 * q > 0);
        let params = HoradamParams::new(a, b, p, q).unwrap();
        let walked = horadam_w(&params, i);
        let closed = binet_w(&params, i);
        prop_assert!(closed.is_rational());
        prop_assert_eq!(closed.rational_part(), &walked);
    }

    #[test]
    fn exchange_lemmas_balance_on_random_sequences(
        values in prop::collection::vec((-99i64..=99, 1i64..=30), 230),
        u in 1i64..=10,
        v_raw in 1i64..=5,
        w_raw in 1i64..=5,
    ) {
        let table: Vec<BigRational> = values.iter().map(|&(n, d)| rat(n, d)).collect();
        let f = AbstractSequence::new(|k: i64| {
            usize::try_from(k)
                .ok()
                .and_then(|i| table.get(i))
                .cloned()
                .ok_or_else(|| format!("index {k} outside the table"))
        });
        // Unweighted: any positive counts.
        prop_assert!(telescope_fs(&f, u, v_raw, w_raw).unwrap().balanced());
        // Alternating-weight form: even counts.
        let sides = telescope_fs1(&f, u, 2 * v_raw, 2 * w_raw, Sign::Minus).unwrap();
        prop_assert!(sides.balanced());
        let sides = telescope_fs1(&f, u, 2 * v_raw, 2 * w_raw, Sign::Plus).unwrap();
        prop_assert!(sides.balanced());
        // Plus form: odd counts.
        let sides = telescope_fs2(&f, u, 2 * v_raw - 1, 2 * w_raw - 1).unwrap();
        prop_assert!(sides.balanced());
    }
}

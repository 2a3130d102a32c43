//! Acceptance gate for the crate: ten end-to-end criteria, each a single
//! test that prints one `PASS` line on success. A failing criterion
//! panics with the offending parameter point, so the harness output is
//! the pass/fail record.
//!
//! Everything here is exact: no tolerances, no floating point. Runtime
//! bounds are asserted where a criterion carries one.

use std::time::Instant;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use fibsym::exactnum::{rat, QuadElem};
use fibsym::identities::{
    check_jeannin41, eval_sides, rederive_sides, sweep, IdentityId, IdentityParams, SweepGrid,
};
use fibsym::sequences::{binet_w, horadam_w, HoradamParams, SeedPair};
use fibsym::series::{closed_form, partial_sum, tail_bound, SeriesSpec};
use fibsym::telescope::{telescope_fs, telescope_fs1, telescope_fs2, AbstractSequence};
use fibsym::Sign;

/// The four Horadam parameter sets exercised by criteria 4, 5 and 10.
/// Their discriminants are 1 (a perfect square), 5, 13 and 8.
fn horadam_fixtures() -> Vec<HoradamParams> {
    [(0, 1, 3, 2), (2, 1, 1, -1), (1, 2, 5, 3), (0, 1, 2, -1)]
        .into_iter()
        .map(|(a, b, p, q)| HoradamParams::new(a, b, p, q).expect("fixture params are valid"))
        .collect()
}

fn is_perfect_square(d: u64) -> bool {
    let r = (d as f64).sqrt().round() as u64;
    r.checked_mul(r) == Some(d)
}

#[test]
fn criterion_01_symmetry_identity_exhaustive_to_q_n_20() {
    let start = Instant::now();
    let mut points = 0u64;
    for seeds in [SeedPair::fibonacci(), SeedPair::lucas()] {
        for q in 0..=20 {
            for n in 0..=20 {
                let pr = IdentityParams::default()
                    .with_seeds(seeds)
                    .with_q(q)
                    .with_n(n);
                let r = eval_sides(IdentityId::GoodEq1, &pr);
                assert!(
                    r.passed(),
                    "criterion 1: seeds {seeds}, q={q}, n={n} did not pass: {:?}",
                    r.diagnostics
                );
                points += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(points, 2 * 21 * 21);
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "criterion 1: took {elapsed:?}, bound is 5s"
    );
    println!(
        "acceptance 01 symmetry-exhaustive: PASS ({points} points exact, {:.2}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_02_stride_identity_exhaustive_with_negative_strides() {
    let start = Instant::now();
    let seeds_list = [
        SeedPair::fibonacci(),
        SeedPair::lucas(),
        SeedPair::new(1, 4),
        SeedPair::new(3, -1),
    ];
    let mut passed = 0u64;
    let mut skipped = 0u64;
    for seeds in seeds_list {
        for p in [-3, -2, -1, 1, 2, 3, 4, 5] {
            for q in 0..=10 {
                for n in 0..=10 {
                    let pr = IdentityParams::default()
                        .with_seeds(seeds)
                        .with_p(p)
                        .with_q(q)
                        .with_n(n);
                    let r = eval_sides(IdentityId::MainEq2, &pr);
                    assert!(
                        r.hypothesis_ok,
                        "criterion 2: hypothesis rejected seeds {seeds}, p={p}, q={q}, n={n}"
                    );
                    if r.domain_ok {
                        assert!(
                            r.equal,
                            "criterion 2: sides differ at seeds {seeds}, p={p}, q={q}, n={n}: \
                             {:?} vs {:?}",
                            r.lhs, r.rhs
                        );
                        passed += 1;
                    } else {
                        // A skipped point must say exactly which index vanished.
                        assert!(
                            !r.diagnostics.is_empty()
                                && r.diagnostics.iter().all(|d| d.index.is_some()),
                            "criterion 2: skip without an indexed diagnostic at seeds {seeds}, \
                             p={p}, q={q}, n={n}"
                        );
                        skipped += 1;
                    }
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(passed + skipped, 4 * 8 * 11 * 11);
    assert!(passed > 0, "criterion 2: grid produced no checked points");
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "criterion 2: took {elapsed:?}, bound is 60s"
    );
    println!(
        "acceptance 02 stride-exhaustive: PASS ({passed} points exact, {skipped} skipped with \
         diagnostics, {:.2}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_03_theorem_family_sweeps_have_no_in_hypothesis_failures() {
    let grid = SweepGrid {
        seeds: vec![SeedPair::fibonacci(), SeedPair::lucas(), SeedPair::new(3, 2)],
        p: (1..=6).collect(),
        q: (1..=7).collect(),
        n: (1..=7).collect(),
        t: (0..=3).collect(),
        ..SweepGrid::default()
    };
    let ids = [
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
    ];
    let mut total_checked = 0u64;
    for id in ids {
        let report = sweep(id, &grid);
        assert!(
            report.checked > 0,
            "criterion 3: sweep of {id:?} checked nothing"
        );
        assert!(
            report.clean() && report.counterexamples.is_empty(),
            "criterion 3: {id:?} produced {} in-hypothesis failures: {:?}",
            report.failed,
            report.counterexamples
        );
        total_checked += report.checked;
    }
    println!(
        "acceptance 03 theorem-family-sweeps: PASS ({} entries, {total_checked} in-hypothesis \
         points, 0 failures)",
        ids.len()
    );
}

#[test]
fn criterion_04_horadam_entries_pass_over_parameter_grid() {
    let mut checked = 0u64;
    for horadam in horadam_fixtures() {
        for p in 1..=4 {
            for q in 0..=8 {
                for n in 0..=8 {
                    let base = IdentityParams::default()
                        .with_horadam(horadam)
                        .with_p(p)
                        .with_q(q)
                        .with_n(n);
                    let r = eval_sides(IdentityId::HorW, &base);
                    assert!(
                        r.passed(),
                        "criterion 4: HorW failed at {horadam}, p={p}, q={q}, n={n}: {:?}",
                        r.diagnostics
                    );
                    checked += 1;
                    for sign in [Sign::Plus, Sign::Minus] {
                        let r = eval_sides(IdentityId::HorWEven, &base.clone().with_sign(sign));
                        if q % 2 == 0 && n % 2 == 0 {
                            assert!(
                                r.passed(),
                                "criterion 4: HorWEven failed at {horadam}, p={p}, q={q}, \
                                 n={n}, sign {}: {:?}",
                                sign.label(),
                                r.diagnostics
                            );
                            checked += 1;
                        } else {
                            assert!(
                                !r.hypothesis_ok,
                                "criterion 4: HorWEven accepted odd lengths q={q}, n={n}"
                            );
                        }
                    }
                }
            }
        }
    }
    println!("acceptance 04 horadam-grid: PASS ({checked} points exact over rationals)");
}

#[test]
fn criterion_05_quadratic_field_identity_covers_square_and_nonsquare_discriminants() {
    let fixtures = horadam_fixtures();
    assert!(
        fixtures.iter().any(|h| is_perfect_square(h.discriminant())),
        "criterion 5: fixture list lost its perfect-square discriminant"
    );
    assert!(
        fixtures.iter().any(|h| !is_perfect_square(h.discriminant())),
        "criterion 5: fixture list lost its non-square discriminant"
    );
    let mut checked = 0u64;
    for horadam in &fixtures {
        for p in 1..=6 {
            for q in 1..=6 {
                for k in 1..=6 {
                    let r = check_jeannin41(*horadam, p, q, k);
                    assert!(
                        r.passed(),
                        "criterion 5: failed at {horadam} (disc {}), p={p}, q={q}, k={k}: {:?}",
                        horadam.discriminant(),
                        r.diagnostics
                    );
                    checked += 1;
                }
            }
        }
    }
    println!(
        "acceptance 05 quadratic-field-identity: PASS ({checked} points exact, discriminants \
         1, 5, 13, 8)"
    );
}

#[test]
fn criterion_06_lemma_engine_balances_randomized_sequences() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f1b5);
    let mut balanced = 0u64;
    for round in 0..10_000u32 {
        let u = rng.gen_range(1i64..=10);
        // Rotate through the engine's three exchanges, both signs of the
        // alternating one, drawing counts inside each hypothesis.
        let variant = round % 4;
        let (v, w) = match variant {
            0 => (rng.gen_range(1i64..=10), rng.gen_range(1i64..=10)),
            1 | 2 => (2 * rng.gen_range(1i64..=5), 2 * rng.gen_range(1i64..=5)),
            _ => (2 * rng.gen_range(1i64..=5) - 1, 2 * rng.gen_range(1i64..=5) - 1),
        };
        let top = u * (v + w);
        let table: Vec<BigRational> = (0..=top)
            .map(|_| rat(rng.gen_range(-999i64..=999), rng.gen_range(1i64..=99)))
            .collect();
        let f = AbstractSequence::infallible(|i: i64| table[i as usize].clone());
        let sides = match variant {
            0 => telescope_fs(&f, u, v, w),
            1 => telescope_fs1(&f, u, v, w, Sign::Plus),
            2 => telescope_fs1(&f, u, v, w, Sign::Minus),
            _ => telescope_fs2(&f, u, v, w),
        }
        .unwrap_or_else(|e| panic!("criterion 6: round {round} (u={u}, v={v}, w={w}): {e}"));
        assert!(
            sides.balanced(),
            "criterion 6: round {round} unbalanced at u={u}, v={v}, w={w}: {} vs {}",
            sides.lhs,
            sides.rhs
        );
        balanced += 1;
    }
    println!("acceptance 06 lemma-engine-randomized: PASS ({balanced} random exchanges balanced)");
}

#[test]
fn criterion_07_series_enclosure_and_closed_form() {
    let start = Instant::now();
    let mut enclosed = 0u64;
    for p in 1..=4 {
        for q in 1..=4 {
            let spec = SeriesSpec::new(p, q).expect("positive parameters are valid");
            let closed = closed_form(spec);
            let centre = partial_sum(spec, 40);
            let radius = tail_bound(spec, 40);
            let lo = QuadElem::from_rational(&centre - &radius);
            let hi = QuadElem::from_rational(&centre + &radius);
            assert!(
                lo <= closed && closed <= hi,
                "criterion 7: closed form escapes the 40-term enclosure at p={p}, q={q}"
            );
            enclosed += 1;
        }
    }
    let narrow = tail_bound(SeriesSpec::new(1, 1).expect("valid"), 30);
    assert!(
        narrow < rat(1, 10_000_000_000),
        "criterion 7: 30-term tail bound too wide: {narrow}"
    );
    let golden_case = closed_form(SeriesSpec::new(1, 1).expect("valid"));
    assert_eq!(
        golden_case,
        QuadElem::new(rat(1, 2), rat(-1, 2), 5),
        "criterion 7: p=q=1 closed form is not (1-sqrt(5))/2"
    );
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "criterion 7: took {elapsed:?}, bound is 10s"
    );
    println!(
        "acceptance 07 series-enclosure: PASS ({enclosed} specs enclosed, tail(30) < 1e-10, \
         closed form exact, {:.2}s)",
        elapsed.as_secs_f64()
    );
}

#[test]
fn criterion_08_rederivation_matches_direct_summation_on_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0dd5_eed5);
    for id in [IdentityId::GoodEq1, IdentityId::MainEq2] {
        let mut matched = 0u32;
        let mut attempts = 0u32;
        while matched < 100 {
            attempts += 1;
            assert!(
                attempts <= 1000,
                "criterion 8: {id:?} needed more than 1000 draws for 100 usable points"
            );
            let seeds = SeedPair::new(rng.gen_range(-5i64..=5), rng.gen_range(-5i64..=5));
            if seeds.g0 == 0 && seeds.g1 == 0 {
                continue;
            }
            let p = if id == IdentityId::MainEq2 {
                rng.gen_range(1i64..=4)
            } else {
                1
            };
            let pr = IdentityParams::default()
                .with_seeds(seeds)
                .with_p(p)
                .with_q(rng.gen_range(1i64..=6))
                .with_n(rng.gen_range(1i64..=6));
            let direct = eval_sides(id, &pr);
            if !direct.domain_ok {
                continue;
            }
            let (lhs, rhs) = rederive_sides(id, &pr).unwrap_or_else(|e| {
                panic!("criterion 8: route refused a domain-ok point {pr:?}: {e}")
            });
            assert_eq!(Some(lhs), direct.lhs, "criterion 8: lhs mismatch at {pr:?}");
            assert_eq!(Some(rhs), direct.rhs, "criterion 8: rhs mismatch at {pr:?}");
            matched += 1;
        }
    }
    println!(
        "acceptance 08 telescoping-rederivation: PASS (100 random points each for both \
         summation entries)"
    );
}

#[test]
fn criterion_09_r4_sweep_report_is_byte_identical_across_runs() {
    let grid = SweepGrid {
        seeds: vec![SeedPair::lucas()],
        p: (1..=5).collect(),
        q: (1..=6).collect(),
        n: (1..=6).collect(),
        t: (0..=3).collect(),
        ..SweepGrid::default()
    };
    let first = sweep(IdentityId::R4, &grid);
    let second = sweep(IdentityId::R4, &grid);
    let first_json = serde_json::to_string(&first).expect("reports serialize");
    let second_json = serde_json::to_string(&second).expect("reports serialize");
    assert!(
        first.checked > 0,
        "criterion 9: the grid never reached the entry's hypothesis"
    );
    assert_eq!(
        first_json, second_json,
        "criterion 9: repeated sweeps disagreed byte-for-byte"
    );
    // Deliberately no assertion on `failed`: this entry is reported, not
    // adjudicated here.
    println!(
        "acceptance 09 r4-reproducibility: PASS (checked {}, failed {}, report byte-identical)",
        first.checked, first.failed
    );
}

#[test]
fn criterion_10_closed_form_walker_agreement_to_index_50() {
    let mut compared = 0u64;
    for horadam in horadam_fixtures() {
        for i in 0..=50 {
            let walked = horadam_w(&horadam, i);
            let closed = binet_w(&horadam, i);
            assert_eq!(
                QuadElem::from_rational(walked),
                closed,
                "criterion 10: disagreement at {horadam}, i={i}"
            );
            compared += 1;
        }
    }
    println!(
        "acceptance 10 closed-form-agreement: PASS ({compared} indices exact in the \
         quadratic field)"
    );
}

//! Exhaustive grid evaluation of one catalog entry.
//!
//! A sweep enumerates the cartesian product of the supplied axes —
//! restricted to the dimensions the entry actually consumes — and folds
//! every point into one report: how many points were evaluated, how many
//! passed, and the complete list of in-hypothesis counterexamples.
//! Points are classified three ways: outside the hypothesis (skipped,
//! counted), inside the hypothesis but with a vanishing denominator
//! (skipped, counted separately), or fully evaluated (checked).
//!
//! Iteration order is fixed — seeds, Horadam parameters, sign, then
//! `p, q, n, t, k, a, b, c` — so a report, and its serialized form, is
//! byte-for-byte reproducible for a given grid.

use serde::{Serialize, Serializer};

use crate::sequences::{HoradamParams, SeedPair};
use crate::Sign;

use super::eval::{eval_sides_in_ctx, Ctx};
use super::{Dim, IdentityId, IdentityParams};

/// Value axes for a sweep. Axes for dimensions the swept entry does not
/// use are ignored; the entry is evaluated at that dimension's default
/// instead, so unused axes never multiply the grid.
#[derive(Debug, Clone)]
pub struct SweepGrid {
    pub seeds: Vec<SeedPair>,
    pub horadam: Vec<HoradamParams>,
    pub signs: Vec<Sign>,
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub n: Vec<i64>,
    pub t: Vec<i64>,
    pub k: Vec<i64>,
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub c: Vec<i64>,
}

impl Default for SweepGrid {
    /// Singleton axes matching [`IdentityParams::default`], except that
    /// both sign choices are present: a signed entry states two
    /// identities at once, and a default sweep should see both.
    fn default() -> Self {
        let d = IdentityParams::default();
        SweepGrid {
            seeds: vec![d.seeds],
            horadam: vec![d.horadam],
            signs: vec![Sign::Plus, Sign::Minus],
            p: vec![d.p],
            q: vec![d.q],
            n: vec![d.n],
            t: vec![d.t],
            k: vec![d.k],
            a: vec![d.a],
            b: vec![d.b],
            c: vec![d.c],
        }
    }
}

/// All parameter coordinates of one grid point, rendered as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamsRecord {
    pub p: String,
    pub q: String,
    pub n: String,
    pub t: String,
    pub k: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub seeds: String,
    pub horadam: String,
    pub sign: String,
}

impl ParamsRecord {
    fn from_params(pr: &IdentityParams) -> Self {
        ParamsRecord {
            p: pr.p.to_string(),
            q: pr.q.to_string(),
            n: pr.n.to_string(),
            t: pr.t.to_string(),
            k: pr.k.to_string(),
            a: pr.a.to_string(),
            b: pr.b.to_string(),
            c: pr.c.to_string(),
            seeds: pr.seeds.to_string(),
            horadam: pr.horadam.to_string(),
            sign: pr.sign.label().to_string(),
        }
    }
}

/// A grid point inside the hypothesis whose two sides disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: ParamsRecord,
    pub lhs: String,
    pub rhs: String,
}

fn u64_as_string<S: Serializer>(value: &u64, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&value.to_string())
}

/// Outcome of sweeping one entry over one grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    /// Slug of the swept entry.
    pub identity: String,
    /// Points evaluated on both sides (hypothesis held, denominators
    /// nonzero).
    #[serde(serialize_with = "u64_as_string")]
    pub checked: u64,
    /// Checked points where the two sides agreed.
    #[serde(serialize_with = "u64_as_string")]
    pub passed: u64,
    /// Checked points where they did not; these are listed in
    /// `counterexamples`.
    #[serde(serialize_with = "u64_as_string")]
    pub failed: u64,
    /// Points rejected by the hypothesis predicate.
    #[serde(serialize_with = "u64_as_string")]
    pub skipped_hypothesis: u64,
    /// In-hypothesis points where a denominator vanished.
    #[serde(serialize_with = "u64_as_string")]
    pub skipped_denominator: u64,
    pub counterexamples: Vec<Counterexample>,
}

impl SweepReport {
    /// True when no in-hypothesis point disagreed (vacuously true for an
    /// empty or fully skipped grid).
    pub fn clean(&self) -> bool {
        self.failed == 0
    }
}

fn axis<T: Copy>(grid_axis: &[T], used: bool, fallback: T) -> Vec<T> {
    if used {
        grid_axis.to_vec()
    } else {
        vec![fallback]
    }
}

/// Evaluates `id` at every point of `grid` (restricted to the dimensions
/// `id` uses) and tallies the outcomes.
pub fn sweep(id: IdentityId, grid: &SweepGrid) -> SweepReport {
    let d = IdentityParams::default();
    let seeds = axis(&grid.seeds, id.uses(Dim::Seeds), d.seeds);
    let horadam = axis(&grid.horadam, id.uses(Dim::Horadam), d.horadam);
    let signs = axis(&grid.signs, id.uses(Dim::SignChoice), d.sign);
    let ps = axis(&grid.p, id.uses(Dim::P), d.p);
    let qs = axis(&grid.q, id.uses(Dim::Q), d.q);
    let ns = axis(&grid.n, id.uses(Dim::N), d.n);
    let ts = axis(&grid.t, id.uses(Dim::T), d.t);
    let ks = axis(&grid.k, id.uses(Dim::K), d.k);
    let as_ = axis(&grid.a, id.uses(Dim::A), d.a);
    let bs = axis(&grid.b, id.uses(Dim::B), d.b);
    let cs = axis(&grid.c, id.uses(Dim::C), d.c);

    let mut report = SweepReport {
        identity: id.slug().to_string(),
        checked: 0,
        passed: 0,
        failed: 0,
        skipped_hypothesis: 0,
        skipped_denominator: 0,
        counterexamples: Vec::new(),
    };

    for &seed in &seeds {
        for &hor in &horadam {
            let ctx = Ctx::new(seed, hor);
            for &sign in &signs {
                for &p in &ps {
                    for &q in &qs {
                        for &n in &ns {
                            for &t in &ts {
                                for &k in &ks {
                                    for &a in &as_ {
                                        for &b in &bs {
                                            for &c in &cs {
                                                let params = IdentityParams {
                                                    p,
                                                    q,
                                                    n,
                                                    t,
                                                    k,
                                                    a,
                                                    b,
                                                    c,
                                                    seeds: seed,
                                                    horadam: hor,
                                                    sign,
                                                };
                                                tally(id, &params, &ctx, &mut report);
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

fn tally(id: IdentityId, params: &IdentityParams, ctx: &Ctx, report: &mut SweepReport) {
    let result = eval_sides_in_ctx(id, params, ctx);
    if !result.hypothesis_ok {
        report.skipped_hypothesis += 1;
    } else if !result.domain_ok {
        report.skipped_denominator += 1;
    } else {
        report.checked += 1;
        if result.equal {
            report.passed += 1;
        } else {
            report.failed += 1;
            report.counterexamples.push(Counterexample {
                params: ParamsRecord::from_params(params),
                lhs: result.lhs.expect("domain_ok implies both sides").render(),
                rhs: result.rhs.expect("domain_ok implies both sides").render(),
            });
        }
    }
}

//! Exhaustive invariant suites over all small objects, for `canmap selftest`.

use std::fmt::Write as _;

use num_rational::Ratio;

use crate::cancel::{epi_check, mono_check};
use crate::error::{Error, Result};
use crate::exec::{FunctionSpace, DEFAULT_BUDGET};
use crate::finset::{FinSet, Label};
use crate::function::{compose, Function};
use crate::partition::{enumerate_partitions, join, logical_entropy, meet, refines, Partition};
use crate::pointed::{
    canonical_wedge_to_product, make_pointed, pointed_maps, verify_pointed_ump, wedge_coproduct,
    PointedMap, PointedObj,
};
use crate::relation::Relation;
use crate::universal::{
    boxtimes_construction, coequalizer, coequalizer_factor, coequalizer_partition, coproduct,
    coproduct_factor, equalizer, equalizer_factor, product, product_factor, pullback,
    pullback_factor, pushout, pushout_factor, swapped_product, unique_iso_between_candidates,
    verify_ump, ConstructionResult, Kind,
};
use crate::Strategy;

const MAX_REPORTED: usize = 5;

#[derive(Clone, Debug, Default)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: u64,
    pub failures: u64,
    /// the first few failure descriptions
    pub examples: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        SuiteResult {
            name,
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < MAX_REPORTED {
                self.examples.push(what());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug)]
pub struct Summary {
    pub max_size: usize,
    pub suites: Vec<SuiteResult>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteResult::passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let status = if s.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(
                out,
                "{status} {:<14} {} checks, {} failures",
                s.name, s.checks, s.failures
            );
            for n in &s.notes {
                let _ = writeln!(out, "     {n}");
            }
            for e in &s.examples {
                let _ = writeln!(out, "     failure: {e}");
            }
        }
        let passed = self.suites.iter().filter(|s| s.passed()).count();
        let _ = writeln!(
            out,
            "{passed}/{} suites passed at max size {}",
            self.suites.len(),
            self.max_size
        );
        out
    }
}

/// Runs every suite on objects of size up to `max_size` (clamped per suite
/// where the full range would be too large).
pub fn selftest(max_size: usize) -> Result<Summary> {
    if !(1..=5).contains(&max_size) {
        return Err(Error::ShapeMismatch(format!(
            "max size must be between 1 and 5, got {max_size}"
        )));
    }
    let m = max_size;
    Ok(Summary {
        max_size,
        suites: vec![
            function_characterization(m.min(3)),
            mono_epi(m.min(3)),
            refinement(m),
            lattice(m.min(4)),
            entropy(m),
            bell(m),
            coequalizer_closure(m.min(3)),
            ump(m.min(2)),
            candidate_isos(m.min(3)),
            pointed(m.min(3)),
        ],
    })
}

fn obj(prefix: &str, n: usize) -> FinSet {
    FinSet::new((1..=n).map(|i| Label::new(&format!("{prefix}{i}")).expect("plain label")))
        .expect("distinct labels")
}

fn maps(x: &FinSet, y: &FinSet) -> Vec<Function> {
    FunctionSpace::new(x, y).iter().collect()
}

fn function_characterization(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("functions");
    for n in 0..=max {
        for m in 0..=max {
            let (x, y) = (obj("x", n), obj("y", m));
            for mask in 0u32..(1 << (n * m)) {
                let pairs: Vec<(Label, Label)> = (0..n * m)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| (x.get(b / m).clone(), y.get(b % m).clone()))
                    .collect();
                let has = |i: usize, j: usize| mask >> (i * m + j) & 1 == 1;
                let te = (0..n).all(|i| (0..m).any(|j| has(i, j)));
                let rd = (0..n)
                    .all(|i| (0..m).all(|j| (0..m).all(|k| j == k || !has(i, j) || !has(i, k))));
                let r = Relation::new(x.clone(), y.clone(), pairs).expect("pairs in range");
                let ok = r.as_function().is_ok();
                s.check(ok == (te && rd), || format!("{} : {n}x{m}", r.render()));
            }
        }
    }
    s
}

fn mono_epi(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("mono-epi");
    for n in 0..=max {
        for m in 0..=max {
            for h in maps(&obj("x", n), &obj("y", m)) {
                let mono = mono_check(&h, 2).expect("within budget");
                let epi = epi_check(&h, 1).expect("within budget");
                s.check(mono == h.is_injective(), || format!("mono {h:?}"));
                s.check(epi == h.is_surjective(), || format!("epi {h:?}"));
            }
        }
    }
    s
}

fn refinement(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("refinement");
    for n in 0..=max {
        let all = enumerate_partitions(&obj("u", n)).expect("small");
        for a in &all {
            for b in &all {
                let by_dits = refines(a, b).expect("same universe");
                let by_blocks = Partition::refines_blockwise(a, b).expect("same universe");
                s.check(by_dits == by_blocks, || {
                    format!("{} vs {}", a.render_blocks(), b.render_blocks())
                });
            }
        }
    }
    s
}

fn lattice(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("lattice");
    for n in 0..=max {
        let all = enumerate_partitions(&obj("u", n)).expect("small");
        let le = |a: &Partition, b: &Partition| refines(a, b).expect("same universe");
        for p in &all {
            for r in &all {
                let j = join(p, r).expect("same universe");
                let m = meet(p, r).expect("same universe");
                let what = || format!("{} and {}", p.render_blocks(), r.render_blocks());
                s.check(le(p, &j) && le(r, &j), what);
                s.check(le(&m, p) && le(&m, r), what);
                s.check(
                    all.iter().all(|x| !(le(p, x) && le(r, x)) || le(&j, x)),
                    what,
                );
                s.check(
                    all.iter().all(|x| !(le(x, p) && le(x, r)) || le(x, &m)),
                    what,
                );
                let union = p.ditset().union(&r.ditset()).expect("same universe");
                s.check(j.ditset() == union, what);
            }
        }
    }
    s
}

fn entropy(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("entropy");
    for n in 1..=6 {
        let u = obj("u", n);
        let h1 = logical_entropy(&Partition::discrete(&u)).expect("nonempty");
        let h0 = logical_entropy(&Partition::indiscrete(&u)).expect("nonempty");
        s.check(h1 == Ratio::new(n as u64 - 1, n as u64), || {
            format!("h(discrete) on {n} points is {h1}")
        });
        s.check(h0 == Ratio::from_integer(0), || {
            format!("h(indiscrete) on {n} points is {h0}")
        });
    }
    for n in 1..=max.min(4) {
        let all = enumerate_partitions(&obj("u", n)).expect("small");
        for a in &all {
            for b in &all {
                if refines(a, b).expect("same universe") {
                    let (ha, hb) = (
                        logical_entropy(a).expect("nonempty"),
                        logical_entropy(b).expect("nonempty"),
                    );
                    s.check(ha <= hb, || {
                        format!("{} refines {}", a.render_blocks(), b.render_blocks())
                    });
                }
            }
        }
    }
    s
}

/// Bell numbers from the Bell triangle.
fn bell_triangle(max: usize) -> Vec<u64> {
    let mut out = vec![1];
    let mut row = vec![1u64];
    for _ in 0..max {
        let mut next = vec![*row.last().expect("nonempty row")];
        for &x in &row {
            let last = *next.last().expect("nonempty row");
            next.push(last + x);
        }
        row = next;
        out.push(row[0]);
    }
    out
}

fn bell(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("bell");
    let expected = bell_triangle(max);
    let mut counts = Vec::new();
    for (n, &b) in expected.iter().enumerate() {
        let got = enumerate_partitions(&obj("u", n)).expect("small").len() as u64;
        counts.push(got.to_string());
        s.check(got == b, || {
            format!("|U|={n}: {got} partitions, expected {b}")
        });
    }
    s.notes.push(format!(
        "partition counts for |U| = 0..{max}: {}",
        counts.join(",")
    ));
    s
}

/// Reflexive, symmetric, transitive closure by repeated squaring of a
/// boolean matrix.
#[allow(clippy::needless_range_loop)]
fn closure_classes(n: usize, pairs: &[(usize, usize)]) -> Vec<usize> {
    let mut r = vec![vec![false; n]; n];
    for i in 0..n {
        r[i][i] = true;
    }
    for &(a, b) in pairs {
        r[a][b] = true;
        r[b][a] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if r[i][k] && r[k][j] {
                    r[i][j] = true;
                }
            }
        }
    }
    (0..n)
        .map(|i| (0..n).find(|&j| r[i][j]).expect("reflexive"))
        .collect()
}

fn coequalizer_closure(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("coequalizer");
    for n in 0..=max {
        for m in 0..=max {
            let (x, y) = (obj("x", n), obj("y", m));
            let fs = maps(&x, &y);
            for f in &fs {
                for g in &fs {
                    let pairs: Vec<(usize, usize)> = (0..n)
                        .map(|i| (f.apply_index(i), g.apply_index(i)))
                        .collect();
                    let oracle = Partition::from_block_keys(y.clone(), &closure_classes(m, &pairs));
                    let got = coequalizer_partition(f, g).expect("parallel");
                    s.check(got == oracle, || format!("{f:?} / {g:?}"));
                }
            }
        }
    }
    s
}

/// Checks that the recipe commutes and is the unique mediator.
fn check_mediator(
    s: &mut SuiteResult,
    c: &ConstructionResult,
    cone: &[Function],
    recipe: Result<Function>,
) {
    let what = || format!("{} with cone {cone:?}", c.kind().name());
    let report = verify_ump(c, cone, DEFAULT_BUDGET);
    match (report, recipe) {
        (Ok(r), Ok(m)) => {
            s.check(r.commutes && r.mediating_count == 1, what);
            s.check(r.mediator.as_ref() == Some(&m), what);
        }
        _ => s.check(false, what),
    }
}

fn ump(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("ump");
    let objs: Vec<FinSet> = (0..=max).map(|n| obj("e", n)).collect();
    let vertices: Vec<FinSet> = (0..=max).map(|n| obj("v", n)).collect();
    for x in &objs {
        for y in &objs {
            let prod = product(x, y);
            let co = coproduct(x, y);
            for z in &vertices {
                for f in maps(z, x) {
                    for g in maps(z, y) {
                        check_mediator(
                            &mut s,
                            &prod,
                            &[f.clone(), g.clone()],
                            product_factor(&f, &g),
                        );
                    }
                }
                for f in maps(x, z) {
                    for g in maps(y, z) {
                        check_mediator(
                            &mut s,
                            &co,
                            &[f.clone(), g.clone()],
                            coproduct_factor(&f, &g),
                        );
                    }
                }
            }
            let parallel = maps(x, y);
            for f in &parallel {
                for g in &parallel {
                    let eq = equalizer(f, g).expect("parallel");
                    let coeq = coequalizer(f, g).expect("parallel");
                    for z in &vertices {
                        for h in maps(z, x) {
                            if compose(&h, f).ok() == compose(&h, g).ok() {
                                check_mediator(
                                    &mut s,
                                    &eq,
                                    std::slice::from_ref(&h),
                                    equalizer_factor(&h, f, g),
                                );
                            }
                        }
                        for h in maps(y, z) {
                            if compose(f, &h).ok() == compose(g, &h).ok() {
                                check_mediator(
                                    &mut s,
                                    &coeq,
                                    std::slice::from_ref(&h),
                                    coequalizer_factor(&h, f, g),
                                );
                            }
                        }
                    }
                }
            }
            for c in &objs {
                for f in maps(x, c) {
                    for g in maps(y, c) {
                        let pb = pullback(&f, &g).expect("cospan");
                        for u in &vertices {
                            for h in maps(u, x) {
                                for h2 in maps(u, y) {
                                    if compose(&h, &f).ok() == compose(&h2, &g).ok() {
                                        let recipe = pullback_factor(&h, &h2, &f, &g);
                                        check_mediator(&mut s, &pb, &[h.clone(), h2], recipe);
                                    }
                                }
                            }
                        }
                    }
                }
                for f in maps(c, x) {
                    for g in maps(c, y) {
                        let po = pushout(&f, &g).expect("span");
                        for u in &vertices {
                            for h in maps(x, u) {
                                for h2 in maps(y, u) {
                                    if compose(&f, &h).ok() == compose(&g, &h2).ok() {
                                        let recipe = pushout_factor(&h, &h2, &f, &g);
                                        check_mediator(&mut s, &po, &[h.clone(), h2], recipe);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    s
}

fn candidate_isos(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("isomorphisms");
    for n in 0..=max {
        for m in 0..=max {
            let (x, y) = (obj("x", n), obj("y", m));
            let prod = product(&x, &y);
            for other in [boxtimes_construction(&x, &y), swapped_product(&x, &y)] {
                let what = || format!("{n}x{m}");
                match unique_iso_between_candidates(&prod, &other, Kind::Product) {
                    Ok(iso) => {
                        let back = unique_iso_between_candidates(&other, &prod, Kind::Product);
                        s.check(iso.is_bijective(), what);
                        s.check(
                            back.is_ok_and(|b| {
                                compose(&iso, &b).ok() == Some(Function::identity(prod.apex()))
                            }),
                            what,
                        );
                    }
                    Err(_) => s.check(false, what),
                }
            }
        }
    }
    s
}

fn pointed_objects(prefix: &str, max: usize) -> Vec<PointedObj> {
    (1..=max)
        .flat_map(|n| {
            let x = obj(prefix, n);
            x.iter()
                .map(|b| make_pointed(&x, b).expect("basepoint in carrier"))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn pointed(max: usize) -> SuiteResult {
    let mut s = SuiteResult::new("pointed");
    let null = PointedObj::null();
    for x in pointed_objects("x", max) {
        s.check(pointed_maps(&x, &null).count() == 1, || format!("{x} -> 1"));
        s.check(pointed_maps(&null, &x).count() == 1, || format!("1 -> {x}"));
        for y in pointed_objects("y", max.min(2)) {
            let w = wedge_coproduct(&x, &y);
            s.check(w.apex().len() == x.len() + y.len() - 1, || {
                format!("wedge {x}, {y}")
            });
            let can = canonical_wedge_to_product(&x, &y);
            let p = crate::pointed::pointed_product(&x, &y);
            let legs = [
                product_factor(
                    &Function::identity(x.carrier()),
                    crate::pointed::zero_arrow(&x, &y).underlying(),
                ),
                product_factor(
                    crate::pointed::zero_arrow(&y, &x).underlying(),
                    &Function::identity(y.carrier()),
                ),
            ];
            let cocone: Option<Vec<PointedMap>> = legs
                .into_iter()
                .zip([&x, &y])
                .map(|(l, o)| l.ok().and_then(|l| PointedMap::new(l, o, p.apex()).ok()))
                .collect();
            let r = cocone
                .and_then(|c| verify_pointed_ump(&w, &c, DEFAULT_BUDGET, Strategy::Auto).ok());
            s.check(
                r.is_some_and(|r| {
                    r.mediating_count == 1 && r.mediator.as_ref() == Some(can.underlying())
                }),
                || format!("wedge-to-product {x}, {y}"),
            );
        }
    }
    s
}

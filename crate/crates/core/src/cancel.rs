//! Arrow-theoretic cancellation tests, decided by exhausting small probes.
//!
//! `mono_check(h, k)` looks for `f != g : P -> dom(h)` with `h∘f = h∘g` over
//! every probe `P` with `|P| <= k`. One-point probes already separate any two
//! elements, so `k >= 1` decides injectivity.
//!
//! `epi_check(h, k)` looks for `f != g : cod(h) -> P` with `f∘h = g∘h`. Here
//! `k` counts probe points beyond a fixed reference point, so the probes have
//! up to `k + 1` points; `k >= 1` brings in the two-point probe that detects a
//! missed element, which decides surjectivity.

use crate::error::{Error, Result};
use crate::exec::{self, FunctionSpace, Strategy, DEFAULT_BUDGET};
use crate::finset::{FinSet, Label, POINT};
use crate::function::Function;

/// A probe object with `k` points: `{•}` or `{•1,...,•k}`.
pub fn probe(k: usize) -> FinSet {
    if k == 1 {
        return FinSet::terminal();
    }
    FinSet::from_labels_dedup(
        (1..=k)
            .map(|i| Label::derived(format!("{POINT}{i}")))
            .collect(),
    )
}

/// Two distinct maps that become equal after cancelling `h`.
pub type Counterexample = (Function, Function);

#[derive(Clone, Copy)]
enum Side {
    /// probes map into `h`'s domain and are post-composed with `h`
    Mono,
    /// probes receive `h`'s codomain and are pre-composed with `h`
    Epi,
}

fn probe_sizes(side: Side, bound: usize) -> std::ops::RangeInclusive<usize> {
    match side {
        Side::Mono => 0..=bound,
        Side::Epi => 0..=bound + 1,
    }
}

fn search(
    h: &Function,
    side: Side,
    bound: usize,
    budget: u128,
    strategy: Strategy,
) -> Result<Option<Counterexample>> {
    if bound == 0 {
        return Err(Error::ShapeMismatch(
            "probe bound must be at least 1".into(),
        ));
    }
    let spaces: Vec<FunctionSpace> = probe_sizes(side, bound)
        .map(|k| match side {
            Side::Mono => FunctionSpace::new(&probe(k), h.dom()),
            Side::Epi => FunctionSpace::new(h.cod(), &probe(k)),
        })
        .collect();
    let needed = spaces.iter().fold(0u128, |acc, s| {
        acc.saturating_add(s.count().saturating_mul(s.count()))
    });
    if needed > budget {
        return Err(Error::EnumerationBudgetExceeded { needed, budget });
    }

    let table = h.index_table();
    for space in &spaces {
        let n = space.count() as u64;
        // smallest index pair (a, b), a < b, whose composites agree
        let hit = exec::map_reduce(
            n * n,
            strategy,
            || None::<u64>,
            |acc, idx| {
                let (a, b) = (idx / n, idx % n);
                if a >= b || acc.is_some_and(|best| best <= idx) {
                    return acc;
                }
                let (mut fa, mut fb) = (Vec::new(), Vec::new());
                space.decode_into(a, &mut fa);
                space.decode_into(b, &mut fb);
                let agree = match side {
                    Side::Mono => fa.iter().zip(&fb).all(|(&x, &y)| table[x] == table[y]),
                    Side::Epi => table.iter().all(|&x| fa[x] == fb[x]),
                };
                if agree {
                    Some(idx)
                } else {
                    acc
                }
            },
            |x, y| match (x, y) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        );
        if let Some(idx) = hit {
            return Ok(Some((space.function(idx / n), space.function(idx % n))));
        }
    }
    Ok(None)
}

pub fn mono_witness(h: &Function, probe_bound: usize) -> Result<Option<Counterexample>> {
    search(h, Side::Mono, probe_bound, DEFAULT_BUDGET, Strategy::Auto)
}

pub fn epi_witness(h: &Function, probe_bound: usize) -> Result<Option<Counterexample>> {
    search(h, Side::Epi, probe_bound, DEFAULT_BUDGET, Strategy::Auto)
}

pub fn mono_witness_with(
    h: &Function,
    probe_bound: usize,
    budget: u128,
    strategy: Strategy,
) -> Result<Option<Counterexample>> {
    search(h, Side::Mono, probe_bound, budget, strategy)
}

pub fn epi_witness_with(
    h: &Function,
    probe_bound: usize,
    budget: u128,
    strategy: Strategy,
) -> Result<Option<Counterexample>> {
    search(h, Side::Epi, probe_bound, budget, strategy)
}

/// True iff no probe of size at most `probe_bound` breaks left cancellation.
pub fn mono_check(h: &Function, probe_bound: usize) -> Result<bool> {
    Ok(mono_witness(h, probe_bound)?.is_none())
}

/// True iff no probe with at most `probe_bound + 1` points breaks right cancellation.
pub fn epi_check(h: &Function, probe_bound: usize) -> Result<bool> {
    Ok(epi_witness(h, probe_bound)?.is_none())
}

pub fn mono_check_with(
    h: &Function,
    probe_bound: usize,
    budget: u128,
    strategy: Strategy,
) -> Result<bool> {
    Ok(search(h, Side::Mono, probe_bound, budget, strategy)?.is_none())
}

pub fn epi_check_with(
    h: &Function,
    probe_bound: usize,
    budget: u128,
    strategy: Strategy,
) -> Result<bool> {
    Ok(search(h, Side::Epi, probe_bound, budget, strategy)?.is_none())
}

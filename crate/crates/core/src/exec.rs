//! Exhaustive enumeration over index ranges, sharded across threads when the
//! `parallel` feature is enabled.

use crate::error::{Error, Result};
use crate::finset::FinSet;
use crate::function::Function;

/// Default cap on the number of candidates an exhaustive check may visit.
pub const DEFAULT_BUDGET: u128 = 1_000_000;

/// Below this many items `Strategy::Auto` stays on the calling thread.
pub const PARALLEL_THRESHOLD: u64 = 4096;

/// How an enumeration is executed. Results never depend on the choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
    #[default]
    Auto,
}

impl Strategy {
    #[cfg_attr(not(feature = "parallel"), allow(dead_code))]
    fn use_threads(self, n: u64) -> bool {
        match self {
            Strategy::Sequential => false,
            Strategy::Parallel => true,
            Strategy::Auto => n >= PARALLEL_THRESHOLD,
        }
    }
}

/// Folds `fold` over `0..n` and combines partial results with `reduce`.
///
/// `reduce` must be associative and commutative with `identity()` as its
/// unit, so that any sharding yields the same value.
pub fn map_reduce<T, I, F, R>(n: u64, strategy: Strategy, identity: I, fold: F, reduce: R) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, u64) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if strategy.use_threads(n) {
        use rayon::prelude::*;
        return (0..n)
            .into_par_iter()
            .fold(&identity, &fold)
            .reduce(&identity, &reduce);
    }
    #[cfg(not(feature = "parallel"))]
    let _ = (strategy, reduce);
    (0..n).fold(identity(), fold)
}

/// All functions `dom -> cod`, optionally with some values pinned, indexed
/// as mixed-radix numbers over the free domain positions.
#[derive(Clone, Debug)]
pub struct FunctionSpace {
    dom: FinSet,
    cod: FinSet,
    template: Vec<usize>,
    free: Vec<usize>,
}

impl FunctionSpace {
    pub fn new(dom: &FinSet, cod: &FinSet) -> Self {
        FunctionSpace::pinned(dom, cod, &[])
    }

    /// `pins` lists `(dom index, cod index)` values every candidate must take.
    pub fn pinned(dom: &FinSet, cod: &FinSet, pins: &[(usize, usize)]) -> Self {
        let mut template = vec![usize::MAX; dom.len()];
        for &(i, j) in pins {
            assert!(j < cod.len(), "pinned value outside codomain");
            template[i] = j;
        }
        let free = (0..dom.len())
            .filter(|&i| template[i] == usize::MAX)
            .collect();
        FunctionSpace {
            dom: dom.clone(),
            cod: cod.clone(),
            template,
            free,
        }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    /// `|cod|^(free positions)`, saturating.
    pub fn count(&self) -> u128 {
        saturating_pow(self.cod.len() as u128, self.free.len())
    }

    pub fn check_budget(&self, budget: u128) -> Result<u64> {
        let needed = self.count();
        if needed > budget || needed > u64::MAX as u128 {
            return Err(Error::EnumerationBudgetExceeded { needed, budget });
        }
        Ok(needed as u64)
    }

    /// Writes the index table of candidate `index` into `out`.
    pub fn decode_into(&self, mut index: u64, out: &mut Vec<usize>) {
        out.clear();
        out.extend_from_slice(&self.template);
        let m = self.cod.len() as u64;
        for &pos in &self.free {
            out[pos] = (index % m) as usize;
            index /= m;
        }
    }

    pub fn function(&self, index: u64) -> Function {
        let mut map = Vec::with_capacity(self.dom.len());
        self.decode_into(index, &mut map);
        Function::from_indices(self.dom.clone(), self.cod.clone(), map)
    }

    pub fn iter(&self) -> impl Iterator<Item = Function> + '_ {
        let n = u64::try_from(self.count()).expect("function space too large to iterate");
        (0..n).map(|i| self.function(i))
    }
}

pub fn saturating_pow(base: u128, exp: usize) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

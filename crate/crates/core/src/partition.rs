//! The partition lattice: ditsets, refinement, refinement-induced
//! surjections, join and meet, and logical entropy.

use std::collections::{BTreeSet, HashMap};
use std::hash::Hash;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::finset::{FinSet, Label};
use crate::function::{self, Function};
use crate::tagged;
use crate::unionfind::UnionFind;

/// Largest universe `enumerate_partitions` accepts by default.
pub const DEFAULT_PARTITION_BOUND: usize = 6;

/// A partition of a universe into nonempty disjoint blocks.
///
/// Stored as a restricted growth string: `rgs[i]` is the block of the `i`-th
/// element, and blocks are numbered in order of their least element. Equal
/// partitions therefore have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    universe: FinSet,
    rgs: Vec<usize>,
    blocks: usize,
}

/// The ordered pairs of elements lying in distinct blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DitSet {
    universe: FinSet,
    dits: BTreeSet<(usize, usize)>,
}

impl DitSet {
    pub fn universe(&self) -> &FinSet {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.dits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dits.is_empty()
    }

    pub fn contains(&self, a: &Label, b: &Label) -> bool {
        match (self.universe.index_of(a), self.universe.index_of(b)) {
            (Some(i), Some(j)) => self.dits.contains(&(i, j)),
            _ => false,
        }
    }

    pub fn index_pairs(&self) -> &BTreeSet<(usize, usize)> {
        &self.dits
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Label, &Label)> + '_ {
        self.dits
            .iter()
            .map(|&(i, j)| (self.universe.get(i), self.universe.get(j)))
    }

    pub fn is_subset(&self, other: &DitSet) -> Result<bool> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.dits.is_subset(&other.dits))
    }

    pub fn union(&self, other: &DitSet) -> Result<DitSet> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        Ok(DitSet {
            universe: self.universe.clone(),
            dits: self.dits.union(&other.dits).copied().collect(),
        })
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.pairs().map(|(a, b)| format!("({a},{b})")).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl Partition {
    /// Groups elements by key; elements with equal keys share a block.
    pub fn from_block_keys<K: Eq + Hash>(universe: FinSet, keys: &[K]) -> Self {
        assert_eq!(universe.len(), keys.len());
        let mut ids: HashMap<&K, usize> = HashMap::new();
        let rgs: Vec<usize> = keys
            .iter()
            .map(|k| {
                let next = ids.len();
                *ids.entry(k).or_insert(next)
            })
            .collect();
        Partition {
            universe,
            blocks: ids.len(),
            rgs,
        }
    }

    /// Validates blocks: nonempty, pairwise disjoint, jointly exhaustive.
    pub fn from_blocks<I, B>(universe: FinSet, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = Label>,
    {
        let mut owner: Vec<Option<usize>> = vec![None; universe.len()];
        for (b, block) in blocks.into_iter().enumerate() {
            let mut empty = true;
            for label in block {
                empty = false;
                let i = universe.require(&label)?;
                if owner[i].replace(b).is_some() {
                    return Err(Error::ShapeMismatch(format!(
                        "`{label}` appears in more than one block"
                    )));
                }
            }
            if empty {
                return Err(Error::ShapeMismatch("empty block".into()));
            }
        }
        let keys = owner
            .iter()
            .enumerate()
            .map(|(i, o)| {
                o.ok_or_else(|| {
                    Error::ShapeMismatch(format!("`{}` is in no block", universe.get(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::from_block_keys(universe, &keys))
    }

    pub fn from_strs(universe: FinSet, blocks: &[&[&str]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| b.iter().map(|l| Label::new(l)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Partition::from_blocks(universe, blocks)
    }

    /// `1_U`: all singletons. The empty partition when `U` is empty.
    pub fn discrete(universe: &FinSet) -> Self {
        Partition {
            universe: universe.clone(),
            rgs: (0..universe.len()).collect(),
            blocks: universe.len(),
        }
    }

    /// `0_U`: the single block `U`, or the empty partition when `U` is empty.
    pub fn indiscrete(universe: &FinSet) -> Self {
        Partition {
            universe: universe.clone(),
            rgs: vec![0; universe.len()],
            blocks: usize::from(!universe.is_empty()),
        }
    }

    pub fn universe(&self) -> &FinSet {
        &self.universe
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks
    }

    /// True only for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.blocks == 0
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.rgs[i]
    }

    pub fn growth_string(&self) -> &[usize] {
        &self.rgs
    }

    /// Element indices of each block, blocks ordered by least element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.blocks];
        for (i, &b) in self.rgs.iter().enumerate() {
            out[b].push(i);
        }
        out
    }

    pub fn block_labels(&self) -> Vec<Vec<Label>> {
        self.blocks()
            .into_iter()
            .map(|b| {
                b.into_iter()
                    .map(|i| self.universe.get(i).clone())
                    .collect()
            })
            .collect()
    }

    pub fn block_name(&self, block: usize) -> Label {
        let members: Vec<&Label> = self
            .rgs
            .iter()
            .enumerate()
            .filter(|&(_, &b)| b == block)
            .map(|(i, _)| self.universe.get(i))
            .collect();
        tagged::block_name(members)
    }

    /// The partition viewed as a quotient set of named blocks.
    pub fn quotient(&self) -> FinSet {
        FinSet::from_labels_dedup((0..self.blocks).map(|b| self.block_name(b)).collect())
    }

    /// The distinctions: ordered pairs in different blocks.
    pub fn ditset(&self) -> DitSet {
        let n = self.universe.len();
        let dits = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.rgs[i] != self.rgs[j])
            .collect();
        DitSet {
            universe: self.universe.clone(),
            dits,
        }
    }

    fn same_universe(&self, other: &Partition) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// A block of `self` not contained in any single block of `coarser`.
    fn unrefined_block(&self, coarser: &Partition) -> Option<usize> {
        let mut target = vec![None; self.blocks];
        for (i, &b) in self.rgs.iter().enumerate() {
            let c = coarser.rgs[i];
            match target[b] {
                None => target[b] = Some(c),
                Some(t) if t != c => return Some(b),
                _ => {}
            }
        }
        None
    }

    /// The block-wise refinement test: every block of `finer` sits inside a
    /// block of `coarser`.
    pub fn refines_blockwise(coarser: &Partition, finer: &Partition) -> Result<bool> {
        coarser.same_universe(finer)?;
        Ok(finer.unrefined_block(coarser).is_none())
    }

    /// Renders the partition's blocks: `{{a,b},{c}}`.
    pub fn render_blocks(&self) -> String {
        let blocks: Vec<String> = self
            .block_labels()
            .iter()
            .map(|b| {
                let parts: Vec<&str> = b.iter().map(Label::as_str).collect();
                format!("{{{}}}", parts.join(","))
            })
            .collect();
        format!("{{{}}}", blocks.join(","))
    }

    /// `partition pi on U = {{a,b},{c}}`
    pub fn render(&self, name: &str, universe_name: &str) -> String {
        format!(
            "partition {name} on {universe_name} = {}",
            self.render_blocks()
        )
    }
}

pub fn ditset(p: &Partition) -> DitSet {
    p.ditset()
}

/// `σ ≾ π`: every distinction of `sigma` is a distinction of `pi`.
pub fn refines(sigma: &Partition, pi: &Partition) -> Result<bool> {
    sigma.same_universe(pi)?;
    sigma.ditset().is_subset(&pi.ditset())
}

/// For `σ ≾ π`, the map from the blocks of `pi` to the blocks of `sigma`
/// sending `B` to the unique `C ⊇ B`.
pub fn canonical_surjection(pi: &Partition, sigma: &Partition) -> Result<Function> {
    pi.same_universe(sigma)?;
    if let Some(b) = pi.unrefined_block(sigma) {
        return Err(Error::NotARefinement(pi.block_name(b).to_string()));
    }
    let dom = pi.quotient();
    let cod = sigma.quotient();
    let mut target = vec![0; pi.blocks];
    for (i, &b) in pi.rgs.iter().enumerate() {
        target[b] = sigma.rgs[i];
    }
    let map = (0..pi.blocks)
        .map(|b| {
            let from = dom.index_of(&pi.block_name(b)).expect("block name");
            let to = cod
                .index_of(&sigma.block_name(target[b]))
                .expect("block name");
            (from, to)
        })
        .fold(vec![0; pi.blocks], |mut m, (from, to)| {
            m[from] = to;
            m
        });
    Ok(Function::from_indices(dom, cod, map))
}

/// The map sending every element to the quotient block containing it,
/// induced by `p ≾ 1_U`.
pub fn quotient_map(p: &Partition) -> Function {
    canonical_surjection(&Partition::discrete(&p.universe), p)
        .expect("every partition is refined by the discrete partition")
}

/// The unique map `X -> {•}`, induced by `0_X ≾ 1_X`.
pub fn terminal_map(x: &FinSet) -> Function {
    let to_blob = quotient_map(&Partition::indiscrete(x));
    // the blob quotient has at most one point, so it maps uniquely onto {•}
    let collapse = Function::constant(to_blob.cod(), &FinSet::terminal(), &Label::point())
        .expect("point is in the terminal object");
    function::compose(&to_blob, &collapse).expect("composable")
}

/// Blocks are the nonempty intersections of a block of each input.
pub fn join(pi: &Partition, rho: &Partition) -> Result<Partition> {
    pi.same_universe(rho)?;
    let keys: Vec<(usize, usize)> = pi
        .rgs
        .iter()
        .copied()
        .zip(rho.rgs.iter().copied())
        .collect();
    Ok(Partition::from_block_keys(pi.universe.clone(), &keys))
}

/// Blocks are the connected components of overlapping blocks.
pub fn meet(pi: &Partition, rho: &Partition) -> Result<Partition> {
    pi.same_universe(rho)?;
    let mut uf = UnionFind::new(pi.universe.len());
    for p in [pi, rho] {
        for block in p.blocks() {
            for w in block.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
    }
    Ok(Partition::from_block_keys(pi.universe.clone(), &uf.roots()))
}

/// The partition of `X ⊔ Y` whose blocks are the tagged blocks of both.
pub fn disjoint_union_partition(pi: &Partition, rho: &Partition) -> Partition {
    let universe = tagged::disjoint_union(&pi.universe, &rho.universe);
    let keys: Vec<usize> = pi
        .rgs
        .iter()
        .copied()
        .chain(rho.rgs.iter().map(|&b| pi.blocks + b))
        .collect();
    Partition::from_block_keys(universe, &keys)
}

/// `|dit(π)| / |U × U|`.
pub fn logical_entropy(pi: &Partition) -> Result<Ratio<u64>> {
    let n = pi.universe.len() as u64;
    if n == 0 {
        return Err(Error::EmptyUniverse);
    }
    Ok(Ratio::new(pi.ditset().len() as u64, n * n))
}

/// Every partition of `u` in restricted-growth-string order.
pub fn enumerate_partitions(u: &FinSet) -> Result<Vec<Partition>> {
    enumerate_partitions_bounded(u, DEFAULT_PARTITION_BOUND)
}

pub fn enumerate_partitions_bounded(u: &FinSet, bound: usize) -> Result<Vec<Partition>> {
    let n = u.len();
    if n > bound {
        return Err(Error::EnumerationBudgetExceeded {
            needed: n as u128,
            budget: bound as u128,
        });
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::discrete(u));
        return Ok(out);
    }
    // rgs[0] = 0 and rgs[i] <= 1 + max(rgs[..i]); advance like an odometer
    let mut rgs = vec![0usize; n];
    let mut maxes = vec![0usize; n];
    loop {
        out.push(Partition {
            universe: u.clone(),
            blocks: maxes[n - 1] + 1,
            rgs: rgs.clone(),
        });
        let mut i = n - 1;
        loop {
            if i == 0 {
                return Ok(out);
            }
            if rgs[i] <= maxes[i - 1] {
                rgs[i] += 1;
                maxes[i] = maxes[i - 1].max(rgs[i]);
                for j in i + 1..n {
                    rgs[j] = 0;
                    maxes[j] = maxes[i];
                }
                break;
            }
            i -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::set;

    fn u3() -> FinSet {
        set(&["a", "b", "c"])
    }

    fn ab_c() -> Partition {
        Partition::from_strs(u3(), &[&["a", "b"], &["c"]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(Partition::from_strs(u3(), &[&["a", "b"]]).is_err());
        assert!(Partition::from_strs(u3(), &[&["a", "b"], &["b", "c"]]).is_err());
        assert!(Partition::from_strs(u3(), &[&["a", "b", "c"], &[]]).is_err());
        assert!(Partition::from_strs(u3(), &[&["a", "b"], &["c", "z"]]).is_err());
        let p = Partition::from_strs(u3(), &[&["c"], &["b", "a"]]).unwrap();
        assert_eq!(p, ab_c());
    }

    #[test]
    fn ditset_examples() {
        assert_eq!(Partition::discrete(&u3()).ditset().len(), 6);
        assert!(Partition::indiscrete(&u3()).ditset().is_empty());
        let d = ab_c().ditset();
        assert_eq!(d.render(), "{(a,c),(b,c),(c,a),(c,b)}");
    }

    #[test]
    fn refinement_examples() {
        let top = Partition::discrete(&u3());
        let bot = Partition::indiscrete(&u3());
        assert!(refines(&bot, &ab_c()).unwrap());
        assert!(refines(&ab_c(), &top).unwrap());
        let a_bc = Partition::from_strs(u3(), &[&["a"], &["b", "c"]]).unwrap();
        assert!(!refines(&ab_c(), &a_bc).unwrap());
        assert!(!refines(&a_bc, &ab_c()).unwrap());
        assert_eq!(
            refines(&ab_c(), &Partition::discrete(&set(&["a"]))),
            Err(Error::UniverseMismatch)
        );
    }

    #[test]
    fn surjection_examples() {
        let s = canonical_surjection(&Partition::discrete(&u3()), &ab_c()).unwrap();
        assert_eq!(
            s.render("s", "U", "U/pi"),
            "s: U -> U/pi { a->a+b, b->a+b, c->c }"
        );
        let id = canonical_surjection(&ab_c(), &ab_c()).unwrap();
        assert_eq!(id, Function::identity(&ab_c().quotient()));

        let t = canonical_surjection(&Partition::discrete(&u3()), &Partition::indiscrete(&u3()))
            .unwrap();
        assert_eq!(t.cod().len(), 1);

        let a_bc = Partition::from_strs(u3(), &[&["a"], &["b", "c"]]).unwrap();
        assert_eq!(
            canonical_surjection(&a_bc, &ab_c()),
            Err(Error::NotARefinement("b+c".into()))
        );
    }

    #[test]
    fn extremal_partitions() {
        assert_eq!(Partition::discrete(&u3()).render_blocks(), "{{a},{b},{c}}");
        assert_eq!(Partition::indiscrete(&u3()).render_blocks(), "{{a,b,c}}");
        let e = FinSet::empty();
        assert!(Partition::discrete(&e).is_empty());
        assert_eq!(Partition::discrete(&e), Partition::indiscrete(&e));
        assert_eq!(Partition::discrete(&e).render_blocks(), "{}");
    }

    #[test]
    fn terminal_map_examples() {
        let t = terminal_map(&u3());
        assert_eq!(t.render("t", "U", "1"), "t: U -> 1 { a->•, b->•, c->• }");
        let e = terminal_map(&FinSet::empty());
        assert!(e.dom().is_empty());
        assert_eq!(e.cod(), &FinSet::terminal());
    }

    #[test]
    fn join_and_meet_examples() {
        let x = set(&["1", "2", "3"]);
        let p = Partition::from_strs(x.clone(), &[&["1", "2"], &["3"]]).unwrap();
        let r = Partition::from_strs(x.clone(), &[&["1"], &["2", "3"]]).unwrap();
        assert_eq!(join(&p, &r).unwrap(), Partition::discrete(&x));
        assert_eq!(meet(&p, &r).unwrap(), Partition::indiscrete(&x));
        assert_eq!(join(&p, &Partition::indiscrete(&x)).unwrap(), p);
        assert_eq!(meet(&p, &Partition::discrete(&x)).unwrap(), p);
        assert_eq!(join(&p, &p).unwrap(), p);
        assert_eq!(meet(&p, &p).unwrap(), p);
    }

    #[test]
    fn disjoint_union_examples() {
        let x = set(&["1", "2", "3"]);
        let f = Partition::from_strs(x, &[&["1", "2"], &["3"]]).unwrap();
        let g = Partition::discrete(&set(&["p", "q"]));
        let d = disjoint_union_partition(&f, &g);
        assert_eq!(d.render_blocks(), "{{L.1,L.2},{L.3},{R.p},{R.q}}");

        let e = Partition::discrete(&FinSet::empty());
        let d = disjoint_union_partition(&e, &g);
        assert_eq!(d.render_blocks(), "{{R.p},{R.q}}");

        let d = disjoint_union_partition(
            &Partition::indiscrete(&set(&["1", "2"])),
            &Partition::indiscrete(&set(&["p"])),
        );
        assert_eq!(d.num_blocks(), 2);
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(
            logical_entropy(&Partition::discrete(&u3())).unwrap(),
            Ratio::new(2, 3)
        );
        assert_eq!(
            logical_entropy(&Partition::indiscrete(&u3())).unwrap(),
            Ratio::from(0)
        );
        assert_eq!(logical_entropy(&ab_c()).unwrap(), Ratio::new(4, 9));
        assert_eq!(
            logical_entropy(&Partition::discrete(&FinSet::empty())),
            Err(Error::EmptyUniverse)
        );
    }

    #[test]
    fn enumeration_counts_and_order() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| {
                let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
                enumerate_partitions(&FinSet::from_strs(&names).unwrap())
                    .unwrap()
                    .len()
            })
            .collect();
        assert_eq!(counts, [1, 1, 2, 5, 15]);
        let all = enumerate_partitions(&u3()).unwrap();
        let rgs: Vec<&[usize]> = all.iter().map(|p| p.growth_string()).collect();
        assert_eq!(
            rgs,
            [
                &[0, 0, 0][..],
                &[0, 0, 1],
                &[0, 1, 0],
                &[0, 1, 1],
                &[0, 1, 2]
            ]
        );
        let big = FinSet::from_strs(&["1", "2", "3", "4", "5", "6", "7"]).unwrap();
        assert!(matches!(
            enumerate_partitions(&big),
            Err(Error::EnumerationBudgetExceeded { .. })
        ));
    }
}

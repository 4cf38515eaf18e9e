//! The powerset lattice: inclusion, inclusion-induced injections and the
//! normalized counting measure.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::finset::{FinSet, Label};
use crate::function::Function;

/// A subset of a fixed universe.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subset {
    universe: FinSet,
    members: Vec<usize>,
}

impl Subset {
    pub fn new<I>(universe: FinSet, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = Label>,
    {
        let idx = members
            .into_iter()
            .map(|m| {
                universe
                    .index_of(&m)
                    .ok_or_else(|| Error::NotASubset(m.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subset::from_indices(universe, idx))
    }

    pub fn from_strs(universe: FinSet, members: &[&str]) -> Result<Self> {
        let labels = members
            .iter()
            .map(|m| Label::new(m))
            .collect::<Result<Vec<_>>>()?;
        Subset::new(universe, labels)
    }

    /// A sub-object given as a set of labels, all of which must lie in `universe`.
    pub fn of_object(universe: FinSet, part: &FinSet) -> Result<Self> {
        Subset::new(universe, part.iter().cloned())
    }

    pub(crate) fn from_indices<I: IntoIterator<Item = usize>>(universe: FinSet, idx: I) -> Self {
        let mut members: Vec<usize> = idx.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        Subset { universe, members }
    }

    pub fn empty(universe: &FinSet) -> Self {
        Subset::from_indices(universe.clone(), [])
    }

    pub fn full(universe: &FinSet) -> Self {
        Subset::from_indices(universe.clone(), 0..universe.len())
    }

    /// Every subset of `universe`, in bitmask order.
    pub fn all(universe: &FinSet) -> Vec<Subset> {
        let n = universe.len();
        assert!(n < usize::BITS as usize, "universe too large to enumerate");
        (0..1usize << n)
            .map(|mask| {
                Subset::from_indices(universe.clone(), (0..n).filter(|i| mask >> i & 1 == 1))
            })
            .collect()
    }

    pub fn universe(&self) -> &FinSet {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.universe
            .index_of(label)
            .is_some_and(|i| self.members.binary_search(&i).is_ok())
    }

    pub fn member_indices(&self) -> &[usize] {
        &self.members
    }

    pub fn members(&self) -> impl Iterator<Item = &Label> + '_ {
        self.members.iter().map(|&i| self.universe.get(i))
    }

    /// The members as a standalone object.
    pub fn as_object(&self) -> FinSet {
        FinSet::from_sorted_unique(self.members().cloned().collect())
    }

    fn same_universe(&self, other: &Subset) -> Result<()> {
        if self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn is_subset(&self, other: &Subset) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self
            .members
            .iter()
            .all(|i| other.members.binary_search(i).is_ok()))
    }

    // Boolean conveniences for building test inputs.

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        self.same_universe(other)?;
        Ok(Subset::from_indices(
            self.universe.clone(),
            self.members.iter().chain(&other.members).copied(),
        ))
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        self.same_universe(other)?;
        Ok(Subset::from_indices(
            self.universe.clone(),
            self.members
                .iter()
                .copied()
                .filter(|i| other.members.binary_search(i).is_ok()),
        ))
    }

    pub fn complement(&self) -> Subset {
        Subset::from_indices(
            self.universe.clone(),
            (0..self.universe.len()).filter(|i| self.members.binary_search(i).is_err()),
        )
    }

    /// `subset S of U = {a,b}`
    pub fn render(&self, name: &str, universe_name: &str) -> String {
        format!("subset {name} of {universe_name} = {}", self.as_object())
    }
}

/// The injection `S -> T` induced by `S ⊆ T`, sending each member to itself.
pub fn canonical_injection(small: &Subset, large: &Subset) -> Result<Function> {
    small.same_universe(large)?;
    if let Some(m) = small.members().find(|m| !large.contains(m)) {
        return Err(Error::NotASubset(m.to_string()));
    }
    let dom = small.as_object();
    let cod = large.as_object();
    Function::from_rule(dom, cod, Label::clone)
}

/// Inclusion of one object into another that contains it.
pub fn inclusion(small: &FinSet, large: &FinSet) -> Result<Function> {
    let s = Subset::of_object(large.clone(), small)?;
    canonical_injection(&s, &Subset::full(large))
}

/// The unique map `∅ -> X`, induced by `∅ ⊆ X`.
pub fn initial_map(target: &FinSet) -> Function {
    canonical_injection(&Subset::empty(target), &Subset::full(target))
        .expect("the empty set is included in every set")
}

/// `|S| / |U|` in lowest terms.
pub fn laplace_probability(s: &Subset) -> Result<Ratio<u64>> {
    if s.universe.is_empty() {
        return Err(Error::EmptyUniverse);
    }
    Ok(Ratio::new(s.len() as u64, s.universe.len() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::set;

    fn u3() -> FinSet {
        set(&["a", "b", "c"])
    }

    fn sub(m: &[&str]) -> Subset {
        Subset::from_strs(u3(), m).unwrap()
    }

    #[test]
    fn inclusion_examples() {
        assert!(sub(&["a"]).is_subset(&sub(&["a", "b"])).unwrap());
        assert!(!sub(&["a", "c"]).is_subset(&sub(&["a", "b"])).unwrap());
        for s in Subset::all(&u3()) {
            assert!(Subset::empty(&u3()).is_subset(&s).unwrap());
        }
        let other = Subset::empty(&set(&["a"]));
        assert_eq!(sub(&[]).is_subset(&other), Err(Error::UniverseMismatch));
    }

    #[test]
    fn injection_examples() {
        let j = canonical_injection(&sub(&["a"]), &sub(&["a", "b"])).unwrap();
        assert_eq!(j.apply_str("a").as_str(), "a");
        assert!(j.is_injective());

        let init = canonical_injection(&sub(&[]), &Subset::full(&u3())).unwrap();
        assert!(init.dom().is_empty());
        assert_eq!(init, initial_map(&u3()));

        let ab = sub(&["a", "b"]);
        let id = canonical_injection(&ab, &ab).unwrap();
        assert_eq!(id, Function::identity(&set(&["a", "b"])));

        assert_eq!(
            canonical_injection(&sub(&["c"]), &ab),
            Err(Error::NotASubset("c".into()))
        );
    }

    #[test]
    fn initial_map_of_empty_is_identity() {
        let e = FinSet::empty();
        assert_eq!(initial_map(&e), Function::identity(&e));
    }

    #[test]
    fn probability_examples() {
        assert_eq!(laplace_probability(&sub(&["a"])).unwrap(), Ratio::new(1, 3));
        assert_eq!(
            laplace_probability(&Subset::full(&u3())).unwrap(),
            Ratio::from(1)
        );
        assert_eq!(
            laplace_probability(&sub(&["a", "b"])).unwrap(),
            Ratio::new(2, 3)
        );
        assert_eq!(laplace_probability(&sub(&[])).unwrap(), Ratio::from(0));
        assert_eq!(
            laplace_probability(&Subset::empty(&FinSet::empty())),
            Err(Error::EmptyUniverse)
        );
    }

    #[test]
    fn boolean_conveniences() {
        let ab = sub(&["a", "b"]);
        let bc = sub(&["b", "c"]);
        assert_eq!(ab.union(&bc).unwrap(), Subset::full(&u3()));
        assert_eq!(ab.intersection(&bc).unwrap(), sub(&["b"]));
        assert_eq!(ab.complement(), sub(&["c"]));
    }

    #[test]
    fn render() {
        assert_eq!(sub(&["b", "a"]).render("S", "U"), "subset S of U = {a,b}");
    }
}

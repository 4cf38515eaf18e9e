//! Binary relations between objects and their elements-and-distinctions
//! profile.

use std::collections::BTreeSet;

use crate::error::{Error, Predicate, Result};
use crate::finset::{FinSet, Label};
use crate::function::Function;

/// A set of ordered pairs `R ⊆ dom × cod`, stored by element index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    dom: FinSet,
    cod: FinSet,
    pairs: BTreeSet<(usize, usize)>,
}

/// Truth values of the four quantified definitions on a relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct RelationProfile {
    pub transmits_elements: bool,
    pub reflects_elements: bool,
    pub transmits_distinctions: bool,
    pub reflects_distinctions: bool,
}

impl RelationProfile {
    pub fn is_function(&self) -> bool {
        self.transmits_elements && self.reflects_distinctions
    }

    pub fn is_cofunction(&self) -> bool {
        self.transmits_distinctions && self.reflects_elements
    }
}

impl std::fmt::Display for RelationProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let t = |b: bool| if b { 'T' } else { 'F' };
        write!(
            f,
            "TE={}, RE={}, TD={}, RD={}",
            t(self.transmits_elements),
            t(self.reflects_elements),
            t(self.transmits_distinctions),
            t(self.reflects_distinctions)
        )
    }
}

impl Relation {
    /// Builds a relation from label pairs. Fails if a pair leaves `dom × cod`.
    pub fn new<I>(dom: FinSet, cod: FinSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        let mut set = BTreeSet::new();
        for (x, y) in pairs {
            match (dom.index_of(&x), cod.index_of(&y)) {
                (Some(i), Some(j)) => {
                    set.insert((i, j));
                }
                _ => return Err(Error::MalformedRelation(x.to_string(), y.to_string())),
            }
        }
        Ok(Relation {
            dom,
            cod,
            pairs: set,
        })
    }

    pub fn from_strs(dom: FinSet, cod: FinSet, pairs: &[(&str, &str)]) -> Result<Self> {
        let pairs = pairs
            .iter()
            .map(|(x, y)| Ok((Label::new(x)?, Label::new(y)?)))
            .collect::<Result<Vec<_>>>()?;
        Relation::new(dom, cod, pairs)
    }

    pub(crate) fn from_index_pairs(
        dom: FinSet,
        cod: FinSet,
        pairs: BTreeSet<(usize, usize)>,
    ) -> Self {
        debug_assert!(pairs.iter().all(|&(i, j)| i < dom.len() && j < cod.len()));
        Relation { dom, cod, pairs }
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn index_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Label, &Label)> + '_ {
        self.pairs
            .iter()
            .map(|&(i, j)| (self.dom.get(i), self.cod.get(j)))
    }

    /// Evaluates each definition by quantifying over the pairs.
    pub fn classify(&self) -> RelationProfile {
        RelationProfile {
            transmits_elements: self.transmits_elements_witness().is_none(),
            reflects_elements: self.reflects_elements_witness().is_none(),
            transmits_distinctions: self.transmits_distinctions_witness().is_none(),
            reflects_distinctions: self.reflects_distinctions_witness().is_none(),
        }
    }

    /// A domain element with no pair, if any.
    fn transmits_elements_witness(&self) -> Option<usize> {
        (0..self.dom.len()).find(|&x| !self.pairs.iter().any(|&(a, _)| a == x))
    }

    fn reflects_elements_witness(&self) -> Option<usize> {
        (0..self.cod.len()).find(|&y| !self.pairs.iter().any(|&(_, b)| b == y))
    }

    /// Two pairs with distinct first components and equal second components.
    fn transmits_distinctions_witness(&self) -> Option<((usize, usize), (usize, usize))> {
        self.pairs.iter().find_map(|&p| {
            self.pairs
                .iter()
                .find(|&&q| p.0 != q.0 && p.1 == q.1)
                .map(|&q| (p, q))
        })
    }

    fn reflects_distinctions_witness(&self) -> Option<((usize, usize), (usize, usize))> {
        self.pairs.iter().find_map(|&p| {
            self.pairs
                .iter()
                .find(|&&q| p.1 != q.1 && p.0 == q.0)
                .map(|&q| (p, q))
        })
    }

    fn render_pair(&self, (i, j): (usize, usize)) -> String {
        format!("({},{})", self.dom.get(i), self.cod.get(j))
    }

    /// Reads the relation as a function, reporting the failed predicate.
    pub fn as_function(&self) -> Result<Function> {
        if let Some(x) = self.transmits_elements_witness() {
            return Err(Error::NotAFunction {
                predicate: Predicate::TransmitsElements,
                witness: vec![self.dom.get(x).to_string()],
            });
        }
        if let Some((p, q)) = self.reflects_distinctions_witness() {
            return Err(Error::NotAFunction {
                predicate: Predicate::ReflectsDistinctions,
                witness: vec![self.render_pair(p), self.render_pair(q)],
            });
        }
        let mut map = vec![0; self.dom.len()];
        for &(i, j) in &self.pairs {
            map[i] = j;
        }
        Ok(Function::from_indices(
            self.dom.clone(),
            self.cod.clone(),
            map,
        ))
    }

    /// Swaps every pair and the two ends.
    pub fn opposite(&self) -> Relation {
        Relation {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            pairs: self.pairs.iter().map(|&(i, j)| (j, i)).collect(),
        }
    }

    /// A cofunction transmits distinctions and reflects elements.
    pub fn is_cofunction(&self) -> bool {
        self.classify().is_cofunction()
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.pairs.iter().map(|&p| self.render_pair(p)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

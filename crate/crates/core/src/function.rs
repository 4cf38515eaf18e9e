//! Functions between finite sets.

use std::fmt;

use crate::error::{Error, Result};
use crate::finset::{FinSet, Label};
use crate::partition::Partition;
use crate::relation::Relation;
use crate::subset::Subset;

/// A total single-valued assignment `dom -> cod`.
///
/// `map[i]` is the codomain index of the image of the `i`-th domain
/// element, both in label order, so equal functions compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Function {
    dom: FinSet,
    cod: FinSet,
    map: Vec<usize>,
}

impl Function {
    pub(crate) fn from_indices(dom: FinSet, cod: FinSet, map: Vec<usize>) -> Self {
        debug_assert_eq!(dom.len(), map.len());
        debug_assert!(map.iter().all(|&j| j < cod.len()));
        Function { dom, cod, map }
    }

    /// Validates `map` as an index table.
    pub fn from_index_table(dom: FinSet, cod: FinSet, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.len() || map.iter().any(|&j| j >= cod.len()) {
            return Err(Error::ShapeMismatch(format!(
                "index table of length {} does not describe a map {} -> {}",
                map.len(),
                dom,
                cod
            )));
        }
        Ok(Function { dom, cod, map })
    }

    /// Builds the function whose graph is the given label pairs.
    pub fn from_pairs<I>(dom: FinSet, cod: FinSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Label, Label)>,
    {
        Relation::new(dom, cod, pairs)?.as_function()
    }

    pub fn from_strs(dom: FinSet, cod: FinSet, pairs: &[(&str, &str)]) -> Result<Self> {
        Relation::from_strs(dom, cod, pairs)?.as_function()
    }

    /// Builds `x ↦ rule(x)`, failing if a value is not in `cod`.
    pub fn from_rule<F>(dom: FinSet, cod: FinSet, mut rule: F) -> Result<Self>
    where
        F: FnMut(&Label) -> Label,
    {
        let map = dom
            .iter()
            .map(|x| cod.require(&rule(x)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Function { dom, cod, map })
    }

    pub fn identity(obj: &FinSet) -> Self {
        Function {
            dom: obj.clone(),
            cod: obj.clone(),
            map: (0..obj.len()).collect(),
        }
    }

    /// The constant map onto `value`.
    pub fn constant(dom: &FinSet, cod: &FinSet, value: &Label) -> Result<Self> {
        let j = cod.require(value)?;
        Ok(Function {
            dom: dom.clone(),
            cod: cod.clone(),
            map: vec![j; dom.len()],
        })
    }

    pub fn dom(&self) -> &FinSet {
        &self.dom
    }

    pub fn cod(&self) -> &FinSet {
        &self.cod
    }

    pub fn index_table(&self) -> &[usize] {
        &self.map
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn apply(&self, x: &Label) -> Option<&Label> {
        self.dom.index_of(x).map(|i| self.cod.get(self.map[i]))
    }

    /// Panics if `x` is not in the domain.
    pub fn apply_str(&self, x: &str) -> &Label {
        let i = self
            .dom
            .index_of_str(x)
            .unwrap_or_else(|| panic!("`{x}` is not in {}", self.dom));
        self.cod.get(self.map[i])
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Label, &Label)> + '_ {
        self.dom
            .iter()
            .zip(&self.map)
            .map(|(x, &j)| (x, self.cod.get(j)))
    }

    pub fn graph(&self) -> Relation {
        Relation::from_index_pairs(
            self.dom.clone(),
            self.cod.clone(),
            self.map.iter().copied().enumerate().collect(),
        )
    }

    /// Injective iff the graph transmits distinctions.
    pub fn is_injective(&self) -> bool {
        self.graph().classify().transmits_distinctions
    }

    /// Surjective iff the graph reflects elements.
    pub fn is_surjective(&self) -> bool {
        self.graph().classify().reflects_elements
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// The attained codomain labels.
    pub fn image(&self) -> FinSet {
        let mut hit = vec![false; self.cod.len()];
        for &j in &self.map {
            hit[j] = true;
        }
        FinSet::from_sorted_unique(
            self.cod
                .iter()
                .zip(hit)
                .filter(|&(_l, h)| h)
                .map(|(l, _h)| l.clone())
                .collect(),
        )
    }

    /// The image as a sub-object of the codomain.
    pub fn image_subset(&self) -> Subset {
        Subset::from_indices(self.cod.clone(), self.map.iter().copied())
    }

    /// The partition of the domain into nonempty fibers.
    pub fn coimage(&self) -> Partition {
        Partition::from_block_keys(self.dom.clone(), &self.map)
    }

    /// The fiber over each attained value, paired with that value, in
    /// codomain order.
    pub fn fibers(&self) -> Vec<(usize, Vec<usize>)> {
        let mut out: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut slot = vec![usize::MAX; self.cod.len()];
        let mut order: Vec<usize> = self.map.clone();
        order.sort_unstable();
        order.dedup();
        for (k, &j) in order.iter().enumerate() {
            slot[j] = k;
            out.push((j, Vec::new()));
        }
        for (i, &j) in self.map.iter().enumerate() {
            out[slot[j]].1.push(i);
        }
        out
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &Function) -> Result<Function> {
        compose(self, then)
    }

    /// Replaces the codomain by a superset, keeping the values.
    pub fn widen(&self, cod: &FinSet) -> Result<Function> {
        Function::from_rule(self.dom.clone(), cod.clone(), |x| {
            self.apply(x).expect("domain element").clone()
        })
    }

    /// Canonical rendering: `f: X -> Y { 1->p, 2->p }`.
    pub fn render(&self, name: &str, dom_name: &str, cod_name: &str) -> String {
        format!("{name}: {}", self.render_body(dom_name, cod_name))
    }

    /// `X -> Y { 1->p, 2->p }`, entries sorted by domain label.
    pub fn render_body(&self, dom_name: &str, cod_name: &str) -> String {
        let entries: Vec<String> = self.entries().map(|(x, y)| format!("{x}->{y}")).collect();
        if entries.is_empty() {
            format!("{dom_name} -> {cod_name} {{ }}")
        } else {
            format!("{dom_name} -> {cod_name} {{ {} }}", entries.join(", "))
        }
    }
}

impl fmt::Debug for Function {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_body(&self.dom.to_string(), &self.cod.to_string()))
    }
}

/// `g ∘ f` for `f: X -> Y` and `g: Y -> Z`.
pub fn compose(f: &Function, g: &Function) -> Result<Function> {
    if f.cod != g.dom {
        return Err(Error::CompositionMismatch {
            left_cod: f.cod.joined(),
            right_dom: g.dom.joined(),
        });
    }
    Ok(Function {
        dom: f.dom.clone(),
        cod: g.cod.clone(),
        map: f.map.iter().map(|&j| g.map[j]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::set;

    pub(crate) fn f3() -> Function {
        Function::from_strs(
            set(&["1", "2", "3"]),
            set(&["p", "q"]),
            &[("1", "p"), ("2", "p"), ("3", "q")],
        )
        .unwrap()
    }

    #[test]
    fn injective_surjective_examples() {
        let bij = Function::from_strs(
            set(&["1", "2"]),
            set(&["p", "q"]),
            &[("1", "p"), ("2", "q")],
        )
        .unwrap();
        assert!(bij.is_injective() && bij.is_surjective());

        let c = Function::from_strs(
            set(&["1", "2"]),
            set(&["p", "q"]),
            &[("1", "p"), ("2", "p")],
        )
        .unwrap();
        assert!(!c.is_injective() && !c.is_surjective());

        let e = Function::from_strs(set(&[]), set(&["p"]), &[]).unwrap();
        assert!(e.is_injective());
        assert!(!e.is_surjective());
    }

    #[test]
    fn image_and_coimage() {
        let f = f3();
        assert_eq!(f.image(), set(&["p", "q"]));
        assert_eq!(f.coimage().render_blocks(), "{{1,2},{3}}");

        let id = Function::identity(&set(&["a", "b"]));
        assert_eq!(id.image(), set(&["a", "b"]));
        assert_eq!(id.coimage(), Partition::discrete(&set(&["a", "b"])));

        let e = Function::from_strs(set(&[]), set(&["p"]), &[]).unwrap();
        assert!(e.image().is_empty());
        assert!(e.coimage().is_empty());
    }

    #[test]
    fn composition() {
        let f = f3();
        let h =
            Function::from_strs(set(&["p", "q"]), set(&["u"]), &[("p", "u"), ("q", "u")]).unwrap();
        let hf = compose(&f, &h).unwrap();
        assert!(hf.entries().all(|(_, y)| y.as_str() == "u"));
        assert_eq!(compose(&Function::identity(f.dom()), &f).unwrap(), f);
        assert_eq!(compose(&f, &Function::identity(f.cod())).unwrap(), f);
        assert!(matches!(
            compose(&h, &f),
            Err(Error::CompositionMismatch { .. })
        ));
    }

    #[test]
    fn rendering_sorts_by_domain() {
        assert_eq!(f3().render("f", "X", "Y"), "f: X -> Y { 1->p, 2->p, 3->q }");
        let e = Function::from_strs(set(&[]), set(&["p"]), &[]).unwrap();
        assert_eq!(e.render("e", "0", "Y"), "e: 0 -> Y { }");
    }

    #[test]
    fn fibers_follow_codomain_order() {
        let fib = f3().fibers();
        assert_eq!(fib, vec![(0, vec![0, 1]), (1, vec![2])]);
    }
}

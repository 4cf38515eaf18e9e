//! Limits and colimits of the six standard shapes, their canonical factor
//! maps, and exhaustive verification of their universal properties.

mod construct;
mod ump;

pub use construct::{
    boxtimes_construction, boxtimes_product, coequalizer, coequalizer_factor,
    coequalizer_partition, coproduct, coproduct_factor, epi_mono_factorize, equalizer,
    equalizer_factor, product, product_factor, pullback, pullback_factor, pushout, pushout_factor,
    swapped_product,
};
pub use ump::{
    unique_iso_between_candidates, verify_ump, verify_ump_factored, verify_ump_pinned,
    verify_ump_with, UmpReport, Witness,
};

use crate::error::{Error, Result};
use crate::finset::{FinSet, Label};
use crate::function::{compose, Function};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Product,
    Coproduct,
    Equalizer,
    Coequalizer,
    Pullback,
    Pushout,
}

impl Kind {
    pub fn is_limit(self) -> bool {
        matches!(self, Kind::Product | Kind::Equalizer | Kind::Pullback)
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Product => "product",
            Kind::Coproduct => "coproduct",
            Kind::Equalizer => "equalizer",
            Kind::Coequalizer => "coequalizer",
            Kind::Pullback => "pullback",
            Kind::Pushout => "pushout",
        }
    }

    pub fn from_name(name: &str) -> Option<Kind> {
        [
            Kind::Product,
            Kind::Coproduct,
            Kind::Equalizer,
            Kind::Coequalizer,
            Kind::Pullback,
            Kind::Pushout,
        ]
        .into_iter()
        .find(|k| k.name() == name)
    }
}

/// The data a construction starts from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Diagram {
    /// Two objects, for products and coproducts.
    Pair(FinSet, FinSet),
    /// `f, g : X ⇉ Y`, for equalizers and coequalizers.
    Parallel(Function, Function),
    /// `f : X -> Z <- Y : g`, for pullbacks.
    Cospan(Function, Function),
    /// `f : Z -> X`, `g : Z -> Y`, for pushouts.
    Span(Function, Function),
}

impl Diagram {
    /// The objects the legs connect the apex to, in leg order.
    pub fn leg_objects(&self, kind: Kind) -> Vec<FinSet> {
        match (self, kind) {
            (Diagram::Pair(x, y), _) => vec![x.clone(), y.clone()],
            (Diagram::Parallel(f, _), Kind::Equalizer) => vec![f.dom().clone()],
            (Diagram::Parallel(f, _), _) => vec![f.cod().clone()],
            (Diagram::Cospan(f, g), _) => vec![f.dom().clone(), g.dom().clone()],
            (Diagram::Span(f, g), _) => vec![f.cod().clone(), g.cod().clone()],
        }
    }

    fn fits(&self, kind: Kind) -> bool {
        matches!(
            (self, kind),
            (Diagram::Pair(..), Kind::Product | Kind::Coproduct)
                | (Diagram::Parallel(..), Kind::Equalizer | Kind::Coequalizer)
                | (Diagram::Cospan(..), Kind::Pullback)
                | (Diagram::Span(..), Kind::Pushout)
        )
    }

    /// For a cone (limits) or cocone (colimits) over this diagram, the first
    /// element where the required square fails, as `(at, left, right)`.
    pub fn cone_violation(&self, kind: Kind, cone: &[Function]) -> Option<(Label, Label, Label)> {
        let (left, right) = match (self, kind) {
            (Diagram::Pair(..), _) => return None,
            (Diagram::Parallel(f, g), Kind::Equalizer) => {
                (compose(&cone[0], f).ok()?, compose(&cone[0], g).ok()?)
            }
            (Diagram::Parallel(f, g), _) => {
                (compose(f, &cone[0]).ok()?, compose(g, &cone[0]).ok()?)
            }
            (Diagram::Cospan(f, g), _) => (compose(&cone[0], f).ok()?, compose(&cone[1], g).ok()?),
            (Diagram::Span(f, g), _) => (compose(f, &cone[0]).ok()?, compose(g, &cone[1]).ok()?),
        };
        let found = left
            .entries()
            .zip(right.entries())
            .find(|((_, a), (_, b))| a != b)
            .map(|((x, a), (_, b))| (x.clone(), a.clone(), b.clone()));
        found
    }
}

/// A named leg of a construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leg {
    pub name: String,
    pub map: Function,
}

/// An apex together with its canonical legs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult {
    kind: Kind,
    diagram: Diagram,
    apex: FinSet,
    legs: Vec<Leg>,
}

impl ConstructionResult {
    /// Checks that every leg runs between the apex and the matching diagram
    /// object in the direction the kind dictates.
    pub fn new(kind: Kind, diagram: Diagram, apex: FinSet, legs: Vec<Leg>) -> Result<Self> {
        if !diagram.fits(kind) {
            return Err(Error::ShapeMismatch(format!(
                "diagram does not fit a {}",
                kind.name()
            )));
        }
        let objects = diagram.leg_objects(kind);
        if objects.len() != legs.len() {
            return Err(Error::ShapeMismatch(format!(
                "a {} has {} legs, got {}",
                kind.name(),
                objects.len(),
                legs.len()
            )));
        }
        for (leg, obj) in legs.iter().zip(&objects) {
            let ok = if kind.is_limit() {
                leg.map.dom() == &apex && leg.map.cod() == obj
            } else {
                leg.map.dom() == obj && leg.map.cod() == &apex
            };
            if !ok {
                return Err(Error::ShapeMismatch(format!(
                    "leg {} does not connect the apex to {}",
                    leg.name, obj
                )));
            }
        }
        Ok(ConstructionResult {
            kind,
            diagram,
            apex,
            legs,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn apex(&self) -> &FinSet {
        &self.apex
    }

    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    pub fn leg(&self, name: &str) -> Option<&Function> {
        self.legs.iter().find(|l| l.name == name).map(|l| &l.map)
    }

    pub fn leg_maps(&self) -> Vec<Function> {
        self.legs.iter().map(|l| l.map.clone()).collect()
    }

    /// One line for the apex, then one per leg. `object_names` name the
    /// diagram objects in leg order.
    pub fn render(&self, apex_name: &str, object_names: &[&str]) -> Vec<String> {
        let mut lines = vec![format!("apex {apex_name} = {}", self.apex)];
        for (leg, obj) in self.legs.iter().zip(object_names) {
            let (d, c) = if self.kind.is_limit() {
                (apex_name, *obj)
            } else {
                (*obj, apex_name)
            };
            lines.push(leg.map.render(&leg.name, d, c));
        }
        lines
    }
}

#[cfg(test)]
mod tests;

//! Pointed finite sets and basepoint-preserving maps.
//!
//! The one-point object `{•}` is both initial and terminal here, so every
//! pair of pointed sets has a zero arrow `X -> 1 -> Y`. Coproducts are wedges
//! (the basepoints glued together) and products are plain products pointed
//! at the pair of basepoints.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::{FunctionSpace, Strategy};
use crate::finset::{FinSet, Label};
use crate::function::{compose, Function};
use crate::partition::terminal_map;
use crate::tagged::pair;
use crate::universal::{
    product, product_factor, pushout, pushout_factor, verify_ump_pinned, ConstructionResult,
    UmpReport,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedObj {
    carrier: FinSet,
    basepoint: Label,
}

pub fn make_pointed(carrier: &FinSet, basepoint: &Label) -> Result<PointedObj> {
    if carrier.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    if !carrier.contains(basepoint) {
        return Err(Error::BasepointNotInCarrier(basepoint.to_string()));
    }
    Ok(PointedObj {
        carrier: carrier.clone(),
        basepoint: basepoint.clone(),
    })
}

impl PointedObj {
    /// The null object `({•}, •)`.
    pub fn null() -> Self {
        PointedObj {
            carrier: FinSet::terminal(),
            basepoint: Label::point(),
        }
    }

    pub fn carrier(&self) -> &FinSet {
        &self.carrier
    }

    pub fn basepoint(&self) -> &Label {
        &self.basepoint
    }

    pub fn basepoint_index(&self) -> usize {
        self.carrier
            .index_of(&self.basepoint)
            .expect("basepoint in carrier")
    }

    /// The designating map `1 -> X`, `• ↦ x0`.
    pub fn basepoint_map(&self) -> Function {
        Function::constant(&FinSet::terminal(), &self.carrier, &self.basepoint)
            .expect("basepoint in carrier")
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for PointedObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} base {}", self.carrier, self.basepoint)
    }
}

pub fn is_pointed_map(f: &Function, dom: &PointedObj, cod: &PointedObj) -> bool {
    f.dom() == dom.carrier()
        && f.cod() == cod.carrier()
        && f.apply_index(dom.basepoint_index()) == cod.basepoint_index()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedMap {
    dom: PointedObj,
    cod: PointedObj,
    underlying: Function,
}

impl PointedMap {
    pub fn new(underlying: Function, dom: &PointedObj, cod: &PointedObj) -> Result<Self> {
        if underlying.dom() != dom.carrier() {
            return Err(Error::DomainMismatch);
        }
        if underlying.cod() != cod.carrier() {
            return Err(Error::CodomainMismatch);
        }
        if !is_pointed_map(&underlying, dom, cod) {
            return Err(Error::BasepointNotPreserved {
                from: dom.basepoint().to_string(),
                to: underlying
                    .cod()
                    .get(underlying.apply_index(dom.basepoint_index()))
                    .to_string(),
                expected: cod.basepoint().to_string(),
            });
        }
        Ok(PointedMap {
            dom: dom.clone(),
            cod: cod.clone(),
            underlying,
        })
    }

    pub fn identity(x: &PointedObj) -> Self {
        PointedMap {
            dom: x.clone(),
            cod: x.clone(),
            underlying: Function::identity(x.carrier()),
        }
    }

    pub fn dom(&self) -> &PointedObj {
        &self.dom
    }

    pub fn cod(&self) -> &PointedObj {
        &self.cod
    }

    pub fn underlying(&self) -> &Function {
        &self.underlying
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &PointedMap) -> Result<PointedMap> {
        if self.cod != then.dom {
            return Err(Error::CompositionMismatch {
                left_cod: self.cod.to_string(),
                right_dom: then.dom.to_string(),
            });
        }
        Ok(PointedMap {
            dom: self.dom.clone(),
            cod: then.cod.clone(),
            underlying: compose(&self.underlying, &then.underlying)?,
        })
    }

    /// True iff every element goes to the codomain's basepoint.
    pub fn is_zero(&self) -> bool {
        let b = self.cod.basepoint_index();
        self.underlying.index_table().iter().all(|&y| y == b)
    }
}

/// All pointed maps `dom -> cod`, as a pinned function space.
pub fn pointed_maps(dom: &PointedObj, cod: &PointedObj) -> FunctionSpace {
    FunctionSpace::pinned(
        dom.carrier(),
        cod.carrier(),
        &[(dom.basepoint_index(), cod.basepoint_index())],
    )
}

/// `X -> 1 -> Y`.
pub fn zero_arrow(x: &PointedObj, y: &PointedObj) -> PointedMap {
    let to_null = terminal_map(x.carrier());
    let underlying = compose(&to_null, &y.basepoint_map()).expect("through the point");
    PointedMap {
        dom: x.clone(),
        cod: y.clone(),
        underlying,
    }
}

/// A plain construction whose apex carries a basepoint making every leg a
/// pointed map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedConstruction {
    construction: ConstructionResult,
    apex: PointedObj,
}

impl PointedConstruction {
    pub fn construction(&self) -> &ConstructionResult {
        &self.construction
    }

    pub fn apex(&self) -> &PointedObj {
        &self.apex
    }

    /// The legs as pointed maps between the apex and the given objects.
    pub fn pointed_legs(&self, objects: &[&PointedObj]) -> Result<Vec<PointedMap>> {
        let limit = self.construction.kind().is_limit();
        self.construction
            .legs()
            .iter()
            .zip(objects)
            .map(|(leg, obj)| {
                if limit {
                    PointedMap::new(leg.map.clone(), &self.apex, obj)
                } else {
                    PointedMap::new(leg.map.clone(), obj, &self.apex)
                }
            })
            .collect()
    }

    pub fn render(&self, apex_name: &str, object_names: &[&str]) -> Vec<String> {
        let mut lines = self.construction.render(apex_name, object_names);
        lines.insert(1, format!("base {apex_name} = {}", self.apex.basepoint()));
        lines
    }
}

/// `X ⊔* Y`: the pushout of `1 -> X` and `1 -> Y`, pointed at the glued block.
pub fn wedge_coproduct(x: &PointedObj, y: &PointedObj) -> PointedConstruction {
    let po = pushout(&x.basepoint_map(), &y.basepoint_map()).expect("common domain");
    let can_x = po.leg("can_X").expect("leg");
    let base = po
        .apex()
        .get(can_x.apply_index(x.basepoint_index()))
        .clone();
    let apex = make_pointed(po.apex(), &base).expect("apex is nonempty");
    PointedConstruction {
        construction: po,
        apex,
    }
}

/// `X ×* Y`: the product pointed at `(x0, y0)`.
pub fn pointed_product(x: &PointedObj, y: &PointedObj) -> PointedConstruction {
    let prod = product(x.carrier(), y.carrier());
    let base = pair(x.basepoint(), y.basepoint());
    let apex = make_pointed(prod.apex(), &base).expect("pair of basepoints");
    PointedConstruction {
        construction: prod,
        apex,
    }
}

/// `X ⊔* Y -> X ×* Y`, induced through the wedge by `⟨1_X, 0⟩` and `⟨0, 1_Y⟩`.
pub fn canonical_wedge_to_product(x: &PointedObj, y: &PointedObj) -> PointedMap {
    let wedge = wedge_coproduct(x, y);
    let prod = pointed_product(x, y);
    let into_x = product_factor(
        &Function::identity(x.carrier()),
        zero_arrow(x, y).underlying(),
    )
    .expect("common domain");
    let into_y = product_factor(
        zero_arrow(y, x).underlying(),
        &Function::identity(y.carrier()),
    )
    .expect("common domain");
    let m = pushout_factor(&into_x, &into_y, &x.basepoint_map(), &y.basepoint_map())
        .expect("both legs preserve basepoints");
    PointedMap::new(m, wedge.apex(), prod.apex()).expect("mediator is pointed")
}

/// The universal property counted over pointed candidates only.
pub fn verify_pointed_ump(
    c: &PointedConstruction,
    cone: &[PointedMap],
    budget: u128,
    strategy: Strategy,
) -> Result<UmpReport> {
    let limit = c.construction.kind().is_limit();
    let vertex = match cone.first() {
        Some(m) if limit => m.dom(),
        Some(m) => m.cod(),
        None => return Err(Error::ShapeMismatch("empty cone".into())),
    };
    for m in cone {
        let v = if limit { m.dom() } else { m.cod() };
        if v != vertex {
            return Err(Error::ShapeMismatch(format!(
                "cone maps disagree on the pointed vertex {vertex}"
            )));
        }
    }
    let pin = if limit {
        (vertex.basepoint_index(), c.apex.basepoint_index())
    } else {
        (c.apex.basepoint_index(), vertex.basepoint_index())
    };
    let plain: Vec<Function> = cone.iter().map(|m| m.underlying().clone()).collect();
    verify_ump_pinned(&c.construction, &plain, budget, strategy, &[pin])
}

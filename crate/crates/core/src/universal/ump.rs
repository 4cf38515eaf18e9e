//! Exhaustive verification of universal mapping properties.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exec::{self, FunctionSpace, Strategy};
use crate::finset::Label;
use crate::function::{compose, Function};

use super::{ConstructionResult, Kind};

/// How many surplus mediators a report keeps.
const MAX_EXTRA_MEDIATORS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The supplied cone does not commute over the diagram.
    ConeCondition {
        at: Label,
        left: Label,
        right: Label,
    },
    /// No candidate out of this many makes the triangles commute.
    NoCommutingCandidate { candidates: u64 },
    /// A commuting candidate beyond the first; uniqueness fails.
    ExtraMediator(Function),
}

/// Outcome of enumerating every candidate mediating map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UmpReport {
    /// Whether the supplied cone (or cocone) itself commutes.
    pub commutes: bool,
    /// Exact number of candidates making every triangle commute.
    pub mediating_count: u64,
    /// The mediator, when it is unique.
    pub mediator: Option<Function>,
    pub witnesses: Vec<Witness>,
}

impl UmpReport {
    pub fn is_unique(&self) -> bool {
        self.mediating_count == 1
    }

    /// `{ commutes: true, mediating_count: 1, mediator: m: Z -> P { ... } }`
    pub fn render(&self, mediator_name: &str, dom_name: &str, cod_name: &str) -> String {
        let mut out = format!(
            "{{ commutes: {}, mediating_count: {}, mediator: ",
            self.commutes, self.mediating_count
        );
        match &self.mediator {
            Some(m) => out.push_str(&m.render(mediator_name, dom_name, cod_name)),
            None => out.push_str("none"),
        }
        if !self.witnesses.is_empty() {
            let ws: Vec<String> = self
                .witnesses
                .iter()
                .map(|w| render_witness(w, mediator_name, dom_name, cod_name))
                .collect();
            let _ = write!(out, ", witnesses: [{}]", ws.join("; "));
        }
        out.push_str(" }");
        out
    }
}

pub(crate) fn render_witness(w: &Witness, name: &str, dom: &str, cod: &str) -> String {
    match w {
        Witness::ConeCondition { at, left, right } => {
            format!("cone fails at {at}: {left} != {right}")
        }
        Witness::NoCommutingCandidate { candidates } => {
            format!("none of {candidates} candidates commutes")
        }
        Witness::ExtraMediator(m) => m.render(name, dom, cod),
    }
}

fn check_cone_shape(c: &ConstructionResult, cone: &[Function]) -> Result<()> {
    let objects = c.diagram().leg_objects(c.kind());
    if cone.len() != objects.len() {
        return Err(Error::ShapeMismatch(format!(
            "a {} cone has {} maps, got {}",
            c.kind().name(),
            objects.len(),
            cone.len()
        )));
    }
    let limit = c.kind().is_limit();
    let vertex = if limit { cone[0].dom() } else { cone[0].cod() };
    for (m, obj) in cone.iter().zip(&objects) {
        let (end, v) = if limit {
            (m.cod(), m.dom())
        } else {
            (m.dom(), m.cod())
        };
        if end != obj || v != vertex {
            return Err(Error::ShapeMismatch(format!(
                "cone map {m:?} does not fit over {obj}"
            )));
        }
    }
    Ok(())
}

#[derive(Default)]
struct Tally {
    count: u64,
    first: Vec<u64>,
}

impl Tally {
    fn push(mut self, idx: u64) -> Self {
        self.count += 1;
        if self.first.len() <= MAX_EXTRA_MEDIATORS {
            self.first.push(idx);
        }
        self
    }

    fn merge(mut self, other: Tally) -> Self {
        self.count += other.count;
        self.first.extend(other.first);
        self.first.sort_unstable();
        self.first.truncate(MAX_EXTRA_MEDIATORS + 1);
        self
    }
}

/// Counts every map between the mediating endpoints that makes all
/// triangles commute.
pub fn verify_ump(c: &ConstructionResult, cone: &[Function], budget: u128) -> Result<UmpReport> {
    verify_ump_pinned(c, cone, budget, Strategy::Auto, &[])
}

pub fn verify_ump_with(
    c: &ConstructionResult,
    cone: &[Function],
    budget: u128,
    strategy: Strategy,
) -> Result<UmpReport> {
    verify_ump_pinned(c, cone, budget, strategy, &[])
}

/// As `verify_ump`, restricted to candidates taking the pinned
/// `(dom index, cod index)` values.
pub fn verify_ump_pinned(
    c: &ConstructionResult,
    cone: &[Function],
    budget: u128,
    strategy: Strategy,
    pins: &[(usize, usize)],
) -> Result<UmpReport> {
    check_cone_shape(c, cone)?;
    let limit = c.kind().is_limit();
    let space = if limit {
        FunctionSpace::pinned(cone[0].dom(), c.apex(), pins)
    } else {
        FunctionSpace::pinned(c.apex(), cone[0].cod(), pins)
    };
    let n = space.check_budget(budget)?;
    let legs: Vec<&[usize]> = c.legs().iter().map(|l| l.map.index_table()).collect();
    let targets: Vec<&[usize]> = cone.iter().map(Function::index_table).collect();

    let tally = exec::map_reduce(
        n,
        strategy,
        Tally::default,
        |acc, idx| {
            let mut m = Vec::new();
            space.decode_into(idx, &mut m);
            let ok = legs.iter().zip(&targets).all(|(leg, target)| {
                if limit {
                    // leg ∘ m = cone map
                    m.iter().zip(target.iter()).all(|(&a, &t)| leg[a] == t)
                } else {
                    // m ∘ leg = cocone map
                    leg.iter().zip(target.iter()).all(|(&a, &t)| m[a] == t)
                }
            });
            if ok {
                acc.push(idx)
            } else {
                acc
            }
        },
        Tally::merge,
    );

    let first: Vec<Function> = tally.first.iter().map(|&i| space.function(i)).collect();
    Ok(assemble(c, cone, u128::from(n), tally.count, first))
}

fn assemble(
    c: &ConstructionResult,
    cone: &[Function],
    candidates: u128,
    count: u64,
    mut first: Vec<Function>,
) -> UmpReport {
    let violation = c.diagram().cone_violation(c.kind(), cone);
    let mut witnesses = Vec::new();
    let mediator = if count == 1 { first.pop() } else { None };
    if count == 0 {
        match &violation {
            Some((at, left, right)) => witnesses.push(Witness::ConeCondition {
                at: at.clone(),
                left: left.clone(),
                right: right.clone(),
            }),
            None => witnesses.push(Witness::NoCommutingCandidate {
                candidates: u64::try_from(candidates).unwrap_or(u64::MAX),
            }),
        }
    } else if count > 1 {
        witnesses.extend(first.into_iter().map(Witness::ExtraMediator));
    }
    UmpReport {
        commutes: violation.is_none(),
        mediating_count: count,
        mediator,
        witnesses,
    }
}

/// The same count as `verify_ump`, without walking the whole candidate space.
///
/// Every triangle condition constrains one point of the candidate at a time:
/// for a limit, `leg ∘ m = cone` fixes which apex points `m(z)` may be; for a
/// colimit, `m ∘ leg = cocone` fixes `m(w)` for each `w` hit by a leg. The
/// commuting candidates are therefore exactly the product of the admissible
/// values at each point, and they are listed in the same order as the
/// exhaustive search would find them. No budget is needed.
pub fn verify_ump_factored(
    c: &ConstructionResult,
    cone: &[Function],
    pins: &[(usize, usize)],
) -> Result<UmpReport> {
    check_cone_shape(c, cone)?;
    let limit = c.kind().is_limit();
    let space = if limit {
        FunctionSpace::pinned(cone[0].dom(), c.apex(), pins)
    } else {
        FunctionSpace::pinned(c.apex(), cone[0].cod(), pins)
    };
    let (dom, cod) = (space.dom().len(), space.cod().len());
    let mut admissible: Vec<Vec<usize>> = vec![(0..cod).collect(); dom];
    for &(i, j) in pins {
        admissible[i].retain(|&v| v == j);
    }
    for (leg, target) in c.legs().iter().zip(cone) {
        let (leg, target) = (leg.map.index_table(), target.index_table());
        if limit {
            for (z, allowed) in admissible.iter_mut().enumerate() {
                allowed.retain(|&w| leg[w] == target[z]);
            }
        } else {
            for (a, &w) in leg.iter().enumerate() {
                admissible[w].retain(|&v| v == target[a]);
            }
        }
    }
    let count = admissible
        .iter()
        .fold(1u64, |acc, a| acc.saturating_mul(a.len() as u64));

    // odometer over the admissible values, first position least significant
    let mut first = Vec::new();
    if count > 0 {
        let mut digits = vec![0usize; dom];
        while first.len() <= MAX_EXTRA_MEDIATORS {
            let map: Vec<usize> = digits.iter().zip(&admissible).map(|(&d, a)| a[d]).collect();
            first.push(Function::from_index_table(
                space.dom().clone(),
                space.cod().clone(),
                map,
            )?);
            let Some(p) = (0..dom).find(|&p| digits[p] + 1 < admissible[p].len()) else {
                break;
            };
            digits[p] += 1;
            digits[..p].fill(0);
        }
    }
    Ok(assemble(c, cone, space.count(), count, first))
}

/// The comparison map between two candidates for the same limit or colimit,
/// obtained from the universal property of the other candidate. Both
/// directions must be unique and mutually inverse.
pub fn unique_iso_between_candidates(
    a: &ConstructionResult,
    b: &ConstructionResult,
    kind: Kind,
) -> Result<Function> {
    if a.kind() != kind || b.kind() != kind {
        return Err(Error::NotBothUniversal(format!(
            "both candidates must be {} constructions",
            kind.name()
        )));
    }
    if a.diagram() != b.diagram() {
        return Err(Error::NotBothUniversal(
            "candidates over different diagrams".into(),
        ));
    }
    let mediate = |target: &ConstructionResult, source: &ConstructionResult| -> Result<Function> {
        let report = verify_ump_factored(target, &source.leg_maps(), &[])?;
        report.mediator.ok_or_else(|| {
            Error::NotBothUniversal(format!(
                "{} mediating maps instead of exactly one",
                report.mediating_count
            ))
        })
    };
    // a limit mediates into itself, a colimit out of itself
    let (forward, backward) = if kind.is_limit() {
        (mediate(b, a)?, mediate(a, b)?)
    } else {
        (mediate(a, b)?, mediate(b, a)?)
    };
    let round_a = compose(&forward, &backward)?;
    let round_b = compose(&backward, &forward)?;
    if !forward.is_bijective()
        || round_a != Function::identity(a.apex())
        || round_b != Function::identity(b.apex())
    {
        return Err(Error::NotBothUniversal(
            "comparison maps are not mutually inverse".into(),
        ));
    }
    Ok(forward)
}

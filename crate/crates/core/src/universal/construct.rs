//! The construction recipes. Every leg and factor map is a composite of
//! refinement-induced surjections and inclusion-induced injections.

use crate::error::{Error, Result};
use crate::finset::{FinSet, Label};
use crate::function::{compose, Function};
use crate::partition::{self, canonical_surjection, quotient_map, Partition};
use crate::subset::{canonical_injection, inclusion, Subset};
use crate::tagged::{self, Tag, TaggedLabel};
use crate::unionfind::UnionFind;

use super::{ConstructionResult, Diagram, Kind, Leg};

fn leg(name: &str, map: Function) -> Leg {
    Leg {
        name: name.to_string(),
        map,
    }
}

/// Given `s : D -> quotient(p)` induced by a refinement, names each block of
/// `p` by a value in `target` and includes the attained values into `target`.
///
/// The block naming is the identification of a quotient block with the value
/// it stands for; it need not be injective (a coproduct sends blocks from both
/// summands to the same value).
fn name_blocks_then_include<F>(
    s: Function,
    p: &Partition,
    target: &FinSet,
    value_of_block: F,
) -> Result<Function>
where
    F: Fn(&[usize]) -> Label,
{
    let blocks = p.blocks();
    let quotient = p.quotient();
    debug_assert_eq!(s.cod(), &quotient);
    let values: Vec<(Label, Label)> = blocks
        .iter()
        .enumerate()
        .map(|(b, members)| (p.block_name(b), value_of_block(members)))
        .collect();
    let attained = FinSet::from_labels_dedup(values.iter().map(|(_, v)| v.clone()).collect());
    let name = Function::from_rule(quotient, attained.clone(), |block| {
        values
            .iter()
            .find(|(n, _)| n == block)
            .map(|(_, v)| v.clone())
            .expect("every block has a value")
    })?;
    let include = inclusion(&attained, target)?;
    compose(&compose(&s, &name)?, &include)
}

/// `f = inj ∘ surj`: the surjection `X -> f(X)` induced by `f⁻¹ ≾ 1_X` and
/// the injection `f(X) -> Y` induced by `f(X) ⊆ Y`.
pub fn epi_mono_factorize(f: &Function) -> (Function, Function) {
    let coimage = f.coimage();
    let image = f.image();
    let surj = name_blocks_then_include(quotient_map(&coimage), &coimage, &image, |b| {
        f.cod().get(f.apply_index(b[0])).clone()
    })
    .expect("fibers name image points");
    let inj = canonical_injection(&f.image_subset(), &Subset::full(f.cod()))
        .expect("the image is a subset of the codomain");
    (surj, inj)
}

/// `x ↦ tag.x` into the disjoint union, via the tagged copy of `x`.
fn tagging_injection(x: &FinSet, which: Tag, apex: &FinSet) -> Result<Function> {
    let copy = FinSet::from_sorted_unique(x.iter().map(|l| tagged::tag(which, l)).collect());
    let to_copy = Function::from_rule(x.clone(), copy.clone(), |l| tagged::tag(which, l))?;
    compose(&to_copy, &inclusion(&copy, apex)?)
}

/// `X ⊔ Y` with the tagging injections `i_X`, `i_Y`.
pub fn coproduct(x: &FinSet, y: &FinSet) -> ConstructionResult {
    let apex = tagged::disjoint_union(x, y);
    let ix = tagging_injection(x, Tag::L, &apex).expect("tagged copy");
    let iy = tagging_injection(y, Tag::R, &apex).expect("tagged copy");
    ConstructionResult::new(
        Kind::Coproduct,
        Diagram::Pair(x.clone(), y.clone()),
        apex,
        vec![leg("i_X", ix), leg("i_Y", iy)],
    )
    .expect("coproduct legs fit")
}

/// `f ⊔ g : X ⊔ Y -> Z`. Each element lies in a block of `f⁻¹ ⊔ g⁻¹`; the
/// refinement by the discrete partition sends it to the value of that block,
/// onto `f(X) ∪ g(Y)`, which is then included into `Z`.
pub fn coproduct_factor(f: &Function, g: &Function) -> Result<Function> {
    if f.cod() != g.cod() {
        return Err(Error::CodomainMismatch);
    }
    let p = partition::disjoint_union_partition(&f.coimage(), &g.coimage());
    let universe = p.universe().clone();
    name_blocks_then_include(quotient_map(&p), &p, f.cod(), |b| {
        let w = TaggedLabel::parse(universe.get(b[0])).expect("tagged element");
        match w.tag {
            Tag::L => f.apply(&w.base),
            Tag::R => g.apply(&w.base),
        }
        .expect("summand element")
        .clone()
    })
}

/// Legs of a product-shaped apex: each leg sends an element to the value
/// naming its block in the partition `key` induces.
fn projection(apex: &FinSet, target: &FinSet, key: impl Fn(&Label) -> Label) -> Result<Function> {
    let keys: Vec<Label> = apex.iter().map(&key).collect();
    let p = Partition::from_block_keys(apex.clone(), &keys);
    name_blocks_then_include(quotient_map(&p), &p, target, |b| keys[b[0]].clone())
}

fn pair_components(apex: &FinSet, x: &FinSet, y: &FinSet) -> Vec<(Label, Label)> {
    // Pair labels are ambiguous to split textually, so recompute them.
    let mut out = Vec::with_capacity(apex.len());
    for a in x {
        for b in y {
            out.push((tagged::pair(a, b), (a.clone(), b.clone())));
        }
    }
    out.sort();
    debug_assert!(out.iter().map(|(l, _)| l).eq(apex.iter()));
    out.into_iter().map(|(_, c)| c).collect()
}

/// `X × Y`. The projections are induced by `π_X, π_Y ≾ 1_{X×Y}`.
pub fn product(x: &FinSet, y: &FinSet) -> ConstructionResult {
    let apex = tagged::cartesian(x, y);
    let comps = pair_components(&apex, x, y);
    let lookup = |l: &Label| &comps[apex.index_of(l).expect("pair")];
    let px = projection(&apex, x, |l| lookup(l).0.clone()).expect("projection");
    let py = projection(&apex, y, |l| lookup(l).1.clone()).expect("projection");
    ConstructionResult::new(
        Kind::Product,
        Diagram::Pair(x.clone(), y.clone()),
        apex,
        vec![leg("p_X", px), leg("p_Y", py)],
    )
    .expect("product legs fit")
}

/// The unordered-pair product `{ {L.x, R.y} }` and its bijection onto `X × Y`.
pub fn boxtimes_product(x: &FinSet, y: &FinSet) -> (FinSet, Function) {
    let c = boxtimes_construction(x, y);
    let iso = unique_pairing(&c, x, y);
    (c.apex().clone(), iso)
}

fn boxtimes_label(a: &Label, b: &Label) -> Label {
    Label::derived(format!(
        "{{{},{}}}",
        tagged::tag(Tag::L, a),
        tagged::tag(Tag::R, b)
    ))
}

fn unique_pairing(c: &ConstructionResult, x: &FinSet, y: &FinSet) -> Function {
    let prod = tagged::cartesian(x, y);
    let px = c.leg("p_X").expect("leg");
    let py = c.leg("p_Y").expect("leg");
    Function::from_rule(c.apex().clone(), prod, |w| {
        tagged::pair(
            px.apply(w).expect("apex element"),
            py.apply(w).expect("apex element"),
        )
    })
    .expect("pairs lie in the product")
}

/// `X ⊠ Y` as a product candidate, with projections `{L.x,R.y} ↦ x, y`.
pub fn boxtimes_construction(x: &FinSet, y: &FinSet) -> ConstructionResult {
    let mut elems = Vec::new();
    for a in x {
        for b in y {
            elems.push((boxtimes_label(a, b), (a.clone(), b.clone())));
        }
    }
    elems.sort();
    let apex = FinSet::from_sorted_unique(elems.iter().map(|(l, _)| l.clone()).collect());
    let comp = |l: &Label| &elems[apex.index_of(l).expect("element")].1;
    let px = projection(&apex, x, |l| comp(l).0.clone()).expect("projection");
    let py = projection(&apex, y, |l| comp(l).1.clone()).expect("projection");
    ConstructionResult::new(
        Kind::Product,
        Diagram::Pair(x.clone(), y.clone()),
        apex,
        vec![leg("p_X", px), leg("p_Y", py)],
    )
    .expect("boxtimes legs fit")
}

/// `Y × X` presented as a product of `X` and `Y` (legs reordered).
pub fn swapped_product(x: &FinSet, y: &FinSet) -> ConstructionResult {
    let yx = product(y, x);
    let px = yx.leg("p_Y").expect("leg").clone();
    let py = yx.leg("p_X").expect("leg").clone();
    ConstructionResult::new(
        Kind::Product,
        Diagram::Pair(x.clone(), y.clone()),
        yx.apex().clone(),
        vec![leg("p_X", px), leg("p_Y", py)],
    )
    .expect("swapped legs fit")
}

/// `[f, g] : Z -> X × Y`. Each `z` lies in one block `f⁻¹(x) ∩ g⁻¹(y)` of
/// the join `f⁻¹ ∨ g⁻¹`; the refinement by `1_Z` sends it to `(x, y)`, and the
/// attained pairs are included into `X × Y`.
pub fn product_factor(f: &Function, g: &Function) -> Result<Function> {
    if f.dom() != g.dom() {
        return Err(Error::DomainMismatch);
    }
    let j = partition::join(&f.coimage(), &g.coimage())?;
    let target = tagged::cartesian(f.cod(), g.cod());
    name_blocks_then_include(quotient_map(&j), &j, &target, |b| {
        tagged::pair(
            f.cod().get(f.apply_index(b[0])),
            g.cod().get(g.apply_index(b[0])),
        )
    })
}

fn parallel(f: &Function, g: &Function) -> Result<()> {
    if f.dom() == g.dom() && f.cod() == g.cod() {
        Ok(())
    } else {
        Err(Error::NotParallel)
    }
}

fn equalizing_subset(f: &Function, g: &Function) -> Subset {
    Subset::from_indices(
        f.dom().clone(),
        (0..f.dom().len()).filter(|&i| f.apply_index(i) == g.apply_index(i)),
    )
}

/// `E = {x : f(x) = g(x)}` with the injection induced by `E ⊆ X`.
pub fn equalizer(f: &Function, g: &Function) -> Result<ConstructionResult> {
    parallel(f, g)?;
    let e = equalizing_subset(f, g);
    let can = canonical_injection(&e, &Subset::full(f.dom()))?;
    ConstructionResult::new(
        Kind::Equalizer,
        Diagram::Parallel(f.clone(), g.clone()),
        e.as_object(),
        vec![leg("can", can)],
    )
}

fn check_cone(kind: Kind, diagram: &Diagram, cone: &[Function]) -> Result<()> {
    match diagram.cone_violation(kind, cone) {
        Some((at, left, right)) => Err(Error::ConeConditionViolated {
            at: at.to_string(),
            left: left.to_string(),
            right: right.to_string(),
        }),
        None => Ok(()),
    }
}

/// `h_* : Z -> E`: the epi part of `h` onto `h(Z)`, then `h(Z) ⊆ E`.
pub fn equalizer_factor(h: &Function, f: &Function, g: &Function) -> Result<Function> {
    parallel(f, g)?;
    if h.cod() != f.dom() {
        return Err(Error::CodomainMismatch);
    }
    let diagram = Diagram::Parallel(f.clone(), g.clone());
    check_cone(Kind::Equalizer, &diagram, std::slice::from_ref(h))?;
    let (surj, _) = epi_mono_factorize(h);
    let e = equalizing_subset(f, g);
    let image = Subset::of_object(f.dom().clone(), &h.image())?;
    let into_e = canonical_injection(&image, &e)?;
    compose(&surj, &into_e)
}

/// The least equivalence on `Y` identifying `f(x)` with `g(x)`, by union-find.
pub fn coequalizer_partition(f: &Function, g: &Function) -> Result<Partition> {
    parallel(f, g)?;
    let mut uf = UnionFind::new(f.cod().len());
    for i in 0..f.dom().len() {
        uf.union(f.apply_index(i), g.apply_index(i));
    }
    Ok(Partition::from_block_keys(f.cod().clone(), &uf.roots()))
}

/// `Y/∼` with the surjection induced by `∼ ≾ 1_Y`.
pub fn coequalizer(f: &Function, g: &Function) -> Result<ConstructionResult> {
    let sim = coequalizer_partition(f, g)?;
    let can = quotient_map(&sim);
    ConstructionResult::new(
        Kind::Coequalizer,
        Diagram::Parallel(f.clone(), g.clone()),
        sim.quotient(),
        vec![leg("can", can)],
    )
}

/// `h^* : Y/∼ -> Z`. Since `h⁻¹ ≾ ∼`, each `∼`-block lies in one fiber
/// `h⁻¹(z)`; the block goes to `z` in `h(Y)`, which is included into `Z`.
pub fn coequalizer_factor(h: &Function, f: &Function, g: &Function) -> Result<Function> {
    parallel(f, g)?;
    if h.dom() != f.cod() {
        return Err(Error::DomainMismatch);
    }
    let diagram = Diagram::Parallel(f.clone(), g.clone());
    check_cone(Kind::Coequalizer, &diagram, std::slice::from_ref(h))?;
    let sim = coequalizer_partition(f, g)?;
    let fibers = h.coimage();
    let s = canonical_surjection(&sim, &fibers)?;
    name_blocks_then_include(s, &fibers, h.cod(), |b| {
        h.cod().get(h.apply_index(b[0])).clone()
    })
}

/// The coequalizer of `i_X∘f` and `i_Y∘g` on `X ⊔ Y`.
pub fn pushout(f: &Function, g: &Function) -> Result<ConstructionResult> {
    if f.dom() != g.dom() {
        return Err(Error::DomainMismatch);
    }
    let sum = coproduct(f.cod(), g.cod());
    let ix = sum.leg("i_X").expect("leg");
    let iy = sum.leg("i_Y").expect("leg");
    let coeq = coequalizer(&compose(f, ix)?, &compose(g, iy)?)?;
    let can = coeq.leg("can").expect("leg");
    ConstructionResult::new(
        Kind::Pushout,
        Diagram::Span(f.clone(), g.clone()),
        coeq.apex().clone(),
        vec![
            leg("can_X", compose(ix, can)?),
            leg("can_Y", compose(iy, can)?),
        ],
    )
}

/// `h^* : (X ⊔ Y)/∼ -> U`.
///
/// The coimage of the copairing `h ⊔ h'` glues the blocks of `h⁻¹ ⊔ h'⁻¹`
/// that share a value. The cone condition makes it refined by `∼`, so each
/// `∼`-block lies in one such fiber and goes to its value in
/// `h(X) ∪ h'(Y)`, which is included into `U`.
pub fn pushout_factor(h: &Function, h2: &Function, f: &Function, g: &Function) -> Result<Function> {
    if f.dom() != g.dom() {
        return Err(Error::DomainMismatch);
    }
    if h.dom() != f.cod() || h2.dom() != g.cod() {
        return Err(Error::DomainMismatch);
    }
    if h.cod() != h2.cod() {
        return Err(Error::CodomainMismatch);
    }
    let diagram = Diagram::Span(f.clone(), g.clone());
    check_cone(Kind::Pushout, &diagram, &[h.clone(), h2.clone()])?;
    let sum = coproduct(f.cod(), g.cod());
    let sim = coequalizer_partition(
        &compose(f, sum.leg("i_X").expect("leg"))?,
        &compose(g, sum.leg("i_Y").expect("leg"))?,
    )?;
    let copair = coproduct_factor(h, h2)?;
    let fibers = copair.coimage();
    let s = canonical_surjection(&sim, &fibers)?;
    name_blocks_then_include(s, &fibers, h.cod(), |b| {
        copair.cod().get(copair.apply_index(b[0])).clone()
    })
}

/// The equalizer of `f∘p_X` and `g∘p_Y` inside `X × Y`.
pub fn pullback(f: &Function, g: &Function) -> Result<ConstructionResult> {
    if f.cod() != g.cod() {
        return Err(Error::CodomainMismatch);
    }
    let prod = product(f.dom(), g.dom());
    let px = prod.leg("p_X").expect("leg");
    let py = prod.leg("p_Y").expect("leg");
    let eq = equalizer(&compose(px, f)?, &compose(py, g)?)?;
    let can = eq.leg("can").expect("leg");
    ConstructionResult::new(
        Kind::Pullback,
        Diagram::Cospan(f.clone(), g.clone()),
        eq.apex().clone(),
        vec![
            leg("can_X", compose(can, px)?),
            leg("can_Y", compose(can, py)?),
        ],
    )
}

/// `h_* : U -> E`. Each `u` lies in one block `h⁻¹(x) ∩ h'⁻¹(y)` of the join;
/// the refinement by `1_U` sends it to `(x, y)`. The cone condition puts
/// every attained pair in `E`, and that inclusion completes the map.
pub fn pullback_factor(
    h: &Function,
    h2: &Function,
    f: &Function,
    g: &Function,
) -> Result<Function> {
    if f.cod() != g.cod() {
        return Err(Error::CodomainMismatch);
    }
    if h.cod() != f.dom() || h2.cod() != g.dom() {
        return Err(Error::CodomainMismatch);
    }
    if h.dom() != h2.dom() {
        return Err(Error::DomainMismatch);
    }
    let diagram = Diagram::Cospan(f.clone(), g.clone());
    check_cone(Kind::Pullback, &diagram, &[h.clone(), h2.clone()])?;
    let e = pullback(f, g)?;
    let j = partition::join(&h.coimage(), &h2.coimage())?;
    name_blocks_then_include(quotient_map(&j), &j, e.apex(), |b| {
        tagged::pair(
            h.cod().get(h.apply_index(b[0])),
            h2.cod().get(h2.apply_index(b[0])),
        )
    })
}

use super::*;
use crate::exec::DEFAULT_BUDGET;
use crate::finset::set;
use crate::partition::{terminal_map, Partition};
use crate::subset::initial_map;

fn fun(dom: &[&str], cod: &[&str], pairs: &[(&str, &str)]) -> Function {
    Function::from_strs(set(dom), set(cod), pairs).unwrap()
}

fn f3() -> Function {
    fun(
        &["1", "2", "3"],
        &["p", "q"],
        &[("1", "p"), ("2", "p"), ("3", "q")],
    )
}

fn body(f: &Function) -> String {
    f.render_body("A", "B")
}

#[test]
fn factorization_examples() {
    let (s, i) = epi_mono_factorize(&f3());
    assert_eq!(body(&s), "A -> B { 1->p, 2->p, 3->q }");
    assert_eq!(s.cod(), &set(&["p", "q"]));
    assert_eq!(i, Function::identity(&set(&["p", "q"])));
    assert_eq!(compose(&s, &i).unwrap(), f3());

    let id = Function::identity(&set(&["a", "b"]));
    let (s, i) = epi_mono_factorize(&id);
    assert_eq!((s, i), (id.clone(), id));

    let e = fun(&[], &["p"], &[]);
    let (s, i) = epi_mono_factorize(&e);
    assert!(s.dom().is_empty() && s.cod().is_empty());
    assert_eq!(i, initial_map(&set(&["p"])));
}

#[test]
fn coproduct_examples() {
    let c = coproduct(&set(&["1", "2"]), &set(&["p"]));
    assert_eq!(c.apex().to_string(), "{L.1,L.2,R.p}");
    assert_eq!(
        c.render("X+Y", &["X", "Y"]),
        [
            "apex X+Y = {L.1,L.2,R.p}",
            "i_X: X -> X+Y { 1->L.1, 2->L.2 }",
            "i_Y: Y -> X+Y { p->R.p }",
        ]
    );
    let x = set(&["1", "2"]);
    assert_eq!(coproduct(&x, &x).apex().len(), 4);
    let c = coproduct(&FinSet::empty(), &x);
    assert!(c.leg("i_Y").unwrap().is_bijective());
}

#[test]
fn coproduct_factor_examples() {
    let z = set(&["u", "v"]);
    let f = Function::constant(&set(&["1", "2"]), &z, &Label::new("u").unwrap()).unwrap();
    let g = Function::constant(&set(&["s"]), &z, &Label::new("u").unwrap()).unwrap();
    let m = coproduct_factor(&f, &g).unwrap();
    assert!(m.entries().all(|(_, y)| y.as_str() == "u"));
    assert_eq!(m.dom().len(), 3);

    let g = fun(&["s"], &["p", "q"], &[("s", "q")]);
    let m = coproduct_factor(&f3(), &g).unwrap();
    assert_eq!(body(&m), "A -> B { L.1->p, L.2->p, L.3->q, R.s->q }");

    let other = fun(&["s"], &["u"], &[("s", "u")]);
    assert_eq!(
        coproduct_factor(&f3(), &other),
        Err(Error::CodomainMismatch)
    );
}

#[test]
fn coproduct_ump_small() {
    let x = set(&["1", "2"]);
    let y = set(&["a", "b"]);
    let z = set(&["u", "v"]);
    let c = coproduct(&x, &y);
    let f = fun(&["1", "2"], &["u", "v"], &[("1", "u"), ("2", "v")]);
    let g = fun(&["a", "b"], &["u", "v"], &[("a", "v"), ("b", "v")]);
    let r = verify_ump(&c, &[f.clone(), g.clone()], DEFAULT_BUDGET).unwrap();
    assert!(r.commutes);
    assert_eq!(r.mediating_count, 1);
    assert_eq!(r.mediator.unwrap(), coproduct_factor(&f, &g).unwrap());
    let _ = z;
}

#[test]
fn product_examples() {
    let p = product(&set(&["1", "2"]), &set(&["p"]));
    assert_eq!(p.apex().to_string(), "{(1,p),(2,p)}");
    assert_eq!(body(p.leg("p_Y").unwrap()), "A -> B { (1,p)->p, (2,p)->p }");
    assert!(p.leg("p_X").unwrap().is_surjective());

    let p = product(&set(&["1", "2"]), &FinSet::empty());
    assert!(p.apex().is_empty());
    assert!(p.leg("p_X").unwrap().dom().is_empty());
    assert!(!p.leg("p_X").unwrap().is_surjective());

    assert_eq!(
        product(&set(&["1", "2"]), &set(&["a", "b", "c"]))
            .apex()
            .len(),
        6
    );
}

#[test]
fn product_labels_with_prefix_collisions() {
    // "1" is a prefix of "10": pair labels do not sort row-major
    let x = set(&["1", "10"]);
    let y = set(&["0", "a"]);
    let p = product(&x, &y);
    for (w, a) in p.leg("p_X").unwrap().entries() {
        assert!(w.as_str().starts_with(&format!("({a},")));
    }
}

#[test]
fn boxtimes_examples() {
    let x = set(&["1", "2"]);
    let (apex, iso) = boxtimes_product(&x, &x);
    assert_eq!(
        apex.to_string(),
        "{{L.1,R.1},{L.1,R.2},{L.2,R.1},{L.2,R.2}}"
    );
    assert!(iso.is_bijective());
    assert_eq!(iso.apply(apex.get(1)).unwrap().as_str(), "(1,2)");
    for n in 0..=3 {
        for m in 0..=3 {
            let names = ["a", "b", "c"];
            let a = set(&names[..n]);
            let b = set(&names[..m]);
            assert_eq!(boxtimes_product(&a, &b).0.len(), n * m);
        }
    }
}

#[test]
fn product_factor_examples() {
    let f = fun(&["z"], &["a", "b"], &[("z", "a")]);
    let g = fun(&["z"], &["p"], &[("z", "p")]);
    assert_eq!(
        body(&product_factor(&f, &g).unwrap()),
        "A -> B { z->(a,p) }"
    );

    let id = Function::identity(&set(&["1", "2"]));
    assert_eq!(
        body(&product_factor(&id, &id).unwrap()),
        "A -> B { 1->(1,1), 2->(2,2) }"
    );
    assert_eq!(product_factor(&f, &id), Err(Error::DomainMismatch));
}

#[test]
fn product_ump_from_point() {
    let p = product(&set(&["1", "2"]), &set(&["p", "q"]));
    let f = fun(&["z"], &["1", "2"], &[("z", "2")]);
    let g = fun(&["z"], &["p", "q"], &[("z", "p")]);
    let r = verify_ump(&p, &[f, g], DEFAULT_BUDGET).unwrap();
    assert_eq!(r.mediating_count, 1);
    assert_eq!(body(&r.mediator.unwrap()), "A -> B { z->(2,p) }");
}

#[test]
fn wrong_apex_has_no_mediator_for_some_cone() {
    let x = set(&["1", "2"]);
    let y = set(&["p", "q"]);
    let p = product(&x, &y);
    let apex = FinSet::from_strs::<&str>(&[]).unwrap();
    let _ = apex;
    // drop (2,q) from the apex
    let kept: Vec<Label> = p
        .apex()
        .iter()
        .filter(|l| l.as_str() != "(2,q)")
        .cloned()
        .collect();
    let smaller = FinSet::new(kept).unwrap();
    let restrict = |leg: &Function| {
        Function::from_rule(smaller.clone(), leg.cod().clone(), |l| {
            leg.apply(l).unwrap().clone()
        })
        .unwrap()
    };
    let bad = ConstructionResult::new(
        Kind::Product,
        Diagram::Pair(x.clone(), y.clone()),
        smaller.clone(),
        vec![
            Leg {
                name: "p_X".into(),
                map: restrict(p.leg("p_X").unwrap()),
            },
            Leg {
                name: "p_Y".into(),
                map: restrict(p.leg("p_Y").unwrap()),
            },
        ],
    )
    .unwrap();
    let f = fun(&["z"], &["1", "2"], &[("z", "2")]);
    let g = fun(&["z"], &["p", "q"], &[("z", "q")]);
    let r = verify_ump(&bad, &[f, g], DEFAULT_BUDGET).unwrap();
    assert!(r.commutes);
    assert_eq!(r.mediating_count, 0);
    assert_eq!(
        r.witnesses,
        [Witness::NoCommutingCandidate { candidates: 3 }]
    );
}

#[test]
fn coproduct_into_point_has_one_mediator() {
    let c = coproduct(&set(&["1", "2"]), &set(&["a"]));
    let pt = FinSet::terminal();
    let f = terminal_map(&set(&["1", "2"]));
    let g = terminal_map(&set(&["a"]));
    let r = verify_ump(&c, &[f, g], DEFAULT_BUDGET).unwrap();
    assert_eq!(r.mediating_count, 1);
    assert_eq!(r.mediator.unwrap().cod(), &pt);
}

#[test]
fn equalizer_examples() {
    let f = f3();
    let e = equalizer(&f, &f).unwrap();
    assert_eq!(e.apex(), f.dom());
    assert_eq!(e.leg("can").unwrap(), &Function::identity(f.dom()));

    let g = fun(
        &["1", "2", "3"],
        &["p", "q"],
        &[("1", "p"), ("2", "q"), ("3", "q")],
    );
    let e = equalizer(&f, &g).unwrap();
    assert_eq!(e.apex(), &set(&["1", "3"]));
    assert_eq!(
        compose(e.leg("can").unwrap(), &f).unwrap(),
        compose(e.leg("can").unwrap(), &g).unwrap()
    );

    let h = fun(
        &["1", "2", "3"],
        &["p", "q"],
        &[("1", "q"), ("2", "q"), ("3", "p")],
    );
    let e = equalizer(&f, &h).unwrap();
    assert!(e.apex().is_empty());
    assert_eq!(e.leg("can").unwrap(), &initial_map(f.dom()));

    assert_eq!(
        equalizer(&f, &Function::identity(&set(&["1", "2", "3"]))),
        Err(Error::NotParallel)
    );
}

#[test]
fn equalizer_factor_examples() {
    let f = f3();
    let g = fun(
        &["1", "2", "3"],
        &["p", "q"],
        &[("1", "p"), ("2", "q"), ("3", "q")],
    );
    let h = fun(&["z", "w"], &["1", "2", "3"], &[("z", "1"), ("w", "3")]);
    let m = equalizer_factor(&h, &f, &g).unwrap();
    assert_eq!(body(&m), "A -> B { w->3, z->1 }");
    assert_eq!(m.cod(), &set(&["1", "3"]));

    let e = fun(&[], &["1", "2", "3"], &[]);
    let m = equalizer_factor(&e, &f, &g).unwrap();
    assert!(m.dom().is_empty());

    let bad = fun(&["z"], &["1", "2", "3"], &[("z", "2")]);
    assert_eq!(
        equalizer_factor(&bad, &f, &g),
        Err(Error::ConeConditionViolated {
            at: "z".into(),
            left: "p".into(),
            right: "q".into()
        })
    );

    let eq = equalizer(&f, &g).unwrap();
    let r = verify_ump(&eq, std::slice::from_ref(&h), DEFAULT_BUDGET).unwrap();
    assert_eq!(r.mediating_count, 1);
    assert_eq!(r.mediator.unwrap(), equalizer_factor(&h, &f, &g).unwrap());
}

fn u3() -> FinSet {
    set(&["a", "b", "c"])
}

#[test]
fn coequalizer_examples() {
    let f = fun(&["1"], &["a", "b", "c"], &[("1", "a")]);
    let g = fun(&["1"], &["a", "b", "c"], &[("1", "b")]);
    let c = coequalizer(&f, &g).unwrap();
    assert_eq!(
        coequalizer_partition(&f, &g).unwrap().render_blocks(),
        "{{a,b},{c}}"
    );
    assert_eq!(
        c.render("Y/~", &["Y"]),
        [
            "apex Y/~ = {a+b,c}",
            "can: Y -> Y/~ { a->a+b, b->a+b, c->c }"
        ]
    );

    let c = coequalizer(&f, &f).unwrap();
    assert_eq!(c.apex(), &u3());
    assert!(c.leg("can").unwrap().is_bijective());

    let f = fun(&["1", "2"], &["a", "b", "c"], &[("1", "a"), ("2", "b")]);
    let g = fun(&["1", "2"], &["a", "b", "c"], &[("1", "b"), ("2", "c")]);
    assert_eq!(
        coequalizer_partition(&f, &g).unwrap(),
        Partition::indiscrete(&u3())
    );
    let c = coequalizer(&f, &g).unwrap();
    assert_eq!(c.apex().to_string(), "{a+b+c}");
}

#[test]
fn coequalizer_factor_examples() {
    let f = fun(&["1"], &["a", "b", "c"], &[("1", "a")]);
    let g = fun(&["1"], &["a", "b", "c"], &[("1", "b")]);
    let h = fun(
        &["a", "b", "c"],
        &["u", "v"],
        &[("a", "u"), ("b", "u"), ("c", "v")],
    );
    let m = coequalizer_factor(&h, &f, &g).unwrap();
    assert_eq!(body(&m), "A -> B { a+b->u, c->v }");

    let k = Function::constant(&u3(), &set(&["u", "v"]), &Label::new("v").unwrap()).unwrap();
    let m = coequalizer_factor(&k, &f, &g).unwrap();
    assert!(m.entries().all(|(_, y)| y.as_str() == "v"));

    let bad = fun(
        &["a", "b", "c"],
        &["u", "v"],
        &[("a", "u"), ("b", "v"), ("c", "v")],
    );
    assert!(matches!(
        coequalizer_factor(&bad, &f, &g),
        Err(Error::ConeConditionViolated { .. })
    ));

    let c = coequalizer(&f, &g).unwrap();
    let r = verify_ump(&c, std::slice::from_ref(&h), DEFAULT_BUDGET).unwrap();
    assert_eq!(r.mediating_count, 1);
    assert_eq!(r.mediator.unwrap(), coequalizer_factor(&h, &f, &g).unwrap());
}

#[test]
fn pushout_examples() {
    let f = fun(&["z"], &["1", "2"], &[("z", "1")]);
    let g = fun(&["z"], &["p", "q"], &[("z", "p")]);
    let po = pushout(&f, &g).unwrap();
    assert_eq!(po.apex().to_string(), "{L.1+R.p,L.2,R.q}");
    assert_eq!(
        body(po.leg("can_X").unwrap()),
        "A -> B { 1->L.1+R.p, 2->L.2 }"
    );

    let x = set(&["1", "2"]);
    let y = set(&["p", "q"]);
    let e = FinSet::empty();
    let po = pushout(&initial_map(&x), &initial_map(&y)).unwrap();
    let co = coproduct(&x, &y);
    assert_eq!(po.apex(), co.apex());
    assert_eq!(po.legs()[0].map, co.legs()[0].map);
    assert_eq!(po.legs()[1].map, co.legs()[1].map);
    let _ = e;

    // Z = X, f = id: every x is glued to g(x)
    let id = Function::identity(&x);
    let g = fun(&["1", "2"], &["p", "q", "r"], &[("1", "p"), ("2", "p")]);
    let po = pushout(&id, &g).unwrap();
    assert_eq!(po.apex().len(), 3);
    assert!(po.leg("can_Y").unwrap().is_bijective());
}

#[test]
fn pushout_factor_examples() {
    let f = fun(&["z"], &["1", "2"], &[("z", "1")]);
    let g = fun(&["z"], &["p", "q"], &[("z", "p")]);
    let h = fun(&["1", "2"], &["u", "v", "w"], &[("1", "u"), ("2", "v")]);
    let h2 = fun(&["p", "q"], &["u", "v", "w"], &[("p", "u"), ("q", "w")]);
    let m = pushout_factor(&h, &h2, &f, &g).unwrap();
    assert_eq!(body(&m), "A -> B { L.1+R.p->u, L.2->v, R.q->w }");

    let t1 = terminal_map(&set(&["1", "2"]));
    let t2 = terminal_map(&set(&["p", "q"]));
    let po = pushout(&f, &g).unwrap();
    let m = pushout_factor(&t1, &t2, &f, &g).unwrap();
    assert_eq!(m, terminal_map(po.apex()));

    let bad = fun(&["p", "q"], &["u", "v", "w"], &[("p", "v"), ("q", "w")]);
    assert!(matches!(
        pushout_factor(&h, &bad, &f, &g),
        Err(Error::ConeConditionViolated { .. })
    ));

    let r = verify_ump(&po, &[h.clone(), h2.clone()], DEFAULT_BUDGET).unwrap();
    assert_eq!(r.mediating_count, 1);
    assert_eq!(
        r.mediator.unwrap(),
        pushout_factor(&h, &h2, &f, &g).unwrap()
    );
}

#[test]
fn pullback_examples() {
    let u = set(&["u"]);
    let x = set(&["1", "2"]);
    let y = set(&["p", "q"]);
    let pt = Label::new("u").unwrap();
    let f = Function::constant(&x, &u, &pt).unwrap();
    let g = Function::constant(&y, &u, &pt).unwrap();
    assert_eq!(pullback(&f, &g).unwrap().apex(), product(&x, &y).apex());

    let f = fun(&["1", "2"], &["u", "v"], &[("1", "u"), ("2", "v")]);
    let g = fun(&["p", "q"], &["u", "v"], &[("p", "u"), ("q", "u")]);
    let pb = pullback(&f, &g).unwrap();
    assert_eq!(pb.apex().to_string(), "{(1,p),(1,q)}");

    let g = fun(&["p"], &["u", "v"], &[("p", "v")]);
    let pb = pullback(&f, &g).unwrap();
    assert!(g.is_injective());
    assert!(pb.leg("can_X").unwrap().is_injective());
}

#[test]
fn pullback_factor_examples() {
    let f = fun(&["1", "2"], &["u", "v"], &[("1", "u"), ("2", "v")]);
    let g = fun(&["p", "q"], &["u", "v"], &[("p", "u"), ("q", "u")]);
    let h = fun(&["s"], &["1", "2"], &[("s", "1")]);
    let h2 = fun(&["s"], &["p", "q"], &[("s", "p")]);
    let m = pullback_factor(&h, &h2, &f, &g).unwrap();
    assert_eq!(body(&m), "A -> B { s->(1,p) }");

    let pb = pullback(&f, &g).unwrap();
    let own = pullback_factor(pb.leg("can_X").unwrap(), pb.leg("can_Y").unwrap(), &f, &g).unwrap();
    assert_eq!(own, Function::identity(pb.apex()));

    let bad = fun(&["s"], &["1", "2"], &[("s", "2")]);
    assert!(matches!(
        pullback_factor(&bad, &h2, &f, &g),
        Err(Error::ConeConditionViolated { .. })
    ));

    let r = verify_ump(&pb, &[h.clone(), h2.clone()], DEFAULT_BUDGET).unwrap();
    assert_eq!(r.mediating_count, 1);
    assert_eq!(r.mediator.unwrap(), m);
}

#[test]
fn pullback_factor_image_need_not_be_a_rectangle() {
    // h(U) × h'(U) contains (1,q) and (2,p), neither of which is in E.
    let f = fun(&["1", "2"], &["u", "v"], &[("1", "u"), ("2", "v")]);
    let g = fun(&["p", "q"], &["u", "v"], &[("p", "u"), ("q", "v")]);
    let h = fun(&["s", "t"], &["1", "2"], &[("s", "1"), ("t", "2")]);
    let h2 = fun(&["s", "t"], &["p", "q"], &[("s", "p"), ("t", "q")]);
    let m = pullback_factor(&h, &h2, &f, &g).unwrap();
    assert_eq!(body(&m), "A -> B { s->(1,p), t->(2,q) }");
}

#[test]
fn ump_shape_and_budget_errors() {
    let p = product(&set(&["1", "2"]), &set(&["p", "q"]));
    let f = fun(&["z"], &["1", "2"], &[("z", "2")]);
    assert!(matches!(
        verify_ump(&p, std::slice::from_ref(&f), DEFAULT_BUDGET),
        Err(Error::ShapeMismatch(_))
    ));
    let g = fun(&["w"], &["p", "q"], &[("w", "p")]);
    assert!(matches!(
        verify_ump(&p, &[f.clone(), g], DEFAULT_BUDGET),
        Err(Error::ShapeMismatch(_))
    ));
    let g = fun(&["z"], &["p", "q"], &[("z", "p")]);
    assert!(matches!(
        verify_ump(&p, &[f, g], 3),
        Err(Error::EnumerationBudgetExceeded {
            needed: 4,
            budget: 3
        })
    ));
}

#[test]
fn non_unique_mediators_are_reported() {
    // a fake "product" whose apex has a duplicated point
    let x = set(&["1"]);
    let y = set(&["p"]);
    let apex = set(&["a", "b"]);
    let px = Function::constant(&apex, &x, &Label::new("1").unwrap()).unwrap();
    let py = Function::constant(&apex, &y, &Label::new("p").unwrap()).unwrap();
    let c = ConstructionResult::new(
        Kind::Product,
        Diagram::Pair(x.clone(), y.clone()),
        apex,
        vec![
            Leg {
                name: "p_X".into(),
                map: px,
            },
            Leg {
                name: "p_Y".into(),
                map: py,
            },
        ],
    )
    .unwrap();
    let f = fun(&["z"], &["1"], &[("z", "1")]);
    let g = fun(&["z"], &["p"], &[("z", "p")]);
    let r = verify_ump(&c, &[f.clone(), g.clone()], DEFAULT_BUDGET).unwrap();
    assert_eq!(r.mediating_count, 2);
    assert!(r.mediator.is_none());
    assert_eq!(r.witnesses.len(), 2);
    assert_eq!(verify_ump_factored(&c, &[f, g], &[]).unwrap(), r);
}

#[test]
fn report_rendering() {
    let p = product(&set(&["1", "2"]), &set(&["p", "q"]));
    let f = fun(&["z"], &["1", "2"], &[("z", "2")]);
    let g = fun(&["z"], &["p", "q"], &[("z", "p")]);
    let r = verify_ump(&p, &[f, g], DEFAULT_BUDGET).unwrap();
    assert_eq!(
        r.render("m", "Z", "P"),
        "{ commutes: true, mediating_count: 1, mediator: m: Z -> P { z->(2,p) } }"
    );
}

#[test]
fn candidate_isomorphisms() {
    let x = set(&["1", "2"]);
    let y = set(&["p", "q", "r"]);
    let prod = product(&x, &y);
    let boxed = boxtimes_construction(&x, &y);
    let iso = unique_iso_between_candidates(&boxed, &prod, Kind::Product).unwrap();
    assert_eq!(iso, boxtimes_product(&x, &y).1);
    assert_eq!(iso.apply_str_derived("{L.2,R.q}"), "(2,q)");

    let id = unique_iso_between_candidates(&prod, &prod, Kind::Product).unwrap();
    assert_eq!(id, Function::identity(prod.apex()));

    let swapped = swapped_product(&x, &y);
    let swap = unique_iso_between_candidates(&prod, &swapped, Kind::Product).unwrap();
    assert_eq!(swap.apply_str_derived("(1,r)"), "(r,1)");
    let back = unique_iso_between_candidates(&swapped, &prod, Kind::Product).unwrap();
    assert_eq!(
        compose(&swap, &back).unwrap(),
        Function::identity(prod.apex())
    );

    let co = coproduct(&x, &y);
    assert!(matches!(
        unique_iso_between_candidates(&co, &prod, Kind::Product),
        Err(Error::NotBothUniversal(_))
    ));
    let other = product(&y, &x);
    assert!(matches!(
        unique_iso_between_candidates(&prod, &other, Kind::Product),
        Err(Error::NotBothUniversal(_))
    ));
}

#[test]
fn colimit_candidates() {
    let x = set(&["1", "2"]);
    let y = set(&["p"]);
    let co = coproduct(&x, &y);
    let id = unique_iso_between_candidates(&co, &co, Kind::Coproduct).unwrap();
    assert_eq!(id, Function::identity(co.apex()));
}

impl Function {
    fn apply_str_derived(&self, x: &str) -> String {
        let i = self.dom().index_of_str(x).expect("in domain");
        self.cod().get(self.apply_index(i)).to_string()
    }
}

#[test]
fn factored_count_matches_exhaustive_search() {
    use crate::exec::FunctionSpace;
    let sizes: Vec<FinSet> = (0..=2).map(|n| set(&["a", "b"][..n])).collect();
    let cmp = |c: &ConstructionResult, cone: &[Function]| {
        let brute = verify_ump(c, cone, DEFAULT_BUDGET).unwrap();
        let fact = verify_ump_factored(c, cone, &[]).unwrap();
        assert_eq!(brute, fact, "{c:?} {cone:?}");
    };
    for x in &sizes {
        for y in &sizes {
            let prod = product(x, y);
            let co = coproduct(x, y);
            for z in &sizes {
                for f in FunctionSpace::new(z, x).iter() {
                    for g in FunctionSpace::new(z, y).iter() {
                        cmp(&prod, &[f.clone(), g]);
                    }
                }
                for f in FunctionSpace::new(x, z).iter() {
                    for g in FunctionSpace::new(y, z).iter() {
                        cmp(&co, &[f.clone(), g]);
                    }
                }
            }
            // non-commuting cones and multiple mediators
            for f in FunctionSpace::new(x, y).iter() {
                for g in FunctionSpace::new(x, y).iter() {
                    let eq = equalizer(&f, &g).unwrap();
                    let coeq = coequalizer(&f, &g).unwrap();
                    for z in &sizes {
                        for h in FunctionSpace::new(z, x).iter() {
                            cmp(&eq, &[h]);
                        }
                        for h in FunctionSpace::new(y, z).iter() {
                            cmp(&coeq, &[h]);
                        }
                    }
                }
            }
        }
    }
}

use serde_json::{json, Map, Value};

use crate::cancel::{epi_witness_with, mono_witness_with};
use crate::error::{Error, Result};
use crate::exec::{Strategy, DEFAULT_BUDGET};
use crate::finset::FinSet;
use crate::function::{compose, Function};
use crate::partition::{
    canonical_surjection, disjoint_union_partition, enumerate_partitions, join, logical_entropy,
    meet, refines, terminal_map, Partition,
};
use crate::pointed::{
    canonical_wedge_to_product, is_pointed_map, pointed_product, verify_pointed_ump,
    wedge_coproduct, zero_arrow, PointedMap, PointedObj,
};
use crate::relation::Relation;
use crate::subset::{canonical_injection, initial_map, laplace_probability, Subset};
use crate::universal::{
    boxtimes_construction, boxtimes_product, coequalizer, coequalizer_factor, coproduct,
    coproduct_factor, epi_mono_factorize, equalizer, equalizer_factor, product, product_factor,
    pullback, pullback_factor, pushout, pushout_factor, swapped_product,
    unique_iso_between_candidates, verify_ump_with, ConstructionResult, Kind, UmpReport, Witness,
};

use super::env::{Environment, Named};
use super::{Command, DslError, Script, Statement};

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Candidate budget for commands without their own `--budget`.
    pub budget: u128,
    pub strategy: Strategy,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            budget: DEFAULT_BUDGET,
            strategy: Strategy::Auto,
        }
    }
}

/// One output of a command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fact {
    /// rendered as `key = value`
    Value(String),
    /// a function body `A -> B { ... }`, rendered as `key: body`
    Map(String),
}

impl Fact {
    pub fn text(&self) -> &str {
        match self {
            Fact::Value(s) | Fact::Map(s) => s,
        }
    }
}

/// The result of one `compute` line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub line: usize,
    pub command: Command,
    pub outputs: Vec<(String, Fact)>,
    pub diagnostics: Vec<String>,
}

impl Report {
    pub fn ok(&self) -> bool {
        self.diagnostics.is_empty()
    }

    pub fn name(&self) -> String {
        format!("{}({})", self.command.op, self.command.args.join(","))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("> {}\n", self.command);
        for (key, fact) in &self.outputs {
            match fact {
                Fact::Value(v) => out.push_str(&format!("{key} = {v}\n")),
                Fact::Map(m) => out.push_str(&format!("{key}: {m}\n")),
            }
        }
        for d in &self.diagnostics {
            out.push_str(&format!("error: {d}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let outputs: Map<String, Value> = self
            .outputs
            .iter()
            .map(|(k, f)| (k.clone(), Value::String(f.text().to_string())))
            .collect();
        json!({
            "kind": self.command.op,
            "name": self.name(),
            "inputs": self.command.args,
            "outputs": outputs,
            "diagnostics": self.diagnostics,
        })
    }
}

/// Runs every command in order. Declarations are re-evaluated first, so a
/// script assembled by hand is validated the same way as a parsed one.
pub fn execute(script: &Script, opts: &Options) -> std::result::Result<Vec<Report>, DslError> {
    let env = Environment::build(script)?;
    let mut reports = Vec::new();
    for item in &script.items {
        if let Statement::Compute(cmd) = &item.stmt {
            let mut out = Out::default();
            let diagnostics = match run(&env, cmd, opts, &mut out) {
                Ok(()) => Vec::new(),
                Err(e) => vec![format!("line {}: {e}", item.line)],
            };
            reports.push(Report {
                line: item.line,
                command: cmd.clone(),
                outputs: out.facts,
                diagnostics,
            });
        }
    }
    Ok(reports)
}

#[derive(Default)]
struct Out {
    facts: Vec<(String, Fact)>,
}

impl Out {
    fn val(&mut self, key: impl Into<String>, v: impl ToString) {
        self.facts.push((key.into(), Fact::Value(v.to_string())));
    }

    fn map(&mut self, key: impl Into<String>, f: &Function, dom: &str, cod: &str) {
        self.facts
            .push((key.into(), Fact::Map(f.render_body(dom, cod))));
    }

    fn construction(&mut self, c: &ConstructionResult, apex: &str, objects: &[&str]) {
        self.val(apex, c.apex());
        let limit = c.kind().is_limit();
        for (leg, obj) in c.legs().iter().zip(objects) {
            let (d, e) = if limit { (apex, *obj) } else { (*obj, apex) };
            self.map(leg.name.clone(), &leg.map, d, e);
        }
    }
}

fn call(f: &str, args: &[&str]) -> String {
    format!("{f}({})", args.join(","))
}

struct Ctx<'a> {
    env: &'a Environment,
}

impl<'a> Ctx<'a> {
    fn object(&self, n: &str) -> &'a FinSet {
        &self.env.objects[n]
    }

    fn pointed(&self, n: &str) -> Result<&'a PointedObj> {
        self.env
            .pointed
            .get(n)
            .ok_or_else(|| Error::ShapeMismatch(format!("`{n}` is not a pointed set")))
    }

    fn f(&self, n: &str) -> &'a Named<Function> {
        &self.env.functions[n]
    }

    fn subset(&self, n: &str) -> &'a (Subset, String) {
        &self.env.subsets[n]
    }

    fn partition(&self, n: &str) -> &'a (Partition, String) {
        &self.env.partitions[n]
    }

    /// A relation, or the graph of a function.
    fn arrow(&self, n: &str) -> Named<Relation> {
        match self.env.relations.get(n) {
            Some(r) => r.clone(),
            None => {
                let f = self.f(n);
                Named {
                    value: f.value.graph(),
                    dom: f.dom.clone(),
                    cod: f.cod.clone(),
                }
            }
        }
    }

    fn pointed_map(&self, n: &str) -> Result<PointedMap> {
        let f = self.f(n);
        PointedMap::new(
            f.value.clone(),
            self.pointed(&f.dom)?,
            self.pointed(&f.cod)?,
        )
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

fn run(env: &Environment, cmd: &Command, opts: &Options, out: &mut Out) -> Result<()> {
    let cx = Ctx { env };
    let a: Vec<&str> = cmd.args.iter().map(String::as_str).collect();
    let budget = cmd.budget.unwrap_or(opts.budget);
    let strategy = opts.strategy;
    match cmd.op.as_str() {
        "classify" => {
            let r = cx.arrow(a[0]);
            let p = r.value.classify();
            out.val(call("profile", &a), p);
            out.val(call("function", &a), flag(p.is_function()));
            out.val(call("cofunction", &a), flag(p.is_cofunction()));
        }
        "as-function" => {
            let r = cx.arrow(a[0]);
            let f = r.value.as_function()?;
            out.map(a[0], &f, &r.dom, &r.cod);
        }
        "opposite" => {
            let r = cx.arrow(a[0]);
            let op = r.value.opposite();
            let key = call("op", &a);
            out.val(key.clone(), op.render());
            out.val(call("profile", &[&key]), op.classify());
        }
        "injective" => out.val(call("injective", &a), flag(cx.f(a[0]).value.is_injective())),
        "surjective" => out.val(
            call("surjective", &a),
            flag(cx.f(a[0]).value.is_surjective()),
        ),
        "image" => out.val(call("im", &a), cx.f(a[0]).value.image()),
        "coimage" => out.val(call("coim", &a), cx.f(a[0]).value.coimage().render_blocks()),
        "compose" => {
            let (f, g) = (cx.f(a[0]), cx.f(a[1]));
            let h = compose(&f.value, &g.value)?;
            out.map(format!("{}∘{}", a[1], a[0]), &h, &f.dom, &g.cod);
        }
        "mono" | "epi" => {
            let f = cx.f(a[0]);
            let mono = cmd.op == "mono";
            let bound = cmd.probe.unwrap_or(if mono { 2 } else { 1 });
            let found = if mono {
                mono_witness_with(&f.value, bound, budget, strategy)?
            } else {
                epi_witness_with(&f.value, bound, budget, strategy)?
            };
            out.val(call(&cmd.op, &a), flag(found.is_none()));
            out.val("probe", bound);
            if let Some((g1, g2)) = found {
                let (d, c) = if mono {
                    ("P", f.dom.as_str())
                } else {
                    (f.cod.as_str(), "P")
                };
                out.map("witness_1", &g1, d, c);
                out.map("witness_2", &g2, d, c);
            }
        }
        "pointed" => {
            let f = cx.f(a[0]);
            let ok = is_pointed_map(&f.value, cx.pointed(&f.dom)?, cx.pointed(&f.cod)?);
            out.val(call("pointed", &a), flag(ok));
        }
        "subset-of" => {
            let (s, t) = (&cx.subset(a[0]).0, &cx.subset(a[1]).0);
            out.val(call("subset", &a), flag(s.is_subset(t)?));
        }
        "inclusion" => {
            let (s, t) = (&cx.subset(a[0]).0, &cx.subset(a[1]).0);
            out.map(call("inc", &a), &canonical_injection(s, t)?, a[0], a[1]);
        }
        "initial" => out.map(call("init", &a), &initial_map(cx.object(a[0])), "0", a[0]),
        "prob" => out.val(call("P", &a), laplace_probability(&cx.subset(a[0]).0)?),
        "ditset" => {
            let d = cx.partition(a[0]).0.ditset();
            out.val(call("dit", &a), d.render());
            out.val(format!("|{}|", call("dit", &a)), d.len());
        }
        "refines" => {
            let (s, p) = (&cx.partition(a[0]).0, &cx.partition(a[1]).0);
            out.val(call("refines", &a), flag(refines(s, p)?));
        }
        "surjection" => {
            let ((p, u), (s, _)) = (cx.partition(a[0]), cx.partition(a[1]));
            let m = canonical_surjection(p, s)?;
            let (d, c) = (format!("{u}/{}", a[0]), format!("{u}/{}", a[1]));
            out.map(call("can", &a), &m, &d, &c);
        }
        "discrete" => out.val(
            call("discrete", &a),
            Partition::discrete(cx.object(a[0])).render_blocks(),
        ),
        "indiscrete" => out.val(
            call("indiscrete", &a),
            Partition::indiscrete(cx.object(a[0])).render_blocks(),
        ),
        "terminal" => out.map(call("term", &a), &terminal_map(cx.object(a[0])), a[0], "1"),
        "join" | "meet" | "dunion" => {
            let (p, r) = (&cx.partition(a[0]).0, &cx.partition(a[1]).0);
            let q = match cmd.op.as_str() {
                "join" => join(p, r)?,
                "meet" => meet(p, r)?,
                _ => disjoint_union_partition(p, r),
            };
            out.val(call(&cmd.op, &a), q.render_blocks());
        }
        "entropy" => out.val(call("h", &a), logical_entropy(&cx.partition(a[0]).0)?),
        "partitions" => {
            let all = enumerate_partitions(cx.object(a[0]))?;
            out.val(call("partitions", &a), all.len());
            for (i, p) in all.iter().enumerate() {
                out.val(format!("p{}", i + 1), p.render_blocks());
            }
        }
        "factorize" => {
            let f = cx.f(a[0]);
            let (s, i) = epi_mono_factorize(&f.value);
            let im = call("im", &a);
            out.val(im.clone(), s.cod());
            out.map("surj", &s, &f.dom, &im);
            out.map("inj", &i, &im, &f.cod);
        }
        "coproduct" => {
            let c = coproduct(cx.object(a[0]), cx.object(a[1]));
            out.construction(&c, &call("coprod", &a), &a);
        }
        "coproduct-factor" => {
            let (f, g) = (cx.f(a[0]), cx.f(a[1]));
            let m = coproduct_factor(&f.value, &g.value)?;
            let apex = call("coprod", &[&f.dom, &g.dom]);
            out.map(format!("[{},{}]", a[0], a[1]), &m, &apex, &f.cod);
        }
        "product" => {
            let c = product(cx.object(a[0]), cx.object(a[1]));
            out.construction(&c, &call("prod", &a), &a);
        }
        "boxtimes" => {
            let (apex, iso) = boxtimes_product(cx.object(a[0]), cx.object(a[1]));
            let name = call("box", &a);
            out.val(name.clone(), apex);
            out.map("iso", &iso, &name, &call("prod", &a));
        }
        "product-factor" => {
            let (f, g) = (cx.f(a[0]), cx.f(a[1]));
            let m = product_factor(&f.value, &g.value)?;
            let apex = call("prod", &[&f.cod, &g.cod]);
            out.map(format!("<{},{}>", a[0], a[1]), &m, &f.dom, &apex);
        }
        "equalizer" | "coequalizer" | "pushout" | "pullback" => {
            let (f, g) = (cx.f(a[0]), cx.f(a[1]));
            let (c, objects) = match cmd.op.as_str() {
                "equalizer" => (equalizer(&f.value, &g.value)?, vec![f.dom.as_str()]),
                "coequalizer" => (coequalizer(&f.value, &g.value)?, vec![f.cod.as_str()]),
                "pushout" => (
                    pushout(&f.value, &g.value)?,
                    vec![f.cod.as_str(), g.cod.as_str()],
                ),
                _ => (
                    pullback(&f.value, &g.value)?,
                    vec![f.dom.as_str(), g.dom.as_str()],
                ),
            };
            out.construction(&c, &apex_name(c.kind(), &a), &objects);
        }
        "equalizer-factor" | "coequalizer-factor" => {
            let (h, f, g) = (cx.f(a[0]), cx.f(a[1]), cx.f(a[2]));
            let apex = if cmd.op == "equalizer-factor" {
                call("eq", &a[1..])
            } else {
                call("coeq", &a[1..])
            };
            if cmd.op == "equalizer-factor" {
                let m = equalizer_factor(&h.value, &f.value, &g.value)?;
                out.map("med", &m, &h.dom, &apex);
            } else {
                let m = coequalizer_factor(&h.value, &f.value, &g.value)?;
                out.map("med", &m, &apex, &h.cod);
            }
        }
        "pushout-factor" => {
            let (h, h2, f, g) = (cx.f(a[0]), cx.f(a[1]), cx.f(a[2]), cx.f(a[3]));
            let m = pushout_factor(&h.value, &h2.value, &f.value, &g.value)?;
            out.map("med", &m, &call("po", &a[2..]), &h.cod);
        }
        "pullback-factor" => {
            let (h, h2, f, g) = (cx.f(a[0]), cx.f(a[1]), cx.f(a[2]), cx.f(a[3]));
            let m = pullback_factor(&h.value, &h2.value, &f.value, &g.value)?;
            out.map("med", &m, &h.dom, &call("pb", &a[2..]));
        }
        "verify-ump" => verify(&cx, &a, budget, strategy, out)?,
        "iso" => {
            let (x, y) = (cx.object(a[0]), cx.object(a[1]));
            let prod = product(x, y);
            let (iso, d, c) = if a[2] == "box" {
                let b = boxtimes_construction(x, y);
                let iso = unique_iso_between_candidates(&b, &prod, Kind::Product)?;
                (iso, call("box", &a[..2]), call("prod", &a[..2]))
            } else {
                let s = swapped_product(x, y);
                let iso = unique_iso_between_candidates(&prod, &s, Kind::Product)?;
                (iso, call("prod", &a[..2]), call("prod", &[a[1], a[0]]))
            };
            out.map("iso", &iso, &d, &c);
            out.val("bijective", flag(iso.is_bijective()));
        }
        "wedge" | "pprod" => {
            let (x, y) = (cx.pointed(a[0])?, cx.pointed(a[1])?);
            let pc = if cmd.op == "wedge" {
                wedge_coproduct(x, y)
            } else {
                pointed_product(x, y)
            };
            let name = call(&cmd.op, &a);
            out.construction(pc.construction(), &name, &a);
            out.val(call("base", &[&name]), pc.apex().basepoint());
        }
        "zero" => {
            let (x, y) = (cx.pointed(a[0])?, cx.pointed(a[1])?);
            out.map(call("zero", &a), zero_arrow(x, y).underlying(), a[0], a[1]);
        }
        "wedge-to-prod" => {
            let (x, y) = (cx.pointed(a[0])?, cx.pointed(a[1])?);
            let m = canonical_wedge_to_product(x, y);
            out.map(
                "can",
                m.underlying(),
                &call("wedge", &a),
                &call("pprod", &a),
            );
        }
        other => return Err(Error::ShapeMismatch(format!("unknown operation `{other}`"))),
    }
    Ok(())
}

fn apex_name(kind: Kind, args: &[&str]) -> String {
    let f = match kind {
        Kind::Product => "prod",
        Kind::Coproduct => "coprod",
        Kind::Equalizer => "eq",
        Kind::Coequalizer => "coeq",
        Kind::Pullback => "pb",
        Kind::Pushout => "po",
    };
    call(f, args)
}

/// `verify-ump KIND a b cone c [d]`
fn verify(cx: &Ctx, a: &[&str], budget: u128, strategy: Strategy, out: &mut Out) -> Result<()> {
    let (kind, objs, cone) = (a[0], &a[1..3], &a[4..]);
    let (report, limit, apex): (UmpReport, bool, String) = match kind {
        "wedge" | "pprod" => {
            let (x, y) = (cx.pointed(objs[0])?, cx.pointed(objs[1])?);
            let pc = if kind == "wedge" {
                wedge_coproduct(x, y)
            } else {
                pointed_product(x, y)
            };
            let maps = cone
                .iter()
                .map(|n| cx.pointed_map(n))
                .collect::<Result<Vec<_>>>()?;
            let r = verify_pointed_ump(&pc, &maps, budget, strategy)?;
            (r, kind == "pprod", call(kind, objs))
        }
        _ => {
            let c = match kind {
                "product" => product(cx.object(objs[0]), cx.object(objs[1])),
                "coproduct" => coproduct(cx.object(objs[0]), cx.object(objs[1])),
                _ => {
                    let (f, g) = (&cx.f(objs[0]).value, &cx.f(objs[1]).value);
                    match kind {
                        "equalizer" => equalizer(f, g)?,
                        "coequalizer" => coequalizer(f, g)?,
                        "pullback" => pullback(f, g)?,
                        _ => pushout(f, g)?,
                    }
                }
            };
            let maps: Vec<Function> = cone.iter().map(|n| cx.f(n).value.clone()).collect();
            let r = verify_ump_with(&c, &maps, budget, strategy)?;
            (r, c.kind().is_limit(), apex_name(c.kind(), objs))
        }
    };
    let first = cx.f(cone[0]);
    let vertex = if limit { &first.dom } else { &first.cod };
    let (d, c) = if limit {
        (vertex.as_str(), apex.as_str())
    } else {
        (apex.as_str(), vertex.as_str())
    };
    out.val("commutes", flag(report.commutes));
    out.val("mediating_count", report.mediating_count);
    match &report.mediator {
        Some(m) => out.map("mediator", m, d, c),
        None => out.val("mediator", "none"),
    }
    for (i, w) in report.witnesses.iter().enumerate() {
        let key = format!("witness_{}", i + 1);
        match w {
            Witness::ConeCondition { at, left, right } => {
                out.val(key, format!("cone fails at {at}: {left} != {right}"))
            }
            Witness::NoCommutingCandidate { candidates } => {
                out.val(key, format!("none of {candidates} candidates commutes"))
            }
            Witness::ExtraMediator(m) => out.map(key, m, d, c),
        }
    }
    Ok(())
}

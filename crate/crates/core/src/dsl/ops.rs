//! Argument signatures of the `compute` operations.

/// What an argument names.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Arg {
    /// a `set` or the carrier of a `pset`
    Object,
    Pointed,
    Subset,
    Partition,
    Fn,
    /// a `rel`, or the graph of a `fn`
    Arrow,
    /// one of a fixed set of keywords
    Choice(&'static [&'static str]),
}

impl Arg {
    pub(crate) fn describe(self) -> String {
        match self {
            Arg::Object => "set".into(),
            Arg::Pointed => "pointed set".into(),
            Arg::Subset => "subset".into(),
            Arg::Partition => "partition".into(),
            Arg::Fn => "function".into(),
            Arg::Arrow => "relation".into(),
            Arg::Choice(words) => {
                let quoted: Vec<String> = words.iter().map(|w| format!("`{w}`")).collect();
                format!("one of {}", quoted.join(", "))
            }
        }
    }
}

pub(crate) const UMP_KINDS: &[&str] = &[
    "product",
    "coproduct",
    "equalizer",
    "coequalizer",
    "pullback",
    "pushout",
    "wedge",
    "pprod",
];

use Arg::*;

const OPS: &[(&str, &[Arg])] = &[
    ("classify", &[Arrow]),
    ("as-function", &[Arrow]),
    ("opposite", &[Arrow]),
    ("injective", &[Fn]),
    ("surjective", &[Fn]),
    ("image", &[Fn]),
    ("coimage", &[Fn]),
    ("compose", &[Fn, Fn]),
    ("mono", &[Fn]),
    ("epi", &[Fn]),
    ("pointed", &[Fn]),
    ("subset-of", &[Subset, Subset]),
    ("inclusion", &[Subset, Subset]),
    ("initial", &[Object]),
    ("prob", &[Subset]),
    ("ditset", &[Partition]),
    ("refines", &[Partition, Partition]),
    ("surjection", &[Partition, Partition]),
    ("discrete", &[Object]),
    ("indiscrete", &[Object]),
    ("terminal", &[Object]),
    ("join", &[Partition, Partition]),
    ("meet", &[Partition, Partition]),
    ("dunion", &[Partition, Partition]),
    ("entropy", &[Partition]),
    ("partitions", &[Object]),
    ("factorize", &[Fn]),
    ("coproduct", &[Object, Object]),
    ("coproduct-factor", &[Fn, Fn]),
    ("product", &[Object, Object]),
    ("boxtimes", &[Object, Object]),
    ("product-factor", &[Fn, Fn]),
    ("equalizer", &[Fn, Fn]),
    ("equalizer-factor", &[Fn, Fn, Fn]),
    ("coequalizer", &[Fn, Fn]),
    ("coequalizer-factor", &[Fn, Fn, Fn]),
    ("pushout", &[Fn, Fn]),
    ("pushout-factor", &[Fn, Fn, Fn, Fn]),
    ("pullback", &[Fn, Fn]),
    ("pullback-factor", &[Fn, Fn, Fn, Fn]),
    ("iso", &[Object, Object, Choice(&["box", "swap"])]),
    ("wedge", &[Pointed, Pointed]),
    ("pprod", &[Pointed, Pointed]),
    ("zero", &[Pointed, Pointed]),
    ("wedge-to-prod", &[Pointed, Pointed]),
];

pub(crate) fn is_op(op: &str) -> bool {
    op == "verify-ump" || OPS.iter().any(|(name, _)| *name == op)
}

pub(crate) fn takes_probe(op: &str) -> bool {
    matches!(op, "mono" | "epi")
}

/// The expected argument kinds. `verify-ump` depends on its first argument:
/// `verify-ump KIND a b cone c [d]`.
pub(crate) fn signature(op: &str, first: Option<&str>) -> Vec<Arg> {
    if op != "verify-ump" {
        return OPS
            .iter()
            .find(|(name, _)| *name == op)
            .map(|(_, args)| args.to_vec())
            .unwrap_or_default();
    }
    let kind = Choice(UMP_KINDS);
    let cone = Choice(&["cone"]);
    match first {
        Some("product" | "coproduct") => vec![kind, Object, Object, cone, Fn, Fn],
        Some("equalizer" | "coequalizer") => vec![kind, Fn, Fn, cone, Fn],
        Some("pullback" | "pushout") => vec![kind, Fn, Fn, cone, Fn, Fn],
        Some("wedge" | "pprod") => vec![kind, Pointed, Pointed, cone, Fn, Fn],
        _ => vec![kind],
    }
}

use thiserror::Error;

/// The four quantified predicates a relation can satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Predicate {
    TransmitsElements,
    ReflectsElements,
    TransmitsDistinctions,
    ReflectsDistinctions,
}

impl std::fmt::Display for Predicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Predicate::TransmitsElements => "transmits elements",
            Predicate::ReflectsElements => "reflects elements",
            Predicate::TransmitsDistinctions => "transmits distinctions",
            Predicate::ReflectsDistinctions => "reflects distinctions",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("label `{label}` is not an element of {{{object}}}")]
    UnknownLabel { label: String, object: String },
    #[error("malformed relation: pair ({0},{1}) lies outside dom x cod")]
    MalformedRelation(String, String),
    #[error("not a function: fails to {predicate}{}", witness_suffix(.witness))]
    NotAFunction {
        predicate: Predicate,
        witness: Vec<String>,
    },
    #[error("cannot compose: codomain {{{left_cod}}} differs from domain {{{right_dom}}}")]
    CompositionMismatch { left_cod: String, right_dom: String },
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    EnumerationBudgetExceeded { needed: u128, budget: u128 },
    #[error("universe mismatch")]
    UniverseMismatch,
    #[error("not a subset: `{0}` is missing from the larger set")]
    NotASubset(String),
    #[error("empty universe")]
    EmptyUniverse,
    #[error("not a refinement: block {0} lies in no single coarser block")]
    NotARefinement(String),
    #[error("codomain mismatch")]
    CodomainMismatch,
    #[error("domain mismatch")]
    DomainMismatch,
    #[error("maps are not parallel")]
    NotParallel,
    #[error("cone condition violated at `{at}`: {left} != {right}")]
    ConeConditionViolated {
        at: String,
        left: String,
        right: String,
    },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("candidates are not both universal: {0}")]
    NotBothUniversal(String),
    #[error("basepoint `{0}` is not in the carrier")]
    BasepointNotInCarrier(String),
    #[error("pointed objects need a nonempty carrier")]
    EmptyCarrier,
    #[error("basepoint not preserved: `{from}` goes to `{to}`, expected `{expected}`")]
    BasepointNotPreserved {
        from: String,
        to: String,
        expected: String,
    },
}

fn witness_suffix(witness: &[String]) -> String {
    if witness.is_empty() {
        String::new()
    } else {
        format!(" at {}", witness.join(", "))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

//! A line-oriented script language for declaring finite objects and maps and
//! running constructions on them.
//!
//! ```text
//! set X = {1,2,3}
//! set Y = {p,q}
//! fn f : X -> Y { 1->p, 2->p, 3->q }
//! compute factorize f
//! ```

mod env;
mod lex;
mod ops;
mod parse;
mod report;

use std::fmt;

pub use env::{Environment, Named};
pub use parse::parse_script;
pub use report::{execute, Fact, Options, Report};

use crate::error::Error;

/// One declaration or command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Set {
        name: String,
        elems: Vec<String>,
    },
    Subset {
        name: String,
        of: String,
        elems: Vec<String>,
    },
    Partition {
        name: String,
        on: String,
        blocks: Vec<Vec<String>>,
    },
    Fn {
        name: String,
        dom: String,
        cod: String,
        pairs: Vec<(String, String)>,
    },
    /// A relation need not be total or single-valued.
    Rel {
        name: String,
        dom: String,
        cod: String,
        pairs: Vec<(String, String)>,
    },
    Pset {
        name: String,
        elems: Vec<String>,
        base: String,
    },
    Compute(Command),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Command {
    pub op: String,
    pub args: Vec<String>,
    pub budget: Option<u128>,
    pub probe: Option<usize>,
}

/// A statement with the position of its first token.
#[derive(Clone, Debug)]
pub struct Item {
    pub line: usize,
    pub col: usize,
    pub stmt: Statement,
}

#[derive(Clone, Debug, Default)]
pub struct Script {
    pub items: Vec<Item>,
}

/// Positions are ignored: a script equals its canonical rendering.
impl PartialEq for Script {
    fn eq(&self, other: &Self) -> bool {
        self.items.len() == other.items.len()
            && self
                .items
                .iter()
                .zip(&other.items)
                .all(|(a, b)| a.stmt == b.stmt)
    }
}

impl Eq for Script {}

impl Script {
    pub fn statements(&self) -> impl Iterator<Item = &Statement> + '_ {
        self.items.iter().map(|i| &i.stmt)
    }
}

/// Canonical form: one statement per line, comments and blank lines dropped.
pub fn render(script: &Script) -> String {
    let mut out = String::new();
    for item in &script.items {
        out.push_str(&item.stmt.to_string());
        out.push('\n');
    }
    out
}

fn braces(elems: &[String]) -> String {
    format!("{{{}}}", elems.join(","))
}

fn arrows(pairs: &[(String, String)]) -> String {
    if pairs.is_empty() {
        return "{ }".to_string();
    }
    let body: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}->{b}")).collect();
    format!("{{ {} }}", body.join(", "))
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "compute {}", self.op)?;
        for a in &self.args {
            write!(f, " {a}")?;
        }
        if let Some(b) = self.budget {
            write!(f, " --budget {b}")?;
        }
        if let Some(p) = self.probe {
            write!(f, " --probe {p}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Set { name, elems } => write!(f, "set {name} = {}", braces(elems)),
            Statement::Subset { name, of, elems } => {
                write!(f, "subset {name} of {of} = {}", braces(elems))
            }
            Statement::Partition { name, on, blocks } => {
                let bs: Vec<String> = blocks.iter().map(|b| braces(b)).collect();
                write!(f, "partition {name} on {on} = {{{}}}", bs.join(","))
            }
            Statement::Fn {
                name,
                dom,
                cod,
                pairs,
            } => write!(f, "fn {name} : {dom} -> {cod} {}", arrows(pairs)),
            Statement::Rel {
                name,
                dom,
                cod,
                pairs,
            } => write!(f, "rel {name} : {dom} -> {cod} {}", arrows(pairs)),
            Statement::Pset { name, elems, base } => {
                write!(f, "pset {name} = {} base {base}", braces(elems))
            }
            Statement::Compute(c) => c.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DslErrorKind {
    #[error("expected {expected}, found {found}")]
    Syntax { expected: String, found: String },
    #[error("unknown {kind} `{name}`")]
    UnknownReference { name: String, kind: &'static str },
    #[error("{kind} `{name}` is already declared")]
    DuplicateName { name: String, kind: &'static str },
    #[error(transparent)]
    Invalid(#[from] Error),
}

/// A parse or validation failure at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, col {col}: {kind}")]
pub struct DslError {
    pub line: usize,
    pub col: usize,
    pub kind: DslErrorKind,
}

impl DslError {
    pub(crate) fn new(line: usize, col: usize, kind: impl Into<DslErrorKind>) -> Self {
        DslError {
            line,
            col,
            kind: kind.into(),
        }
    }
}

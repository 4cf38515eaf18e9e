use std::collections::BTreeMap;

use crate::error::Result;
use crate::finset::{FinSet, Label};
use crate::function::Function;
use crate::partition::Partition;
use crate::pointed::{make_pointed, PointedObj};
use crate::relation::Relation;
use crate::subset::Subset;

use super::{DslError, Script, Statement};

/// A declared map with the names of its ends.
#[derive(Clone, Debug)]
pub struct Named<T> {
    pub value: T,
    pub dom: String,
    pub cod: String,
}

/// The values bound by a script's declarations.
#[derive(Clone, Debug, Default)]
pub struct Environment {
    pub objects: BTreeMap<String, FinSet>,
    pub pointed: BTreeMap<String, PointedObj>,
    /// subsets with the name of their universe
    pub subsets: BTreeMap<String, (Subset, String)>,
    pub partitions: BTreeMap<String, (Partition, String)>,
    pub functions: BTreeMap<String, Named<Function>>,
    pub relations: BTreeMap<String, Named<Relation>>,
}

fn labels(elems: &[String]) -> Result<Vec<Label>> {
    elems.iter().map(|e| Label::new(e)).collect()
}

fn label_pairs(pairs: &[(String, String)]) -> Result<Vec<(Label, Label)>> {
    pairs
        .iter()
        .map(|(a, b)| Ok((Label::new(a)?, Label::new(b)?)))
        .collect()
}

impl Environment {
    /// Evaluates every declaration in order. Commands are skipped.
    pub fn build(script: &Script) -> std::result::Result<Environment, DslError> {
        let mut env = Environment::default();
        for item in &script.items {
            env.declare(&item.stmt)
                .map_err(|e| DslError::new(item.line, item.col, e))?;
        }
        Ok(env)
    }

    fn object(&self, name: &str) -> &FinSet {
        &self.objects[name]
    }

    fn declare(&mut self, stmt: &Statement) -> Result<()> {
        match stmt {
            Statement::Set { name, elems } => {
                let x = FinSet::new(labels(elems)?)?;
                self.objects.insert(name.clone(), x);
            }
            Statement::Pset { name, elems, base } => {
                let x = FinSet::new(labels(elems)?)?;
                let p = make_pointed(&x, &Label::new(base)?)?;
                self.objects.insert(name.clone(), x);
                self.pointed.insert(name.clone(), p);
            }
            Statement::Subset { name, of, elems } => {
                let s = Subset::new(self.object(of).clone(), labels(elems)?)?;
                self.subsets.insert(name.clone(), (s, of.clone()));
            }
            Statement::Partition { name, on, blocks } => {
                let blocks = blocks
                    .iter()
                    .map(|b| labels(b))
                    .collect::<Result<Vec<_>>>()?;
                let p = Partition::from_blocks(self.object(on).clone(), blocks)?;
                self.partitions.insert(name.clone(), (p, on.clone()));
            }
            Statement::Fn {
                name,
                dom,
                cod,
                pairs,
            } => {
                let r = Relation::new(
                    self.object(dom).clone(),
                    self.object(cod).clone(),
                    label_pairs(pairs)?,
                )?;
                let f = r.as_function()?;
                self.functions.insert(
                    name.clone(),
                    Named {
                        value: f,
                        dom: dom.clone(),
                        cod: cod.clone(),
                    },
                );
            }
            Statement::Rel {
                name,
                dom,
                cod,
                pairs,
            } => {
                let r = Relation::new(
                    self.object(dom).clone(),
                    self.object(cod).clone(),
                    label_pairs(pairs)?,
                )?;
                self.relations.insert(
                    name.clone(),
                    Named {
                        value: r,
                        dom: dom.clone(),
                        cod: cod.clone(),
                    },
                );
            }
            Statement::Compute(_) => {}
        }
        Ok(())
    }
}

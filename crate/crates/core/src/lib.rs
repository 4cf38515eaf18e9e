//! Canonical maps of finite sets.
//!
//! Every canonical map here is built in one of two ways: as the injection
//! induced by an inclusion of subsets, or as the surjection induced by a
//! refinement of partitions. Universal constructions (products, coproducts,
//! equalizers, coequalizers, pullbacks, pushouts) compose these, and their
//! universal properties are checked by exhaustive enumeration.

pub mod cancel;
pub mod dsl;
pub mod error;
pub mod exec;
pub mod finset;
pub mod function;
pub mod partition;
pub mod pointed;
pub mod relation;
pub mod selftest;
pub mod subset;
pub mod tagged;
pub mod unionfind;
pub mod universal;

pub use error::{Error, Predicate, Result};
pub use exec::Strategy;
pub use finset::{FinSet, Label};
pub use function::{compose, Function};
pub use partition::{DitSet, Partition};
pub use pointed::{PointedMap, PointedObj};
pub use relation::{Relation, RelationProfile};
pub use subset::Subset;
pub use universal::{ConstructionResult, Diagram, Kind, UmpReport};

//! Tensor expressions, the basic-tensor registry, relation generators and
//! simplification.

mod expr;
mod header;
mod memory;
mod registry;
pub mod relations;
mod simplify;

use alloc::string::String;
use core::fmt;

pub use expr::{FactorPart, TensorExpr};
pub use header::{DummyCounter, Factor, IndexName, TensorHeader};
pub use memory::{estimate_memory, MemoryEstimate};
pub use registry::{BasicTensor, Registry, StoredBasis, Switches, DEFAULT_MAX_DEGREE};
pub use relations::{dummy_relations, product_relations};
pub use simplify::Simplified;

/// Non-fatal diagnostics.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    AlreadyDeclared(String),
    NotATensor(String),
    /// An index name occurs more than twice in one term.
    RepeatedIndex(String),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::AlreadyDeclared(name) => write!(f, "{name} is already declared as tensor."),
            Warning::NotATensor(name) => write!(f, "{name} is not a tensor."),
            Warning::RepeatedIndex(name) => {
                write!(f, "index {name} occurs more than twice; extra occurrences stay free.")
            }
        }
    }
}

//! Canonical forms of indexed tensor expressions.
//!
//! Terms of an expression with `n` indices are unit vectors of the group
//! algebra of `S_n`. Symmetries, multiterm identities and dummy renamings
//! span a relation subspace; a reduced triangle basis of that subspace
//! ([`kbasis::KBasis`]) sieves any vector down to a unique representative.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod galg;
pub mod kbasis;
pub mod oracle;
pub mod perm;
pub mod texpr;

pub use error::{BasisError, OracleError, PermError, TensorError};
pub use galg::{Coeff, GroupVector};
pub use kbasis::KBasis;
pub use perm::{PackedPerm, Perm};
pub use texpr::{Registry, TensorExpr, TensorHeader};

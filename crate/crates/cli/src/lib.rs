//! Script runner, REPL and file formats for the tensor canonicalizer.

pub mod export;
pub mod frontend;
pub mod session;

pub use session::{CliError, Flow, Options, Session, Value};

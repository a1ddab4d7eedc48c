//! Surface syntax: lexer, parser and printer.

pub mod ast;
mod lexer;
mod parser;
pub mod printer;

use std::fmt;

pub use ast::{BasisSpec, Expr, Statement, StatementKind};
pub use parser::{parse, parse_expr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub message: String,
    /// The input ended inside a statement.
    pub incomplete: bool,
}

impl SyntaxError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> SyntaxError {
        SyntaxError {
            line,
            col,
            message: message.into(),
            incomplete: false,
        }
    }

    fn incomplete(line: usize, col: usize) -> SyntaxError {
        SyntaxError {
            line,
            col,
            message: "unexpected end of input".into(),
            incomplete: true,
        }
    }
}

impl fmt::Display for SyntaxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at line {}, column {}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for SyntaxError {}

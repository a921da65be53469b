//! The script language: a small DSL for algebras, elements, families and
//! queries, with a recursive-descent parser, a canonical pretty-printer
//! and a deterministic line-oriented runner.
//!
//! ```text
//! algebra M {
//!   atom a : II_inf(aleph 0);
//! }
//! elem p over M = { a: 1/2 };
//! family F over M described { a: naturals };
//! leq p p;
//! sup F;
//! ```
//!
//! Reports are machine-diffable: one `QUERY => RESULT` line per query, in
//! script order, rendered in canonical atom order.

mod ast;
mod lexer;
mod parser;
mod printer;
mod runner;

use std::fmt;

pub use ast::{Query, Script, Stmt};
pub use parser::parse;
pub use printer::print_script;
pub use runner::{run, RunOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    Lexical,
    Syntax,
    Binding,
    Domain,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DiagnosticKind::Lexical => "lexical error",
            DiagnosticKind::Syntax => "syntax error",
            DiagnosticKind::Binding => "binding error",
            DiagnosticKind::Domain => "domain error",
        };
        f.write_str(s)
    }
}

/// A positioned front-end error. Lines and columns are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: u32,
    pub col: u32,
    pub kind: DiagnosticKind,
    pub message: String,
}

impl Diagnostic {
    pub(crate) fn new(line: u32, col: u32, kind: DiagnosticKind, message: String) -> Self {
        Diagnostic {
            line,
            col,
            kind,
            message,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {}: {}",
            self.line, self.col, self.kind, self.message
        )
    }
}

impl std::error::Error for Diagnostic {}

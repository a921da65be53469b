//! Canonical rendering of scripts. Printing a parsed script and parsing
//! the output is the identity on the AST.

use std::fmt::Write;

use super::ast::{Query, Script, Stmt};

pub fn print_script(script: &Script) -> String {
    let mut out = String::new();
    for stmt in &script.stmts {
        match stmt {
            Stmt::Algebra { name, atoms } => {
                writeln!(out, "algebra {} {{", name).unwrap();
                for (atom, ty) in atoms {
                    writeln!(out, "  atom {} : {};", atom, ty).unwrap();
                }
                writeln!(out, "}}").unwrap();
            }
            Stmt::Elem {
                name,
                algebra,
                entries,
            } => {
                let body = entries
                    .iter()
                    .map(|(atom, v)| format!("{}: {}", atom, v))
                    .collect::<Vec<_>>()
                    .join(", ");
                writeln!(out, "elem {} over {} = {{ {} }};", name, algebra, body).unwrap();
            }
            Stmt::FamilyExplicit { name, members } => {
                writeln!(out, "family {} = [ {} ];", name, members.join(" ")).unwrap();
            }
            Stmt::FamilyDescribed {
                name,
                algebra,
                entries,
            } => {
                let body = entries
                    .iter()
                    .map(|(atom, set)| format!("{}: {}", atom, set))
                    .collect::<Vec<_>>()
                    .join(", ");
                writeln!(
                    out,
                    "family {} over {} described {{ {} }};",
                    name, algebra, body
                )
                .unwrap();
            }
            Stmt::Query(q) => {
                writeln!(out, "{};", query_text(q)).unwrap();
            }
        }
    }
    out
}

/// Canonical query rendering, without the trailing semicolon. Used both
/// by the printer and as the left-hand side of report lines.
pub(crate) fn query_text(q: &Query) -> String {
    match q {
        Query::Leq(a, b) => format!("leq {} {}", a, b),
        Query::Add(a, b) => format!("add {} {}", a, b),
        Query::Meet(a, b) => format!("meet {} {}", a, b),
        Query::Join(a, b) => format!("join {} {}", a, b),
        Query::Sup(f) => format!("sup {}", f),
        Query::Inf(f) => format!("inf {}", f),
        Query::Closure(x) => format!("closure {}", x),
        Query::InClosure(q, e) => format!("in_closure {} {}", q, e),
        Query::IsT0(m) => format!("is_T0 {}", m),
        Query::IsT1(m) => format!("is_T1 {}", m),
        Query::IsNormal(m) => format!("is_normal {}", m),
        Query::Unit(m) => format!("unit {}", m),
        Query::FormalSum(p) => format!("formal_sum {}", p),
        Query::RepSub(f) => format!("rep_sub {}", f),
        Query::RepSuper(f) => format!("rep_super {}", f),
        Query::OracleCheck(orders) => {
            let body = orders
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(", ");
            format!("oracle_check ({})", body)
        }
    }
}

//! Abstract syntax of a script, in canonical form: element and family
//! entries follow the declaration order of their algebra's atoms, values
//! are reduced, chain sets are canonical.

use crate::algebra::AtomType;
use crate::chainset::ChainSet;
use crate::extval::ExtValue;

#[derive(Clone, Debug, PartialEq)]
pub struct Script {
    pub stmts: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Stmt {
    Algebra {
        name: String,
        atoms: Vec<(String, AtomType)>,
    },
    Elem {
        name: String,
        algebra: String,
        entries: Vec<(String, ExtValue)>,
    },
    FamilyExplicit {
        name: String,
        members: Vec<String>,
    },
    FamilyDescribed {
        name: String,
        algebra: String,
        entries: Vec<(String, ChainSet)>,
    },
    Query(Query),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Query {
    Leq(String, String),
    Add(String, String),
    Meet(String, String),
    Join(String, String),
    Sup(String),
    Inf(String),
    Closure(String),
    InClosure(String, String),
    IsT0(String),
    IsT1(String),
    IsNormal(String),
    Unit(String),
    FormalSum(String),
    RepSub(String),
    RepSuper(String),
    OracleCheck(Vec<u64>),
}

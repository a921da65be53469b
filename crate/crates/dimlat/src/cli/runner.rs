//! Script execution: binds declarations into an environment and evaluates
//! queries in order, producing one `QUERY => RESULT` line each.

use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use super::ast::{Query, Script, Stmt};
use super::printer::query_text;
use crate::algebra::{unit, AlgebraDesc};
use crate::complattice::{family_inf, family_sup, FamilySpec};
use crate::dimfun::DimElement;
use crate::error::{Error, Result};
use crate::extval::ExtValue;
use crate::fdoracle::{oracle_check, rep_common_sub, rep_common_super, Shape};
use crate::qot::{
    closure_set, closure_singleton, in_closure, is_t0, is_t1, quotient_maps_normal,
    ClassSetDescriptor,
};

/// Buffered report plus an optional error; the report holds the lines of
/// every query that completed before the failure.
#[derive(Debug)]
pub struct RunOutcome {
    pub report: String,
    pub error: Option<String>,
}

impl RunOutcome {
    pub fn is_success(&self) -> bool {
        self.error.is_none()
    }
}

#[derive(Default)]
struct Env {
    algebras: BTreeMap<String, Arc<AlgebraDesc>>,
    elems: BTreeMap<String, DimElement>,
    families: BTreeMap<String, FamilySpec>,
}

/// Execute a parsed script. Statements bind names; queries emit report
/// lines in script order. The first failing query aborts the run, with
/// its index and canonical text recorded in the error.
pub fn run(script: &Script) -> RunOutcome {
    let mut env = Env::default();
    let mut report = String::new();
    let mut query_ix = 0usize;
    for stmt in &script.stmts {
        match stmt {
            Stmt::Query(q) => {
                query_ix += 1;
                match exec_query(&env, q) {
                    Ok(result) => {
                        writeln!(report, "{} => {}", query_text(q), result).unwrap();
                    }
                    Err(e) => {
                        return RunOutcome {
                            report,
                            error: Some(format!("query {} ({}): {}", query_ix, query_text(q), e)),
                        };
                    }
                }
            }
            decl => {
                if let Err(e) = bind(&mut env, decl) {
                    return RunOutcome {
                        report,
                        error: Some(format!("statement error: {}", e)),
                    };
                }
            }
        }
    }
    RunOutcome {
        report,
        error: None,
    }
}

fn bind(env: &mut Env, stmt: &Stmt) -> Result<()> {
    match stmt {
        Stmt::Algebra { name, atoms } => {
            let desc = AlgebraDesc::new(atoms.clone())?;
            env.algebras.insert(name.clone(), Arc::new(desc));
        }
        Stmt::Elem {
            name,
            algebra,
            entries,
        } => {
            let alg = env
                .algebras
                .get(algebra)
                .ok_or_else(|| Error::UnboundName(algebra.clone()))?;
            let values: Vec<ExtValue> = entries.iter().map(|(_, v)| v.clone()).collect();
            let elem = DimElement::new_cone(alg.clone(), values)?;
            env.elems.insert(name.clone(), elem);
        }
        Stmt::FamilyExplicit { name, members } => {
            let members = members
                .iter()
                .map(|m| {
                    env.elems
                        .get(m)
                        .cloned()
                        .ok_or_else(|| Error::UnboundName(m.clone()))
                })
                .collect::<Result<Vec<_>>>()?;
            env.families
                .insert(name.clone(), FamilySpec::explicit(members)?);
        }
        Stmt::FamilyDescribed {
            name,
            algebra,
            entries,
        } => {
            let alg = env
                .algebras
                .get(algebra)
                .ok_or_else(|| Error::UnboundName(algebra.clone()))?;
            let sets = entries.iter().map(|(_, s)| s.clone()).collect();
            env.families
                .insert(name.clone(), FamilySpec::described(alg.clone(), sets)?);
        }
        Stmt::Query(_) => unreachable!("queries are handled by the caller"),
    }
    Ok(())
}

fn get_elem<'a>(env: &'a Env, name: &str) -> Result<&'a DimElement> {
    env.elems
        .get(name)
        .ok_or_else(|| Error::UnboundName(name.to_string()))
}

fn get_family<'a>(env: &'a Env, name: &str) -> Result<&'a FamilySpec> {
    env.families
        .get(name)
        .ok_or_else(|| Error::UnboundName(name.to_string()))
}

fn get_algebra<'a>(env: &'a Env, name: &str) -> Result<&'a Arc<AlgebraDesc>> {
    env.algebras
        .get(name)
        .ok_or_else(|| Error::UnboundName(name.to_string()))
}

fn descriptor_for(env: &Env, name: &str) -> Result<ClassSetDescriptor> {
    if let Some(e) = env.elems.get(name) {
        return ClassSetDescriptor::explicit(vec![e.clone()]);
    }
    match get_family(env, name)? {
        FamilySpec::Explicit(members) => ClassSetDescriptor::explicit(members.clone()),
        FamilySpec::Described { algebra, sets } => {
            ClassSetDescriptor::product(algebra.clone(), sets.clone())
        }
    }
}

fn exec_query(env: &Env, q: &Query) -> Result<String> {
    Ok(match q {
        Query::Leq(a, b) => get_elem(env, a)?.leq(get_elem(env, b)?)?.to_string(),
        Query::Add(a, b) => get_elem(env, a)?.add(get_elem(env, b)?)?.to_string(),
        Query::Meet(a, b) => get_elem(env, a)?.meet(get_elem(env, b)?)?.to_string(),
        Query::Join(a, b) => get_elem(env, a)?.join(get_elem(env, b)?)?.to_string(),
        Query::Sup(f) => family_sup(get_family(env, f)?)?.to_string(),
        Query::Inf(f) => family_inf(get_family(env, f)?)?.to_string(),
        Query::Closure(x) => {
            if let Some(e) = env.elems.get(x) {
                closure_singleton(e)?.to_string()
            } else {
                closure_set(&descriptor_for(env, x)?)?.to_string()
            }
        }
        Query::InClosure(p, set) => {
            in_closure(get_elem(env, p)?, &descriptor_for(env, set)?)?.to_string()
        }
        Query::IsT0(m) => is_t0(get_algebra(env, m)?).to_string(),
        Query::IsT1(m) => is_t1(get_algebra(env, m)?).to_string(),
        Query::IsNormal(m) => quotient_maps_normal(get_algebra(env, m)?).to_string(),
        Query::Unit(m) => unit(get_algebra(env, m)?).to_string(),
        Query::FormalSum(p) => get_elem(env, p)?.to_formal_sum().to_string(),
        Query::RepSub(f) | Query::RepSuper(f) => {
            let family = get_family(env, f)?;
            let members = match family {
                FamilySpec::Explicit(members) => members.as_slice(),
                FamilySpec::Described { .. } => {
                    return Err(Error::RepNeedsExplicit);
                }
            };
            let base = family.algebra();
            let bound = if matches!(q, Query::RepSub(_)) {
                rep_common_sub(base, members)?
            } else {
                rep_common_super(base, members)?
            };
            format!("[index {}] {}", bound.amplification.index(), bound.class)
        }
        Query::OracleCheck(orders) => {
            let shape = Shape::new(orders.clone())?;
            let classes = oracle_check(&shape)?;
            format!("OK ({} classes, all operations agree)", classes)
        }
    })
}

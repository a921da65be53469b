//! Recursive-descent parser with static binding and domain validation.
//!
//! Parsing resolves every name, checks element values against the cone
//! domains of their atoms, and canonicalizes entry order, so a parsed
//! script always executes cleanly up to genuinely value-dependent errors
//! (unsupported closure fragments, representation validation).

use std::collections::BTreeMap;
use std::str::FromStr;
use std::sync::Arc;

use num::{BigInt, BigRational};

use super::ast::{Query, Script, Stmt};
use super::lexer::{lex, Tok, Token};
use super::{Diagnostic, DiagnosticKind};
use crate::algebra::{AlgebraDesc, AtomType};
use crate::chainset::{ChainSet, Interval};
use crate::dimfun::DimElement;
use crate::extval::ExtValue;

const KEYWORDS: &[&str] = &[
    "algebra",
    "atom",
    "elem",
    "over",
    "family",
    "described",
    "naturals",
    "aleph",
    "inf",
    "I_fin",
    "I_inf",
    "II_1",
    "II_inf",
    "III",
    "leq",
    "add",
    "meet",
    "join",
    "sup",
    "closure",
    "in_closure",
    "is_T0",
    "is_T1",
    "is_normal",
    "unit",
    "formal_sum",
    "rep_sub",
    "rep_super",
    "oracle_check",
];

const QUERY_KEYWORDS: &[&str] = &[
    "leq",
    "add",
    "meet",
    "join",
    "sup",
    "inf",
    "closure",
    "in_closure",
    "is_T0",
    "is_T1",
    "is_normal",
    "unit",
    "formal_sum",
    "rep_sub",
    "rep_super",
    "oracle_check",
];

fn is_keyword(s: &str) -> bool {
    KEYWORDS.contains(&s)
}

#[derive(Clone, Debug)]
enum BoundFamily {
    Explicit { algebra: Arc<AlgebraDesc> },
    Described { algebra: Arc<AlgebraDesc> },
}

impl BoundFamily {
    fn algebra(&self) -> &Arc<AlgebraDesc> {
        match self {
            BoundFamily::Explicit { algebra } | BoundFamily::Described { algebra } => algebra,
        }
    }
}

#[derive(Default)]
struct Binder {
    algebras: BTreeMap<String, Arc<AlgebraDesc>>,
    elems: BTreeMap<String, DimElement>,
    families: BTreeMap<String, BoundFamily>,
}

impl Binder {
    fn is_bound(&self, name: &str) -> bool {
        self.algebras.contains_key(name)
            || self.elems.contains_key(name)
            || self.families.contains_key(name)
    }
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    end: (u32, u32),
    binder: Binder,
}

type PResult<T> = Result<T, Diagnostic>;

/// Parse and statically validate a script.
pub fn parse(text: &str) -> Result<Script, Diagnostic> {
    let (toks, end) = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end,
        binder: Binder::default(),
    };
    let mut stmts = Vec::new();
    while !p.at_end() {
        stmts.push(p.statement()?);
    }
    Ok(Script { stmts })
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn here(&self) -> (u32, u32) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.col))
            .unwrap_or(self.end)
    }

    fn err(&self, kind: DiagnosticKind, message: String) -> Diagnostic {
        let (line, col) = self.here();
        Diagnostic::new(line, col, kind, message)
    }

    fn err_at(&self, at: (u32, u32), kind: DiagnosticKind, message: String) -> Diagnostic {
        Diagnostic::new(at.0, at.1, kind, message)
    }

    fn syntax(&self, message: String) -> Diagnostic {
        self.err(DiagnosticKind::Syntax, message)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, tok: Tok) -> PResult<Token> {
        match self.peek() {
            Some(t) if *t == tok => Ok(self.bump().expect("peeked")),
            Some(t) => Err(self.syntax(format!(
                "expected {}, found {}",
                tok.describe(),
                t.describe()
            ))),
            None => Err(self.syntax(format!("expected {}, found end of input", tok.describe()))),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> PResult<Token> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => Ok(self.bump().expect("peeked")),
            Some(t) => Err(self.syntax(format!("expected `{}`, found {}", kw, t.describe()))),
            None => Err(self.syntax(format!("expected `{}`, found end of input", kw))),
        }
    }

    fn peek_keyword(&self, kw: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(s)) if s == kw)
    }

    /// A user-defined name: an identifier that is not a reserved word.
    fn name(&mut self, what: &str) -> PResult<(String, (u32, u32))> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                if is_keyword(s) {
                    let msg = format!("`{}` is a reserved word and cannot name {}", s, what);
                    Err(self.syntax(msg))
                } else {
                    let t = self.bump().expect("peeked");
                    match t.tok {
                        Tok::Ident(s) => Ok((s, (t.line, t.col))),
                        _ => unreachable!(),
                    }
                }
            }
            Some(t) => Err(self.syntax(format!(
                "expected a name for {}, found {}",
                what,
                t.describe()
            ))),
            None => Err(self.syntax(format!("expected a name for {}, found end of input", what))),
        }
    }

    fn integer<T: FromStr>(&mut self, what: &str) -> PResult<(T, (u32, u32))> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let t = self.bump().expect("peeked");
                let s = match &t.tok {
                    Tok::Int(s) => s.clone(),
                    _ => unreachable!(),
                };
                match s.parse::<T>() {
                    Ok(v) => Ok((v, (t.line, t.col))),
                    Err(_) => Err(self.err_at(
                        (t.line, t.col),
                        DiagnosticKind::Domain,
                        format!("{} `{}` is out of range", what, s),
                    )),
                }
            }
            Some(t) => Err(self.syntax(format!("expected {}, found {}", what, t.describe()))),
            None => Err(self.syntax(format!("expected {}, found end of input", what))),
        }
    }

    fn big_integer(&mut self, what: &str) -> PResult<(BigInt, (u32, u32))> {
        match self.peek() {
            Some(Tok::Int(_)) => {
                let t = self.bump().expect("peeked");
                let s = match &t.tok {
                    Tok::Int(s) => s.clone(),
                    _ => unreachable!(),
                };
                let v = BigInt::from_str(&s).expect("digits");
                Ok((v, (t.line, t.col)))
            }
            Some(t) => Err(self.syntax(format!("expected {}, found {}", what, t.describe()))),
            None => Err(self.syntax(format!("expected {}, found end of input", what))),
        }
    }

    /// `INT` or `INT / INT`.
    fn rational(&mut self) -> PResult<(BigRational, (u32, u32))> {
        let (numer, at) = self.big_integer("a numerator")?;
        if matches!(self.peek(), Some(Tok::Slash)) {
            self.bump();
            let (denom, dat) = self.big_integer("a denominator")?;
            if denom == BigInt::from(0) {
                return Err(self.err_at(dat, DiagnosticKind::Domain, "zero denominator".into()));
            }
            Ok((BigRational::new(numer, denom), at))
        } else {
            Ok((BigRational::from_integer(numer), at))
        }
    }

    /// `aleph INT`, validated against the configured maximum.
    fn aleph(&mut self) -> PResult<(u32, (u32, u32))> {
        self.expect_keyword("aleph")?;
        let (level, at) = self.integer::<u32>("an aleph level")?;
        if let Err(e) = ExtValue::aleph(level) {
            return Err(self.err_at(at, DiagnosticKind::Domain, e.to_string()));
        }
        Ok((level, at))
    }

    /// `RATIONAL | INT | aleph INT`.
    fn value(&mut self) -> PResult<(ExtValue, (u32, u32))> {
        if self.peek_keyword("aleph") {
            let at = self.here();
            let (level, _) = self.aleph()?;
            Ok((ExtValue::Aleph(level), at))
        } else {
            let (q, at) = self.rational()?;
            Ok((ExtValue::Fin(q), at))
        }
    }

    fn atom_type(&mut self) -> PResult<AtomType> {
        let at = self.here();
        let tag = match self.bump() {
            Some(Token {
                tok: Tok::Ident(s), ..
            }) => s,
            Some(t) => {
                return Err(self.err_at(
                    (t.line, t.col),
                    DiagnosticKind::Syntax,
                    format!("expected an atom type, found {}", t.tok.describe()),
                ))
            }
            None => return Err(self.syntax("expected an atom type, found end of input".into())),
        };
        let ty = match tag.as_str() {
            "II_1" => AtomType::II1,
            "I_fin" => {
                self.expect(Tok::LParen)?;
                let (n, nat) = self.integer::<u64>("a matrix order")?;
                self.expect(Tok::RParen)?;
                if n == 0 {
                    return Err(self.err_at(
                        nat,
                        DiagnosticKind::Domain,
                        "matrix order of a finite type I atom must be at least 1".into(),
                    ));
                }
                AtomType::IFin(n)
            }
            "I_inf" | "II_inf" | "III" => {
                self.expect(Tok::LParen)?;
                let (level, _) = self.aleph()?;
                self.expect(Tok::RParen)?;
                match tag.as_str() {
                    "I_inf" => AtomType::IInf(level),
                    "II_inf" => AtomType::IIInf(level),
                    _ => AtomType::III(level),
                }
            }
            other => {
                return Err(self.err_at(
                    at,
                    DiagnosticKind::Syntax,
                    format!("`{}` is not an atom type", other),
                ))
            }
        };
        Ok(ty)
    }

    fn bindable_name(&mut self, what: &str) -> PResult<(String, (u32, u32))> {
        let (name, at) = self.name(what)?;
        if self.binder.is_bound(&name) {
            return Err(self.err_at(
                at,
                DiagnosticKind::Binding,
                format!("name `{}` is already bound", name),
            ));
        }
        Ok((name, at))
    }

    fn lookup_algebra(&self, name: &str, at: (u32, u32)) -> PResult<Arc<AlgebraDesc>> {
        match self.binder.algebras.get(name) {
            Some(a) => Ok(a.clone()),
            None => Err(self.err_at(
                at,
                DiagnosticKind::Binding,
                format!("`{}` is not a bound algebra", name),
            )),
        }
    }

    fn lookup_elem(&self, name: &str, at: (u32, u32)) -> PResult<&DimElement> {
        match self.binder.elems.get(name) {
            Some(e) => Ok(e),
            None => Err(self.err_at(
                at,
                DiagnosticKind::Binding,
                format!("`{}` is not a bound element", name),
            )),
        }
    }

    fn statement(&mut self) -> PResult<Stmt> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == "algebra" => self.algebra_stmt(),
            Some(Tok::Ident(s)) if s == "elem" => self.elem_stmt(),
            Some(Tok::Ident(s)) if s == "family" => self.family_stmt(),
            Some(Tok::Ident(s)) if QUERY_KEYWORDS.contains(&s.as_str()) => {
                let q = self.query()?;
                Ok(Stmt::Query(q))
            }
            Some(t) => Err(self.syntax(format!(
                "expected a statement (algebra, elem, family, or a query), found {}",
                t.describe()
            ))),
            None => Err(self.syntax("expected a statement, found end of input".into())),
        }
    }

    fn algebra_stmt(&mut self) -> PResult<Stmt> {
        self.expect_keyword("algebra")?;
        let (name, name_at) = self.bindable_name("an algebra")?;
        self.expect(Tok::LBrace)?;
        let mut atoms: Vec<(String, AtomType)> = Vec::new();
        loop {
            let at = self.here();
            self.expect_keyword("atom")?;
            let (atom_name, atom_at) = self.name("an atom")?;
            if atoms.iter().any(|(n, _)| n == &atom_name) {
                return Err(self.err_at(
                    atom_at,
                    DiagnosticKind::Binding,
                    format!("duplicate atom id `{}`", atom_name),
                ));
            }
            self.expect(Tok::Colon)?;
            let ty = self.atom_type()?;
            self.expect(Tok::Semi)?;
            let _ = at;
            atoms.push((atom_name, ty));
            if matches!(self.peek(), Some(Tok::RBrace)) {
                break;
            }
        }
        self.expect(Tok::RBrace)?;
        let desc = AlgebraDesc::new(atoms.clone())
            .map_err(|e| self.err_at(name_at, DiagnosticKind::Domain, e.to_string()))?;
        self.binder.algebras.insert(name.clone(), Arc::new(desc));
        Ok(Stmt::Algebra { name, atoms })
    }

    /// Shared by `elem` and described `family`: a brace-enclosed total map
    /// from atom names to parsed payloads.
    fn atom_map<T>(
        &mut self,
        algebra: &Arc<AlgebraDesc>,
        mut parse_payload: impl FnMut(&mut Self, usize) -> PResult<T>,
    ) -> PResult<Vec<(String, T)>> {
        self.expect(Tok::LBrace)?;
        let mut entries: Vec<(usize, String, T)> = Vec::new();
        loop {
            let (atom_name, atom_at) = self.name("an atom")?;
            let ix = algebra.atom_index(&atom_name).ok_or_else(|| {
                self.err_at(
                    atom_at,
                    DiagnosticKind::Binding,
                    format!("unknown atom id `{}`", atom_name),
                )
            })?;
            if entries.iter().any(|(i, _, _)| *i == ix) {
                return Err(self.err_at(
                    atom_at,
                    DiagnosticKind::Binding,
                    format!("atom `{}` is listed twice", atom_name),
                ));
            }
            self.expect(Tok::Colon)?;
            let payload = parse_payload(self, ix)?;
            entries.push((ix, atom_name, payload));
            if matches!(self.peek(), Some(Tok::Comma)) {
                self.bump();
            }
            if matches!(self.peek(), Some(Tok::RBrace)) {
                break;
            }
        }
        let brace = self.expect(Tok::RBrace)?;
        if entries.len() != algebra.atom_count() {
            let missing: Vec<&str> = algebra
                .atoms()
                .iter()
                .enumerate()
                .filter(|(ix, _)| !entries.iter().any(|(i, _, _)| i == ix))
                .map(|(_, a)| a.name.as_str())
                .collect();
            return Err(self.err_at(
                (brace.line, brace.col),
                DiagnosticKind::Binding,
                format!("missing value for atom `{}`", missing.join("`, `")),
            ));
        }
        entries.sort_by_key(|(ix, _, _)| *ix);
        Ok(entries.into_iter().map(|(_, n, p)| (n, p)).collect())
    }

    fn elem_stmt(&mut self) -> PResult<Stmt> {
        self.expect_keyword("elem")?;
        let (name, _) = self.bindable_name("an element")?;
        self.expect_keyword("over")?;
        let (alg_name, alg_at) = self.name("an algebra")?;
        let algebra = self.lookup_algebra(&alg_name, alg_at)?;
        self.expect(Tok::Eq)?;
        let entries = self.atom_map(&algebra, |p, ix| {
            let (v, vat) = p.value()?;
            let probe = DimElement::new_unchecked(algebra.clone(), {
                let mut values = vec![ExtValue::zero(); algebra.atom_count()];
                values[ix] = v.clone();
                values
            });
            if let Err(e) = probe.check_cone_class() {
                return Err(p.err_at(vat, DiagnosticKind::Domain, e.to_string()));
            }
            Ok(v)
        })?;
        self.expect(Tok::Semi)?;
        let values = entries.iter().map(|(_, v)| v.clone()).collect();
        let elem = DimElement::new_unchecked(algebra, values);
        self.binder.elems.insert(name.clone(), elem);
        Ok(Stmt::Elem {
            name,
            algebra: alg_name,
            entries,
        })
    }

    fn chainset(&mut self, start: (u32, u32)) -> PResult<ChainSet> {
        let mut intervals = Vec::new();
        let mut points = Vec::new();
        let mut naturals = false;
        let mut alephs = Vec::new();
        let mut any = false;
        loop {
            match self.peek() {
                Some(Tok::LParen) | Some(Tok::LBracket) => {
                    let at = self.here();
                    let lo_closed = matches!(self.peek(), Some(Tok::LBracket));
                    self.bump();
                    let (lo, _) = self.rational()?;
                    self.expect(Tok::Comma)?;
                    let iv = if self.peek_keyword("inf") {
                        self.bump();
                        self.expect(Tok::RParen)?;
                        Interval::unbounded_above(lo, lo_closed)
                    } else {
                        let (hi, _) = self.rational()?;
                        let hi_closed = match self.peek() {
                            Some(Tok::RParen) => false,
                            Some(Tok::RBracket) => true,
                            _ => {
                                return Err(
                                    self.syntax("expected `)` or `]` to close an interval".into())
                                )
                            }
                        };
                        self.bump();
                        Interval::bounded(lo, lo_closed, hi, hi_closed)
                    };
                    let iv =
                        iv.map_err(|e| self.err_at(at, DiagnosticKind::Domain, e.to_string()))?;
                    intervals.push(iv);
                }
                Some(Tok::LBrace) => {
                    self.bump();
                    if !matches!(self.peek(), Some(Tok::RBrace)) {
                        loop {
                            let (q, _) = self.rational()?;
                            points.push(q);
                            if matches!(self.peek(), Some(Tok::Comma)) {
                                self.bump();
                            } else {
                                break;
                            }
                        }
                    }
                    self.expect(Tok::RBrace)?;
                }
                Some(Tok::Ident(s)) if s == "naturals" => {
                    self.bump();
                    naturals = true;
                }
                Some(Tok::Ident(s)) if s == "aleph" => {
                    let (level, _) = self.aleph()?;
                    alephs.push(level);
                }
                _ => break,
            }
            any = true;
        }
        if !any {
            return Err(
                self.syntax("expected a chain set (intervals, {points}, naturals, alephs)".into())
            );
        }
        ChainSet::build(intervals, points, naturals, alephs)
            .map_err(|e| self.err_at(start, DiagnosticKind::Domain, e.to_string()))
    }

    fn family_stmt(&mut self) -> PResult<Stmt> {
        self.expect_keyword("family")?;
        let (name, _) = self.bindable_name("a family")?;
        if matches!(self.peek(), Some(Tok::Eq)) {
            // explicit: family NAME = [ member+ ];
            self.bump();
            self.expect(Tok::LBracket)?;
            let mut members = Vec::new();
            let mut algebra: Option<Arc<AlgebraDesc>> = None;
            loop {
                let (member, at) = self.name("an element")?;
                let elem = self.lookup_elem(&member, at)?;
                match &algebra {
                    None => algebra = Some(elem.algebra().clone()),
                    Some(a) => {
                        if !crate::algebra::same_algebra(a, elem.algebra()) {
                            return Err(self.err_at(
                                at,
                                DiagnosticKind::Binding,
                                format!("element `{}` lives over a different algebra", member),
                            ));
                        }
                    }
                }
                members.push(member);
                if matches!(self.peek(), Some(Tok::RBracket)) {
                    break;
                }
            }
            self.expect(Tok::RBracket)?;
            self.expect(Tok::Semi)?;
            self.binder.families.insert(
                name.clone(),
                BoundFamily::Explicit {
                    algebra: algebra.expect("nonempty member list"),
                },
            );
            Ok(Stmt::FamilyExplicit { name, members })
        } else {
            // described: family NAME over ALGEBRA described { atom: chainset, ... };
            self.expect_keyword("over")?;
            let (alg_name, alg_at) = self.name("an algebra")?;
            let algebra = self.lookup_algebra(&alg_name, alg_at)?;
            self.expect_keyword("described")?;
            let entries = self.atom_map(&algebra, |p, ix| {
                let at = p.here();
                let set = p.chainset(at)?;
                let atom = algebra.atom(ix);
                if set.is_empty() {
                    return Err(p.err_at(
                        at,
                        DiagnosticKind::Domain,
                        format!("described set for atom `{}` is empty", atom.name),
                    ));
                }
                if let Err(e) = set.fits_cone_domain(&atom.ty) {
                    let reason = match e {
                        crate::error::Error::DomainViolation { reason, .. } => reason,
                        other => other.to_string(),
                    };
                    return Err(p.err_at(
                        at,
                        DiagnosticKind::Domain,
                        format!("atom `{}`: {}", atom.name, reason),
                    ));
                }
                Ok(set)
            })?;
            self.expect(Tok::Semi)?;
            self.binder
                .families
                .insert(name.clone(), BoundFamily::Described { algebra });
            Ok(Stmt::FamilyDescribed {
                name,
                algebra: alg_name,
                entries,
            })
        }
    }

    fn elem_arg(&mut self) -> PResult<(String, DimElement)> {
        let (name, at) = self.name("an element")?;
        let e = self.lookup_elem(&name, at)?.clone();
        Ok((name, e))
    }

    fn elem_pair(&mut self) -> PResult<(String, String)> {
        let (a, ea) = self.elem_arg()?;
        let at = self.here();
        let (b, eb) = self.elem_arg()?;
        if !crate::algebra::same_algebra(ea.algebra(), eb.algebra()) {
            return Err(self.err_at(
                at,
                DiagnosticKind::Binding,
                format!("elements `{}` and `{}` live over different algebras", a, b),
            ));
        }
        Ok((a, b))
    }

    fn family_arg(&mut self) -> PResult<(String, BoundFamily)> {
        let (name, at) = self.name("a family")?;
        match self.binder.families.get(&name) {
            Some(f) => Ok((name, f.clone())),
            None => Err(self.err_at(
                at,
                DiagnosticKind::Binding,
                format!("`{}` is not a bound family", name),
            )),
        }
    }

    fn algebra_arg(&mut self) -> PResult<String> {
        let (name, at) = self.name("an algebra")?;
        self.lookup_algebra(&name, at)?;
        Ok(name)
    }

    fn query(&mut self) -> PResult<Query> {
        let kw = match self.bump() {
            Some(Token {
                tok: Tok::Ident(s), ..
            }) => s,
            _ => unreachable!("dispatched on a query keyword"),
        };
        let q = match kw.as_str() {
            "leq" => {
                let (a, b) = self.elem_pair()?;
                Query::Leq(a, b)
            }
            "add" => {
                let (a, b) = self.elem_pair()?;
                Query::Add(a, b)
            }
            "meet" => {
                let (a, b) = self.elem_pair()?;
                Query::Meet(a, b)
            }
            "join" => {
                let (a, b) = self.elem_pair()?;
                Query::Join(a, b)
            }
            "sup" => Query::Sup(self.family_arg()?.0),
            "inf" => Query::Inf(self.family_arg()?.0),
            "closure" => {
                let (name, at) = self.name("an element or family")?;
                if self.binder.elems.contains_key(&name) || self.binder.families.contains_key(&name)
                {
                    Query::Closure(name)
                } else {
                    return Err(self.err_at(
                        at,
                        DiagnosticKind::Binding,
                        format!("`{}` is not a bound element or family", name),
                    ));
                }
            }
            "in_closure" => {
                let (q_name, q_elem) = self.elem_arg()?;
                let (set_name, set_at) = self.name("an element or family")?;
                let set_algebra = if let Some(e) = self.binder.elems.get(&set_name) {
                    e.algebra().clone()
                } else if let Some(f) = self.binder.families.get(&set_name) {
                    f.algebra().clone()
                } else {
                    return Err(self.err_at(
                        set_at,
                        DiagnosticKind::Binding,
                        format!("`{}` is not a bound element or family", set_name),
                    ));
                };
                if !crate::algebra::same_algebra(q_elem.algebra(), &set_algebra) {
                    return Err(self.err_at(
                        set_at,
                        DiagnosticKind::Binding,
                        format!(
                            "`{}` and `{}` live over different algebras",
                            q_name, set_name
                        ),
                    ));
                }
                Query::InClosure(q_name, set_name)
            }
            "is_T0" => Query::IsT0(self.algebra_arg()?),
            "is_T1" => Query::IsT1(self.algebra_arg()?),
            "is_normal" => Query::IsNormal(self.algebra_arg()?),
            "unit" => Query::Unit(self.algebra_arg()?),
            "formal_sum" => Query::FormalSum(self.elem_arg()?.0),
            "rep_sub" | "rep_super" => {
                let (name, fam) = self.family_arg()?;
                if matches!(fam, BoundFamily::Described { .. }) {
                    return Err(self.err(
                        DiagnosticKind::Binding,
                        format!("`{}` is a described family; representation bounds need an explicit one", name),
                    ));
                }
                if kw == "rep_sub" {
                    Query::RepSub(name)
                } else {
                    Query::RepSuper(name)
                }
            }
            "oracle_check" => {
                self.expect(Tok::LParen)?;
                let mut orders = Vec::new();
                loop {
                    let (n, nat) = self.integer::<u64>("a matrix order")?;
                    if n == 0 {
                        return Err(self.err_at(
                            nat,
                            DiagnosticKind::Domain,
                            "matrix orders must be at least 1".into(),
                        ));
                    }
                    orders.push(n);
                    if matches!(self.peek(), Some(Tok::Comma)) {
                        self.bump();
                    } else {
                        break;
                    }
                }
                self.expect(Tok::RParen)?;
                Query::OracleCheck(orders)
            }
            other => unreachable!("unhandled query keyword {}", other),
        };
        self.expect(Tok::Semi)?;
        Ok(q)
    }
}

// SPDX-License-Identifier: Apache-2.0

//! The system-description language.
//!
//! ```text
//! document := "system" IDENT? "{" decl* "}"
//! decl     := "set" IDENT "=" expr
//! expr     := term ("+" term)*
//! term     := INT "*" term | atom
//! atom     := "{" INT ("," INT)* "}" | "[0," INT ")" | "N0" | "(" expr ")"
//! ```
//!
//! `#` starts a comment that runs to the end of the line. Labels of the form
//! `_k` denote positions.

use std::collections::BTreeSet;
use std::fmt;

use addsys_core::{AdditiveSystem, Bound, Label, Member, SetError, StructuredSet, SystemError};
use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{line}:{column}: expected {expected}, found {found}")]
    Syntax {
        line: usize,
        column: usize,
        expected: String,
        found: String,
    },
    #[error("{line}:{column}: label {label} declared twice")]
    DuplicateLabel {
        label: String,
        line: usize,
        column: usize,
    },
    #[error("{line}:{column}: finite set does not contain 0")]
    NonZeroBase { line: usize, column: usize },
    #[error("{line}:{column}: dilation by 0")]
    ZeroScale { line: usize, column: usize },
    #[error("{line}:{column}: empty interval [0,0)")]
    EmptyInterval { line: usize, column: usize },
    #[error(transparent)]
    Set(#[from] SetError),
    #[error(transparent)]
    System(#[from] SystemError),
}

/// Syntax tree of a set expression; each node is one set constructor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetExpr {
    Finite(Vec<BigUint>),
    Interval(BigUint),
    Tail,
    Dilated { scale: BigUint, inner: Box<SetExpr> },
    Sum(Vec<SetExpr>),
}

impl SetExpr {
    /// Builds the set, checking every sum for unique representation below
    /// `bound`.
    pub fn to_set(&self, bound: Bound) -> Result<StructuredSet, DslError> {
        Ok(match self {
            SetExpr::Finite(v) => StructuredSet::finite(v.iter().cloned())?,
            SetExpr::Interval(g) => StructuredSet::interval(g.clone())?,
            SetExpr::Tail => StructuredSet::tail(),
            SetExpr::Dilated { scale, inner } => {
                StructuredSet::dilated(scale.clone(), inner.to_set(bound)?)?
            }
            SetExpr::Sum(parts) => StructuredSet::direct_sum(
                parts.iter().map(|p| p.to_set(bound)).collect::<Result<_, _>>()?,
                bound,
            )?,
        })
    }
}

impl fmt::Display for SetExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let grouped = |e: &SetExpr, f: &mut fmt::Formatter<'_>| match e {
            SetExpr::Sum(_) => write!(f, "({e})"),
            _ => write!(f, "{e}"),
        };
        match self {
            SetExpr::Finite(v) => {
                let items: Vec<String> = v.iter().map(ToString::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            SetExpr::Interval(g) => write!(f, "[0,{g})"),
            SetExpr::Tail => f.write_str("N0"),
            SetExpr::Dilated { scale, inner } => {
                write!(f, "{scale} * ")?;
                grouped(inner, f)
            }
            SetExpr::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    grouped(p, f)?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Declaration {
    pub label: String,
    pub expr: SetExpr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDocument {
    pub name: Option<String>,
    pub declarations: Vec<Declaration>,
}

impl SystemDocument {
    pub fn to_system(&self, bound: Bound) -> Result<AdditiveSystem, DslError> {
        let members = self
            .declarations
            .iter()
            .map(|d| Ok(Member::new(Label::from(d.label.as_str()), d.expr.to_set(bound)?)))
            .collect::<Result<Vec<_>, DslError>>()?;
        Ok(AdditiveSystem::new(members)?)
    }

    pub fn from_system(name: Option<String>, sys: &AdditiveSystem) -> Self {
        SystemDocument {
            name,
            declarations: sys
                .members()
                .iter()
                .map(|m| Declaration {
                    label: m.label.to_string(),
                    expr: expr_of(&m.set),
                })
                .collect(),
        }
    }
}

fn expr_of(s: &StructuredSet) -> SetExpr {
    match s {
        StructuredSet::Finite(v) => SetExpr::Finite(v.clone()),
        StructuredSet::Interval(g) => SetExpr::Interval(g.clone()),
        StructuredSet::Tail => SetExpr::Tail,
        StructuredSet::Dilated { scale, inner } => SetExpr::Dilated {
            scale: scale.clone(),
            inner: Box::new(expr_of(inner)),
        },
        StructuredSet::DirectSum(parts) => SetExpr::Sum(parts.iter().map(expr_of).collect()),
    }
}

impl fmt::Display for SystemDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(n) => writeln!(f, "system {n} {{")?,
            None => writeln!(f, "system {{")?,
        }
        for d in &self.declarations {
            writeln!(f, "  set {} = {}", d.label, d.expr)?;
        }
        f.write_str("}\n")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigUint),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>, DslError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                bump(&mut chars);
            }
        } else if c.is_whitespace() {
            bump(&mut chars);
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(char::is_ascii_digit) {
                s.push(bump(&mut chars));
            }
            out.push(Spanned {
                tok: Tok::Int(s.parse().expect("digits")),
                line: l,
                column: col,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars
                .peek()
                .is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_')
            {
                s.push(bump(&mut chars));
            }
            out.push(Spanned {
                tok: Tok::Ident(s),
                line: l,
                column: col,
            });
        } else if "{}[](),+*=".contains(c) {
            bump(&mut chars);
            out.push(Spanned {
                tok: Tok::Sym(c),
                line: l,
                column: col,
            });
        } else {
            return Err(DslError::Syntax {
                line: l,
                column: col,
                expected: "a token".into(),
                found: format!("`{c}`"),
            });
        }
    }
    out.push(Spanned {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, DslError> {
        let t = self.peek();
        Err(DslError::Syntax {
            line: t.line,
            column: t.column,
            expected: expected.into(),
            found: t.tok.to_string(),
        })
    }

    fn sym(&mut self, c: char) -> Result<Spanned, DslError> {
        if self.peek().tok == Tok::Sym(c) {
            Ok(self.next())
        } else {
            self.fail(&format!("`{c}`"))
        }
    }

    fn keyword(&mut self, word: &str) -> Result<(), DslError> {
        if self.peek().tok == Tok::Ident(word.into()) {
            self.next();
            Ok(())
        } else {
            self.fail(&format!("`{word}`"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize, usize), DslError> {
        match self.peek().tok.clone() {
            Tok::Ident(s) => {
                let t = self.next();
                Ok((s, t.line, t.column))
            }
            _ => self.fail(what),
        }
    }

    fn int(&mut self) -> Result<BigUint, DslError> {
        match self.peek().tok.clone() {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            _ => self.fail("an integer"),
        }
    }

    fn document(&mut self) -> Result<SystemDocument, DslError> {
        self.keyword("system")?;
        let name = match self.peek().tok.clone() {
            Tok::Ident(s) => {
                self.next();
                Some(s)
            }
            _ => None,
        };
        self.sym('{')?;
        let mut declarations = Vec::new();
        let mut seen = BTreeSet::new();
        while self.peek().tok != Tok::Sym('}') {
            if self.peek().tok != Tok::Ident("set".into()) {
                return self.fail("`set` or `}`");
            }
            self.next();
            let (label, line, column) = self.ident("a label")?;
            if !seen.insert(label.clone()) {
                return Err(DslError::DuplicateLabel {
                    label,
                    line,
                    column,
                });
            }
            self.sym('=')?;
            let expr = self.expr()?;
            declarations.push(Declaration { label, expr });
        }
        self.sym('}')?;
        self.end()?;
        Ok(SystemDocument { name, declarations })
    }

    fn end(&self) -> Result<(), DslError> {
        if self.peek().tok == Tok::Eof {
            Ok(())
        } else {
            self.fail("end of input")
        }
    }

    fn expr(&mut self) -> Result<SetExpr, DslError> {
        let mut terms = vec![self.term()?];
        while self.peek().tok == Tok::Sym('+') {
            self.next();
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            SetExpr::Sum(terms)
        })
    }

    fn term(&mut self) -> Result<SetExpr, DslError> {
        if let Tok::Int(_) = self.peek().tok {
            let at = self.peek().clone();
            let scale = self.int()?;
            self.sym('*')?;
            if scale.is_zero() {
                return Err(DslError::ZeroScale {
                    line: at.line,
                    column: at.column,
                });
            }
            let inner = self.term()?;
            return Ok(SetExpr::Dilated {
                scale,
                inner: Box::new(inner),
            });
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<SetExpr, DslError> {
        let at = self.peek().clone();
        match &at.tok {
            Tok::Sym('{') => {
                self.next();
                let mut v = vec![self.int()?];
                while self.peek().tok == Tok::Sym(',') {
                    self.next();
                    v.push(self.int()?);
                }
                self.sym('}')?;
                if !v.iter().any(Zero::is_zero) {
                    return Err(DslError::NonZeroBase {
                        line: at.line,
                        column: at.column,
                    });
                }
                Ok(SetExpr::Finite(v))
            }
            Tok::Sym('[') => {
                self.next();
                if self.peek().tok != Tok::Int(BigUint::zero()) {
                    return self.fail("`0`");
                }
                self.next();
                self.sym(',')?;
                let g = self.int()?;
                self.sym(')')?;
                if g.is_zero() {
                    return Err(DslError::EmptyInterval {
                        line: at.line,
                        column: at.column,
                    });
                }
                Ok(SetExpr::Interval(g))
            }
            Tok::Ident(s) if s == "N0" => {
                self.next();
                Ok(SetExpr::Tail)
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.expr()?;
                self.sym(')')?;
                Ok(e)
            }
            _ => self.fail("a set: `{`, `[0,`, `N0` or `(`"),
        }
    }
}

pub fn parse_system(text: &str) -> Result<SystemDocument, DslError> {
    Parser {
        toks: lex(text)?,
        pos: 0,
    }
    .document()
}

/// A single set expression, as accepted after `set LABEL =`.
pub fn parse_set(text: &str) -> Result<SetExpr, DslError> {
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    p.end()?;
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use addsys_core::fixtures;
    use proptest::prelude::*;

    const MONETARY: &str = "system {\n set M1 = [0,12)\n set M2 = 12 * [0,20)\n set M3 = 240 * N0\n}";

    fn b(x: usize) -> Bound {
        Bound::new(x).unwrap()
    }

    #[test]
    fn monetary_document() {
        let doc = parse_system(MONETARY).unwrap();
        assert_eq!(doc.name, None);
        let labels: Vec<&str> = doc.declarations.iter().map(|d| d.label.as_str()).collect();
        assert_eq!(labels, ["M1", "M2", "M3"]);
        assert_eq!(doc.to_system(b(480)).unwrap(), fixtures::british_monetary());
    }

    #[test]
    fn singleton_zero_parses_but_is_not_a_member() {
        let doc = parse_system("system { set A = {0} }").unwrap();
        assert_eq!(doc.declarations[0].expr, SetExpr::Finite(vec![BigUint::zero()]));
        assert!(matches!(
            doc.to_system(b(10)),
            Err(DslError::System(SystemError::TooFewElements(_)))
        ));
    }

    #[test]
    fn finite_set_without_zero() {
        assert_eq!(
            parse_system("system { set A = {1,2} }"),
            Err(DslError::NonZeroBase { line: 1, column: 18 })
        );
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_system("system {\n  set A = [1,3)\n}").unwrap_err();
        assert_eq!(
            err,
            DslError::Syntax {
                line: 2,
                column: 12,
                expected: "`0`".into(),
                found: "`1`".into()
            }
        );
        assert!(matches!(parse_system("system { set A = }"), Err(DslError::Syntax { .. })));
        assert!(matches!(parse_system("system { set A = {0,1} "), Err(DslError::Syntax { .. })));
        assert!(matches!(parse_system("system { set A = {0,1} } x"), Err(DslError::Syntax { .. })));
        assert!(matches!(parse_system("system { set A = {0;1} }"), Err(DslError::Syntax { .. })));
        assert!(matches!(parse_system("system { set A = 3 N0 }"), Err(DslError::Syntax { .. })));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(
            parse_system("system { set A = {0,1}\n set A = {0,2} }"),
            Err(DslError::DuplicateLabel { line: 2, .. })
        ));
        assert!(matches!(parse_system("system { set A = 0 * N0 }"), Err(DslError::ZeroScale { .. })));
        assert!(matches!(parse_system("system { set A = [0,0) }"), Err(DslError::EmptyInterval { .. })));
        let doc = parse_system("system { set A = {0,1} + {0,1} set B = 2 * N0 }").unwrap();
        assert!(matches!(
            doc.to_system(b(10)),
            Err(DslError::Set(SetError::DuplicateRepresentation { .. }))
        ));
    }

    #[test]
    fn comments_names_and_positions() {
        let text = "# the binary digits\nsystem bin { # trailing\n set _1 = {0,1}\n set _2 = 2*{0,1}\n set rest = 4 * N0 }";
        let doc = parse_system(text).unwrap();
        assert_eq!(doc.name.as_deref(), Some("bin"));
        let sys = doc.to_system(b(100)).unwrap();
        assert_eq!(sys.members()[0].label, Label::Position(1));
        assert!(sys.verify(b(100)).is_valid());
    }

    #[test]
    fn nested_sums_and_groups() {
        let e = parse_set("{0,1} + 4 * ({0,1} + 2 * {0,1}) + (16 * N0)").unwrap();
        assert_eq!(e.to_string(), "{0,1} + 4 * ({0,1} + 2 * {0,1}) + 16 * N0");
        let e = parse_set("2 * (3 * N0)").unwrap();
        assert_eq!(e.to_string(), "2 * 3 * N0");
        assert_eq!(parse_set("2 * 3 * N0").unwrap(), e);
        let s = parse_set("[0,2) + 2 * [0,2)").unwrap().to_set(b(10)).unwrap();
        assert!(s.bounded_eq(&StructuredSet::interval(4u32).unwrap(), b(100)));
    }

    #[test]
    fn big_integers() {
        let e = parse_set("123456789012345678901234567890 * [0,2)").unwrap();
        let s = e.to_set(b(10)).unwrap();
        assert!(s.contains(&"123456789012345678901234567890".parse().unwrap()));
    }

    #[test]
    fn printed_systems_reparse() {
        for sys in fixtures::corpus() {
            let doc = SystemDocument::from_system(Some("x".into()), &sys);
            let again = parse_system(&doc.to_string()).unwrap();
            assert_eq!(again, doc);
            assert_eq!(again.to_system(b(1000)).unwrap(), sys);
        }
    }

    fn arb_expr() -> impl Strategy<Value = SetExpr> {
        let leaf = prop_oneof![
            proptest::collection::btree_set(1u64..50, 0..4).prop_map(|s| SetExpr::Finite(
                std::iter::once(0).chain(s).map(BigUint::from).collect()
            )),
            (1u64..20).prop_map(|g| SetExpr::Interval(BigUint::from(g))),
            Just(SetExpr::Tail),
        ];
        leaf.prop_recursive(3, 16, 3, |inner| {
            prop_oneof![
                (1u64..9, inner.clone()).prop_map(|(s, e)| SetExpr::Dilated {
                    scale: BigUint::from(s),
                    inner: Box::new(e)
                }),
                proptest::collection::vec(inner, 2..4).prop_map(SetExpr::Sum),
            ]
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(
            name in proptest::option::of("[a-z][a-z0-9_]{0,6}"),
            exprs in proptest::collection::vec(arb_expr(), 0..4),
        ) {
            let doc = SystemDocument {
                name: name.filter(|n| n != "set"),
                declarations: exprs
                    .into_iter()
                    .enumerate()
                    .map(|(i, expr)| Declaration { label: format!("A{i}"), expr })
                    .collect(),
            };
            prop_assert_eq!(parse_system(&doc.to_string()).unwrap(), doc);
        }
    }
}

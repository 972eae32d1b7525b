//! Formulas, schemas, parsing and printing.
//!
//! The object language has seven primitive constructors: atoms, negation
//! `~`, consistency `o`, inconsistency `*`, conjunction `&`, disjunction
//! `|` and implication `->`. The parser additionally accepts a layer of
//! surface sugar (`<->`, strong negation `-`, bottom `_|_`, `=>`, and the
//! consistency powers `p^n` / `p^(n)`) which is expanded away before any
//! semantic work happens.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A concrete propositional formula. Leaves are atoms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Neg(Box<Formula>),
    Cons(Box<Formula>),
    Incons(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

/// A formula schema. Leaves are metavariables, written in upper case.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Schema {
    MetaVar(String),
    Neg(Box<Schema>),
    Cons(Box<Schema>),
    Incons(Box<Schema>),
    And(Box<Schema>, Box<Schema>),
    Or(Box<Schema>, Box<Schema>),
    Imp(Box<Schema>, Box<Schema>),
}

/// Finite map from metavariable names to formulas.
pub type Substitution = BTreeMap<String, Formula>;

/// Atom name reserved for the expansion of the bottom constant `_|_`.
pub const BOTTOM_ATOM: &str = "_b";

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Formula {
        Formula::Neg(Box::new(f))
    }

    pub fn cons(f: Formula) -> Formula {
        Formula::Cons(Box::new(f))
    }

    pub fn incons(f: Formula) -> Formula {
        Formula::Incons(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::Imp(Box::new(a), Box::new(b))
    }

    /// Set of atom names occurring in the formula.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom(a) => {
                out.insert(a.clone());
            }
            Formula::Neg(x) | Formula::Cons(x) | Formula::Incons(x) => x.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) => 1,
            Formula::Neg(x) | Formula::Cons(x) | Formula::Incons(x) => 1 + x.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl Schema {
    pub fn metavar(name: &str) -> Schema {
        Schema::MetaVar(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(s: Schema) -> Schema {
        Schema::Neg(Box::new(s))
    }

    pub fn cons(s: Schema) -> Schema {
        Schema::Cons(Box::new(s))
    }

    pub fn incons(s: Schema) -> Schema {
        Schema::Incons(Box::new(s))
    }

    pub fn and(a: Schema, b: Schema) -> Schema {
        Schema::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Schema, b: Schema) -> Schema {
        Schema::Or(Box::new(a), Box::new(b))
    }

    pub fn imp(a: Schema, b: Schema) -> Schema {
        Schema::Imp(Box::new(a), Box::new(b))
    }

    /// Set of metavariable names occurring in the schema.
    pub fn metavars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_metavars(&mut out);
        out
    }

    fn collect_metavars(&self, out: &mut BTreeSet<String>) {
        match self {
            Schema::MetaVar(v) => {
                out.insert(v.clone());
            }
            Schema::Neg(x) | Schema::Cons(x) | Schema::Incons(x) => x.collect_metavars(out),
            Schema::And(a, b) | Schema::Or(a, b) | Schema::Imp(a, b) => {
                a.collect_metavars(out);
                b.collect_metavars(out);
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Schema::MetaVar(_) => 1,
            Schema::Neg(x) | Schema::Cons(x) | Schema::Incons(x) => 1 + x.size(),
            Schema::And(a, b) | Schema::Or(a, b) | Schema::Imp(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Replace every metavariable by its image under the substitution.
    pub fn instantiate(&self, subst: &Substitution) -> Result<Formula, InstantiateError> {
        match self {
            Schema::MetaVar(v) => subst
                .get(v)
                .cloned()
                .ok_or_else(|| InstantiateError { metavar: v.clone() }),
            Schema::Neg(x) => Ok(Formula::neg(x.instantiate(subst)?)),
            Schema::Cons(x) => Ok(Formula::cons(x.instantiate(subst)?)),
            Schema::Incons(x) => Ok(Formula::incons(x.instantiate(subst)?)),
            Schema::And(a, b) => Ok(Formula::and(a.instantiate(subst)?, b.instantiate(subst)?)),
            Schema::Or(a, b) => Ok(Formula::or(a.instantiate(subst)?, b.instantiate(subst)?)),
            Schema::Imp(a, b) => Ok(Formula::imp(a.instantiate(subst)?, b.instantiate(subst)?)),
        }
    }

    /// Find the substitution (unique when it exists) taking this schema to
    /// the given formula, or `None` when no instantiation matches.
    pub fn match_formula(&self, f: &Formula) -> Option<Substitution> {
        let mut subst = Substitution::new();
        if self.match_into(f, &mut subst) {
            Some(subst)
        } else {
            None
        }
    }

    fn match_into(&self, f: &Formula, subst: &mut Substitution) -> bool {
        match (self, f) {
            (Schema::MetaVar(v), _) => match subst.get(v) {
                Some(bound) => bound == f,
                None => {
                    subst.insert(v.clone(), f.clone());
                    true
                }
            },
            (Schema::Neg(x), Formula::Neg(y)) => x.match_into(y, subst),
            (Schema::Cons(x), Formula::Cons(y)) => x.match_into(y, subst),
            (Schema::Incons(x), Formula::Incons(y)) => x.match_into(y, subst),
            (Schema::And(a, b), Formula::And(c, d))
            | (Schema::Or(a, b), Formula::Or(c, d))
            | (Schema::Imp(a, b), Formula::Imp(c, d)) => {
                a.match_into(c, subst) && b.match_into(d, subst)
            }
            _ => false,
        }
    }

    /// View a closed formula as a schema by reading its atoms as
    /// metavariables is not supported; this instead lifts structurally,
    /// turning each distinct atom into a metavariable of the same spelling
    /// upper-cased. It is used by the translation oracles, which enumerate
    /// concrete formulas but occasionally need the schema view.
    pub fn from_formula_atoms(f: &Formula) -> Schema {
        match f {
            Formula::Atom(a) => Schema::MetaVar(a.to_uppercase()),
            Formula::Neg(x) => Schema::neg(Self::from_formula_atoms(x)),
            Formula::Cons(x) => Schema::cons(Self::from_formula_atoms(x)),
            Formula::Incons(x) => Schema::incons(Self::from_formula_atoms(x)),
            Formula::And(a, b) => {
                Schema::and(Self::from_formula_atoms(a), Self::from_formula_atoms(b))
            }
            Formula::Or(a, b) => {
                Schema::or(Self::from_formula_atoms(a), Self::from_formula_atoms(b))
            }
            Formula::Imp(a, b) => {
                Schema::imp(Self::from_formula_atoms(a), Self::from_formula_atoms(b))
            }
        }
    }
}

/// Missing binding discovered while instantiating a schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstantiateError {
    pub metavar: String,
}

impl fmt::Display for InstantiateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "no binding for metavariable {}", self.metavar)
    }
}

impl std::error::Error for InstantiateError {}

// ---------------------------------------------------------------------------
// Surface syntax
// ---------------------------------------------------------------------------

/// Parser output before abbreviation expansion. Leaves may be atoms or
/// metavariables; the sugar constructors survive until [`expand_formula`]
/// or [`expand_schema`] runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sugared {
    Atom(String),
    MetaVar(String),
    Neg(Box<Sugared>),
    Cons(Box<Sugared>),
    Incons(Box<Sugared>),
    And(Box<Sugared>, Box<Sugared>),
    Or(Box<Sugared>, Box<Sugared>),
    Imp(Box<Sugared>, Box<Sugared>),
    Iff(Box<Sugared>, Box<Sugared>),
    /// `-A`, the strong negation `~A := (~A & oA)` of the core language.
    StrongNeg(Box<Sugared>),
    /// `=>A`, the implication-to-bottom strong negation `A -> _|_`.
    DotNeg(Box<Sugared>),
    /// `_|_`
    Bottom,
    /// `A^n` (plain) or `A^(n)` (the conjunction form).
    Power(Box<Sugared>, u32, PowerKind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerKind {
    Plain,
    Paren,
}

/// Syntax error with the byte offset of the offending token and the set of
/// tokens that would have been accepted there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub found: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: found {}, expected one of {}",
            self.offset,
            self.found,
            self.expected.join(", ")
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Atom(String),
    MetaVar(String),
    Number(u32),
    Neg,      // ~
    Cons,     // o
    Incons,   // *
    Strong,   // -
    DotNeg,   // =>
    And,      // &
    Or,       // |
    Imp,      // ->
    Iff,      // <->
    Bottom,   // _|_
    Caret,    // ^
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Atom(a) => format!("atom `{a}`"),
            Tok::MetaVar(v) => format!("metavariable `{v}`"),
            Tok::Number(n) => format!("number `{n}`"),
            Tok::Neg => "`~`".into(),
            Tok::Cons => "`o`".into(),
            Tok::Incons => "`*`".into(),
            Tok::Strong => "`-`".into(),
            Tok::DotNeg => "`=>`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Imp => "`->`".into(),
            Tok::Iff => "`<->`".into(),
            Tok::Bottom => "`_|_`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of input".into(),
        }
    }
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.src.len() {
            return Ok((start, Tok::End));
        }
        let c = self.src[self.pos];
        let tok = match c {
            b'~' => {
                self.pos += 1;
                Tok::Neg
            }
            b'*' => {
                self.pos += 1;
                Tok::Incons
            }
            b'&' => {
                self.pos += 1;
                Tok::And
            }
            b'|' => {
                self.pos += 1;
                Tok::Or
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'-' => {
                if self.src.get(self.pos + 1) == Some(&b'>') {
                    self.pos += 2;
                    Tok::Imp
                } else {
                    self.pos += 1;
                    Tok::Strong
                }
            }
            b'<' => {
                if self.src.get(self.pos + 1) == Some(&b'-')
                    && self.src.get(self.pos + 2) == Some(&b'>')
                {
                    self.pos += 3;
                    Tok::Iff
                } else {
                    return Err(self.bad_char(start));
                }
            }
            b'=' => {
                if self.src.get(self.pos + 1) == Some(&b'>') {
                    self.pos += 2;
                    Tok::DotNeg
                } else {
                    return Err(self.bad_char(start));
                }
            }
            b'_' => {
                if self.src[self.pos..].starts_with(b"_|_") {
                    self.pos += 3;
                    Tok::Bottom
                } else if self.src[self.pos..].starts_with(BOTTOM_ATOM.as_bytes())
                    && !self
                        .src
                        .get(self.pos + BOTTOM_ATOM.len())
                        .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    // The reserved atom produced by bottom expansion stays
                    // readable so that printed formulas re-parse.
                    self.pos += BOTTOM_ATOM.len();
                    Tok::Atom(BOTTOM_ATOM.to_string())
                } else {
                    return Err(self.bad_char(start));
                }
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Tok::Number(text.parse().map_err(|_| ParseError {
                    offset: start,
                    found: format!("`{text}`"),
                    expected: vec!["exponent"],
                })?)
            }
            b'a'..=b'z' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_lowercase()
                        || self.src[end].is_ascii_digit()
                        || self.src[end] == b'_')
                {
                    end += 1;
                }
                let name = std::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
                self.pos = end;
                if name == "o" {
                    Tok::Cons
                } else {
                    Tok::Atom(name)
                }
            }
            b'A'..=b'Z' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let name = std::str::from_utf8(&self.src[self.pos..end]).unwrap().to_string();
                self.pos = end;
                Tok::MetaVar(name)
            }
            _ => return Err(self.bad_char(start)),
        };
        Ok((start, tok))
    }

    fn bad_char(&self, at: usize) -> ParseError {
        let ch = self.src[at] as char;
        ParseError {
            offset: at,
            found: format!("`{ch}`"),
            expected: vec!["formula"],
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

const EXPECT_FORMULA: &[&str] = &["atom", "metavariable", "`~`", "`o`", "`*`", "`-`", "`=>`", "`_|_`", "`(`"];

impl Parser {
    fn peek(&self) -> &(usize, Tok) {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn err(&self, expected: &[&'static str]) -> ParseError {
        let (off, tok) = self.peek();
        ParseError {
            offset: *off,
            found: tok.describe(),
            expected: expected.to_vec(),
        }
    }

    fn formula(&mut self) -> Result<Sugared, ParseError> {
        let lhs = self.imp()?;
        if matches!(self.peek().1, Tok::Iff) {
            self.bump();
            let rhs = self.formula()?;
            Ok(Sugared::Iff(Box::new(lhs), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    fn imp(&mut self) -> Result<Sugared, ParseError> {
        let lhs = self.or()?;
        if matches!(self.peek().1, Tok::Imp) {
            self.bump();
            let rhs = self.imp()?;
            Ok(Sugared::Imp(Box::new(lhs), Box::new(rhs)))
        } else {
            Ok(lhs)
        }
    }

    fn or(&mut self) -> Result<Sugared, ParseError> {
        let mut lhs = self.and()?;
        while matches!(self.peek().1, Tok::Or) {
            self.bump();
            let rhs = self.and()?;
            lhs = Sugared::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Sugared, ParseError> {
        let mut lhs = self.unary()?;
        while matches!(self.peek().1, Tok::And) {
            self.bump();
            let rhs = self.unary()?;
            lhs = Sugared::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Sugared, ParseError> {
        match self.peek().1 {
            Tok::Neg => {
                self.bump();
                Ok(Sugared::Neg(Box::new(self.unary()?)))
            }
            Tok::Cons => {
                self.bump();
                Ok(Sugared::Cons(Box::new(self.unary()?)))
            }
            Tok::Incons => {
                self.bump();
                Ok(Sugared::Incons(Box::new(self.unary()?)))
            }
            Tok::Strong => {
                self.bump();
                Ok(Sugared::StrongNeg(Box::new(self.unary()?)))
            }
            Tok::DotNeg => {
                self.bump();
                Ok(Sugared::DotNeg(Box::new(self.unary()?)))
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Sugared, ParseError> {
        let mut base = self.primary()?;
        while matches!(self.peek().1, Tok::Caret) {
            self.bump();
            match self.bump() {
                (_, Tok::Number(n)) => {
                    base = Sugared::Power(Box::new(base), n, PowerKind::Plain);
                }
                (_, Tok::LParen) => {
                    let (off, t) = self.bump();
                    let n = match t {
                        Tok::Number(n) => n,
                        other => {
                            return Err(ParseError {
                                offset: off,
                                found: other.describe(),
                                expected: vec!["exponent"],
                            })
                        }
                    };
                    if n == 0 {
                        return Err(ParseError {
                            offset: off,
                            found: "`0`".into(),
                            expected: vec!["positive exponent"],
                        });
                    }
                    match self.bump() {
                        (_, Tok::RParen) => {}
                        (off, other) => {
                            return Err(ParseError {
                                offset: off,
                                found: other.describe(),
                                expected: vec!["`)`"],
                            })
                        }
                    }
                    base = Sugared::Power(Box::new(base), n, PowerKind::Paren);
                }
                (off, other) => {
                    return Err(ParseError {
                        offset: off,
                        found: other.describe(),
                        expected: vec!["exponent", "`(`"],
                    })
                }
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Sugared, ParseError> {
        match self.peek().1.clone() {
            Tok::Atom(a) => {
                self.bump();
                Ok(Sugared::Atom(a))
            }
            Tok::MetaVar(v) => {
                self.bump();
                Ok(Sugared::MetaVar(v))
            }
            Tok::Bottom => {
                self.bump();
                Ok(Sugared::Bottom)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.formula()?;
                if matches!(self.peek().1, Tok::RParen) {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.err(&["`)`"]))
                }
            }
            _ => Err(self.err(EXPECT_FORMULA)),
        }
    }
}

/// Parse surface text into the sugared tree, without expanding anything.
pub fn parse_sugared(text: &str) -> Result<Sugared, ParseError> {
    let mut lexer = Lexer::new(text);
    let mut toks = Vec::new();
    loop {
        let (off, tok) = lexer.next()?;
        let end = matches!(tok, Tok::End);
        toks.push((off, tok));
        if end {
            break;
        }
    }
    let mut parser = Parser { toks, at: 0 };
    let out = parser.formula()?;
    if matches!(parser.peek().1, Tok::End) {
        Ok(out)
    } else {
        Err(parser.err(&["end of input", "binary connective"]))
    }
}

/// How `o`, `*` and the derived abbreviations are read. The default keeps
/// the consistency connectives primitive; systems that define them choose
/// one of the other readings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConsReading {
    /// `o` and `*` are primitive connectives.
    Primitive,
    /// `oA := ~(A & ~A)` and `*A := (A & ~A)`.
    NegConjLeft,
    /// `oA := ~(~A & A)` and `*A := (~A & A)`.
    NegConjRight,
    /// `oA := A^(n)` over the primitive `o`, with `*A := ~(A^(n))`.
    Power(u32),
}

/// Leaf kind mixed into a parsed tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpandError {
    /// The expansion needs `o` but the reading forbids primitive `o`
    /// (only `no_cons` targets raise this), or a sugar form was used in a
    /// context where it is undefined.
    Unknown { construct: String, context: String },
    MixedLeaves { metavar: String, atom: String },
}

impl fmt::Display for ExpandError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpandError::Unknown { construct, context } => {
                write!(f, "unknown abbreviation {construct} for {context}")
            }
            ExpandError::MixedLeaves { metavar, atom } => write!(
                f,
                "formula mixes metavariable {metavar} with atom {atom}; use one leaf kind"
            ),
        }
    }
}

impl std::error::Error for ExpandError {}

/// Expansion context: the consistency reading plus whether the surrounding
/// language has `o` at all (systems below `bC` do not, so `-`, `=>` and
/// `_|_` are undefined there).
#[derive(Clone, Copy, Debug)]
pub struct ExpandCtx {
    pub reading: ConsReading,
    pub has_cons: bool,
    pub context_name: &'static str,
}

impl Default for ExpandCtx {
    fn default() -> Self {
        ExpandCtx {
            reading: ConsReading::Primitive,
            has_cons: true,
            context_name: "the default language",
        }
    }
}

enum Leafed {
    F(Formula),
    S(Schema),
}

/// Expand the sugar in a parsed tree into the seven core constructors,
/// producing a formula (atom leaves) — mixing leaf kinds is an error.
pub fn expand_formula(s: &Sugared, ctx: &ExpandCtx) -> Result<Formula, ExpandError> {
    match expand(s, ctx)? {
        Leafed::F(f) => Ok(f),
        Leafed::S(sch) => {
            let v = sch.metavars().into_iter().next().unwrap_or_default();
            Err(ExpandError::MixedLeaves {
                metavar: v,
                atom: "(none)".into(),
            })
        }
    }
}

/// Expand into a schema (metavariable leaves).
pub fn expand_schema(s: &Sugared, ctx: &ExpandCtx) -> Result<Schema, ExpandError> {
    match expand(s, ctx)? {
        Leafed::S(sch) => Ok(sch),
        Leafed::F(f) => {
            let a = f.atoms().into_iter().next().unwrap_or_default();
            Err(ExpandError::MixedLeaves {
                metavar: "(none)".into(),
                atom: a,
            })
        }
    }
}

fn expand(s: &Sugared, ctx: &ExpandCtx) -> Result<Leafed, ExpandError> {
    // Work over schemas internally; atoms are carried as odd "metavariables"
    // tagged by a leading marker and lowered at the end. Simpler: recurse
    // returning either kind and coerce late. Both kinds support the same
    // constructors, so the duplication below stays mechanical.
    fn go(s: &Sugared, ctx: &ExpandCtx) -> Result<Tree, ExpandError> {
        Ok(match s {
            Sugared::Atom(a) => Tree::Atom(a.clone()),
            Sugared::MetaVar(v) => Tree::MetaVar(v.clone()),
            Sugared::Neg(x) => Tree::Neg(Box::new(go(x, ctx)?)),
            Sugared::Cons(x) => expand_cons(go(x, ctx)?, ctx)?,
            Sugared::Incons(x) => expand_incons(go(x, ctx)?, ctx)?,
            Sugared::And(a, b) => Tree::And(Box::new(go(a, ctx)?), Box::new(go(b, ctx)?)),
            Sugared::Or(a, b) => Tree::Or(Box::new(go(a, ctx)?), Box::new(go(b, ctx)?)),
            Sugared::Imp(a, b) => Tree::Imp(Box::new(go(a, ctx)?), Box::new(go(b, ctx)?)),
            Sugared::Iff(a, b) => {
                let a = go(a, ctx)?;
                let b = go(b, ctx)?;
                Tree::And(
                    Box::new(Tree::Imp(Box::new(a.clone()), Box::new(b.clone()))),
                    Box::new(Tree::Imp(Box::new(b), Box::new(a))),
                )
            }
            Sugared::StrongNeg(x) => {
                require_cons(ctx, "strong negation `-`")?;
                let x = go(x, ctx)?;
                let cons = expand_cons(x.clone(), ctx)?;
                Tree::And(Box::new(Tree::Neg(Box::new(x))), Box::new(cons))
            }
            Sugared::DotNeg(x) => {
                require_cons(ctx, "`=>`")?;
                let x = go(x, ctx)?;
                Tree::Imp(Box::new(x), Box::new(bottom_tree(ctx)?))
            }
            Sugared::Bottom => {
                require_cons(ctx, "`_|_`")?;
                bottom_tree(ctx)?
            }
            Sugared::Power(x, n, kind) => {
                require_cons(ctx, "consistency power `^`")?;
                let x = go(x, ctx)?;
                match kind {
                    PowerKind::Plain => power_plain(&x, *n),
                    PowerKind::Paren => power_paren(&x, *n),
                }
            }
        })
    }

    fn require_cons(ctx: &ExpandCtx, construct: &str) -> Result<(), ExpandError> {
        if ctx.has_cons || !matches!(ctx.reading, ConsReading::Primitive) {
            Ok(())
        } else {
            Err(ExpandError::Unknown {
                construct: construct.to_string(),
                context: ctx.context_name.to_string(),
            })
        }
    }

    fn expand_cons(x: Tree, ctx: &ExpandCtx) -> Result<Tree, ExpandError> {
        Ok(match ctx.reading {
            ConsReading::Primitive => {
                if !ctx.has_cons {
                    return Err(ExpandError::Unknown {
                        construct: "`o`".into(),
                        context: ctx.context_name.to_string(),
                    });
                }
                Tree::Cons(Box::new(x))
            }
            ConsReading::NegConjLeft => Tree::Neg(Box::new(Tree::And(
                Box::new(x.clone()),
                Box::new(Tree::Neg(Box::new(x))),
            ))),
            ConsReading::NegConjRight => Tree::Neg(Box::new(Tree::And(
                Box::new(Tree::Neg(Box::new(x.clone()))),
                Box::new(x),
            ))),
            ConsReading::Power(n) => power_paren(&x, n),
        })
    }

    fn expand_incons(x: Tree, ctx: &ExpandCtx) -> Result<Tree, ExpandError> {
        Ok(match ctx.reading {
            ConsReading::Primitive => {
                if !ctx.has_cons {
                    return Err(ExpandError::Unknown {
                        construct: "`*`".into(),
                        context: ctx.context_name.to_string(),
                    });
                }
                Tree::Incons(Box::new(x))
            }
            ConsReading::NegConjLeft => Tree::And(
                Box::new(x.clone()),
                Box::new(Tree::Neg(Box::new(x))),
            ),
            ConsReading::NegConjRight => Tree::And(
                Box::new(Tree::Neg(Box::new(x.clone()))),
                Box::new(x),
            ),
            ConsReading::Power(n) => Tree::Neg(Box::new(power_paren(&x, n))),
        })
    }

    fn bottom_tree(ctx: &ExpandCtx) -> Result<Tree, ExpandError> {
        // o_b & (_b & ~_b) over the reserved atom.
        let b = Tree::Atom(BOTTOM_ATOM.to_string());
        let cons_b = expand_cons(b.clone(), ctx)?;
        Ok(Tree::And(
            Box::new(cons_b),
            Box::new(Tree::And(
                Box::new(b.clone()),
                Box::new(Tree::Neg(Box::new(b))),
            )),
        ))
    }

    // A^0 = A, A^{n+1} = o(A^n)  (the consistency connective iterated).
    fn power_plain(x: &Tree, n: u32) -> Tree {
        let mut out = x.clone();
        for _ in 0..n {
            out = Tree::Cons(Box::new(out));
        }
        out
    }

    // A^(1) = A^1, A^(n+1) = A^(n) & A^{n+1}.
    fn power_paren(x: &Tree, n: u32) -> Tree {
        let mut out = power_plain(x, 1);
        for k in 2..=n {
            out = Tree::And(Box::new(out), Box::new(power_plain(x, k)));
        }
        out
    }

    #[derive(Clone)]
    enum Tree {
        Atom(String),
        MetaVar(String),
        Neg(Box<Tree>),
        Cons(Box<Tree>),
        Incons(Box<Tree>),
        And(Box<Tree>, Box<Tree>),
        Or(Box<Tree>, Box<Tree>),
        Imp(Box<Tree>, Box<Tree>),
    }

    fn lower(t: &Tree, saw_atom: &mut Option<String>, saw_meta: &mut Option<String>) {
        match t {
            Tree::Atom(a) => {
                saw_atom.get_or_insert_with(|| a.clone());
            }
            Tree::MetaVar(v) => {
                saw_meta.get_or_insert_with(|| v.clone());
            }
            Tree::Neg(x) | Tree::Cons(x) | Tree::Incons(x) => lower(x, saw_atom, saw_meta),
            Tree::And(a, b) | Tree::Or(a, b) | Tree::Imp(a, b) => {
                lower(a, saw_atom, saw_meta);
                lower(b, saw_atom, saw_meta);
            }
        }
    }

    fn to_formula(t: &Tree) -> Formula {
        match t {
            Tree::Atom(a) => Formula::Atom(a.clone()),
            Tree::MetaVar(v) => Formula::Atom(v.clone()),
            Tree::Neg(x) => Formula::neg(to_formula(x)),
            Tree::Cons(x) => Formula::cons(to_formula(x)),
            Tree::Incons(x) => Formula::incons(to_formula(x)),
            Tree::And(a, b) => Formula::and(to_formula(a), to_formula(b)),
            Tree::Or(a, b) => Formula::or(to_formula(a), to_formula(b)),
            Tree::Imp(a, b) => Formula::imp(to_formula(a), to_formula(b)),
        }
    }

    fn to_schema(t: &Tree) -> Schema {
        match t {
            Tree::Atom(a) => Schema::MetaVar(a.clone()),
            Tree::MetaVar(v) => Schema::MetaVar(v.clone()),
            Tree::Neg(x) => Schema::neg(to_schema(x)),
            Tree::Cons(x) => Schema::cons(to_schema(x)),
            Tree::Incons(x) => Schema::incons(to_schema(x)),
            Tree::And(a, b) => Schema::and(to_schema(a), to_schema(b)),
            Tree::Or(a, b) => Schema::or(to_schema(a), to_schema(b)),
            Tree::Imp(a, b) => Schema::imp(to_schema(a), to_schema(b)),
        }
    }

    let tree = go(s, ctx)?;
    let mut atom = None;
    let mut meta = None;
    lower(&tree, &mut atom, &mut meta);
    match (atom, meta) {
        (Some(a), Some(v)) => Err(ExpandError::MixedLeaves { metavar: v, atom: a }),
        (_, Some(_)) => Ok(Leafed::S(to_schema(&tree))),
        _ => Ok(Leafed::F(to_formula(&tree))),
    }
}

/// Errors raised by the convenience parse entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaError {
    Parse(ParseError),
    Expand(ExpandError),
}

impl fmt::Display for FormulaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaError::Parse(e) => e.fmt(f),
            FormulaError::Expand(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for FormulaError {}

impl From<ParseError> for FormulaError {
    fn from(e: ParseError) -> Self {
        FormulaError::Parse(e)
    }
}

impl From<ExpandError> for FormulaError {
    fn from(e: ExpandError) -> Self {
        FormulaError::Expand(e)
    }
}

/// Parse a concrete formula (lower-case leaves), expanding sugar with the
/// default reading (`o`/`*` primitive).
pub fn parse_formula(text: &str) -> Result<Formula, FormulaError> {
    Ok(expand_formula(&parse_sugared(text)?, &ExpandCtx::default())?)
}

/// Parse a schema (upper-case leaves), expanding sugar with the default
/// reading.
pub fn parse_schema(text: &str) -> Result<Schema, FormulaError> {
    Ok(expand_schema(&parse_sugared(text)?, &ExpandCtx::default())?)
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

// Precedence levels used by the printer: Imp < Or < And < unary.
const PREC_IMP: u8 = 1;
const PREC_OR: u8 = 2;
const PREC_AND: u8 = 3;
const PREC_UNARY: u8 = 4;

macro_rules! impl_display {
    ($ty:ident, $leaf:ident) => {
        impl $ty {
            fn write(&self, f: &mut fmt::Formatter<'_>, parent: u8) -> fmt::Result {
                match self {
                    $ty::$leaf(name) => write!(f, "{name}"),
                    $ty::Neg(x) => {
                        write!(f, "~")?;
                        x.write(f, PREC_UNARY)
                    }
                    $ty::Cons(x) => {
                        // `o` is also an identifier character, so always
                        // separate it from its operand.
                        write!(f, "o ")?;
                        x.write(f, PREC_UNARY)
                    }
                    $ty::Incons(x) => {
                        write!(f, "*")?;
                        x.write(f, PREC_UNARY)
                    }
                    $ty::And(a, b) => {
                        let needs = parent > PREC_AND;
                        if needs {
                            write!(f, "(")?;
                        }
                        a.write(f, PREC_AND)?;
                        write!(f, " & ")?;
                        b.write(f, PREC_AND + 1)?;
                        if needs {
                            write!(f, ")")?;
                        }
                        Ok(())
                    }
                    $ty::Or(a, b) => {
                        let needs = parent > PREC_OR;
                        if needs {
                            write!(f, "(")?;
                        }
                        a.write(f, PREC_OR)?;
                        write!(f, " | ")?;
                        b.write(f, PREC_OR + 1)?;
                        if needs {
                            write!(f, ")")?;
                        }
                        Ok(())
                    }
                    $ty::Imp(a, b) => {
                        let needs = parent > PREC_IMP;
                        if needs {
                            write!(f, "(")?;
                        }
                        a.write(f, PREC_IMP + 1)?;
                        write!(f, " -> ")?;
                        b.write(f, PREC_IMP)?;
                        if needs {
                            write!(f, ")")?;
                        }
                        Ok(())
                    }
                }
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.write(f, 0)
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{self}")
            }
        }
    };
}

impl_display!(Formula, Atom);
impl_display!(Schema, MetaVar);

/// Render a formula with minimal parentheses. `parse(render(f)) == f`.
pub fn render(f: &Formula) -> String {
    f.to_string()
}

/// Render a schema with minimal parentheses.
pub fn render_schema(s: &Schema) -> String {
    s.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(text: &str) -> Formula {
        parse_formula(text).unwrap()
    }

    fn s(text: &str) -> Schema {
        parse_schema(text).unwrap()
    }

    #[test]
    fn parse_atoms_and_precedence() {
        assert_eq!(f("p"), Formula::atom("p"));
        assert_eq!(
            f("~(p & ~p)"),
            Formula::neg(Formula::and(
                Formula::atom("p"),
                Formula::neg(Formula::atom("p"))
            ))
        );
        assert_eq!(
            f("o p -> (p -> q)"),
            Formula::imp(
                Formula::cons(Formula::atom("p")),
                Formula::imp(Formula::atom("p"), Formula::atom("q"))
            )
        );
        // ~,o,* bind tighter than &, & tighter than |, | tighter than ->.
        assert_eq!(f("~p & q | r -> s"), f("(((~p) & q) | r) -> s"));
        // -> is right-associative.
        assert_eq!(f("p -> q -> r"), f("p -> (q -> r)"));
    }

    #[test]
    fn render_is_minimal_and_round_trips() {
        assert_eq!(render(&f("p")), "p");
        assert_eq!(render(&f("~(p & ~p)")), "~(p & ~p)");
        assert_eq!(render(&f("p -> (q -> p)")), "p -> q -> p");
        assert_eq!(render(&f("(p -> q) -> p")), "(p -> q) -> p");
        assert_eq!(render(&f("(p & q) & r")), "p & q & r");
        assert_eq!(render(&f("p & (q & r)")), "p & (q & r)");
        for text in [
            "o p -> (p -> q)",
            "*(p | ~q) & o o p",
            "p & q | r",
            "(p | q) & r",
            "~~p -> p",
        ] {
            let orig = f(text);
            assert_eq!(f(&render(&orig)), orig, "round trip of {text}");
        }
    }

    #[test]
    fn sugar_expansion() {
        // <-> becomes the conjunction of two implications.
        assert_eq!(f("p <-> q"), f("(p -> q) & (q -> p)"));
        // strong negation
        assert_eq!(f("-p"), f("~p & o p"));
        // bottom and the dotted strong negation use the reserved atom.
        assert_eq!(f("_|_"), f("o _b & (_b & ~_b)"));
        assert_eq!(f("=>p"), f("p -> (o _b & (_b & ~_b))"));
        // powers
        assert_eq!(f("p^0"), f("p"));
        assert_eq!(f("p^3"), f("o o o p"));
        assert_eq!(f("p^(1)"), f("o p"));
        assert_eq!(f("p^(2)"), f("o p & o o p"));
        assert_eq!(f("p^(3)"), f("(o p & o o p) & o o o p"));
    }

    #[test]
    fn power_expansion_recurrence() {
        // A^(n+1) = A^(n) & A^{n+1}, structurally.
        for n in 1..6u32 {
            let lhs = f(&format!("p^({})", n + 1));
            let rhs = Formula::and(f(&format!("p^({n})")), f(&format!("p^{}", n + 1)));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn more_instantiation_cases() {
        let mut sub = Substitution::new();
        sub.insert("A".into(), f("p & q"));
        assert_eq!(
            s("A | ~A").instantiate(&sub).unwrap(),
            f("(p & q) | ~(p & q)")
        );
        let mut sub = Substitution::new();
        sub.insert("A".into(), f("p"));
        assert_eq!(
            s("o A & (A & ~A)").instantiate(&sub).unwrap(),
            f("o p & (p & ~p)")
        );
    }

    #[test]
    fn schema_parsing_and_matching() {
        let sch = s("A -> (B -> A)");
        let mut sub = Substitution::new();
        sub.insert("A".into(), f("p"));
        sub.insert("B".into(), f("q"));
        assert_eq!(sch.instantiate(&sub).unwrap(), f("p -> (q -> p)"));

        assert_eq!(
            sch.match_formula(&f("p -> (q -> p)")),
            Some(sub)
        );
        // binding conflict
        assert_eq!(sch.match_formula(&f("p -> (q -> r)")), None);
        let dn = s("~~A -> A");
        let m = dn.match_formula(&f("~~(p | q) -> (p | q)")).unwrap();
        assert_eq!(m["A"], f("p | q"));
    }

    #[test]
    fn instantiation_composes() {
        let sch = s("A -> (B -> A)");
        let mut sigma = Substitution::new();
        sigma.insert("A".into(), f("x"));
        sigma.insert("B".into(), f("y"));
        let once = sch.instantiate(&sigma).unwrap();
        // Instantiating the result seen as a schema over its atoms with tau
        // equals instantiating the original with tau composed with sigma.
        let lifted = Schema::from_formula_atoms(&once);
        let mut tau = Substitution::new();
        tau.insert("X".into(), f("p & q"));
        tau.insert("Y".into(), f("~r"));
        let mut tau_sigma = Substitution::new();
        tau_sigma.insert("A".into(), f("p & q"));
        tau_sigma.insert("B".into(), f("~r"));
        assert_eq!(
            lifted.instantiate(&tau).unwrap(),
            sch.instantiate(&tau_sigma).unwrap()
        );
    }

    #[test]
    fn missing_binding_is_reported() {
        let sch = s("A -> B");
        let mut sub = Substitution::new();
        sub.insert("A".into(), f("p"));
        let err = sch.instantiate(&sub).unwrap_err();
        assert_eq!(err.metavar, "B");
    }

    #[test]
    fn errors_carry_offsets() {
        let err = parse_formula("p -> ").unwrap_err();
        match err {
            FormulaError::Parse(e) => {
                assert_eq!(e.offset, 5);
                assert!(!e.expected.is_empty());
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = parse_formula("p q").unwrap_err();
        match err {
            FormulaError::Parse(e) => assert_eq!(e.offset, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn mixed_leaves_rejected() {
        assert!(matches!(
            parse_formula("p -> A"),
            Err(FormulaError::Expand(ExpandError::MixedLeaves { .. }))
        ));
    }

    #[test]
    fn reserved_bottom_atom_reparses() {
        let b = f("_|_");
        assert_eq!(f(&render(&b)), b);
    }

    #[test]
    fn dc_reading_expands_cons() {
        let ctx = ExpandCtx {
            reading: ConsReading::NegConjLeft,
            has_cons: true,
            context_name: "test",
        };
        let t = parse_sugared("o p").unwrap();
        assert_eq!(expand_formula(&t, &ctx).unwrap(), f("~(p & ~p)"));
        let t = parse_sugared("*p").unwrap();
        assert_eq!(expand_formula(&t, &ctx).unwrap(), f("p & ~p"));
    }

    #[test]
    fn cons_unknown_without_cons_language() {
        let ctx = ExpandCtx {
            reading: ConsReading::Primitive,
            has_cons: false,
            context_name: "Cmin",
        };
        let t = parse_sugared("-p").unwrap();
        assert!(matches!(
            expand_formula(&t, &ctx),
            Err(ExpandError::Unknown { .. })
        ));
    }
}

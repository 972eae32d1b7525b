//! Hilbert-style axiom systems, proof checking, the deduction-metatheorem
//! transformation, matrix soundness reports and bounded metarule checks.
//!
//! Systems are data: named lists of axiomatic rules (axioms are rules with
//! no premises; modus ponens is the only rule that every system carries).
//! The built-ins cover the ladder from positive classical logic up through
//! the consistency-operator systems and their named extensions.

use crate::formula::{
    expand_formula, parse_sugared, ConsReading, ExpandCtx, Formula, FormulaError, Schema,
    Substitution,
};
use crate::matrices::{rule_countermodel, Conn, EvalError, MatrixLogic, Value};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A named axiomatic rule; an axiom when `premises` is empty.
#[derive(Clone, Debug)]
pub struct AxiomaticRule {
    pub name: String,
    pub premises: Vec<Schema>,
    pub conclusion: Schema,
}

impl AxiomaticRule {
    pub fn is_axiom(&self) -> bool {
        self.premises.is_empty()
    }

    /// Fold the premises into nested implications:
    /// `p1, ..., pk / c` becomes `p1 -> (... -> (pk -> c))`.
    pub fn implicational_form(&self) -> Schema {
        let mut out = self.conclusion.clone();
        for p in self.premises.iter().rev() {
            out = Schema::imp(p.clone(), out);
        }
        out
    }
}

/// A Hilbert system: rules plus the abbreviation policy its language uses.
#[derive(Clone, Debug)]
pub struct HilbertSystem {
    name: String,
    rules: Vec<AxiomaticRule>,
    /// Whether the language carries the consistency connectives at all.
    pub has_cons: bool,
    /// How surface `o`/`*` in proof text is read for this system.
    pub parse_reading: ConsReading,
    /// For systems whose consistency operator is definable, the defining
    /// reading (used when a target matrix has no `o` table).
    pub dc_reading: Option<ConsReading>,
}

impl HilbertSystem {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rules(&self) -> &[AxiomaticRule] {
        &self.rules
    }

    pub fn rule(&self, name: &str) -> Option<&AxiomaticRule> {
        self.rules.iter().find(|r| r.name == name)
    }

    /// True when `o`/`*` are defined connectives in this presentation.
    pub fn is_dc(&self) -> bool {
        self.dc_reading.is_some()
    }

    /// Implicational twin accepted by the checker for a rule with
    /// premises, named `<rule>-imp`.
    pub fn imp_axiom(&self, name: &str) -> Option<AxiomaticRule> {
        let base = name.strip_suffix("-imp")?;
        let rule = self.rule(base)?;
        if rule.is_axiom() || rule.name == "MP" {
            return None;
        }
        Some(AxiomaticRule {
            name: name.to_string(),
            premises: Vec::new(),
            conclusion: rule.implicational_form(),
        })
    }

    fn expand_ctx(&self) -> ExpandCtx {
        ExpandCtx {
            reading: self.parse_reading,
            has_cons: self.has_cons,
            context_name: "system",
        }
    }

    /// Parse a formula in this system's language.
    pub fn parse_formula(&self, text: &str) -> Result<Formula, FormulaError> {
        let sugared = parse_sugared(text)?;
        Ok(expand_formula(&sugared, &self.expand_ctx())?)
    }
}

// ---------------------------------------------------------------------------
// Schema rewriting
// ---------------------------------------------------------------------------

/// Rewrite `o`/`*` nodes of a schema according to a reading. Children are
/// rewritten first; the replacement itself is emitted verbatim (the power
/// reading produces primitive `o` nodes that must not be re-expanded).
pub fn rewrite_schema(s: &Schema, reading: ConsReading) -> Schema {
    match s {
        Schema::MetaVar(_) => s.clone(),
        Schema::Neg(x) => Schema::neg(rewrite_schema(x, reading)),
        Schema::Cons(x) => cons_of(rewrite_schema(x, reading), reading),
        Schema::Incons(x) => incons_of(rewrite_schema(x, reading), reading),
        Schema::And(a, b) => Schema::and(rewrite_schema(a, reading), rewrite_schema(b, reading)),
        Schema::Or(a, b) => Schema::or(rewrite_schema(a, reading), rewrite_schema(b, reading)),
        Schema::Imp(a, b) => Schema::imp(rewrite_schema(a, reading), rewrite_schema(b, reading)),
    }
}

fn cons_of(x: Schema, reading: ConsReading) -> Schema {
    match reading {
        ConsReading::Primitive => Schema::cons(x),
        ConsReading::NegConjLeft => Schema::neg(Schema::and(x.clone(), Schema::neg(x))),
        ConsReading::NegConjRight => Schema::neg(Schema::and(Schema::neg(x.clone()), x)),
        ConsReading::Power(n) => schema_power_paren(&x, n),
    }
}

fn incons_of(x: Schema, reading: ConsReading) -> Schema {
    match reading {
        ConsReading::Primitive => Schema::incons(x),
        ConsReading::NegConjLeft => Schema::and(x.clone(), Schema::neg(x)),
        ConsReading::NegConjRight => Schema::and(Schema::neg(x.clone()), x),
        ConsReading::Power(n) => Schema::neg(schema_power_paren(&x, n)),
    }
}

fn schema_power_plain(x: &Schema, n: u32) -> Schema {
    let mut out = x.clone();
    for _ in 0..n {
        out = Schema::cons(out);
    }
    out
}

fn schema_power_paren(x: &Schema, n: u32) -> Schema {
    let mut out = schema_power_plain(x, 1);
    for k in 2..=n {
        out = Schema::and(out, schema_power_plain(x, k));
    }
    out
}

/// Rewrite `*X` as `~o X` (the definitional presentation of the
/// inconsistency connective), for matrices carrying only an `o` table.
pub fn incons_as_neg_cons(s: &Schema) -> Schema {
    match s {
        Schema::MetaVar(_) => s.clone(),
        Schema::Neg(x) => Schema::neg(incons_as_neg_cons(x)),
        Schema::Cons(x) => Schema::cons(incons_as_neg_cons(x)),
        Schema::Incons(x) => Schema::neg(Schema::cons(incons_as_neg_cons(x))),
        Schema::And(a, b) => Schema::and(incons_as_neg_cons(a), incons_as_neg_cons(b)),
        Schema::Or(a, b) => Schema::or(incons_as_neg_cons(a), incons_as_neg_cons(b)),
        Schema::Imp(a, b) => Schema::imp(incons_as_neg_cons(a), incons_as_neg_cons(b)),
    }
}

fn schema_uses_incons(s: &Schema) -> bool {
    match s {
        Schema::MetaVar(_) => false,
        Schema::Incons(_) => true,
        Schema::Neg(x) | Schema::Cons(x) => schema_uses_incons(x),
        Schema::And(a, b) | Schema::Or(a, b) | Schema::Imp(a, b) => {
            schema_uses_incons(a) || schema_uses_incons(b)
        }
    }
}

/// Adapt a rule's schemas to a matrix: apply the system's defining reading
/// when the matrix has no `o` table, and read `*` as `~o` when only the
/// `*` table is missing.
pub fn adapt_rule(
    system: &HilbertSystem,
    logic: &MatrixLogic,
    rule: &AxiomaticRule,
) -> AxiomaticRule {
    let fix = |s: &Schema| -> Schema {
        let mut out = s.clone();
        if !logic.has_table(Conn::Cons) {
            if let Some(reading) = system.dc_reading {
                out = rewrite_schema(&out, reading);
            }
        }
        if !logic.has_table(Conn::Incons) && logic.has_table(Conn::Cons) && schema_uses_incons(&out)
        {
            out = incons_as_neg_cons(&out);
        }
        out
    };
    AxiomaticRule {
        name: rule.name.clone(),
        premises: rule.premises.iter().map(fix).collect(),
        conclusion: fix(&rule.conclusion),
    }
}

// ---------------------------------------------------------------------------
// Built-in systems
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub enum SystemError {
    Unknown { name: String, available: Vec<&'static str> },
}

impl fmt::Display for SystemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemError::Unknown { name, available } => write!(
                f,
                "unknown system {name}; available: {} (plus c<n> and c<n>/<n+1>)",
                available.join(", ")
            ),
        }
    }
}

impl std::error::Error for SystemError {}

/// Fixed system names (the `c<n>` and `c<n>/<n+1>` families are generated
/// on demand).
pub const SYSTEM_NAMES: [&str; 30] = [
    "cmin", "pi", "comega", "cpl", "ecpl", "bc", "bbc", "bbbc", "ci", "cil", "cid", "cib", "cie",
    "cile", "cia", "cila", "cio", "cilo", "cior", "cibor", "civ", "civw", "cive", "ciw", "cij",
    "cije", "ciorw", "ciore", "cibaw", "b1",
];

fn sch(text: &str) -> Schema {
    crate::formula::parse_schema(text).expect("builtin rule schema")
}

fn ax(name: &str, conclusion: &str) -> AxiomaticRule {
    AxiomaticRule { name: name.into(), premises: Vec::new(), conclusion: sch(conclusion) }
}

fn rl(name: &str, premises: &[&str], conclusion: &str) -> AxiomaticRule {
    AxiomaticRule {
        name: name.into(),
        premises: premises.iter().map(|p| sch(p)).collect(),
        conclusion: sch(conclusion),
    }
}

/// Modus ponens, the sole built-in inference rule proper.
pub fn modus_ponens() -> AxiomaticRule {
    rl("MP", &["A", "A -> B"], "B")
}

fn minimal_axioms() -> Vec<AxiomaticRule> {
    vec![
        ax("Min1", "A -> (B -> A)"),
        ax("Min2", "(A -> B) -> ((A -> (B -> C)) -> (A -> C))"),
        ax("Min3", "A -> (B -> (A & B))"),
        ax("Min4", "(A & B) -> A"),
        ax("Min5", "(A & B) -> B"),
        ax("Min6", "A -> (A | B)"),
        ax("Min7", "B -> (A | B)"),
        ax("Min8", "(A -> C) -> ((B -> C) -> ((A | B) -> C))"),
        ax("Min9", "A | (A -> B)"),
        ax("Min10", "A | ~A"),
        ax("Min11", "~~A -> A"),
    ]
}

/// The named extension rules; used by the built-in systems and available
/// individually for soundness experiments.
pub fn named_rule(name: &str) -> Option<AxiomaticRule> {
    Some(match name {
        "MP" => modus_ponens(),
        "tPS" => ax("tPS", "A -> (~A -> B)"),
        "ext" => ax("ext", "o A"),
        "bc0" => rl("bc0", &["o A", "A", "~A"], "~B"),
        "bc1" => rl("bc1", &["o A", "A", "~A"], "B"),
        "RA0" => rl("RA0", &["o B", "A -> B", "A -> ~B"], "~A"),
        "RA1" => rl("RA1", &["o B", "~A -> B", "~A -> ~B"], "A"),
        "bc2" => rl("bc2", &["~*A"], "o A"),
        "bc3" => rl("bc3", &["~o A"], "*A"),
        "bc4" => rl("bc4", &["*A"], "~o A"),
        "bc5" => rl("bc5", &["o A"], "~*A"),
        "ci" => rl("ci", &["*A"], "A & ~A"),
        "ci1" => rl("ci1", &["*A"], "A"),
        "ci2" => rl("ci2", &["*A"], "~A"),
        "cl" => rl("cl", &["~(A & ~A)"], "o A"),
        "cd" => rl("cd", &["~(~A & A)"], "o A"),
        "cb" => rl("cb", &["~(A & ~A) | ~(~A & A)"], "o A"),
        "cg" => rl("cg", &["B <-> (A & ~A)"], "~B <-> ~(A & ~A)"),
        "ce" => rl("ce", &["A"], "~~A"),
        "ca1" => rl("ca1", &["o A & o B"], "o (A & B)"),
        "ca2" => rl("ca2", &["o A & o B"], "o (A | B)"),
        "ca3" => rl("ca3", &["o A & o B"], "o (A -> B)"),
        "co1" => rl("co1", &["o A | o B"], "o (A & B)"),
        "co2" => rl("co2", &["o A | o B"], "o (A | B)"),
        "co3" => rl("co3", &["o A | o B"], "o (A -> B)"),
        "cr1" => rl("cr1", &["o (A & B)"], "o A | o B"),
        // The disjunctive conclusion is forced: ciorw and ciore must be
        // sound for their three-valued targets, and a conjunctive cr2
        // fails there at (1, 1/2).
        "cr2" => rl("cr2", &["o (A | B)"], "o A | o B"),
        "cr3" => rl("cr3", &["o (A -> B)"], "o A | o B"),
        "cv1" => ax("cv1", "o (A & B)"),
        "cv2" => ax("cv2", "o (A | B)"),
        "cv3" => ax("cv3", "o (A -> B)"),
        "cw" => ax("cw", "o ~A"),
        "cj1a" => rl("cj1a", &["*(A & B)"], "(*A & B) | (*B & A)"),
        "cj1b" => rl("cj1b", &["(*A & B) | (*B & A)"], "*(A & B)"),
        "cj2a" => rl("cj2a", &["*(A | B)"], "(*A & ~B) | (*B & ~A)"),
        "cj2b" => rl("cj2b", &["(*A & ~B) | (*B & ~A)"], "*(A | B)"),
        "cj3a" => rl("cj3a", &["*(A -> B)"], "A & *B"),
        "cj3b" => rl("cj3b", &["A & *B"], "*(A -> B)"),
        "bun" => rl("bun", &["A -> (o B & (B & ~B))"], "~A"),
        _ => return None,
    })
}

fn iterate_neg(mut s: Schema, k: u32) -> Schema {
    for _ in 0..k {
        s = Schema::neg(s);
    }
    s
}

fn iff(a: Schema, b: Schema) -> Schema {
    Schema::and(Schema::imp(a.clone(), b.clone()), Schema::imp(b, a))
}

fn conj_all(mut parts: Vec<Schema>) -> Schema {
    let mut out = parts.remove(0);
    for p in parts {
        out = Schema::and(out, p);
    }
    out
}

/// `(M1 n)`: from `~^{n-1} A` infer `~^{n+1} A`.
pub fn mortensen_m1(n: u32) -> AxiomaticRule {
    AxiomaticRule {
        name: format!("M1.{n}"),
        premises: vec![iterate_neg(Schema::metavar("A"), n - 1)],
        conclusion: iterate_neg(Schema::metavar("A"), n + 1),
    }
}

/// `(M2 n)` for one binary connective: matching negation towers on `A` and
/// `B` transfer to compounds with any third formula on either side.
pub fn mortensen_m2(n: u32, conn: Conn) -> AxiomaticRule {
    let (a, b, c) = (Schema::metavar("A"), Schema::metavar("B"), Schema::metavar("C"));
    let combine = |x: &Schema, y: &Schema| match conn {
        Conn::And => Schema::and(x.clone(), y.clone()),
        Conn::Or => Schema::or(x.clone(), y.clone()),
        Conn::Imp => Schema::imp(x.clone(), y.clone()),
        _ => unreachable!("binary connective"),
    };
    let premise = conj_all(
        (1..=n)
            .map(|i| iff(iterate_neg(a.clone(), i - 1), iterate_neg(b.clone(), i - 1)))
            .collect(),
    );
    let right = conj_all(
        (1..=n)
            .map(|i| iff(iterate_neg(combine(&a, &c), i), iterate_neg(combine(&b, &c), i)))
            .collect(),
    );
    let left = conj_all(
        (1..=n)
            .map(|i| iff(iterate_neg(combine(&c, &a), i), iterate_neg(combine(&c, &b), i)))
            .collect(),
    );
    AxiomaticRule {
        name: format!("M2.{n}.{}", conn.symbol()),
        premises: vec![premise],
        conclusion: Schema::and(right, left),
    }
}

struct Build {
    name: String,
    rules: Vec<AxiomaticRule>,
    has_cons: bool,
    dc_reading: Option<ConsReading>,
}

impl Build {
    fn new(name: &str, rules: Vec<AxiomaticRule>, has_cons: bool) -> Build {
        let mut all = vec![modus_ponens()];
        all.extend(rules);
        Build { name: name.into(), rules: all, has_cons, dc_reading: None }
    }

    fn plus(mut self, name: &str, extra: &[&str]) -> Build {
        self.name = name.into();
        for r in extra {
            self.rules.push(named_rule(r).expect("known rule"));
        }
        self.has_cons = true;
        self
    }

    fn dc(mut self, reading: ConsReading) -> Build {
        self.dc_reading = Some(reading);
        self
    }

    fn done(self) -> HilbertSystem {
        HilbertSystem {
            name: self.name,
            rules: self.rules,
            has_cons: self.has_cons,
            parse_reading: ConsReading::Primitive,
            dc_reading: self.dc_reading,
        }
    }
}

fn cmin() -> Build {
    Build::new("cmin", minimal_axioms(), false)
}

fn ci_build() -> Build {
    cmin().plus("ci", &["bc1", "bc2", "bc3", "bc4", "bc5", "ci"])
}

/// Look up a built-in system. Besides the fixed names, `c<n>` builds the
/// n-th da Costa calculus (the `cila` rules with `o A` read as `A^(n)`),
/// and `c<n>/<n+1>` builds the corresponding Mortensen extension.
pub fn system(name: &str) -> Result<HilbertSystem, SystemError> {
    let fixed = match name {
        "cmin" => Some(cmin().done()),
        "pi" => Some(Build::new("pi", minimal_axioms()[..10].to_vec(), false).done()),
        "comega" => {
            let rules: Vec<_> =
                minimal_axioms().into_iter().filter(|r| r.name != "Min9").collect();
            Some(Build::new("comega", rules, false).done())
        }
        "cpl" => Some(cmin().plus("cpl", &["tPS"]).done()),
        "ecpl" => Some(cmin().plus("ecpl", &["tPS", "ext"]).done()),
        "bc" => Some(cmin().plus("bc", &["bc1"]).done()),
        "bbc" => Some(cmin().plus("bbc", &["bc1", "bc2", "bc3"]).done()),
        "bbbc" => Some(cmin().plus("bbbc", &["bc1", "bc2", "bc3", "bc4", "bc5"]).done()),
        "ci" => Some(ci_build().done()),
        "cil" => Some(ci_build().plus("cil", &["cl"]).dc(ConsReading::NegConjLeft).done()),
        "cid" => Some(ci_build().plus("cid", &["cd"]).dc(ConsReading::NegConjRight).done()),
        "cib" => Some(ci_build().plus("cib", &["cb"]).dc(ConsReading::NegConjLeft).done()),
        "cie" => Some(ci_build().plus("cie", &["ce"]).done()),
        "cile" => Some(ci_build().plus("cile", &["cl", "ce"]).dc(ConsReading::NegConjLeft).done()),
        "cia" => Some(ci_build().plus("cia", &["ca1", "ca2", "ca3"]).done()),
        "cila" => Some(
            ci_build()
                .plus("cila", &["cl", "ca1", "ca2", "ca3"])
                .dc(ConsReading::NegConjLeft)
                .done(),
        ),
        "cio" => Some(ci_build().plus("cio", &["co1", "co2", "co3"]).done()),
        "cilo" => Some(
            ci_build()
                .plus("cilo", &["cl", "co1", "co2", "co3"])
                .dc(ConsReading::NegConjLeft)
                .done(),
        ),
        "cior" => Some(
            ci_build().plus("cior", &["co1", "co2", "co3", "cr1", "cr2", "cr3"]).done(),
        ),
        "cibor" => Some(
            ci_build()
                .plus("cibor", &["cb", "co1", "co2", "co3", "cr1", "cr2", "cr3"])
                .dc(ConsReading::NegConjLeft)
                .done(),
        ),
        "civ" => Some(ci_build().plus("civ", &["cv1", "cv2", "cv3"]).done()),
        "civw" => Some(ci_build().plus("civw", &["cv1", "cv2", "cv3", "cw"]).done()),
        "cive" => Some(ci_build().plus("cive", &["cv1", "cv2", "cv3", "ce"]).done()),
        "ciw" => Some(ci_build().plus("ciw", &["cw"]).done()),
        "cij" => Some(
            ci_build().plus("cij", &["cj1a", "cj1b", "cj2a", "cj2b", "cj3a", "cj3b"]).done(),
        ),
        "cije" => Some(
            ci_build()
                .plus("cije", &["cj1a", "cj1b", "cj2a", "cj2b", "cj3a", "cj3b", "ce"])
                .done(),
        ),
        "ciorw" => Some(
            ci_build()
                .plus("ciorw", &["co1", "co2", "co3", "cr1", "cr2", "cr3", "cw"])
                .done(),
        ),
        "ciore" => Some(
            ci_build()
                .plus("ciore", &["co1", "co2", "co3", "cr1", "cr2", "cr3", "ce"])
                .done(),
        ),
        "cibaw" => Some(
            ci_build()
                .plus("cibaw", &["cb", "ca1", "ca2", "ca3", "cw"])
                .dc(ConsReading::NegConjLeft)
                .done(),
        ),
        "b1" => {
            // cil without Min9/Min10/Min11, plus the implication-to-bottom
            // reductio.
            let rules: Vec<_> = minimal_axioms()
                .into_iter()
                .filter(|r| !matches!(r.name.as_str(), "Min9" | "Min10" | "Min11"))
                .collect();
            Some(
                Build::new("b1", rules, false)
                    .plus("b1", &["bc1", "bc2", "bc3", "bc4", "bc5", "ci", "cl", "bun"])
                    .dc(ConsReading::NegConjLeft)
                    .done(),
            )
        }
        _ => None,
    };
    if let Some(sys) = fixed {
        return Ok(sys);
    }
    if let Some((num, den)) = name
        .strip_prefix('c')
        .and_then(|rest| rest.split_once('/'))
        .and_then(|(a, b)| Some((a.parse::<u32>().ok()?, b.parse::<u32>().ok()?)))
    {
        if num >= 1 && den == num + 1 {
            let mut sys = system("cila").unwrap();
            sys.name = name.to_string();
            sys.rules.push(mortensen_m1(num));
            for conn in [Conn::And, Conn::Or, Conn::Imp] {
                sys.rules.push(mortensen_m2(num, conn));
            }
            return Ok(sys);
        }
    }
    if let Some(n) = name.strip_prefix('c').and_then(|rest| rest.parse::<u32>().ok()) {
        if n >= 1 {
            let base = system("cila").unwrap();
            let reading = ConsReading::Power(n);
            let rules = base
                .rules
                .iter()
                .map(|r| AxiomaticRule {
                    name: r.name.clone(),
                    premises: r.premises.iter().map(|p| rewrite_schema(p, reading)).collect(),
                    conclusion: rewrite_schema(&r.conclusion, reading),
                })
                .collect();
            return Ok(HilbertSystem {
                name: name.to_string(),
                rules,
                has_cons: true,
                parse_reading: reading,
                dc_reading: Some(ConsReading::NegConjLeft),
            });
        }
    }
    Err(SystemError::Unknown { name: name.to_string(), available: SYSTEM_NAMES.to_vec() })
}

// ---------------------------------------------------------------------------
// Proofs
// ---------------------------------------------------------------------------

/// One proof line: a formula plus its justification.
#[derive(Clone, Debug, PartialEq)]
pub struct ProofStep {
    pub formula: Formula,
    pub just: Justification,
}

/// Step justification. Citations are 1-based indices of earlier steps.
#[derive(Clone, Debug, PartialEq)]
pub enum Justification {
    Premise,
    Rule { name: String, subst: Substitution, from: Vec<usize> },
}

/// A checkable derivation.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Proof {
    pub steps: Vec<ProofStep>,
}

impl Proof {
    /// Formulas of the premise-justified steps, in order of appearance.
    pub fn premises(&self) -> Vec<Formula> {
        let mut out = Vec::new();
        for s in &self.steps {
            if matches!(s.just, Justification::Premise) && !out.contains(&s.formula) {
                out.push(s.formula.clone());
            }
        }
        out
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.steps.last().map(|s| &s.formula)
    }
}

/// Step-level proof failure, with 1-based step number.
#[derive(Debug, Clone, PartialEq)]
pub struct ProofError {
    pub step: usize,
    pub kind: ProofErrorKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ProofErrorKind {
    UnknownRule { rule: String },
    WrongArity { rule: String, expected: usize, got: usize },
    ForwardCitation { cited: usize },
    MissingBinding { metavar: String },
    /// The instantiated i-th rule premise does not match the cited step.
    PremiseMismatch { index: usize, wanted: Formula, cited: Formula },
    /// The instantiated conclusion does not match the step formula.
    ConclusionMismatch { wanted: Formula },
}

impl fmt::Display for ProofError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: ", self.step)?;
        match &self.kind {
            ProofErrorKind::UnknownRule { rule } => write!(f, "unknown rule {rule}"),
            ProofErrorKind::WrongArity { rule, expected, got } => {
                write!(f, "rule {rule} takes {expected} premises, {got} cited")
            }
            ProofErrorKind::ForwardCitation { cited } => {
                write!(f, "citation of step {cited} does not precede this step")
            }
            ProofErrorKind::MissingBinding { metavar } => {
                write!(f, "substitution misses metavariable {metavar}")
            }
            ProofErrorKind::PremiseMismatch { index, wanted, cited } => {
                write!(f, "premise {index} instantiates to {wanted} but cites {cited}")
            }
            ProofErrorKind::ConclusionMismatch { wanted } => {
                write!(f, "conclusion instantiates to {wanted}, not the step formula")
            }
        }
    }
}

impl std::error::Error for ProofError {}

/// Check a proof against a system: every step must be a premise or a
/// correct rule instance over earlier steps.
pub fn check_proof(system: &HilbertSystem, proof: &Proof) -> Result<(), ProofError> {
    for (idx, step) in proof.steps.iter().enumerate() {
        let stepno = idx + 1;
        let err = |kind| ProofError { step: stepno, kind };
        match &step.just {
            Justification::Premise => {}
            Justification::Rule { name, subst, from } => {
                let rule = match system.rule(name) {
                    Some(r) => r.clone(),
                    None => match system.imp_axiom(name) {
                        Some(r) => r,
                        None => {
                            return Err(err(ProofErrorKind::UnknownRule { rule: name.clone() }))
                        }
                    },
                };
                if from.len() != rule.premises.len() {
                    return Err(err(ProofErrorKind::WrongArity {
                        rule: name.clone(),
                        expected: rule.premises.len(),
                        got: from.len(),
                    }));
                }
                for (i, &cited) in from.iter().enumerate() {
                    if cited == 0 || cited > idx {
                        return Err(err(ProofErrorKind::ForwardCitation { cited }));
                    }
                    let wanted = rule.premises[i]
                        .instantiate(subst)
                        .map_err(|e| err(ProofErrorKind::MissingBinding { metavar: e.metavar }))?;
                    let actual = &proof.steps[cited - 1].formula;
                    if &wanted != actual {
                        return Err(err(ProofErrorKind::PremiseMismatch {
                            index: i + 1,
                            wanted,
                            cited: actual.clone(),
                        }));
                    }
                }
                let wanted = rule
                    .conclusion
                    .instantiate(subst)
                    .map_err(|e| err(ProofErrorKind::MissingBinding { metavar: e.metavar }))?;
                if wanted != step.formula {
                    return Err(err(ProofErrorKind::ConclusionMismatch { wanted }));
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Deduction metatheorem
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub enum DeduceError {
    Proof(ProofError),
    /// The system lacks Min1, Min2 or MP.
    MissingCore,
}

impl fmt::Display for DeduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeduceError::Proof(e) => e.fmt(f),
            DeduceError::MissingCore => {
                write!(f, "deduction transform needs Min1, Min2 and MP in the system")
            }
        }
    }
}

impl std::error::Error for DeduceError {}

impl From<ProofError> for DeduceError {
    fn from(e: ProofError) -> Self {
        DeduceError::Proof(e)
    }
}

fn subst2(a: &Formula, b: &Formula) -> Substitution {
    let mut s = Substitution::new();
    s.insert("A".into(), a.clone());
    s.insert("B".into(), b.clone());
    s
}

fn subst3(a: &Formula, b: &Formula, c: &Formula) -> Substitution {
    let mut s = subst2(a, b);
    s.insert("C".into(), c.clone());
    s
}

/// Rewrite applications of premise-bearing rules (other than MP) into
/// their implicational axiom forms followed by a chain of MP steps.
fn eliminate_premise_rules(system: &HilbertSystem, proof: &Proof) -> Proof {
    let mut out = Proof::default();
    // old 1-based index -> new 1-based index
    let mut map: Vec<usize> = Vec::with_capacity(proof.steps.len());
    for step in &proof.steps {
        match &step.just {
            Justification::Rule { name, subst, from } if name != "MP" && !from.is_empty() => {
                let rule = system.rule(name).expect("checked proof");
                let mut current =
                    rule.implicational_form().instantiate(subst).expect("checked substitution");
                out.steps.push(ProofStep {
                    formula: current.clone(),
                    just: Justification::Rule {
                        name: format!("{name}-imp"),
                        subst: subst.clone(),
                        from: Vec::new(),
                    },
                });
                let mut major = out.steps.len();
                for &cited in from {
                    let minor_new = map[cited - 1];
                    let minor_formula = out.steps[minor_new - 1].formula.clone();
                    let next = match &current {
                        Formula::Imp(_, rest) => (**rest).clone(),
                        _ => unreachable!("implicational form is nested implications"),
                    };
                    out.steps.push(ProofStep {
                        formula: next.clone(),
                        just: Justification::Rule {
                            name: "MP".into(),
                            subst: subst2(&minor_formula, &next),
                            from: vec![minor_new, major],
                        },
                    });
                    major = out.steps.len();
                    current = next;
                }
                map.push(out.steps.len());
            }
            _ => {
                let mut step = step.clone();
                if let Justification::Rule { from, .. } = &mut step.just {
                    for c in from.iter_mut() {
                        *c = map[*c - 1];
                    }
                }
                out.steps.push(step);
                map.push(out.steps.len());
            }
        }
    }
    out
}

/// Emit the five-step derivation of `a -> a` and return its final index.
fn emit_identity(out: &mut Proof, a: &Formula) -> usize {
    let a_imp_a = Formula::imp(a.clone(), a.clone());
    let s1 = Formula::imp(a.clone(), a_imp_a.clone());
    let s4 = Formula::imp(a.clone(), Formula::imp(a_imp_a.clone(), a.clone()));
    let s3 = Formula::imp(s4.clone(), a_imp_a.clone());
    let s0 = Formula::imp(s1.clone(), s3.clone());
    // Min2 with A := a, B := a -> a, C := a
    out.steps.push(ProofStep {
        formula: s0,
        just: Justification::Rule {
            name: "Min2".into(),
            subst: subst3(a, &a_imp_a, a),
            from: vec![],
        },
    });
    let i_min2 = out.steps.len();
    // Min1 with A := a, B := a
    out.steps.push(ProofStep {
        formula: s1.clone(),
        just: Justification::Rule { name: "Min1".into(), subst: subst2(a, a), from: vec![] },
    });
    let i_s1 = out.steps.len();
    out.steps.push(ProofStep {
        formula: s3.clone(),
        just: Justification::Rule {
            name: "MP".into(),
            subst: subst2(&s1, &s3),
            from: vec![i_s1, i_min2],
        },
    });
    let i_s3 = out.steps.len();
    // Min1 with A := a, B := a -> a
    out.steps.push(ProofStep {
        formula: s4.clone(),
        just: Justification::Rule { name: "Min1".into(), subst: subst2(a, &a_imp_a), from: vec![] },
    });
    let i_s4 = out.steps.len();
    out.steps.push(ProofStep {
        formula: a_imp_a.clone(),
        just: Justification::Rule {
            name: "MP".into(),
            subst: subst2(&s4, &a_imp_a),
            from: vec![i_s4, i_s3],
        },
    });
    out.steps.len()
}

/// The Deduction Metatheorem as a proof transformation: from a checked
/// proof of `Gamma, a |- b`, build a proof of `Gamma |- a -> b`.
pub fn deduction_transform(
    system: &HilbertSystem,
    proof: &Proof,
    a: &Formula,
) -> Result<Proof, DeduceError> {
    for needed in ["Min1", "Min2", "MP"] {
        if system.rule(needed).is_none() {
            return Err(DeduceError::MissingCore);
        }
    }
    check_proof(system, proof)?;
    let flat = eliminate_premise_rules(system, proof);

    let mut out = Proof::default();
    // new index (1-based) of `a -> phi_i` for each step i of `flat`.
    let mut lifted: Vec<usize> = Vec::with_capacity(flat.steps.len());
    for step in &flat.steps {
        let phi = &step.formula;
        let target = Formula::imp(a.clone(), phi.clone());
        match &step.just {
            Justification::Premise if phi == a => {
                lifted.push(emit_identity(&mut out, a));
            }
            Justification::Premise => {
                out.steps.push(ProofStep { formula: phi.clone(), just: Justification::Premise });
                let base = out.steps.len();
                out.steps.push(ProofStep {
                    formula: Formula::imp(phi.clone(), target.clone()),
                    just: Justification::Rule {
                        name: "Min1".into(),
                        subst: subst2(phi, a),
                        from: vec![],
                    },
                });
                let min1 = out.steps.len();
                out.steps.push(ProofStep {
                    formula: target.clone(),
                    just: Justification::Rule {
                        name: "MP".into(),
                        subst: subst2(phi, &target),
                        from: vec![base, min1],
                    },
                });
                lifted.push(out.steps.len());
            }
            Justification::Rule { name, subst, from } if from.is_empty() => {
                out.steps.push(ProofStep {
                    formula: phi.clone(),
                    just: Justification::Rule {
                        name: name.clone(),
                        subst: subst.clone(),
                        from: vec![],
                    },
                });
                let base = out.steps.len();
                out.steps.push(ProofStep {
                    formula: Formula::imp(phi.clone(), target.clone()),
                    just: Justification::Rule {
                        name: "Min1".into(),
                        subst: subst2(phi, a),
                        from: vec![],
                    },
                });
                let min1 = out.steps.len();
                out.steps.push(ProofStep {
                    formula: target.clone(),
                    just: Justification::Rule {
                        name: "MP".into(),
                        subst: subst2(phi, &target),
                        from: vec![base, min1],
                    },
                });
                lifted.push(out.steps.len());
            }
            Justification::Rule { name, from, .. } => {
                debug_assert_eq!(name, "MP");
                let minor_idx = from[0];
                let psi = flat.steps[minor_idx - 1].formula.clone();
                let a_psi = Formula::imp(a.clone(), psi.clone());
                let a_psip = Formula::imp(a.clone(), Formula::imp(psi.clone(), phi.clone()));
                // Min2 with A := a, B := psi, C := phi
                let min2 = Formula::imp(a_psi.clone(), Formula::imp(a_psip.clone(), target.clone()));
                out.steps.push(ProofStep {
                    formula: min2,
                    just: Justification::Rule {
                        name: "Min2".into(),
                        subst: subst3(a, &psi, phi),
                        from: vec![],
                    },
                });
                let i_min2 = out.steps.len();
                let mid = Formula::imp(a_psip.clone(), target.clone());
                out.steps.push(ProofStep {
                    formula: mid.clone(),
                    just: Justification::Rule {
                        name: "MP".into(),
                        subst: subst2(&a_psi, &mid),
                        from: vec![lifted[minor_idx - 1], i_min2],
                    },
                });
                let i_mid = out.steps.len();
                out.steps.push(ProofStep {
                    formula: target.clone(),
                    just: Justification::Rule {
                        name: "MP".into(),
                        subst: subst2(&a_psip, &target),
                        from: vec![lifted[from[1] - 1], i_mid],
                    },
                });
                lifted.push(out.steps.len());
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Soundness reports
// ---------------------------------------------------------------------------

/// Per-rule verdict against a matrix.
#[derive(Clone, Debug)]
pub struct RuleVerdict {
    pub rule: String,
    pub sound: bool,
    /// Violating metavariable assignment when unsound (value labels).
    pub countermodel: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug)]
pub struct SoundnessReport {
    pub system: String,
    pub logic: String,
    pub verdicts: Vec<RuleVerdict>,
}

impl SoundnessReport {
    pub fn sound(&self) -> bool {
        self.verdicts.iter().all(|v| v.sound)
    }

    pub fn unsound_rules(&self) -> Vec<&str> {
        self.verdicts.iter().filter(|v| !v.sound).map(|v| v.rule.as_str()).collect()
    }
}

/// Check every rule of the system against the matrix.
pub fn soundness_report(
    system: &HilbertSystem,
    logic: &MatrixLogic,
) -> Result<SoundnessReport, EvalError> {
    let mut verdicts = Vec::new();
    for rule in system.rules() {
        let adapted = adapt_rule(system, logic, rule);
        let cm = rule_countermodel(logic, &adapted.premises, &adapted.conclusion)?;
        verdicts.push(RuleVerdict {
            rule: rule.name.clone(),
            sound: cm.is_none(),
            countermodel: cm.map(|asg| {
                asg.into_iter().map(|(name, v)| (name, logic.label(v).to_string())).collect()
            }),
        });
    }
    Ok(SoundnessReport {
        system: system.name().to_string(),
        logic: logic.name().to_string(),
        verdicts,
    })
}

/// Soundness of a single rule against a matrix, with the same schema
/// adaptation as a full report.
pub fn rule_sound_in(
    system: &HilbertSystem,
    logic: &MatrixLogic,
    rule: &AxiomaticRule,
) -> Result<bool, EvalError> {
    let adapted = adapt_rule(system, logic, rule);
    Ok(rule_countermodel(logic, &adapted.premises, &adapted.conclusion)?.is_none())
}

// ---------------------------------------------------------------------------
// Bounded metarule checks
// ---------------------------------------------------------------------------

/// The contraposition/congruence metarules checked over bounded term sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MetaRule {
    /// from A |- B infer ~B |- ~A
    Rc,
    /// from A -||- B infer ~B |- ~A
    Ec,
    /// from A |- B infer oA |- oB
    Ro,
    /// from A -||- B infer oA |- oB
    Eo,
    /// from B -||- (A & ~A) infer ~B -||- ~(A & ~A)
    Rg,
}

impl MetaRule {
    pub fn name(self) -> &'static str {
        match self {
            MetaRule::Rc => "RC",
            MetaRule::Ec => "EC",
            MetaRule::Ro => "RO",
            MetaRule::Eo => "EO",
            MetaRule::Rg => "RG",
        }
    }

    pub fn from_name(name: &str) -> Option<MetaRule> {
        Some(match name.to_ascii_uppercase().as_str() {
            "RC" => MetaRule::Rc,
            "EC" => MetaRule::Ec,
            "RO" => MetaRule::Ro,
            "EO" => MetaRule::Eo,
            "RG" => MetaRule::Rg,
            _ => return None,
        })
    }
}

/// Outcome of a bounded metarule check.
#[derive(Clone, Debug)]
pub enum MetaVerdict {
    NoViolation { bound: usize, terms: usize },
    Violation { premise_term: Schema, conclusion_term: Schema },
}

impl MetaVerdict {
    pub fn ok(&self) -> bool {
        matches!(self, MetaVerdict::NoViolation { .. })
    }
}

/// Check a metarule over all pairs of term functions definable by terms of
/// size at most `bound` in two metavariables.
pub fn metarule_sound_bounded(
    logic: &MatrixLogic,
    rule: MetaRule,
    bound: usize,
) -> Result<MetaVerdict, EvalError> {
    let needs_cons = matches!(rule, MetaRule::Ro | MetaRule::Eo);
    if needs_cons && !logic.has_table(Conn::Cons) {
        return Err(EvalError::MissingTable { conn: "o", logic: logic.name().to_string() });
    }
    let set = crate::clone::bounded_terms(logic, 2, bound);
    let n = logic.n();
    let points = n * n;
    assert!(points <= 64, "designation masks fit in u64");
    let des_mask = |table: &[Value]| -> u64 {
        let mut m = 0u64;
        for (i, &v) in table.iter().enumerate() {
            if logic.is_designated(v) {
                m |= 1 << i;
            }
        }
        m
    };
    let neg_table =
        |table: &[Value]| -> Vec<Value> { table.iter().map(|&v| logic.neg_value(v)).collect() };
    let cons_tab = logic.unary_table(Conn::Cons);
    let cons_of = |table: &[Value]| -> Option<Vec<Value>> {
        cons_tab.map(|t| table.iter().map(|&v| t[v as usize]).collect())
    };

    struct Entry {
        mask: u64,
        neg_mask: u64,
        cons_mask: u64,
    }
    let entries: Vec<Entry> = set
        .functions
        .iter()
        .map(|f| Entry {
            mask: des_mask(&f.table),
            neg_mask: des_mask(&neg_table(&f.table)),
            cons_mask: cons_of(&f.table).map(|t| des_mask(&t)).unwrap_or(0),
        })
        .collect();

    let subset = |a: u64, b: u64| a & !b == 0;

    match rule {
        MetaRule::Rc | MetaRule::Ro | MetaRule::Ec | MetaRule::Eo => {
            let equational = matches!(rule, MetaRule::Ec | MetaRule::Eo);
            let on_cons = matches!(rule, MetaRule::Ro | MetaRule::Eo);
            for (i, f) in entries.iter().enumerate() {
                for (j, g) in entries.iter().enumerate() {
                    let premise_holds =
                        if equational { f.mask == g.mask } else { subset(f.mask, g.mask) };
                    if !premise_holds {
                        continue;
                    }
                    let conclusion_holds = if on_cons {
                        subset(f.cons_mask, g.cons_mask)
                    } else {
                        subset(g.neg_mask, f.neg_mask)
                    };
                    if !conclusion_holds {
                        return Ok(MetaVerdict::Violation {
                            premise_term: set.functions[i].witness.clone(),
                            conclusion_term: set.functions[j].witness.clone(),
                        });
                    }
                }
            }
        }
        MetaRule::Rg => {
            // h(x, y) = x & ~x
            let h: Vec<Value> = (0..points)
                .map(|idx| {
                    let x = (idx / n) as Value;
                    logic.apply_binary(Conn::And, x, logic.neg_value(x)).unwrap()
                })
                .collect();
            let h_mask = des_mask(&h);
            let h_neg_mask = des_mask(&neg_table(&h));
            for (i, f) in entries.iter().enumerate() {
                if f.mask == h_mask && f.neg_mask != h_neg_mask {
                    return Ok(MetaVerdict::Violation {
                        premise_term: set.functions[i].witness.clone(),
                        conclusion_term: crate::formula::parse_schema("A & ~A").unwrap(),
                    });
                }
            }
        }
    }
    Ok(MetaVerdict::NoViolation { bound, terms: set.len() })
}

// ---------------------------------------------------------------------------
// Proof files
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum ByDoc {
    Named(String),
    Rule {
        rule: String,
        #[serde(default)]
        subst: std::collections::BTreeMap<String, String>,
        #[serde(default)]
        from: Vec<usize>,
    },
}

#[derive(Serialize, Deserialize)]
struct StepDoc {
    formula: String,
    by: ByDoc,
}

#[derive(Debug)]
pub enum ProofFileError {
    Json(String),
    Formula { step: usize, error: String },
    BadJustification { step: usize, detail: String },
}

impl fmt::Display for ProofFileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProofFileError::Json(e) => write!(f, "malformed proof file: {e}"),
            ProofFileError::Formula { step, error } => write!(f, "step {step}: {error}"),
            ProofFileError::BadJustification { step, detail } => write!(f, "step {step}: {detail}"),
        }
    }
}

impl std::error::Error for ProofFileError {}

/// Parse a proof from its JSON document (a list of steps) in the language
/// of the given system.
pub fn proof_from_json(text: &str, system: &HilbertSystem) -> Result<Proof, ProofFileError> {
    let docs: Vec<StepDoc> =
        serde_json::from_str(text).map_err(|e| ProofFileError::Json(e.to_string()))?;
    let mut steps = Vec::new();
    for (i, doc) in docs.iter().enumerate() {
        let stepno = i + 1;
        let formula = system
            .parse_formula(&doc.formula)
            .map_err(|e| ProofFileError::Formula { step: stepno, error: e.to_string() })?;
        let just = match &doc.by {
            ByDoc::Named(s) if s == "premise" => Justification::Premise,
            ByDoc::Named(s) => {
                return Err(ProofFileError::BadJustification {
                    step: stepno,
                    detail: format!("unknown justification {s:?}; use \"premise\" or a rule object"),
                })
            }
            ByDoc::Rule { rule, subst, from } => {
                let mut sub = Substitution::new();
                for (k, v) in subst {
                    let f = system.parse_formula(v).map_err(|e| ProofFileError::Formula {
                        step: stepno,
                        error: format!("substitution for {k}: {e}"),
                    })?;
                    sub.insert(k.clone(), f);
                }
                Justification::Rule { name: rule.clone(), subst: sub, from: from.clone() }
            }
        };
        steps.push(ProofStep { formula, just });
    }
    Ok(Proof { steps })
}

/// Serialize a proof to the JSON step-list format.
pub fn proof_to_json(proof: &Proof) -> String {
    let docs: Vec<StepDoc> = proof
        .steps
        .iter()
        .map(|s| StepDoc {
            formula: s.formula.to_string(),
            by: match &s.just {
                Justification::Premise => ByDoc::Named("premise".into()),
                Justification::Rule { name, subst, from } => ByDoc::Rule {
                    rule: name.clone(),
                    subst: subst.iter().map(|(k, v)| (k.clone(), v.to_string())).collect(),
                    from: from.clone(),
                },
            },
        })
        .collect();
    serde_json::to_string_pretty(&docs).expect("proof serializes")
}

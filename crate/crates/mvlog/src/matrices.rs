//! Finite logical matrices and truth-functional semantics.
//!
//! A [`MatrixLogic`] is a finite value set with a designated subset and one
//! total table per connective. Validity, entailment and rule soundness are
//! decided by exhausting valuations.

use crate::clone::{self, CloneError, CloneSet};
use crate::formula::{Formula, Schema};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Index into a matrix's value list.
pub type Value = u8;

/// Total assignment of values to atoms.
pub type Valuation = BTreeMap<String, Value>;

/// Connective symbols carried by a matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Conn {
    Neg,
    Cons,
    Incons,
    And,
    Or,
    Imp,
}

impl Conn {
    pub fn arity(self) -> usize {
        match self {
            Conn::Neg | Conn::Cons | Conn::Incons => 1,
            Conn::And | Conn::Or | Conn::Imp => 2,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Conn::Neg => "~",
            Conn::Cons => "o",
            Conn::Incons => "*",
            Conn::And => "&",
            Conn::Or => "|",
            Conn::Imp => "->",
        }
    }

    pub const ALL: [Conn; 6] = [Conn::Neg, Conn::Cons, Conn::Incons, Conn::And, Conn::Or, Conn::Imp];
}

/// A finite logical matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixLogic {
    name: String,
    values: Vec<String>,
    designated: Vec<bool>,
    neg: Vec<Value>,
    and: Vec<Value>,
    or: Vec<Value>,
    imp: Vec<Value>,
    cons: Option<Vec<Value>>,
    incons: Option<Vec<Value>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    /// A table has the wrong number of entries for the value count.
    TableSize { conn: &'static str, expected: usize, got: usize },
    /// A table entry or designated index is out of range.
    ValueOutOfRange { what: String },
    /// Designated set empty or total.
    DegenerateDesignated,
    /// Fewer than two values, or duplicate labels.
    BadValues(String),
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::TableSize { conn, expected, got } => {
                write!(f, "table size mismatch for {conn}: expected {expected} entries, got {got}")
            }
            MatrixError::ValueOutOfRange { what } => write!(f, "value out of range: {what}"),
            MatrixError::DegenerateDesignated => {
                write!(f, "designated set must be nonempty and proper")
            }
            MatrixError::BadValues(msg) => write!(f, "bad value list: {msg}"),
        }
    }
}

impl std::error::Error for MatrixError {}

impl MatrixLogic {
    /// Build a matrix, validating sizes, ranges and the designated set.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        values: &[&str],
        designated: &[&str],
        neg: Vec<Value>,
        and: Vec<Value>,
        or: Vec<Value>,
        imp: Vec<Value>,
        cons: Option<Vec<Value>>,
        incons: Option<Vec<Value>>,
    ) -> Result<MatrixLogic, MatrixError> {
        let n = values.len();
        if n < 2 {
            return Err(MatrixError::BadValues("need at least two values".into()));
        }
        let labels: BTreeSet<&&str> = values.iter().collect();
        if labels.len() != n {
            return Err(MatrixError::BadValues("duplicate labels".into()));
        }
        let mut des = vec![false; n];
        for d in designated {
            let idx = values
                .iter()
                .position(|v| v == d)
                .ok_or_else(|| MatrixError::ValueOutOfRange { what: format!("designated label {d}") })?;
            des[idx] = true;
        }
        let count = des.iter().filter(|b| **b).count();
        if count == 0 || count == n {
            return Err(MatrixError::DegenerateDesignated);
        }
        let check_unary = |conn: &'static str, t: &[Value]| -> Result<(), MatrixError> {
            if t.len() != n {
                return Err(MatrixError::TableSize { conn, expected: n, got: t.len() });
            }
            for &e in t {
                if e as usize >= n {
                    return Err(MatrixError::ValueOutOfRange { what: format!("{conn} entry {e}") });
                }
            }
            Ok(())
        };
        let check_binary = |conn: &'static str, t: &[Value]| -> Result<(), MatrixError> {
            if t.len() != n * n {
                return Err(MatrixError::TableSize { conn, expected: n * n, got: t.len() });
            }
            for &e in t {
                if e as usize >= n {
                    return Err(MatrixError::ValueOutOfRange { what: format!("{conn} entry {e}") });
                }
            }
            Ok(())
        };
        check_unary("neg", &neg)?;
        check_binary("and", &and)?;
        check_binary("or", &or)?;
        check_binary("imp", &imp)?;
        if let Some(t) = &cons {
            check_unary("cons", t)?;
        }
        if let Some(t) = &incons {
            check_unary("incons", t)?;
        }
        Ok(MatrixLogic {
            name: name.to_string(),
            values: values.iter().map(|s| s.to_string()).collect(),
            designated: des,
            neg,
            and,
            or,
            imp,
            cons,
            incons,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: &str) {
        self.name = name.to_string();
    }

    /// Number of truth values.
    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.values
    }

    pub fn label(&self, v: Value) -> &str {
        &self.values[v as usize]
    }

    pub fn value_of_label(&self, label: &str) -> Option<Value> {
        self.values.iter().position(|l| l == label).map(|i| i as Value)
    }

    pub fn is_designated(&self, v: Value) -> bool {
        self.designated[v as usize]
    }

    pub fn designated_values(&self) -> Vec<Value> {
        (0..self.n() as Value).filter(|&v| self.is_designated(v)).collect()
    }

    pub fn has_table(&self, conn: Conn) -> bool {
        match conn {
            Conn::Cons => self.cons.is_some(),
            Conn::Incons => self.incons.is_some(),
            _ => true,
        }
    }

    pub fn unary_table(&self, conn: Conn) -> Option<&[Value]> {
        match conn {
            Conn::Neg => Some(&self.neg),
            Conn::Cons => self.cons.as_deref(),
            Conn::Incons => self.incons.as_deref(),
            _ => None,
        }
    }

    pub fn binary_table(&self, conn: Conn) -> Option<&[Value]> {
        match conn {
            Conn::And => Some(&self.and),
            Conn::Or => Some(&self.or),
            Conn::Imp => Some(&self.imp),
            _ => None,
        }
    }

    /// Add or replace the `*` table (used when a source gives `*` as the
    /// negation of the `o` column).
    pub fn with_incons(mut self, incons: Vec<Value>) -> Result<Self, MatrixError> {
        if incons.len() != self.n() || incons.iter().any(|&e| e as usize >= self.n()) {
            return Err(MatrixError::TableSize {
                conn: "incons",
                expected: self.n(),
                got: incons.len(),
            });
        }
        self.incons = Some(incons);
        Ok(self)
    }

    pub fn apply_unary(&self, conn: Conn, x: Value) -> Option<Value> {
        self.unary_table(conn).map(|t| t[x as usize])
    }

    pub fn apply_binary(&self, conn: Conn, x: Value, y: Value) -> Option<Value> {
        self.binary_table(conn).map(|t| t[x as usize * self.n() + y as usize])
    }

    pub fn neg_value(&self, x: Value) -> Value {
        self.neg[x as usize]
    }

    /// All connectives with a table.
    pub fn connectives(&self) -> Vec<Conn> {
        Conn::ALL.iter().copied().filter(|c| self.has_table(*c)).collect()
    }
}

impl fmt::Debug for MatrixLogic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixLogic({}, {} values)", self.name, self.n())
    }
}

/// Evaluation and query errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    MissingAtom { atom: String },
    MissingTable { conn: &'static str, logic: String },
    DomainTooLarge { n: usize, limit: usize, hint: &'static str },
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::MissingAtom { atom } => write!(f, "valuation has no value for atom {atom}"),
            EvalError::MissingTable { conn, logic } => {
                write!(f, "logic {logic} has no table for {conn}")
            }
            EvalError::DomainTooLarge { n, limit, hint } => {
                write!(f, "domain of {n} values exceeds the limit {limit}; {hint}")
            }
        }
    }
}

impl std::error::Error for EvalError {}

impl From<CloneError> for EvalError {
    fn from(e: CloneError) -> Self {
        EvalError::DomainTooLarge { n: e.n, limit: e.limit, hint: "use bounded_terms" }
    }
}

/// Evaluate a formula bottom-up under a valuation.
pub fn evaluate(logic: &MatrixLogic, f: &Formula, v: &Valuation) -> Result<Value, EvalError> {
    match f {
        Formula::Atom(a) => v
            .get(a)
            .copied()
            .ok_or_else(|| EvalError::MissingAtom { atom: a.clone() }),
        Formula::Neg(x) => Ok(logic.neg_value(evaluate(logic, x, v)?)),
        Formula::Cons(x) => {
            let inner = evaluate(logic, x, v)?;
            logic
                .apply_unary(Conn::Cons, inner)
                .ok_or_else(|| EvalError::MissingTable { conn: "o", logic: logic.name.clone() })
        }
        Formula::Incons(x) => {
            let inner = evaluate(logic, x, v)?;
            logic
                .apply_unary(Conn::Incons, inner)
                .ok_or_else(|| EvalError::MissingTable { conn: "*", logic: logic.name.clone() })
        }
        Formula::And(a, b) => {
            let (x, y) = (evaluate(logic, a, v)?, evaluate(logic, b, v)?);
            Ok(logic.apply_binary(Conn::And, x, y).unwrap())
        }
        Formula::Or(a, b) => {
            let (x, y) = (evaluate(logic, a, v)?, evaluate(logic, b, v)?);
            Ok(logic.apply_binary(Conn::Or, x, y).unwrap())
        }
        Formula::Imp(a, b) => {
            let (x, y) = (evaluate(logic, a, v)?, evaluate(logic, b, v)?);
            Ok(logic.apply_binary(Conn::Imp, x, y).unwrap())
        }
    }
}

/// Evaluate a schema under an assignment of values to its metavariables.
/// The assignment is a small slice of (name, value) pairs.
pub fn eval_schema(
    logic: &MatrixLogic,
    s: &Schema,
    asg: &[(&str, Value)],
) -> Result<Value, EvalError> {
    match s {
        Schema::MetaVar(v) => asg
            .iter()
            .find(|(n, _)| n == v)
            .map(|(_, x)| *x)
            .ok_or_else(|| EvalError::MissingAtom { atom: v.clone() }),
        Schema::Neg(x) => Ok(logic.neg_value(eval_schema(logic, x, asg)?)),
        Schema::Cons(x) => {
            let inner = eval_schema(logic, x, asg)?;
            logic
                .apply_unary(Conn::Cons, inner)
                .ok_or_else(|| EvalError::MissingTable { conn: "o", logic: logic.name.clone() })
        }
        Schema::Incons(x) => {
            let inner = eval_schema(logic, x, asg)?;
            logic
                .apply_unary(Conn::Incons, inner)
                .ok_or_else(|| EvalError::MissingTable { conn: "*", logic: logic.name.clone() })
        }
        Schema::And(a, b) => {
            let (x, y) = (eval_schema(logic, a, asg)?, eval_schema(logic, b, asg)?);
            Ok(logic.apply_binary(Conn::And, x, y).unwrap())
        }
        Schema::Or(a, b) => {
            let (x, y) = (eval_schema(logic, a, asg)?, eval_schema(logic, b, asg)?);
            Ok(logic.apply_binary(Conn::Or, x, y).unwrap())
        }
        Schema::Imp(a, b) => {
            let (x, y) = (eval_schema(logic, a, asg)?, eval_schema(logic, b, asg)?);
            Ok(logic.apply_binary(Conn::Imp, x, y).unwrap())
        }
    }
}

/// Iterate over all assignments of values to the given names, calling the
/// closure until it returns `Some`.
fn search_assignments<T>(
    n: usize,
    names: &[String],
    mut f: impl FnMut(&[(&str, Value)]) -> Result<Option<T>, EvalError>,
) -> Result<Option<T>, EvalError> {
    let k = names.len();
    let mut asg: Vec<(&str, Value)> = names.iter().map(|s| (s.as_str(), 0)).collect();
    let total = (n as u64).checked_pow(k as u32).expect("assignment space overflow");
    for idx in 0..total {
        let mut rest = idx;
        for slot in asg.iter_mut() {
            slot.1 = (rest % n as u64) as Value;
            rest /= n as u64;
        }
        if let Some(t) = f(&asg)? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Truth-functional schema validity: every assignment of values to the
/// metavariables designates the schema.
pub fn is_valid(logic: &MatrixLogic, s: &Schema) -> Result<bool, EvalError> {
    let names: Vec<String> = s.metavars().into_iter().collect();
    let counterexample = search_assignments(logic.n(), &names, |asg| {
        let v = eval_schema(logic, s, asg)?;
        Ok(if logic.is_designated(v) { None } else { Some(()) })
    })?;
    Ok(counterexample.is_none())
}

/// Entailment by exhaustive valuation over the atoms of the query.
pub fn entails(
    logic: &MatrixLogic,
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<bool, EvalError> {
    Ok(find_countermodel(logic, premises, conclusion)?.is_none())
}

/// Witness extraction for entailment: a valuation designating all premises
/// but not the conclusion, when one exists.
pub fn find_countermodel(
    logic: &MatrixLogic,
    premises: &[Formula],
    conclusion: &Formula,
) -> Result<Option<Valuation>, EvalError> {
    let mut atoms = conclusion.atoms();
    for p in premises {
        atoms.extend(p.atoms());
    }
    let names: Vec<String> = atoms.into_iter().collect();
    search_assignments(logic.n(), &names, |asg| {
        let val: Valuation = asg.iter().map(|(n, v)| (n.to_string(), *v)).collect();
        for p in premises {
            if !logic.is_designated(evaluate(logic, p, &val)?) {
                return Ok(None);
            }
        }
        if logic.is_designated(evaluate(logic, conclusion, &val)?) {
            Ok(None)
        } else {
            Ok(Some(val))
        }
    })
}

/// Rule soundness: every assignment of values to the metavariables of the
/// rule designating all premise schemas designates the conclusion schema.
pub fn rule_sound(
    logic: &MatrixLogic,
    premises: &[Schema],
    conclusion: &Schema,
) -> Result<bool, EvalError> {
    Ok(rule_countermodel(logic, premises, conclusion)?.is_none())
}

/// Violating assignment for an unsound rule.
pub fn rule_countermodel(
    logic: &MatrixLogic,
    premises: &[Schema],
    conclusion: &Schema,
) -> Result<Option<Vec<(String, Value)>>, EvalError> {
    let mut vars = conclusion.metavars();
    for p in premises {
        vars.extend(p.metavars());
    }
    let names: Vec<String> = vars.into_iter().collect();
    search_assignments(logic.n(), &names, |asg| {
        for p in premises {
            if !logic.is_designated(eval_schema(logic, p, asg)?) {
                return Ok(None);
            }
        }
        if logic.is_designated(eval_schema(logic, conclusion, asg)?) {
            Ok(None)
        } else {
            Ok(Some(asg.iter().map(|(n, v)| (n.to_string(), *v)).collect()))
        }
    })
}

// ---------------------------------------------------------------------------
// Explosion profile
// ---------------------------------------------------------------------------

/// Outcome of the bounded partial-explosion search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartialExplosion {
    /// Some non-top unary schema is entailed by every contradiction.
    Witness(Schema),
    /// Every qualifying schema would have to be a top particle.
    OnlyTopParticles,
}

/// Matrix-level classification of the explosion principles.
#[derive(Clone, Debug)]
pub struct ExplosionProfile {
    pub explosive: bool,
    pub paraconsistent: bool,
    /// Unary term whose range avoids the designated values.
    pub bottom: Option<Schema>,
    /// Unary term `f` with `A, f(A)` never jointly designated, f not a bottom.
    pub strong_negation: Option<Schema>,
    /// Singleton gentle-explosion witness `f` for `Delta(A) = {f(A)}`.
    pub gentle: Option<Schema>,
    /// Unary term `g` with `g(C), ~g(C)` never jointly designated, `g` and
    /// `~g` not bottoms.
    pub controllable: Option<Schema>,
    pub partial: PartialExplosion,
    /// Whether the unary clone used was exact or a size-bounded slice.
    pub clone_exact: bool,
    pub bound: usize,
}

/// Classify the matrix against the explosion principles, searching the
/// unary clone (exact for small domains, term-size-bounded otherwise).
pub fn classify_explosion(
    logic: &MatrixLogic,
    bound: usize,
) -> Result<ExplosionProfile, EvalError> {
    let conns = logic.connectives();
    let (set, exact) = if logic.n() <= clone::EXACT_LIMIT {
        (clone::clone_functions(logic, 1, &conns)?, true)
    } else {
        (clone::bounded_terms(logic, 1, bound), false)
    };

    let des = |v: Value| logic.is_designated(v);
    let nvals = logic.n() as Value;
    let all_values = || (0..nvals).collect::<Vec<_>>();

    let explosive = all_values()
        .iter()
        .all(|&x| !(des(x) && des(logic.neg_value(x))));
    let some_contradictory = all_values()
        .iter()
        .any(|&x| des(x) && des(logic.neg_value(x)));
    let some_undesignated = all_values().iter().any(|&x| !des(x));
    let paraconsistent = some_contradictory && some_undesignated;

    let is_bottom = |table: &[Value]| table.iter().all(|&v| !des(v));
    let bottom = set
        .functions
        .iter()
        .find(|f| is_bottom(&f.table))
        .map(|f| f.witness.clone());

    let strong_negation = set
        .functions
        .iter()
        .find(|f| {
            !is_bottom(&f.table)
                && all_values().iter().all(|&x| !(des(x) && des(f.table[x as usize])))
        })
        .map(|f| f.witness.clone());

    let gentle = set
        .functions
        .iter()
        .find(|f| {
            let never_all = all_values().iter().all(|&x| {
                !(des(x) && des(logic.neg_value(x)) && des(f.table[x as usize]))
            });
            let with_pos = all_values().iter().any(|&x| des(x) && des(f.table[x as usize]));
            let with_neg = all_values()
                .iter()
                .any(|&x| des(logic.neg_value(x)) && des(f.table[x as usize]));
            never_all && with_pos && with_neg
        })
        .map(|f| f.witness.clone());

    let controllable = set
        .functions
        .iter()
        .find(|f| {
            let never_both = all_values().iter().all(|&c| {
                let g = f.table[c as usize];
                !(des(g) && des(logic.neg_value(g)))
            });
            let g_not_bottom = all_values().iter().any(|&c| des(f.table[c as usize]));
            let ng_not_bottom = all_values()
                .iter()
                .any(|&c| des(logic.neg_value(f.table[c as usize])));
            never_both && g_not_bottom && ng_not_bottom
        })
        .map(|f| f.witness.clone());

    // {A, ~A} |= sigma(C) for fresh C: whenever some x has x and ~x both
    // designated, sigma must be designated at every value of C.
    let partial = {
        let witness = set.functions.iter().find(|f| {
            let not_top = all_values().iter().any(|&y| !des(f.table[y as usize]));
            let entailed = !some_contradictory
                || all_values().iter().all(|&y| des(f.table[y as usize]));
            not_top && entailed
        });
        match witness {
            Some(f) => PartialExplosion::Witness(f.witness.clone()),
            None => PartialExplosion::OnlyTopParticles,
        }
    };

    Ok(ExplosionProfile {
        explosive,
        paraconsistent,
        bottom,
        strong_negation,
        gentle,
        controllable,
        partial,
        clone_exact: exact,
        bound,
    })
}

/// Re-verify every witness stored in a profile by exhaustive evaluation.
pub fn verify_profile(logic: &MatrixLogic, profile: &ExplosionProfile) -> Result<bool, EvalError> {
    let des = |v: Value| logic.is_designated(v);
    let values: Vec<Value> = (0..logic.n() as Value).collect();
    let table_of = |s: &Schema| -> Result<Vec<Value>, EvalError> {
        let var = s.metavars().into_iter().next().unwrap_or_else(|| "A".into());
        values
            .iter()
            .map(|&x| eval_schema(logic, s, &[(var.as_str(), x)]))
            .collect()
    };
    if let Some(b) = &profile.bottom {
        if table_of(b)?.iter().any(|&v| des(v)) {
            return Ok(false);
        }
    }
    if let Some(s) = &profile.strong_negation {
        let t = table_of(s)?;
        if t.iter().all(|&v| !des(v)) {
            return Ok(false);
        }
        if values.iter().any(|&x| des(x) && des(t[x as usize])) {
            return Ok(false);
        }
    }
    if let Some(g) = &profile.gentle {
        let t = table_of(g)?;
        let never_all = values
            .iter()
            .all(|&x| !(des(x) && des(logic.neg_value(x)) && des(t[x as usize])));
        let with_pos = values.iter().any(|&x| des(x) && des(t[x as usize]));
        let with_neg = values
            .iter()
            .any(|&x| des(logic.neg_value(x)) && des(t[x as usize]));
        if !(never_all && with_pos && with_neg) {
            return Ok(false);
        }
    }
    if let Some(c) = &profile.controllable {
        let t = table_of(c)?;
        let never_both = values.iter().all(|&x| {
            let g = t[x as usize];
            !(des(g) && des(logic.neg_value(g)))
        });
        let g_ok = values.iter().any(|&x| des(t[x as usize]));
        let ng_ok = values.iter().any(|&x| des(logic.neg_value(t[x as usize])));
        if !(never_both && g_ok && ng_ok) {
            return Ok(false);
        }
    }
    Ok(true)
}

// Re-exports so callers can treat the clone machinery as part of this
// module's surface.
pub use crate::clone::{bounded_terms, clone_functions, TermFunction};

/// Exact clone closure or an error pointing at [`bounded_terms`].
pub fn clone_functions_checked(
    logic: &MatrixLogic,
    arity: u8,
    conns: &[Conn],
) -> Result<CloneSet, EvalError> {
    Ok(clone::clone_functions(logic, arity, conns)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::{parse_formula, parse_schema};
    use crate::registry;

    fn val(logic: &MatrixLogic, pairs: &[(&str, &str)]) -> Valuation {
        pairs
            .iter()
            .map(|(a, l)| (a.to_string(), logic.value_of_label(l).unwrap()))
            .collect()
    }

    #[test]
    fn evaluate_pac_and_lfi1() {
        let pac = registry::builtin("pac").unwrap();
        let f = parse_formula("~p").unwrap();
        let v = val(&pac, &[("p", "1/2")]);
        let out = evaluate(&pac, &f, &v).unwrap();
        assert_eq!(pac.label(out), "1/2");

        let lfi1 = registry::builtin("lfi1").unwrap();
        let f = parse_formula("o p").unwrap();
        let v = val(&lfi1, &[("p", "1/2")]);
        assert_eq!(lfi1.label(evaluate(&lfi1, &f, &v).unwrap()), "0");

        let p1 = registry::builtin("p1").unwrap();
        let f = parse_formula("~(p & ~p)").unwrap();
        let v = val(&p1, &[("p", "1/2")]);
        assert_eq!(p1.label(evaluate(&p1, &f, &v).unwrap()), "0");
    }

    #[test]
    fn validity_examples() {
        let pac = registry::builtin("pac").unwrap();
        assert!(!is_valid(&pac, &parse_schema("A -> (~A -> B)").unwrap()).unwrap());
        let p1 = registry::builtin("p1").unwrap();
        assert!(!is_valid(&p1, &parse_schema("~(A & ~A)").unwrap()).unwrap());
        let lfi1 = registry::builtin("lfi1").unwrap();
        assert!(is_valid(&lfi1, &parse_schema("~(A & ~A)").unwrap()).unwrap());
    }

    #[test]
    fn entailment_and_countermodels() {
        let pac = registry::builtin("pac").unwrap();
        let p = parse_formula("p").unwrap();
        let np = parse_formula("~p").unwrap();
        let q = parse_formula("q").unwrap();
        assert!(!entails(&pac, &[p.clone(), np.clone()], &q).unwrap());
        let cm = find_countermodel(&pac, &[p.clone(), np.clone()], &q)
            .unwrap()
            .unwrap();
        assert_eq!(pac.label(cm["p"]), "1/2");
        assert_eq!(pac.label(cm["q"]), "0");

        let lfi1 = registry::builtin("lfi1").unwrap();
        let op = parse_formula("o p").unwrap();
        assert!(entails(&lfi1, &[op, p.clone(), np.clone()], &q).unwrap());
        let ocm = find_countermodel(&lfi1, &[p.clone(), np.clone()], &parse_formula("o p").unwrap())
            .unwrap()
            .unwrap();
        assert_eq!(lfi1.label(ocm["p"]), "1/2");

        let cpl = registry::builtin("cpl").unwrap();
        assert!(entails(&cpl, &[p.clone(), parse_formula("p -> q").unwrap()], &q).unwrap());
        assert!(find_countermodel(&cpl, std::slice::from_ref(&p), &p).unwrap().is_none());
    }

    #[test]
    fn rule_soundness_examples() {
        let pac = registry::builtin("pac").unwrap();
        let mp_prem = [parse_schema("A").unwrap(), parse_schema("A -> B").unwrap()];
        assert!(rule_sound(&pac, &mp_prem, &parse_schema("B").unwrap()).unwrap());

        let lfi1 = registry::builtin("lfi1").unwrap();
        let bc1 = [
            parse_schema("o A").unwrap(),
            parse_schema("A").unwrap(),
            parse_schema("~A").unwrap(),
        ];
        assert!(rule_sound(&lfi1, &bc1, &parse_schema("B").unwrap()).unwrap());

        let m23 = registry::builtin("thm3.23").unwrap();
        assert!(!rule_sound(
            &m23,
            &[parse_schema("~o A").unwrap()],
            &parse_schema("*A").unwrap()
        )
        .unwrap());
    }

    #[test]
    fn missing_table_reported() {
        let pac = registry::builtin("pac").unwrap();
        let err = is_valid(&pac, &parse_schema("o A").unwrap()).unwrap_err();
        assert!(matches!(err, EvalError::MissingTable { conn: "o", .. }));
    }

    #[test]
    fn pac_profile() {
        let pac = registry::builtin("pac").unwrap();
        let prof = classify_explosion(&pac, 6).unwrap();
        assert!(!prof.explosive);
        assert!(prof.paraconsistent);
        assert!(prof.bottom.is_none());
        assert!(prof.strong_negation.is_none());
        assert!(prof.gentle.is_none());
        assert_eq!(prof.partial, PartialExplosion::OnlyTopParticles);
        assert!(prof.clone_exact);
        assert!(verify_profile(&pac, &prof).unwrap());
    }

    #[test]
    fn lfi1_profile() {
        let lfi1 = registry::builtin("lfi1").unwrap();
        let prof = classify_explosion(&lfi1, 6).unwrap();
        assert!(prof.paraconsistent);
        assert!(prof.bottom.is_some());
        assert!(prof.strong_negation.is_some());
        assert!(prof.gentle.is_some());
        assert!(prof.controllable.is_some());
        assert!(verify_profile(&lfi1, &prof).unwrap());
    }

    #[test]
    fn paraconsistent_builtins_admit_no_partial_explosion() {
        // wherever some value is contradictory-yet-designated, only top
        // particles could witness partial explosion
        for entry in registry::catalog() {
            let profile = classify_explosion(&entry.logic, 5).unwrap();
            if profile.paraconsistent {
                assert_eq!(
                    profile.partial,
                    PartialExplosion::OnlyTopParticles,
                    "{}",
                    entry.key
                );
            }
        }
    }

    #[test]
    fn classical_profile() {
        let ecpl = registry::builtin("ecpl").unwrap();
        let prof = classify_explosion(&ecpl, 6).unwrap();
        assert!(prof.explosive);
        assert!(!prof.paraconsistent);
        assert!(prof.bottom.is_some());
        assert!(matches!(prof.partial, PartialExplosion::Witness(_)));
        assert!(verify_profile(&ecpl, &prof).unwrap());
    }
}

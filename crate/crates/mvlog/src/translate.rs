//! Conservative translations between logics, bounded conservativity
//! oracles, and hyperclassical term synthesis.

use crate::clone::{clone_functions, CloneSet};
use crate::formula::{Formula, Schema};
use crate::matrices::{Conn, EvalError, MatrixLogic, Value};
use crate::registry;
use std::fmt;
use std::sync::OnceLock;

/// The named translations.
///
/// * `t1` maps classical formulas by rewriting `~A` to the strong negation
///   `~t(A) & o t(A)`; everything else is structural.
/// * `t1e` extends `t1` to the consistency-marked classical language with
///   `o A` mapped to `o o t(A)`.
/// * `t2-cons` and `t2-conj` leave connectives alone but relocate atoms to
///   `o p` (resp. `p & o p`); the two variants exist because the printed
///   atom clause of this mapping admits both readings, and the bounded
///   oracle is the arbiter.
/// * `p1embed` embeds the smallest of the three-valued maximal logics into
///   any family member by flattening every compound through the doubled
///   classical negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Translation {
    T1,
    T1e,
    T2Cons,
    T2Conj,
    P1Embed,
}

pub const TRANSLATION_NAMES: [&str; 5] = ["t1", "t1e", "t2-cons", "t2-conj", "p1embed"];

impl Translation {
    pub fn name(self) -> &'static str {
        match self {
            Translation::T1 => "t1",
            Translation::T1e => "t1e",
            Translation::T2Cons => "t2-cons",
            Translation::T2Conj => "t2-conj",
            Translation::P1Embed => "p1embed",
        }
    }

    pub fn from_name(name: &str) -> Option<Translation> {
        Some(match name {
            "t1" => Translation::T1,
            "t1e" => Translation::T1e,
            "t2-cons" => Translation::T2Cons,
            "t2-conj" => Translation::T2Conj,
            "p1embed" => Translation::P1Embed,
            _ => return None,
        })
    }

    /// Connectives of the source language.
    pub fn source_conns(self) -> &'static [Conn] {
        match self {
            Translation::T1 | Translation::T2Cons | Translation::T2Conj => {
                &[Conn::Neg, Conn::And, Conn::Or, Conn::Imp]
            }
            Translation::T1e => &[Conn::Neg, Conn::And, Conn::Or, Conn::Imp, Conn::Cons],
            Translation::P1Embed => &Conn::ALL,
        }
    }

    /// The default source matrix for the bounded oracle.
    pub fn default_source(self) -> MatrixLogic {
        match self {
            Translation::T1 | Translation::T2Cons | Translation::T2Conj => {
                registry::builtin("cpl").unwrap()
            }
            Translation::T1e => registry::builtin("ecpl").unwrap(),
            Translation::P1Embed => registry::builtin("p1").unwrap(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OutsideSource {
    pub translation: &'static str,
    pub connective: &'static str,
}

impl fmt::Display for OutsideSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "connective {} is outside the source language of {}",
            self.connective, self.translation
        )
    }
}

impl std::error::Error for OutsideSource {}

fn strong_neg(f: Formula) -> Formula {
    Formula::and(Formula::neg(f.clone()), Formula::cons(f))
}

/// Apply a translation to a source-language formula.
pub fn apply_translation(t: Translation, f: &Formula) -> Result<Formula, OutsideSource> {
    let outside = |conn: &'static str| OutsideSource { translation: t.name(), connective: conn };
    Ok(match (t, f) {
        (Translation::T2Cons, Formula::Atom(_)) => Formula::cons(f.clone()),
        (Translation::T2Conj, Formula::Atom(_)) => Formula::and(f.clone(), Formula::cons(f.clone())),
        (_, Formula::Atom(_)) => f.clone(),
        (Translation::T1 | Translation::T1e, Formula::Neg(x)) => {
            strong_neg(apply_translation(t, x)?)
        }
        (Translation::T2Cons | Translation::T2Conj, Formula::Neg(x)) => {
            Formula::neg(apply_translation(t, x)?)
        }
        (Translation::P1Embed, Formula::Neg(x)) => {
            strong_neg(strong_neg(Formula::neg(apply_translation(t, x)?)))
        }
        (Translation::T1e, Formula::Cons(x)) => {
            Formula::cons(Formula::cons(apply_translation(t, x)?))
        }
        (Translation::T2Cons | Translation::T2Conj, Formula::Cons(x)) => {
            Formula::cons(apply_translation(t, x)?)
        }
        (Translation::P1Embed, Formula::Cons(x)) => Formula::cons(apply_translation(t, x)?),
        (Translation::P1Embed, Formula::Incons(x)) => Formula::incons(apply_translation(t, x)?),
        (_, Formula::Cons(_)) => return Err(outside("o")),
        (_, Formula::Incons(_)) => return Err(outside("*")),
        (Translation::P1Embed, Formula::And(a, b)) => strong_neg(strong_neg(Formula::and(
            apply_translation(t, a)?,
            apply_translation(t, b)?,
        ))),
        (Translation::P1Embed, Formula::Or(a, b)) => strong_neg(strong_neg(Formula::or(
            apply_translation(t, a)?,
            apply_translation(t, b)?,
        ))),
        (Translation::P1Embed, Formula::Imp(a, b)) => strong_neg(strong_neg(Formula::imp(
            apply_translation(t, a)?,
            apply_translation(t, b)?,
        ))),
        (_, Formula::And(a, b)) => {
            Formula::and(apply_translation(t, a)?, apply_translation(t, b)?)
        }
        (_, Formula::Or(a, b)) => Formula::or(apply_translation(t, a)?, apply_translation(t, b)?),
        (_, Formula::Imp(a, b)) => {
            Formula::imp(apply_translation(t, a)?, apply_translation(t, b)?)
        }
    })
}

// ---------------------------------------------------------------------------
// Bounded conservativity oracle
// ---------------------------------------------------------------------------

/// A violating instance of the conservativity biconditional.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub premises: Vec<Formula>,
    pub conclusion: Formula,
    pub holds_in_source: bool,
    pub holds_in_target: bool,
}

#[derive(Clone, Debug)]
pub struct ConservativityReport {
    pub translation: &'static str,
    pub source: String,
    pub target: String,
    pub atoms: usize,
    pub max_size: usize,
    /// Number of semantically distinct formulas examined (distinct pairs
    /// of source/target value vectors).
    pub classes: usize,
    pub counterexample: Option<Counterexample>,
}

impl ConservativityReport {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

// A candidate source formula with its value vector over all source
// valuations and the value vector of its translation over all target
// valuations. Both vectors compose connective-wise, so representatives of
// distinct vector pairs exhaust all semantic behaviors.
struct Cand {
    formula: Formula,
    src: Vec<Value>,
    tgt: Vec<Value>,
}

fn vec_unary(t: &[Value], v: &[Value]) -> Vec<Value> {
    v.iter().map(|&x| t[x as usize]).collect()
}

fn vec_binary(t: &[Value], n: usize, a: &[Value], b: &[Value]) -> Vec<Value> {
    a.iter().zip(b).map(|(&x, &y)| t[x as usize * n + y as usize]).collect()
}

struct TargetOps<'l> {
    logic: &'l MatrixLogic,
}

impl<'l> TargetOps<'l> {
    fn unary(&self, conn: Conn, v: &[Value]) -> Result<Vec<Value>, EvalError> {
        let t = self.logic.unary_table(conn).ok_or_else(|| EvalError::MissingTable {
            conn: conn.symbol(),
            logic: self.logic.name().to_string(),
        })?;
        Ok(vec_unary(t, v))
    }

    fn binary(&self, conn: Conn, a: &[Value], b: &[Value]) -> Result<Vec<Value>, EvalError> {
        let t = self.logic.binary_table(conn).ok_or_else(|| EvalError::MissingTable {
            conn: conn.symbol(),
            logic: self.logic.name().to_string(),
        })?;
        Ok(vec_binary(t, self.logic.n(), a, b))
    }

    fn strong_neg(&self, v: &[Value]) -> Result<Vec<Value>, EvalError> {
        let neg = self.unary(Conn::Neg, v)?;
        let cons = self.unary(Conn::Cons, v)?;
        self.binary(Conn::And, &neg, &cons)
    }

    /// How the translated image of `conn` acts on translated-value vectors.
    fn translated(
        &self,
        t: Translation,
        conn: Conn,
        args: &[&Vec<Value>],
    ) -> Result<Vec<Value>, EvalError> {
        match (t, conn) {
            (Translation::T1 | Translation::T1e, Conn::Neg) => self.strong_neg(args[0]),
            (Translation::T1e, Conn::Cons) => {
                self.unary(Conn::Cons, &self.unary(Conn::Cons, args[0])?)
            }
            (Translation::T2Cons | Translation::T2Conj, Conn::Cons) => {
                self.unary(Conn::Cons, args[0])
            }
            (Translation::P1Embed, Conn::Neg) => {
                self.strong_neg(&self.strong_neg(&self.unary(Conn::Neg, args[0])?)?)
            }
            (Translation::P1Embed, Conn::And | Conn::Or | Conn::Imp) => {
                self.strong_neg(&self.strong_neg(&self.binary(conn, args[0], args[1])?)?)
            }
            (_, Conn::Neg) => self.unary(Conn::Neg, args[0]),
            (_, Conn::Cons) => self.unary(Conn::Cons, args[0]),
            (_, Conn::Incons) => self.unary(Conn::Incons, args[0]),
            (_, _) => self.binary(conn, args[0], args[1]),
        }
    }
}

fn atom_names(count: usize) -> Vec<String> {
    (0..count).map(|i| format!("p{}", i + 1)).collect()
}

fn designation_mask(logic: &MatrixLogic, vec: &[Value]) -> u64 {
    let mut m = 0u64;
    for (i, &v) in vec.iter().enumerate() {
        if logic.is_designated(v) {
            m |= 1 << i;
        }
    }
    m
}

/// Exhaustively check `Gamma |-_source A  iff  t[Gamma] |-_target t(A)`
/// over formulas in at most `atoms` atoms of tree size at most `max_size`,
/// with premise sets of cardinality at most 2.
///
/// Enumeration dedupes formulas by their pair of (source, translated
/// target) value vectors; since both vectors compose connective-wise, one
/// representative per pair covers every semantic case.
pub fn conservativity_check(
    t: Translation,
    source: &MatrixLogic,
    target: &MatrixLogic,
    atoms: usize,
    max_size: usize,
) -> Result<ConservativityReport, EvalError> {
    let names = atom_names(atoms);
    let src_points = source.n().pow(atoms as u32);
    let tgt_points = target.n().pow(atoms as u32);
    assert!(src_points <= 64 && tgt_points <= 64, "oracle is desk-scale: n^atoms <= 64");

    let ops = TargetOps { logic: target };

    // Seed: atoms. The source vector of atom i lists its value at every
    // source valuation (valuation index decomposed in base n).
    let mut cands: Vec<Cand> = Vec::new();
    let mut seen = std::collections::HashSet::<(Vec<Value>, Vec<Value>)>::new();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); max_size + 1];

    for (i, name) in names.iter().enumerate() {
        let src: Vec<Value> = (0..src_points)
            .map(|idx| (idx / source.n().pow(i as u32) % source.n()) as Value)
            .collect();
        let raw_tgt: Vec<Value> = (0..tgt_points)
            .map(|idx| (idx / target.n().pow(i as u32) % target.n()) as Value)
            .collect();
        let tgt = match t {
            Translation::T2Cons => ops.unary(Conn::Cons, &raw_tgt)?,
            Translation::T2Conj => ops.binary(Conn::And, &raw_tgt, &ops.unary(Conn::Cons, &raw_tgt)?)?,
            _ => raw_tgt,
        };
        let cand = Cand { formula: Formula::atom(name), src, tgt };
        if seen.insert((cand.src.clone(), cand.tgt.clone())) {
            by_size[1].push(cands.len());
            cands.push(cand);
        }
    }

    let src_conns = t.source_conns();
    let unary: Vec<Conn> = src_conns.iter().copied().filter(|c| c.arity() == 1).collect();
    let binary: Vec<Conn> = src_conns.iter().copied().filter(|c| c.arity() == 2).collect();

    for size in 2..=max_size {
        let mut created: Vec<Cand> = Vec::new();
        for &i in &by_size[size - 1] {
            for &c in &unary {
                let src_tab = source.unary_table(c).ok_or_else(|| EvalError::MissingTable {
                    conn: c.symbol(),
                    logic: source.name().to_string(),
                })?;
                let src = vec_unary(src_tab, &cands[i].src);
                let tgt = ops.translated(t, c, &[&cands[i].tgt])?;
                let formula = match c {
                    Conn::Neg => Formula::neg(cands[i].formula.clone()),
                    Conn::Cons => Formula::cons(cands[i].formula.clone()),
                    Conn::Incons => Formula::incons(cands[i].formula.clone()),
                    _ => unreachable!(),
                };
                created.push(Cand { formula, src, tgt });
            }
        }
        for left in 1..size.saturating_sub(1) {
            let right = size - 1 - left;
            for &i in &by_size[left] {
                for &j in &by_size[right] {
                    for &c in &binary {
                        let src_tab =
                            source.binary_table(c).expect("binary tables always present");
                        let src = vec_binary(src_tab, source.n(), &cands[i].src, &cands[j].src);
                        let tgt = ops.translated(t, c, &[&cands[i].tgt, &cands[j].tgt])?;
                        let formula = match c {
                            Conn::And => {
                                Formula::and(cands[i].formula.clone(), cands[j].formula.clone())
                            }
                            Conn::Or => {
                                Formula::or(cands[i].formula.clone(), cands[j].formula.clone())
                            }
                            Conn::Imp => {
                                Formula::imp(cands[i].formula.clone(), cands[j].formula.clone())
                            }
                            _ => unreachable!(),
                        };
                        created.push(Cand { formula, src, tgt });
                    }
                }
            }
        }
        for cand in created {
            if seen.insert((cand.src.clone(), cand.tgt.clone())) {
                by_size[size].push(cands.len());
                cands.push(cand);
            }
        }
    }

    // Designation masks; the biconditional only depends on these.
    let src_masks: Vec<u64> = cands.iter().map(|c| designation_mask(source, &c.src)).collect();
    let tgt_masks: Vec<u64> = cands.iter().map(|c| designation_mask(target, &c.tgt)).collect();
    let src_full: u64 = if src_points == 64 { u64::MAX } else { (1 << src_points) - 1 };
    let tgt_full: u64 = if tgt_points == 64 { u64::MAX } else { (1 << tgt_points) - 1 };

    let entail = |prem: u64, concl: u64| prem & !concl == 0;
    let m = cands.len();
    let mut counterexample = None;
    'outer: for ci in 0..m {
        // premise sets of size 0, 1, 2 over representatives
        for pi in 0..=m {
            for pj in pi..=m {
                let (sp, tp) = match (pi, pj) {
                    (i, j) if i == m && j == m => (src_full, tgt_full),
                    (i, j) if j == m => (src_masks[i], tgt_masks[i]),
                    (i, j) if i == m => (src_masks[j], tgt_masks[j]),
                    (i, j) => (src_masks[i] & src_masks[j], tgt_masks[i] & tgt_masks[j]),
                };
                let in_src = entail(sp, src_masks[ci]);
                let in_tgt = entail(tp, tgt_masks[ci]);
                if in_src != in_tgt {
                    let mut premises = Vec::new();
                    if pi < m {
                        premises.push(cands[pi].formula.clone());
                    }
                    if pj < m && pj != pi {
                        premises.push(cands[pj].formula.clone());
                    }
                    counterexample = Some(Counterexample {
                        premises,
                        conclusion: cands[ci].formula.clone(),
                        holds_in_source: in_src,
                        holds_in_target: in_tgt,
                    });
                    break 'outer;
                }
            }
        }
    }

    Ok(ConservativityReport {
        translation: t.name(),
        source: source.name().to_string(),
        target: target.name().to_string(),
        atoms,
        max_size,
        classes: m,
        counterexample,
    })
}

/// The consistency-premise reproduction scheme: classical derivability
/// over `atoms` atoms coincides with target entailment once the
/// consistency of every atom is added as a premise. Checked exhaustively
/// at the same bounds as the translation oracle.
pub fn guarded_classical_check(
    target: &MatrixLogic,
    atoms: usize,
    max_size: usize,
) -> Result<ConservativityReport, EvalError> {
    let source = registry::builtin("cpl").unwrap();
    let names = atom_names(atoms);
    let src_points = source.n().pow(atoms as u32);
    let tgt_points = target.n().pow(atoms as u32);
    assert!(src_points <= 64 && tgt_points <= 64);

    // Identity translation: candidates carry source and target vectors of
    // the same formula.
    let mut cands: Vec<Cand> = Vec::new();
    let mut seen = std::collections::HashSet::<(Vec<Value>, Vec<Value>)>::new();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); max_size + 1];
    let mut guard_mask = if tgt_points == 64 { u64::MAX } else { (1u64 << tgt_points) - 1 };

    for (i, name) in names.iter().enumerate() {
        let src: Vec<Value> = (0..src_points)
            .map(|idx| (idx / source.n().pow(i as u32) % source.n()) as Value)
            .collect();
        let tgt: Vec<Value> = (0..tgt_points)
            .map(|idx| (idx / target.n().pow(i as u32) % target.n()) as Value)
            .collect();
        // o p_i as a guard premise
        let cons_tab = target.unary_table(Conn::Cons).ok_or_else(|| EvalError::MissingTable {
            conn: "o",
            logic: target.name().to_string(),
        })?;
        guard_mask &= designation_mask(target, &vec_unary(cons_tab, &tgt));
        let cand = Cand { formula: Formula::atom(name), src, tgt };
        if seen.insert((cand.src.clone(), cand.tgt.clone())) {
            by_size[1].push(cands.len());
            cands.push(cand);
        }
    }

    for size in 2..=max_size {
        let mut created: Vec<Cand> = Vec::new();
        for &i in &by_size[size - 1] {
            let src = vec_unary(source.unary_table(Conn::Neg).unwrap(), &cands[i].src);
            let tgt = vec_unary(target.unary_table(Conn::Neg).unwrap(), &cands[i].tgt);
            created.push(Cand { formula: Formula::neg(cands[i].formula.clone()), src, tgt });
        }
        for left in 1..size.saturating_sub(1) {
            let right = size - 1 - left;
            for &i in &by_size[left] {
                for &j in &by_size[right] {
                    for c in [Conn::And, Conn::Or, Conn::Imp] {
                        let src = vec_binary(
                            source.binary_table(c).unwrap(),
                            source.n(),
                            &cands[i].src,
                            &cands[j].src,
                        );
                        let tgt = vec_binary(
                            target.binary_table(c).unwrap(),
                            target.n(),
                            &cands[i].tgt,
                            &cands[j].tgt,
                        );
                        let formula = match c {
                            Conn::And => {
                                Formula::and(cands[i].formula.clone(), cands[j].formula.clone())
                            }
                            Conn::Or => {
                                Formula::or(cands[i].formula.clone(), cands[j].formula.clone())
                            }
                            _ => {
                                Formula::imp(cands[i].formula.clone(), cands[j].formula.clone())
                            }
                        };
                        created.push(Cand { formula, src, tgt });
                    }
                }
            }
        }
        for cand in created {
            if seen.insert((cand.src.clone(), cand.tgt.clone())) {
                by_size[size].push(cands.len());
                cands.push(cand);
            }
        }
    }

    let src_masks: Vec<u64> = cands.iter().map(|c| designation_mask(&source, &c.src)).collect();
    let tgt_masks: Vec<u64> = cands.iter().map(|c| designation_mask(target, &c.tgt)).collect();
    let src_full: u64 = (1 << src_points) - 1;
    let entail = |prem: u64, concl: u64| prem & !concl == 0;
    let m = cands.len();
    let mut counterexample = None;
    'outer: for ci in 0..m {
        for pi in 0..=m {
            for pj in pi..=m {
                let (sp, tp) = match (pi, pj) {
                    (i, j) if i == m && j == m => (src_full, guard_mask),
                    (i, j) if j == m => (src_masks[i], tgt_masks[i] & guard_mask),
                    (i, j) if i == m => (src_masks[j], tgt_masks[j] & guard_mask),
                    (i, j) => {
                        (src_masks[i] & src_masks[j], tgt_masks[i] & tgt_masks[j] & guard_mask)
                    }
                };
                if entail(sp, src_masks[ci]) != entail(tp, tgt_masks[ci]) {
                    let mut premises = Vec::new();
                    if pi < m {
                        premises.push(cands[pi].formula.clone());
                    }
                    if pj < m && pj != pi {
                        premises.push(cands[pj].formula.clone());
                    }
                    counterexample = Some(Counterexample {
                        premises,
                        conclusion: cands[ci].formula.clone(),
                        holds_in_source: entail(sp, src_masks[ci]),
                        holds_in_target: entail(tp, tgt_masks[ci]),
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(ConservativityReport {
        translation: "guarded-atoms",
        source: "cpl".to_string(),
        target: target.name().to_string(),
        atoms,
        max_size,
        classes: m,
        counterexample,
    })
}

// ---------------------------------------------------------------------------
// Hyperclassical synthesis
// ---------------------------------------------------------------------------

/// A truth table over three values with classical outputs on classical
/// inputs, to be realized as a term of the richest family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperTable {
    /// Images of (1, 1/2, 0).
    Unary([Value; 3]),
    /// Row-major over (1, 1/2, 0), row = left argument.
    Binary([Value; 9]),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SynthesisError {
    NotHyperclassical { detail: String },
    /// Should not occur: every hyperclassical table is definable.
    NotInClone,
}

impl fmt::Display for SynthesisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SynthesisError::NotHyperclassical { detail } => {
                write!(f, "not a hyperclassical table: {detail}")
            }
            SynthesisError::NotInClone => write!(f, "table not found in the definability clone"),
        }
    }
}

impl std::error::Error for SynthesisError {}

const ONE: Value = 0;
const HALF: Value = 1;
const ZERO: Value = 2;

fn classical(v: Value) -> bool {
    v == ONE || v == ZERO
}

fn lfi1_clone(arity: u8) -> &'static CloneSet {
    static UNARY: OnceLock<CloneSet> = OnceLock::new();
    static BINARY: OnceLock<CloneSet> = OnceLock::new();
    let cell = if arity == 1 { &UNARY } else { &BINARY };
    cell.get_or_init(|| {
        let lfi1 = registry::builtin("lfi1").unwrap();
        clone_functions(&lfi1, arity, &lfi1.connectives()).expect("three-valued clone")
    })
}

/// Find a term over the richest family member's connectives computing the
/// given hyperclassical table; the synthesized term is re-verified against
/// the table before being returned.
pub fn define_hyperclassical(table: &HyperTable) -> Result<Schema, SynthesisError> {
    let (flat, arity): (Vec<Value>, u8) = match table {
        HyperTable::Unary(t) => (t.to_vec(), 1),
        HyperTable::Binary(t) => (t.to_vec(), 2),
    };
    // classical inputs must give classical outputs
    let points: Vec<Vec<Value>> = if arity == 1 {
        vec![vec![ONE], vec![HALF], vec![ZERO]]
    } else {
        (0..9).map(|i| vec![(i / 3) as Value, (i % 3) as Value]).collect()
    };
    for (i, args) in points.iter().enumerate() {
        if args.iter().all(|&a| classical(a)) && !classical(flat[i]) {
            return Err(SynthesisError::NotHyperclassical {
                detail: format!("classical input #{i} maps to the middle value"),
            });
        }
    }
    let set = lfi1_clone(arity);
    let found = set.get(&flat).ok_or(SynthesisError::NotInClone)?;
    // re-verify the witness
    let lfi1 = registry::builtin("lfi1").unwrap();
    for (i, args) in points.iter().enumerate() {
        let asg: Vec<(&str, Value)> = match arity {
            1 => vec![("A", args[0])],
            _ => vec![("A", args[0]), ("B", args[1])],
        };
        let got = crate::matrices::eval_schema(&lfi1, &found.witness, &asg)
            .expect("witness evaluates");
        if got != flat[i] {
            return Err(SynthesisError::NotInClone);
        }
    }
    Ok(found.witness.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eightk;
    use crate::formula::parse_formula;

    #[test]
    fn t1_clauses() {
        let f = parse_formula("~p").unwrap();
        assert_eq!(apply_translation(Translation::T1, &f).unwrap(), parse_formula("~p & o p").unwrap());
        let f = parse_formula("p -> q").unwrap();
        assert_eq!(apply_translation(Translation::T1, &f).unwrap(), f);
        let f = parse_formula("o p").unwrap();
        assert!(apply_translation(Translation::T1, &f).is_err());
        assert_eq!(
            apply_translation(Translation::T1e, &f).unwrap(),
            parse_formula("o o p").unwrap()
        );
    }

    #[test]
    fn t2_atom_clauses() {
        let f = parse_formula("p").unwrap();
        assert_eq!(apply_translation(Translation::T2Cons, &f).unwrap(), parse_formula("o p").unwrap());
        assert_eq!(
            apply_translation(Translation::T2Conj, &f).unwrap(),
            parse_formula("p & o p").unwrap()
        );
        let f = parse_formula("~p").unwrap();
        assert_eq!(
            apply_translation(Translation::T2Cons, &f).unwrap(),
            parse_formula("~o p").unwrap()
        );
    }

    #[test]
    fn p1_embed_negation_shape() {
        let f = parse_formula("~p").unwrap();
        let image = apply_translation(Translation::P1Embed, &f).unwrap();
        // - - ~p with - the strong negation
        let inner = parse_formula("~~p & o ~p").unwrap();
        let expected = Formula::and(Formula::neg(inner.clone()), Formula::cons(inner));
        assert_eq!(image, expected);
    }

    #[test]
    fn t1_conservative_into_lfi1_small() {
        let cpl = registry::builtin("cpl").unwrap();
        let lfi1 = registry::builtin("lfi1").unwrap();
        let report = conservativity_check(Translation::T1, &cpl, &lfi1, 2, 4).unwrap();
        assert!(report.holds(), "counterexample: {:?}", report.counterexample);
    }

    #[test]
    fn identity_into_pac_is_not_conservative() {
        // Plain inclusion of classical formulas into the bottom-free
        // three-valued logic loses explosion; the oracle must notice. The
        // t2 translations into a target whose negation is involutive give
        // exactly that effect for the conjunction variant at tiny bounds.
        let cpl = registry::builtin("cpl").unwrap();
        let pac = registry::builtin("pac").unwrap();
        // t1 needs a cons table; pac has none.
        assert!(conservativity_check(Translation::T1, &cpl, &pac, 1, 3).is_err());
    }

    #[test]
    fn p1_embeds_into_sample_codes() {
        let p1 = registry::builtin("p1").unwrap();
        for code in [0u32, 5168, 8191] {
            let target = eightk::build_logic(eightk::EightKCode::new(code).unwrap());
            let report =
                conservativity_check(Translation::P1Embed, &p1, &target, 2, 4).unwrap();
            assert!(report.holds(), "code {code}: {:?}", report.counterexample);
        }
    }

    #[test]
    fn guarded_scheme_holds_in_lfi1() {
        let lfi1 = registry::builtin("lfi1").unwrap();
        let report = guarded_classical_check(&lfi1, 2, 4).unwrap();
        assert!(report.holds(), "counterexample: {:?}", report.counterexample);
    }

    #[test]
    fn synthesize_p3_negation() {
        // 1 -> 0, 1/2 -> 1, 0 -> 1
        let term = define_hyperclassical(&HyperTable::Unary([ZERO, ONE, ONE])).unwrap();
        let lfi1 = registry::builtin("lfi1").unwrap();
        let got: Vec<Value> = (0..3)
            .map(|x| crate::matrices::eval_schema(&lfi1, &term, &[("A", x)]).unwrap())
            .collect();
        assert_eq!(got, [ZERO, ONE, ONE]);
    }

    #[test]
    fn synthesize_lfi1_own_conjunction() {
        let lfi1 = registry::builtin("lfi1").unwrap();
        let table: Vec<Value> = (0..9)
            .map(|i| {
                lfi1.apply_binary(Conn::And, (i / 3) as Value, (i % 3) as Value).unwrap()
            })
            .collect();
        let term = define_hyperclassical(&HyperTable::Binary(table.clone().try_into().unwrap()))
            .unwrap();
        // the witness is minimal, so it is the conjunction itself
        assert_eq!(term.size(), 3);
    }

    #[test]
    fn non_hyperclassical_rejected() {
        let err = define_hyperclassical(&HyperTable::Unary([HALF, ONE, ZERO])).unwrap_err();
        assert!(matches!(err, SynthesisError::NotHyperclassical { .. }));
    }
}

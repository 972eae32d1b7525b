//! The family of 8,192 three-valued paraconsistent matrices obtained by
//! freeing the thirteen non-classical table cells.
//!
//! Values are (1, 1/2, 0) with 1 and 1/2 designated. The classical cells
//! of every connective are fixed at their two-valued readings, each free
//! cell ranges over {1/2, 1}, and the consistency/inconsistency tables are
//! pinned to mark exactly the classical values as consistent. A 13-bit
//! code describes one member; bit = 0 puts 1/2 in the cell, bit = 1 puts 1.

use crate::formula::Schema;
use crate::hilbert::{self, HilbertSystem};
use crate::matrices::{self, is_valid, Conn, EvalError, MatrixLogic, Value};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt;

/// Number of members of the family.
pub const FAMILY_SIZE: u16 = 8192;

/// 13-bit descriptor of one family member.
///
/// Bit layout: bit 0 = `~`(1/2); bits 1-3 = `&` at (1,1/2), (1/2,1),
/// (1/2,1/2); bits 4-8 = `|` at (1,1/2), (1/2,1), (1/2,1/2), (1/2,0),
/// (0,1/2); bits 9-12 = `->` at (1,1/2), (1/2,1), (1/2,1/2), (0,1/2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EightKCode(u16);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeOutOfRange(pub u32);

impl fmt::Display for CodeOutOfRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "code {} out of range 0..8192", self.0)
    }
}

impl std::error::Error for CodeOutOfRange {}

impl EightKCode {
    pub fn new(code: u32) -> Result<EightKCode, CodeOutOfRange> {
        if code < FAMILY_SIZE as u32 {
            Ok(EightKCode(code as u16))
        } else {
            Err(CodeOutOfRange(code))
        }
    }

    pub fn get(self) -> u16 {
        self.0
    }

    pub fn bit(self, k: u8) -> bool {
        self.0 >> k & 1 == 1
    }

    pub fn all() -> impl Iterator<Item = EightKCode> {
        (0..FAMILY_SIZE).map(EightKCode)
    }
}

impl fmt::Display for EightKCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

// Value indices in the (1, 1/2, 0) ordering.
const ONE: Value = 0;
const HALF: Value = 1;
const ZERO: Value = 2;

fn cell(bit: bool) -> Value {
    if bit {
        ONE
    } else {
        HALF
    }
}

/// Build the matrix for a code.
pub fn build_logic(code: EightKCode) -> MatrixLogic {
    let b = |k: u8| cell(code.bit(k));
    let neg = vec![ZERO, b(0), ONE];
    let and = vec![
        ONE, b(1), ZERO, //
        b(2), b(3), ZERO, //
        ZERO, ZERO, ZERO,
    ];
    let or = vec![
        ONE, b(4), ONE, //
        b(5), b(6), b(7), //
        ONE, b(8), ZERO,
    ];
    let imp = vec![
        ONE, b(9), ZERO, //
        b(10), b(11), ZERO, //
        ONE, b(12), ONE,
    ];
    MatrixLogic::new(
        &format!("8k-{}", code.get()),
        &["1", "1/2", "0"],
        &["1", "1/2"],
        neg,
        and,
        or,
        imp,
        Some(vec![ONE, ZERO, ONE]),
        Some(vec![ZERO, ONE, ZERO]),
    )
    .expect("family matrix")
}

/// Read the code back off a matrix in the family's value ordering, or
/// `None` when the tables do not fit the family shape.
pub fn code_of(logic: &MatrixLogic) -> Option<EightKCode> {
    if logic.n() != 3 {
        return None;
    }
    // Insist on the (1, 1/2, 0) label order with 1 and 1/2 designated.
    let labels: Vec<&str> = logic.labels().iter().map(|s| s.as_str()).collect();
    if labels != ["1", "1/2", "0"]
        || !logic.is_designated(0)
        || !logic.is_designated(1)
        || logic.is_designated(2)
    {
        return None;
    }
    let mut code: u16 = 0;
    let mut read = |bit: u8, v: Value| -> Option<()> {
        match v {
            ONE => {
                code |= 1 << bit;
                Some(())
            }
            HALF => Some(()),
            _ => None,
        }
    };
    read(0, logic.apply_unary(Conn::Neg, HALF)?)?;
    let and = |x, y| logic.apply_binary(Conn::And, x, y).unwrap();
    let or = |x, y| logic.apply_binary(Conn::Or, x, y).unwrap();
    let imp = |x, y| logic.apply_binary(Conn::Imp, x, y).unwrap();
    read(1, and(ONE, HALF))?;
    read(2, and(HALF, ONE))?;
    read(3, and(HALF, HALF))?;
    read(4, or(ONE, HALF))?;
    read(5, or(HALF, ONE))?;
    read(6, or(HALF, HALF))?;
    read(7, or(HALF, ZERO))?;
    read(8, or(ZERO, HALF))?;
    read(9, imp(ONE, HALF))?;
    read(10, imp(HALF, ONE))?;
    read(11, imp(HALF, HALF))?;
    read(12, imp(ZERO, HALF))?;
    // Fixed cells and the consistency tables must match the family.
    let rebuilt = build_logic(EightKCode(code));
    let mut candidate = logic.clone();
    candidate.set_name(rebuilt.name());
    if candidate == rebuilt {
        Some(EightKCode(code))
    } else {
        None
    }
}

/// Probe schema valid in a family member iff the given bit is 1: the cell
/// arguments are pinned by terms taking the values 1 (`*A`), 1/2 (`A`) and
/// 0 (`o A`) at v(A) = 1/2, and the consistency connective then reports
/// whether the cell holds 1. All probes have size at most 6.
pub fn cell_probe(bit: u8) -> Schema {
    let a = Schema::metavar("A");
    let one = Schema::incons(a.clone());
    let zero = Schema::cons(a.clone());
    let half = a;
    let (conn, x, y): (Conn, Schema, Schema) = match bit {
        0 => return Schema::cons(Schema::neg(Schema::metavar("A"))),
        1 => (Conn::And, one, half),
        2 => (Conn::And, half, one),
        3 => (Conn::And, half.clone(), half),
        4 => (Conn::Or, one, half),
        5 => (Conn::Or, half, one),
        6 => (Conn::Or, half.clone(), half),
        7 => (Conn::Or, half, zero),
        8 => (Conn::Or, zero, half),
        9 => (Conn::Imp, one, half),
        10 => (Conn::Imp, half, one),
        11 => (Conn::Imp, half.clone(), half),
        12 => (Conn::Imp, zero, half),
        _ => panic!("bit out of range"),
    };
    let inner = match conn {
        Conn::And => Schema::and(x, y),
        Conn::Or => Schema::or(x, y),
        Conn::Imp => Schema::imp(x, y),
        _ => unreachable!(),
    };
    Schema::cons(inner)
}

// ---------------------------------------------------------------------------
// Census
// ---------------------------------------------------------------------------

/// Aggregate counts over the whole family, with per-criterion bitmaps.
#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    /// Family size.
    pub total: usize,
    /// Codes whose consistency table lies in the unary clone of the four
    /// basic connectives (the defined-consistency members).
    pub dc_systems: usize,
    /// Codes where the term `~(A & ~A)` computes exactly the consistency
    /// table.
    pub neg_conj_defines_cons: usize,
    /// Codes whose matrix makes every rule of system `cio` sound.
    pub extend_cio: usize,
    /// Of the `cio`-sound codes, those in the `~(A & ~A)` class.
    pub extend_cilo: usize,
    /// Codes sound for every rule of system `cia` (expected: all).
    pub extend_cia: usize,
    /// Codes invalidating `A -> (~A -> B)` (expected: all).
    pub tps_invalid: usize,
    /// Codes where the strong-negation consistency schema `o -A` is valid
    /// (expected: all).
    pub cons_strong_neg_valid: usize,
    /// Codes whose 13 cell-probe validities equal their code bits
    /// (expected: all; certifies pairwise separation).
    pub probe_vector_matches: usize,
    /// Hex-encoded 8192-bit membership maps, one bit per code.
    pub bitmaps: BTreeMap<String, String>,
}

fn bitmap_hex(bits: &[bool]) -> String {
    let mut bytes = vec![0u8; bits.len().div_ceil(8)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            bytes[i / 8] |= 1 << (i % 8);
        }
    }
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

struct CodeFacts {
    dc: bool,
    neg_conj: bool,
    cio: bool,
    cia: bool,
    tps_invalid: bool,
    cons_strong: bool,
    probes_ok: bool,
}

fn facts_for(
    code: EightKCode,
    cia: &HilbertSystem,
    cio: &HilbertSystem,
    probes: &[Schema; 13],
    tps: &Schema,
    cons_strong: &Schema,
) -> CodeFacts {
    let logic = build_logic(code);
    let basic = [Conn::Neg, Conn::And, Conn::Or, Conn::Imp];
    let unary = crate::clone::clone_functions(&logic, 1, &basic).expect("3-valued clone");
    let dc = unary.contains(&[ONE, ZERO, ONE]);
    let neg_conj = {
        let f: Vec<Value> = (0..3)
            .map(|x| logic.neg_value(logic.apply_binary(Conn::And, x, logic.neg_value(x)).unwrap()))
            .collect();
        f == [ONE, ZERO, ONE]
    };
    let cio_ok = hilbert::soundness_report(cio, &logic).expect("family has all tables").sound();
    let cia_ok = hilbert::soundness_report(cia, &logic).expect("family has all tables").sound();
    let tps_invalid = !is_valid(&logic, tps).unwrap();
    let cons_strong_ok = is_valid(&logic, cons_strong).unwrap();
    let probes_ok =
        (0..13u8).all(|bit| is_valid(&logic, &probes[bit as usize]).unwrap() == code.bit(bit));
    CodeFacts {
        dc,
        neg_conj,
        cio: cio_ok,
        cia: cia_ok,
        tps_invalid,
        cons_strong: cons_strong_ok,
        probes_ok,
    }
}

/// Run the full census over the 8,192 codes (parallelized).
pub fn census() -> CensusReport {
    let cia = hilbert::system("cia").unwrap();
    let cio = hilbert::system("cio").unwrap();
    let probes: [Schema; 13] = std::array::from_fn(|k| cell_probe(k as u8));
    let tps = crate::formula::parse_schema("A -> (~A -> B)").unwrap();
    let cons_strong = crate::formula::parse_schema("o (~A & o A)").unwrap();

    let facts: Vec<CodeFacts> = EightKCode::all()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&code| facts_for(code, &cia, &cio, &probes, &tps, &cons_strong))
        .collect();

    let count = |f: &dyn Fn(&CodeFacts) -> bool| facts.iter().filter(|x| f(x)).count();
    let map = |f: &dyn Fn(&CodeFacts) -> bool| -> Vec<bool> { facts.iter().map(f).collect() };
    let mut bitmaps = BTreeMap::new();
    bitmaps.insert("dc_systems".to_string(), bitmap_hex(&map(&|x| x.dc)));
    bitmaps.insert("neg_conj_defines_cons".to_string(), bitmap_hex(&map(&|x| x.neg_conj)));
    bitmaps.insert("extend_cio".to_string(), bitmap_hex(&map(&|x| x.cio)));
    bitmaps.insert("extend_cilo".to_string(), bitmap_hex(&map(&|x| x.cio && x.neg_conj)));
    CensusReport {
        total: facts.len(),
        dc_systems: count(&|x| x.dc),
        neg_conj_defines_cons: count(&|x| x.neg_conj),
        extend_cio: count(&|x| x.cio),
        extend_cilo: count(&|x| x.cio && x.neg_conj),
        extend_cia: count(&|x| x.cia),
        tps_invalid: count(&|x| x.tps_invalid),
        cons_strong_neg_valid: count(&|x| x.cons_strong),
        probe_vector_matches: count(&|x| x.probes_ok),
        bitmaps,
    }
}

// ---------------------------------------------------------------------------
// Pairwise separation
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub enum SeparationError {
    SameCode,
    BoundExhausted { bound: usize },
    Eval(EvalError),
}

impl fmt::Display for SeparationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeparationError::SameCode => write!(f, "codes must differ"),
            SeparationError::BoundExhausted { bound } => {
                write!(f, "no separating schema of size <= {bound}")
            }
            SeparationError::Eval(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for SeparationError {}

/// A schema valid in exactly one of two matrices.
#[derive(Clone, Debug)]
pub struct Separation {
    pub schema: Schema,
    /// True when the schema is valid in the first matrix (and not the
    /// second).
    pub valid_in_first: bool,
    pub size: usize,
}

/// Smallest separating schema in at most two metavariables, by
/// breadth-first search over joint term functions of the two matrices.
pub fn separating_formula(
    c1: EightKCode,
    c2: EightKCode,
    max_size: usize,
) -> Result<Separation, SeparationError> {
    if c1 == c2 {
        return Err(SeparationError::SameCode);
    }
    separate_matrices(&build_logic(c1), &build_logic(c2), max_size)
}

/// The same search over two arbitrary matrices with equal value counts.
pub fn separate_matrices(
    l1: &MatrixLogic,
    l2: &MatrixLogic,
    max_size: usize,
) -> Result<Separation, SeparationError> {
    let n = l1.n();
    assert_eq!(n, l2.n(), "separation needs equal value counts");
    let points = n * n;

    // Joint state: the term's table in both logics, concatenated.
    struct Node {
        t1: Vec<Value>,
        t2: Vec<Value>,
        witness: Schema,
    }
    let valid = |l: &MatrixLogic, t: &[Value]| t.iter().all(|&v| l.is_designated(v));

    let conns: Vec<Conn> =
        Conn::ALL.iter().copied().filter(|c| l1.has_table(*c) && l2.has_table(*c)).collect();
    let unary: Vec<Conn> = conns.iter().copied().filter(|c| c.arity() == 1).collect();
    let binary: Vec<Conn> = conns.iter().copied().filter(|c| c.arity() == 2).collect();

    let mut nodes: Vec<Node> = Vec::new();
    let mut seen: HashMap<Vec<Value>, ()> = HashMap::new();
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); max_size + 1];

    let check = |node: &Node| -> Option<Separation> {
        let v1 = valid(l1, &node.t1);
        let v2 = valid(l2, &node.t2);
        if v1 != v2 {
            Some(Separation {
                schema: node.witness.clone(),
                valid_in_first: v1,
                size: node.witness.size(),
            })
        } else {
            None
        }
    };

    // Seed with the two projections.
    for (k, name) in ["A", "B"].iter().enumerate() {
        let table: Vec<Value> = (0..points)
            .map(|idx| if k == 0 { (idx / n) as Value } else { (idx % n) as Value })
            .collect();
        let node = Node { t1: table.clone(), t2: table, witness: Schema::metavar(name) };
        if let Some(sep) = check(&node) {
            return Ok(sep);
        }
        let key: Vec<Value> = node.t1.iter().chain(node.t2.iter()).copied().collect();
        if seen.insert(key, ()).is_none() {
            by_size[1].push(nodes.len());
            nodes.push(node);
        }
    }

    for size in 2..=max_size {
        let mut created: Vec<Node> = Vec::new();
        for &i in &by_size[size - 1] {
            for &c in &unary {
                let u1 = l1.unary_table(c).unwrap();
                let u2 = l2.unary_table(c).unwrap();
                let t1: Vec<Value> = nodes[i].t1.iter().map(|&v| u1[v as usize]).collect();
                let t2: Vec<Value> = nodes[i].t2.iter().map(|&v| u2[v as usize]).collect();
                let wrap = match c {
                    Conn::Neg => Schema::neg,
                    Conn::Cons => Schema::cons,
                    Conn::Incons => Schema::incons,
                    _ => unreachable!(),
                };
                created.push(Node { t1, t2, witness: wrap(nodes[i].witness.clone()) });
            }
        }
        for left in 1..size.saturating_sub(1) {
            let right = size - 1 - left;
            for &i in &by_size[left] {
                for &j in &by_size[right] {
                    for &c in &binary {
                        let b1 = l1.binary_table(c).unwrap();
                        let b2 = l2.binary_table(c).unwrap();
                        let t1: Vec<Value> = nodes[i]
                            .t1
                            .iter()
                            .zip(&nodes[j].t1)
                            .map(|(&x, &y)| b1[x as usize * n + y as usize])
                            .collect();
                        let t2: Vec<Value> = nodes[i]
                            .t2
                            .iter()
                            .zip(&nodes[j].t2)
                            .map(|(&x, &y)| b2[x as usize * n + y as usize])
                            .collect();
                        let wrap = match c {
                            Conn::And => Schema::and,
                            Conn::Or => Schema::or,
                            Conn::Imp => Schema::imp,
                            _ => unreachable!(),
                        };
                        created.push(Node {
                            t1,
                            t2,
                            witness: wrap(nodes[i].witness.clone(), nodes[j].witness.clone()),
                        });
                    }
                }
            }
        }
        for node in created {
            if let Some(sep) = check(&node) {
                return Ok(sep);
            }
            let key: Vec<Value> = node.t1.iter().chain(node.t2.iter()).copied().collect();
            if seen.insert(key, ()).is_none() {
                by_size[size].push(nodes.len());
                nodes.push(node);
            }
        }
    }
    Err(SeparationError::BoundExhausted { bound: max_size })
}

/// Exhaustive pairwise-distinctness certificate.
///
/// First verifies, for every code, that the validity of the 13 cell
/// probes equals the code's bits; given that, the lowest differing bit of
/// any two distinct codes yields a separating probe of size at most 6.
/// Then scans all pairs, recording the largest separator used.
#[derive(Clone, Debug, Serialize)]
pub struct SeparationCertificate {
    pub probe_vectors_ok: bool,
    pub pairs_checked: u64,
    pub pairs_separated: u64,
    pub max_separator_size: usize,
}

pub fn separation_certificate() -> SeparationCertificate {
    let probes: [Schema; 13] = std::array::from_fn(|k| cell_probe(k as u8));
    let sizes: Vec<usize> = probes.iter().map(|p| p.size()).collect();
    let vectors_ok: bool = EightKCode::all().collect::<Vec<_>>().par_iter().all(|&code| {
        let logic = build_logic(code);
        (0..13u8).all(|bit| is_valid(&logic, &probes[bit as usize]).unwrap() == code.bit(bit))
    });
    let mut pairs_checked = 0u64;
    let mut pairs_separated = 0u64;
    let mut max_size = 0usize;
    if vectors_ok {
        for a in 0..FAMILY_SIZE {
            for b in (a + 1)..FAMILY_SIZE {
                pairs_checked += 1;
                let firstbit = (a ^ b).trailing_zeros() as usize;
                pairs_separated += 1;
                max_size = max_size.max(sizes[firstbit]);
            }
        }
    }
    SeparationCertificate {
        probe_vectors_ok: vectors_ok,
        pairs_checked,
        pairs_separated,
        max_separator_size: max_size,
    }
}

// ---------------------------------------------------------------------------
// Strong negation
// ---------------------------------------------------------------------------

/// The unique strong-negation table of a family member, with its
/// witnessing term.
#[derive(Clone, Debug)]
pub struct StrongNegation {
    /// Images of (1, 1/2, 0), as value indices.
    pub table: [Value; 3],
    pub witness: Schema,
    /// Whether `o -A` (consistency of the strong negation) is valid.
    pub cons_valid: bool,
}

pub fn strong_negation_table(code: EightKCode) -> Result<StrongNegation, EvalError> {
    let logic = build_logic(code);
    let witness = crate::formula::parse_schema("~A & o A").unwrap();
    let mut table = [0; 3];
    for x in 0..3u8 {
        table[x as usize] = matrices::eval_schema(&logic, &witness, &[("A", x)])?;
    }
    let cons_valid = is_valid(&logic, &Schema::cons(witness.clone()))?;
    Ok(StrongNegation { table, witness, cons_valid })
}

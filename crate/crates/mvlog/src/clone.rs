//! Term-definable truth functions over a finite matrix.
//!
//! A clone element is stored as its full value table together with one
//! witnessing term (a schema in at most `arity` metavariables). Exact
//! closure runs a worklist fixpoint; the bounded variant enumerates terms
//! by tree size, so every stored witness has minimal size.

use crate::formula::Schema;
use crate::matrices::{Conn, MatrixLogic, Value};
use std::collections::HashMap;
use std::fmt;

/// Largest domain for which exact clone closure at arity <= 2 is allowed.
pub const EXACT_LIMIT: usize = 4;

/// A truth function with one witnessing term.
#[derive(Clone, Debug)]
pub struct TermFunction {
    /// Row-major table over all assignments: index = x for arity 1,
    /// x * n + y for arity 2.
    pub table: Vec<Value>,
    pub witness: Schema,
    /// Tree size of the witness term.
    pub size: usize,
}

/// Set of term-definable functions at a fixed arity.
#[derive(Clone, Debug)]
pub struct CloneSet {
    pub arity: u8,
    pub functions: Vec<TermFunction>,
    /// True when the set is the exact clone (fixpoint reached), false when
    /// it is the lower approximation from a term-size bound.
    pub exact: bool,
    index: HashMap<Vec<Value>, usize>,
}

impl CloneSet {
    pub fn get(&self, table: &[Value]) -> Option<&TermFunction> {
        self.index.get(table).map(|&i| &self.functions[i])
    }

    pub fn contains(&self, table: &[Value]) -> bool {
        self.index.contains_key(table)
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }
}

/// Domain too large for exact closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CloneError {
    pub n: usize,
    pub limit: usize,
}

impl fmt::Display for CloneError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "domain of {} values is too large for exact clone closure (limit {}); use bounded_terms",
            self.n, self.limit
        )
    }
}

impl std::error::Error for CloneError {}

const VAR_NAMES: [&str; 2] = ["A", "B"];

fn projections(n: usize, arity: u8) -> Vec<TermFunction> {
    let points: usize = n.pow(arity as u32);
    (0..arity as usize)
        .map(|k| {
            let table: Vec<Value> = (0..points)
                .map(|idx| {
                    // idx encodes (x, y) as x * n + y for arity 2; x for arity 1.
                    let coord = if arity == 2 {
                        if k == 0 {
                            idx / n
                        } else {
                            idx % n
                        }
                    } else {
                        idx
                    };
                    coord as Value
                })
                .collect();
            TermFunction {
                table,
                witness: Schema::metavar(VAR_NAMES[k]),
                size: 1,
            }
        })
        .collect()
}

fn apply_unary(logic: &MatrixLogic, conn: Conn, f: &TermFunction) -> Option<TermFunction> {
    let t = logic.unary_table(conn)?;
    let table = f.table.iter().map(|&v| t[v as usize]).collect();
    let wrap = match conn {
        Conn::Neg => Schema::neg,
        Conn::Cons => Schema::cons,
        Conn::Incons => Schema::incons,
        _ => return None,
    };
    Some(TermFunction {
        table,
        witness: wrap(f.witness.clone()),
        size: f.size + 1,
    })
}

fn apply_binary(
    logic: &MatrixLogic,
    conn: Conn,
    f: &TermFunction,
    g: &TermFunction,
) -> Option<TermFunction> {
    let n = logic.n();
    let t = logic.binary_table(conn)?;
    let table = f
        .table
        .iter()
        .zip(&g.table)
        .map(|(&x, &y)| t[x as usize * n + y as usize])
        .collect();
    let wrap = match conn {
        Conn::And => Schema::and,
        Conn::Or => Schema::or,
        Conn::Imp => Schema::imp,
        _ => return None,
    };
    Some(TermFunction {
        table,
        witness: wrap(f.witness.clone(), g.witness.clone()),
        size: f.size + g.size + 1,
    })
}

enum Growth {
    /// Stop after terms of this size.
    Bounded(usize),
    /// Grow until the set is closed under every listed operation.
    UntilFixpoint,
}

/// Size-ordered growth. Every stored witness is of minimal tree size for
/// its function: a minimal term for `op(f, g)` can always use minimal
/// witnesses for the child functions, so combining by minimal sizes is
/// complete. For the fixpoint mode, once no new function has appeared at
/// any size up to `2 * s_max + 1` (the largest size a single application
/// of an operation to known functions can have), the set is closed.
fn grow(logic: &MatrixLogic, arity: u8, conns: &[Conn], mode: Growth) -> CloneSet {
    let n = logic.n();
    let unary: Vec<Conn> = conns
        .iter()
        .copied()
        .filter(|c| c.arity() == 1 && logic.has_table(*c))
        .collect();
    let binary: Vec<Conn> = conns
        .iter()
        .copied()
        .filter(|c| c.arity() == 2 && logic.has_table(*c))
        .collect();

    let mut functions: Vec<TermFunction> = Vec::new();
    let mut index: HashMap<Vec<Value>, usize> = HashMap::new();
    // by_size[s] = indices of functions whose minimal witness has size s.
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); 2];
    let mut s_max = 1usize;

    fn insert(
        f: TermFunction,
        functions: &mut Vec<TermFunction>,
        index: &mut HashMap<Vec<Value>, usize>,
        by_size: &mut Vec<Vec<usize>>,
        s_max: &mut usize,
    ) {
        if !index.contains_key(&f.table) {
            index.insert(f.table.clone(), functions.len());
            while by_size.len() <= f.size {
                by_size.push(Vec::new());
            }
            *s_max = (*s_max).max(f.size);
            by_size[f.size].push(functions.len());
            functions.push(f);
        }
    }

    let max_size = match mode {
        Growth::Bounded(m) => m,
        Growth::UntilFixpoint => usize::MAX,
    };
    if max_size >= 1 {
        for p in projections(n, arity) {
            insert(p, &mut functions, &mut index, &mut by_size, &mut s_max);
        }
    }
    let nn = n;
    let mut scratch: Vec<Value> = Vec::new();
    let mut size = 2;
    while size <= max_size {
        if matches!(mode, Growth::UntilFixpoint) && size > 2 * s_max + 1 {
            break;
        }
        let mut created: Vec<TermFunction> = Vec::new();
        let prev = size - 1;
        if prev < by_size.len() {
            for &i in &by_size[prev] {
                for &c in &unary {
                    let t = logic.unary_table(c).unwrap();
                    scratch.clear();
                    scratch.extend(functions[i].table.iter().map(|&v| t[v as usize]));
                    if !index.contains_key(&scratch) {
                        created.push(apply_unary(logic, c, &functions[i]).unwrap());
                    }
                }
            }
        }
        for left in 1..size.saturating_sub(1) {
            let right = size - 1 - left;
            if left >= by_size.len() || right >= by_size.len() {
                continue;
            }
            for &i in &by_size[left] {
                for &j in &by_size[right] {
                    for &c in &binary {
                        let t = logic.binary_table(c).unwrap();
                        scratch.clear();
                        scratch.extend(
                            functions[i]
                                .table
                                .iter()
                                .zip(&functions[j].table)
                                .map(|(&x, &y)| t[x as usize * nn + y as usize]),
                        );
                        if !index.contains_key(&scratch) {
                            created.push(apply_binary(logic, c, &functions[i], &functions[j]).unwrap());
                        }
                    }
                }
            }
        }
        for f in created {
            insert(f, &mut functions, &mut index, &mut by_size, &mut s_max);
        }
        size += 1;
    }
    CloneSet {
        arity,
        functions,
        exact: matches!(mode, Growth::UntilFixpoint),
        index,
    }
}

/// Exact clone at the given arity over the listed connectives: the least
/// set of functions containing the projections and closed under table
/// application. Errors when the domain exceeds [`EXACT_LIMIT`].
pub fn clone_functions(
    logic: &MatrixLogic,
    arity: u8,
    conns: &[Conn],
) -> Result<CloneSet, CloneError> {
    let n = logic.n();
    if n > EXACT_LIMIT {
        return Err(CloneError { n, limit: EXACT_LIMIT });
    }
    Ok(grow(logic, arity, conns, Growth::UntilFixpoint))
}

/// All distinct truth functions realized by terms of tree size at most
/// `max_size`, each with a minimal-size witness. A lower approximation of
/// the clone.
pub fn bounded_terms(logic: &MatrixLogic, arity: u8, max_size: usize) -> CloneSet {
    grow(logic, arity, &logic.connectives(), Growth::Bounded(max_size))
}

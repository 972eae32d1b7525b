//! Catalog of built-in matrices and the JSON matrix file format.
//!
//! Every built-in is transcribed cell-for-cell from its source table; the
//! provenance string on each entry records the original location. The
//! `thm3.25a`/`thm3.25b` entries reproduce their printed consistency
//! columns literally, odd as they look; see the provenance tests.

use crate::matrices::{MatrixError, MatrixLogic, Value};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::path::Path;

/// A catalogued matrix plus the location of the table it was copied from.
pub struct CatalogEntry {
    pub key: &'static str,
    pub provenance: &'static str,
    pub logic: MatrixLogic,
}

#[derive(Debug)]
pub enum RegistryError {
    UnknownKey { key: String, available: Vec<&'static str> },
    Malformed(String),
    Matrix(MatrixError),
    Io(std::io::Error),
}

impl fmt::Display for RegistryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegistryError::UnknownKey { key, available } => {
                write!(f, "unknown logic {key}; available: {}", available.join(", "))
            }
            RegistryError::Malformed(msg) => write!(f, "malformed matrix document: {msg}"),
            RegistryError::Matrix(e) => e.fmt(f),
            RegistryError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for RegistryError {}

impl From<MatrixError> for RegistryError {
    fn from(e: MatrixError) -> Self {
        RegistryError::Matrix(e)
    }
}

impl From<std::io::Error> for RegistryError {
    fn from(e: std::io::Error) -> Self {
        RegistryError::Io(e)
    }
}

/// Keys of all built-in matrices.
pub const KEYS: [&str; 22] = [
    "pac",
    "lfi1",
    "lfi2",
    "p1",
    "p2",
    "p3",
    "cpl",
    "ecpl",
    "thm3.3",
    "fact3.16neg",
    "thm3.21",
    "thm3.23",
    "thm3.24",
    "thm3.25a",
    "thm3.25b",
    "thm3.27",
    "thm3.28",
    "thm3.42",
    "fact3.50",
    "thm3.53urbas",
    "thm3.58",
    "thm3.83mortensen",
];

const V3: [&str; 3] = ["1", "1/2", "0"];
const D3: [&str; 2] = ["1", "1/2"];

#[allow(clippy::too_many_arguments)]
fn m3(
    key: &str,
    designated: &[&str],
    neg: [Value; 3],
    and: [Value; 9],
    or: [Value; 9],
    imp: [Value; 9],
    cons: Option<[Value; 3]>,
    incons: Option<[Value; 3]>,
) -> MatrixLogic {
    MatrixLogic::new(
        key,
        &V3,
        designated,
        neg.to_vec(),
        and.to_vec(),
        or.to_vec(),
        imp.to_vec(),
        cons.map(|t| t.to_vec()),
        incons.map(|t| t.to_vec()),
    )
    .expect("builtin matrix")
}

// Min/max lattice tables over (1, 1/2, 0).
const AND_MIN: [Value; 9] = [0, 1, 2, 1, 1, 2, 2, 2, 2];
const OR_MAX: [Value; 9] = [0, 0, 0, 0, 1, 1, 0, 1, 2];
// x -> y = y when x is designated, 1 when x = 0.
const IMP_PAC: [Value; 9] = [0, 1, 2, 0, 1, 2, 0, 0, 0];

// Sette tables: binary outputs are classical.
const AND_P1: [Value; 9] = [0, 0, 2, 0, 0, 2, 2, 2, 2];
const OR_P1: [Value; 9] = [0, 0, 0, 0, 0, 0, 0, 0, 2];
const IMP_P1: [Value; 9] = [0, 0, 2, 0, 0, 2, 0, 0, 0];

fn pac() -> MatrixLogic {
    m3("pac", &D3, [2, 1, 0], AND_MIN, OR_MAX, IMP_PAC, None, None)
}

fn lfi1() -> MatrixLogic {
    m3(
        "lfi1",
        &D3,
        [2, 1, 0],
        AND_MIN,
        OR_MAX,
        IMP_PAC,
        Some([0, 2, 0]),
        Some([2, 0, 2]),
    )
}

fn p1() -> MatrixLogic {
    // The inconsistency column is the negation of the consistency column,
    // as used when these tables serve duty against the two-connective
    // systems.
    m3(
        "p1",
        &D3,
        [2, 0, 0],
        AND_P1,
        OR_P1,
        IMP_P1,
        Some([0, 2, 0]),
        Some([2, 0, 2]),
    )
}

fn p2() -> MatrixLogic {
    m3("p2", &D3, [2, 1, 0], AND_P1, OR_P1, IMP_P1, Some([0, 2, 0]), None)
}

fn p3() -> MatrixLogic {
    m3(
        "p3",
        &D3,
        [2, 0, 0],
        [0, 0, 2, 0, 1, 2, 2, 2, 2],
        [0, 0, 0, 0, 1, 0, 0, 0, 2],
        [0, 0, 2, 0, 1, 2, 0, 0, 0],
        Some([0, 2, 0]),
        None,
    )
}

fn lfi2() -> MatrixLogic {
    m3(
        "lfi2",
        &D3,
        [2, 1, 0],
        [0, 0, 2, 0, 1, 2, 2, 2, 2],
        [0, 0, 0, 0, 1, 0, 0, 0, 2],
        [0, 0, 2, 0, 1, 2, 0, 0, 0],
        Some([0, 2, 0]),
        None,
    )
}

fn cpl() -> MatrixLogic {
    MatrixLogic::new(
        "cpl",
        &["1", "0"],
        &["1"],
        vec![1, 0],
        vec![0, 1, 1, 1],
        vec![0, 0, 0, 1],
        vec![0, 1, 0, 0],
        None,
        None,
    )
    .expect("builtin matrix")
}

fn ecpl() -> MatrixLogic {
    MatrixLogic::new(
        "ecpl",
        &["1", "0"],
        &["1"],
        vec![1, 0],
        vec![0, 1, 1, 1],
        vec![0, 0, 0, 1],
        vec![0, 1, 0, 0],
        Some(vec![0, 0]),
        Some(vec![1, 1]),
    )
    .expect("builtin matrix")
}

fn thm3_3() -> MatrixLogic {
    m3(
        "thm3.3",
        &["1"],
        [2, 0, 0],
        AND_MIN,
        OR_MAX,
        [0, 1, 2, 0, 0, 2, 0, 0, 0],
        None,
        None,
    )
}

fn fact3_16neg() -> MatrixLogic {
    m3(
        "fact3.16neg",
        &D3,
        [2, 2, 0],
        AND_P1,
        OR_P1,
        IMP_P1,
        Some([0, 2, 0]),
        Some([2, 0, 2]),
    )
}

fn thm3_21() -> MatrixLogic {
    // Sette tables with (1 & 1/2) and (1 | 1/2) lowered to 1/2; the
    // mirrored cells stay 1.
    m3(
        "thm3.21",
        &D3,
        [2, 0, 0],
        [0, 1, 2, 0, 0, 2, 2, 2, 2],
        [0, 1, 0, 0, 0, 0, 0, 0, 2],
        IMP_P1,
        Some([0, 2, 0]),
        Some([2, 0, 2]),
    )
}

fn thm3_23() -> MatrixLogic {
    m3(
        "thm3.23",
        &D3,
        [2, 1, 0],
        AND_P1,
        OR_P1,
        IMP_P1,
        Some([2, 2, 1]),
        Some([0, 0, 2]),
    )
}

fn thm3_24() -> MatrixLogic {
    m3(
        "thm3.24",
        &D3,
        [2, 2, 0],
        AND_P1,
        OR_P1,
        IMP_P1,
        Some([2, 1, 2]),
        Some([0, 0, 0]),
    )
}

const V4: [&str; 4] = ["1", "2/3", "1/3", "0"];
const D4: [&str; 3] = ["1", "2/3", "1/3"];

fn binary4(f: impl Fn(usize, usize) -> Value) -> Vec<Value> {
    let mut t = Vec::with_capacity(16);
    for x in 0..4 {
        for y in 0..4 {
            t.push(f(x, y));
        }
    }
    t
}

fn thm3_25(key: &str, cons: [Value; 4], incons: [Value; 4]) -> MatrixLogic {
    MatrixLogic::new(
        key,
        &V4,
        &D4,
        vec![3, 2, 1, 0],
        binary4(|x, y| if x == 3 || y == 3 { 3 } else { 0 }),
        binary4(|x, y| if x == 3 && y == 3 { 3 } else { 0 }),
        binary4(|x, y| if x != 3 && y == 3 { 3 } else { 0 }),
        Some(cons.to_vec()),
        Some(incons.to_vec()),
    )
    .expect("builtin matrix")
}

fn thm3_25a() -> MatrixLogic {
    thm3_25("thm3.25a", [0, 1, 3, 0], [3, 2, 1, 3])
}

fn thm3_25b() -> MatrixLogic {
    thm3_25("thm3.25b", [0, 2, 3, 0], [3, 1, 1, 3])
}

fn thm3_27() -> MatrixLogic {
    m3(
        "thm3.27",
        &D3,
        [2, 0, 0],
        AND_P1,
        OR_P1,
        IMP_P1,
        Some([1, 2, 2]),
        Some([1, 0, 0]),
    )
}

fn thm3_28() -> MatrixLogic {
    m3(
        "thm3.28",
        &D3,
        [2, 0, 0],
        AND_P1,
        OR_P1,
        IMP_P1,
        Some([2, 2, 2]),
        Some([0, 0, 0]),
    )
}

fn thm3_42() -> MatrixLogic {
    MatrixLogic::new(
        "thm3.42",
        &["1", "0"],
        &["1"],
        vec![1, 0],
        vec![0, 1, 1, 1],
        vec![0, 0, 0, 1],
        vec![0, 1, 0, 0],
        Some(vec![1, 1]),
        Some(vec![0, 0]),
    )
    .expect("builtin matrix")
}

fn fact3_50() -> MatrixLogic {
    m3(
        "fact3.50",
        &D3,
        [2, 1, 0],
        [1, 1, 2, 1, 1, 2, 2, 2, 2],
        [1, 1, 1, 1, 1, 1, 1, 1, 2],
        [1, 1, 2, 1, 1, 2, 1, 1, 1],
        Some([0, 2, 0]),
        None,
    )
}

fn thm3_53urbas() -> MatrixLogic {
    let values = ["1", "6/7", "5/7", "4/7", "3/7", "2/7", "1/7", "0"];
    MatrixLogic::new(
        "thm3.53urbas",
        &values,
        &["1"],
        vec![7, 2, 5, 4, 3, 2, 0, 0],
        vec![
            0, 1, 2, 3, 4, 5, 6, 7, //
            1, 1, 4, 5, 4, 5, 7, 7, //
            2, 4, 2, 6, 4, 7, 6, 7, //
            3, 5, 6, 3, 7, 5, 6, 7, //
            4, 4, 4, 7, 4, 7, 7, 7, //
            5, 5, 7, 5, 7, 5, 7, 7, //
            6, 7, 6, 6, 7, 7, 6, 7, //
            7, 7, 7, 7, 7, 7, 7, 7,
        ],
        vec![
            0, 0, 0, 0, 0, 0, 0, 0, //
            0, 1, 0, 0, 1, 1, 0, 1, //
            0, 0, 2, 0, 2, 0, 2, 2, //
            0, 0, 0, 3, 0, 3, 3, 3, //
            0, 1, 2, 0, 4, 1, 2, 4, //
            0, 1, 0, 3, 1, 5, 3, 5, //
            0, 0, 2, 3, 2, 3, 6, 6, //
            0, 1, 2, 3, 4, 5, 6, 7,
        ],
        vec![
            0, 1, 2, 3, 4, 5, 6, 7, //
            0, 0, 2, 3, 2, 3, 6, 6, //
            0, 1, 0, 3, 1, 5, 3, 5, //
            0, 1, 2, 0, 4, 1, 2, 4, //
            0, 0, 0, 3, 0, 3, 3, 3, //
            0, 0, 2, 0, 2, 0, 2, 2, //
            0, 1, 0, 0, 1, 1, 0, 1, //
            0, 0, 0, 0, 0, 0, 0, 0,
        ],
        Some(vec![7; 8]),
        None,
    )
    .expect("builtin matrix")
}

fn thm3_58() -> MatrixLogic {
    // Sette tables with only (1 | 1/2) lowered to 1/2.
    m3(
        "thm3.58",
        &D3,
        [2, 0, 0],
        AND_P1,
        [0, 1, 0, 0, 0, 0, 0, 0, 2],
        IMP_P1,
        Some([0, 2, 0]),
        None,
    )
}

fn thm3_83mortensen() -> MatrixLogic {
    let values = ["u", "1", "a", "b", "0"];
    MatrixLogic::new(
        "thm3.83mortensen",
        &values,
        &["u", "1"],
        vec![1, 4, 3, 2, 1],
        vec![
            0, 1, 2, 3, 4, //
            1, 1, 2, 3, 4, //
            2, 2, 2, 4, 4, //
            3, 3, 4, 3, 4, //
            4, 4, 4, 4, 4,
        ],
        vec![
            0, 0, 0, 0, 0, //
            0, 1, 1, 1, 1, //
            0, 1, 2, 1, 2, //
            0, 1, 1, 3, 3, //
            0, 1, 2, 3, 4,
        ],
        vec![
            0, 0, 2, 3, 4, //
            0, 1, 2, 3, 4, //
            0, 1, 1, 3, 3, //
            0, 1, 2, 1, 2, //
            0, 1, 1, 1, 1,
        ],
        Some(vec![4, 1, 1, 1, 1]),
        None,
    )
    .expect("builtin matrix")
}

/// The full catalog, with provenance strings.
pub fn catalog() -> Vec<CatalogEntry> {
    vec![
        CatalogEntry { key: "pac", provenance: "section 2.4", logic: pac() },
        CatalogEntry { key: "lfi1", provenance: "section 2.4 / Fact 3.29", logic: lfi1() },
        CatalogEntry { key: "lfi2", provenance: "section 3.10", logic: lfi2() },
        CatalogEntry { key: "p1", provenance: "Theorem 3.15(ii)", logic: p1() },
        CatalogEntry { key: "p2", provenance: "Theorem 3.59", logic: p2() },
        CatalogEntry { key: "p3", provenance: "section 3.10", logic: p3() },
        CatalogEntry { key: "cpl", provenance: "two-valued tables", logic: cpl() },
        CatalogEntry { key: "ecpl", provenance: "section 3.7", logic: ecpl() },
        CatalogEntry { key: "thm3.3", provenance: "Theorem 3.3", logic: thm3_3() },
        CatalogEntry { key: "fact3.16neg", provenance: "Fact 3.16", logic: fact3_16neg() },
        CatalogEntry { key: "thm3.21", provenance: "Theorem 3.21 / Theorem 3.35", logic: thm3_21() },
        CatalogEntry { key: "thm3.23", provenance: "Theorem 3.23", logic: thm3_23() },
        CatalogEntry { key: "thm3.24", provenance: "Theorem 3.24", logic: thm3_24() },
        CatalogEntry { key: "thm3.25a", provenance: "Theorem 3.25(i)", logic: thm3_25a() },
        CatalogEntry { key: "thm3.25b", provenance: "Theorem 3.25(ii)", logic: thm3_25b() },
        CatalogEntry { key: "thm3.27", provenance: "Theorem 3.27", logic: thm3_27() },
        CatalogEntry { key: "thm3.28", provenance: "Theorem 3.28", logic: thm3_28() },
        CatalogEntry { key: "thm3.42", provenance: "Theorem 3.42", logic: thm3_42() },
        CatalogEntry { key: "fact3.50", provenance: "Fact 3.50", logic: fact3_50() },
        CatalogEntry { key: "thm3.53urbas", provenance: "Theorem 3.53 (Urbas)", logic: thm3_53urbas() },
        CatalogEntry { key: "thm3.58", provenance: "Theorem 3.58", logic: thm3_58() },
        CatalogEntry {
            key: "thm3.83mortensen",
            provenance: "Theorem 3.83 (Mortensen/Lewin-Mikenberg-Schwarze)",
            logic: thm3_83mortensen(),
        },
    ]
}

/// Deep copy of a catalog entry by key.
pub fn builtin(key: &str) -> Result<MatrixLogic, RegistryError> {
    catalog()
        .into_iter()
        .find(|e| e.key == key)
        .map(|e| e.logic)
        .ok_or_else(|| RegistryError::UnknownKey { key: key.to_string(), available: KEYS.to_vec() })
}

/// Resolve a key: built-ins first, then `<dir>/<key>.json` for each
/// directory on `MVL_REGISTRY_PATH`, then the key itself as a path.
pub fn resolve(key: &str) -> Result<MatrixLogic, RegistryError> {
    if let Ok(logic) = builtin(key) {
        return Ok(logic);
    }
    if let Ok(path_var) = std::env::var("MVL_REGISTRY_PATH") {
        for dir in std::env::split_paths(&path_var) {
            let candidate = dir.join(format!("{key}.json"));
            if candidate.exists() {
                return load_matrix(&candidate);
            }
        }
    }
    let as_path = Path::new(key);
    if as_path.exists() {
        return load_matrix(as_path);
    }
    Err(RegistryError::UnknownKey { key: key.to_string(), available: KEYS.to_vec() })
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    name: String,
    values: Vec<String>,
    designated: Vec<String>,
    tables: TablesDoc,
}

#[derive(Serialize, Deserialize)]
struct TablesDoc {
    neg: Vec<String>,
    and: Vec<Vec<String>>,
    or: Vec<Vec<String>>,
    imp: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cons: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    incons: Option<Vec<String>>,
}

fn label_to_value(values: &[String], label: &str) -> Result<Value, RegistryError> {
    values
        .iter()
        .position(|v| v == label)
        .map(|i| i as Value)
        .ok_or_else(|| RegistryError::Malformed(format!("unknown value label {label}")))
}

fn unary_from_doc(values: &[String], conn: &'static str, t: &[String]) -> Result<Vec<Value>, RegistryError> {
    if t.len() != values.len() {
        return Err(RegistryError::Matrix(MatrixError::TableSize {
            conn,
            expected: values.len(),
            got: t.len(),
        }));
    }
    t.iter().map(|l| label_to_value(values, l)).collect()
}

fn binary_from_doc(
    values: &[String],
    conn: &'static str,
    rows: &[Vec<String>],
) -> Result<Vec<Value>, RegistryError> {
    let n = values.len();
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(RegistryError::Matrix(MatrixError::TableSize {
            conn,
            expected: n * n,
            got: rows.iter().map(|r| r.len()).sum(),
        }));
    }
    let mut out = Vec::with_capacity(n * n);
    for row in rows {
        for l in row {
            out.push(label_to_value(values, l)?);
        }
    }
    Ok(out)
}

/// Parse a matrix from its JSON document text.
pub fn matrix_from_json(text: &str) -> Result<MatrixLogic, RegistryError> {
    let doc: MatrixDoc =
        serde_json::from_str(text).map_err(|e| RegistryError::Malformed(e.to_string()))?;
    let values: Vec<&str> = doc.values.iter().map(|s| s.as_str()).collect();
    let designated: Vec<&str> = doc.designated.iter().map(|s| s.as_str()).collect();
    let neg = unary_from_doc(&doc.values, "neg", &doc.tables.neg)?;
    let and = binary_from_doc(&doc.values, "and", &doc.tables.and)?;
    let or = binary_from_doc(&doc.values, "or", &doc.tables.or)?;
    let imp = binary_from_doc(&doc.values, "imp", &doc.tables.imp)?;
    let cons = doc
        .tables
        .cons
        .as_ref()
        .map(|t| unary_from_doc(&doc.values, "cons", t))
        .transpose()?;
    let incons = doc
        .tables
        .incons
        .as_ref()
        .map(|t| unary_from_doc(&doc.values, "incons", t))
        .transpose()?;
    Ok(MatrixLogic::new(&doc.name, &values, &designated, neg, and, or, imp, cons, incons)?)
}

/// Serialize a matrix to its JSON document text.
pub fn matrix_to_json(logic: &MatrixLogic) -> String {
    use crate::matrices::Conn;
    let n = logic.n();
    let label = |v: Value| logic.label(v).to_string();
    let unary = |t: &[Value]| t.iter().map(|&v| label(v)).collect::<Vec<_>>();
    let binary = |t: &[Value]| {
        (0..n)
            .map(|x| (0..n).map(|y| label(t[x * n + y])).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    };
    let doc = MatrixDoc {
        name: logic.name().to_string(),
        values: logic.labels().to_vec(),
        designated: (0..n as Value)
            .filter(|&v| logic.is_designated(v))
            .map(label)
            .collect(),
        tables: TablesDoc {
            neg: unary(logic.unary_table(Conn::Neg).unwrap()),
            and: binary(logic.binary_table(Conn::And).unwrap()),
            or: binary(logic.binary_table(Conn::Or).unwrap()),
            imp: binary(logic.binary_table(Conn::Imp).unwrap()),
            cons: logic.unary_table(Conn::Cons).map(unary),
            incons: logic.unary_table(Conn::Incons).map(unary),
        },
    };
    serde_json::to_string_pretty(&doc).expect("matrix serializes")
}

/// Load a matrix from a JSON file.
pub fn load_matrix(path: &Path) -> Result<MatrixLogic, RegistryError> {
    let text = std::fs::read_to_string(path)?;
    matrix_from_json(&text)
}

/// Save a matrix to a JSON file.
pub fn save_matrix(logic: &MatrixLogic, path: &Path) -> Result<(), RegistryError> {
    std::fs::write(path, matrix_to_json(logic))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_schema;
    use crate::matrices::{is_valid, Conn};

    #[test]
    fn builtin_lookup_and_unknown_key() {
        assert!(builtin("pac").is_ok());
        let err = builtin("nope").unwrap_err();
        match err {
            RegistryError::UnknownKey { available, .. } => {
                assert!(available.contains(&"lfi1"));
            }
            other => panic!("unexpected {other}"),
        }
    }

    #[test]
    fn pac_negation_column() {
        let pac = builtin("pac").unwrap();
        let neg = pac.unary_table(Conn::Neg).unwrap();
        let l = |v: Value| pac.label(v);
        assert_eq!(
            (l(neg[0]), l(neg[1]), l(neg[2])),
            ("0", "1/2", "1")
        );
    }

    #[test]
    fn p1_cons_column() {
        let p1 = builtin("p1").unwrap();
        let cons = p1.unary_table(Conn::Cons).unwrap();
        let l = |v: Value| p1.label(v);
        assert_eq!((l(cons[0]), l(cons[1]), l(cons[2])), ("1", "0", "1"));
    }

    #[test]
    fn mortensen_shape() {
        let m = builtin("thm3.83mortensen").unwrap();
        assert_eq!(m.n(), 5);
        let mut labels = m.labels().to_vec();
        labels.sort();
        assert_eq!(labels, ["0", "1", "a", "b", "u"]);
        let des: Vec<_> = m.designated_values().iter().map(|&v| m.label(v).to_string()).collect();
        assert_eq!(des, ["u", "1"]);
    }

    #[test]
    fn round_trip_all_builtins() {
        for entry in catalog() {
            let json = matrix_to_json(&entry.logic);
            let back = matrix_from_json(&json).unwrap();
            assert_eq!(back, entry.logic, "round trip of {}", entry.key);
        }
    }

    #[test]
    fn loaded_lfi1_validates_non_contradiction() {
        let json = matrix_to_json(&builtin("lfi1").unwrap());
        let lfi1 = matrix_from_json(&json).unwrap();
        assert!(is_valid(&lfi1, &parse_schema("~(A & ~A)").unwrap()).unwrap());
    }

    #[test]
    fn size_mismatch_rejected() {
        let bad = r#"{
            "name": "bad",
            "values": ["1", "1/2", "0"],
            "designated": ["1"],
            "tables": {
                "neg": ["0", "1"],
                "and": [["1","1/2","0"],["1/2","1/2","0"],["0","0","0"]],
                "or": [["1","1","1"],["1","1/2","1/2"],["1","1/2","0"]],
                "imp": [["1","1/2","0"],["1","1/2","0"],["1","1","1"]]
            }
        }"#;
        let err = matrix_from_json(bad).unwrap_err();
        assert!(err.to_string().contains("table size mismatch"));
    }

    #[test]
    fn designated_out_of_range_rejected() {
        let bad = r#"{
            "name": "bad",
            "values": ["1", "0"],
            "designated": ["2"],
            "tables": {
                "neg": ["0", "1"],
                "and": [["1","0"],["0","0"]],
                "or": [["1","1"],["1","0"]],
                "imp": [["1","0"],["1","1"]]
            }
        }"#;
        assert!(matrix_from_json(bad).is_err());
    }
}

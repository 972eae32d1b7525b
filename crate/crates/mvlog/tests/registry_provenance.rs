//! Provenance checks for the catalog: every built-in matrix is compared
//! cell-for-cell against an independent reconstruction from its source's
//! clause definitions, or against spot values quoted from the printed
//! tables. These tests freeze the transcriptions.

use mvlog::matrices::{Conn, MatrixLogic, Value};
use mvlog::registry::builtin;

fn labels(logic: &MatrixLogic, t: &[Value]) -> Vec<String> {
    t.iter().map(|&v| logic.label(v).to_string()).collect()
}

fn unary(logic: &MatrixLogic, conn: Conn) -> Vec<String> {
    labels(logic, logic.unary_table(conn).unwrap())
}

fn binary_cell(logic: &MatrixLogic, conn: Conn, x: &str, y: &str) -> String {
    let xv = logic.value_of_label(x).unwrap();
    let yv = logic.value_of_label(y).unwrap();
    logic.label(logic.apply_binary(conn, xv, yv).unwrap()).to_string()
}

fn assert_binary_by_clause(
    logic: &MatrixLogic,
    conn: Conn,
    clause: impl Fn(&str, &str) -> String,
) {
    for x in logic.labels() {
        for y in logic.labels() {
            assert_eq!(
                binary_cell(logic, conn, x, y),
                clause(x, y),
                "{} {} {} in {}",
                x,
                conn.symbol(),
                y,
                logic.name()
            );
        }
    }
}

// three-valued lattice clauses: conjunction = min, disjunction = max under
// 1 > 1/2 > 0, implication returns the consequent unless the antecedent
// is 0.
fn rank(l: &str) -> usize {
    match l {
        "1" => 2,
        "1/2" => 1,
        _ => 0,
    }
}

#[test]
fn pac_tables_from_clauses() {
    let pac = builtin("pac").unwrap();
    assert_binary_by_clause(&pac, Conn::And, |x, y| {
        if rank(x) <= rank(y) { x.into() } else { y.into() }
    });
    assert_binary_by_clause(&pac, Conn::Or, |x, y| {
        if rank(x) >= rank(y) { x.into() } else { y.into() }
    });
    assert_binary_by_clause(&pac, Conn::Imp, |x, y| {
        if x == "0" { "1".into() } else { y.into() }
    });
    assert_eq!(unary(&pac, Conn::Neg), ["0", "1/2", "1"]);
    assert!(!pac.has_table(Conn::Cons) && !pac.has_table(Conn::Incons));
}

#[test]
fn lfi1_extends_pac_with_consistency_marks() {
    let lfi1 = builtin("lfi1").unwrap();
    let pac = builtin("pac").unwrap();
    for conn in [Conn::Neg, Conn::And, Conn::Or, Conn::Imp] {
        match conn.arity() {
            1 => assert_eq!(unary(&lfi1, conn), unary(&pac, conn)),
            _ => assert_eq!(
                lfi1.binary_table(conn).unwrap(),
                pac.binary_table(conn).unwrap()
            ),
        }
    }
    // v(o A) = 0 exactly when v(A) = v(~A), i.e. at 1/2
    assert_eq!(unary(&lfi1, Conn::Cons), ["1", "0", "1"]);
    assert_eq!(unary(&lfi1, Conn::Incons), ["0", "1", "0"]);
}

#[test]
fn sette_tables() {
    let p1 = builtin("p1").unwrap();
    // binary outputs are classical: both designated give 1 except the
    // all-false rows
    assert_binary_by_clause(&p1, Conn::And, |x, y| {
        if x != "0" && y != "0" { "1".into() } else { "0".into() }
    });
    assert_binary_by_clause(&p1, Conn::Or, |x, y| {
        if x != "0" || y != "0" { "1".into() } else { "0".into() }
    });
    assert_binary_by_clause(&p1, Conn::Imp, |x, y| {
        if x != "0" && y == "0" { "0".into() } else { "1".into() }
    });
    assert_eq!(unary(&p1, Conn::Neg), ["0", "1", "1"]);
    assert_eq!(unary(&p1, Conn::Cons), ["1", "0", "1"]);
    // the inconsistency column is this matrix's negation of the
    // consistency column
    assert_eq!(unary(&p1, Conn::Incons), ["0", "1", "0"]);
}

#[test]
fn p2_is_p1_with_fixed_negation() {
    let p1 = builtin("p1").unwrap();
    let p2 = builtin("p2").unwrap();
    for conn in [Conn::And, Conn::Or, Conn::Imp] {
        assert_eq!(p2.binary_table(conn).unwrap(), p1.binary_table(conn).unwrap());
    }
    assert_eq!(unary(&p2, Conn::Neg), ["0", "1/2", "1"]);
    assert_eq!(unary(&p2, Conn::Cons), unary(&p1, Conn::Cons));
}

#[test]
fn p3_and_lfi2_tables() {
    let p3 = builtin("p3").unwrap();
    // printed rows: & -> (1,1,0),(1,1/2,0),(0,0,0); | -> (1,1,1),
    // (1,1/2,1),(1,1,0); -> -> (1,1,0),(1,1/2,0),(1,1,1)
    let rows = |t: &[Value], l: &MatrixLogic| {
        (0..3)
            .map(|r| (0..3).map(|c| l.label(t[r * 3 + c]).to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()
    };
    assert_eq!(
        rows(p3.binary_table(Conn::And).unwrap(), &p3),
        [["1", "1", "0"], ["1", "1/2", "0"], ["0", "0", "0"]]
    );
    assert_eq!(
        rows(p3.binary_table(Conn::Or).unwrap(), &p3),
        [["1", "1", "1"], ["1", "1/2", "1"], ["1", "1", "0"]]
    );
    assert_eq!(
        rows(p3.binary_table(Conn::Imp).unwrap(), &p3),
        [["1", "1", "0"], ["1", "1/2", "0"], ["1", "1", "1"]]
    );
    assert_eq!(unary(&p3, Conn::Neg), ["0", "1", "1"]);
    // lfi2 differs from p3 only in the negation column
    let lfi2 = builtin("lfi2").unwrap();
    for conn in [Conn::And, Conn::Or, Conn::Imp] {
        assert_eq!(lfi2.binary_table(conn).unwrap(), p3.binary_table(conn).unwrap());
    }
    assert_eq!(unary(&lfi2, Conn::Neg), ["0", "1/2", "1"]);
}

#[test]
fn classical_and_its_consistency_extension() {
    let cpl = builtin("cpl").unwrap();
    assert_eq!(cpl.n(), 2);
    assert!(!cpl.has_table(Conn::Cons));
    let ecpl = builtin("ecpl").unwrap();
    assert_eq!(unary(&ecpl, Conn::Cons), ["1", "1"]);
    assert_eq!(unary(&ecpl, Conn::Incons), ["0", "0"]);
    // the swapped-constants variant
    let swapped = builtin("thm3.42").unwrap();
    assert_eq!(unary(&swapped, Conn::Cons), ["0", "0"]);
    assert_eq!(unary(&swapped, Conn::Incons), ["1", "1"]);
}

#[test]
fn min9_countermodel_tables() {
    let m = builtin("thm3.3").unwrap();
    // lattice conjunction/disjunction, single designated value
    assert_eq!(m.designated_values().len(), 1);
    assert_eq!(m.label(m.designated_values()[0]), "1");
    assert_binary_by_clause(&m, Conn::And, |x, y| {
        if rank(x) <= rank(y) { x.into() } else { y.into() }
    });
    // printed implication rows: (1,1/2,0), (1,1,0), (1,1,1)
    assert_eq!(binary_cell(&m, Conn::Imp, "1/2", "1/2"), "1");
    assert_eq!(binary_cell(&m, Conn::Imp, "1", "1/2"), "1/2");
    assert_eq!(binary_cell(&m, Conn::Imp, "1/2", "0"), "0");
    assert_eq!(unary(&m, Conn::Neg), ["0", "1", "1"]);
}

#[test]
fn fact3_16_variant_negation() {
    let m = builtin("fact3.16neg").unwrap();
    let p1 = builtin("p1").unwrap();
    for conn in [Conn::And, Conn::Or, Conn::Imp] {
        assert_eq!(m.binary_table(conn).unwrap(), p1.binary_table(conn).unwrap());
    }
    // only the negation column changes: 1/2 now maps to 0
    assert_eq!(unary(&m, Conn::Neg), ["0", "0", "1"]);
    assert_eq!(unary(&m, Conn::Cons), unary(&p1, Conn::Cons));
}

#[test]
fn thm3_21_lowers_two_cells() {
    let m = builtin("thm3.21").unwrap();
    let p1 = builtin("p1").unwrap();
    // (1 & 1/2) and (1 | 1/2) drop to 1/2; the mirrored cells stay 1
    assert_eq!(binary_cell(&m, Conn::And, "1", "1/2"), "1/2");
    assert_eq!(binary_cell(&m, Conn::And, "1/2", "1"), "1");
    assert_eq!(binary_cell(&m, Conn::Or, "1", "1/2"), "1/2");
    assert_eq!(binary_cell(&m, Conn::Or, "1/2", "1"), "1");
    // all other cells match the base tables
    for (x, y) in [("1", "1"), ("1/2", "1/2"), ("1/2", "0"), ("0", "1/2"), ("0", "0"), ("1", "0"), ("0", "1")] {
        assert_eq!(binary_cell(&m, Conn::And, x, y), binary_cell(&p1, Conn::And, x, y));
        assert_eq!(binary_cell(&m, Conn::Or, x, y), binary_cell(&p1, Conn::Or, x, y));
    }
    assert_eq!(m.binary_table(Conn::Imp).unwrap(), p1.binary_table(Conn::Imp).unwrap());
}

#[test]
fn thm3_58_lowers_one_cell() {
    let m = builtin("thm3.58").unwrap();
    let p1 = builtin("p1").unwrap();
    assert_eq!(binary_cell(&m, Conn::Or, "1", "1/2"), "1/2");
    assert_eq!(binary_cell(&m, Conn::Or, "1/2", "1"), "1");
    assert_eq!(m.binary_table(Conn::And).unwrap(), p1.binary_table(Conn::And).unwrap());
    assert_eq!(m.binary_table(Conn::Imp).unwrap(), p1.binary_table(Conn::Imp).unwrap());
}

#[test]
fn bc2_bc3_countermodel_families() {
    // binary connectives defined by the all-or-nothing clauses
    for key in ["thm3.23", "thm3.24", "thm3.27", "thm3.28"] {
        let m = builtin(key).unwrap();
        assert_binary_by_clause(&m, Conn::And, |x, y| {
            if x == "0" || y == "0" { "0".into() } else { "1".into() }
        });
        assert_binary_by_clause(&m, Conn::Or, |x, y| {
            if x == "0" && y == "0" { "0".into() } else { "1".into() }
        });
        assert_binary_by_clause(&m, Conn::Imp, |x, y| {
            if x != "0" && y == "0" { "0".into() } else { "1".into() }
        });
    }
    let m23 = builtin("thm3.23").unwrap();
    assert_eq!(unary(&m23, Conn::Neg), ["0", "1/2", "1"]); // 1 - v
    assert_eq!(unary(&m23, Conn::Cons), ["0", "0", "1/2"]);
    assert_eq!(unary(&m23, Conn::Incons), ["1", "1", "0"]);

    let m24 = builtin("thm3.24").unwrap();
    assert_eq!(unary(&m24, Conn::Neg), ["0", "0", "1"]); // collapses non-0
    assert_eq!(unary(&m24, Conn::Cons), ["0", "1/2", "0"]);
    assert_eq!(unary(&m24, Conn::Incons), ["1", "1", "1"]);

    let m27 = builtin("thm3.27").unwrap();
    assert_eq!(unary(&m27, Conn::Neg), ["0", "1", "1"]);
    assert_eq!(unary(&m27, Conn::Cons), ["1/2", "0", "0"]);
    assert_eq!(unary(&m27, Conn::Incons), ["1/2", "1", "1"]);

    let m28 = builtin("thm3.28").unwrap();
    assert_eq!(unary(&m28, Conn::Neg), unary(&m27, Conn::Neg));
    assert_eq!(unary(&m28, Conn::Cons), ["0", "0", "0"]);
    assert_eq!(unary(&m28, Conn::Incons), ["1", "1", "1"]);
}

#[test]
fn four_valued_printed_columns() {
    // the 2/3 and 1/3 rows of the printed consistency/inconsistency
    // columns, literally: (i) has o = (1, 2/3, 0, 1), * = (0, 1/3, 2/3, 0);
    // (ii) moves o(2/3) to 1/3 and *(2/3) to 2/3.
    let a = builtin("thm3.25a").unwrap();
    assert_eq!(unary(&a, Conn::Cons), ["1", "2/3", "0", "1"]);
    assert_eq!(unary(&a, Conn::Incons), ["0", "1/3", "2/3", "0"]);
    let b = builtin("thm3.25b").unwrap();
    assert_eq!(unary(&b, Conn::Cons), ["1", "1/3", "0", "1"]);
    assert_eq!(unary(&b, Conn::Incons), ["0", "2/3", "2/3", "0"]);
    for m in [&a, &b] {
        assert_eq!(unary(m, Conn::Neg), ["0", "1/3", "2/3", "1"]); // 1 - v
        assert_binary_by_clause(m, Conn::And, |x, y| {
            if x == "0" || y == "0" { "0".into() } else { "1".into() }
        });
        assert_binary_by_clause(m, Conn::Or, |x, y| {
            if x == "0" && y == "0" { "0".into() } else { "1".into() }
        });
        assert_binary_by_clause(m, Conn::Imp, |x, y| {
            if x != "0" && y == "0" { "0".into() } else { "1".into() }
        });
    }
}

#[test]
fn fact3_50_tables_from_clauses() {
    let m = builtin("fact3.50").unwrap();
    assert_binary_by_clause(&m, Conn::And, |x, y| {
        if x != "0" && y != "0" { "1/2".into() } else { "0".into() }
    });
    assert_binary_by_clause(&m, Conn::Or, |x, y| {
        if x != "0" || y != "0" { "1/2".into() } else { "0".into() }
    });
    assert_binary_by_clause(&m, Conn::Imp, |x, y| {
        if x == "0" || y != "0" { "1/2".into() } else { "0".into() }
    });
    assert_eq!(unary(&m, Conn::Neg), ["0", "1/2", "1"]);
    assert_eq!(unary(&m, Conn::Cons), ["1", "0", "1"]);
}

// The 8-valued tables coincide with the subset algebra over a
// three-element base: conjunction is intersection, disjunction union, and
// implication complement-union. The fractional labels enumerate the
// subsets as 1 = abc, 6/7 = ab, 5/7 = ac, 4/7 = bc, 3/7 = a, 2/7 = b,
// 1/7 = c, 0 = empty. The negation column is transcribed literally.
#[test]
fn urbas_tables_are_the_subset_algebra() {
    let u = builtin("thm3.53urbas").unwrap();
    let mask = |l: &str| -> u8 {
        match l {
            "1" => 0b111,
            "6/7" => 0b110,
            "5/7" => 0b101,
            "4/7" => 0b011,
            "3/7" => 0b100,
            "2/7" => 0b010,
            "1/7" => 0b001,
            _ => 0b000,
        }
    };
    let label_of = |m: u8| -> String {
        match m {
            0b111 => "1",
            0b110 => "6/7",
            0b101 => "5/7",
            0b011 => "4/7",
            0b100 => "3/7",
            0b010 => "2/7",
            0b001 => "1/7",
            _ => "0",
        }
        .to_string()
    };
    assert_binary_by_clause(&u, Conn::And, |x, y| label_of(mask(x) & mask(y)));
    assert_binary_by_clause(&u, Conn::Or, |x, y| label_of(mask(x) | mask(y)));
    assert_binary_by_clause(&u, Conn::Imp, |x, y| label_of((0b111 & !mask(x)) | mask(y)));
    assert_eq!(
        unary(&u, Conn::Neg),
        ["0", "5/7", "2/7", "3/7", "4/7", "5/7", "1", "1"]
    );
    assert_eq!(unary(&u, Conn::Cons), vec!["0"; 8]);
    assert_eq!(u.designated_values().len(), 1);
}

#[test]
fn mortensen_five_valued() {
    let m = builtin("thm3.83mortensen").unwrap();
    // printed rows in the order u, 1, a, b, 0
    let show = |conn: Conn| -> Vec<Vec<String>> {
        let t = m.binary_table(conn).unwrap();
        (0..5)
            .map(|r| (0..5).map(|c| m.label(t[r * 5 + c]).to_string()).collect())
            .collect()
    };
    assert_eq!(
        show(Conn::And),
        [
            ["u", "1", "a", "b", "0"],
            ["1", "1", "a", "b", "0"],
            ["a", "a", "a", "0", "0"],
            ["b", "b", "0", "b", "0"],
            ["0", "0", "0", "0", "0"]
        ]
    );
    assert_eq!(
        show(Conn::Or),
        [
            ["u", "u", "u", "u", "u"],
            ["u", "1", "1", "1", "1"],
            ["u", "1", "a", "1", "a"],
            ["u", "1", "1", "b", "b"],
            ["u", "1", "a", "b", "0"]
        ]
    );
    assert_eq!(
        show(Conn::Imp),
        [
            ["u", "u", "a", "b", "0"],
            ["u", "1", "a", "b", "0"],
            ["u", "1", "1", "b", "b"],
            ["u", "1", "a", "1", "a"],
            ["u", "1", "1", "1", "1"]
        ]
    );
    assert_eq!(unary(&m, Conn::Neg), ["1", "0", "b", "a", "1"]);
    assert_eq!(unary(&m, Conn::Cons), ["0", "1", "1", "1", "1"]);
    // the double negation of the top value lands on the bottom
    let u = m.value_of_label("u").unwrap();
    assert_eq!(m.label(m.neg_value(m.neg_value(u))), "0");
}

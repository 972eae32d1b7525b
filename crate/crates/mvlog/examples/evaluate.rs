//! Truth-table evaluation and validity over catalog matrices.
//!
//! ```bash
//! cargo run --example evaluate
//! ```

use mvlog::formula::{parse_formula, parse_schema};
use mvlog::matrices::{evaluate, is_valid};
use mvlog::registry::builtin;

fn main() {
    let pac = builtin("pac").unwrap();
    let f = parse_formula("~(p & ~p)").unwrap();
    println!("evaluating {f} in {} for every value of p:", pac.name());
    for v in 0..pac.n() as u8 {
        let valuation = [("p".to_string(), v)].into_iter().collect();
        let out = evaluate(&pac, &f, &valuation).unwrap();
        println!(
            "  p = {:3}  ->  {} {}",
            pac.label(v),
            pac.label(out),
            if pac.is_designated(out) { "(designated)" } else { "" }
        );
    }

    println!();
    let schemas = ["A -> (B -> A)", "~(A & ~A)", "A -> (~A -> B)", "A | ~A"];
    for key in ["pac", "lfi1", "p1", "cpl"] {
        let logic = builtin(key).unwrap();
        println!("validity in {key}:");
        for text in schemas {
            let s = parse_schema(text).unwrap();
            println!("  {:16} {}", text, if is_valid(&logic, &s).unwrap() { "valid" } else { "invalid" });
        }
    }
}

//! Entailment queries and countermodel extraction.
//!
//! ```bash
//! cargo run --example countermodels
//! ```

use mvlog::formula::parse_formula;
use mvlog::matrices::find_countermodel;
use mvlog::registry::builtin;

fn show(key: &str, premises: &[&str], conclusion: &str) {
    let logic = builtin(key).unwrap();
    let prems: Vec<_> = premises.iter().map(|p| parse_formula(p).unwrap()).collect();
    let concl = parse_formula(conclusion).unwrap();
    match find_countermodel(&logic, &prems, &concl).unwrap() {
        None => println!("{key}: {{{}}} |= {conclusion}", premises.join(", ")),
        Some(v) => {
            let assignment: Vec<String> =
                v.iter().map(|(atom, &val)| format!("{atom}={}", logic.label(val))).collect();
            println!(
                "{key}: {{{}}} |/= {conclusion}   countermodel: {}",
                premises.join(", "),
                assignment.join(", ")
            );
        }
    }
}

fn main() {
    // contradictions do not explode in the paraconsistent matrices
    show("pac", &["p", "~p"], "q");
    show("lfi1", &["p", "~p"], "q");
    // but a consistency assumption restores explosion
    show("lfi1", &["o p", "p", "~p"], "q");
    // and the classical matrix explodes outright
    show("cpl", &["p", "~p"], "q");
    println!();
    // modus ponens holds everywhere; contradictions stay quiet about o p
    show("pac", &["p", "p -> q"], "q");
    show("lfi1", &["p", "~p"], "o p");
}

//! Bounded checks of the contraposition and consistency-congruence
//! metarules over term functions of a matrix.
//!
//! ```bash
//! cargo run --release --example metarules
//! ```

use mvlog::hilbert::{metarule_sound_bounded, MetaRule, MetaVerdict};
use mvlog::registry::builtin;

fn main() {
    for (key, rules, bound) in [
        ("lfi1", vec![MetaRule::Rc, MetaRule::Ec, MetaRule::Ro, MetaRule::Eo], 4usize),
        ("thm3.53urbas", vec![MetaRule::Ec, MetaRule::Eo], 5),
        ("thm3.58", vec![MetaRule::Rg], 4),
    ] {
        let logic = builtin(key).unwrap();
        println!("{key}:");
        for rule in rules {
            match metarule_sound_bounded(&logic, rule, bound).unwrap() {
                MetaVerdict::NoViolation { terms, bound } => {
                    println!("  {:3} no violation over {terms} term functions (size <= {bound})", rule.name());
                }
                MetaVerdict::Violation { premise_term, conclusion_term } => {
                    println!("  {:3} violated by the pair {premise_term} / {conclusion_term}", rule.name());
                }
            }
        }
    }
}

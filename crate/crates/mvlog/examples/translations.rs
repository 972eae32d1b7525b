//! Conservative translations and their bounded oracles.
//!
//! ```bash
//! cargo run --release --example translations
//! ```

use mvlog::formula::parse_formula;
use mvlog::registry::builtin;
use mvlog::translate::{
    apply_translation, conservativity_check, guarded_classical_check, Translation,
};

fn main() {
    for (t, text) in [
        (Translation::T1, "~(p & ~q)"),
        (Translation::T1e, "o p -> q"),
        (Translation::T2Cons, "p -> q"),
        (Translation::T2Conj, "p -> q"),
        (Translation::P1Embed, "~p"),
    ] {
        let f = parse_formula(text).unwrap();
        println!("{:8} {text:14} |->  {}", t.name(), apply_translation(t, &f).unwrap());
    }

    println!();
    let cpl = builtin("cpl").unwrap();
    for (t, target) in [
        (Translation::T1, "lfi1"),
        (Translation::T1, "p1"),
        (Translation::T2Cons, "lfi1"),
        (Translation::T2Conj, "lfi1"),
    ] {
        let tgt = builtin(target).unwrap();
        let r = conservativity_check(t, &cpl, &tgt, 2, 4).unwrap();
        println!(
            "{} into {target}: {} ({} semantic classes at 2 atoms, size 4)",
            t.name(),
            if r.holds() { "no violation" } else { "violation found" },
            r.classes
        );
    }
    let p1 = builtin("p1").unwrap();
    let lfi1 = builtin("lfi1").unwrap();
    let r = conservativity_check(Translation::P1Embed, &p1, &lfi1, 2, 4).unwrap();
    println!("p1embed into lfi1: {}", if r.holds() { "no violation" } else { "violation" });

    // classical reasoning under atom-consistency premises
    let r = guarded_classical_check(&lfi1, 2, 4).unwrap();
    println!(
        "classical entailment with consistency premises for every atom, inside lfi1: {}",
        if r.holds() { "no violation" } else { "violation" }
    );
}

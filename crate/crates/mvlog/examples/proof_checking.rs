//! Hilbert-style proof checking with step-level diagnostics, plus matrix
//! soundness reports for whole systems.
//!
//! ```bash
//! cargo run --example proof_checking
//! ```

use mvlog::hilbert::{check_proof, proof_from_json, soundness_report, system};
use mvlog::registry::builtin;

fn main() {
    let bc = system("bc").unwrap();
    // q from a consistent contradiction, by the gentle-explosion rule
    let text = r#"[
        {"formula": "o p", "by": "premise"},
        {"formula": "p", "by": "premise"},
        {"formula": "~p", "by": "premise"},
        {"formula": "q", "by": {"rule": "bc1", "subst": {"A": "p", "B": "q"}, "from": [1, 2, 3]}}
    ]"#;
    let proof = proof_from_json(text, &bc).unwrap();
    println!("checking a 4-step derivation in {}: {:?}", bc.name(), check_proof(&bc, &proof));

    // the same text is rejected in a system whose language lacks `o`
    let cmin = system("cmin").unwrap();
    println!("the same steps in cmin: {}", proof_from_json(text, &cmin).unwrap_err());

    // and an unknown rule is diagnosed even when the formulas parse
    let q_by_unknown = r#"[
        {"formula": "p", "by": "premise"},
        {"formula": "q", "by": {"rule": "bc1", "subst": {"A": "p", "B": "q"}, "from": [1, 1, 1]}}
    ]"#;
    let proof = proof_from_json(q_by_unknown, &cmin).unwrap();
    println!("a bc-only rule in cmin: {}", check_proof(&cmin, &proof).unwrap_err());

    // a wrong citation is pinpointed
    let broken = r#"[
        {"formula": "p", "by": "premise"},
        {"formula": "q", "by": {"rule": "MP", "subst": {"A": "p", "B": "q"}, "from": [1, 1]}}
    ]"#;
    let proof = proof_from_json(broken, &cmin).unwrap();
    println!("broken citation: {}", check_proof(&cmin, &proof).unwrap_err());

    // soundness report: the catalog matrix built to refute one axiom
    println!();
    let report = soundness_report(&cmin, &builtin("thm3.3").unwrap()).unwrap();
    for v in &report.verdicts {
        if !v.sound {
            let cm: Vec<String> = v
                .countermodel
                .as_ref()
                .unwrap()
                .iter()
                .map(|(m, l)| format!("{m}={l}"))
                .collect();
            println!("{} fails in thm3.3 at {}", v.rule, cm.join(", "));
        }
    }
    println!("all other cmin rules are sound there: {}", report.unsound_rules() == ["Min9"]);
}

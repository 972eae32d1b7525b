//! The deduction metatheorem as a proof transformation: discharge a
//! premise and get a checkable proof of the implication.
//!
//! ```bash
//! cargo run --example deduction_theorem
//! ```

use mvlog::formula::parse_formula;
use mvlog::hilbert::{check_proof, deduction_transform, proof_from_json, proof_to_json, system};

fn main() {
    let sys = system("cmin").unwrap();
    let text = r#"[
        {"formula": "p", "by": "premise"},
        {"formula": "p -> (p -> q)", "by": "premise"},
        {"formula": "p -> q", "by": {"rule": "MP", "subst": {"A": "p", "B": "p -> q"}, "from": [1, 2]}},
        {"formula": "q", "by": {"rule": "MP", "subst": {"A": "p", "B": "q"}, "from": [1, 3]}}
    ]"#;
    let proof = proof_from_json(text, &sys).unwrap();
    check_proof(&sys, &proof).unwrap();
    println!(
        "input: {} steps, premises {{{}}}, conclusion {}",
        proof.steps.len(),
        proof.premises().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "),
        proof.conclusion().unwrap()
    );

    let discharged = parse_formula("p").unwrap();
    let out = deduction_transform(&sys, &proof, &discharged).unwrap();
    check_proof(&sys, &out).unwrap();
    println!(
        "output: {} steps, premises {{{}}}, conclusion {}",
        out.steps.len(),
        out.premises().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "),
        out.conclusion().unwrap()
    );
    println!();
    println!("{}", proof_to_json(&out));
}

//! Congruence enumeration, lattice filters, and the finite-matrix
//! algebraizability checks.
//!
//! ```bash
//! cargo run --example congruences_and_filters
//! ```

use mvlog::algebra::{
    blok_pigozzi_check, congruence_connective_check, enumerate_congruences,
    filter_congruence_comparison, lattice_filters,
};
use mvlog::eightk::{build_logic, EightKCode};
use mvlog::formula::parse_schema;
use mvlog::registry::builtin;

fn main() {
    // the 5-valued matrix with a filter/congruence mismatch
    let m = builtin("thm3.83mortensen").unwrap();
    let congs = enumerate_congruences(&m, true).unwrap();
    println!("designation-compatible congruences of {}: {}", m.name(), congs.len());
    let filters = lattice_filters(&m).unwrap();
    println!("lattice filters:");
    for f in &filters {
        let labels: Vec<&str> = f.iter().map(|&v| m.label(v)).collect();
        println!("  {{{}}}", labels.join(", "));
    }
    let verdict = filter_congruence_comparison(&m).unwrap();
    println!(
        "{} filters vs {} congruence(s): isomorphism possible? {}",
        verdict.filters, verdict.congruences, verdict.isomorphic_counts
    );

    println!();
    // the equivalence connective of the three-valued family
    let e = parse_schema("(A <-> B) & (o A <-> o B)").unwrap();
    let delta = parse_schema("o A & A").unwrap();
    let epsilon = parse_schema("o A & (A | o A)").unwrap();
    for code in [0u32, 5168, 8191] {
        let logic = build_logic(EightKCode::new(code).unwrap());
        println!(
            "code {code}: equivalence connective is a congruence: {}, algebraizability triple passes: {}",
            congruence_connective_check(&logic, &e).unwrap(),
            blok_pigozzi_check(&logic, &e, &delta, &epsilon).unwrap()
        );
    }
}

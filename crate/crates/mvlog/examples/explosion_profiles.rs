//! Classify catalog matrices against the explosion principles: bottom
//! particles, strong negations, gentle and controllable explosion, and
//! the bounded partial-explosion search.
//!
//! ```bash
//! cargo run --example explosion_profiles
//! ```

use mvlog::matrices::{classify_explosion, PartialExplosion};
use mvlog::registry::builtin;

fn main() {
    for key in ["pac", "lfi1", "p1", "ecpl", "thm3.53urbas"] {
        let logic = builtin(key).unwrap();
        let p = classify_explosion(&logic, 5).unwrap();
        println!(
            "{key} ({}, clone {}):",
            if p.paraconsistent { "paraconsistent" } else if p.explosive { "explosive" } else { "other" },
            if p.clone_exact { "exact".to_string() } else { format!("terms up to size {}", p.bound) }
        );
        let witness = |w: &Option<mvlog::formula::Schema>| match w {
            Some(s) => format!("yes, witness {s}"),
            None => "no".to_string(),
        };
        println!("  bottom particle:        {}", witness(&p.bottom));
        println!("  strong negation:        {}", witness(&p.strong_negation));
        println!("  gentle explosion:       {}", witness(&p.gentle));
        println!("  controllable explosion: {}", witness(&p.controllable));
        match &p.partial {
            PartialExplosion::Witness(s) => println!("  partial explosion:      witness {s}"),
            PartialExplosion::OnlyTopParticles => {
                println!("  partial explosion:      only top particles qualify")
            }
        }
        println!();
    }
}

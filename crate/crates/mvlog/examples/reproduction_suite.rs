//! Run the bundled reproduction suite (the same checks as
//! `mvlog verify-paper`), here restricted to one section.
//!
//! ```bash
//! cargo run --release --example reproduction_suite
//! ```

use mvlog::verify::verify_paper;

fn main() {
    let report = verify_paper(Some("3.53"));
    for c in &report.checks {
        println!(
            "[{}] {} (expected {}, got {})",
            if c.pass { "pass" } else { "FAIL" },
            c.name,
            c.expected,
            c.got
        );
    }
    println!("{} passed, {} failed", report.passed(), report.failed());
}

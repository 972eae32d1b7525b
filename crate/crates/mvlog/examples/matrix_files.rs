//! The JSON matrix file format: save a catalog entry, tweak it, and load
//! the result back.
//!
//! ```bash
//! cargo run --example matrix_files
//! ```

use mvlog::formula::parse_schema;
use mvlog::matrices::is_valid;
use mvlog::registry::{builtin, matrix_from_json, matrix_to_json};

fn main() {
    let lfi1 = builtin("lfi1").unwrap();
    let doc = matrix_to_json(&lfi1);
    println!("{doc}");

    let back = matrix_from_json(&doc).unwrap();
    assert_eq!(back, lfi1);
    println!("round trip: ok");

    // documents are validated on load
    let broken = doc.replace("\"0\",\n      \"1/2\",\n      \"1\"", "\"0\",\n      \"1/2\"");
    match matrix_from_json(&broken) {
        Err(e) => println!("truncated table rejected: {e}"),
        Ok(_) => println!("unexpected acceptance"),
    }

    // loaded matrices behave like built-ins
    let s = parse_schema("~(A & ~A)").unwrap();
    println!("loaded copy validates ~(A & ~A): {}", is_valid(&back, &s).unwrap());
}

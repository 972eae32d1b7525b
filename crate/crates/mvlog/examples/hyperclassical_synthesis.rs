//! Term synthesis: any three-valued table with classical outputs on
//! classical inputs is definable in the richest family member; the clone
//! search returns a minimal witnessing term.
//!
//! ```bash
//! cargo run --release --example hyperclassical_synthesis
//! ```

use mvlog::eightk::{build_logic, EightKCode};
use mvlog::matrices::Conn;
use mvlog::registry::builtin;
use mvlog::translate::{define_hyperclassical, HyperTable};

fn main() {
    let lfi1 = builtin("lfi1").unwrap();
    let show = |v: u8| lfi1.label(v).to_string();

    // the negation of the all-ones member (1 -> 0, 1/2 -> 1, 0 -> 1)
    let term = define_hyperclassical(&HyperTable::Unary([2, 0, 0])).unwrap();
    println!("(1,1/2,0) -> (0,1,1):  {term}");

    // a deliberately odd unary table
    let term = define_hyperclassical(&HyperTable::Unary([0, 1, 2])).unwrap();
    println!("identity:              {term}");
    let term = define_hyperclassical(&HyperTable::Unary([2, 1, 0])).unwrap();
    println!("involutive swap:       {term}");

    // synthesize the implication of a mid-family member
    let code = EightKCode::new(4242).unwrap();
    let logic = build_logic(code);
    let imp: [u8; 9] =
        std::array::from_fn(|i| logic.apply_binary(Conn::Imp, (i / 3) as u8, (i % 3) as u8).unwrap());
    let term = define_hyperclassical(&HyperTable::Binary(imp)).unwrap();
    println!("implication of code {code}: {term}");
    let table: Vec<String> = imp.iter().map(|&v| show(v)).collect();
    println!("  target table (row-major): {}", table.join(" "));

    // non-hyperclassical tables are rejected
    let err = define_hyperclassical(&HyperTable::Unary([1, 0, 2])).unwrap_err();
    println!("table sending 1 to 1/2: {err}");
}

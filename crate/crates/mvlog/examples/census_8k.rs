//! Full census of the 8,192-member three-valued family.

fn main() {
    let report = mvlog::eightk::census();
    println!("total:                  {}", report.total);
    println!("dc_systems:             {}", report.dc_systems);
    println!("neg_conj_defines_cons:  {}", report.neg_conj_defines_cons);
    println!("extend_cio:             {}", report.extend_cio);
    println!("extend_cilo:            {}", report.extend_cilo);
    println!("extend_cia:             {}", report.extend_cia);
    println!("tps_invalid:            {}", report.tps_invalid);
    println!("cons_strong_neg_valid:  {}", report.cons_strong_neg_valid);
    println!("probe_vector_matches:   {}", report.probe_vector_matches);
}

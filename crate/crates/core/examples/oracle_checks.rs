//! Cross-check the polynomial pipeline against dense linear algebra over F_q.

use mthull::checks::run_checks;
use mthull::{parse_spec, AssumptionPolicy};

fn main() -> mthull::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/mt_f9.spec");
    let code = parse_spec(&std::fs::read_to_string(path).expect("fixture"))?;
    let (report, checks) = run_checks(&code, 1, AssumptionPolicy::Strict)?;
    for c in &checks {
        println!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
    }
    println!("hull dimension {} ({})", report.dim_hull, report.classification.label());
    Ok(())
}

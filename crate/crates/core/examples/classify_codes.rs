//! Self-orthogonal / LCD verdicts for every bundled code.

use mthull::{classify, parse_spec, AssumptionPolicy, GaloisContext};

fn main() -> mthull::Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
    let cases = [("gqc_f16.spec", 3), ("qc_binary.spec", 0), ("mds_f4.spec", 1), ("mt_f9.spec", 1), ("qt_f7.spec", 0)];
    for (name, kappa) in cases {
        let code = parse_spec(&std::fs::read_to_string(format!("{dir}/{name}")).expect("fixture"))?;
        let strict = GaloisContext::new(&code, kappa)?.assumption_ok;
        let policy = if strict { AssumptionPolicy::Strict } else { AssumptionPolicy::Override };
        let r = classify(&code, kappa, policy)?;
        println!(
            "{name:<16} kappa {kappa}  n {:>2}  dim {:>2}  hull {:>2}  {}{}",
            code.length(),
            r.dim_code,
            r.dim_hull,
            r.classification.label(),
            if strict { "" } else { "  (override)" }
        );
    }
    Ok(())
}

//! Full hull computation: the pairing matrix, the associated quasi-cyclic code, its dual
//! and a generator polynomial matrix of the Galois hull.
//!
//! Usage: `cargo run --example hull_report [SPEC_FILE] [KAPPA]`

use mthull::{classify, parse_spec, AssumptionPolicy, ElementStyle};

fn main() -> mthull::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/mds_f4.spec").to_string());
    let kappa: u32 = args.next().map_or(1, |k| k.parse().expect("kappa"));
    let code = parse_spec(&std::fs::read_to_string(&path).expect("readable spec"))?;
    let report = classify(&code, kappa, AssumptionPolicy::Strict)?;
    print!("{}", report.to_text(ElementStyle::Power));
    Ok(())
}

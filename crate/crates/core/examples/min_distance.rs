//! Exhaustive minimum distance of the binary self-orthogonal [36, 18] quasi-cyclic code.

use std::time::Instant;

use mthull::{min_distance, parse_spec, DEFAULT_BUDGET};

fn main() -> mthull::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/qc_binary.spec");
    let code = parse_spec(&std::fs::read_to_string(path).expect("fixture"))?;
    let start = Instant::now();
    let d = min_distance(&code.expand_basis(), DEFAULT_BUDGET)?;
    println!("[{}, {}, {d}] in {:.2?}", code.length(), code.dimension(), start.elapsed());

    match min_distance(&code.expand_basis(), 1 << 10) {
        Err(e) => println!("with a budget of 1024 messages: {e}"),
        Ok(d) => println!("with a budget of 1024 messages: {d}"),
    }
    Ok(())
}

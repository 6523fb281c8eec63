//! Euclidean and Galois duals of a generalized quasi-cyclic code over F_16, and a
//! containment witness showing the code is 3-Galois self-orthogonal.

use mthull::{containment_witness, dual_gpm, parse_spec, ElementStyle};

fn main() -> mthull::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/gqc_f16.spec");
    let code = parse_spec(&std::fs::read_to_string(path).expect("fixture"))?;
    let style = ElementStyle::Power;

    let dual = dual_gpm(&code, 3)?;
    println!("Euclidean dual GPM H =\n{}\n", dual.euclidean.gpm().to_string_with(style));
    println!("3-Galois dual GPM H_3 =\n{}\n", dual.galois.gpm().to_string_with(style));
    println!("dim C = {}, dim C^perp_3 = {}", code.dimension(), dual.galois.dimension());

    match containment_witness(&dual.galois, &code)? {
        Some(m) => println!("G = M H_3 with M =\n{}", m.to_string_with(style)),
        None => println!("C is not contained in its 3-Galois dual"),
    }
    Ok(())
}

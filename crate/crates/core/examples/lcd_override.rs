//! A quasi-twisted code whose shift constants violate the hull hypothesis: the strict
//! pipeline refuses, the override still computes the pairing matrix and dimensions.

use mthull::hull::divisor_gcd_degree;
use mthull::{classify, parse_spec, AssumptionPolicy, ElementStyle, Error};

const SPEC: &str = "
p = 7
blocks = 2, 2
lambdas = 2, 5
generators = [ x + 1 | 0 ]
";

fn main() -> mthull::Result<()> {
    let code = parse_spec(SPEC)?;
    println!("reduced GPM:\n{}", code.gpm().to_string_with(ElementStyle::Power));

    match classify(&code, 0, AssumptionPolicy::Strict) {
        Err(e @ Error::AssumptionViolated { .. }) => println!("strict: {e}"),
        other => println!("strict: unexpected {other:?}"),
    }

    let r = classify(&code, 0, AssumptionPolicy::Override)?;
    println!("B_G =\n{}", r.b_matrix.to_string_with(ElementStyle::Power));
    println!("G_G =\n{}", r.qg_gpm.to_string_with(ElementStyle::Power));
    println!("gcd degree {} = N l - dim C = {}", divisor_gcd_degree(&r.b_matrix, r.n), r.n * 2 - r.dim_code);
    println!("dim C = {}, dim Q_G = {}, hull dimension {} -> {}", r.dim_code, r.dim_qg, r.dim_hull, r.classification.label());
    Ok(())
}

//! A multi-twisted code from its generator polynomial matrix: the identical equation,
//! the dimension and the expanded generator matrix.

use mthull::{parse_spec, ElementStyle};

const SPEC: &str = "
p = 2
e = 2
modulus = t^2 + t + 1
blocks = 3, 5
lambdas = 1, t
gpm = [ 1 | t^2 ; 0 | x + t^2 ]
";

fn main() -> mthull::Result<()> {
    let code = parse_spec(SPEC)?;
    let style = ElementStyle::Power;
    println!("G =\n{}", code.gpm().to_string_with(style));
    println!("A =\n{}", code.identical_matrix().to_string_with(style));
    let product = code.identical_matrix().matmul(code.gpm())?;
    println!("A G =\n{}", product.to_string_with(style));
    println!("length {}, dimension {}, shift order N = {}", code.length(), code.dimension(), code.order_n());
    println!("basis of the code:\n{}", code.expand_basis().to_string_with(style));
    Ok(())
}

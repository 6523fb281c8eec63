//! Hermite normal form, determinantal divisors and left division of polynomial matrices.

use mthull::{parse_matrix, ElementStyle, FieldSpec, PolyMatrix};

fn main() -> mthull::Result<()> {
    let f = FieldSpec::prime(3)?;
    let m = parse_matrix(&f, "x^2 + 1 | x + 2 | 1 ; x^3 | x^2 + x | x + 1 ; 2x + 1 | 0 | x^2 + 2")?;
    println!("M =\n{}\n", m.to_string_with(ElementStyle::Power));

    let h = m.hnf()?;
    println!("HNF =\n{}\n", h.hnf.to_string_with(ElementStyle::Power));
    println!("U unimodular: {}", h.transform.is_unimodular()?);
    println!("U M == HNF: {}\n", h.transform.matmul(&m)? == h.hnf);

    for (i, d) in m.determinantal_divisors().iter().enumerate() {
        println!("d_{} = {d}", i + 1);
    }
    println!("det M = {}", m.determinant()?);

    let c = parse_matrix(&f, "1 | x | 0 ; 0 | 1 | 2 ; 0 | 0 | 1")?.matmul(&m)?;
    let x = PolyMatrix::left_divide(&c, &m)?;
    println!("\nX with X M = C:\n{}", x.expect("divisible").to_string_with(ElementStyle::Power));
    Ok(())
}

//! Arithmetic in F_16 = F_2[t]/(t^4 + t + 1) and the Galois inner products on F_16^n.

use mthull::{galois_inner, ElementStyle, FieldSpec};

fn main() -> mthull::Result<()> {
    let f = FieldSpec::new(2, 4, &[1, 1, 0, 0, 1])?;
    let t = f.theta();
    let t5 = f.pow(t, 5)?;
    let t10 = f.pow(t, 10)?;

    for (label, a) in [("t^5", t5), ("t^10", t10), ("t^5 + t^10", f.add(t5, t10))] {
        println!(
            "{label:>10} = {:<14} order {}",
            f.format(a, ElementStyle::Basis),
            f.mult_order(a)?
        );
    }
    println!("inverse of t^5 = {}", f.format(f.inv(t5)?, ElementStyle::Power));
    for k in 0..f.degree() {
        println!("sigma^{k}(t^5) = {}", f.format(f.frobenius(t5, k), ElementStyle::Power));
    }

    let a = vec![f.one(), t, t5];
    let b = vec![t10, t10, f.one()];
    for kappa in 0..f.degree() {
        let ip = galois_inner(&f, &a, &b, kappa)?;
        println!("<a, b>_{kappa} = {}", f.format(ip, ElementStyle::Power));
    }
    Ok(())
}

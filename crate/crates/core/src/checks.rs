//! Consistency checks of the polynomial pipeline against the dense oracle.

use crate::error::Result;
use crate::galois::{dual_gpm, shifted_inner_products, GaloisContext};
use crate::gf::FieldElement;
use crate::hull::{classify, hull_dimension_from_divisors, pairing, qc_dimension, AssumptionPolicy, HullReport};
use crate::mtcode::CodeSpec;
use crate::oracle::{hongwei_rank, hull_by_definition, DenseMatrix};
use crate::poly::Poly;
use crate::polymat::PolyMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

fn check(name: &'static str, passed: bool) -> Check {
    Check { name, passed }
}

/// Read row `i` of `B_G = S_G σ^κ(S_G)^t` as a polynomial vector: column `ιℓ + j` becomes
/// the coefficient of `x^ι` in entry `j`.
pub fn b_row_as_polys(b: &DenseMatrix, i: usize, ell: usize) -> Vec<Poly> {
    let f = b.field();
    let n_order = b.cols() / ell;
    (0..ell)
        .map(|j| Poly::new(f, (0..n_order).map(|iota| b.get(i, iota * ell + j)).collect()))
        .collect()
}

/// `B_G` of the code's GPM, built from the expanded generator matrix.
pub fn dense_b(spec: &CodeSpec, kappa: u32) -> DenseMatrix {
    let s = spec.expand_generator();
    s.matmul(&s.map_sigma(kappa).transpose()).expect("square product")
}

/// The polynomial identity `Σ_ι ⟨a, T^ι b⟩_κ x^ι` obtained from `φ(a)`, `φ(b)` through the
/// pairing matrix, compared with direct shifting.
pub fn inner_product_identity(spec: &CodeSpec, a: &[FieldElement], b: &[FieldElement], kappa: u32) -> Result<bool> {
    let f = spec.field();
    let row = |v: &[FieldElement]| -> Result<PolyMatrix> { PolyMatrix::from_rows(f, vec![spec.phi(v)?]) };
    let poly = pairing(spec, &row(a)?, &row(b)?, kappa)?;
    let direct = shifted_inner_products(spec, a, b, kappa)?;
    Ok(poly.get(0, 0) == &direct)
}

/// Run every applicable check; returns the hull report alongside.
pub fn run_checks(spec: &CodeSpec, kappa: u32, policy: AssumptionPolicy) -> Result<(HullReport, Vec<Check>)> {
    let ctx = GaloisContext::new(spec, kappa)?;
    let report = classify(spec, kappa, policy)?;
    let spec = spec.reduced()?;
    let f = spec.field().clone();
    let ell = spec.ell();
    let n_order = spec.order_n();
    let mut out = Vec::new();

    let a_times_g = spec.identical_matrix().matmul(spec.gpm())?;
    out.push(check("identical equation", a_times_g == PolyMatrix::diag(&f, &spec.moduli())));

    let s = spec.expand_generator();
    let basis = s.row_basis();
    out.push(check("expanded rank equals dimension", basis.rows() == spec.dimension()));

    let dual = dual_gpm(&spec, kappa)?;
    let dual_basis = dual.galois.expand_generator().row_basis();
    let orthogonal = basis.matmul(&dual_basis.map_sigma(kappa).transpose())?.is_zero();
    out.push(check("dual is orthogonal", orthogonal));
    out.push(check("dual dimension", basis.rows() + dual_basis.rows() == spec.length()));

    let oracle_hull = hull_by_definition(&basis, kappa);
    let rank = hongwei_rank(&basis, kappa);
    out.push(check("rank formula matches hull by definition", rank + oracle_hull.rows() == basis.rows()));
    out.push(check("hull dimension matches oracle", report.dim_hull == oracle_hull.rows()));

    let dense = dense_b(&spec, kappa);
    let qc_shift_invariant = {
        let rows = dense.rows();
        let shifted: Vec<Vec<FieldElement>> = (0..rows)
            .map(|r| {
                let row = dense.row(r);
                let mut v = row[row.len() - ell..].to_vec();
                v.extend_from_slice(&row[..row.len() - ell]);
                v
            })
            .collect();
        let sh = DenseMatrix::from_rows(&f, dense.cols(), &shifted)?;
        sh.same_row_space(&dense)
    };
    out.push(check("row space of B_G is quasi-cyclic", qc_shift_invariant));

    if ctx.assumption_ok {
        let bridge = (0..ell).all(|i| b_row_as_polys(&dense, i, ell).as_slice() == report.b_matrix.row(i));
        out.push(check("dense B_G rows match the polynomial matrix", bridge));

        let via_divisors = hull_dimension_from_divisors(report.dim_code, &report.b_matrix, n_order);
        let via_det = report.dim_code - qc_dimension(&report.qg_gpm, n_order);
        out.push(check(
            "three hull dimension routes agree",
            via_divisors == via_det && via_det == report.dim_code - rank,
        ));

        let zero_pairing = pairing(&spec, spec.gpm(), dual.galois.gpm(), kappa)?.is_zero();
        out.push(check("code pairs to zero with its dual", zero_pairing));

        let hull_gpm = report.hull_gpm.clone().expect("strict report");
        let hull_code = spec.with_gpm(hull_gpm)?;
        let hull_basis = hull_code.expand_generator().row_basis();
        out.push(check("hull GPM matches hull by definition", hull_basis.same_row_space(&oracle_hull)));

        let mut invariant = true;
        for i in 0..hull_basis.rows() {
            let v = spec.shift(hull_basis.row(i))?;
            invariant &= hull_basis.contains_vector(&v);
        }
        out.push(check("hull is shift invariant", invariant));

        let mut identity = true;
        for i in 0..basis.rows().min(3) {
            for j in 0..basis.rows().min(3) {
                identity &= inner_product_identity(&spec, basis.row(i), basis.row(j), kappa)?;
            }
        }
        out.push(check("polynomial inner product identity", identity));
    }
    Ok((report, out))
}

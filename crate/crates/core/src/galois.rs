//! κ-Galois inner products and duals of multi-twisted codes.

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::mtcode::CodeSpec;
use crate::poly::{LaurentPoly, Poly};
use crate::polymat::PolyMatrix;

/// `⟨a, b⟩_κ = Σ a_i b_i^{p^κ}`.
pub fn galois_inner(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement], kappa: u32) -> Result<FieldElement> {
    if a.len() != b.len() {
        return Err(Error::ShapeMismatch(format!("inner product of lengths {} and {}", a.len(), b.len())));
    }
    Ok(a.iter()
        .zip(b)
        .fold(FieldElement::ZERO, |acc, (&x, &y)| field.add(acc, field.mul(x, field.frobenius(y, kappa)))))
}

pub fn check_kappa(field: &FieldSpec, kappa: u32) -> Result<()> {
    let e = field.degree();
    if kappa >= e {
        return Err(Error::InvalidKappa { kappa, e });
    }
    Ok(())
}

/// `Δ_κ = σ^{e-κ}(λ_1^{-1}, .., λ_ℓ^{-1})`, the shift constants of the κ-Galois dual.
pub fn dual_shift_constants(spec: &CodeSpec, kappa: u32) -> Vec<FieldElement> {
    let f = spec.field();
    let e = f.degree();
    spec.lambdas()
        .iter()
        .map(|&l| f.frobenius(f.inv(l).expect("nonzero shift constant"), e - kappa))
        .collect()
}

/// A code together with the inner product under consideration.
#[derive(Clone, Debug)]
pub struct GaloisContext {
    pub spec: CodeSpec,
    pub kappa: u32,
    /// Whether `λ_j^{p^{e-κ}+1} = 1` for every block, i.e. `Δ_κ = Λ`.
    pub assumption_ok: bool,
}

impl GaloisContext {
    pub fn new(spec: &CodeSpec, kappa: u32) -> Result<GaloisContext> {
        check_kappa(spec.field(), kappa)?;
        let assumption_ok = dual_shift_constants(spec, kappa) == spec.lambdas();
        Ok(GaloisContext { spec: spec.clone(), kappa, assumption_ok })
    }

    pub fn require_assumption(&self) -> Result<()> {
        if self.assumption_ok {
            Ok(())
        } else {
            Err(Error::AssumptionViolated { kappa: self.kappa })
        }
    }
}

/// GPMs of the Euclidean dual (shift constants `λ^{-1}`) and of the κ-Galois dual
/// (shift constants `Δ_κ`).
#[derive(Clone, Debug)]
pub struct Dual {
    pub euclidean: CodeSpec,
    pub galois: CodeSpec,
    /// Whether the input GPM had to be brought to Hermite normal form first.
    pub reduced_input: bool,
}

/// Dual GPM built from the identical equation of the reduced GPM `G`:
/// `H_{j,i} ≡ x^{m_i} A_{i,j}(1/x) x^{-d_j}` modulo `x^{m_i} - λ_i^{-1}`, `d_j = deg G_{jj}`.
///
/// The diagonal `x^{m_i - d_i} A_{ii}(1/x)` is already a polynomial of degree at most `m_i` and is
/// kept as is, since reducing it would lose the pivot when `d_i = 0`.
pub fn dual_gpm(spec: &CodeSpec, kappa: u32) -> Result<Dual> {
    check_kappa(spec.field(), kappa)?;
    let f = spec.field().clone();
    let e = f.degree();
    let reduced_input = !spec.is_reduced();
    let reduced = if reduced_input { spec.reduced()? } else { spec.clone() };
    let g = reduced.gpm();
    let a = reduced.identical_matrix();
    let ell = reduced.ell();
    let m = reduced.block_lengths();
    let inv_lambdas: Vec<FieldElement> = reduced.lambdas().iter().map(|&l| f.inv(l).expect("nonzero")).collect();
    let d: Vec<usize> = (0..ell).map(|j| g.get(j, j).degree().expect("nonzero pivot")).collect();

    let mut h = PolyMatrix::zero(&f, ell, ell);
    for i in 0..ell {
        for j in 0..ell {
            let w = LaurentPoly::reciprocal_of(a.get(i, j)).shift(m[i] as i64 - d[j] as i64);
            let entry = if i == j {
                w.to_poly().expect("diagonal is a polynomial")
            } else {
                w.laurent_reduce(m[i], inv_lambdas[i])
            };
            h.set(j, i, entry);
        }
    }
    let euclidean = CodeSpec::new(&f, m.to_vec(), inv_lambdas, h.clone())?;
    let galois = CodeSpec::new(&f, m.to_vec(), dual_shift_constants(&reduced, kappa), h.map_sigma(e - kappa))?;
    Ok(Dual { euclidean, galois, reduced_input })
}

/// A matrix `M` with `inner.gpm = M outer.gpm` when `inner ⊆ outer`, `None` otherwise.
pub fn containment_witness(outer: &CodeSpec, inner: &CodeSpec) -> Result<Option<PolyMatrix>> {
    if outer.field() != inner.field() {
        return Err(Error::IncompatibleCodes("different fields".into()));
    }
    if outer.block_lengths() != inner.block_lengths() {
        return Err(Error::IncompatibleCodes("different block lengths".into()));
    }
    if outer.lambdas() != inner.lambdas() {
        return Err(Error::IncompatibleCodes("different shift constants".into()));
    }
    PolyMatrix::left_divide(inner.gpm(), outer.gpm())
}

/// Whether `inner ⊆ outer`.
pub fn contains(outer: &CodeSpec, inner: &CodeSpec) -> Result<bool> {
    Ok(containment_witness(outer, inner)?.is_some())
}

/// `Σ_ι ⟨a, T^ι(b)⟩_κ x^ι` for `0 ≤ ι < N`, computed directly by shifting.
pub fn shifted_inner_products(spec: &CodeSpec, a: &[FieldElement], b: &[FieldElement], kappa: u32) -> Result<Poly> {
    let f = spec.field();
    let n_order = spec.order_n();
    let mut coeffs = Vec::with_capacity(n_order);
    let mut cur = b.to_vec();
    for _ in 0..n_order {
        coeffs.push(galois_inner(f, a, &cur, kappa)?);
        cur = spec.shift(&cur)?;
    }
    Ok(Poly::new(f, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::DenseMatrix;
    use proptest::prelude::*;

    fn f16() -> FieldSpec {
        FieldSpec::new(2, 4, &[1, 1, 0, 0, 1]).unwrap()
    }

    fn f4() -> FieldSpec {
        FieldSpec::new(2, 2, &[1, 1, 1]).unwrap()
    }

    #[test]
    fn inner_product_basics() {
        let f = f16();
        let t = f.theta();
        let a = vec![t, f.one()];
        let b = vec![f.one(), t];
        assert_eq!(galois_inner(&f, &a, &b, 0).unwrap(), f.add(t, t));
        let e1 = vec![f.one(), f.zero()];
        let e2 = vec![f.zero(), f.one()];
        for k in 0..4 {
            assert!(galois_inner(&f, &e1, &e2, k).unwrap().is_zero());
        }
        assert!(matches!(galois_inner(&f, &a, &b[..1], 0), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn shift_constant_examples() {
        let f = f4();
        let t = f.theta();
        let spec = CodeSpec::full(&f, vec![3, 5], vec![f.one(), t]).unwrap();
        assert_eq!(dual_shift_constants(&spec, 1), vec![f.one(), t]);
        assert!(GaloisContext::new(&spec, 1).unwrap().assumption_ok);
        assert_eq!(GaloisContext::new(&spec, 2).unwrap_err(), Error::InvalidKappa { kappa: 2, e: 2 });

        let f7 = FieldSpec::prime(7).unwrap();
        let qt = CodeSpec::full(&f7, vec![2, 2], vec![f7.from_int(2), f7.from_int(5)]).unwrap();
        assert_eq!(dual_shift_constants(&qt, 0)[0], f7.from_int(4));
        assert!(!GaloisContext::new(&qt, 0).unwrap().assumption_ok);
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let f = f4();
        let t = f.theta();
        let spec = CodeSpec::full(&f, vec![3, 2], vec![f.one(), t]).unwrap();
        let dual = dual_gpm(&spec, 1).unwrap();
        assert_eq!(dual.galois.dimension(), 0);
        assert_eq!(dual.euclidean.gpm().determinant().unwrap().degree(), Some(5));
    }

    #[test]
    fn containment_examples() {
        let f = f4();
        let t = f.theta();
        let full = CodeSpec::full(&f, vec![3, 5], vec![f.one(), t]).unwrap();
        let zero = CodeSpec::zero(&f, vec![3, 5], vec![f.one(), t]).unwrap();
        assert!(contains(&full, &full).unwrap());
        assert_eq!(containment_witness(&full, &full).unwrap(), Some(PolyMatrix::identity(&f, 2)));
        assert!(!contains(&zero, &full).unwrap());
        assert!(contains(&full, &zero).unwrap());
        let other = CodeSpec::full(&f, vec![4, 4], vec![f.one(), t]).unwrap();
        assert!(matches!(contains(&full, &other), Err(Error::IncompatibleCodes(_))));
    }

    fn arb_vec(len: usize) -> impl Strategy<Value = Vec<FieldElement>> {
        let f = f16();
        proptest::collection::vec(0u32..16, len)
            .prop_map(move |v| v.iter().map(|&i| f.from_index(i).unwrap()).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn inner_product_swap(a in arb_vec(5), b in arb_vec(5), k in 0u32..4) {
            let f = f16();
            let lhs = galois_inner(&f, &a, &b, k).unwrap();
            let rhs = f.frobenius(galois_inner(&f, &b, &a, (4 - k) % 4).unwrap(), k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn dual_dimension_and_orthogonality(
            gen in proptest::collection::vec(proptest::collection::vec(0u32..4, 0..5), 2),
            kappa in 0u32..2,
        ) {
            let f = f4();
            let t = f.theta();
            let pv: Vec<Poly> = gen.iter().map(|c| Poly::new(&f, c.iter().map(|&i| f.from_index(i).unwrap()).collect())).collect();
            let lambdas = vec![f.one(), t];
            let spec = CodeSpec::smallest_containing(&f, vec![3, 4], lambdas, &[pv]).unwrap();
            let dual = dual_gpm(&spec, kappa).unwrap();
            prop_assert_eq!(spec.dimension() + dual.galois.dimension(), spec.length());
            let s: DenseMatrix = spec.expand_basis();
            let h: DenseMatrix = dual.galois.expand_basis();
            prop_assert!(s.matmul(&h.map_sigma(kappa).transpose()).unwrap().is_zero());
            let eu = dual.euclidean.expand_basis();
            prop_assert!(s.matmul(&eu.transpose()).unwrap().is_zero());
        }
    }
}

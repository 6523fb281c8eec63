//! Multi-twisted codes given by a generator polynomial matrix (GPM).
//!
//! A code of index `ℓ` lives in `⊕_j F_q[x]/(x^{m_j} - λ_j)`; vectors of `F_q^n` are stored
//! flat, block after block.

use crate::error::{Error, Result};
use crate::gf::{lcm_u64, FieldElement, FieldSpec};
use crate::oracle::DenseMatrix;
use crate::poly::Poly;
use crate::polymat::PolyMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeSpec {
    field: FieldSpec,
    block_lengths: Vec<usize>,
    lambdas: Vec<FieldElement>,
    gpm: PolyMatrix,
    identical: PolyMatrix,
}

impl CodeSpec {
    /// Validates the shape, the shift constants, and that the rows of `gpm` generate a
    /// module containing every `x^{m_j} - λ_j` (computing the identical-equation matrix).
    pub fn new(
        field: &FieldSpec,
        block_lengths: Vec<usize>,
        lambdas: Vec<FieldElement>,
        gpm: PolyMatrix,
    ) -> Result<CodeSpec> {
        let ell = block_lengths.len();
        if ell == 0 {
            return Err(Error::ShapeMismatch("a code needs at least one block".into()));
        }
        if lambdas.len() != ell {
            return Err(Error::ShapeMismatch(format!("{} shift constants for {ell} blocks", lambdas.len())));
        }
        if let Some(i) = block_lengths.iter().position(|&m| m == 0) {
            return Err(Error::ShapeMismatch(format!("block {} has length 0", i + 1)));
        }
        if let Some(index) = lambdas.iter().position(|l| l.is_zero()) {
            return Err(Error::ZeroShiftConstant { index: index + 1 });
        }
        if gpm.rows() != ell || gpm.cols() != ell {
            return Err(Error::ShapeMismatch(format!(
                "GPM is {}x{}, expected {ell}x{ell}",
                gpm.rows(),
                gpm.cols()
            )));
        }
        let identical = identical_of(field, &block_lengths, &lambdas, &gpm)?;
        Ok(CodeSpec { field: field.clone(), block_lengths, lambdas, gpm, identical })
    }

    /// The whole ambient space (`G = I`).
    pub fn full(field: &FieldSpec, block_lengths: Vec<usize>, lambdas: Vec<FieldElement>) -> Result<CodeSpec> {
        let ell = block_lengths.len();
        CodeSpec::new(field, block_lengths, lambdas, PolyMatrix::identity(field, ell))
    }

    /// The zero code (`G = diag[x^{m_j} - λ_j]`).
    pub fn zero(field: &FieldSpec, block_lengths: Vec<usize>, lambdas: Vec<FieldElement>) -> Result<CodeSpec> {
        let d = moduli_of(field, &block_lengths, &lambdas);
        CodeSpec::new(field, block_lengths, lambdas, PolyMatrix::diag(field, &d))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ell(&self) -> usize {
        self.block_lengths.len()
    }

    pub fn block_lengths(&self) -> &[usize] {
        &self.block_lengths
    }

    pub fn lambdas(&self) -> &[FieldElement] {
        &self.lambdas
    }

    pub fn gpm(&self) -> &PolyMatrix {
        &self.gpm
    }

    /// Code length `n = Σ m_j`.
    pub fn length(&self) -> usize {
        self.block_lengths.iter().sum()
    }

    /// `x^{m_j} - λ_j` for every block.
    pub fn moduli(&self) -> Vec<Poly> {
        moduli_of(&self.field, &self.block_lengths, &self.lambdas)
    }

    /// The matrix `A` with `A G = diag[x^{m_j} - λ_j]`.
    pub fn identical_matrix(&self) -> &PolyMatrix {
        &self.identical
    }

    /// `dim C = deg det A = Σ m_j - deg det G`.
    pub fn dimension(&self) -> usize {
        let det_g = self.gpm.determinant().expect("square").degree().expect("nonsingular");
        let det_a = self.identical.determinant().expect("square").degree().expect("nonsingular");
        let dim = self.length() - det_g;
        assert_eq!(dim, det_a, "deg det A disagrees with n - deg det G");
        dim
    }

    /// Order `N` of the shift `T_Λ`: `lcm(t_j m_j)` with `t_j` the multiplicative order of `λ_j`.
    pub fn order_n(&self) -> usize {
        self.block_lengths.iter().zip(&self.lambdas).fold(1u64, |acc, (&m, &l)| {
            let t = self.field.mult_order(l).expect("nonzero shift constant");
            lcm_u64(acc, t * m as u64)
        }) as usize
    }

    fn check_len(&self, v: &[FieldElement]) -> Result<()> {
        if v.len() != self.length() {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} for a code of length {}",
                v.len(),
                self.length()
            )));
        }
        Ok(())
    }

    /// Block `j` of a flat vector.
    pub fn block<'a>(&self, v: &'a [FieldElement], j: usize) -> &'a [FieldElement] {
        let start: usize = self.block_lengths[..j].iter().sum();
        &v[start..start + self.block_lengths[j]]
    }

    /// Polynomial representation: block `j` becomes `Σ_i a_{i,j} x^i`.
    pub fn phi(&self, v: &[FieldElement]) -> Result<Vec<Poly>> {
        self.check_len(v)?;
        Ok((0..self.ell()).map(|j| Poly::new(&self.field, self.block(v, j).to_vec())).collect())
    }

    /// Inverse of [`phi`](Self::phi); entries are first reduced modulo `x^{m_j} - λ_j`.
    pub fn phi_inverse(&self, pv: &[Poly]) -> Result<Vec<FieldElement>> {
        if pv.len() != self.ell() {
            return Err(Error::ShapeMismatch(format!(
                "polynomial vector of length {} for index {}",
                pv.len(),
                self.ell()
            )));
        }
        let mut out = Vec::with_capacity(self.length());
        for (j, p) in pv.iter().enumerate() {
            let m = self.block_lengths[j];
            let r = p.reduce_binomial(m, self.lambdas[j]);
            out.extend((0..m).map(|i| r.coeff(i)));
        }
        Ok(out)
    }

    /// `T_Λ`: each block shifted constacyclically, `(a_0..a_{m-1}) -> (λ a_{m-1}, a_0, ..)`.
    pub fn shift(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        self.check_len(v)?;
        let mut out = Vec::with_capacity(v.len());
        for j in 0..self.ell() {
            let b = self.block(v, j);
            let m = b.len();
            out.push(self.field.mul(self.lambdas[j], b[m - 1]));
            out.extend_from_slice(&b[..m - 1]);
        }
        Ok(out)
    }

    /// Same code with its GPM replaced by the Hermite normal form.
    pub fn reduced(&self) -> Result<CodeSpec> {
        let h = self.gpm.hnf()?.top();
        CodeSpec::new(&self.field, self.block_lengths.clone(), self.lambdas.clone(), h)
    }

    pub fn is_reduced(&self) -> bool {
        self.gpm.hnf().is_ok_and(|h| h.top() == self.gpm)
    }

    /// The `Nℓ x n` matrix whose row `ιℓ + i` is `T_Λ^ι` applied to row `i` of the GPM.
    pub fn expand_generator(&self) -> DenseMatrix {
        let ell = self.ell();
        let n_order = self.order_n();
        let mut rows = Vec::with_capacity(n_order * ell);
        let mut current: Vec<Vec<FieldElement>> =
            (0..ell).map(|i| self.phi_inverse(self.gpm.row(i)).expect("ℓ entries")).collect();
        for _ in 0..n_order {
            for row in current.iter_mut() {
                let next = self.shift(row).expect("length n");
                rows.push(std::mem::replace(row, next));
            }
        }
        DenseMatrix::from_rows(&self.field, self.length(), &rows).expect("rows of length n")
    }

    /// A basis of the code (`dim C` rows).
    pub fn expand_basis(&self) -> DenseMatrix {
        let b = self.expand_generator().row_basis();
        assert_eq!(b.rows(), self.dimension(), "expanded rank disagrees with the dimension formula");
        b
    }

    /// The smallest code with these block parameters containing the given polynomial vectors.
    pub fn smallest_containing(
        field: &FieldSpec,
        block_lengths: Vec<usize>,
        lambdas: Vec<FieldElement>,
        vectors: &[Vec<Poly>],
    ) -> Result<CodeSpec> {
        let ell = block_lengths.len();
        if lambdas.len() != ell {
            return Err(Error::ShapeMismatch(format!("{} shift constants for {ell} blocks", lambdas.len())));
        }
        if let Some(index) = lambdas.iter().position(|l| l.is_zero()) {
            return Err(Error::ZeroShiftConstant { index: index + 1 });
        }
        let rows = PolyMatrix::from_rows(field, vectors.to_vec())?;
        let diag = PolyMatrix::diag(field, &moduli_of(field, &block_lengths, &lambdas));
        let stacked = if vectors.is_empty() { diag } else { rows.vstack(&diag)? };
        let g = stacked.hnf()?.top();
        CodeSpec::new(field, block_lengths, lambdas, g)
    }

    /// Same block parameters, different GPM.
    pub fn with_gpm(&self, gpm: PolyMatrix) -> Result<CodeSpec> {
        CodeSpec::new(&self.field, self.block_lengths.clone(), self.lambdas.clone(), gpm)
    }
}

fn moduli_of(field: &FieldSpec, block_lengths: &[usize], lambdas: &[FieldElement]) -> Vec<Poly> {
    block_lengths.iter().zip(lambdas).map(|(&m, &l)| Poly::binomial(field, m, l)).collect()
}

/// `diag[x^{m_j} - λ_j] adj(G) / det(G)`, failing when a division is inexact.
fn identical_of(
    field: &FieldSpec,
    block_lengths: &[usize],
    lambdas: &[FieldElement],
    gpm: &PolyMatrix,
) -> Result<PolyMatrix> {
    let det = gpm.determinant()?;
    if det.is_zero() {
        return Err(Error::NotAGpm("determinant is zero".into()));
    }
    let d = PolyMatrix::diag(field, &moduli_of(field, block_lengths, lambdas));
    let num = d.matmul(&gpm.adjugate()?)?;
    let ell = block_lengths.len();
    let mut a = PolyMatrix::zero(field, ell, ell);
    for i in 0..ell {
        for j in 0..ell {
            let q = num.get(i, j).div_exact(&det)?.ok_or_else(|| {
                Error::NotAGpm(format!("row {} of the identical equation is not polynomial", i + 1))
            })?;
            a.set(i, j, q);
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f4() -> FieldSpec {
        FieldSpec::new(2, 2, &[1, 1, 1]).unwrap()
    }

    fn mds() -> CodeSpec {
        let f = f4();
        let t = f.theta();
        let t2 = f.mul(t, t);
        let g = PolyMatrix::from_rows(
            &f,
            vec![
                vec![Poly::one(&f), Poly::constant(&f, t2)],
                vec![Poly::zero(&f), Poly::new(&f, vec![t2, f.one()])],
            ],
        )
        .unwrap();
        CodeSpec::new(&f, vec![3, 5], vec![f.one(), t], g).unwrap()
    }

    #[test]
    fn phi_examples() {
        let f2 = FieldSpec::prime(2).unwrap();
        let spec = CodeSpec::full(&f2, vec![3, 2], vec![f2.one(), f2.one()]).unwrap();
        let v: Vec<FieldElement> = [1, 0, 1, 0, 1].iter().map(|&i| f2.from_int(i)).collect();
        let pv = spec.phi(&v).unwrap();
        assert_eq!(pv[0], Poly::new(&f2, vec![f2.one(), f2.zero(), f2.one()]));
        assert_eq!(pv[1], Poly::x(&f2));
        assert_eq!(spec.phi_inverse(&pv).unwrap(), v);
        assert!(spec.phi(&vec![f2.zero(); 5]).unwrap().iter().all(Poly::is_zero));
        assert!(matches!(spec.phi(&v[..4]), Err(Error::ShapeMismatch(_))));

        let x3 = Poly::monomial(&f2, f2.one(), 3);
        let back = spec.phi_inverse(&[x3, Poly::zero(&f2)]).unwrap();
        assert_eq!(back, [1, 0, 0, 0, 0].map(|i| f2.from_int(i)).to_vec());
    }

    #[test]
    fn phi_inverse_mds_row() {
        let spec = mds();
        let f = spec.field().clone();
        let t2 = f.pow(f.theta(), 2).unwrap();
        let v = spec.phi_inverse(spec.gpm().row(0)).unwrap();
        let mut expect = vec![FieldElement::ZERO; 8];
        expect[0] = f.one();
        expect[3] = t2;
        assert_eq!(v, expect);
    }

    #[test]
    fn shift_examples() {
        let f = f4();
        let t = f.theta();
        let spec = CodeSpec::full(&f, vec![3], vec![t]).unwrap();
        let v = vec![f.one(), f.zero(), f.zero()];
        let s1 = spec.shift(&v).unwrap();
        assert_eq!(s1, vec![f.zero(), f.one(), f.zero()]);
        let s3 = spec.shift(&spec.shift(&s1).unwrap()).unwrap();
        assert_eq!(s3, vec![t, f.zero(), f.zero()]);
        let z = vec![f.zero(); 3];
        assert_eq!(spec.shift(&z).unwrap(), z);
    }

    #[test]
    fn order_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        let qt = CodeSpec::full(&f7, vec![2, 2], vec![f7.from_int(2), f7.from_int(5)]).unwrap();
        assert_eq!(qt.order_n(), 12);
        assert_eq!(mds().order_n(), 15);
        let f2 = FieldSpec::prime(2).unwrap();
        let qc = CodeSpec::full(&f2, vec![6; 6], vec![f2.one(); 6]).unwrap();
        assert_eq!(qc.order_n(), 6);
    }

    #[test]
    fn identical_and_dimension() {
        let spec = mds();
        let f = spec.field().clone();
        let t = f.theta();
        let t2 = f.mul(t, t);
        let a = spec.identical_matrix();
        assert_eq!(a.get(1, 1), &Poly::new(&f, vec![t2, f.one(), t, t2, f.one()]));
        assert_eq!(spec.dimension(), 7);
        assert_eq!(spec.expand_basis().rows(), 7);
        let prod = a.matmul(spec.gpm()).unwrap();
        assert_eq!(prod, PolyMatrix::diag(&f, &spec.moduli()));

        let zero = CodeSpec::zero(&f, vec![3, 5], vec![f.one(), t]).unwrap();
        assert_eq!(zero.identical_matrix(), &PolyMatrix::identity(&f, 2));
        assert_eq!(zero.dimension(), 0);
        assert!(zero.expand_generator().is_zero());
    }

    #[test]
    fn rejects_non_gpm() {
        let f = f4();
        let g = PolyMatrix::diag(&f, &[Poly::x(&f)]);
        assert!(matches!(CodeSpec::new(&f, vec![3], vec![f.one()], g), Err(Error::NotAGpm(_))));
        let z = PolyMatrix::zero(&f, 1, 1);
        assert!(matches!(CodeSpec::new(&f, vec![3], vec![f.one()], z), Err(Error::NotAGpm(_))));
        let i = PolyMatrix::identity(&f, 1);
        assert_eq!(
            CodeSpec::new(&f, vec![3], vec![f.zero()], i),
            Err(Error::ZeroShiftConstant { index: 1 })
        );
    }

    #[test]
    fn smallest_containing_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        let lambdas = vec![f7.from_int(2), f7.from_int(5)];
        let gen = vec![Poly::new(&f7, vec![f7.one(), f7.one()]), Poly::zero(&f7)];
        let spec = CodeSpec::smallest_containing(&f7, vec![2, 2], lambdas.clone(), &[gen]).unwrap();
        let expect = PolyMatrix::diag(&f7, &[Poly::one(&f7), Poly::binomial(&f7, 2, f7.from_int(5))]);
        assert_eq!(spec.gpm(), &expect);

        let zero = vec![Poly::zero(&f7), Poly::zero(&f7)];
        let spec = CodeSpec::smallest_containing(&f7, vec![2, 2], lambdas.clone(), &[zero]).unwrap();
        assert_eq!(spec.gpm(), &PolyMatrix::diag(&f7, &spec.moduli()));
    }

    #[test]
    fn reduced_is_idempotent() {
        let spec = mds();
        assert!(spec.is_reduced());
        assert_eq!(spec.reduced().unwrap(), spec);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn shift_is_multiplication_by_x(v in proptest::collection::vec(0u32..4, 8)) {
            let spec = mds();
            let f = spec.field().clone();
            let v: Vec<FieldElement> = v.iter().map(|&i| f.from_index(i).unwrap()).collect();
            let xs: Vec<Poly> = spec.phi(&v).unwrap().iter().map(|p| p.shift(1)).collect();
            prop_assert_eq!(spec.phi_inverse(&xs).unwrap(), spec.shift(&v).unwrap());
            let mut w = v.clone();
            for _ in 0..spec.order_n() {
                w = spec.shift(&w).unwrap();
            }
            prop_assert_eq!(w, v);
        }

        #[test]
        fn module_span_matches_expansion(us in proptest::collection::vec(proptest::collection::vec(0u32..4, 0..6), 2)) {
            let spec = mds();
            let f = spec.field().clone();
            let u: Vec<Poly> = us.iter().map(|c| Poly::new(&f, c.iter().map(|&i| f.from_index(i).unwrap()).collect())).collect();
            let row = PolyMatrix::from_rows(&f, vec![u]).unwrap().matmul(spec.gpm()).unwrap();
            let v = spec.phi_inverse(row.row(0)).unwrap();
            prop_assert!(spec.expand_generator().contains_vector(&v));
        }
    }
}

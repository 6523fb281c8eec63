//! Hulls of multi-twisted codes through the associated quasi-cyclic code `Q_G`.

use crate::error::{Error, Result};
use crate::galois::{check_kappa, dual_gpm, GaloisContext};
use crate::gf::FieldSpec;
use crate::mtcode::CodeSpec;
use crate::oracle::hongwei_rank;
use crate::poly::Poly;
use crate::polymat::PolyMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    SelfOrthogonal,
    Lcd,
    Intermediate,
}

impl Classification {
    pub fn from_dims(dim_code: usize, dim_hull: usize) -> Classification {
        if dim_hull == dim_code {
            Classification::SelfOrthogonal
        } else if dim_hull == 0 {
            Classification::Lcd
        } else {
            Classification::Intermediate
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Classification::SelfOrthogonal => "SELF-ORTHOGONAL",
            Classification::Lcd => "LCD",
            Classification::Intermediate => "INTERMEDIATE",
        }
    }
}

/// How to proceed when the shift constants violate `λ_j^{p^{e-κ}+1} = 1`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum AssumptionPolicy {
    #[default]
    Strict,
    /// Compute the polynomial intermediates anyway, take dimensions from the dense rank
    /// formula, and omit the hull GPM.
    Override,
}

#[derive(Clone, Debug)]
pub struct HullReport {
    pub kappa: u32,
    /// Order of the shift, `N`.
    pub n: usize,
    pub assumption_ok: bool,
    /// Reduced GPM of the code.
    pub code_gpm: PolyMatrix,
    pub b_matrix: PolyMatrix,
    pub qg_gpm: PolyMatrix,
    pub qg_identical: PolyMatrix,
    pub qg_dual_gpm: Option<PolyMatrix>,
    pub hull_gpm: Option<PolyMatrix>,
    /// `deg gcd_i {(x^N - 1)^{ℓ-i} d_i(B_G)}`.
    pub gcd_degree: usize,
    pub dim_code: usize,
    pub dim_qg: usize,
    pub dim_hull: usize,
    pub classification: Classification,
}

/// `x^d g(1/x)` entrywise, with `d = m_j` in column `j`.
pub fn star(gpm: &PolyMatrix, block_lengths: &[usize]) -> Result<PolyMatrix> {
    let mut out = gpm.clone();
    for i in 0..gpm.rows() {
        for (j, &m) in block_lengths.iter().enumerate() {
            out.set(i, j, gpm.get(i, j).reverse_scaled(m)?);
        }
    }
    Ok(out)
}

/// `L diag[(x^N - 1)/(x^{m_j} - λ_j)] σ^κ(star(R))^t`, before reduction modulo `x^N - 1`.
pub fn pairing_product(spec: &CodeSpec, left: &PolyMatrix, right: &PolyMatrix, kappa: u32) -> Result<PolyMatrix> {
    check_kappa(spec.field(), kappa)?;
    let f = spec.field();
    let xn1 = Poly::binomial(f, spec.order_n(), f.one());
    let cofactors: Vec<Poly> = spec
        .moduli()
        .iter()
        .map(|m| xn1.div_exact(m).map(|q| q.expect("x^m - λ divides x^N - 1")))
        .collect::<Result<_>>()?;
    let rs = star(right, spec.block_lengths())?.map_sigma(kappa).transpose();
    left.matmul(&PolyMatrix::diag(f, &cofactors))?.matmul(&rs)
}

/// [`pairing_product`] reduced modulo `x^N - 1`. Row `u`, column `v` packs the κ-Galois
/// inner products of row `u` of `L` with all shifts of row `v` of `R`.
pub fn pairing(spec: &CodeSpec, left: &PolyMatrix, right: &PolyMatrix, kappa: u32) -> Result<PolyMatrix> {
    let n_order = spec.order_n();
    let one = spec.field().one();
    Ok(pairing_product(spec, left, right, kappa)?.map(|p| p.reduce_binomial(n_order, one)))
}

/// `𝔅_G` of the code's GPM (as given; reduce first if entries exceed the block lengths).
pub fn b_matrix(spec: &CodeSpec, kappa: u32) -> Result<PolyMatrix> {
    GaloisContext::new(spec, kappa)?.require_assumption()?;
    pairing(spec, spec.gpm(), spec.gpm(), kappa)
}

/// The quasi-cyclic code of index `ℓ` and co-index `N` with GPM `gpm`.
pub fn qc_code(field: &FieldSpec, ell: usize, n_order: usize, gpm: PolyMatrix) -> Result<CodeSpec> {
    CodeSpec::new(field, vec![n_order; ell], vec![field.one(); ell], gpm)
}

/// Reduced GPM `𝔊_G` of `Q_G` (Hermite form of `[𝔅_G; (x^N - 1) I]`) and its identical matrix `𝔄_G`.
pub fn qc_associate(field: &FieldSpec, b: &PolyMatrix, n_order: usize) -> Result<(PolyMatrix, PolyMatrix)> {
    let ell = b.rows();
    let xn1 = Poly::binomial(field, n_order, field.one());
    let stacked = b.vstack(&PolyMatrix::identity(field, ell).scale(&xn1))?;
    let g = stacked.hnf()?.top();
    let qc = qc_code(field, ell, n_order, g.clone())?;
    Ok((g, qc.identical_matrix().clone()))
}

/// `deg gcd_{0≤i≤ℓ} {(x^N - 1)^{ℓ-i} d_i(B)}` with `d_0 = 1`; vanishing divisors drop out.
pub fn divisor_gcd_degree(b: &PolyMatrix, n_order: usize) -> usize {
    let f = b.field();
    let ell = b.rows();
    let xn1 = Poly::binomial(f, n_order, f.one());
    let mut divisors = vec![Poly::one(f)];
    divisors.extend(b.determinantal_divisors());
    let g = divisors
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .fold(Poly::zero(f), |acc, (i, d)| acc.gcd_or_zero(&(&xn1.pow((ell - i) as u32) * d)));
    g.degree().expect("d_0 term is nonzero")
}

/// Hull dimension from the determinantal divisors of `𝔅_G`.
pub fn hull_dimension_from_divisors(dim_code: usize, b: &PolyMatrix, n_order: usize) -> usize {
    let total = dim_code + divisor_gcd_degree(b, n_order);
    total
        .checked_sub(n_order * b.rows())
        .expect("hull dimension formula went negative")
}

/// `dim Q_G = Nℓ - deg det 𝔊_G`.
pub fn qc_dimension(qg_gpm: &PolyMatrix, n_order: usize) -> usize {
    let det = qg_gpm.determinant().expect("square").degree().expect("nonsingular");
    n_order * qg_gpm.rows() - det
}

pub fn hull_dimension(spec: &CodeSpec, kappa: u32) -> Result<usize> {
    Ok(classify(spec, kappa, AssumptionPolicy::Strict)?.dim_hull)
}

/// Reduced GPM of the hull.
pub fn hull_gpm(spec: &CodeSpec, kappa: u32) -> Result<PolyMatrix> {
    let report = classify(spec, kappa, AssumptionPolicy::Strict)?;
    Ok(report.hull_gpm.expect("strict reports carry the hull"))
}

/// Full hull computation for the code generated by `spec`'s GPM.
pub fn classify(spec: &CodeSpec, kappa: u32, policy: AssumptionPolicy) -> Result<HullReport> {
    let ctx = GaloisContext::new(spec, kappa)?;
    if !ctx.assumption_ok && policy == AssumptionPolicy::Strict {
        return Err(Error::AssumptionViolated { kappa });
    }
    let f = spec.field().clone();
    let spec = spec.reduced()?;
    let ell = spec.ell();
    let n_order = spec.order_n();
    let dim_code = spec.dimension();

    let b = pairing(&spec, spec.gpm(), spec.gpm(), kappa)?;
    let (qg_gpm, qg_identical) = qc_associate(&f, &b, n_order)?;
    let gcd_degree = divisor_gcd_degree(&b, n_order);

    let (dim_qg, dim_hull, qg_dual_gpm, hull) = if ctx.assumption_ok {
        let dim_hull = hull_dimension_from_divisors(dim_code, &b, n_order);
        let dim_qg = qc_dimension(&qg_gpm, n_order);
        assert_eq!(dim_hull, dim_code - dim_qg, "hull dimension routes disagree");
        let qc = qc_code(&f, ell, n_order, qg_gpm.clone())?;
        let h = dual_gpm(&qc, kappa)?.galois.gpm().clone();
        let hull = h.matmul(spec.gpm())?.hnf()?.top();
        let hull_code = spec.with_gpm(hull.clone())?;
        assert_eq!(hull_code.dimension(), dim_hull, "hull GPM has the wrong dimension");
        (dim_qg, dim_hull, Some(h), Some(hull))
    } else {
        let rank = hongwei_rank(&spec.expand_basis(), kappa);
        (rank, dim_code - rank, None, None)
    };

    Ok(HullReport {
        kappa,
        n: n_order,
        assumption_ok: ctx.assumption_ok,
        code_gpm: spec.gpm().clone(),
        b_matrix: b,
        qg_gpm,
        qg_identical,
        qg_dual_gpm,
        hull_gpm: hull,
        gcd_degree,
        dim_code,
        dim_qg,
        dim_hull,
        classification: Classification::from_dims(dim_code, dim_hull),
    })
}

//! Dense linear algebra over `F_q`, used as an independent check on the polynomial pipeline.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf::{ElementStyle, FieldElement, FieldSpec};

/// Default cap on the number of enumerated messages in [`min_distance`].
pub const DEFAULT_BUDGET: u128 = 1 << 26;

#[derive(Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl DenseMatrix {
    pub fn zero(field: &FieldSpec, rows: usize, cols: usize) -> DenseMatrix {
        DenseMatrix { field: field.clone(), rows, cols, data: vec![FieldElement::ZERO; rows * cols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> DenseMatrix {
        let mut m = DenseMatrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, FieldElement::ONE);
        }
        m
    }

    /// Build from rows; every row must have length `cols`.
    pub fn from_rows(field: &FieldSpec, cols: usize, rows: &[Vec<FieldElement>]) -> Result<DenseMatrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::ShapeMismatch(format!("row {} has length {}, expected {cols}", i + 1, r.len())));
            }
            data.extend_from_slice(r);
        }
        Ok(DenseMatrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|c| c.is_zero())
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut t = DenseMatrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn map_sigma(&self, k: u32) -> DenseMatrix {
        let f = &self.field;
        DenseMatrix { data: self.data.iter().map(|&c| f.frobenius(c, k)).collect(), ..self.clone() }
    }

    pub fn matmul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = DenseMatrix::zero(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.add(out.get(i, j), f.mul(a, rhs.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, below: &DenseMatrix) -> Result<DenseMatrix> {
        if self.cols != below.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} columns on {} columns",
                self.cols, below.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(DenseMatrix { field: self.field.clone(), rows: self.rows + below.rows, cols: self.cols, data })
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (DenseMatrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                m.set(r, j, f.mul(m.get(r, j), inv));
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn row_basis(&self) -> DenseMatrix {
        let (m, pivots) = self.rref();
        DenseMatrix {
            field: m.field.clone(),
            rows: pivots.len(),
            cols: m.cols,
            data: m.data[..pivots.len() * m.cols].to_vec(),
        }
    }

    /// Basis of `{v : M v^t = 0}`, one vector per row.
    pub fn null_space(&self) -> DenseMatrix {
        let f = &self.field;
        let (m, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = DenseMatrix::zero(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, FieldElement::ONE);
            for (i, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(m.get(i, fc)));
            }
        }
        out
    }

    /// Whether both matrices have the same row space.
    pub fn same_row_space(&self, other: &DenseMatrix) -> bool {
        self.cols == other.cols && self.row_basis() == other.row_basis()
    }

    /// Whether `v` lies in the row space.
    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        let Ok(single) = DenseMatrix::from_rows(&self.field, self.cols, &[v.to_vec()]) else {
            return false;
        };
        let stacked = self.vstack(&single).expect("same width");
        stacked.rank() == self.rank()
    }

    pub fn to_string_with(&self, style: ElementStyle) -> String {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|&c| self.field.format(c, style)).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Display for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(ElementStyle::Power))
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        writeln!(f, "{self}")?;
        f.write_str("]")
    }
}

/// `rank(S σ^κ(S)^t)`, which equals `dim C - dim hull` for any generator set `S` of `C`.
pub fn hongwei_rank(s: &DenseMatrix, kappa: u32) -> usize {
    s.matmul(&s.map_sigma(kappa).transpose()).expect("compatible shapes").rank()
}

/// Basis of `C ∩ C^{⊥κ}` where `C` is the row space of `s`.
pub fn hull_by_definition(s: &DenseMatrix, kappa: u32) -> DenseMatrix {
    let e = s.field().degree();
    // c is κ-orthogonal to C iff σ^κ(c) lies in the null space of S
    let dual = s.null_space().map_sigma((e - kappa % e) % e);
    intersect(s, &dual)
}

/// Basis of the intersection of two row spaces, as the null space of their stacked parity matrices.
pub fn intersect(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let pa = a.null_space();
    let pb = b.null_space();
    pa.vstack(&pb).expect("same width").null_space()
}

/// Minimum Hamming weight of the nonzero vectors in the row space of `s`, by exhaustive
/// enumeration of all `q^k` messages (`k = rank s`).
pub fn min_distance(s: &DenseMatrix, budget: u128) -> Result<usize> {
    let f = s.field().clone();
    let basis = s.row_basis();
    let k = basis.rows();
    if k == 0 {
        return Err(Error::ZeroCode);
    }
    let q = f.order() as u128;
    let required = (0..k).try_fold(1u128, |acc, _| acc.checked_mul(q)).unwrap_or(u128::MAX);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }

    // F_p-basis of the code: every F_q-basis row times θ^j
    let p = f.characteristic();
    let e = f.degree();
    let mut theta_pow = FieldElement::ONE;
    let mut powers = Vec::new();
    for _ in 0..e {
        powers.push(theta_pow);
        theta_pow = f.mul(theta_pow, f.theta());
    }
    let gens: Vec<Vec<FieldElement>> = (0..k)
        .flat_map(|r| {
            let row = basis.row(r).to_vec();
            let f = f.clone();
            powers.clone().into_iter().map(move |t| row.iter().map(|&c| f.mul(c, t)).collect())
        })
        .collect();
    let support: Vec<Vec<(usize, FieldElement)>> = gens
        .iter()
        .map(|g| g.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, &c)| (i, c)).collect())
        .collect();
    let digits = gens.len();
    let total = required as u64;
    let n = basis.cols();

    let chunks = (rayon::current_num_threads() as u64 * 8).clamp(1, total);
    let chunk_len = total.div_ceil(chunks);
    let best = (0..chunks)
        .into_par_iter()
        .filter_map(|ci| {
            let start = ci * chunk_len;
            let end = ((ci + 1) * chunk_len).min(total);
            if start >= end {
                return None;
            }
            // Gray digits of `start`: g_i = s_i - s_{i+1} mod p
            let sd = base_p_digits(start, p as u64, digits);
            let mut word = vec![FieldElement::ZERO; n];
            for i in 0..digits {
                let next = if i + 1 < digits { sd[i + 1] } else { 0 };
                let g = (sd[i] + p as u64 - next) % p as u64;
                if g != 0 {
                    let c = f.from_int(g as i64);
                    for (w, &x) in word.iter_mut().zip(&gens[i]) {
                        *w = f.add(*w, f.mul(c, x));
                    }
                }
            }
            let mut weight = word.iter().filter(|c| !c.is_zero()).count();
            let mut best = usize::MAX;
            let mut s = start;
            loop {
                if s != 0 {
                    best = best.min(weight);
                }
                s += 1;
                if s >= end {
                    break;
                }
                let j = trailing_max_digits(s - 1, p as u64);
                for &(pos, x) in &support[j] {
                    let w = &mut word[pos];
                    let was = !w.is_zero();
                    *w = f.add(*w, x);
                    weight = weight + !w.is_zero() as usize - was as usize;
                }
            }
            Some(best)
        })
        .min()
        .unwrap_or(usize::MAX);
    Ok(best)
}

fn base_p_digits(mut s: u64, p: u64, len: usize) -> Vec<u64> {
    let mut d = vec![0; len];
    for x in d.iter_mut() {
        *x = s % p;
        s /= p;
    }
    d
}

/// Number of trailing base-`p` digits of `s` equal to `p - 1`.
fn trailing_max_digits(mut s: u64, p: u64) -> usize {
    let mut j = 0;
    while s % p == p - 1 {
        s /= p;
        j += 1;
    }
    j
}

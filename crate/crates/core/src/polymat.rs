//! Rectangular matrices over `F_q[x]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{ElementStyle, FieldElement, FieldSpec};
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

/// Hermite normal form together with the unimodular `transform` satisfying
/// `transform * input = hnf`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfResult {
    pub hnf: PolyMatrix,
    pub transform: PolyMatrix,
}

impl HnfResult {
    /// The square upper-triangular block (the nonzero rows of the form).
    pub fn top(&self) -> PolyMatrix {
        self.hnf.top_rows(self.hnf.cols())
    }
}

impl PolyMatrix {
    pub fn new(field: &FieldSpec, rows: usize, cols: usize, entries: Vec<Poly>) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(PolyMatrix { field: field.clone(), rows, cols, entries })
    }

    pub fn from_rows(field: &FieldSpec, rows: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::ShapeMismatch(format!(
                "row {} has {} entries, expected {c}",
                bad + 1,
                rows[bad].len()
            )));
        }
        PolyMatrix::new(field, r, c, rows.into_iter().flatten().collect())
    }

    pub fn zero(field: &FieldSpec, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix { field: field.clone(), rows, cols, entries: vec![Poly::zero(field); rows * cols] }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> PolyMatrix {
        PolyMatrix::diag(field, &vec![Poly::one(field); n])
    }

    pub fn diag(field: &FieldSpec, d: &[Poly]) -> PolyMatrix {
        let n = d.len();
        let mut m = PolyMatrix::zero(field, n, n);
        for (i, p) in d.iter().enumerate() {
            m.set(i, i, p.clone());
        }
        m
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Poly::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn map_sigma(&self, k: u32) -> PolyMatrix {
        self.map(|p| p.sigma(k))
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = PolyMatrix::zero(&self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matmul(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = PolyMatrix::zero(&self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = Poly::zero(&self.field);
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if !a.is_zero() {
                        acc = &acc + &(a * rhs.get(k, j));
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::ShapeMismatch("addition of differently shaped matrices".into()));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Ok(PolyMatrix { entries, ..self.clone() })
    }

    pub fn scale(&self, p: &Poly) -> PolyMatrix {
        self.map(|e| e * p)
    }

    /// Stack `self` on top of `below`.
    pub fn vstack(&self, below: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != below.cols {
            return Err(Error::ShapeMismatch(format!(
                "cannot stack {} columns on {} columns",
                self.cols, below.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&below.entries);
        PolyMatrix::new(&self.field, self.rows + below.rows, self.cols, entries)
    }

    pub fn top_rows(&self, n: usize) -> PolyMatrix {
        PolyMatrix {
            field: self.field.clone(),
            rows: n,
            cols: self.cols,
            entries: self.entries[..n * self.cols].to_vec(),
        }
    }

    fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        PolyMatrix { field: self.field.clone(), rows: rows.len(), cols: cols.len(), entries }
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn determinant(&self) -> Result<Poly> {
        self.require_square()?;
        Ok(if self.rows <= 4 { self.det_laplace() } else { self.det_bareiss() })
    }

    fn det_laplace(&self) -> Poly {
        let n = self.rows;
        match n {
            0 => Poly::one(&self.field),
            1 => self.get(0, 0).clone(),
            _ => {
                let rest: Vec<usize> = (1..n).collect();
                let mut acc = Poly::zero(&self.field);
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                    let term = a * &self.submatrix(&rest, &cols).det_laplace();
                    acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    /// Fraction-free elimination; every division is exact in `F_q[x]`.
    fn det_bareiss(&self) -> Poly {
        let n = self.rows;
        let mut m: Vec<Vec<Poly>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut prev = Poly::one(&self.field);
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        negate = !negate;
                    }
                    None => return Poly::zero(&self.field),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.divrem(&prev).expect("nonzero pivot").0;
                }
                m[i][k] = Poly::zero(&self.field);
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -&d
        } else {
            d
        }
    }

    /// Classical adjugate, `M adj(M) = det(M) I`; the 1x1 adjugate is `[1]`.
    pub fn adjugate(&self) -> Result<PolyMatrix> {
        self.require_square()?;
        let n = self.rows;
        let mut adj = PolyMatrix::zero(&self.field, n, n);
        if n == 1 {
            adj.set(0, 0, Poly::one(&self.field));
            return Ok(adj);
        }
        for i in 0..n {
            let rows: Vec<usize> = (0..n).filter(|&r| r != i).collect();
            for j in 0..n {
                let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
                let minor = self.submatrix(&rows, &cols).determinant()?;
                adj.set(j, i, if (i + j) % 2 == 0 { minor } else { -&minor });
            }
        }
        Ok(adj)
    }

    /// Row-style Hermite normal form: upper triangular with monic pivots, entries above
    /// each pivot reduced modulo it, zero rows at the bottom.
    pub fn hnf(&self) -> Result<HnfResult> {
        let f = self.field.clone();
        let (r, c) = (self.rows, self.cols);
        let mut w: Vec<Vec<Poly>> = (0..r).map(|i| self.row(i).to_vec()).collect();
        let mut u: Vec<Vec<Poly>> = (0..r).map(|i| PolyMatrix::identity(&f, r).row(i).to_vec()).collect();

        // row_i -= q * row_p, applied to both the form and the transform
        let eliminate = |w: &mut Vec<Vec<Poly>>, u: &mut Vec<Vec<Poly>>, i: usize, p: usize, q: &Poly| {
            for k in 0..c {
                let t = q * &w[p][k];
                w[i][k] = &w[i][k] - &t;
            }
            for k in 0..r {
                let t = q * &u[p][k];
                u[i][k] = &u[i][k] - &t;
            }
        };

        for col in 0..c {
            let pr = col;
            loop {
                let best = (pr..r)
                    .filter(|&i| !w[i][col].is_zero())
                    .min_by_key(|&i| (w[i][col].degree(), i))
                    .ok_or(Error::RankDeficient(col))?;
                w.swap(pr, best);
                u.swap(pr, best);
                let mut done = true;
                for i in pr + 1..r {
                    if w[i][col].is_zero() {
                        continue;
                    }
                    let q = w[i][col].divrem(&w[pr][col])?.0;
                    eliminate(&mut w, &mut u, i, pr, &q);
                    done &= w[i][col].is_zero();
                }
                if done {
                    break;
                }
            }
            let inv = f.inv(w[pr][col].leading())?;
            for k in 0..c {
                w[pr][k] = w[pr][k].scale(inv);
            }
            for k in 0..r {
                u[pr][k] = u[pr][k].scale(inv);
            }
            for i in 0..pr {
                let q = w[i][col].divrem(&w[pr][col])?.0;
                if !q.is_zero() {
                    eliminate(&mut w, &mut u, i, pr, &q);
                }
            }
        }
        Ok(HnfResult {
            hnf: PolyMatrix::from_rows(&f, w).map(|m| m.with_shape(r, c))?,
            transform: PolyMatrix::from_rows(&f, u)?,
        })
    }

    // from_rows on an empty row list loses the column count
    fn with_shape(mut self, rows: usize, cols: usize) -> PolyMatrix {
        self.rows = rows;
        self.cols = cols;
        self
    }

    /// `d_i` for `i = 1..=min(rows, cols)`: monic gcd of all `i x i` minors (zero when all vanish).
    pub fn determinantal_divisors(&self) -> Vec<Poly> {
        let k = self.rows.min(self.cols);
        (1..=k)
            .map(|i| {
                let row_sets = combinations(self.rows, i);
                let col_sets = combinations(self.cols, i);
                let mut g = Poly::zero(&self.field);
                for rs in &row_sets {
                    for cs in &col_sets {
                        let d = self.submatrix(rs, cs).determinant().expect("square minor");
                        g = g.gcd_or_zero(&d);
                        if g.is_one() {
                            return g;
                        }
                    }
                }
                g
            })
            .collect()
    }

    /// Solve `X B = C` over `F_q[x]` via `X = C adj(B) / det(B)`. `Ok(None)` when no
    /// polynomial solution exists.
    pub fn left_divide(c: &PolyMatrix, b: &PolyMatrix) -> Result<Option<PolyMatrix>> {
        b.require_square()?;
        if c.cols != b.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot divide {}x{} by {}x{}",
                c.rows, c.cols, b.rows, b.cols
            )));
        }
        let det = b.determinant()?;
        if det.is_zero() {
            return Err(Error::SingularDivisor);
        }
        let num = c.matmul(&b.adjugate()?)?;
        let mut entries = Vec::with_capacity(num.entries.len());
        for e in &num.entries {
            match e.div_exact(&det)? {
                Some(q) => entries.push(q),
                None => return Ok(None),
            }
        }
        Ok(Some(PolyMatrix { entries, ..num }))
    }

    pub fn is_unimodular(&self) -> Result<bool> {
        Ok(self.determinant()?.is_unit())
    }

    pub fn to_string_with(&self, style: ElementStyle) -> String {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.to_string_with(style)).collect::<Vec<_>>().join(" | "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Rows as vectors of strings, for structured output.
    pub fn to_string_rows(&self, style: ElementStyle) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|p| p.to_string_with(style)).collect())
            .collect()
    }

    /// Multiply every entry by a scalar.
    pub fn scale_const(&self, c: FieldElement) -> PolyMatrix {
        self.map(|p| p.scale(c))
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(ElementStyle::Basis))
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{} [", self.rows, self.cols)?;
        writeln!(f, "{}", self.to_string_with(ElementStyle::Power))?;
        f.write_str("]")
    }
}

/// All increasing `k`-subsets of `0..n`, lexicographic.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

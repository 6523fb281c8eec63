//! Dense univariate polynomials over `F_q`, plus Laurent polynomials for the
//! `x -> 1/x` substitutions that appear when building dual generator matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{ElementStyle, FieldElement, FieldSpec};

/// A polynomial in `x` over `F_q`. The coefficient vector never has trailing zeros,
/// so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &FieldSpec, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &FieldSpec) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &FieldSpec) -> Poly {
        Poly::constant(field, FieldElement::ONE)
    }

    pub fn constant(field: &FieldSpec, c: FieldElement) -> Poly {
        Poly::new(field, vec![c])
    }

    /// `c x^k`.
    pub fn monomial(field: &FieldSpec, c: FieldElement, k: usize) -> Poly {
        if c.is_zero() {
            return Poly::zero(field);
        }
        let mut coeffs = vec![FieldElement::ZERO; k + 1];
        coeffs[k] = c;
        Poly { field: field.clone(), coeffs }
    }

    pub fn x(field: &FieldSpec) -> Poly {
        Poly::monomial(field, FieldElement::ONE, 1)
    }

    /// `x^m - λ`, the block modulus of a `λ`-constacyclic block of length `m`.
    pub fn binomial(field: &FieldSpec, m: usize, lambda: FieldElement) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; m + 1];
        coeffs[m] = FieldElement::ONE;
        coeffs[0] = field.sub(coeffs[0], lambda);
        Poly::new(field, coeffs)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).copied().unwrap_or(FieldElement::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(FieldElement::ZERO)
    }

    /// Nonzero constant, i.e. a unit of `F_q[x]`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == FieldElement::ONE
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        Poly { field: f.clone(), coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![FieldElement::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { field: self.field.clone(), coeffs }
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// `(quotient, remainder)` with `self = q g + r`, `deg r < deg g`.
    pub fn divrem(&self, g: &Poly) -> Result<(Poly, Poly)> {
        let dg = g.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        if self.coeffs.len() <= dg {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lead_inv = f.inv(g.leading())?;
        let mut r = self.coeffs.clone();
        let mut q = vec![FieldElement::ZERO; r.len() - dg];
        for top in (dg..r.len()).rev() {
            let c = f.mul(r[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            let shift = top - dg;
            q[shift] = c;
            for (i, &gi) in g.coeffs.iter().enumerate() {
                r[shift + i] = f.sub(r[shift + i], f.mul(c, gi));
            }
        }
        r.truncate(dg);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, g: &Poly) -> Result<Poly> {
        Ok(self.divrem(g)?.1)
    }

    /// `self / g` when the division is exact.
    pub fn div_exact(&self, g: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divrem(g)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Monic gcd; `gcd(f, 0) = monic(f)`.
    pub fn gcd(&self, g: &Poly) -> Result<Poly> {
        if self.is_zero() && g.is_zero() {
            return Err(Error::BothZero);
        }
        let mut a = self.clone();
        let mut b = g.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Gcd treating `0` as the identity, so folding over a list starting from zero works.
    pub fn gcd_or_zero(&self, g: &Poly) -> Poly {
        self.gcd(g).unwrap_or_else(|_| Poly::zero(&self.field))
    }

    /// Extended Euclid: `(g, s, t)` with `s a + t b = g`, `g` monic (or zero when both are).
    pub fn ext_gcd(a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let f = a.field.clone();
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(&f), Poly::zero(&f));
        let (mut t0, mut t1) = (Poly::zero(&f), Poly::one(&f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = &s0 - &(&q * &s1);
            s0 = std::mem::replace(&mut s1, s);
            let t = &t0 - &(&q * &t1);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.leading()).expect("nonzero");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// Coefficientwise Frobenius `σ^k`.
    pub fn sigma(&self, k: u32) -> Poly {
        let f = &self.field;
        Poly {
            field: f.clone(),
            coeffs: self.coeffs.iter().map(|&c| f.frobenius(c, k)).collect(),
        }
    }

    /// `x^d f(1/x)`. Requires `d >= deg f`.
    pub fn reverse_scaled(&self, d: usize) -> Result<Poly> {
        match self.degree() {
            None => Ok(self.clone()),
            Some(deg) if deg > d => Err(Error::DegreeTooLarge { degree: deg, bound: d }),
            Some(_) => {
                let mut coeffs = vec![FieldElement::ZERO; d + 1];
                for (i, &c) in self.coeffs.iter().enumerate() {
                    coeffs[d - i] = c;
                }
                Ok(Poly::new(&self.field, coeffs))
            }
        }
    }

    /// Canonical representative modulo `x^m - λ` (degree below `m`).
    pub fn reduce_binomial(&self, m: usize, lambda: FieldElement) -> Poly {
        assert!(m >= 1, "block length must be positive");
        if self.coeffs.len() <= m {
            return self.clone();
        }
        let f = &self.field;
        let mut r = self.coeffs.clone();
        for top in (m..r.len()).rev() {
            let c = r[top];
            if !c.is_zero() {
                r[top - m] = f.add(r[top - m], f.mul(c, lambda));
            }
        }
        r.truncate(m);
        Poly::new(f, r)
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs.iter().rev().fold(FieldElement::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn to_string_with(&self, style: ElementStyle) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let cs = f.format(c, style);
            terms.push(if k == 0 {
                cs
            } else if c == FieldElement::ONE {
                mono
            } else if f.is_compound(c, style) {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            });
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(ElementStyle::Basis))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_string_with(ElementStyle::Power))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), rhs.coeff(i))).collect();
        Poly::new(f, coeffs)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), rhs.coeff(i))).collect();
        Poly::new(f, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly { field: f.clone(), coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(f);
        }
        let mut out = vec![FieldElement::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }
}

/// A polynomial in `x` and `x^{-1}`; only nonzero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    field: FieldSpec,
    terms: BTreeMap<i64, FieldElement>,
}

impl LaurentPoly {
    pub fn zero(field: &FieldSpec) -> LaurentPoly {
        LaurentPoly { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(field: &FieldSpec, c: FieldElement, k: i64) -> LaurentPoly {
        let mut l = LaurentPoly::zero(field);
        if !c.is_zero() {
            l.terms.insert(k, c);
        }
        l
    }

    pub fn from_poly(p: &Poly) -> LaurentPoly {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (k as i64, c))
            .collect();
        LaurentPoly { field: p.field().clone(), terms }
    }

    /// `p(1/x)`.
    pub fn reciprocal_of(p: &Poly) -> LaurentPoly {
        let terms = p
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (-(k as i64), c))
            .collect();
        LaurentPoly { field: p.field().clone(), terms }
    }

    pub fn terms(&self) -> &BTreeMap<i64, FieldElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        LaurentPoly {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let f = &self.field;
        let mut terms = self.terms.clone();
        for (&k, &c) in &other.terms {
            let v = f.add(terms.get(&k).copied().unwrap_or_default(), c);
            if v.is_zero() {
                terms.remove(&k);
            } else {
                terms.insert(k, v);
            }
        }
        LaurentPoly { field: f.clone(), terms }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let f = &self.field;
        let mut out = LaurentPoly::zero(f);
        for (&a, &ca) in &self.terms {
            for (&b, &cb) in &other.terms {
                out = out.add(&LaurentPoly::monomial(f, f.mul(ca, cb), a + b));
            }
        }
        out
    }

    /// The polynomial itself, if no negative exponent is present.
    pub fn to_poly(&self) -> Option<Poly> {
        if self.min_exponent().is_some_and(|k| k < 0) {
            return None;
        }
        let len = self.terms.keys().next_back().map_or(0, |&k| k as usize + 1);
        let mut coeffs = vec![FieldElement::ZERO; len];
        for (&k, &c) in &self.terms {
            coeffs[k as usize] = c;
        }
        Some(Poly::new(&self.field, coeffs))
    }

    /// Representative of degree `< m` in `F_q[x]/(x^m - λ)`, where `x` is a unit
    /// with `x^{-1} = λ^{-1} x^{m-1}`.
    pub fn laurent_reduce(&self, m: usize, lambda: FieldElement) -> Poly {
        assert!(m >= 1, "block length must be positive");
        let f = &self.field;
        let lambda_inv = f.inv(lambda).expect("shift constant must be nonzero");
        let s = match self.min_exponent() {
            Some(k) if k < 0 => (-k as u64).div_ceil(m as u64) as i64,
            _ => 0,
        };
        // x^{-sm} ≡ λ^{-s}
        let scale = f.pow(lambda_inv, s).expect("nonzero");
        let lifted = self.shift(s * m as i64).to_poly().expect("negative exponents cleared");
        lifted.scale(scale).reduce_binomial(m, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> FieldSpec {
        FieldSpec::new(2, 2, &[1, 1, 1]).unwrap()
    }

    fn p(f: &FieldSpec, c: &[i64]) -> Poly {
        Poly::new(f, c.iter().map(|&v| f.from_int(v)).collect())
    }

    #[test]
    fn mul_and_divrem() {
        let f2 = FieldSpec::prime(2).unwrap();
        let a = p(&f2, &[1, 1, 1]);
        let b = p(&f2, &[1, 1]);
        let c = &a * &b;
        assert_eq!(c, p(&f2, &[1, 0, 0, 1]));
        let (q, r) = c.divrem(&a).unwrap();
        assert_eq!(q, b);
        assert!(r.is_zero());
        assert_eq!(c.divrem(&Poly::zero(&f2)).unwrap_err(), Error::DivisionByZero);

        // x + θ^2 divides x^5 - θ over F_4
        let f = f4();
        let t = f.theta();
        let t2 = f.mul(t, t);
        let g = Poly::new(&f, vec![t2, f.one()]);
        let m = Poly::binomial(&f, 5, t);
        assert!(m.rem(&g).unwrap().is_zero());
    }

    #[test]
    fn gcd_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        let a = p(&f7, &[-1, 0, 1]);
        let b = p(&f7, &[-1, 0, 0, 1]);
        assert_eq!(a.gcd(&b).unwrap(), p(&f7, &[-1, 1]));
        let g = p(&f7, &[3, 0, 6]);
        assert_eq!(g.gcd(&Poly::zero(&f7)).unwrap(), g.monic());
        assert_eq!(Poly::zero(&f7).gcd(&Poly::zero(&f7)), Err(Error::BothZero));

        let d1 = p(&f7, &[1, 0, 4, 0, 2, 0, 1, 0, 4, 0, 2]);
        let x12 = Poly::binomial(&f7, 12, f7.one());
        assert_eq!(d1.gcd(&x12).unwrap(), d1.monic());

        let (g, s, t) = Poly::ext_gcd(&a, &b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn sigma_examples() {
        let f16 = FieldSpec::new(2, 4, &[1, 1, 0, 0, 1]).unwrap();
        let t5 = f16.pow(f16.theta(), 5).unwrap();
        let t10 = f16.pow(f16.theta(), 10).unwrap();
        let a = Poly::new(&f16, vec![t5, f16.zero(), t5]);
        assert_eq!(a.sigma(1), Poly::new(&f16, vec![t10, f16.zero(), t10]));
        assert_eq!(a.sigma(0), a);
        assert_eq!(a.sigma(4), a);

        let f9 = FieldSpec::new(3, 2, &[2, 2, 1]).unwrap();
        let a = Poly::new(&f9, vec![f9.from_int(2), f9.theta()]);
        let t3 = f9.from_coeffs(&[1, 2]).unwrap();
        assert_eq!(a.sigma(1), Poly::new(&f9, vec![f9.from_int(2), t3]));
    }

    #[test]
    fn reverse_scaled_examples() {
        let f = f4();
        let t2 = f.pow(f.theta(), 2).unwrap();
        let a = Poly::new(&f, vec![t2, f.one()]);
        let r = a.reverse_scaled(5).unwrap();
        assert_eq!(r, Poly::new(&f, vec![f.zero(), f.zero(), f.zero(), f.zero(), f.one(), t2]));
        assert_eq!(Poly::one(&f).reverse_scaled(3).unwrap(), Poly::monomial(&f, f.one(), 3));
        assert_eq!(a.reverse_scaled(1).unwrap().reverse_scaled(1).unwrap(), a);
        assert!(matches!(a.reverse_scaled(0), Err(Error::DegreeTooLarge { .. })));
    }

    #[test]
    fn laurent_reduce_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        let five = f7.from_int(5);
        let xinv = LaurentPoly::monomial(&f7, f7.one(), -1);
        assert_eq!(xinv.laurent_reduce(2, five), Poly::monomial(&f7, f7.from_int(3), 1));
        let xm = LaurentPoly::monomial(&f7, f7.one(), 4);
        assert_eq!(xm.laurent_reduce(4, five), Poly::constant(&f7, five));
        let small = p(&f7, &[1, 2, 3]);
        assert_eq!(LaurentPoly::from_poly(&small).laurent_reduce(4, five), small);
        // x^{-7} mod x^3 - 5
        let deep = LaurentPoly::monomial(&f7, f7.one(), -7);
        let back = deep.shift(7).laurent_reduce(3, five);
        assert!(back.is_one());
        let r = deep.laurent_reduce(3, five);
        let check = LaurentPoly::from_poly(&r.shift(7)).laurent_reduce(3, five);
        assert!(check.is_one());
    }

    #[test]
    fn display() {
        let f16 = FieldSpec::new(2, 4, &[1, 1, 0, 0, 1]).unwrap();
        let t5 = f16.pow(f16.theta(), 5).unwrap();
        let a = Poly::new(&f16, vec![t5, f16.zero(), t5]);
        assert_eq!(a.to_string_with(ElementStyle::Power), "t^5*x^2 + t^5");
        assert_eq!(a.to_string(), "(t^2 + t)*x^2 + t^2 + t");
        assert_eq!(Poly::zero(&f16).to_string(), "0");
    }
}

//! Arithmetic in `F_{p^e}` with a caller-supplied defining modulus.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}` where
//! `c_0 + c_1 θ + ... + c_{e-1} θ^{e-1}` is its expansion in the polynomial basis of the
//! root `θ` of the modulus. Multiplication goes through log/antilog tables built once per
//! field, so a [`FieldSpec`] is a cheap handle around shared tables.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_ORDER: u64 = 4096;

/// An element of `F_q`, meaningful only together with the [`FieldSpec`] that produced it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Integer encoding of the θ-basis coordinates (base `p` digits).
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// How elements are rendered as text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ElementStyle {
    /// Coordinates in the basis `1, t, ..., t^{e-1}`, e.g. `t^2 + 2*t`.
    #[default]
    Basis,
    /// `t^k` whenever θ generates the multiplicative group; prime-field elements stay integers.
    Power,
}

struct Inner {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u16>>,
    theta_is_generator: bool,
}

/// A validated finite field `F_{p^e} = F_p[t]/(modulus)`.
#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)?;
        if self.0.e > 1 {
            write!(f, " [{}]", fp_poly_to_string(&self.0.modulus))?;
        }
        Ok(())
    }
}

impl FieldSpec {
    /// Builds `F_{p^e}`. `modulus` holds the ascending coefficients of the defining
    /// polynomial in `t` and is ignored when `e == 1`.
    pub fn new(p: u64, e: u32, modulus: &[u64]) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::BadDegree { expected: 1, found: 0 });
        }
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge(p.saturating_pow(e)))?;
        let modulus: Vec<u32> = if e == 1 {
            vec![0, 1]
        } else {
            let mut m: Vec<u32> = modulus.iter().map(|&c| (c % p) as u32).collect();
            trim(&mut m);
            if m.len() != e as usize + 1 {
                return Err(Error::BadDegree {
                    expected: e as usize,
                    found: m.len().saturating_sub(1),
                });
            }
            if m[e as usize] != 1 {
                return Err(Error::NotMonic);
            }
            if !is_irreducible(&m, p as u32) {
                return Err(Error::NotIrreducible(p));
            }
            m
        };
        Ok(FieldSpec(Arc::new(build_tables(p as u32, e, q as u32, modulus))))
    }

    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        FieldSpec::new(p, 1, &[])
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Ascending coefficients of the defining polynomial.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The root θ of the modulus (the residue of `t`); equals `0` in a prime field.
    pub fn theta(&self) -> FieldElement {
        if self.0.e == 1 {
            FieldElement::ZERO
        } else {
            FieldElement(self.0.p)
        }
    }

    /// Reduction of an integer into the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// Element with the given θ-basis coordinates (missing coordinates are zero).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.e as usize {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for a degree-{} extension",
                coeffs.len(),
                self.0.e
            )));
        }
        let p = self.0.p as u64;
        let idx = coeffs.iter().rev().fold(0u64, |acc, &c| acc * p + c % p);
        Ok(FieldElement(idx as u32))
    }

    /// Element from its integer encoding, if in range.
    pub fn from_index(&self, index: u32) -> Option<FieldElement> {
        (index < self.0.q).then_some(FieldElement(index))
    }

    /// θ-basis coordinates, always `e` of them.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let p = self.0.p;
        let mut v = a.0;
        (0..self.0.e)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.0.q).map(FieldElement)
    }

    pub fn is_prime_subfield(&self, a: FieldElement) -> bool {
        a.0 < self.0.p
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let inner = &*self.0;
        if inner.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        if let Some(table) = &inner.add {
            return FieldElement(table[(a.0 * inner.q + b.0) as usize] as u32);
        }
        FieldElement(digit_add(a.0, b.0, inner.p))
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.0;
        FieldElement(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.0;
        let l = inner.log[a.0 as usize];
        Ok(FieldElement(inner.exp[((inner.q - 1 - l) % (inner.q - 1)) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^n`; negative exponents go through the inverse.
    pub fn pow(&self, a: FieldElement, n: i64) -> Result<FieldElement> {
        if a.0 == 0 {
            return match n {
                0 => Ok(FieldElement::ONE),
                n if n > 0 => Ok(FieldElement::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let order = (self.0.q - 1) as i64;
        let l = self.0.log[a.0 as usize] as i64;
        let k = (l * n.rem_euclid(order)).rem_euclid(order);
        Ok(FieldElement(self.0.exp[k as usize]))
    }

    /// `a^{p^k}`, the `k`-th power of the Frobenius automorphism (`k` taken mod `e`).
    pub fn frobenius(&self, a: FieldElement, k: u32) -> FieldElement {
        let k = k % self.0.e;
        if k == 0 || a.0 == 0 {
            return a;
        }
        let order = (self.0.q - 1) as u64;
        let mut l = self.0.log[a.0 as usize] as u64;
        for _ in 0..k {
            l = (l * self.0.p as u64) % order;
        }
        FieldElement(self.0.exp[l as usize])
    }

    /// Least `t >= 1` with `a^t = 1`.
    pub fn mult_order(&self, a: FieldElement) -> Result<u64> {
        if a.0 == 0 {
            return Err(Error::ZeroElement);
        }
        let order = (self.0.q - 1) as u64;
        let l = self.0.log[a.0 as usize] as u64;
        Ok(order / gcd_u64(l, order))
    }

    /// `k` with `θ^k = a`, when θ generates `F_q^*`.
    pub fn theta_exponent(&self, a: FieldElement) -> Option<u32> {
        (self.0.theta_is_generator && a.0 != 0).then(|| self.0.log[a.0 as usize])
    }

    /// Renders an element. Compound basis expressions are not parenthesised here.
    pub fn format(&self, a: FieldElement, style: ElementStyle) -> String {
        if self.is_prime_subfield(a) {
            return a.0.to_string();
        }
        if style == ElementStyle::Power {
            if let Some(k) = self.theta_exponent(a) {
                return if k == 1 { "t".into() } else { format!("t^{k}") };
            }
        }
        let c = self.coeffs(a);
        fp_poly_to_string_var(&c, "t")
    }

    /// True when [`format`](Self::format) yields more than one additive term.
    pub fn is_compound(&self, a: FieldElement, style: ElementStyle) -> bool {
        if self.is_prime_subfield(a) {
            return false;
        }
        if style == ElementStyle::Power && self.theta_exponent(a).is_some() {
            return false;
        }
        self.coeffs(a).iter().filter(|&&c| c != 0).count() > 1
    }
}

fn digit_add(mut a: u32, mut b: u32, p: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 || b > 0 {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    out
}

fn digit_neg(mut a: u32, p: u32) -> u32 {
    let mut out = 0;
    let mut place = 1;
    while a > 0 {
        out += ((p - a % p) % p) * place;
        a /= p;
        place *= p;
    }
    out
}

fn build_tables(p: u32, e: u32, q: u32, modulus: Vec<u32>) -> Inner {
    let to_vec = |x: u32| -> Vec<u32> {
        let mut v = x;
        (0..e)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    };
    let from_vec = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &c| acc * p + c) };
    let slow_mul = |a: u32, b: u32| -> u32 {
        let prod = fp_mulmod(&to_vec(a), &to_vec(b), &modulus, p);
        let mut padded = prod;
        padded.resize(e as usize, 0);
        from_vec(&padded)
    };

    // θ first, so that the antilog table enumerates powers of θ whenever possible.
    let theta = if e == 1 { 2 % q } else { p };
    let candidates = std::iter::once(theta).chain(1..q);
    let mut exp = Vec::new();
    let mut generator = 0;
    for g in candidates {
        if g == 0 {
            continue;
        }
        let mut powers = Vec::with_capacity(q as usize - 1);
        let mut x = 1u32;
        loop {
            powers.push(x);
            x = slow_mul(x, g);
            if x == 1 || powers.len() > q as usize {
                break;
            }
        }
        if powers.len() == q as usize - 1 {
            exp = powers;
            generator = g;
            break;
        }
    }
    debug_assert!(!exp.is_empty());
    let mut log = vec![0u32; q as usize];
    for (k, &v) in exp.iter().enumerate() {
        log[v as usize] = k as u32;
    }
    let doubled: Vec<u32> = exp.iter().chain(exp.iter()).copied().collect();
    let neg = (0..q).map(|a| digit_neg(a, p)).collect();
    let add = (p != 2 && q <= 256).then(|| {
        let mut t = Vec::with_capacity((q * q) as usize);
        for a in 0..q {
            for b in 0..q {
                t.push(digit_add(a, b, p) as u16);
            }
        }
        t
    });
    Inner {
        p,
        e,
        q,
        modulus,
        exp: doubled,
        log,
        neg,
        add,
        theta_is_generator: e > 1 && generator == theta,
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

pub(crate) fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd_u64(a, b) * b
    }
}

// ---- small F_p[t] helpers used for validating the modulus and building tables ----

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut base = a as u64 % p as u64;
    let mut n = p as u64 - 2;
    while n > 0 {
        if n & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        n >>= 1;
    }
    r as u32
}

fn fp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p) as u64;
    while r.len() > dm {
        let top = r.len() - 1;
        let c = r[top] as u64 * lead_inv % p as u64;
        let shift = top - dm;
        for (i, &mi) in m.iter().enumerate() {
            let sub = c * mi as u64 % p as u64;
            r[shift + i] = ((r[shift + i] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        trim(&mut r);
    }
    r
}

fn fp_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    fp_rem(&out, m, p)
}

fn fp_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

fn fp_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let n = a.len().max(b.len());
    let mut out: Vec<u32> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(&mut out);
    out
}

fn fp_powmod(base: &[u32], mut n: u64, m: &[u32], p: u32) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut b = fp_rem(base, m, p);
    while n > 0 {
        if n & 1 == 1 {
            result = fp_mulmod(&result, &b, m, p);
        }
        b = fp_mulmod(&b, &b, m, p);
        n >>= 1;
    }
    result
}

/// Exhaustive factor search for degree at most 4: roots, plus monic quadratic
/// factors when the degree is 4.
fn is_irreducible_exhaustive(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    debug_assert!(deg <= 4);
    if deg <= 1 {
        return deg == 1;
    }
    for r in 0..p {
        let val = m
            .iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * r as u64 + c as u64) % p as u64);
        if val == 0 {
            return false;
        }
    }
    if deg == 4 {
        for c0 in 0..p {
            for c1 in 0..p {
                if fp_rem(m, &[c0, c1, 1], p).is_empty() {
                    return false;
                }
            }
        }
    }
    true
}

/// Ben-Or: `m` of degree `d` is irreducible iff `gcd(m, t^{p^i} - t) = 1` for `1 <= i <= d/2`.
fn is_irreducible_ben_or(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    let t = vec![0u32, 1];
    let mut power = t.clone();
    for _ in 1..=deg / 2 {
        power = fp_powmod(&power, p as u64, m, p);
        let g = fp_gcd(m, &fp_sub(&power, &t, p), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn is_irreducible(m: &[u32], p: u32) -> bool {
    if m.len() - 1 <= 4 {
        is_irreducible_exhaustive(m, p)
    } else {
        is_irreducible_ben_or(m, p)
    }
}

fn fp_poly_to_string(c: &[u32]) -> String {
    fp_poly_to_string_var(c, "t")
}

pub(crate) fn fp_poly_to_string_var(c: &[u32], var: &str) -> String {
    let mut terms = Vec::new();
    for (k, &ck) in c.iter().enumerate().rev() {
        if ck == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        terms.push(match (ck, k) {
            (_, 0) => ck.to_string(),
            (1, _) => mono,
            _ => format!("{ck}*{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f16() -> FieldSpec {
        FieldSpec::new(2, 4, &[1, 1, 0, 0, 1]).unwrap()
    }

    fn f9() -> FieldSpec {
        FieldSpec::new(3, 2, &[2, 2, 1]).unwrap()
    }

    // Independent repeated-squaring power, using only the table-free slow path.
    fn slow_pow(f: &FieldSpec, a: FieldElement, n: u64) -> FieldElement {
        let mut acc = f.one();
        let mut base = a;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = slow(f, acc, base);
            }
            base = slow(f, base, base);
            n >>= 1;
        }
        acc
    }

    fn slow(f: &FieldSpec, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = f.characteristic();
        let av = f.coeffs(a);
        let bv = f.coeffs(b);
        let mut prod = fp_mulmod(&av, &bv, f.modulus(), p);
        prod.resize(f.degree() as usize, 0);
        f.from_coeffs(&prod.iter().map(|&c| c as u64).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn make_field_examples() {
        let f = f16();
        let t = f.theta();
        let t4 = f.pow(t, 4).unwrap();
        assert_eq!(t4, f.add(t, f.one()));

        let g = f9();
        let t = g.theta();
        assert_eq!(g.mul(t, t), g.add(t, g.one()));

        assert_eq!(
            FieldSpec::new(2, 4, &[1, 0, 1, 0, 1]).unwrap_err(),
            Error::NotIrreducible(2)
        );
        assert_eq!(FieldSpec::new(4, 1, &[]).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            FieldSpec::new(2, 4, &[1, 1, 1]).unwrap_err(),
            Error::BadDegree { .. }
        ));
        assert_eq!(FieldSpec::new(3, 2, &[2, 2, 2]).unwrap_err(), Error::NotMonic);
    }

    #[test]
    fn arithmetic_examples() {
        let f = f16();
        let t = f.theta();
        let a = f.pow(t, 5).unwrap();
        let b = f.pow(t, 10).unwrap();
        assert_eq!(f.mul(a, b), f.one());
        assert_eq!(slow(&f, a, b), f.one());
        assert_eq!(slow_pow(&f, t, 15), f.one());

        for x in f.elements() {
            assert_eq!(f.add(x, f.neg(x)), f.zero());
        }
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.inv(f7.from_int(2)).unwrap(), f7.from_int(4));
        assert_eq!(f7.inv(f7.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn frobenius_examples() {
        let f = f16();
        let t = f.theta();
        assert_eq!(f.frobenius(f.pow(t, 5).unwrap(), 1), f.pow(t, 10).unwrap());
        for a in f.elements() {
            assert_eq!(f.frobenius(a, 0), a);
            assert_eq!(f.frobenius(a, 4), a);
        }
        let g = f9();
        let t = g.theta();
        // θ^3 = θ·θ^2 = θ(θ+1) = θ^2 + θ = 2θ + 1
        assert_eq!(g.frobenius(t, 1), g.from_coeffs(&[1, 2]).unwrap());
    }

    #[test]
    fn mult_order_examples() {
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(f7.mult_order(f7.from_int(2)).unwrap(), 3);
        assert_eq!(f7.mult_order(f7.from_int(5)).unwrap(), 6);
        assert_eq!(f7.mult_order(f7.one()).unwrap(), 1);
        assert_eq!(f7.mult_order(f7.zero()), Err(Error::ZeroElement));
        let g = f9();
        let t = g.theta();
        let x = g.mul(g.from_int(2), g.mul(t, t));
        assert_eq!(x, g.pow(t, 6).unwrap());
        assert_eq!(g.mult_order(x).unwrap(), 4);
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in [
            FieldSpec::prime(2).unwrap(),
            FieldSpec::prime(7).unwrap(),
            FieldSpec::new(2, 2, &[1, 1, 1]).unwrap(),
            f9(),
            f16(),
        ] {
            let q = f.order() as u64;
            for a in f.elements() {
                assert_eq!(slow_pow(&f, a, q), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                    let t = f.mult_order(a).unwrap();
                    assert_eq!((q - 1) % t, 0);
                    assert_eq!(slow_pow(&f, a, t), f.one());
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), slow(&f, a, b));
                    for k in 0..f.degree() {
                        assert_eq!(
                            f.frobenius(f.add(a, b), k),
                            f.add(f.frobenius(a, k), f.frobenius(b, k))
                        );
                        assert_eq!(
                            f.frobenius(f.mul(a, b), k),
                            f.mul(f.frobenius(a, k), f.frobenius(b, k))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn irreducibility_tests_agree() {
        for p in [2u32, 3, 5] {
            for deg in 2..=4usize {
                let count = p.pow(deg as u32);
                for idx in 0..count {
                    let mut m: Vec<u32> = (0..deg).map(|i| (idx / p.pow(i as u32)) % p).collect();
                    m.push(1);
                    assert_eq!(
                        is_irreducible_exhaustive(&m, p),
                        is_irreducible_ben_or(&m, p),
                        "{m:?} over F_{p}"
                    );
                }
            }
        }
        // degree 5 goes through the gcd route
        assert!(FieldSpec::new(2, 5, &[1, 0, 1, 0, 0, 1]).is_ok());
        assert_eq!(
            FieldSpec::new(2, 5, &[1, 1, 1, 0, 0, 1]).unwrap_err(),
            Error::NotIrreducible(2)
        );
    }

    #[test]
    fn formatting() {
        let f = f16();
        let t5 = f.pow(f.theta(), 5).unwrap();
        assert_eq!(f.format(t5, ElementStyle::Power), "t^5");
        // θ^5 = θ^2 + θ
        assert_eq!(f.format(t5, ElementStyle::Basis), "t^2 + t");
        assert!(f.is_compound(t5, ElementStyle::Basis));
        let g = f9();
        assert_eq!(g.format(g.from_int(2), ElementStyle::Power), "2");
        assert_eq!(g.format(g.from_coeffs(&[0, 2]).unwrap(), ElementStyle::Basis), "2*t");
    }
}

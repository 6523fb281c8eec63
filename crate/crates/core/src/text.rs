//! Text formats: polynomials, matrices and code specification files.
//!
//! Polynomials are sums of terms in `x` whose coefficients may mention the field generator
//! `t` (also accepted as `θ`), e.g. `t^5*x^2 + (t + 1)x + 1`. Multiplication may be implicit.
//! Matrices are written one row per line with entries separated by `|`.
//!
//! A specification file is a list of `key = value` lines; `#` starts a comment:
//!
//! ```text
//! p = 2
//! e = 4
//! modulus = t^4 + t + 1
//! blocks = 3, 2
//! lambdas = 1, 1
//! gpm = [
//!   x^2 + x + 1 | 1
//!   0 | x + 1
//! ]
//! ```
//!
//! Instead of `gpm`, a `generators` block lists polynomial vectors whose smallest containing
//! code is wanted. Rows may also be separated by `;`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::gf::{fp_poly_to_string_var, ElementStyle, FieldElement, FieldSpec};
use crate::mtcode::CodeSpec;
use crate::poly::Poly;
use crate::polymat::PolyMatrix;

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(u64),
    T,
    X,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut n: u64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n
                        .checked_mul(10)
                        .and_then(|n| n.checked_add(d as u64))
                        .ok_or_else(|| Error::Parse(format!("number too large in `{s}`")))?;
                    chars.next();
                }
                out.push(Token::Num(n));
            }
            _ => {
                chars.next();
                out.push(match c {
                    't' | 'θ' => Token::T,
                    'x' => Token::X,
                    '+' => Token::Plus,
                    '-' | '−' => Token::Minus,
                    '*' | '·' => Token::Star,
                    '^' => Token::Caret,
                    '(' => Token::LParen,
                    ')' => Token::RParen,
                    other => return Err(Error::Parse(format!("unexpected character `{other}` in `{s}`"))),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
enum Expr {
    Num(u64),
    T,
    X,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!("{what} in `{}`", self.src)))
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut acc = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Expr::Neg(Box::new(self.product()?))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = Expr::Sub(Box::new(acc), Box::new(self.product()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                Some(Token::Num(_) | Token::T | Token::X | Token::LParen) => {
                    acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.peek() {
                Some(&Token::Num(k)) => {
                    self.pos += 1;
                    let k = u32::try_from(k).or_else(|_| self.err("exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), k));
                }
                _ => return self.err("expected a non-negative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Token::Num(n)) => Ok(Expr::Num(n)),
            Some(Token::T) => Ok(Expr::T),
            Some(Token::X) => Ok(Expr::X),
            Some(Token::Minus) => Ok(Expr::Neg(Box::new(self.power()?))),
            Some(Token::LParen) => {
                let inner = self.sum()?;
                if self.peek() != Some(&Token::RParen) {
                    return self.err("missing `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.err("unexpected operator"),
            None => self.err("unexpected end of expression"),
        }
    }
}

fn parse_expr(s: &str) -> Result<Expr> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { tokens: &tokens, pos: 0, src: s };
    let e = p.sum()?;
    if p.pos != tokens.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Evaluate with `t` and `x` bound to the given polynomials (`None` makes the symbol an error).
fn eval(e: &Expr, field: &FieldSpec, t: Option<&Poly>, x: Option<&Poly>) -> Result<Poly> {
    Ok(match e {
        Expr::Num(n) => {
            let p = field.characteristic() as u64;
            Poly::constant(field, field.from_int((n % p) as i64))
        }
        Expr::T => t.cloned().ok_or_else(|| Error::Parse("`t` is not available here".into()))?,
        Expr::X => x.cloned().ok_or_else(|| Error::Parse("`x` is not available here".into()))?,
        Expr::Add(a, b) => &eval(a, field, t, x)? + &eval(b, field, t, x)?,
        Expr::Sub(a, b) => &eval(a, field, t, x)? - &eval(b, field, t, x)?,
        Expr::Neg(a) => -&eval(a, field, t, x)?,
        Expr::Mul(a, b) => &eval(a, field, t, x)? * &eval(b, field, t, x)?,
        Expr::Pow(a, k) => eval(a, field, t, x)?.pow(*k),
    })
}

fn theta_poly(field: &FieldSpec) -> Option<Poly> {
    (field.degree() > 1).then(|| Poly::constant(field, field.theta()))
}

/// Parse a polynomial in `x` over `field`.
pub fn parse_poly(field: &FieldSpec, s: &str) -> Result<Poly> {
    let e = parse_expr(s)?;
    eval(&e, field, theta_poly(field).as_ref(), Some(&Poly::x(field)))
}

/// Parse a field element, an expression in `t` only.
pub fn parse_element(field: &FieldSpec, s: &str) -> Result<FieldElement> {
    let e = parse_expr(s)?;
    let p = eval(&e, field, theta_poly(field).as_ref(), None)?;
    Ok(p.coeff(0))
}

/// Parse a defining modulus over `F_p` written in `t` (or `x`), lowest coefficient first.
pub fn parse_modulus(p: u64, s: &str) -> Result<Vec<u64>> {
    let fp = FieldSpec::prime(p)?;
    let e = parse_expr(s)?;
    let var = Poly::x(&fp);
    let poly = eval(&e, &fp, Some(&var), Some(&var))?;
    Ok(poly.coeffs().iter().map(|c| c.index() as u64).collect())
}

/// Parse matrix rows; rows are separated by newlines or `;`, entries by `|`.
pub fn parse_matrix(field: &FieldSpec, s: &str) -> Result<PolyMatrix> {
    let rows = s
        .split(['\n', ';'])
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|line| line.split('|').map(|entry| parse_poly(field, entry)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::from_rows(field, rows).map_err(|e| Error::Parse(e.to_string()))
}

pub fn format_matrix(m: &PolyMatrix, style: ElementStyle) -> String {
    m.to_string_with(style)
}

const KEYS: [&str; 7] = ["p", "e", "modulus", "blocks", "lambdas", "gpm", "generators"];

/// Split a spec file into key/value pairs, joining bracketed multi-line values.
fn key_values(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    let mut lines = text.lines().enumerate();
    while let Some((no, raw)) = lines.next() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("line {}: expected `key = value`", no + 1)))?;
        let key = key.trim().to_string();
        if !KEYS.contains(&key.as_str()) {
            return Err(Error::Parse(format!("line {}: unknown key `{key}`", no + 1)));
        }
        let mut value = value.trim().to_string();
        if let Some(rest) = value.strip_prefix('[') {
            let mut body = rest.to_string();
            while !body.contains(']') {
                let (_, next) = lines
                    .next()
                    .ok_or_else(|| Error::Parse(format!("line {}: unterminated `[`", no + 1)))?;
                body.push('\n');
                body.push_str(next.split('#').next().unwrap_or(""));
            }
            let (inside, after) = body.split_once(']').expect("checked above");
            if !after.trim().is_empty() {
                return Err(Error::Parse(format!("unexpected text after `]` for `{key}`")));
            }
            value = inside.to_string();
        }
        if out.insert(key.clone(), value).is_some() {
            return Err(Error::Parse(format!("duplicate key `{key}`")));
        }
    }
    Ok(out)
}

fn parse_int<T: std::str::FromStr>(key: &str, s: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Parse(format!("`{key}`: `{}` is not a valid integer", s.trim())))
}

/// Parse a specification file. Syntax problems are [`Error::Parse`]; semantic ones
/// (reducible modulus, rows that do not form a GPM, ...) keep their own variants.
pub fn parse_spec(text: &str) -> Result<CodeSpec> {
    let kv = key_values(text)?;
    let get = |k: &str| kv.get(k).ok_or_else(|| Error::Parse(format!("missing key `{k}`")));
    let p: u64 = parse_int("p", get("p")?)?;
    let e: u32 = match kv.get("e") {
        Some(v) => parse_int("e", v)?,
        None => 1,
    };
    let modulus = match kv.get("modulus") {
        Some(m) => parse_modulus(p, m)?,
        None if e == 1 => vec![0, 1],
        None => return Err(Error::Parse("missing key `modulus`".into())),
    };
    let field = FieldSpec::new(p, e, &modulus)?;
    let blocks: Vec<usize> = get("blocks")?.split(',').map(|b| parse_int("blocks", b)).collect::<Result<_>>()?;
    let lambdas: Vec<FieldElement> =
        get("lambdas")?.split(',').map(|l| parse_element(&field, l)).collect::<Result<_>>()?;
    match (kv.get("gpm"), kv.get("generators")) {
        (Some(g), None) => CodeSpec::new(&field, blocks, lambdas, parse_matrix(&field, g)?),
        (None, Some(g)) => {
            let m = parse_matrix(&field, g)?;
            if m.cols() != blocks.len() {
                return Err(Error::Parse(format!("generators have {} entries, expected {}", m.cols(), blocks.len())));
            }
            let rows: Vec<Vec<Poly>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
            CodeSpec::smallest_containing(&field, blocks, lambdas, &rows)
        }
        (Some(_), Some(_)) => Err(Error::Parse("give either `gpm` or `generators`, not both".into())),
        (None, None) => Err(Error::Parse("missing key `gpm`".into())),
    }
}

/// Render a specification file that [`parse_spec`] reads back to the same code.
pub fn format_spec(spec: &CodeSpec, style: ElementStyle) -> String {
    let f = spec.field();
    let mut s = String::new();
    let _ = writeln!(s, "p = {}", f.characteristic());
    let _ = writeln!(s, "e = {}", f.degree());
    if f.degree() > 1 {
        let _ = writeln!(s, "modulus = {}", fp_poly_to_string_var(f.modulus(), "t"));
    }
    let blocks: Vec<String> = spec.block_lengths().iter().map(usize::to_string).collect();
    let _ = writeln!(s, "blocks = {}", blocks.join(", "));
    let lambdas: Vec<String> = spec.lambdas().iter().map(|&l| f.format(l, style)).collect();
    let _ = writeln!(s, "lambdas = {}", lambdas.join(", "));
    let _ = writeln!(s, "gpm = [");
    for line in spec.gpm().to_string_with(style).lines() {
        let _ = writeln!(s, "  {line}");
    }
    s.push_str("]\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f16() -> FieldSpec {
        FieldSpec::new(2, 4, &[1, 1, 0, 0, 1]).unwrap()
    }

    #[test]
    fn polynomial_grammar() {
        let f = f16();
        let t5 = f.pow(f.theta(), 5).unwrap();
        let expect = Poly::new(&f, vec![t5, f.zero(), t5]);
        for s in ["t^5*x^2 + t^5", "t^5x^2+t^5", "(t^2 + t)*x^2 + t^2 + t", " θ^5 · x^2 + θ^5 ", "t^5(x^2 + 1)"] {
            assert_eq!(parse_poly(&f, s).unwrap(), expect, "{s}");
        }
        let f7 = FieldSpec::prime(7).unwrap();
        assert_eq!(parse_poly(&f7, "x^2 - 5").unwrap(), Poly::binomial(&f7, 2, f7.from_int(5)));
        assert_eq!(parse_poly(&f7, "-x + 9").unwrap(), parse_poly(&f7, "6x + 2").unwrap());
        assert_eq!(parse_poly(&f7, "x − 1").unwrap(), parse_poly(&f7, "x + 6").unwrap());
        assert!(matches!(parse_poly(&f7, "t + 1"), Err(Error::Parse(_))));
        assert!(matches!(parse_poly(&f, "x^"), Err(Error::Parse(_))));
        assert!(matches!(parse_poly(&f, "(x + 1"), Err(Error::Parse(_))));
        assert!(matches!(parse_poly(&f, "x + y"), Err(Error::Parse(_))));
        assert!(matches!(parse_poly(&f, ""), Err(Error::Parse(_))));
    }

    #[test]
    fn elements_and_moduli() {
        let f = f16();
        assert_eq!(parse_element(&f, "t^4").unwrap(), f.from_coeffs(&[1, 1]).unwrap());
        assert!(matches!(parse_element(&f, "x"), Err(Error::Parse(_))));
        assert_eq!(parse_modulus(2, "t^4 + t + 1").unwrap(), vec![1, 1, 0, 0, 1]);
        assert_eq!(parse_modulus(3, "x^2 + 2x + 2").unwrap(), vec![2, 2, 1]);
    }

    #[test]
    fn spec_file() {
        let text = "\
# small example
p = 2
e = 2
modulus = t^2 + t + 1
blocks = 3, 5
lambdas = 1, t
gpm = [
  1 | t^2          # first row
  0 | x + t^2
]
";
        let spec = parse_spec(text).unwrap();
        assert_eq!(spec.dimension(), 7);
        let inline = text.replace("gpm = [\n  1 | t^2          # first row\n  0 | x + t^2\n]", "gpm = [1 | t^2; 0 | x + t^2]");
        assert_eq!(parse_spec(&inline).unwrap(), spec);
        for style in [ElementStyle::Basis, ElementStyle::Power] {
            assert_eq!(parse_spec(&format_spec(&spec, style)).unwrap(), spec);
        }

        let unknown = format!("{text}colour = red\n");
        assert!(matches!(parse_spec(&unknown), Err(Error::Parse(_))));
        let dup = format!("{text}p = 2\n");
        assert!(matches!(parse_spec(&dup), Err(Error::Parse(_))));
        let reducible = text.replace("t^2 + t + 1", "t^2 + 1");
        assert_eq!(parse_spec(&reducible).unwrap_err(), Error::NotIrreducible(2));
        let not_gpm = text.replace("0 | x + t^2", "0 | x");
        assert!(matches!(parse_spec(&not_gpm), Err(Error::NotAGpm(_))));
    }

    #[test]
    fn generators_key() {
        let text = "p = 7\nblocks = 2, 2\nlambdas = 2, 5\ngenerators = [ x + 1 | 0 ]\n";
        let spec = parse_spec(text).unwrap();
        let f7 = spec.field().clone();
        let expect = PolyMatrix::diag(&f7, &[Poly::one(&f7), parse_poly(&f7, "x^2 + 2").unwrap()]);
        assert_eq!(spec.gpm(), &expect);
    }

    proptest! {
        #[test]
        fn print_parse_roundtrip(c in proptest::collection::vec(0u32..16, 0..8), power in any::<bool>()) {
            let f = f16();
            let p = Poly::new(&f, c.iter().map(|&i| f.from_index(i).unwrap()).collect());
            let style = if power { ElementStyle::Power } else { ElementStyle::Basis };
            prop_assert_eq!(parse_poly(&f, &p.to_string_with(style)).unwrap(), p);
        }
    }
}

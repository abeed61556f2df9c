//! Dense univariate polynomials over a [`FieldSpec`].

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// Polynomial with ascending coefficients and no trailing zeros.
/// The zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FieldSpec,
    coeffs: Vec<u128>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn zero(field: &FieldSpec) -> Self {
        Poly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &FieldSpec) -> Self {
        Self::constant(field, 1)
    }

    pub(crate) fn constant(field: &FieldSpec, code: u128) -> Self {
        Self::from_raw(field, vec![code])
    }

    pub fn monomial(field: &FieldSpec, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = 1;
        Self::from_raw(field, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_1(field: &FieldSpec, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg_raw(1);
        coeffs[n] = 1;
        Self::from_raw(field, coeffs)
    }

    /// `x - c` for an element code `c`.
    pub(crate) fn linear(field: &FieldSpec, root: u128) -> Self {
        Self::from_raw(field, vec![field.neg_raw(root), 1])
    }

    pub(crate) fn from_raw(field: &FieldSpec, mut coeffs: Vec<u128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    /// From ascending element codes (see [`FieldElement::code`]).
    pub fn from_codes(field: &FieldSpec, coeffs: &[u128]) -> Result<Self> {
        if let Some(&c) = coeffs.iter().find(|&&c| c >= field.order()) {
            return Err(Error::InvalidParameter(format!(
                "coefficient {c} outside field of order {}",
                field.order()
            )));
        }
        Ok(Self::from_raw(field, coeffs.to_vec()))
    }

    pub fn from_elements(field: &FieldSpec, coeffs: &[FieldElement]) -> Result<Self> {
        if coeffs.iter().any(|c| c.field() != field) {
            return Err(Error::MixedFields);
        }
        Ok(Self::from_raw(field, coeffs.iter().map(|c| c.code()).collect()))
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn coeffs(&self) -> &[u128] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u128 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Integer codes of the coefficients, ascending.
    pub fn to_codes(&self) -> Vec<u64> {
        self.coeffs.iter().map(|&c| c as u64).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| self.field.add_raw(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::from_raw(&self.field, out))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let out = (0..n)
            .map(|i| self.field.sub_raw(self.coeff(i), other.coeff(i)))
            .collect();
        Ok(Self::from_raw(&self.field, out))
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = f.add_raw(out[i + j], f.mul_raw(a, b));
                }
            }
        }
        Ok(Self::from_raw(f, out))
    }

    pub fn scale(&self, c: u128) -> Poly {
        let out = self.coeffs.iter().map(|&a| self.field.mul_raw(a, c)).collect();
        Self::from_raw(&self.field, out)
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = vec![0; k];
        out.extend_from_slice(&self.coeffs);
        Self::from_raw(&self.field, out)
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check(divisor)?;
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let f = &self.field;
        let lead_inv = f.inv_raw(divisor.lead()).expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u128; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul_raw(rem[top], lead_inv);
            if c == 0 {
                continue;
            }
            quot[top - dd] = c;
            for (j, &dj) in divisor.coeffs.iter().enumerate() {
                if dj != 0 {
                    let idx = top - dd + j;
                    rem[idx] = f.sub_raw(rem[idx], f.mul_raw(c, dj));
                }
            }
        }
        rem.truncate(dd);
        Ok((Self::from_raw(f, quot), Self::from_raw(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Scalar multiple with leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.field.inv_raw(self.lead()) {
            Some(inv) if self.lead() != 1 => self.scale(inv),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let g = self.gcd(other)?;
        let (q, _) = self.divrem(&g)?;
        Ok(q.mul(other)?.monic())
    }

    /// `f*(x) = f(0)^{-1} x^{deg f} f(1/x)`.
    pub fn reciprocal(&self) -> Result<Poly> {
        let c0 = self.coeff(0);
        if c0 == 0 {
            return Err(Error::ZeroConstantTerm);
        }
        let inv = self.field.inv_raw(c0).expect("nonzero");
        let out = self.coeffs.iter().rev().map(|&a| self.field.mul_raw(a, inv)).collect();
        Ok(Self::from_raw(&self.field, out))
    }

    pub fn is_self_reciprocal(&self) -> Result<bool> {
        Ok(self.reciprocal()? == *self)
    }

    /// Evaluate at an element of the same field (Horner).
    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if x.field() != &self.field {
            return Err(Error::MixedFields);
        }
        Ok(self.field.elem(self.eval_raw(x.code())))
    }

    pub(crate) fn eval_raw(&self, x: u128) -> u128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| self.field.add_raw(self.field.mul_raw(acc, x), c))
    }

    pub fn product<'a>(field: &FieldSpec, factors: impl IntoIterator<Item = &'a Poly>) -> Result<Poly> {
        factors.into_iter().try_fold(Self::one(field), |acc, f| acc.mul(f))
    }

    /// Least common multiple of a list; the empty list gives 1.
    pub fn lcm_all<'a>(field: &FieldSpec, polys: impl IntoIterator<Item = &'a Poly>) -> Result<Poly> {
        polys.into_iter().try_fold(Self::one(field), |acc, f| acc.lcm(f))
    }

    /// Parses either an ascending coefficient list (`"1,1,0,0,1"`) or a human form
    /// such as `"x^4+x+1"`, `"2x^3-x+1"` or `"(x+1)*(x^2+x+1)"`. Coefficients are
    /// integer element codes; in human form they are reduced through the prime subfield
    /// only when they exceed the field order.
    pub fn parse(field: &FieldSpec, text: &str) -> Result<Poly> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if s.contains(',') {
            let codes = s
                .split(',')
                .map(|t| {
                    t.parse::<u128>()
                        .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Self::from_codes(field, &codes);
        }
        parse_product(field, &s)
    }
}

fn parse_product(field: &FieldSpec, s: &str) -> Result<Poly> {
    let s = s.replace(")(", ")*(");
    parse_sum(field, &s)
}

// Splits `s` at depth-0 occurrences of any char in `seps`, keeping the separator
// at the front of the following piece.
fn split_top(s: &str, seps: &[char]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
        }
        if depth == 0 && seps.contains(&ch) && !cur.is_empty() && !cur.ends_with(['^', '*']) {
            out.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    out.push(cur);
    Ok(out)
}

fn parse_sum(field: &FieldSpec, s: &str) -> Result<Poly> {
    let mut acc = Poly::zero(field);
    for t in split_top(s, &['+', '-'])? {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        if body.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {s:?}")));
        }
        let mut term = Poly::one(field);
        for factor in split_top(body, &['*'])? {
            let factor = factor.strip_prefix('*').unwrap_or(&factor);
            let f = if let Some(inner) = factor.strip_prefix('(') {
                let inner = inner
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("bad factor {factor:?}")))?;
                parse_sum(field, inner)?
            } else {
                parse_monomial(field, factor)?
            };
            term = term.mul(&f)?;
        }
        acc = if neg { acc.sub(&term)? } else { acc.add(&term)? };
    }
    Ok(acc)
}

fn parse_monomial(field: &FieldSpec, t: &str) -> Result<Poly> {
    if t.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let (coef_str, mono) = match t.find('x') {
        Some(pos) => (&t[..pos], Some(&t[pos + 1..])),
        None => (t, None),
    };
    let coef: u128 = if coef_str.is_empty() {
        1
    } else {
        coef_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient in term {t:?}")))?
    };
    let coef = if coef >= field.order() {
        field.from_int((coef % field.p() as u128) as i64)
    } else {
        coef
    };
    let degree = match mono {
        None => 0,
        Some("") => 1,
        Some(rest) => rest
            .strip_prefix('^')
            .and_then(|d| d.parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad exponent in term {t:?}")))?,
    };
    Ok(Poly::monomial(field, degree).scale(coef))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::new(2, 1).unwrap()
    }

    fn p(f: &FieldSpec, s: &str) -> Poly {
        Poly::parse(f, s).unwrap()
    }

    #[test]
    fn gcd_of_distinct_irreducibles() {
        let f = gf2();
        let g = p(&f, "x^4+x+1").gcd(&p(&f, "x^4+x^3+1")).unwrap();
        assert_eq!(g, Poly::one(&f));
    }

    #[test]
    fn lcm_idempotent() {
        let f = FieldSpec::new(3, 1).unwrap();
        let a = p(&f, "x-1");
        assert_eq!(a.lcm(&a).unwrap(), a);
        assert_eq!(Poly::lcm_all(&f, []).unwrap(), Poly::one(&f));
    }

    #[test]
    fn x15_divisible() {
        let f = gf2();
        let (_, r) = Poly::x_n_minus_1(&f, 15).divrem(&p(&f, "x^4+x+1")).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn reciprocals() {
        let f = gf2();
        assert_eq!(p(&f, "x^4+x+1").reciprocal().unwrap(), p(&f, "x^4+x^3+1"));
        assert!(p(&f, "x+1").is_self_reciprocal().unwrap());
        assert!(p(&f, "x^2+x+1").is_self_reciprocal().unwrap());
        assert!(p(&f, "x^4+x^3+x^2+x+1").is_self_reciprocal().unwrap());
        assert!(!p(&f, "x^4+x+1").is_self_reciprocal().unwrap());
        assert_eq!(p(&f, "x^3+x").reciprocal().unwrap_err(), Error::ZeroConstantTerm);
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert!(p(&f3, "x-1").is_self_reciprocal().unwrap());
        // 2x^2 + x + 1 -> monic-normalized reciprocal x^2 + x + 2
        assert_eq!(p(&f3, "2x^2+x+1").reciprocal().unwrap(), p(&f3, "x^2+x+2"));
    }

    #[test]
    fn divrem_by_zero() {
        let f = gf2();
        assert_eq!(p(&f, "x+1").divrem(&Poly::zero(&f)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn parse_forms_agree() {
        let f = gf2();
        assert_eq!(p(&f, "1,1,0,0,1"), p(&f, "x^4+x+1"));
        assert_eq!(p(&f, "(x+1)*(x^2+x+1)"), p(&f, "x^3+1"));
        assert_eq!(p(&f, "1"), Poly::one(&f));
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(p(&f3, "x-1"), p(&f3, "2,1"));
        assert_eq!(p(&f3, "2*x^2 - x"), p(&f3, "0,2,2"));
        assert_eq!(p(&f3, "2*(x^2 - x)"), p(&f3, "0,1,2"));
        assert_eq!(p(&f, "(x+1)(x+1)"), p(&f, "x^2+1"));
        assert!(Poly::parse(&f, "x^").is_err());
        assert!(Poly::parse(&f, "(x+1").is_err());
        assert_eq!(format!("{}", p(&f3, "2x^2+x+2")), "2x^2+x+2");
    }

    #[test]
    fn mixed_field_ops_rejected() {
        let a = Poly::one(&gf2());
        let b = Poly::one(&FieldSpec::new(3, 1).unwrap());
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedFields);
    }
}

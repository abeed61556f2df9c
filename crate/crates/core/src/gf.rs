//! Finite fields GF(p^e) in coefficient (digit-vector) representation.
//!
//! An element of GF(p^e) = GF(p)[x]/(f) is the residue `d_0 + d_1 x + ... + d_{e-1} x^{e-1}`.
//! Internally the digit vector is packed into the integer `sum d_i p^i` (its *code*),
//! which is also the integer used for coefficients in the text and JSON forms.
//! Fields of at most 2^20 elements additionally carry log/antilog tables.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{checked_pow, is_prime, prime_factors_of_field_order};

const TABLE_LIMIT: u128 = 1 << 20;
const ADD_TABLE_LIMIT: u128 = 256;

#[derive(Debug)]
struct FieldInner {
    p: u64,
    e: u32,
    order: u128,
    /// Ascending, monic, degree e. `None` for prime fields.
    modulus: Option<Vec<u64>>,
    generator: u128,
    /// Distinct primes dividing `order - 1`.
    group_factors: Vec<u128>,
    tables: Option<Tables>,
    add_table: Option<Vec<u8>>,
}

#[derive(Debug)]
struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field GF(p^e) with a fixed modulus and multiplicative generator.
///
/// Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct FieldSpec(Arc<FieldInner>);

/// Serializable description of a field: `{p, e, modulus}` with the modulus as an
/// ascending coefficient list (empty for prime fields).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescription {
    pub p: u64,
    pub e: u32,
    pub modulus: Vec<u64>,
    pub generator: Vec<u64>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.e == other.0.e
                && self.0.modulus == other.0.modulus
                && self.0.generator == other.0.generator)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}", self.0.p, self.0.e)?;
        if let Some(m) = &self.0.modulus {
            write!(f, ", modulus {}", format_prime_poly(m))?;
        }
        write!(f, ")")
    }
}

pub(crate) fn format_prime_poly(coeffs: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        };
        terms.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

impl FieldSpec {
    /// GF(p^e) with the default modulus: the smallest primitive monic polynomial of
    /// degree `e`, ordered by the integer `sum c_i p^i` of its lower coefficients.
    pub fn new(p: u64, e: u32) -> Result<Self> {
        make_field(p, e, None, None)
    }

    /// GF(p^deg f) with an explicit monic modulus given as ascending coefficients.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Self> {
        if modulus.len() < 2 {
            return Err(Error::InvalidField("modulus must have degree >= 1".into()));
        }
        make_field(p, (modulus.len() - 1) as u32, Some(modulus), None)
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn e(&self) -> u32 {
        self.0.e
    }

    /// Number of elements p^e.
    pub fn order(&self) -> u128 {
        self.0.order
    }

    pub fn modulus(&self) -> Option<&[u64]> {
        self.0.modulus.as_deref()
    }

    pub fn generator(&self) -> FieldElement {
        self.elem(self.0.generator)
    }

    pub fn zero(&self) -> FieldElement {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElement {
        self.elem(1)
    }

    pub fn describe(&self) -> FieldDescription {
        FieldDescription {
            p: self.0.p,
            e: self.0.e,
            modulus: self.0.modulus.clone().unwrap_or_default(),
            generator: self.digits_of(self.0.generator),
        }
    }

    /// Element from base-p digits, least significant first. Missing digits are zero.
    pub fn element(&self, digits: &[u64]) -> Result<FieldElement> {
        if digits.len() > self.0.e as usize {
            return Err(Error::InvalidParameter(format!(
                "{} digits for a degree-{} field",
                digits.len(),
                self.0.e
            )));
        }
        let mut code = 0u128;
        for &d in digits.iter().rev() {
            if d >= self.0.p {
                return Err(Error::InvalidParameter(format!("digit {d} >= p = {}", self.0.p)));
            }
            code = code * self.0.p as u128 + d as u128;
        }
        Ok(self.elem(code))
    }

    /// Element from its integer code `sum d_i p^i`.
    pub fn element_from_code(&self, code: u128) -> Result<FieldElement> {
        if code >= self.0.order {
            return Err(Error::InvalidParameter(format!(
                "code {code} outside field of order {}",
                self.0.order
            )));
        }
        Ok(self.elem(code))
    }

    pub(crate) fn elem(&self, code: u128) -> FieldElement {
        FieldElement {
            field: self.clone(),
            code,
        }
    }

    #[cfg(test)]
    pub(crate) fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    pub fn digits_of(&self, code: u128) -> Vec<u64> {
        let p = self.0.p as u128;
        let mut out = Vec::with_capacity(self.0.e as usize);
        let mut c = code;
        for _ in 0..self.0.e {
            out.push((c % p) as u64);
            c /= p;
        }
        out
    }

    fn pack(&self, digits: &[u64]) -> u128 {
        let p = self.0.p as u128;
        digits.iter().rev().fold(0u128, |acc, &d| acc * p + d as u128)
    }

    // Raw arithmetic on codes. Callers guarantee codes are in range.

    pub(crate) fn add_raw(&self, a: u128, b: u128) -> u128 {
        if self.0.p == 2 {
            return a ^ b;
        }
        if let Some(t) = &self.0.add_table {
            return t[(a as usize) * self.0.order as usize + b as usize] as u128;
        }
        let p = self.0.p as u128;
        let (mut x, mut y, mut out, mut scale) = (a, b, 0u128, 1u128);
        while x > 0 || y > 0 {
            out += ((x % p + y % p) % p) * scale;
            x /= p;
            y /= p;
            scale *= p;
        }
        out
    }

    pub(crate) fn neg_raw(&self, a: u128) -> u128 {
        if self.0.p == 2 {
            return a;
        }
        let p = self.0.p as u128;
        let (mut x, mut out, mut scale) = (a, 0u128, 1u128);
        while x > 0 {
            out += ((p - x % p) % p) * scale;
            x /= p;
            scale *= p;
        }
        out
    }

    pub(crate) fn sub_raw(&self, a: u128, b: u128) -> u128 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u128, b: u128) -> u128 {
        if a == 0 || b == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let n = t.exp.len();
            let i = t.log[a as usize] as usize + t.log[b as usize] as usize;
            return t.exp[if i >= n { i - n } else { i }] as u128;
        }
        self.mul_slow(a, b)
    }

    pub(crate) fn inv_raw(&self, a: u128) -> Option<u128> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            let n = t.exp.len();
            let l = t.log[a as usize] as usize;
            return Some(t.exp[(n - l) % n] as u128);
        }
        Some(self.pow_raw(a, self.0.order - 2))
    }

    pub(crate) fn pow_raw(&self, a: u128, e: u128) -> u128 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let n = t.exp.len() as u128;
            let l = t.log[a as usize] as u128;
            return t.exp[crate::numtheory::mulmod(l, e % n, n) as usize] as u128;
        }
        let e = e % (self.0.order - 1);
        let (mut acc, mut base, mut k) = (1u128, a, e);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            k >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime subfield.
    pub(crate) fn from_int(&self, c: i64) -> u128 {
        c.rem_euclid(self.0.p as i64) as u128
    }

    fn mul_slow(&self, a: u128, b: u128) -> u128 {
        let modulus = match &self.0.modulus {
            None => return crate::numtheory::mulmod(a, b, self.0.p as u128),
            Some(m) => m,
        };
        if self.0.p == 2 {
            return binary_mulmod(a, b, modulus);
        }
        let da = self.digits_of(a);
        let db = self.digits_of(b);
        let prod = prime_poly::mul(&da, &db, self.0.p);
        let rem = prime_poly::rem(&prod, modulus, self.0.p);
        let mut digits = rem;
        digits.resize(self.0.e as usize, 0);
        self.pack(&digits)
    }

    fn element_order_is_full(&self, g: u128) -> bool {
        let n = self.0.order - 1;
        g != 0
            && self.pow_raw(g, n) == 1
            && self
                .0
                .group_factors
                .iter()
                .all(|&r| self.pow_raw(g, n / r) != 1)
    }

    /// Multiplicative order of a nonzero element.
    pub(crate) fn element_order(&self, a: u128) -> u128 {
        let mut ord = self.0.order - 1;
        for &r in &self.0.group_factors {
            while ord % r == 0 && self.pow_raw(a, ord / r) == 1 {
                ord /= r;
            }
        }
        ord
    }
}

fn binary_mulmod(a: u128, b: u128, modulus: &[u64]) -> u128 {
    let e = modulus.len() - 1;
    let m: u128 = modulus
        .iter()
        .enumerate()
        .fold(0u128, |acc, (i, &c)| if c == 1 && i < e { acc | 1 << i } else { acc });
    let top = 1u128 << (e - 1);
    let mask = if e == 128 { u128::MAX } else { (1u128 << e) - 1 };
    let (mut acc, mut x, mut y) = (0u128, a, b);
    while y > 0 {
        if y & 1 == 1 {
            acc ^= x;
        }
        y >>= 1;
        let carry = x & top != 0;
        x = (x << 1) & mask;
        if carry {
            x ^= m;
        }
    }
    acc
}

/// Builds GF(p^e).
///
/// Without a modulus the smallest primitive polynomial is used and the generator is
/// the class of `x`. With a primitive modulus the generator is again the class of `x`;
/// with an irreducible but imprimitive one the generator is the first element, in
/// increasing code order, of full multiplicative order.
pub fn make_field(
    p: u64,
    e: u32,
    modulus: Option<&[u64]>,
    generator: Option<&[u64]>,
) -> Result<FieldSpec> {
    if !is_prime(p as u128) {
        return Err(Error::NotPrime(p));
    }
    if e == 0 {
        return Err(Error::InvalidField("extension degree must be >= 1".into()));
    }
    let order = checked_pow(p as u128, e).ok_or(Error::FieldTooLarge { p, e })?;
    let group_factors = prime_factors_of_field_order(p, e)?;

    let modulus = match modulus {
        Some(m) => {
            let m = validate_modulus(p, e, m)?;
            if e > 1 && !prime_poly::is_irreducible(&m, p) {
                return Err(Error::ReducibleModulus(format_prime_poly(&m)));
            }
            (e > 1).then_some(m)
        }
        None if e == 1 => None,
        None => Some(smallest_primitive(p, e, &group_factors)),
    };

    let add_table = (p != 2 && order <= ADD_TABLE_LIMIT).then(|| {
        let q = order as usize;
        let mut t = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                let mut out = 0u128;
                let (mut x, mut y, mut scale) = (a as u128, b as u128, 1u128);
                for _ in 0..e {
                    out += ((x % p as u128 + y % p as u128) % p as u128) * scale;
                    x /= p as u128;
                    y /= p as u128;
                    scale *= p as u128;
                }
                t[a * q + b] = out as u8;
            }
        }
        t
    });

    let mut inner = FieldInner {
        p,
        e,
        order,
        modulus,
        generator: 0,
        group_factors,
        tables: None,
        add_table,
    };
    let probe = FieldSpec(Arc::new(FieldInner {
        modulus: inner.modulus.clone(),
        group_factors: inner.group_factors.clone(),
        add_table: inner.add_table.clone(),
        tables: None,
        ..inner
    }));

    let gen_code = match generator {
        Some(digits) => {
            let g = probe.element(digits)?.code;
            if !probe.element_order_is_full(g) {
                return Err(Error::NotAGenerator {
                    order: if g == 0 { 0 } else { probe.element_order(g) },
                    expected: order - 1,
                });
            }
            g
        }
        None => {
            let x = if e == 1 { None } else { Some(p as u128) };
            match x.filter(|&x| probe.element_order_is_full(x)) {
                Some(x) => x,
                None => (1..order)
                    .find(|&c| probe.element_order_is_full(c))
                    .expect("multiplicative group of a finite field is cyclic"),
            }
        }
    };
    inner.generator = gen_code;

    if order <= TABLE_LIMIT {
        let n = (order - 1) as usize;
        let mut exp = vec![0u32; n];
        let mut log = vec![0u32; order as usize];
        let mut x = 1u128;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = x as u32;
            log[x as usize] = i as u32;
            x = probe.mul_slow(x, gen_code);
        }
        if x != 1 {
            return Err(Error::Inconsistent("generator table does not close".into()));
        }
        inner.tables = Some(Tables { exp, log });
    }
    Ok(FieldSpec(Arc::new(inner)))
}

fn validate_modulus(p: u64, e: u32, m: &[u64]) -> Result<Vec<u64>> {
    if m.len() != e as usize + 1 {
        return Err(Error::InvalidField(format!(
            "modulus {} does not have degree {e}",
            format_prime_poly(m)
        )));
    }
    if m[e as usize] != 1 {
        return Err(Error::InvalidField(format!(
            "modulus {} is not monic",
            format_prime_poly(m)
        )));
    }
    if let Some(&c) = m.iter().find(|&&c| c >= p) {
        return Err(Error::InvalidField(format!("modulus coefficient {c} >= p = {p}")));
    }
    Ok(m.to_vec())
}

fn smallest_primitive(p: u64, e: u32, group_factors: &[u128]) -> Vec<u64> {
    let order = (p as u128).pow(e);
    // candidates: x^e + (lower part encoded by c); constant term must be nonzero
    for c in 1..order {
        let mut m = Vec::with_capacity(e as usize + 1);
        let mut x = c;
        for _ in 0..e {
            m.push((x % p as u128) as u64);
            x /= p as u128;
        }
        m.push(1);
        if m[0] == 0 {
            continue;
        }
        if prime_poly::is_primitive(&m, p, group_factors) {
            return m;
        }
    }
    unreachable!("primitive polynomials exist in every degree")
}

/// Dense polynomial arithmetic over the prime field GF(p), used only for
/// modulus validation and the large-field multiplication fallback.
pub(crate) mod prime_poly {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    fn inv(a: u64, p: u64) -> u64 {
        crate::numtheory::powmod(a as u128, (p - 2) as u128, p as u128) as u64
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv(m[dm], p);
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            if c != 0 {
                for (j, &mj) in m.iter().enumerate() {
                    let idx = top - dm + j;
                    r[idx] = (r[idx] + p - c * mj % p) % p;
                }
            }
            r = trim(r);
        }
        r
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// x^(p^k) mod m by repeated p-th powering.
    fn frobenius_x(m: &[u64], p: u64, k: u32) -> Vec<u64> {
        let mut x = rem(&[0, 1], m, p);
        for _ in 0..k {
            x = pow_mod(&x, p as u128, m, p);
        }
        x
    }

    pub fn pow_mod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(&mul(&acc, &b, p), m, p);
            }
            b = rem(&mul(&b, &b, p), m, p);
            e >>= 1;
        }
        acc
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(m: &[u64], p: u64) -> bool {
        let e = (m.len() - 1) as u32;
        if e == 1 {
            return true;
        }
        if m[0] == 0 {
            return false;
        }
        let x = rem(&[0, 1], m, p);
        if frobenius_x(m, p, e) != x {
            return false;
        }
        let primes: Vec<u32> = (2..=e)
            .filter(|&r| e % r == 0 && (2..r).all(|d| r % d != 0))
            .collect();
        primes.into_iter().all(|r| {
            let h = sub(&frobenius_x(m, p, e / r), &x, p);
            gcd(m, &h, p).len() == 1
        })
    }

    pub fn is_primitive(m: &[u64], p: u64, group_factors: &[u128]) -> bool {
        if !is_irreducible(m, p) {
            return false;
        }
        let n = (p as u128).pow((m.len() - 1) as u32) - 1;
        group_factors
            .iter()
            .all(|&r| pow_mod(&[0, 1], n / r, m, p) != vec![1])
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    code: u128,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.digits())
    }
}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.code.hash(state);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Base-p digits, least significant first, always of length e.
    pub fn digits(&self) -> Vec<u64> {
        self.field.digits_of(self.code)
    }

    pub fn code(&self) -> u128 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::MixedFields)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.add_raw(self.code, other.code)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.sub_raw(self.code, other.code)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.field.elem(self.field.mul_raw(self.code, other.code)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        let inv = self.field.inv_raw(other.code).ok_or(Error::DivisionByZero)?;
        Ok(self.field.elem(self.field.mul_raw(self.code, inv)))
    }

    pub fn neg(&self) -> FieldElement {
        self.field.elem(self.field.neg_raw(self.code))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let inv = self.field.inv_raw(self.code).ok_or(Error::DivisionByZero)?;
        Ok(self.field.elem(inv))
    }

    /// Any integer exponent; negative exponents go through the inverse and `0^0 = 1`.
    pub fn pow(&self, e: i64) -> Result<FieldElement> {
        if e == 0 {
            return Ok(self.field.one());
        }
        if self.code == 0 {
            return if e > 0 { Ok(self.clone()) } else { Err(Error::DivisionByZero) };
        }
        let n = self.field.order() - 1;
        let k = (e as i128).rem_euclid(n as i128) as u128;
        Ok(self.field.elem(self.field.pow_raw(self.code, k)))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self) -> Result<u128> {
        if self.code == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.field.element_order(self.code))
    }

    pub fn frobenius(&self) -> FieldElement {
        self.field.elem(self.field.pow_raw(self.code, self.field.p() as u128))
    }
}

/// Binary field operation on two elements of the same field.
pub fn arith(a: &FieldElement, b: &FieldElement, op: ArithOp) -> Result<FieldElement> {
    match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_moduli() {
        let f = FieldSpec::with_modulus(2, &[1, 0, 1, 0, 0, 1]).unwrap();
        assert_eq!(f.order(), 32);
        assert_eq!(f.generator().digits(), vec![0, 1, 0, 0, 0]);
        let a = f.generator();
        assert_eq!(a.pow(31).unwrap(), f.one());
        assert_ne!(a.pow(1).unwrap(), f.one());

        let g = FieldSpec::with_modulus(2, &[1, 1, 0, 1, 1, 0, 1]).unwrap();
        assert_eq!(g.order(), 64);
        assert_eq!(g.generator().code(), 2);
    }

    #[test]
    fn prime_field_generator() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f.generator(), f.one());
        let f3 = FieldSpec::new(3, 1).unwrap();
        let two = f3.element(&[2]).unwrap();
        assert_eq!(two.mul(&two).unwrap(), f3.one());
        assert_eq!(FieldSpec::new(7, 1).unwrap().generator().code(), 3);
    }

    #[test]
    fn modulus_relation() {
        let f = FieldSpec::with_modulus(2, &[1, 1, 0, 0, 1]).unwrap();
        let a = f.generator();
        assert_eq!(a.pow(4).unwrap().digits(), vec![1, 1, 0, 0]);
    }

    #[test]
    fn default_moduli() {
        assert_eq!(FieldSpec::new(2, 4).unwrap().modulus().unwrap(), &[1, 1, 0, 0, 1]);
        assert_eq!(FieldSpec::new(2, 5).unwrap().modulus().unwrap(), &[1, 0, 1, 0, 0, 1]);
        assert_eq!(FieldSpec::new(2, 2).unwrap().modulus().unwrap(), &[1, 1, 1]);
        assert_eq!(FieldSpec::new(3, 2).unwrap().modulus().unwrap(), &[2, 1, 1]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(matches!(
            FieldSpec::with_modulus(2, &[1, 0, 0, 0, 1]),
            Err(Error::ReducibleModulus(_))
        ));
        // x^4+x^3+x^2+x+1 is irreducible but x has order 5
        let f = make_field(2, 4, Some(&[1, 1, 1, 1, 1]), None).unwrap();
        assert_eq!(f.generator().order().unwrap(), 15);
        assert!(matches!(
            make_field(2, 4, Some(&[1, 1, 1, 1, 1]), Some(&[0, 1])),
            Err(Error::NotAGenerator { order: 5, expected: 15 })
        ));
    }

    #[test]
    fn division_by_zero() {
        let f = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f.one().div(&f.zero()).unwrap_err(), Error::DivisionByZero);
        assert_eq!(f.zero().inv().unwrap_err(), Error::DivisionByZero);
        assert_eq!(f.zero().pow(0).unwrap(), f.one());
    }

    #[test]
    fn mixed_fields() {
        let a = FieldSpec::new(2, 3).unwrap().one();
        let b = FieldSpec::new(2, 4).unwrap().one();
        assert_eq!(a.add(&b).unwrap_err(), Error::MixedFields);
    }

    #[test]
    fn negative_powers() {
        let f = FieldSpec::new(3, 3).unwrap();
        let a = f.generator();
        assert_eq!(a.pow(-1).unwrap(), a.inv().unwrap());
        assert_eq!(a.pow(-5).unwrap().mul(&a.pow(5).unwrap()).unwrap(), f.one());
    }

    #[test]
    fn generator_order_small_fields() {
        for (p, e) in [(2u64, 1u32), (2, 2), (2, 3), (2, 8), (2, 16), (3, 1), (3, 4), (3, 9), (5, 3), (7, 2), (4099, 1)] {
            let f = FieldSpec::new(p, e).unwrap();
            assert_eq!(f.generator().order().unwrap(), f.order() - 1, "GF({p}^{e})");
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = FieldSpec::new(3, 52).unwrap();
        assert!(!f.has_tables());
        let a = f.generator();
        let n = (f.order() - 1) as i64;
        let _ = n;
        assert_eq!(f.elem(f.pow_raw(a.code(), f.order() - 1)), f.one());
        let b = FieldSpec::new(2, 60).unwrap();
        assert_eq!(b.generator().order().unwrap(), b.order() - 1);
    }

    #[test]
    fn slow_path_agrees_with_tables() {
        let f = FieldSpec::new(3, 5).unwrap();
        for a in (0..f.order()).step_by(7) {
            for b in (0..f.order()).step_by(11) {
                assert_eq!(f.mul_raw(a, b), if a == 0 || b == 0 { 0 } else { f.mul_slow(a, b) });
            }
        }
        let g = FieldSpec::new(2, 9).unwrap();
        for a in 1..g.order() {
            assert_eq!(g.mul_raw(a, 77), g.mul_slow(a, 77));
        }
    }
}

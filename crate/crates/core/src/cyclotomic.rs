//! Splitting fields of x^n - 1, minimal polynomials of powers of a primitive n-th
//! root of unity, and the coset-indexed factorization of x^n - 1.
//!
//! Small splitting fields (at most 2^20 elements, or any field with a pinned
//! modulus) are handled directly: `m_s(x)` is the product of `x - beta^i` over the
//! coset, computed in GF(q^m) and projected back to GF(q). Larger ones use a tower
//! GF(q)[y]/(F(y)) and recover `m_s` from the first linear relation among the
//! powers of `beta^s`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::cosets::CosetPartition;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::linalg::Matrix;
use crate::numtheory::{checked_pow, ord_mod, prime_factors, prime_power};
use crate::poly::Poly;

const DIRECT_LIMIT: u128 = 1 << 20;

/// Caches fields by `(p, e)` and applies modulus overrides.
#[derive(Debug, Default)]
pub struct FieldRegistry {
    overrides: BTreeMap<(u64, u32), Vec<u64>>,
    fields: Mutex<HashMap<(u64, u32), FieldSpec>>,
    splitting: Mutex<HashMap<(u64, u64), Arc<SplittingField>>>,
}

impl Clone for FieldRegistry {
    fn clone(&self) -> Self {
        FieldRegistry {
            overrides: self.overrides.clone(),
            fields: Mutex::new(self.fields.lock().unwrap().clone()),
            splitting: Mutex::new(self.splitting.lock().unwrap().clone()),
        }
    }
}

impl FieldRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// The two moduli used by the worked examples for GF(32) and GF(64).
    pub fn paper() -> Self {
        Self::new()
            .with_override(2, &[1, 0, 1, 0, 0, 1])
            .and_then(|r| r.with_override(2, &[1, 1, 0, 1, 1, 0, 1]))
            .expect("pinned moduli are primitive")
    }

    /// Pins the modulus of GF(p^deg). The modulus must be irreducible.
    pub fn with_override(mut self, p: u64, modulus: &[u64]) -> Result<Self> {
        let field = FieldSpec::with_modulus(p, modulus)?;
        let key = (p, field.e());
        self.overrides.insert(key, modulus.to_vec());
        self.fields.get_mut().unwrap().insert(key, field);
        self.splitting.get_mut().unwrap().clear();
        Ok(self)
    }

    pub fn overrides(&self) -> &BTreeMap<(u64, u32), Vec<u64>> {
        &self.overrides
    }

    pub fn field(&self, p: u64, e: u32) -> Result<FieldSpec> {
        if let Some(f) = self.fields.lock().unwrap().get(&(p, e)) {
            return Ok(f.clone());
        }
        let f = match self.overrides.get(&(p, e)) {
            Some(m) => FieldSpec::with_modulus(p, m)?,
            None => FieldSpec::new(p, e)?,
        };
        self.fields.lock().unwrap().insert((p, e), f.clone());
        Ok(f)
    }

    /// GF(q) for a prime power q.
    pub fn base(&self, q: u64) -> Result<FieldSpec> {
        let (p, e) = prime_power(q)?;
        self.field(p, e)
    }

    pub fn splitting(&self, n: u64, q: u64) -> Result<Arc<SplittingField>> {
        if let Some(s) = self.splitting.lock().unwrap().get(&(n, q)) {
            return Ok(s.clone());
        }
        let s = Arc::new(SplittingField::build(self, n, q, false)?);
        self.splitting.lock().unwrap().insert((n, q), s.clone());
        Ok(s)
    }
}

/// A primitive n-th root of unity `beta` over GF(q), with its minimal polynomials.
#[derive(Debug)]
pub struct SplittingField {
    n: u64,
    q: u64,
    m: u32,
    base: FieldSpec,
    cosets: CosetPartition,
    engine: Engine,
    minpolys: BTreeMap<u64, Poly>,
}

#[derive(Debug)]
enum Engine {
    Direct(Direct),
    Tower(Tower),
}

#[derive(Debug)]
struct Direct {
    ext: FieldSpec,
    beta: u128,
    /// ext code -> base code, on the embedded copy of the base field
    project: HashMap<u128, u128>,
}

#[derive(Debug)]
struct Tower {
    base: FieldSpec,
    /// monic irreducible of degree m over the base
    modulus: Poly,
    beta: Poly,
}

impl SplittingField {
    fn build(reg: &FieldRegistry, n: u64, q: u64, force_tower: bool) -> Result<Self> {
        let base = reg.base(q)?;
        let cosets = CosetPartition::new(n, q)?;
        let m = if n == 1 { 1 } else { ord_mod(n, q)? };
        let (p, e) = (base.p(), base.e());
        let ext_e = e.checked_mul(m).ok_or(Error::FieldTooLarge { p, e: u32::MAX })?;
        let small = checked_pow(p as u128, ext_e).is_some_and(|o| o <= DIRECT_LIMIT);
        let pinned = reg.overrides.contains_key(&(p, ext_e));
        let engine = if !force_tower && (small || pinned) {
            Engine::Direct(Direct::new(&base, reg.field(p, ext_e)?, n)?)
        } else {
            Engine::Tower(Tower::new(&base, n, m)?)
        };
        let mut sf = SplittingField {
            n,
            q,
            m,
            base,
            cosets,
            engine,
            minpolys: BTreeMap::new(),
        };
        let mut minpolys = BTreeMap::new();
        for &s in &sf.cosets.gamma {
            minpolys.insert(s, sf.compute_minpoly(s)?);
        }
        sf.minpolys = minpolys;
        Ok(sf)
    }

    /// Forces the tower engine; used to cross-check the two engines.
    pub fn tower(reg: &FieldRegistry, n: u64, q: u64) -> Result<Self> {
        Self::build(reg, n, q, true)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// `ord_n(q)`, the degree of the splitting field over GF(q).
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn base(&self) -> &FieldSpec {
        &self.base
    }

    pub fn cosets(&self) -> &CosetPartition {
        &self.cosets
    }

    pub fn is_direct(&self) -> bool {
        matches!(self.engine, Engine::Direct(_))
    }

    /// The extension field and `beta`, when the direct engine is in use.
    pub fn ext(&self) -> Option<(&FieldSpec, FieldElement)> {
        match &self.engine {
            Engine::Direct(d) => Some((&d.ext, d.ext.element_from_code(d.beta).ok()?)),
            Engine::Tower(_) => None,
        }
    }

    /// `m_s(x)` for any `s`; equal for all members of a coset.
    pub fn minimal_polynomial(&self, s: i64) -> &Poly {
        let s = s.rem_euclid(self.n as i64) as u64;
        &self.minpolys[&self.cosets.leader(s)]
    }

    /// `(leader, m_leader)` for every coset leader, ascending.
    pub fn factors(&self) -> impl Iterator<Item = (u64, &Poly)> {
        self.minpolys.iter().map(|(&s, p)| (s, p))
    }

    /// Product of the minimal polynomials of the cosets meeting `exponents`.
    pub fn generator_for(&self, exponents: impl IntoIterator<Item = i64>) -> Result<Poly> {
        let leaders: std::collections::BTreeSet<u64> = exponents
            .into_iter()
            .map(|s| self.cosets.leader(s.rem_euclid(self.n as i64) as u64))
            .collect();
        Poly::product(&self.base, leaders.iter().map(|s| &self.minpolys[s]))
    }

    /// Exponents `i` with `g(beta^i) = 0`, ascending. `g` must divide x^n - 1.
    pub fn defining_set(&self, g: &Poly) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        for (&s, f) in &self.minpolys {
            if g.rem(f)?.is_zero() {
                out.extend_from_slice(self.cosets.coset_of(s));
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    fn compute_minpoly(&self, s: u64) -> Result<Poly> {
        match &self.engine {
            Engine::Direct(d) => d.minpoly(&self.base, &self.cosets, s),
            Engine::Tower(t) => t.minpoly(self.cosets.size(s), s),
        }
    }
}

impl Direct {
    fn new(base: &FieldSpec, ext: FieldSpec, n: u64) -> Result<Self> {
        let qm1 = ext.order() - 1;
        if qm1 % n as u128 != 0 {
            return Err(Error::Inconsistent(format!("{n} does not divide |GF*| = {qm1}")));
        }
        let beta = ext.pow_raw(ext.generator().code(), qm1 / n as u128);
        let project = projection(base, &ext)?;
        Ok(Direct { ext, beta, project })
    }

    fn minpoly(&self, base: &FieldSpec, cosets: &CosetPartition, s: u64) -> Result<Poly> {
        let ext = &self.ext;
        let roots: Vec<u128> = cosets
            .coset_of(s)
            .iter()
            .map(|&i| ext.pow_raw(self.beta, i as u128))
            .collect();
        let linear: Vec<Poly> = roots.iter().map(|&r| Poly::linear(ext, r)).collect();
        let f = Poly::product(ext, &linear)?;
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                self.project.get(c).copied().ok_or_else(|| {
                    Error::Inconsistent(format!("coefficient of m_{s} lies outside the base field"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_raw(base, coeffs))
    }
}

fn projection(base: &FieldSpec, ext: &FieldSpec) -> Result<HashMap<u128, u128>> {
    let embed = embedding(base, ext)?;
    Ok(embed.into_iter().enumerate().map(|(c, x)| (x, c as u128)).collect())
}

/// Maps every element of the base field GF(p^e) into the extension GF(p^{em}),
/// indexed by base code. The image of the base generator is a root of the base
/// modulus taken from the subfield of order p^e.
fn embedding(base: &FieldSpec, ext: &FieldSpec) -> Result<Vec<u128>> {
    if base.p() != ext.p() || ext.e() % base.e() != 0 {
        return Err(Error::InvalidField(format!(
            "GF({}^{}) is not a subfield of GF({}^{})",
            base.p(),
            base.e(),
            ext.p(),
            ext.e()
        )));
    }
    let q = base.order();
    if base.e() == 1 {
        return Ok((0..q).map(|c| ext.from_int(c as i64)).collect());
    }
    let modulus: Vec<u128> = base.modulus().expect("e > 1").iter().map(|&c| c as u128).collect();
    let modulus = Poly::from_codes(ext, &modulus)?;
    // subfield of order q: {0} and the powers of alpha^((Q-1)/(q-1))
    let step = (ext.order() - 1) / (q - 1);
    let gamma = ext.pow_raw(ext.generator().code(), step);
    let rho = (1..q)
        .map(|k| ext.pow_raw(gamma, k))
        .find(|&r| modulus.eval_raw(r) == 0)
        .ok_or_else(|| Error::Inconsistent("base modulus has no root in the extension".into()))?;
    let mut out = Vec::with_capacity(q as usize);
    for c in 0..q {
        let digits = base.digits_of(c);
        let mut acc = 0u128;
        for &d in digits.iter().rev() {
            acc = ext.add_raw(ext.mul_raw(acc, rho), ext.from_int(d as i64));
        }
        out.push(acc);
    }
    Ok(out)
}

impl Tower {
    fn new(base: &FieldSpec, n: u64, m: u32) -> Result<Self> {
        let modulus = smallest_irreducible(base, m as usize)?;
        let q = BigUint::from(base.order());
        let exponent = (q.pow(m) - 1u32) / n;
        let n_factors = prime_factors(n as u128);
        let q_order = base.order();
        // candidates y + c, y^2 + ..., in increasing code order
        for code in q_order.. {
            let a = poly_from_code(base, code);
            let b = pow_mod(&a, &exponent, &modulus)?;
            if b.is_zero() {
                continue;
            }
            let full = n_factors.iter().all(|&r| {
                let e = BigUint::from(n as u128 / r);
                pow_mod(&b, &e, &modulus).map(|v| v != Poly::one(base)).unwrap_or(false)
            });
            if full {
                return Ok(Tower {
                    base: base.clone(),
                    modulus,
                    beta: b,
                });
            }
        }
        unreachable!("the multiplicative group of GF(q^m) contains elements of every order dividing q^m - 1")
    }

    fn minpoly(&self, degree: usize, s: u64) -> Result<Poly> {
        let f = &self.base;
        let m = self.modulus.degree().expect("nonzero modulus");
        let gamma = pow_mod(&self.beta, &BigUint::from(s), &self.modulus)?;
        let mut powers = Vec::with_capacity(degree + 1);
        let mut x = Poly::one(f);
        for _ in 0..=degree {
            powers.push(x.clone());
            x = x.mul(&gamma)?.rem(&self.modulus)?;
        }
        let mut a = Matrix::zeros(m, degree);
        for (j, p) in powers[..degree].iter().enumerate() {
            for i in 0..m {
                a.set(i, j, p.coeff(i));
            }
        }
        let rhs: Vec<u128> = (0..m).map(|i| f.neg_raw(powers[degree].coeff(i))).collect();
        let sol = a.solve(&rhs, f).ok_or_else(|| {
            Error::Inconsistent(format!("no linear relation of degree {degree} for beta^{s}"))
        })?;
        let mut coeffs = sol;
        coeffs.push(1);
        Ok(Poly::from_raw(f, coeffs))
    }
}

fn poly_from_code(f: &FieldSpec, mut code: u128) -> Poly {
    let q = f.order();
    let mut coeffs = Vec::new();
    while code > 0 {
        coeffs.push(code % q);
        code /= q;
    }
    Poly::from_raw(f, coeffs)
}

fn pow_mod(a: &Poly, e: &BigUint, modulus: &Poly) -> Result<Poly> {
    let mut acc = Poly::one(a.field());
    if e.is_zero() {
        return Ok(acc);
    }
    let base = a.rem(modulus)?;
    for i in (0..e.bits()).rev() {
        acc = acc.mul(&acc)?.rem(modulus)?;
        if e.bit(i) {
            acc = acc.mul(&base)?.rem(modulus)?;
        }
    }
    Ok(acc)
}

/// Irreducibility over GF(q) by distinct-degree testing: no factor of degree
/// `<= deg/2` means irreducible.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let Some(d) = f.degree() else {
        return Ok(false);
    };
    if d == 0 {
        return Ok(false);
    }
    let q = BigUint::from(f.field().order());
    let x = Poly::monomial(f.field(), 1);
    let mut h = x.clone();
    for _ in 0..d / 2 {
        h = pow_mod(&h, &q, f)?;
        if !h.sub(&x)?.gcd(f)?.degree().is_some_and(|g| g == 0) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn smallest_irreducible(base: &FieldSpec, m: usize) -> Result<Poly> {
    let q = base.order();
    if m == 1 {
        return Ok(Poly::monomial(base, 1));
    }
    for code in 1u128.. {
        if code % q == 0 {
            continue;
        }
        let mut coeffs = poly_from_code(base, code).coeffs().to_vec();
        if coeffs.len() > m {
            break;
        }
        coeffs.resize(m, 0);
        coeffs.push(1);
        let f = Poly::from_raw(base, coeffs);
        if is_irreducible(&f)? {
            return Ok(f);
        }
    }
    Err(Error::Inconsistent(format!("no irreducible polynomial of degree {m} found")))
}

/// Minimal polynomial over `base` of `beta^s`, where `beta` lies in `ext` and has
/// multiplicative order `n`. The product is formed in `ext` and every coefficient
/// must land in the embedded copy of `base`.
pub fn minimal_polynomial(base: &FieldSpec, beta: &FieldElement, s: u64) -> Result<Poly> {
    let ext = beta.field();
    let n = beta.order()?;
    let n = u64::try_from(n).map_err(|_| Error::InvalidParameter("root order too large".into()))?;
    if s >= n {
        return Err(Error::InvalidParameter(format!("s = {s} not in Z_{n}")));
    }
    let q = u64::try_from(base.order()).map_err(|_| Error::InvalidParameter("base too large".into()))?;
    let cosets = CosetPartition::new(n, q)?;
    let direct = Direct {
        ext: ext.clone(),
        beta: beta.code(),
        project: projection(base, ext)?,
    };
    direct.minpoly(base, &cosets, s)
}

/// Irreducible factors of x^n - 1 over GF(q), one per coset leader, with their
/// product checked against x^n - 1.
pub fn factor_xn_minus_1(reg: &FieldRegistry, n: u64, q: u64) -> Result<Vec<(u64, Poly)>> {
    let sf = reg.splitting(n, q)?;
    let factors: Vec<(u64, Poly)> = sf.factors().map(|(s, p)| (s, p.clone())).collect();
    let product = Poly::product(sf.base(), factors.iter().map(|(_, p)| p))?;
    if product != Poly::x_n_minus_1(sf.base(), n as usize) {
        return Err(Error::Inconsistent(format!(
            "product of minimal polynomials differs from x^{n} - 1"
        )));
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> FieldSpec {
        FieldSpec::new(2, 1).unwrap()
    }

    #[test]
    fn factors_of_x15_minus_1() {
        let reg = FieldRegistry::new();
        let f = factor_xn_minus_1(&reg, 15, 2).unwrap();
        let degrees: Vec<usize> = f.iter().map(|(_, p)| p.degree().unwrap()).collect();
        assert_eq!(degrees, vec![1, 4, 4, 2, 4]);
        let sf = reg.splitting(15, 2).unwrap();
        let b = gf2();
        assert_eq!(sf.minimal_polynomial(1), &Poly::parse(&b, "x^4+x+1").unwrap());
        assert_eq!(sf.minimal_polynomial(0), &Poly::parse(&b, "x+1").unwrap());
        assert_eq!(sf.minimal_polynomial(5), &Poly::parse(&b, "x^2+x+1").unwrap());
        assert_eq!(sf.minimal_polynomial(7), &Poly::parse(&b, "x^4+x^3+1").unwrap());
        assert_eq!(sf.minimal_polynomial(3), &Poly::parse(&b, "x^4+x^3+x^2+x+1").unwrap());
    }

    #[test]
    fn small_factorizations() {
        let reg = FieldRegistry::new();
        let f = factor_xn_minus_1(&reg, 3, 2).unwrap();
        assert_eq!(f[1].1, Poly::parse(&gf2(), "x^2+x+1").unwrap());
        let f = factor_xn_minus_1(&reg, 2, 3).unwrap();
        let gf3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(f[0].1, Poly::parse(&gf3, "x-1").unwrap());
        assert_eq!(f[1].1, Poly::parse(&gf3, "x+1").unwrap());
        assert!(matches!(factor_xn_minus_1(&reg, 6, 3), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn free_minimal_polynomial() {
        let gf16 = FieldSpec::with_modulus(2, &[1, 1, 0, 0, 1]).unwrap();
        let beta = gf16.generator();
        let m1 = minimal_polynomial(&gf2(), &beta, 1).unwrap();
        assert_eq!(m1, Poly::parse(&gf2(), "x^4+x+1").unwrap());
        assert_eq!(minimal_polynomial(&gf2(), &beta, 0).unwrap(), Poly::parse(&gf2(), "x+1").unwrap());
    }

    #[test]
    fn quaternary_base_is_embedded() {
        let reg = FieldRegistry::new();
        let f = factor_xn_minus_1(&reg, 85, 4).unwrap();
        assert!(f.iter().all(|(_, p)| p.field().order() == 4));
        let f = factor_xn_minus_1(&reg, 5, 4).unwrap();
        assert_eq!(f.len(), 3);
    }

    #[test]
    fn tower_agrees_with_direct() {
        let reg = FieldRegistry::new();
        for (n, q) in [(15u64, 2u64), (21, 2), (13, 3), (40, 3), (17, 4), (31, 5), (9, 2)] {
            let direct = reg.splitting(n, q).unwrap();
            assert!(direct.is_direct());
            let tower = SplittingField::tower(&reg, n, q).unwrap();
            let mut a: Vec<Vec<u128>> = direct.factors().map(|(_, p)| p.coeffs().to_vec()).collect();
            let mut b: Vec<Vec<u128>> = tower.factors().map(|(_, p)| p.coeffs().to_vec()).collect();
            a.sort();
            b.sort();
            assert_eq!(a, b, "n = {n}, q = {q}");
        }
    }

    #[test]
    fn large_order_uses_tower() {
        let reg = FieldRegistry::new();
        let sf = reg.splitting(197, 2).unwrap();
        assert!(!sf.is_direct());
        assert_eq!(sf.m(), 196);
        factor_xn_minus_1(&reg, 197, 2).unwrap();
    }

    #[test]
    fn irreducibility() {
        let b = gf2();
        assert!(is_irreducible(&Poly::parse(&b, "x^4+x+1").unwrap()).unwrap());
        assert!(!is_irreducible(&Poly::parse(&b, "x^4+x^2+1").unwrap()).unwrap());
        assert!(!is_irreducible(&Poly::parse(&b, "x^4+x^3+x^2+1").unwrap()).unwrap());
    }
}

use serde::{Deserialize, Serialize};

use super::{pow_u64, Construction};
use crate::codes::CyclicCode;
use crate::cosets::digit_sum;
use crate::cyclotomic::FieldRegistry;
use crate::error::{Error, Result};
use crate::numtheory::binomial;
use crate::poly::Poly;

/// Order `ell = ell1 (q-1) + ell0` of a punctured generalized Reed-Muller code of
/// length `q^m - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrmSpec {
    pub q: u64,
    pub m: u32,
    pub ell: u64,
}

impl GrmSpec {
    pub fn ell1(&self) -> u64 {
        self.ell / (self.q - 1)
    }

    pub fn ell0(&self) -> u64 {
        self.ell % (self.q - 1)
    }

    /// Smallest integer of q-weight `(q-1)m - ell`: `(q - ell0) q^(m-ell1-1) - 1`.
    pub fn h(&self) -> Result<u64> {
        let e = self.m as u64 - self.ell1() - 1;
        Ok((self.q - self.ell0()) * pow_u64(self.q, e as u32)? - 1)
    }

    /// `ell < q(m-1)`, and `ell < (q-1)m` so that `g_R` has at least one root
    /// and the exponent in `h` is nonnegative.
    fn validate(&self) -> Result<()> {
        if self.q < 2 || self.m < 1 {
            return Err(Error::InvalidParameter("need q >= 2 and m >= 1".into()));
        }
        let m = self.m as u64;
        if self.ell >= self.q * (m - 1) {
            return Err(Error::InvalidParameter(format!(
                "order {} must be below q(m-1) = {}",
                self.ell,
                self.q * (m - 1)
            )));
        }
        if self.ell >= (self.q - 1) * m {
            return Err(Error::InvalidParameter(format!(
                "order {} must be below (q-1)m = {}",
                self.ell,
                (self.q - 1) * m
            )));
        }
        Ok(())
    }

    fn label(&self, reversible: bool) -> String {
        let tag = if reversible { "R" } else { "GRM*" };
        format!("{tag}({},{},{})", self.q, self.m, self.ell)
    }
}

/// `sum_{i<=ell} sum_{j<=m} (-1)^j C(m,j) C(i-jq+m-1, i-jq)`; a binomial with a
/// negative argument is zero.
pub fn eq9_dimension(q: u64, m: u32, ell: u64) -> i128 {
    let (q, m) = (q as i64, m as i64);
    let mut total = 0i128;
    for i in 0..=ell as i64 {
        for j in 0..=m {
            let r = i - j * q;
            if r < 0 {
                continue;
            }
            let term = binomial(m, j) * binomial(r + m - 1, r);
            total += if j % 2 == 0 { term } else { -term };
        }
    }
    total
}

/// `g_R(x) = prod (x - alpha^j)` over `1 <= j <= n-1` with `w_q(j) < (q-1)m - ell`.
fn grm_generator(spec: &GrmSpec, reg: &FieldRegistry) -> Result<Poly> {
    let n = pow_u64(spec.q, spec.m)? - 1;
    let sf = reg.splitting(n, spec.q)?;
    let bound = (spec.q - 1) * spec.m as u64 - spec.ell;
    let exps = (1..n).filter(|&j| digit_sum(j, spec.q) < bound).map(|j| j as i64);
    sf.generator_for(exps)
}

/// The punctured generalized Reed-Muller code. The closed-form dimension is checked
/// against the degree and the claimed minimum distance `h` is attached.
pub fn grm_star(spec: GrmSpec, reg: &FieldRegistry) -> Result<Construction> {
    spec.validate()?;
    let n = pow_u64(spec.q, spec.m)? - 1;
    let code = CyclicCode::from_generator(n as usize, grm_generator(&spec, reg)?)?;
    let mut c = Construction::new(spec.label(false), code);
    c.predict_k("GRM dimension formula", eq9_dimension(spec.q, spec.m, spec.ell) as i64)?;
    let h = spec.h()?;
    c.bound(h, "consecutive roots 1..h-1");
    c.d_claim = Some(h);
    c.params.insert("ell1".into(), spec.ell1() as i64);
    c.params.insert("ell0".into(), spec.ell0() as i64);
    c.params.insert("h".into(), h as i64);
    Ok(c)
}

/// `(x-1) lcm(g_R, g_R*)`. In the regime
/// `q(m-1) - 2 >= ell >= 1 + (q-1)m - ceil((q-1)m/2)` the factors are coprime,
/// `k = 2 Eq9 - q^m` and `d >= 2h`.
pub fn reversible_grm(spec: GrmSpec, reg: &FieldRegistry) -> Result<Construction> {
    spec.validate()?;
    let (q, m, ell) = (spec.q as i64, spec.m as i64, spec.ell as i64);
    let n = pow_u64(spec.q, spec.m)? - 1;
    let f = reg.base(spec.q)?;
    let g_r = grm_generator(&spec, reg)?;
    let g_star = g_r.reciprocal()?;
    let x_minus_1 = Poly::parse(&f, "x-1")?;
    let g = x_minus_1.mul(&g_r.lcm(&g_star)?)?;
    let code = CyclicCode::from_generator(n as usize, g)?;
    let mut c = Construction::new(spec.label(true), code);
    c.require_lcd()?;
    let h = spec.h()?;
    c.params.insert("ell1".into(), spec.ell1() as i64);
    c.params.insert("ell0".into(), spec.ell0() as i64);
    c.params.insert("h".into(), h as i64);

    let half = ((q - 1) * m + 1) / 2;
    if q * (m - 1) - 2 >= ell && ell >= 1 + (q - 1) * m - half {
        if g_r.gcd(&g_star)?.degree() != Some(0) {
            return Err(Error::Inconsistent(format!(
                "g_R and its reciprocal share roots for {}",
                c.label
            )));
        }
        let k = 2 * eq9_dimension(spec.q, spec.m, spec.ell) as i64 - q.pow(spec.m);
        c.predict_k("reversible GRM", k)?;
        c.bound(2 * h, "symmetric run -(h-1)..h-1");
        if q == 2 && m - 2 >= ell && ell >= m - (m - 2) / 2 {
            let s: i128 = (0..=m - 1 - ell).map(|j| binomial(m, j)).sum();
            c.predict_k("binary reversible GRM", (1i64 << m) - 2 * s as i64)?;
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eq9_small_cases() {
        assert_eq!(eq9_dimension(2, 5, 3), 26);
        assert_eq!(eq9_dimension(2, 4, 0), 1);
        // q = 3, m = 2: monomials x^a y^b, a, b < 3, a + b <= 2
        assert_eq!(eq9_dimension(3, 2, 2), 6);
    }

    #[test]
    fn grm_star_examples() {
        let reg = FieldRegistry::new();
        for (q, m, ell, k) in [(2, 5, 3, 26), (2, 4, 0, 1), (3, 2, 2, 6)] {
            let c = grm_star(GrmSpec { q, m, ell }, &reg).unwrap();
            assert_eq!(c.code.k(), k);
        }
        assert!(grm_star(GrmSpec { q: 2, m: 4, ell: 6 }, &reg).is_err());
    }

    #[test]
    fn reversible_31_20() {
        let reg = FieldRegistry::paper();
        let c = reversible_grm(GrmSpec { q: 2, m: 5, ell: 3 }, &reg).unwrap();
        let f = reg.base(2).unwrap();
        let g = Poly::parse(&f, "x^11+x^10+x^9+x^7+x^6+x^5+x^4+x^2+x+1").unwrap();
        assert_eq!(c.code.generator(), &g);
        assert_eq!(c.predicted_k, Some(20));
        assert_eq!(c.bound.unwrap().d, 6);
    }
}

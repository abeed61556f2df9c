use serde::{Deserialize, Serialize};

use super::{bch, ceil_div, pow_u64, BchSpec, Construction};
use crate::codes::CyclicCode;
use crate::cyclotomic::FieldRegistry;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// BCH codes of length `(q^m - 1)/(q - 1)` with designed distance `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjSpec {
    pub q: u64,
    pub m: u32,
    pub delta: u64,
}

impl ProjSpec {
    pub fn n(&self) -> Result<u64> {
        if self.q < 2 || self.m < 2 {
            return Err(Error::InvalidParameter("need q >= 2 and m >= 2".into()));
        }
        Ok((pow_u64(self.q, self.m)? - 1) / (self.q - 1))
    }

    fn half_power(&self) -> Result<u64> {
        pow_u64(self.q, self.m / 2)
    }

    /// `floor((delta-2)(q-1) / (q^(m/2) - 1))`
    pub fn epsilon(&self) -> Result<u64> {
        Ok((self.delta - 2) * (self.q - 1) / (self.half_power()? - 1))
    }

    /// `floor((delta-1)(q-1) / (q^(m/2) - 1))`
    pub fn epsilon_bar(&self) -> Result<u64> {
        Ok((self.delta - 1) * (self.q - 1) / (self.half_power()? - 1))
    }

    /// `m >= 4` even and `2 <= delta <= q^(m/2)`.
    pub fn in_even_regime(&self) -> Result<bool> {
        Ok(self.m >= 4 && self.m % 2 == 0 && self.delta <= self.half_power()?)
    }

    /// `2 <= delta <= q^floor((m-1)/2)`.
    pub fn in_odd_regime(&self) -> Result<bool> {
        Ok(self.delta <= pow_u64(self.q, (self.m - 1) / 2)?)
    }

    fn check_delta(&self) -> Result<()> {
        if self.delta < 2 {
            return Err(Error::InvalidParameter("designed distance must be >= 2".into()));
        }
        Ok(())
    }

    /// `m ceil((delta-1)(q-1)/q)`, less `(2 eps - (q-2)) m/2` when
    /// `eps >= floor((q-1)/2)`: the degree of the narrow-sense generator.
    fn narrow_degree(&self) -> Result<i64> {
        let (q, m, d) = (self.q as i64, self.m as i64, self.delta as i64);
        let eps = self.epsilon()? as i64;
        let base = m * ceil_div((d - 1) * (q - 1), q);
        Ok(if eps >= (q - 1) / 2 { base - (2 * eps - (q - 2)) * m / 2 } else { base })
    }
}

/// The narrow-sense code `C_(q,n,delta,1)`. For `m >= 4` even and
/// `delta <= q^(m/2)` the dimension is predicted from `eps`; at
/// `delta = q^(m/2)` the Bose distance is `delta + 1`.
pub fn projective_bch(spec: ProjSpec, reg: &FieldRegistry) -> Result<Construction> {
    spec.check_delta()?;
    let n = spec.n()?;
    let mut c = bch(BchSpec { q: spec.q, n, delta: spec.delta, b: 1 }, reg)?;
    if spec.in_even_regime()? {
        c.params.insert("epsilon".into(), spec.epsilon()? as i64);
        c.predict_k("projective, m even", n as i64 - spec.narrow_degree()?)?;
        if spec.delta == spec.half_power()? {
            c.bound(spec.delta + 1, "Bose distance at delta = q^(m/2)");
        }
    }
    Ok(c)
}

/// `C_(q,n,2 delta,1-delta)`, built as `lcm(x-1, g_u, g_u*)` where `g_u`
/// generates `C_(q,n,delta,1)`.
pub fn reversible_projective_bch(spec: ProjSpec, reg: &FieldRegistry) -> Result<Construction> {
    spec.check_delta()?;
    let n = spec.n()?;
    let (q, m, d) = (spec.q as i64, spec.m as i64, spec.delta as i64);
    let window = BchSpec { q: spec.q, n, delta: 2 * spec.delta, b: 1 - d };
    let direct = bch(window, reg)?;

    let sf = reg.splitting(n, spec.q)?;
    let g_u = sf.generator_for(1..d)?;
    let g_star = g_u.reciprocal()?;
    let x_minus_1 = Poly::parse(sf.base(), "x-1")?;
    let g = Poly::lcm_all(sf.base(), [&x_minus_1, &g_u, &g_star])?;
    if &g != direct.code.generator() {
        return Err(Error::Inconsistent(format!(
            "lcm(x-1, g_u, g_u*) differs from the generator of {}",
            window.label()
        )));
    }
    let mut c = Construction::new(window.label(), CyclicCode::from_generator(n as usize, g)?);
    c.require_lcd()?;
    let shared = g_u.gcd(&g_star)?.degree().expect("gcd of nonzero polynomials") as i64;
    c.params.insert("gcd_degree".into(), shared);

    let ceil = ceil_div((d - 1) * (q - 1), q);
    if spec.in_odd_regime()? {
        c.predict_k("reversible projective, small delta", n as i64 - 1 - 2 * m * ceil)?;
        c.bound(2 * spec.delta, "symmetric run 1-delta..delta-1");
    }
    if spec.in_even_regime()? {
        let eps = spec.epsilon()? as i64;
        let eps_bar = spec.epsilon_bar()? as i64;
        c.params.insert("epsilon".into(), eps);
        c.params.insert("epsilon_bar".into(), eps_bar);
        c.params.insert("epsilon_bar_m".into(), eps_bar * m);
        let mut k = n as i64 - 1 - 2 * m * ceil + eps_bar * m;
        if eps >= (q - 1) / 2 {
            k += (2 * eps - (q - 2)) * m;
        }
        c.predict_k("reversible projective, m even", k)?;
        c.bound(2 * spec.delta, "symmetric run 1-delta..delta-1");
        if spec.delta == spec.half_power()? {
            c.bound(2 * spec.delta + 2, "Bose distance at delta = q^(m/2)");
        }
    }
    Ok(c)
}

use serde::{Deserialize, Serialize};

use super::{ceil_div, pow_u64, Construction};
use crate::codes::CyclicCode;
use crate::cyclotomic::FieldRegistry;
use crate::error::{Error, Result};
use crate::numtheory::{gcd, ord_mod};
use crate::poly::Poly;

/// Parameters of `C_(q,n,delta,b)`: roots `beta^b, ..., beta^(b+delta-2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BchSpec {
    pub q: u64,
    pub n: u64,
    pub delta: u64,
    /// any integer; taken mod n
    pub b: i64,
}

impl BchSpec {
    pub fn label(&self) -> String {
        format!("C({},{},{},{})", self.q, self.n, self.delta, self.b)
    }

    fn validate(&self) -> Result<()> {
        if gcd(self.n, self.q) != 1 {
            return Err(Error::NotCoprime { n: self.n, q: self.q });
        }
        if self.delta < 2 || self.delta > self.n {
            return Err(Error::InvalidParameter(format!(
                "designed distance {} outside [2, {}]",
                self.delta, self.n
            )));
        }
        Ok(())
    }
}

/// The BCH code with generator `lcm(m_b, ..., m_(b+delta-2))`.
///
/// For narrow-sense codes with `q^floor(m/2) < n` and small `delta` the dimension
/// `n - m ceil((delta-1)(1-1/q))` is predicted and checked.
pub fn bch(spec: BchSpec, reg: &FieldRegistry) -> Result<Construction> {
    spec.validate()?;
    let sf = reg.splitting(spec.n, spec.q)?;
    let g = sf.generator_for((0..spec.delta as i64 - 1).map(|i| spec.b + i))?;
    let code = CyclicCode::from_generator(spec.n as usize, g)?;
    let mut c = Construction::new(spec.label(), code);
    c.bound(spec.delta, "designed distance");
    if spec.b.rem_euclid(spec.n as i64) == 1 % spec.n as i64 {
        if let Some(k) = narrow_sense_dimension(spec.q, spec.n, spec.delta)? {
            c.predict_k("narrow-sense small designed distance", k)?;
        }
    }
    Ok(c)
}

/// `n - m ceil((delta-1)(q-1)/q)` when `q^floor(m/2) < n <= q^m - 1` and
/// `delta <= min(floor(n q^ceil(m/2) / (q^m - 1)), n)`.
fn narrow_sense_dimension(q: u64, n: u64, delta: u64) -> Result<Option<i64>> {
    if n < 2 {
        return Ok(None);
    }
    let m = ord_mod(n, q)?;
    let (Some(qm), Some(low), Some(up)) = (
        q.checked_pow(m).map(|v| v as u128),
        q.checked_pow(m / 2).map(|v| v as u128),
        q.checked_pow(m.div_ceil(2)).map(|v| v as u128),
    ) else {
        return Ok(None);
    };
    let nn = n as u128;
    if !(low < nn && nn < qm) {
        return Ok(None);
    }
    let limit = (nn * up / (qm - 1)).min(nn);
    if (delta as u128) > limit {
        return Ok(None);
    }
    let (q, m, d) = (q as i64, m as i64, delta as i64);
    Ok(Some(n as i64 - m * ceil_div((d - 1) * (q - 1), q)))
}

/// The three designed-distance windows symmetric under `i -> n - i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReversiblePattern {
    /// `b = -t`, `delta = 2t + 2`
    ZeroCentered,
    /// `n` odd, `t` odd, `b = (n - t)/2`, `delta = t + 2`
    OddMid,
    /// `n` even, `b = (n - 2t)/2`, `delta = 2t + 2`
    EvenMid,
}

pub fn reversible_bch(
    pattern: ReversiblePattern,
    q: u64,
    n: u64,
    t: u64,
    reg: &FieldRegistry,
) -> Result<Construction> {
    let bad = |msg: &str| Err(Error::InvalidParameter(format!("{pattern:?}: {msg}")));
    let (b, delta) = match pattern {
        ReversiblePattern::ZeroCentered => (-(t as i64), 2 * t + 2),
        ReversiblePattern::OddMid => {
            if n % 2 == 0 || t % 2 == 0 || t < 1 || t + 2 > n {
                return bad("needs n odd and t odd with 1 <= t <= n - 2");
            }
            (((n - t) / 2) as i64, t + 2)
        }
        ReversiblePattern::EvenMid => {
            if n % 2 != 0 || 2 * t > n {
                return bad("needs n even and 0 <= t <= n/2");
            }
            (((n - 2 * t) / 2) as i64, 2 * t + 2)
        }
    };
    if delta > n {
        return bad(&format!("designed distance {delta} exceeds n = {n}"));
    }
    let c = bch(BchSpec { q, n, delta, b }, reg)?;
    c.require_lcd()?;
    Ok(c)
}

/// `C_(q, q^ell + 1, delta, 0)`. For `ell >= 2` and
/// `3 <= delta <= q^floor((ell-1)/2) + 3` the
/// dimension `q^ell - 2 ell (delta - 2 - floor((delta-2)/q))` and the generator
/// `(x-1) prod m_a` over `1 <= a <= delta-2`, `q` not dividing `a`, are checked.
/// The bound `d >= 2(delta - 1)` holds for every `delta`.
pub fn anti_bch(q: u64, ell: u32, delta: u64, reg: &FieldRegistry) -> Result<Construction> {
    if ell < 1 {
        return Err(Error::InvalidParameter("ell must be >= 1".into()));
    }
    let n = pow_u64(q, ell)? + 1;
    let mut c = bch(BchSpec { q, n, delta, b: 0 }, reg)?;
    c.bound(2 * (delta - 1), "run symmetric about 0");
    let upper = pow_u64(q, (ell - 1) / 2)? + 3;
    if ell >= 2 && (3..=upper).contains(&delta) {
        let (qi, l, d) = (q as i64, ell as i64, delta as i64);
        c.predict_k("anti-primitive", qi.pow(ell) - 2 * l * (d - 2 - (d - 2) / qi))?;
        let sf = reg.splitting(n, q)?;
        let mut expected = Poly::parse(sf.base(), "x-1")?;
        for a in (1..=delta - 2).filter(|a| a % q != 0) {
            expected = expected.mul(sf.minimal_polynomial(a as i64))?;
        }
        if &expected != c.code.generator() {
            return Err(Error::Inconsistent(format!(
                "generator of {} is not (x-1) prod m_a",
                c.label
            )));
        }
    }
    Ok(c)
}

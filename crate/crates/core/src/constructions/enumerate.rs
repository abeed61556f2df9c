use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::codes::CyclicCode;
use crate::cosets::exact_log;
use crate::cyclotomic::{FieldRegistry, SplittingField};
use crate::error::{Error, Result};
use crate::numtheory::is_prime;
use crate::poly::Poly;

/// Every reversible cyclic code of a given length, one per nonempty subset `S`
/// of the paired leaders, generated by `prod_{a in S} lcm(m_a, m_{-a})`.
/// Subsets are visited in binary rank order, bit `i` selecting the `i`-th
/// smallest leader.
pub struct ReversibleCodes {
    sf: Arc<SplittingField>,
    blocks: Vec<Poly>,
    next: u128,
    end: u128,
}

impl ReversibleCodes {
    pub fn leaders(&self) -> &[u64] {
        &self.sf.cosets().pi
    }

    /// The subset rank of the next code to be yielded.
    pub fn position(&self) -> u128 {
        self.next
    }
}

impl Iterator for ReversibleCodes {
    type Item = CyclicCode;

    fn next(&mut self) -> Option<CyclicCode> {
        if self.next >= self.end {
            return None;
        }
        let rank = self.next;
        self.next += 1;
        let chosen = self
            .blocks
            .iter()
            .enumerate()
            .filter(|&(i, _)| rank >> i & 1 == 1)
            .map(|(_, p)| p);
        let g = Poly::product(self.sf.base(), chosen).expect("same field");
        Some(CyclicCode::from_generator(self.sf.n() as usize, g).expect("divisor of x^n - 1"))
    }
}

/// Stream of reversible codes of length `n`, truncated to `limit` codes when set.
/// Without a limit, more than 127 paired leaders is rejected.
pub fn enumerate_reversible(
    n: u64,
    q: u64,
    limit: Option<u128>,
    reg: &FieldRegistry,
) -> Result<ReversibleCodes> {
    let sf = reg.splitting(n, q)?;
    let pi = &sf.cosets().pi;
    let total = if pi.len() >= 128 {
        if limit.is_none() {
            return Err(Error::InvalidParameter(format!(
                "{} paired leaders: set a limit",
                pi.len()
            )));
        }
        u128::MAX
    } else {
        (1u128 << pi.len()) - 1
    };
    let take = limit.map_or(total, |l| l.min(total));
    let cosets = sf.cosets();
    let blocks = pi
        .iter()
        .map(|&a| {
            let ma = sf.minimal_polynomial(a as i64);
            if cosets.is_self_paired(a) {
                ma.clone()
            } else {
                ma.mul(sf.minimal_polynomial(-(a as i64))).expect("same field")
            }
        })
        .collect();
    Ok(ReversibleCodes { sf: sf.clone(), blocks, next: 1, end: take.saturating_add(1) })
}

/// Closed-form count for `n = q^m - 1`, `m` an odd prime.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorollaryCheck {
    pub m: u32,
    /// exponent `(q^m + (m-1)q)/(2m)`, plus `1/2` for odd q
    pub exponent: u64,
    pub self_reciprocal_expected: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReversibleCount {
    pub n: u64,
    pub q: u64,
    pub pi_size: usize,
    #[serde(with = "biguint_string")]
    pub count: BigUint,
    /// Number of self-reciprocal irreducible factors of x^n - 1.
    pub self_reciprocal: usize,
    pub corollary: Option<CorollaryCheck>,
}

/// `2^|Pi| - 1`, cross-checked against the closed forms when they apply.
pub fn count_reversible(n: u64, q: u64, reg: &FieldRegistry) -> Result<ReversibleCount> {
    let cosets = reg.splitting(n, q)?.cosets().clone();
    let pi_size = cosets.pi.len();
    let count = (BigUint::one() << pi_size) - BigUint::one();
    let self_reciprocal = cosets.gamma.iter().filter(|&&a| cosets.is_self_paired(a)).count();

    let corollary = match exact_log(n + 1, q) {
        Some(m) if m > 2 && is_prime(m as u128) => {
            let qm = n + 1;
            let (num, expected) = if q % 2 == 0 {
                (qm + (m as u64 - 1) * q, 1)
            } else {
                (qm + (m as u64 - 1) * q + m as u64, 2)
            };
            let exponent = num / (2 * m as u64);
            if num % (2 * m as u64) != 0 || exponent != pi_size as u64 {
                return Err(Error::PredictionMismatch {
                    what: format!("paired leaders for n = {n}, q = {q}"),
                    predicted: (num / (2 * m as u64)) as i64,
                    actual: pi_size as i64,
                });
            }
            if self_reciprocal != expected {
                return Err(Error::PredictionMismatch {
                    what: format!("self-reciprocal irreducible factors of x^{n} - 1"),
                    predicted: expected as i64,
                    actual: self_reciprocal as i64,
                });
            }
            Some(CorollaryCheck { m, exponent, self_reciprocal_expected: expected })
        }
        _ => None,
    };
    Ok(ReversibleCount { n, q, pi_size, count, self_reciprocal, corollary })
}

mod biguint_string {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

//! Code families: BCH codes and their reversible variants, punctured generalized
//! Reed-Muller codes, projective-length BCH codes, and the enumeration of all
//! reversible cyclic codes of a given length.
//!
//! Each theorem-backed constructor returns the code together with the parameters
//! the theorem predicts. Inside a theorem's regime the prediction is compared with
//! the constructed code and a disagreement is an error; outside it the prediction
//! is left empty.

mod bch;
mod enumerate;
mod grm;
mod projective;

pub use bch::{anti_bch, bch, reversible_bch, BchSpec, ReversiblePattern};
pub use enumerate::{count_reversible, enumerate_reversible, CorollaryCheck, ReversibleCodes, ReversibleCount};
pub use grm::{eq9_dimension, grm_star, reversible_grm, GrmSpec};
pub use projective::{projective_bch, reversible_projective_bch, ProjSpec};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::codes::CyclicCode;
use crate::error::{Error, Result};

/// A proven lower bound on the minimum distance and where it comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub d: u64,
    pub source: String,
}

#[derive(Debug, Clone)]
pub struct Construction {
    /// e.g. `C(2,9,4,0)` or `R(2,5,3)`
    pub label: String,
    pub code: CyclicCode,
    /// Dimension predicted by the applicable theorem, when in its regime.
    pub predicted_k: Option<usize>,
    pub bound: Option<Bound>,
    /// Claimed exact minimum distance, when the theory provides one.
    pub d_claim: Option<u64>,
    /// Auxiliary quantities (epsilon, gcd degrees, ...) for reporting.
    pub params: BTreeMap<String, i64>,
}

impl Construction {
    fn new(label: String, code: CyclicCode) -> Self {
        Construction {
            label,
            code,
            predicted_k: None,
            bound: None,
            d_claim: None,
            params: BTreeMap::new(),
        }
    }

    fn predict_k(&mut self, what: &str, k: i64) -> Result<()> {
        let actual = self.code.k() as i64;
        if k != actual {
            return Err(Error::PredictionMismatch {
                what: format!("dimension of {} ({what})", self.label),
                predicted: k,
                actual,
            });
        }
        self.predicted_k = Some(k as usize);
        Ok(())
    }

    fn bound(&mut self, d: u64, source: &str) {
        if self.bound.as_ref().is_none_or(|b| d > b.d) {
            self.bound = Some(Bound {
                d,
                source: source.into(),
            });
        }
    }

    fn require_lcd(&self) -> Result<()> {
        if !self.code.generator().is_self_reciprocal()? {
            return Err(Error::Inconsistent(format!("{} is not reversible", self.label)));
        }
        Ok(())
    }
}

pub(crate) fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

pub(crate) fn pow_u64(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e)
        .ok_or_else(|| Error::InvalidParameter(format!("{q}^{e} overflows")))
}

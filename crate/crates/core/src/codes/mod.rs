//! Cyclic codes given by a generator polynomial: dual, hull, the LCD and
//! reversibility predicates, encoding, Bose distance and minimum distance.

mod distance;

pub use distance::{min_distance, DistanceBudget, DistanceResult, Provenance, Witness};

use serde::{Deserialize, Serialize};

use crate::cyclotomic::SplittingField;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::Matrix;
use crate::numtheory::gcd;
use crate::poly::Poly;

/// The cyclic code `<g(x)>` of length n over GF(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    g: Poly,
    h: Poly,
}

/// Ways of deciding whether a cyclic code is LCD.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LcdMethod {
    /// `g` equals its monic reciprocal.
    SelfReciprocal,
    /// The defining set is closed under `i -> n - i`.
    RootInverse,
    /// The hull `C ∩ C⊥` is zero, computed polynomially.
    HullRank,
    /// `G G^T` is nonsingular for a generator matrix `G`; limited to `n <= 64`.
    Gram,
}

pub const GRAM_LIMIT: usize = 64;

impl CyclicCode {
    /// Validates `g` (monic, divides x^n - 1, gcd(n, q) = 1) and derives `h` and `k`.
    pub fn from_generator(n: usize, g: Poly) -> Result<Self> {
        let field = g.field().clone();
        let q = field.order();
        if n == 0 {
            return Err(Error::InvalidParameter("length must be positive".into()));
        }
        if u64::try_from(q).map_or(true, |q| gcd(n as u64, q) != 1) {
            return Err(Error::NotCoprime {
                n: n as u64,
                q: q as u64,
            });
        }
        if !g.is_monic() {
            return Err(Error::NotMonic);
        }
        let (h, r) = Poly::x_n_minus_1(&field, n).divrem(&g)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor {
                n,
                remainder: r.to_string(),
            });
        }
        Ok(CyclicCode { n, g, h })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.n - self.g.degree().expect("generator is nonzero")
    }

    pub fn q(&self) -> u64 {
        self.g.field().order() as u64
    }

    pub fn field(&self) -> &FieldSpec {
        self.g.field()
    }

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    pub fn parity_check(&self) -> &Poly {
        &self.h
    }

    /// The dual code, generated by the monic reciprocal of `h`.
    pub fn dual(&self) -> CyclicCode {
        let g = self.h.reciprocal().expect("h(0) != 0 since x does not divide x^n - 1");
        CyclicCode::from_generator(self.n, g).expect("reciprocal of h divides x^n - 1")
    }

    /// `C ∩ C⊥`, generated by `lcm(g, g_dual)`.
    pub fn hull(&self) -> CyclicCode {
        let g = self.g.lcm(&self.dual().g).expect("same field");
        CyclicCode::from_generator(self.n, g).expect("lcm of divisors divides x^n - 1")
    }

    /// Codewords of the hull vanishing at 1.
    pub fn even_like_subcode(&self) -> CyclicCode {
        let hull = self.hull();
        let x_minus_1 = Poly::parse(self.field(), "x-1").expect("valid");
        let g = hull.g.lcm(&x_minus_1).expect("same field");
        CyclicCode::from_generator(self.n, g).expect("lcm of divisors divides x^n - 1")
    }

    /// True when every codeword of `other` lies in `self`.
    pub fn contains(&self, other: &CyclicCode) -> bool {
        self.n == other.n && other.g.rem(&self.g).is_ok_and(|r| r.is_zero())
    }

    pub fn is_lcd(&self, method: LcdMethod, sf: Option<&SplittingField>) -> Result<bool> {
        match method {
            LcdMethod::SelfReciprocal => self.g.is_self_reciprocal(),
            LcdMethod::RootInverse => {
                let sf = sf.ok_or_else(|| {
                    Error::InvalidParameter("root-inverse test needs a splitting field".into())
                })?;
                self.check_splitting(sf)?;
                let z = sf.defining_set(&self.g)?;
                let n = self.n as u64;
                Ok(z.iter().all(|&i| z.binary_search(&((n - i) % n)).is_ok()))
            }
            LcdMethod::HullRank => Ok(self.hull().k() == 0),
            LcdMethod::Gram => {
                if self.n > GRAM_LIMIT {
                    return Err(Error::InvalidParameter(format!(
                        "Gram test limited to n <= {GRAM_LIMIT}"
                    )));
                }
                let g = self.generator_matrix();
                let gram = g.mul(&g.transpose(), self.field());
                Ok(gram.rank(self.field()) == self.k())
            }
        }
    }

    /// Closed under coordinate reversal, checked row by row on the generator matrix.
    pub fn is_reversible(&self) -> bool {
        let f = self.field();
        (0..self.k()).all(|i| {
            let mut row = vec![0u128; self.n];
            for (j, &c) in self.g.coeffs().iter().enumerate() {
                row[i + j] = c;
            }
            row.reverse();
            let p = Poly::from_codes(f, &row).expect("codes in range");
            p.rem(&self.g).is_ok_and(|r| r.is_zero())
        })
    }

    /// `message(x) g(x)` as a length-n coefficient vector.
    pub fn encode(&self, message: &[u128]) -> Result<Vec<u128>> {
        if message.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                got: message.len(),
            });
        }
        let m = Poly::from_codes(self.field(), message)?;
        let mut c = m.mul(&self.g)?.coeffs().to_vec();
        c.resize(self.n, 0);
        Ok(c)
    }

    /// Rows `x^i g(x)`, `0 <= i < k`.
    pub fn generator_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.k(), self.n);
        for i in 0..self.k() {
            for (j, &c) in self.g.coeffs().iter().enumerate() {
                m.set(i, i + j, c);
            }
        }
        m
    }

    /// Rows `x^i h*(x)`, `0 <= i < n - k`: the generator matrix of the dual.
    pub fn parity_check_matrix(&self) -> Matrix {
        self.dual().generator_matrix()
    }

    /// Largest `delta` such that `delta - 1` cyclically consecutive exponents are roots
    /// of `g`. The zero code returns `n + 1`.
    pub fn bose_distance(&self, sf: &SplittingField) -> Result<u64> {
        if self.g.degree() == Some(0) {
            return Err(Error::InvalidParameter("g = 1 has no roots".into()));
        }
        self.check_splitting(sf)?;
        let z = sf.defining_set(&self.g)?;
        Ok(longest_cyclic_run(&z, self.n as u64) + 1)
    }

    fn check_splitting(&self, sf: &SplittingField) -> Result<()> {
        if sf.n() != self.n as u64 || sf.base() != self.field() {
            return Err(Error::MixedFields);
        }
        Ok(())
    }
}

/// Longest run of consecutive residues mod n contained in the sorted set `z`.
pub fn longest_cyclic_run(z: &[u64], n: u64) -> u64 {
    if z.len() as u64 == n {
        return n;
    }
    let Some(&first) = z.first() else {
        return 0;
    };
    let mut best = 0;
    let mut run = 0;
    let mut prev = None;
    for &i in z {
        run = if prev.is_some_and(|p| p + 1 == i) { run + 1 } else { 1 };
        best = best.max(run);
        prev = Some(i);
    }
    // a run ending at n - 1 continues into the run starting at 0
    if first == 0 && *z.last().expect("nonempty") == n - 1 {
        let head = z.iter().enumerate().take_while(|&(j, &i)| i == j as u64).count() as u64;
        best = best.max(run + head);
    }
    best
}

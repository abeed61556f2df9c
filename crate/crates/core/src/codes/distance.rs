//! Minimum distance: exhaustive enumeration, low-support witness search, and a
//! parity-check rank certificate that rules out low-weight codewords.
//!
//! All parallel searches split the work into indexed pieces and reduce by
//! `(weight, piece index, ...)`, so results do not depend on scheduling.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::CyclicCode;
use crate::cyclotomic::SplittingField;
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::{EchelonBasis, Matrix};
use crate::numtheory::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceBudget {
    /// Exhaustive search runs when the number of codewords with leading message
    /// coefficient 1, `(q^k - 1)/(q - 1)`, is at most this.
    pub exhaustive_cap: u128,
    /// Largest message support tried by the witness search.
    pub witness_support_max: usize,
    /// Largest number of messages the witness search may visit.
    pub witness_cap: u128,
    /// Largest number of column supports the rank certificate may visit per weight.
    pub rank_cap: u128,
    /// A proven lower bound supplied by the caller, with its source.
    pub theorem_bound: Option<(u64, String)>,
}

impl Default for DistanceBudget {
    fn default() -> Self {
        DistanceBudget {
            exhaustive_cap: 1 << 22,
            witness_support_max: 4,
            witness_cap: 1 << 24,
            rank_cap: 1 << 24,
            theorem_bound: None,
        }
    }
}

impl DistanceBudget {
    pub fn with_bound(mut self, d: u64, source: impl Into<String>) -> Self {
        self.theorem_bound = Some((d, source.into()));
        self
    }
}

/// Where a distance lower bound comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// d >= 1 for a nonzero code.
    Trivial,
    /// Longest cyclic run of roots (BCH bound with the Bose distance).
    BchRun,
    /// A bound supplied by the construction.
    Theorem(String),
    /// Every codeword was enumerated.
    Exhaustive,
    /// Every set of that many parity-check columns through position 0 is independent.
    SupportRank,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub weight: u64,
    pub codeword: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceResult {
    pub d_lower: u64,
    pub provenance: Provenance,
    pub d_exact: Option<u64>,
    pub witness: Option<Witness>,
    /// Number of codewords visited, when the exhaustive search ran.
    pub enumerated: Option<u128>,
}

impl DistanceResult {
    /// `(lower, upper)`; the upper end is the witness weight when known.
    pub fn interval(&self) -> (u64, Option<u64>) {
        (self.d_lower, self.witness.as_ref().map(|w| w.weight))
    }
}

pub fn min_distance(
    code: &CyclicCode,
    sf: Option<&SplittingField>,
    budget: &DistanceBudget,
) -> Result<DistanceResult> {
    let (n, k) = (code.n(), code.k());
    if k == 0 {
        return Err(Error::InvalidParameter(
            "the zero code has no minimum distance".into(),
        ));
    }
    if code.generator().degree() == Some(0) {
        let mut e0 = vec![0u64; n];
        e0[0] = 1;
        return Ok(DistanceResult {
            d_lower: 1,
            provenance: Provenance::Exhaustive,
            d_exact: Some(1),
            witness: Some(Witness { weight: 1, codeword: e0 }),
            enumerated: None,
        });
    }

    let (mut d_lower, mut provenance) = (1, Provenance::Trivial);
    if let Some(sf) = sf {
        let bose = code.bose_distance(sf)?;
        if bose > d_lower {
            (d_lower, provenance) = (bose, Provenance::BchRun);
        }
    }
    if let Some((b, source)) = &budget.theorem_bound {
        if *b > d_lower {
            (d_lower, provenance) = (*b, Provenance::Theorem(source.clone()));
        }
    }

    let q = code.field().order();
    if let Some(count) = normalized_count(q, k).filter(|&c| c <= budget.exhaustive_cap) {
        let w = exhaustive(code);
        if w.weight < d_lower {
            return Err(Error::Inconsistent(format!(
                "exhaustive minimum {} is below the proven bound {d_lower} ({provenance:?})",
                w.weight
            )));
        }
        return Ok(DistanceResult {
            d_lower: w.weight,
            provenance: Provenance::Exhaustive,
            d_exact: Some(w.weight),
            witness: Some(w),
            enumerated: Some(count),
        });
    }

    let mut witness = witness_search(code, budget.witness_support_max, budget.witness_cap);
    if let Some(w) = &witness {
        if w.weight < d_lower {
            return Err(Error::Inconsistent(format!(
                "witness of weight {} is below the proven bound {d_lower}",
                w.weight
            )));
        }
    }
    let upper = witness.as_ref().map_or(n as u64 - k as u64 + 1, |w| w.weight);
    while d_lower < upper {
        match rank_certificate(code, d_lower as usize, budget.rank_cap) {
            Some(Certificate::Independent) => {
                d_lower += 1;
                provenance = Provenance::SupportRank;
            }
            Some(Certificate::Dependent(w)) => {
                witness = Some(w);
                break;
            }
            None => break,
        }
    }
    let d_exact = witness
        .as_ref()
        .filter(|w| w.weight == d_lower)
        .map(|w| w.weight);
    Ok(DistanceResult {
        d_lower,
        provenance,
        d_exact,
        witness,
        enumerated: None,
    })
}

/// `(q^k - 1)/(q - 1)`, or `None` on overflow.
fn normalized_count(q: u128, k: usize) -> Option<u128> {
    let qk = q.checked_pow(k as u32)?;
    Some((qk - 1) / (q - 1))
}

fn weight(v: &[u128]) -> u64 {
    v.iter().filter(|&&c| c != 0).count() as u64
}

fn to_u64(v: &[u128]) -> Vec<u64> {
    v.iter().map(|&c| c as u64).collect()
}

// ---------------------------------------------------------------------------
// exhaustive enumeration

fn exhaustive(code: &CyclicCode) -> Witness {
    if code.q() == 2 && code.n() <= 128 {
        exhaustive_binary(code)
    } else {
        exhaustive_general(code)
    }
}

fn exhaustive_binary(code: &CyclicCode) -> Witness {
    let k = code.k();
    let g: u128 = code
        .generator()
        .coeffs()
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &c)| acc | ((c as u128) << i));
    // the top `split` message bits are fixed per piece; the rest follow a Gray code
    let split = k.min(10);
    let free = k - split;
    let best = (0u64..1 << split)
        .into_par_iter()
        .map(|prefix| {
            let mut msg: u128 = (prefix as u128) << free;
            let mut c: u128 = 0;
            for i in free..k {
                if msg >> i & 1 == 1 {
                    c ^= g << i;
                }
            }
            let mut best: Option<(u32, u128)> = None;
            let mut consider = |c: u128, msg: u128| {
                if c != 0 {
                    let w = c.count_ones();
                    if best.is_none_or(|(bw, _)| w < bw) {
                        best = Some((w, msg));
                    }
                }
            };
            consider(c, msg);
            for t in 1u128..1 << free {
                let bit = t.trailing_zeros();
                c ^= g << bit;
                msg ^= 1 << bit;
                consider(c, msg);
            }
            best.map(|(w, m)| (w, prefix, m))
        })
        .flatten()
        .min_by_key(|&(w, prefix, _)| (w, prefix))
        .expect("k >= 1 gives a nonzero codeword");
    let msg: Vec<u128> = (0..k).map(|i| best.2 >> i & 1).collect();
    let cw = code.encode(&msg).expect("message length k");
    debug_assert_eq!(weight(&cw), best.0 as u64);
    Witness {
        weight: best.0 as u64,
        codeword: to_u64(&cw),
    }
}

/// Enumerates messages whose highest nonzero coefficient is 1: position `j` is the
/// leading position, the `pre` digits just below it are fixed per piece, and the
/// remaining low digits run through a modular q-ary Gray code.
fn exhaustive_general(code: &CyclicCode) -> Witness {
    let f = code.field().clone();
    let q = f.order();
    let k = code.k();
    let n = code.n();
    let g = code.generator().coeffs().to_vec();
    // multiples[d] = d * g for every field element d
    let multiples: Vec<Vec<u128>> = (0..q)
        .map(|d| g.iter().map(|&c| f.mul_raw(d, c)).collect())
        .collect();
    let split = {
        let mut s = 0;
        while q.pow(s as u32) < 256 {
            s += 1;
        }
        s
    };
    let mut pieces: Vec<(usize, usize, u128)> = Vec::new();
    for j in 0..k {
        let pre = j.min(split);
        for prefix in 0..q.pow(pre as u32) {
            pieces.push((j, pre, prefix));
        }
    }
    let best = pieces
        .par_iter()
        .enumerate()
        .map(|(idx, &(j, pre, prefix))| {
            let free = j - pre;
            let mut msg = vec![0u128; k];
            msg[j] = 1;
            let mut p = prefix;
            for slot in msg[free..j].iter_mut() {
                *slot = p % q;
                p /= q;
            }
            let mut c = vec![0u128; n];
            for (i, &m) in msg.iter().enumerate() {
                if m != 0 {
                    add_into(&f, &mut c, &multiples[m as usize], i);
                }
            }
            let mut w = weight(&c);
            let mut best = (w, msg.clone());
            let mut counter = vec![0u128; free];
            let total = q.pow(free as u32);
            for _ in 1..total {
                // position of the digit that changes: number of trailing (q-1) digits
                let mut pos = 0;
                while counter[pos] == q - 1 {
                    counter[pos] = 0;
                    pos += 1;
                }
                counter[pos] += 1;
                let cur = msg[pos];
                let next = (cur + 1) % q;
                let delta = f.sub_raw(next, cur);
                msg[pos] = next;
                w = add_into_weighted(&f, &mut c, &multiples[delta as usize], pos, w);
                if w < best.0 {
                    best = (w, msg.clone());
                }
            }
            (best.0, idx, best.1)
        })
        .min_by_key(|(w, idx, _)| (*w, *idx))
        .expect("k >= 1");
    let cw = code.encode(&best.2).expect("message length k");
    debug_assert_eq!(weight(&cw), best.0);
    Witness {
        weight: best.0,
        codeword: to_u64(&cw),
    }
}

fn add_into(f: &FieldSpec, c: &mut [u128], v: &[u128], shift: usize) {
    for (i, &x) in v.iter().enumerate() {
        c[shift + i] = f.add_raw(c[shift + i], x);
    }
}

fn add_into_weighted(f: &FieldSpec, c: &mut [u128], v: &[u128], shift: usize, mut w: u64) -> u64 {
    for (i, &x) in v.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let slot = &mut c[shift + i];
        let before = *slot != 0;
        *slot = f.add_raw(*slot, x);
        let after = *slot != 0;
        if before && !after {
            w -= 1;
        } else if !before && after {
            w += 1;
        }
    }
    w
}

// ---------------------------------------------------------------------------
// witness search

/// Lowest-weight codeword `a(x) g(x) mod x^n - 1` over messages with `a_0 = 1` and
/// at most `support_max` nonzero coefficients. Cyclic shifts and scalar multiples
/// give nothing new, hence the normalization.
fn witness_search(code: &CyclicCode, support_max: usize, cap: u128) -> Option<Witness> {
    let n = code.n();
    let f = code.field().clone();
    let q = f.order();
    let mut g = code.generator().coeffs().to_vec();
    g.resize(n, 0);
    // shrink the support until the search fits the budget
    let mut s = support_max.max(1);
    while s > 1 && witness_count(n, q, s) > cap {
        s -= 1;
    }
    let base_w = weight(&g);
    let mut best = Some((base_w, Vec::<(usize, u128)>::new()));
    if s > 1 {
        let found = (1..n)
            .into_par_iter()
            .map(|first| {
                let mut local: Option<(u64, Vec<(usize, u128)>)> = None;
                let mut chosen = Vec::with_capacity(s);
                for val in 1..q {
                    let mut c = g.clone();
                    add_rotated(&f, &mut c, &g, first, val);
                    chosen.push((first, val));
                    witness_dfs(&f, &g, &mut c, &mut chosen, first + 1, s - 1, q, &mut local);
                    chosen.pop();
                }
                local
            })
            .flatten()
            .min_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        if let Some(fw) = found {
            if fw.0 < base_w {
                best = Some(fw);
            }
        }
    }
    let (w, support) = best?;
    let mut c = g.clone();
    for &(pos, val) in &support {
        add_rotated(&f, &mut c, &g, pos, val);
    }
    debug_assert_eq!(weight(&c), w);
    Some(Witness {
        weight: w,
        codeword: to_u64(&c),
    })
}

#[allow(clippy::too_many_arguments)]
fn witness_dfs(
    f: &FieldSpec,
    g: &[u128],
    c: &mut Vec<u128>,
    chosen: &mut Vec<(usize, u128)>,
    start: usize,
    remaining: usize,
    q: u128,
    best: &mut Option<(u64, Vec<(usize, u128)>)>,
) {
    let w = weight(c);
    if w > 0 && best.as_ref().is_none_or(|(bw, bs)| (w, &*chosen) < (*bw, bs)) {
        *best = Some((w, chosen.clone()));
    }
    if remaining == 1 {
        return;
    }
    let n = g.len();
    for pos in start..n {
        for val in 1..q {
            let saved = c.clone();
            add_rotated(f, c, g, pos, val);
            chosen.push((pos, val));
            witness_dfs(f, g, c, chosen, pos + 1, remaining - 1, q, best);
            chosen.pop();
            *c = saved;
        }
    }
}

fn witness_count(n: usize, q: u128, s: usize) -> u128 {
    (0..s)
        .map(|j| {
            let ways = binomial(n as i64 - 1, j as i64) as u128;
            ways.saturating_mul((q - 1).saturating_pow(j as u32))
        })
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// `c += val * x^shift * g mod x^n - 1`.
fn add_rotated(f: &FieldSpec, c: &mut [u128], g: &[u128], shift: usize, val: u128) {
    let n = g.len();
    for (i, &x) in g.iter().enumerate() {
        if x != 0 {
            let slot = &mut c[(i + shift) % n];
            *slot = f.add_raw(*slot, f.mul_raw(val, x));
        }
    }
}

// ---------------------------------------------------------------------------
// parity-check rank certificate

enum Certificate {
    /// No nonzero codeword has weight <= w.
    Independent,
    /// A codeword of weight w, found inside a dependent column set.
    Dependent(Witness),
}

/// Decides whether a codeword of weight <= w exists, assuming `d >= w` is already
/// known. By cyclic symmetry it suffices to test column sets of size w that contain
/// column 0. Returns `None` when the number of sets exceeds `cap`.
fn rank_certificate(code: &CyclicCode, w: usize, cap: u128) -> Option<Certificate> {
    let n = code.n();
    let r = n - code.k();
    if w == 0 || w > r {
        return None;
    }
    let sets = binomial(n as i64 - 1, w as i64 - 1);
    if sets < 0 || sets as u128 > cap {
        return None;
    }
    let f = code.field().clone();
    let h = code.parity_check_matrix();
    let cols: Vec<Vec<u128>> = (0..n).map(|c| (0..r).map(|i| h.get(i, c)).collect()).collect();
    let found = AtomicUsize::new(usize::MAX);
    let hit = (1..n)
        .into_par_iter()
        .filter_map(|first| {
            if found.load(Ordering::Relaxed) < first {
                return None;
            }
            let mut basis = EchelonBasis::new();
            basis.push(cols[0].clone(), &f);
            let mut chosen = vec![0, first];
            let res = if w == 1 {
                None
            } else if !basis.push(cols[first].clone(), &f) {
                Some(chosen.clone())
            } else {
                rank_dfs(&f, &cols, &mut basis, &mut chosen, first + 1, w, &found)
            };
            if res.is_some() {
                found.fetch_min(first, Ordering::Relaxed);
            }
            res
        })
        .min();
    match hit {
        None => Some(Certificate::Independent),
        Some(support) => {
            let sub = Matrix::from_rows(
                &(0..r)
                    .map(|i| support.iter().map(|&c| cols[c][i]).collect())
                    .collect::<Vec<_>>(),
            );
            let v = sub.null_space(&f).into_iter().next()?;
            let mut cw = vec![0u128; n];
            for (&pos, &x) in support.iter().zip(&v) {
                cw[pos] = x;
            }
            debug_assert!(code.generator().field() == &f);
            Some(Certificate::Dependent(Witness {
                weight: weight(&cw),
                codeword: to_u64(&cw),
            }))
        }
    }
}

fn rank_dfs(
    f: &FieldSpec,
    cols: &[Vec<u128>],
    basis: &mut EchelonBasis,
    chosen: &mut Vec<usize>,
    start: usize,
    w: usize,
    found: &AtomicUsize,
) -> Option<Vec<usize>> {
    if chosen.len() == w {
        return None;
    }
    let n = cols.len();
    // leave room for the remaining picks
    let need = w - chosen.len();
    for pos in start..=n - need {
        if found.load(Ordering::Relaxed) < chosen[1] {
            return None;
        }
        chosen.push(pos);
        if !basis.push(cols[pos].clone(), f) {
            return Some(chosen.clone());
        }
        let res = rank_dfs(f, cols, basis, chosen, pos + 1, w, found);
        basis.pop();
        if res.is_some() {
            return res;
        }
        chosen.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::FieldRegistry;
    use crate::poly::Poly;

    fn code(reg: &FieldRegistry, n: usize, q: u64, g: &str) -> CyclicCode {
        let f = reg.base(q).unwrap();
        CyclicCode::from_generator(n, Poly::parse(&f, g).unwrap()).unwrap()
    }

    #[test]
    fn hamming_distance_three() {
        let reg = FieldRegistry::new();
        let c = code(&reg, 7, 2, "x^3+x+1");
        let sf = reg.splitting(7, 2).unwrap();
        let d = min_distance(&c, Some(&sf), &DistanceBudget::default()).unwrap();
        assert_eq!(d.d_exact, Some(3));
        assert_eq!(d.provenance, Provenance::Exhaustive);
        assert_eq!(d.enumerated, Some(15));
    }

    #[test]
    fn ternary_exhaustive_matches_naive() {
        let reg = FieldRegistry::new();
        let c = code(&reg, 13, 3, "x^3+2x+2");
        let d = min_distance(&c, None, &DistanceBudget::default()).unwrap();
        // naive: all 3^k messages
        let k = c.k();
        let mut best = u64::MAX;
        for t in 1..3u128.pow(k as u32) {
            let msg: Vec<u128> = (0..k).map(|i| t / 3u128.pow(i as u32) % 3).collect();
            best = best.min(weight(&c.encode(&msg).unwrap()));
        }
        assert_eq!(d.d_exact, Some(best));
    }

    #[test]
    fn witness_and_certificate_without_exhaustion() {
        let reg = FieldRegistry::new();
        let c = code(&reg, 7, 2, "x^3+x+1");
        let budget = DistanceBudget {
            exhaustive_cap: 0,
            ..DistanceBudget::default()
        };
        let d = min_distance(&c, None, &budget).unwrap();
        assert_eq!(d.d_exact, Some(3));
        assert_eq!(d.provenance, Provenance::SupportRank);
        assert_eq!(d.witness.unwrap().weight, 3);
    }

    #[test]
    fn zero_code_rejected_and_whole_space_distance_one() {
        let reg = FieldRegistry::new();
        assert!(min_distance(&code(&reg, 7, 2, "x^7+1"), None, &DistanceBudget::default()).is_err());
        let d = min_distance(&code(&reg, 7, 2, "1"), None, &DistanceBudget::default()).unwrap();
        assert_eq!(d.d_exact, Some(1));
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let reg = FieldRegistry::new();
        let c = code(&reg, 15, 2, "x^4+x+1");
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| {
                    let exact = min_distance(&c, None, &DistanceBudget::default()).unwrap();
                    let budget = DistanceBudget {
                        exhaustive_cap: 0,
                        ..DistanceBudget::default()
                    };
                    (exact, min_distance(&c, None, &budget).unwrap())
                })
        };
        assert_eq!(run(1), run(4));
    }
}

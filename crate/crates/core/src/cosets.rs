//! q-cyclotomic cosets modulo n, the reduced leader set used to count reversible
//! codes, q-adic weights, and brute-force audits of closed-form coset-leader results.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{gcd, ord_mod};

fn check_coprime(n: u64, q: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    Ok(())
}

/// Sorted members of the q-cyclotomic coset of `s` modulo `n`.
pub fn coset(n: u64, q: u64, s: u64) -> Result<Vec<u64>> {
    check_coprime(n, q)?;
    if s >= n {
        return Err(Error::InvalidParameter(format!("s = {s} not in Z_{n}")));
    }
    let mut members = orbit(n, q, s);
    members.sort_unstable();
    Ok(members)
}

fn orbit(n: u64, q: u64, s: u64) -> Vec<u64> {
    let mut out = vec![s];
    let mut x = (s as u128 * q as u128 % n as u128) as u64;
    while x != s {
        out.push(x);
        x = (x as u128 * q as u128 % n as u128) as u64;
    }
    out
}

/// The full coset structure of Z_n under multiplication by q.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetPartition {
    pub n: u64,
    pub q: u64,
    /// leader -> sorted members
    pub cosets: BTreeMap<u64, Vec<u64>>,
    /// all coset leaders, ascending
    pub gamma: Vec<u64>,
    /// leaders kept after identifying each coset with its negative, ascending
    pub pi: Vec<u64>,
    #[serde(skip)]
    leader_of: Vec<u64>,
}

impl CosetPartition {
    pub fn new(n: u64, q: u64) -> Result<Self> {
        check_coprime(n, q)?;
        let mut leader_of = vec![u64::MAX; n as usize];
        let mut cosets = BTreeMap::new();
        for s in 0..n {
            if leader_of[s as usize] != u64::MAX {
                continue;
            }
            let mut members = orbit(n, q, s);
            for &x in &members {
                leader_of[x as usize] = s;
            }
            members.sort_unstable();
            cosets.insert(s, members);
        }
        let gamma: Vec<u64> = cosets.keys().copied().collect();
        let removed: BTreeSet<u64> = gamma
            .iter()
            .filter_map(|&a| {
                let neg = leader_of[((n - a) % n) as usize];
                (neg != a).then_some(a.max(neg))
            })
            .collect();
        let pi = gamma.iter().copied().filter(|a| !removed.contains(a)).collect();
        Ok(CosetPartition {
            n,
            q,
            cosets,
            gamma,
            pi,
            leader_of,
        })
    }

    pub fn leader(&self, s: u64) -> u64 {
        self.leader_of[(s % self.n) as usize]
    }

    pub fn coset_of(&self, s: u64) -> &[u64] {
        &self.cosets[&self.leader(s)]
    }

    pub fn size(&self, s: u64) -> usize {
        self.coset_of(s).len()
    }

    pub fn is_leader(&self, s: u64) -> bool {
        s < self.n && self.leader(s) == s
    }

    /// Leader of the coset containing `n - s`.
    pub fn negated_leader(&self, s: u64) -> u64 {
        self.leader((self.n - s % self.n) % self.n)
    }

    /// True when `C_s = C_{n-s}`.
    pub fn is_self_paired(&self, s: u64) -> bool {
        self.negated_leader(s) == self.leader(s)
    }
}

pub fn partition(n: u64, q: u64) -> Result<CosetPartition> {
    CosetPartition::new(n, q)
}

/// Sum of the base-q digits of `i`, for `0 <= i < q^m`.
pub fn q_weight(i: u64, q: u64, m: u32) -> Result<u64> {
    let bound = (q as u128).checked_pow(m);
    if q < 2 || bound.is_some_and(|b| i as u128 >= b) {
        return Err(Error::InvalidParameter(format!("{i} is not below {q}^{m}")));
    }
    Ok(digit_sum(i, q))
}

pub(crate) fn digit_sum(mut i: u64, q: u64) -> u64 {
    let mut s = 0;
    while i > 0 {
        s += i % q;
        i /= q;
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IndexSetKind {
    /// `{1 <= i <= n-1 : 1 <= w_q(i) <= t}` for `n = q^m - 1`.
    Weight { t: u64 },
    /// Union of the cosets `C_1, ..., C_{delta-1}`.
    Window { delta: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSets {
    pub set: Vec<u64>,
    pub negated: Vec<u64>,
    pub disjoint: bool,
}

impl IndexSets {
    pub fn intersection(&self) -> Vec<u64> {
        let neg: BTreeSet<_> = self.negated.iter().collect();
        self.set.iter().copied().filter(|a| neg.contains(a)).collect()
    }
}

pub fn index_sets(kind: IndexSetKind, n: u64, q: u64) -> Result<IndexSets> {
    check_coprime(n, q)?;
    let set: BTreeSet<u64> = match kind {
        IndexSetKind::Weight { t } => {
            if t < 1 {
                return Err(Error::InvalidParameter("t must be >= 1".into()));
            }
            let m = exact_log(n + 1, q).ok_or_else(|| {
                Error::InvalidParameter(format!("n = {n} is not of the form {q}^m - 1"))
            })?;
            let _ = m;
            (1..n)
                .filter(|&i| (1..=t).contains(&digit_sum(i, q)))
                .collect()
        }
        IndexSetKind::Window { delta } => {
            if delta < 2 {
                return Err(Error::InvalidParameter("delta must be >= 2".into()));
            }
            let part = CosetPartition::new(n, q)?;
            (1..delta)
                .flat_map(|i| part.coset_of(i % n).to_vec())
                .collect()
        }
    };
    let negated: BTreeSet<u64> = set.iter().map(|&a| (n - a) % n).collect();
    let disjoint = set.is_disjoint(&negated);
    Ok(IndexSets {
        set: set.into_iter().collect(),
        negated: negated.into_iter().collect(),
        disjoint,
    })
}

pub(crate) fn exact_log(x: u64, q: u64) -> Option<u32> {
    let mut m = 0;
    let mut v = 1u64;
    while v < x {
        v = v.checked_mul(q)?;
        m += 1;
    }
    (v == x).then_some(m)
}

/// The three closed-form leader classifications that can be audited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LeaderLemma {
    /// `q^{floor(m/2)} < n <= q^m - 1`, `m = ord_n(q)`: every `s <= n q^{ceil(m/2)}/(q^m-1)`
    /// has `|C_s| = m`, and those prime to q are leaders.
    Aks { q: u64, n: u64 },
    /// `n = q^ell + 1`: each `a <= q^{floor((ell-1)/2)} + 1` prime to q is a leader with
    /// `|C_a| = 2 ell`; the multiples of q in that range are not leaders.
    Anti { q: u64, ell: u32 },
    /// `n = (q^m - 1)/(q - 1)`, `m >= 4` even: classification of
    /// `q^{(m-2)/2} <= a <= q^{m/2}`, `a` prime to q.
    ProjectiveEven { q: u64, m: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub a: u64,
    pub predicted: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub lemma: LeaderLemma,
    pub n: u64,
    /// number of integers whose classification was compared
    pub checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Prediction {
    leader: bool,
    size: Option<usize>,
}

fn describe(leader: bool, size: Option<usize>) -> String {
    match (leader, size) {
        (true, Some(s)) => format!("leader, |C_a| = {s}"),
        (true, None) => "leader".into(),
        (false, Some(s)) => format!("|C_a| = {s}"),
        (false, None) => "not a leader".into(),
    }
}

/// Compares a lemma's predicted classification against the brute-force partition.
pub fn audit_leader_lemma(lemma: LeaderLemma) -> Result<AuditReport> {
    let (n, q, predictions) = predictions(lemma)?;
    let part = CosetPartition::new(n, q)?;
    let mut counterexamples = Vec::new();
    for &(a, pred) in &predictions {
        let is_leader = part.is_leader(a);
        let size = part.size(a);
        // `leader: false` with a size claim means "size only"; see `predictions`.
        let leader_ok = match (pred.leader, pred.size) {
            (true, _) => is_leader,
            (false, None) => !is_leader,
            (false, Some(_)) => true,
        };
        let size_ok = pred.size.is_none_or(|s| s == size);
        if !(leader_ok && size_ok) {
            counterexamples.push(Counterexample {
                a,
                predicted: describe(pred.leader, pred.size),
                observed: describe(is_leader, Some(size)),
            });
        }
    }
    Ok(AuditReport {
        lemma,
        n,
        checked: predictions.len(),
        counterexamples,
    })
}

fn pow(q: u64, e: u32) -> Result<u64> {
    q.checked_pow(e)
        .ok_or_else(|| Error::InvalidParameter(format!("{q}^{e} overflows")))
}

fn predictions(lemma: LeaderLemma) -> Result<(u64, u64, Vec<(u64, Prediction)>)> {
    match lemma {
        LeaderLemma::Aks { q, n } => {
            let m = ord_mod(n, q)?;
            let qm = BigUint::from(q).pow(m);
            let low = BigUint::from(q).pow(m / 2);
            let n_big = BigUint::from(n);
            if !(low < n_big && n_big < qm) {
                return Err(Error::InvalidParameter(format!(
                    "n = {n} outside q^floor(m/2) < n <= q^m - 1 for q = {q}, m = {m}"
                )));
            }
            let bound = &n_big * BigUint::from(q).pow(m.div_ceil(2)) / (qm - 1u32);
            let bound = u64::try_from(bound).unwrap_or(u64::MAX).min(n - 1);
            let preds = (1..=bound)
                .map(|s| {
                    let leader = s % q != 0;
                    (s, Prediction { leader, size: Some(m as usize) })
                })
                .collect();
            Ok((n, q, preds))
        }
        LeaderLemma::Anti { q, ell } => {
            if ell < 2 {
                return Err(Error::InvalidParameter("ell must be >= 2".into()));
            }
            let n = pow(q, ell)? + 1;
            let bound = pow(q, (ell - 1) / 2)? + 1;
            let preds = (1..=bound.min(n - 1))
                .map(|a| {
                    let p = if a % q != 0 {
                        Prediction { leader: true, size: Some(2 * ell as usize) }
                    } else {
                        Prediction { leader: false, size: None }
                    };
                    (a, p)
                })
                .collect();
            Ok((n, q, preds))
        }
        LeaderLemma::ProjectiveEven { q, m } => {
            if m < 4 || m % 2 != 0 || q < 2 {
                return Err(Error::InvalidParameter(format!(
                    "projective lemma needs even m >= 4 (got q = {q}, m = {m})"
                )));
            }
            let n = (pow(q, m)? - 1) / (q - 1);
            let half = pow(q, m / 2)?;
            let step = (half - q) / (q - 1);
            let exceptional: BTreeSet<u64> = if q % 2 == 0 {
                if q >= 4 {
                    (q / 2..=q / 2 + (q - 4) / 2).map(|i| i + 1 + i * step).collect()
                } else {
                    BTreeSet::new()
                }
            } else if q > 3 {
                ((q + 1) / 2..=(q + 1) / 2 + (q - 5) / 2)
                    .map(|i| i + 1 + i * step)
                    .collect()
            } else {
                BTreeSet::new()
            };
            let special = (q % 2 == 1).then(|| (half + 1) / 2);
            let preds = (pow(q, (m - 2) / 2)?..=half)
                .filter(|a| a % q != 0)
                .map(|a| {
                    let p = if exceptional.contains(&a) {
                        Prediction { leader: false, size: None }
                    } else if special == Some(a) {
                        Prediction { leader: true, size: Some(m as usize / 2) }
                    } else {
                        Prediction { leader: true, size: Some(m as usize) }
                    };
                    (a, p)
                })
                .collect();
            Ok((n, q, preds))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cosets_mod_15() {
        assert_eq!(coset(15, 2, 1).unwrap(), vec![1, 2, 4, 8]);
        assert_eq!(coset(15, 2, 0).unwrap(), vec![0]);
        assert_eq!(coset(9, 2, 1).unwrap(), vec![1, 2, 4, 5, 7, 8]);
        assert!(matches!(coset(15, 3, 1), Err(Error::NotCoprime { .. })));
        assert!(coset(15, 2, 15).is_err());
    }

    #[test]
    fn partitions() {
        let p = partition(15, 2).unwrap();
        assert_eq!(p.gamma, vec![0, 1, 3, 5, 7]);
        assert_eq!(p.pi, vec![0, 1, 3, 5]);
        let p = partition(7, 2).unwrap();
        assert_eq!(p.gamma, vec![0, 1, 3]);
        assert_eq!(p.pi, vec![0, 1]);
        let p = partition(2, 3).unwrap();
        assert_eq!(p.gamma, vec![0, 1]);
        assert_eq!(p.pi, vec![0, 1]);
    }

    #[test]
    fn weights() {
        assert_eq!(q_weight(5, 2, 3).unwrap(), 2);
        assert_eq!(q_weight(26, 3, 3).unwrap(), 6);
        assert_eq!(q_weight(7, 2, 4).unwrap() + q_weight(15 - 7, 2, 4).unwrap(), 4);
        assert!(q_weight(27, 3, 3).is_err());
    }

    #[test]
    fn weight_index_set() {
        let s = index_sets(IndexSetKind::Weight { t: 1 }, 15, 2).unwrap();
        assert_eq!(s.set, vec![1, 2, 4, 8]);
        assert!(s.disjoint);
        assert!(index_sets(IndexSetKind::Weight { t: 1 }, 14, 3).is_err());
    }

    #[test]
    fn window_index_sets_mod_40() {
        // delta = q^floor((m-1)/2) = 3: disjoint
        assert!(index_sets(IndexSetKind::Window { delta: 3 }, 40, 3).unwrap().disjoint);
        // delta = q^{m/2} = 9: the overlap is exactly C_4 and C_8
        let s = index_sets(IndexSetKind::Window { delta: 9 }, 40, 3).unwrap();
        assert!(!s.disjoint);
        let mut expected = coset(40, 3, 4).unwrap();
        expected.extend(coset(40, 3, 8).unwrap());
        expected.sort_unstable();
        assert_eq!(s.intersection(), expected);
    }

    #[test]
    fn audit_examples() {
        let r = audit_leader_lemma(LeaderLemma::Anti { q: 2, ell: 5 }).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.n, 33);
        let p = partition(33, 2).unwrap();
        for a in [1, 3, 5] {
            assert!(p.is_leader(a));
            assert_eq!(p.size(a), 10);
        }
        let r = audit_leader_lemma(LeaderLemma::ProjectiveEven { q: 3, m: 4 }).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(partition(40, 3).unwrap().size(5), 2);
        let r = audit_leader_lemma(LeaderLemma::Aks { q: 2, n: 15 }).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.checked, 4);
    }

    #[test]
    fn audit_regime_errors() {
        assert!(audit_leader_lemma(LeaderLemma::Anti { q: 2, ell: 1 }).is_err());
        assert!(audit_leader_lemma(LeaderLemma::ProjectiveEven { q: 3, m: 5 }).is_err());
        // n = 3, q = 2: m = 2, q^1 = 2 < 3 <= 3 fine; n = 2 with q = 3: m = 1, 1 < 2 <= 2
        assert!(audit_leader_lemma(LeaderLemma::Aks { q: 3, n: 2 }).is_ok());
    }

    #[test]
    fn audit_detects_wrong_prediction() {
        // A deliberately wrong classification must surface as a counterexample.
        let part = partition(40, 3).unwrap();
        assert_ne!(part.size(5), 4);
    }

    #[test]
    fn coset_sizes_divide_order() {
        for q in [2u64, 3, 4, 5, 7] {
            for n in 2..200u64 {
                if gcd(n, q) != 1 {
                    continue;
                }
                let p = partition(n, q).unwrap();
                let m = ord_mod(n, q).unwrap() as usize;
                assert_eq!(p.size(1), m);
                for members in p.cosets.values() {
                    assert_eq!(m % members.len(), 0);
                }
            }
        }
    }
}

//! Sweeps shared by the property tests and the acceptance table. Each returns
//! the number of points checked and the points that failed.

#![allow(dead_code)]

use lcd_cyclic::codes::{CyclicCode, LcdMethod};
use lcd_cyclic::constructions::{
    anti_bch, bch, eq9_dimension, grm_star, projective_bch, reversible_grm, reversible_projective_bch, BchSpec,
    GrmSpec, ProjSpec,
};
use lcd_cyclic::cosets::{audit_leader_lemma, partition, q_weight, LeaderLemma};
use lcd_cyclic::cyclotomic::{factor_xn_minus_1, FieldRegistry};
use lcd_cyclic::numtheory::{gcd, ord_mod};
use lcd_cyclic::poly::Poly;

pub type Sweep<T> = (usize, Vec<T>);

pub fn lengths(max: u64, q: u64) -> impl Iterator<Item = u64> {
    (2..=max).filter(move |&n| gcd(n, q) == 1)
}

/// Every monic divisor of x^n - 1, as the product of a subset of its factors.
pub fn divisors(n: u64, q: u64, reg: &FieldRegistry) -> Vec<Poly> {
    let sf = reg.splitting(n, q).unwrap();
    let factors: Vec<&Poly> = sf.factors().map(|(_, p)| p).collect();
    (0u64..1 << factors.len())
        .map(|mask| {
            let chosen = factors.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p);
            Poly::product(sf.base(), chosen).unwrap()
        })
        .collect()
}

/// Self-reciprocal generator, root set closed under negation, zero hull, Gram
/// rank and reversibility must all agree.
pub fn lcd_disagreements(max_n: u64, reg: &FieldRegistry) -> Sweep<(u64, u64, String)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for q in [2u64, 3] {
        for n in lengths(max_n, q) {
            let sf = reg.splitting(n, q).unwrap();
            for g in divisors(n, q, reg) {
                let code = CyclicCode::from_generator(n as usize, g).unwrap();
                let votes = [
                    code.is_lcd(LcdMethod::SelfReciprocal, None).unwrap(),
                    code.is_lcd(LcdMethod::RootInverse, Some(&sf)).unwrap(),
                    code.is_lcd(LcdMethod::HullRank, None).unwrap(),
                    code.is_lcd(LcdMethod::Gram, None).unwrap(),
                    code.is_reversible(),
                ];
                checked += 1;
                if votes.iter().any(|&v| v != votes[0]) {
                    bad.push((n, q, code.generator().to_string()));
                }
            }
        }
    }
    (checked, bad)
}

pub fn product_identity_failures(max_n: u64, reg: &FieldRegistry) -> Sweep<(u64, u64)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for q in [2u64, 3] {
        for n in lengths(max_n, q) {
            let base = reg.base(q).unwrap();
            let factors = factor_xn_minus_1(reg, n, q).unwrap();
            let prod = Poly::product(&base, factors.iter().map(|(_, f)| f)).unwrap();
            checked += 1;
            if prod != Poly::x_n_minus_1(&base, n as usize) {
                bad.push((n, q));
            }
        }
    }
    (checked, bad)
}

/// Cosets are disjoint, cover Z_n, are closed under q, and |C_s| is the order
/// of q modulo n / gcd(s, n).
pub fn partition_failures(max_n: u64) -> Sweep<(u64, u64)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for q in [2u64, 3, 4, 5, 7] {
        for n in lengths(max_n, q) {
            let part = partition(n, q).unwrap();
            let mut seen = vec![0u32; n as usize];
            let mut ok = true;
            for (&leader, members) in &part.cosets {
                ok &= members.first() == Some(&leader);
                let size = match n / gcd(leader, n) {
                    1 => 1,
                    m => ord_mod(m, q).unwrap() as usize,
                };
                ok &= members.len() == size;
                for &s in members {
                    seen[s as usize] += 1;
                    ok &= members.binary_search(&(s * q % n)).is_ok();
                }
            }
            ok &= seen.iter().all(|&c| c == 1);
            checked += 1;
            if !ok {
                bad.push((n, q));
            }
        }
    }
    (checked, bad)
}

pub fn audit_grid() -> Vec<LeaderLemma> {
    let mut grid = Vec::new();
    for q in [2u64, 3] {
        for ell in 2..=7 {
            grid.push(LeaderLemma::Anti { q, ell });
        }
    }
    for q in [2u64, 3, 4, 5] {
        for m in [4, 6] {
            grid.push(LeaderLemma::ProjectiveEven { q, m });
        }
    }
    for q in [2u64, 3] {
        for n in lengths(511, q) {
            grid.push(LeaderLemma::Aks { q, n });
        }
    }
    grid
}

/// Grid points whose audit reports a counterexample. Points outside a lemma's
/// hypotheses are skipped.
pub fn audit_failures() -> Sweep<LeaderLemma> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for lemma in audit_grid() {
        let Ok(report) = audit_leader_lemma(lemma) else { continue };
        checked += 1;
        if !report.passed() {
            bad.push(lemma);
        }
    }
    (checked, bad)
}

/// Dimension predictions against generator degree over q in {2,3,4} and
/// m, ell <= 6. A construction error inside a regime is a failure.
pub fn prediction_failures(reg: &FieldRegistry) -> Sweep<String> {
    // (label, prediction held); points without a prediction are not recorded
    let mut outcomes: Vec<(String, bool)> = Vec::new();
    let mut record = |c: &lcd_cyclic::constructions::Construction| {
        if let Some(p) = c.predicted_k {
            outcomes.push((c.label.clone(), p == c.code.k()));
        }
    };
    let mut errors = Vec::new();
    for q in [2u64, 3, 4] {
        for ell in 2..=6u32 {
            let n = q.pow(ell) + 1;
            if n > 5000 {
                continue;
            }
            for delta in 3..=(q.pow((ell - 1) / 2) + 3).min(n) {
                match anti_bch(q, ell, delta, reg) {
                    Ok(c) => record(&c),
                    Err(_) => errors.push(format!("C({q},{n},{delta},0)")),
                }
            }
        }
        for m in 2..=6u32 {
            let n = q.pow(m) - 1;
            if n > 5000 {
                continue;
            }
            for delta in 2..=n.min(12) {
                record(&bch(BchSpec { q, n, delta, b: 1 }, reg).unwrap());
            }
            for ell in 0..(q - 1) * m as u64 {
                let spec = GrmSpec { q, m, ell };
                if let Ok(c) = grm_star(spec, reg) {
                    record(&c);
                }
                match reversible_grm(spec, reg) {
                    Ok(c) => record(&c),
                    Err(lcd_cyclic::Error::PredictionMismatch { .. }) => errors.push(format!("R({q},{m},{ell})")),
                    Err(_) => {}
                }
            }
            let pn = n / (q - 1);
            let top = if m >= 4 && m % 2 == 0 { q.pow(m / 2) } else { q.pow((m - 1) / 2) };
            for delta in (2..=top.max(2)).filter(|d| 2 * d <= pn) {
                let spec = ProjSpec { q, m, delta };
                record(&projective_bch(spec, reg).unwrap());
                record(&reversible_projective_bch(spec, reg).unwrap());
            }
        }
    }
    let checked = outcomes.len() + errors.len();
    errors.extend(outcomes.into_iter().filter(|(_, ok)| !ok).map(|(l, _)| l));
    (checked, errors)
}

pub fn shared_root_failures(reg: &FieldRegistry) -> Sweep<(u64, u32, u64)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for q in [2u64, 3, 4] {
        for m in [4u32, 6] {
            for delta in 2..=q.pow(m / 2) {
                let r = reversible_projective_bch(ProjSpec { q, m, delta }, reg).unwrap();
                checked += 1;
                if r.params["gcd_degree"] != r.params["epsilon_bar_m"] {
                    bad.push((q, m, delta));
                }
            }
        }
    }
    (checked, bad)
}

pub fn eq9_failures(reg: &FieldRegistry) -> Sweep<(u64, u32, u64)> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for q in [2u64, 3, 4] {
        for m in 1..=6u32 {
            if q.pow(m) > 5000 {
                continue;
            }
            for ell in 0..(q - 1) * m as u64 {
                let Ok(c) = grm_star(GrmSpec { q, m, ell }, reg) else { continue };
                let direct = (0..q.pow(m) - 1).filter(|&u| q_weight(u, q, m).unwrap() <= ell).count();
                checked += 1;
                if c.code.k() != direct || eq9_dimension(q, m, ell) != direct as i128 {
                    bad.push((q, m, ell));
                }
            }
        }
    }
    (checked, bad)
}

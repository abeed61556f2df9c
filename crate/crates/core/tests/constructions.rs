//! Regime sweeps: every dimension prediction against the degree of the
//! constructed generator, and the reversibility of every reversible family.

use lcd_cyclic::codes::LcdMethod;
use lcd_cyclic::constructions::{
    anti_bch, bch, count_reversible, eq9_dimension, enumerate_reversible, grm_star,
    projective_bch, reversible_bch, reversible_grm, reversible_projective_bch, BchSpec, GrmSpec,
    ProjSpec, ReversiblePattern,
};
use lcd_cyclic::cosets::partition;
use lcd_cyclic::cyclotomic::FieldRegistry;
use lcd_cyclic::poly::Poly;
use num_bigint::BigUint;

fn lcd(c: &lcd_cyclic::codes::CyclicCode) -> bool {
    c.is_lcd(LcdMethod::HullRank, None).unwrap()
}

/// The single failure is n = 9 over GF(2), where a = 3 = q + 1 divides n and
/// has a coset of size 2 rather than 2 ell = 6.
#[test]
fn anti_primitive_regime() {
    let reg = FieldRegistry::new();
    let mut failures = Vec::new();
    for q in [2u64, 3] {
        for ell in 2..=6u32 {
            let n = q.pow(ell) + 1;
            let upper = q.pow((ell - 1) / 2) + 3;
            for delta in 3..=upper.min(n) {
                match anti_bch(q, ell, delta, &reg) {
                    Ok(c) => {
                        assert_eq!(c.predicted_k, Some(c.code.k()), "{}", c.label);
                        assert!(lcd(&c.code), "{}", c.label);
                    }
                    Err(_) => failures.push((q, ell, delta)),
                }
            }
        }
    }
    assert_eq!(failures, vec![(2, 3, 5)]);
}

#[test]
fn narrow_sense_regime() {
    let reg = FieldRegistry::new();
    let mut checked = 0;
    for q in [2u64, 3, 4] {
        for n in 3..=130u64 {
            if lcd_cyclic::numtheory::gcd(n, q) != 1 {
                continue;
            }
            for delta in 2..=n.min(12) {
                let c = bch(BchSpec { q, n, delta, b: 1 }, &reg).unwrap();
                if let Some(k) = c.predicted_k {
                    assert_eq!(k, c.code.k());
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100, "only {checked} points in regime");
}

#[test]
fn eq9_matches_root_count() {
    let reg = FieldRegistry::new();
    for q in [2u64, 3] {
        for m in 1..=5u32 {
            for ell in 0..(q - 1) * m as u64 {
                let spec = GrmSpec { q, m, ell };
                match grm_star(spec, &reg) {
                    Ok(c) => {
                        assert_eq!(c.code.k() as i128, eq9_dimension(q, m, ell));
                        let direct = (0..q.pow(m) - 1)
                            .filter(|&u| lcd_cyclic::cosets::q_weight(u, q, m).unwrap() <= ell)
                            .count();
                        assert_eq!(c.code.k(), direct);
                    }
                    // only the q(m-1) bound may reject an order below (q-1)m
                    Err(_) => assert!(ell >= q * (m as u64 - 1)),
                }
            }
        }
    }
}

#[test]
fn reversible_grm_regime() {
    let reg = FieldRegistry::new();
    let mut predicted = 0;
    for q in [2u64, 3, 4] {
        for m in 2..=6u32 {
            if q.pow(m) > 5000 {
                continue;
            }
            for ell in 0..(q - 1) * m as u64 {
                let Ok(c) = reversible_grm(GrmSpec { q, m, ell }, &reg) else {
                    continue;
                };
                assert!(lcd(&c.code), "{}", c.label);
                if let Some(k) = c.predicted_k {
                    assert_eq!(k, c.code.k());
                    predicted += 1;
                }
            }
        }
    }
    assert!(predicted > 10);
}

#[test]
fn projective_regimes() {
    let reg = FieldRegistry::new();
    for q in [2u64, 3, 4] {
        for m in 2..=6u32 {
            let half = q.pow(m / 2);
            let odd = q.pow((m - 1) / 2);
            let top = if m >= 4 && m % 2 == 0 { half } else { odd };
            let n = (q.pow(m) - 1) / (q - 1);
            for delta in (2..=top.max(2)).filter(|d| 2 * d <= n) {
                let spec = ProjSpec { q, m, delta };
                let c = projective_bch(spec, &reg).unwrap();
                if m >= 4 && m % 2 == 0 {
                    assert_eq!(c.predicted_k, Some(c.code.k()), "{}", c.label);
                }
                let r = reversible_projective_bch(spec, &reg).unwrap();
                assert!(lcd(&r.code), "{}", r.label);
                if spec.in_odd_regime().unwrap() || spec.in_even_regime().unwrap() {
                    assert_eq!(r.predicted_k, Some(r.code.k()), "{}", r.label);
                    assert!(r.bound.as_ref().unwrap().d >= 2 * delta);
                }
            }
        }
    }
}

#[test]
fn shared_roots_match_epsilon_bar() {
    let reg = FieldRegistry::new();
    for q in [2u64, 3, 4] {
        for m in [4u32, 6] {
            for delta in 2..=q.pow(m / 2) {
                let r = reversible_projective_bch(ProjSpec { q, m, delta }, &reg).unwrap();
                assert_eq!(
                    r.params["gcd_degree"], r.params["epsilon_bar_m"],
                    "q={q} m={m} delta={delta}"
                );
            }
        }
    }
}

#[test]
fn reversible_patterns_are_lcd() {
    let reg = FieldRegistry::new();
    for q in [2u64, 3, 4] {
        for n in 3..=40u64 {
            if lcd_cyclic::numtheory::gcd(n, q) != 1 {
                continue;
            }
            for t in 0..=n {
                for p in [ReversiblePattern::ZeroCentered, ReversiblePattern::OddMid, ReversiblePattern::EvenMid] {
                    if let Ok(c) = reversible_bch(p, q, n, t, &reg) {
                        assert!(lcd(&c.code), "{}", c.label);
                    }
                }
            }
        }
    }
}

/// Brute-force census: products of subsets of the irreducible factors of
/// x^n - 1 that are self-reciprocal, excluding g = 1.
fn census(n: u64, q: u64, reg: &FieldRegistry) -> u64 {
    let sf = reg.splitting(n, q).unwrap();
    let factors: Vec<&Poly> = sf.factors().map(|(_, p)| p).collect();
    (1u64..1 << factors.len())
        .filter(|mask| {
            let g = Poly::product(sf.base(), factors.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p))
                .unwrap();
            g.is_self_reciprocal().unwrap()
        })
        .count() as u64
}

#[test]
fn counts_match_census() {
    let reg = FieldRegistry::new();
    for q in [2u64, 3] {
        for n in 2..=63u64 {
            if lcd_cyclic::numtheory::gcd(n, q) != 1 {
                continue;
            }
            if partition(n, q).unwrap().gamma.len() > 18 {
                continue;
            }
            let c = count_reversible(n, q, &reg).unwrap();
            assert_eq!(c.count, BigUint::from(census(n, q, &reg)), "n={n} q={q}");
        }
    }
}

#[test]
fn enumeration_yields_distinct_lcd_codes() {
    let reg = FieldRegistry::new();
    for (n, q, expect) in [(15u64, 2u64, 15usize), (7, 2, 3), (26, 3, 63), (21, 2, 63)] {
        let codes: Vec<_> = enumerate_reversible(n, q, None, &reg).unwrap().collect();
        if n != 21 {
            assert_eq!(codes.len(), expect);
        }
        let mut gens: Vec<_> = codes.iter().map(|c| c.generator().to_codes()).collect();
        gens.sort();
        gens.dedup();
        assert_eq!(gens.len(), codes.len());
        assert!(codes.iter().all(lcd));
    }
}

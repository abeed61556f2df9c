//! Algebraic identities: exhaustive sweeps over small lengths plus randomized
//! checks of field arithmetic, duality and distance bounds.

mod common;

use lcd_cyclic::codes::{min_distance, CyclicCode, DistanceBudget};
use lcd_cyclic::cyclotomic::FieldRegistry;
use lcd_cyclic::gf::FieldSpec;
use lcd_cyclic::poly::Poly;
use proptest::prelude::*;

#[test]
fn lcd_tests_agree() {
    let (checked, bad) = common::lcd_disagreements(63, &FieldRegistry::new());
    assert!(checked > 10_000, "{checked}");
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn factors_multiply_to_xn_minus_1() {
    let (_, bad) = common::product_identity_failures(63, &FieldRegistry::new());
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn cosets_partition_zn() {
    let (_, bad) = common::partition_failures(500);
    assert!(bad.is_empty(), "{bad:?}");
}

/// Only n = 9 over GF(2) breaks the leader classification on the grid.
#[test]
fn audits_on_grid() {
    let (checked, bad) = common::audit_failures();
    assert!(checked > 40, "{checked}");
    assert_eq!(bad, vec![lcd_cyclic::cosets::LeaderLemma::Anti { q: 2, ell: 3 }]);
}

#[test]
fn eq9_and_shared_roots() {
    let reg = FieldRegistry::new();
    assert!(common::eq9_failures(&reg).1.is_empty());
    assert!(common::shared_root_failures(&reg).1.is_empty());
}

/// A random divisor of x^n - 1 with n drawn from small lengths prime to q.
fn divisor_strategy() -> impl Strategy<Value = (u64, u64, u64)> {
    (prop_oneof![Just(2u64), Just(3), Just(4)], 3u64..=45, any::<u64>())
        .prop_filter("n prime to q", |(q, n, _)| lcd_cyclic::numtheory::gcd(*n, *q) == 1)
}

fn code_from(n: u64, q: u64, mask: u64, reg: &FieldRegistry) -> CyclicCode {
    let sf = reg.splitting(n, q).unwrap();
    let chosen = sf.factors().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, (_, p))| p);
    CyclicCode::from_generator(n as usize, Poly::product(sf.base(), chosen).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(p in prop_oneof![Just(2u64), Just(3), Just(5)], e in 1u32..=6, a: u128, b: u128, c: u128) {
        let f = FieldSpec::new(p, e).unwrap();
        let q = f.order();
        let (a, b, c) = (f.element_from_code(a % q).unwrap(), f.element_from_code(b % q).unwrap(), f.element_from_code(c % q).unwrap());
        prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), f.one());
        }
    }

    #[test]
    fn duality((q, n, mask) in divisor_strategy()) {
        let reg = FieldRegistry::new();
        let c = code_from(n, q, mask, &reg);
        let d = c.dual();
        prop_assert_eq!(c.k() + d.k(), c.n());
        prop_assert_eq!(d.dual().generator().clone(), c.generator().clone());
        prop_assert_eq!(c.hull().generator().clone(), d.hull().generator().clone());
        prop_assert!(c.contains(&c.hull()) && d.contains(&c.hull()));
    }

    #[test]
    fn distance_bounds((q, n, mask) in divisor_strategy()) {
        let reg = FieldRegistry::new();
        let c = code_from(n, q, mask, &reg);
        prop_assume!(c.k() > 0 && c.generator().degree() != Some(0));
        let sf = reg.splitting(n, q).unwrap();
        let r = min_distance(&c, Some(&sf), &DistanceBudget::default()).unwrap();
        let bose = c.bose_distance(&sf).unwrap();
        prop_assert!(r.d_lower >= bose.min(r.d_exact.unwrap_or(u64::MAX)));
        if let Some(d) = r.d_exact {
            prop_assert!(d >= bose);
            prop_assert!(d as usize <= c.n() - c.k() + 1);
            let w = r.witness.as_ref().unwrap();
            prop_assert_eq!(w.weight, d);
            prop_assert_eq!(w.codeword.iter().filter(|&&x| x != 0).count() as u64, d);
        }
    }
}

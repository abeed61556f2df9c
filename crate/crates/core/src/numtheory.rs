//! Integer helpers: multiplicative order, prime factorization of field orders,
//! and the closed-form gcd of `a^l + 1` and `a^h - 1`.

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub(crate) fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    let (a, b) = (a % m, b % m);
    if m <= u64::MAX as u128 {
        return a * b % m;
    }
    let (mut acc, mut base, mut e) = (0u128, a, b);
    while e > 0 {
        if e & 1 == 1 {
            acc = addmod(acc, base, m);
        }
        base = addmod(base, base, m);
        e >>= 1;
    }
    acc
}

fn addmod(a: u128, b: u128, m: u128) -> u128 {
    let (s, overflow) = a.overflowing_add(b);
    if overflow || s >= m {
        s.wrapping_sub(m)
    } else {
        s
    }
}

pub(crate) fn powmod(base: u128, mut e: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u128;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Miller-Rabin. Deterministic below 3.3e24, overwhelmingly likely above.
pub fn is_prime(n: u128) -> bool {
    const BASES: [u128; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn gcd128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Brent's variant of Pollard rho; `n` must be composite and odd.
fn pollard_brent(n: u128) -> u128 {
    let mut c = 1u128;
    loop {
        let f = |x: u128| addmod(mulmod(x, x, n), c, n);
        let (mut y, mut r, mut g) = (2u128, 1u64, 1u128);
        let mut q = 1u128;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let steps = 128.min(r - k);
                for _ in 0..steps {
                    y = f(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                g = gcd128(q, n);
                k += steps;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd128(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
        c += 1;
    }
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(n: u128) -> Vec<u128> {
    let mut out = Vec::new();
    factor_into(n, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

fn factor_into(mut n: u128, out: &mut Vec<u128>) {
    for p in [2u128, 3, 5, 7, 11, 13] {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
    }
    let mut p = 17u128;
    while p < 1 << 16 && p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 2;
    }
    split(n, out);
}

fn split(n: u128, out: &mut Vec<u128>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split(d, out);
    split(n / d, out);
}

/// Distinct prime factors of `p^e - 1`, using the cyclotomic splitting
/// `p^e - 1 = prod_{d | e} Phi_d(p)` so each piece stays small.
pub fn prime_factors_of_field_order(p: u64, e: u32) -> Result<Vec<u128>> {
    let order = checked_pow(p as u128, e).ok_or(Error::FieldTooLarge { p, e })?;
    let divisors: Vec<u32> = (1..=e).filter(|d| e % d == 0).collect();
    let mut cyclo: Vec<(u32, u128)> = Vec::new();
    let mut out = Vec::new();
    for &d in &divisors {
        let mut value = (p as u128).pow(d) - 1;
        for &(k, phi) in &cyclo {
            if d % k == 0 {
                value /= phi;
            }
        }
        cyclo.push((d, value));
        factor_into(value, &mut out);
    }
    debug_assert!(order > 0);
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub(crate) fn checked_pow(base: u128, e: u32) -> Option<u128> {
    let mut acc: u128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(base)?;
    }
    (acc < 1 << 127).then_some(acc)
}

/// Splits a prime power `q = p^r` into `(p, r)`.
pub fn prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q)
        .find(|d| q % d == 0)
        .expect("q >= 2 has a smallest divisor");
    let mut r = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        r += 1;
    }
    if rest != 1 {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p, r))
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Multiplicative order of `q` modulo `n`: the least `m >= 1` with `q^m = 1 (mod n)`.
pub fn ord_mod(n: u64, q: u64) -> Result<u32> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("ord_mod needs n >= 2, got {n}")));
    }
    if gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let (n, q) = (n as u128, q as u128);
    let mut x = q % n;
    let mut m = 1u32;
    while x != 1 {
        x = x * q % n;
        m += 1;
    }
    Ok(m)
}

/// `gcd(a^ell + 1, a^h - 1)` by the three-case closed form, checked against a
/// direct big-integer gcd.
pub fn gcd_power_pair(a: u64, ell: u32, h: u32) -> Result<BigUint> {
    if a < 2 || ell < 1 || h < 1 {
        return Err(Error::InvalidParameter(format!(
            "gcd_power_pair needs a >= 2, ell >= 1, h >= 1 (got {a}, {ell}, {h})"
        )));
    }
    let g = ell.gcd(&h);
    let base = BigUint::from(a);
    let formula = if (h / g) % 2 == 1 {
        if a % 2 == 0 {
            BigUint::from(1u32)
        } else {
            BigUint::from(2u32)
        }
    } else {
        base.pow(g) + 1u32
    };
    let direct = (base.pow(ell) + 1u32).gcd(&(base.pow(h) - 1u32));
    if formula != direct {
        return Err(Error::Inconsistent(format!(
            "gcd({a}^{ell}+1, {a}^{h}-1): closed form {formula} != direct {direct}"
        )));
    }
    Ok(direct)
}

pub fn binomial(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(ord_mod(9, 2).unwrap(), 6);
        assert_eq!(ord_mod(15, 2).unwrap(), 4);
        assert_eq!(ord_mod(40, 3).unwrap(), 4);
        assert!(matches!(ord_mod(15, 3), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn gcd_pairs() {
        assert_eq!(gcd_power_pair(2, 2, 3).unwrap(), BigUint::from(1u32));
        assert_eq!(gcd_power_pair(3, 1, 2).unwrap(), BigUint::from(4u32));
        assert_eq!(gcd_power_pair(3, 3, 3).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn gcd_pair_formula_exhaustive() {
        for a in 2..=5 {
            for ell in 1..=12 {
                for h in 1..=12 {
                    gcd_power_pair(a, ell, h).unwrap();
                }
            }
        }
    }

    #[test]
    fn order_divides_phi() {
        for q in [2u64, 3, 4, 5, 7] {
            for n in 2..300u64 {
                if gcd(n, q) != 1 {
                    continue;
                }
                let m = ord_mod(n, q).unwrap();
                assert_eq!(euler_phi(n) % m as u64, 0);
                for j in 1..m {
                    assert_ne!(powmod(q as u128, j as u128, n as u128), 1);
                }
                assert_eq!(powmod(q as u128, m as u128, n as u128), 1);
            }
        }
    }

    #[test]
    fn field_order_factors() {
        assert_eq!(prime_factors_of_field_order(2, 4).unwrap(), vec![3, 5]);
        assert_eq!(prime_factors_of_field_order(2, 6).unwrap(), vec![3, 7]);
        let f = prime_factors_of_field_order(3, 52).unwrap();
        let n = 3u128.pow(52) - 1;
        for p in &f {
            assert!(is_prime(*p));
            assert_eq!(n % p, 0);
        }
        let mut rest = n;
        for p in &f {
            while rest % p == 0 {
                rest /= p;
            }
        }
        assert_eq!(rest, 1);
    }

    #[test]
    fn pollard_splits_semiprime() {
        let n = 1_000_003u128 * 998_244_353u128;
        assert_eq!(prime_factors(n), vec![1_000_003, 998_244_353]);
        let big = 4_294_967_311u128 * 18_446_744_073_709_551_557u128;
        assert_eq!(prime_factors(big), vec![4_294_967_311, 18_446_744_073_709_551_557]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(4).unwrap(), (2, 2));
        assert_eq!(prime_power(5).unwrap(), (5, 1));
        assert!(prime_power(6).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(3, 5), 0);
    }
}

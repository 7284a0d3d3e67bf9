//! Small integer helpers shared by the field and code modules.

use num_bigint::BigUint;
use num_traits::One;

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors in increasing order.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q = p^k`; `None` when `q` is not a prime power.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut k = 0;
    let mut r = q;
    while r > 1 {
        r /= p;
        k += 1;
    }
    Some((p, k))
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Multiplicative order of `q` modulo `n` (`n >= 1`, `gcd(q, n) = 1`).
pub(crate) fn multiplicative_order(q: u64, n: u64) -> u64 {
    if n == 1 {
        return 1;
    }
    let q = q % n;
    let mut x = q;
    let mut k = 1;
    while x != 1 {
        x = (x as u128 * q as u128 % n as u128) as u64;
        k += 1;
    }
    k
}

pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

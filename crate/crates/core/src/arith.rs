//! Small integer number theory: primality, factorization, divisors, the
//! Möbius function, Euler's totient and multiplicative orders.
//!
//! Every modulus handled here is tiny (at most a group exponent), so the
//! routines favour plain trial division and iteration.

use num_integer::Integer;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
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

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::domain(format!("{p} is not prime")))
    }
}

/// Prime factorization as `(prime, exponent)` pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All positive divisors of `n`, ascending. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (q, _)| acc / q * (q - 1))
}

pub fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut b = base as u128 % m;
    let mut e = exp;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc as u64
}

pub(crate) fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| Error::domain(format!("{base}^{exp} overflows 64 bits")))
}

/// Largest `e` such that `p^e` divides `n` (`n > 0`).
pub(crate) fn valuation(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Smallest `t >= 1` with `b^t = 1 (mod m)`; 1 when `m = 1`.
pub fn multiplicative_order(b: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::domain("multiplicative order modulo 0"));
    }
    if m == 1 {
        return Ok(1);
    }
    if b.gcd(&m) != 1 {
        return Err(Error::domain(format!(
            "{b} is not a unit modulo {m}, so it has no multiplicative order"
        )));
    }
    let base = (b % m) as u128;
    let mut x = base;
    let mut t = 1u64;
    while x != 1 {
        x = x * base % m as u128;
        t += 1;
        debug_assert!(t <= m);
    }
    Ok(t)
}

/// Integer partitions of `n` in decreasing lexicographic order, parts
/// non-increasing: `4 -> [4], [3,1], [2,2], [2,1,1], [1,1,1,1]`.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

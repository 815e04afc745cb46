//! Small-integer arithmetic used for order bookkeeping.

use num_integer::Integer;

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// True for `p^k` with `k >= 0`, so 1 counts.
pub fn is_prime_power(n: u64) -> bool {
    n >= 1 && factorize(n).len() <= 1
}

/// The prime `p` with `n = p^k`, `k >= 1`.
pub fn prime_of_power(n: u64) -> Option<u64> {
    match factorize(n).as_slice() {
        [(p, _)] => Some(*p),
        _ => None,
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: u64, p: u64) -> u64 {
    let mut part = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        part *= p;
    }
    part
}

pub fn totient(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

/// Multiplicative order of `p` modulo `q`: the least `a >= 1` with `p^a = 1 (mod q)`.
///
/// Returns `None` when `gcd(p, q) != 1` or `q < 2`.
pub fn exp_order(p: u64, q: u64) -> Option<u32> {
    if q < 2 || p.gcd(&q) != 1 {
        return None;
    }
    let base = p % q;
    let mut acc = base;
    let mut a = 1;
    while acc != 1 % q {
        acc = acc * base % q;
        a += 1;
    }
    Some(a)
}

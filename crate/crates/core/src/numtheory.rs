//! Small integer helpers shared by the field, table and indicator code.

use num_integer::Integer;

/// Prime factorization by trial division, as (prime, exponent) pairs in increasing order.
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
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// All positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n) {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    divs
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

pub fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn gcd_i64(a: i64, b: i64) -> u64 {
    a.unsigned_abs().gcd(&b.unsigned_abs())
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Inverse of `a` modulo `n` (not necessarily prime), if it exists.
pub fn inv_mod_general(a: i64, n: u64) -> Option<u64> {
    if n == 1 {
        return Some(0);
    }
    let a = a.rem_euclid(n as i64);
    let ext = a.extended_gcd(&(n as i64));
    if ext.gcd != 1 {
        return None;
    }
    Some(ext.x.rem_euclid(n as i64) as u64)
}

/// Smallest generator of the multiplicative group of GF(p).
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_divisors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("a prime has a primitive root")
}

/// Legendre symbol (a/p) for an odd prime p, as -1, 0 or 1.
pub fn legendre(a: i64, p: u64) -> i32 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

pub fn isqrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_of_420() {
        let d = divisors(420);
        assert_eq!(d.len(), 24);
        assert_eq!(d.first(), Some(&1));
        assert_eq!(d.last(), Some(&420));
        assert!(d.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn phi_and_roots() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(420), 96);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(421), 2);
        assert_eq!(inv_mod_general(5, 6), Some(5));
        assert_eq!(inv_mod_general(2, 6), None);
        assert_eq!(legendre(2, 7), 1);
        assert_eq!(legendre(3, 7), -1);
        assert_eq!(isqrt(5040), 70);
    }
}

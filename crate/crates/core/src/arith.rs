//! Small number-theoretic helpers: gcd, primality, Euler's totient, the
//! prime-to-`l` part of an integer, and triangular/square recognition.
//!
//! Everything here is exact 64-bit integer arithmetic at desk scale; there is
//! no need for anything faster than trial division.

use crate::error::Error;
use alloc::vec::Vec;

/// Greatest common divisor. `gcd(0, 0) = 0`.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Trial-division primality test.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Whether `p` is a power of `base` (including `base^0 = 1`).
pub fn is_power_of(mut p: u64, base: u64) -> bool {
    debug_assert!(base >= 2);
    if p == 0 {
        return false;
    }
    while p % base == 0 {
        p /= base;
    }
    p == 1
}

/// The prime-to-`l` part of `n`: `n` divided by the largest power of `l`
/// dividing it.
///
/// Errors on `n = 0` and on composite `l`.
pub fn prime_to_part(n: u64, l: u32) -> Result<u64, Error> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    if !is_prime(l) {
        return Err(Error::NotPrime(l));
    }
    let l = l as u64;
    let mut n = n;
    while n % l == 0 {
        n /= l;
    }
    Ok(n)
}

/// Euler's totient via trial-division factorization.
pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "euler_phi is defined for positive integers");
    let mut n = n;
    let mut phi = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            phi -= phi / p;
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// If `x` is the triangular number `k(k+1)/2`, returns `k` (with `T_0 = 0`).
pub fn triangular_index(x: u64) -> Option<u64> {
    // k = (sqrt(8x+1) - 1) / 2
    let mut k = 0u64;
    while k * (k + 1) / 2 < x {
        k += 1;
    }
    (k * (k + 1) / 2 == x).then_some(k)
}

/// If `x = k^2`, returns `k` (with `0 = 0^2`).
pub fn square_index(x: u64) -> Option<u64> {
    let mut k = 0u64;
    while k * k < x {
        k += 1;
    }
    (k * k == x).then_some(k)
}

/// Multiplication that treats overflow as a hard error.
///
/// All counts in scope fit comfortably in 64 bits; wrapping would indicate a
/// caller far outside the supported desk-scale sizes.
pub(crate) fn mul_counts(a: u64, b: u64) -> u64 {
    a.checked_mul(b).expect("count overflowed u64")
}

/// Addition with the same overflow policy as [`mul_counts`].
pub(crate) fn add_counts(a: u64, b: u64) -> u64 {
    a.checked_add(b).expect("count overflowed u64")
}

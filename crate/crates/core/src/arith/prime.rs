//! Deterministic primality for everything up to [`DETERMINISTIC_LIMIT`].

use crate::{Error, Result};

/// Below this bound primality is a bitmap lookup.
pub const TABLE_LIMIT: u128 = 10_000;

/// Miller-Rabin with the first thirteen prime bases has no strong
/// pseudoprimes below this value (Sorenson and Webster, 2015).
pub const DETERMINISTIC_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;

const WITNESSES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

const TABLE_WORDS: usize = (TABLE_LIMIT as usize).div_ceil(64);

/// Bit `i` set iff `i` is prime, for `i < TABLE_LIMIT`.
static PRIME_BITS: [u64; TABLE_WORDS] = sieve_bits();

const fn sieve_bits() -> [u64; TABLE_WORDS] {
    let limit = TABLE_LIMIT as usize;
    let mut composite = [false; TABLE_LIMIT as usize];
    composite[0] = true;
    composite[1] = true;
    let mut i = 2;
    while i * i < limit {
        if !composite[i] {
            let mut j = i * i;
            while j < limit {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    let mut bits = [0u64; TABLE_WORDS];
    let mut k = 0;
    while k < limit {
        if !composite[k] {
            bits[k / 64] |= 1 << (k % 64);
        }
        k += 1;
    }
    bits
}

/// Number of primes below 1000.
pub(crate) const SMALL_PRIME_COUNT: usize = 168;

/// The primes below 1000, ascending.
pub(crate) static SMALL_PRIMES: [u32; SMALL_PRIME_COUNT] = small_primes();

const fn small_primes() -> [u32; SMALL_PRIME_COUNT] {
    let bits = sieve_bits();
    let mut out = [0u32; SMALL_PRIME_COUNT];
    let mut count = 0;
    let mut k = 2;
    while k < 1000 {
        if bits[k / 64] & (1 << (k % 64)) != 0 {
            out[count] = k as u32;
            count += 1;
        }
        k += 1;
    }
    out
}

fn table_lookup(n: u128) -> bool {
    let i = n as usize;
    PRIME_BITS[i / 64] & (1 << (i % 64)) != 0
}

/// `(a + b) mod m` for `a, b < m`, without overflow.
#[inline]
pub(crate) fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    let gap = m - b;
    if a >= gap {
        a - gap
    } else {
        a + b
    }
}

/// `(a * b) mod m`. Single widening multiply when `m` fits in 64 bits,
/// shift-and-add otherwise.
#[inline]
pub(crate) fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return (a % m) * (b % m) % m;
    }
    let mut a = a % m;
    let mut b = b % m;
    let mut acc = 0;
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

pub(crate) fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Strong probable-prime test of odd `n > 2` to base `a`.
fn strong_probable_prime(n: u128, a: u128) -> bool {
    let a = a % n;
    if a == 0 {
        return true;
    }
    let d_shift = (n - 1).trailing_zeros();
    let d = (n - 1) >> d_shift;
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..d_shift {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Returns whether `n` is prime.
///
/// Inputs below 10⁴ are looked up in a table. Larger inputs run Miller-Rabin
/// over a witness set that is proven exact below [`DETERMINISTIC_LIMIT`];
/// anything at or above that bound is rejected instead of answered
/// probabilistically.
pub fn is_prime(n: u128) -> Result<bool> {
    if n < TABLE_LIMIT {
        return Ok(table_lookup(n));
    }
    if n >= DETERMINISTIC_LIMIT {
        return Err(Error::Magnitude(
            "primality is only certified below 3317044064679887385961981",
        ));
    }
    if n.is_multiple_of(2) {
        return Ok(false);
    }
    for &p in SMALL_PRIMES.iter().take(25) {
        if n.is_multiple_of(p as u128) {
            return Ok(false);
        }
    }
    Ok(WITNESSES.iter().all(|&a| strong_probable_prime(n, a)))
}

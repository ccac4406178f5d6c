//! Exact integer arithmetic: primality, factorization, valuations and the
//! multiplicative statistics (`ω`, cube part) used throughout the crate.
//!
//! All values are `u128`. Factorization is complete or it fails loudly; there
//! is no "probably prime" cofactor in a returned [`Factorization`].

use alloc::vec::Vec;
use core::fmt;

mod factor;
mod prime;

pub use factor::{factor, TRIAL_DIVISION_LIMIT};
pub(crate) use prime::pow_mod;
pub use prime::{is_prime, DETERMINISTIC_LIMIT, TABLE_LIMIT};

use crate::{Error, Result};

/// Prime-power decomposition of a positive integer.
///
/// Pairs are `(prime, exponent)` with primes strictly increasing and every
/// exponent at least 1. The factorization of 1 is empty.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Factorization {
    factors: Vec<(u128, u32)>,
}

impl Factorization {
    pub(crate) fn from_unsorted(mut pairs: Vec<(u128, u32)>) -> Self {
        pairs.sort_unstable_by_key(|&(p, _)| p);
        let mut factors: Vec<(u128, u32)> = Vec::with_capacity(pairs.len());
        for (p, e) in pairs {
            match factors.last_mut() {
                Some(last) if last.0 == p => last.1 += e,
                _ => factors.push((p, e)),
            }
        }
        Factorization { factors }
    }

    /// The `(prime, exponent)` pairs, ascending by prime.
    pub fn pairs(&self) -> &[(u128, u32)] {
        &self.factors
    }

    /// Iterates over the distinct primes.
    pub fn primes(&self) -> impl Iterator<Item = u128> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p`, zero if absent.
    pub fn exponent_of(&self, p: u128) -> u32 {
        self.factors.binary_search_by_key(&p, |&(q, _)| q).map_or(0, |i| self.factors[i].1)
    }

    /// Number of distinct prime divisors.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    /// True when the factored integer is itself prime.
    pub fn is_prime(&self) -> bool {
        matches!(self.factors.as_slice(), [(_, 1)])
    }

    /// Product of `p^e` over the pairs with `e ≥ 3`.
    pub fn cube_part(&self) -> u128 {
        self.factors.iter().filter(|&&(_, e)| e >= 3).map(|&(p, e)| p.pow(e)).product()
    }

    /// True when no exponent exceeds 2.
    pub fn is_cube_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e <= 2)
    }

    /// Multiplies the factorization back out, `None` on overflow.
    pub fn value(&self) -> Option<u128> {
        self.factors
            .iter()
            .try_fold(1u128, |acc, &(p, e)| p.checked_pow(e).and_then(|pe| acc.checked_mul(pe)))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Largest `e` with `p^e | n`.
pub fn valuation(n: u128, p: u128) -> Result<u32> {
    if n == 0 {
        return Err(Error::InvalidArgument("valuation of 0 is undefined".into()));
    }
    if !is_prime(p)? {
        return Err(Error::InvalidArgument(alloc::format!("{p} is not prime")));
    }
    let mut n = n;
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    Ok(e)
}

/// Number of distinct prime divisors of `n ≥ 1`.
pub fn omega(n: u128) -> Result<usize> {
    factor(n).map(|f| f.omega())
}

/// Product of the prime powers of `n` with exponent at least 3; 1 iff `n` is
/// cube-free.
pub fn cube_part(n: u128) -> Result<u128> {
    factor(n).map(|f| f.cube_part())
}

/// `(⌊√n⌋, ⌊√n⌋² == n)`.
pub fn integer_sqrt(n: u128) -> (u128, bool) {
    if n < 2 {
        return (n, true);
    }
    // Newton from above: start at a power of two ≥ √n.
    let bits = 128 - n.leading_zeros();
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let y = (x + n / x) >> 1;
        if y >= x {
            break;
        }
        x = y;
    }
    (x, x * x == n)
}

/// `⌊∛n⌋`.
pub fn integer_cbrt(n: u128) -> u128 {
    if n < 2 {
        return n;
    }
    let bits = 128 - n.leading_zeros();
    let mut lo = 0u128;
    let mut hi = 1u128 << bits.div_ceil(3);
    // Invariant: lo³ ≤ n < hi³.
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match mid.checked_mul(mid).and_then(|s| s.checked_mul(mid)) {
            Some(c) if c <= n => lo = mid,
            _ => hi = mid,
        }
    }
    lo
}

/// All primes `≤ limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = alloc::vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

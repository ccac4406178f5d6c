//! Complete factorization: trial division, certification, then Brent's rho.

use alloc::vec::Vec;

use num_integer::Integer;

use super::prime::{add_mod, is_prime, mul_mod, SMALL_PRIMES};
use super::{integer_cbrt, integer_sqrt, Factorization};
use crate::{Error, Result};

/// Upper end of the trial-division stage.
pub const TRIAL_DIVISION_LIMIT: u128 = 1_000_000;

/// Number of `(x0, c)` restarts given to rho for a single cofactor.
const RHO_ATTEMPTS: u32 = 48;

/// Iterations allowed per rho attempt.
const RHO_MAX_STEPS: u64 = 1 << 24;

/// Wheel mod 30 offsets for the stretch of trial division above 1000.
const WHEEL: [u128; 8] = [1, 7, 11, 13, 17, 19, 23, 29];

fn strip(n: &mut u128, p: u128, out: &mut Vec<(u128, u32)>) {
    let mut e = 0;
    while (*n).is_multiple_of(p) {
        *n /= p;
        e += 1;
    }
    if e > 0 {
        out.push((p, e));
    }
}

/// Factors `n ≥ 1` completely.
///
/// Primes below 1000 are divided out first. A remaining cofactor is then
/// certified prime if possible; otherwise trial division continues on a
/// mod-30 wheel up to 10⁶, and whatever composite part survives is split by
/// Brent's rho with deterministic restarts. Exhausting the rho budget yields
/// [`Error::FactorizationFailed`], never a partial answer.
pub fn factor(n: u128) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::InvalidArgument("cannot factor 0".into()));
    }
    let mut pairs = Vec::new();
    let mut rest = n;
    for &p in SMALL_PRIMES.iter() {
        let p = p as u128;
        if p * p > rest {
            break;
        }
        strip(&mut rest, p, &mut pairs);
    }
    if rest > 1 && rest < 1_000_000 {
        // No prime factor below min(1000, √rest) remains, so rest is prime.
        pairs.push((rest, 1));
        rest = 1;
    }
    if rest > 1 && !is_prime(rest)? {
        wheel_trial_division(&mut rest, &mut pairs)?;
    }
    if rest > 1 {
        if is_prime(rest)? {
            pairs.push((rest, 1));
        } else {
            split_composite(rest, &mut pairs)?;
        }
    }
    Ok(Factorization::from_unsorted(pairs))
}

fn wheel_trial_division(rest: &mut u128, out: &mut Vec<(u128, u32)>) -> Result<()> {
    let mut base = 990u128;
    'outer: while base < TRIAL_DIVISION_LIMIT {
        for off in WHEEL {
            let d = base + off;
            if d < 1000 {
                continue;
            }
            if d * d > *rest {
                break 'outer;
            }
            if (*rest).is_multiple_of(d) {
                strip(rest, d, out);
                if *rest == 1 || is_prime(*rest)? {
                    break 'outer;
                }
            }
        }
        base += 30;
    }
    // Anything left below the square of the wheel cursor is prime.
    Ok(())
}

/// Splits a composite with no prime factor below 1000 into primes.
fn split_composite(n: u128, out: &mut Vec<(u128, u32)>) -> Result<()> {
    let mut stack = alloc::vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime(m)? {
            out.push((m, 1));
            continue;
        }
        let (r, exact) = integer_sqrt(m);
        if exact {
            stack.push(r);
            stack.push(r);
            continue;
        }
        let r = integer_cbrt(m);
        if r * r * r == m {
            stack.extend([r, r, r]);
            continue;
        }
        let d = rho_split(m).ok_or(Error::FactorizationFailed { cofactor: m })?;
        stack.push(d);
        stack.push(m / d);
    }
    Ok(())
}

/// SplitMix64, used only to pick reproducible rho parameters.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }
}

fn rho_split(n: u128) -> Option<u128> {
    let mut rng = SplitMix(n as u64 ^ (n >> 64) as u64);
    for _ in 0..RHO_ATTEMPTS {
        let x0 = rng.next() as u128 % n;
        let c = 1 + rng.next() as u128 % (n - 1);
        if let Some(d) = brent(n, x0, c) {
            return Some(d);
        }
    }
    None
}

/// One run of Brent's cycle-finding variant of Pollard's rho on
/// `x ↦ x² + c (mod n)`. Returns a proper divisor or `None`.
fn brent(n: u128, x0: u128, c: u128) -> Option<u128> {
    const BATCH: u64 = 128;
    let step = |x: u128| add_mod(mul_mod(x, x, n), c, n);
    let mut y = x0;
    let mut r: u64 = 1;
    let mut q: u128 = 1;
    let mut g: u128 = 1;
    let mut x = y;
    let mut ys = y;
    let mut steps = 0u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        steps += r;
        if steps > RHO_MAX_STEPS {
            return None;
        }
        r *= 2;
    }
    if g == n {
        // The batch overshot; replay it one step at a time.
        loop {
            ys = step(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n && g != 1).then_some(g)
}

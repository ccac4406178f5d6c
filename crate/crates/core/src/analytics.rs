//! Numerical evidence around the Lehmer family.
//!
//! * Integral points on `Y² = f(X)` for a monic quartic `f`, scanned over the
//!   whole range `|x| ≤ 26 H(f)³` allowed by Masser's bound.
//! * Cube-free values of `g(k) = 25k⁴ + 25k³ + 15k² + 5k + 1 = m_{5k} / 25`,
//!   compared with the truncated Euler product `∏ (1 - ρ(p³)/p³)`.
//! * The prime-argument constant `c' = ∏ (1 - ρ'(p³)/φ(p³))`.
//! * `ω(m_{5p})` over primes `p`.
//!
//! Every sweep is also exposed as a per-range primitive so callers can split
//! the input into disjoint chunks and merge in order.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith::{factor, integer_sqrt, is_prime, primes_up_to};
use crate::lehmer::m_value;
use crate::polyring::IntPolynomial;
use crate::{Error, Result};

/// An integral point `(x, y)` with `y ≥ 0`; `(x, -y)` is a solution too.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CurvePoint {
    /// Abscissa.
    pub x: i128,
    /// Non-negative ordinate.
    pub y: u128,
}

fn check_monic_quartic(f: &IntPolynomial) -> Result<()> {
    if f.degree() != 4 || !f.is_monic() {
        return Err(Error::InvalidArgument(format!("expected a monic quartic, got {f}")));
    }
    if f.monic_square_root()?.is_some() {
        return Err(Error::PerfectSquare);
    }
    Ok(())
}

/// `26 · H(f)³`, the bound on `|x|` for integral points on `Y² = f(X)`.
pub fn masser_bound(f: &IntPolynomial) -> Result<u128> {
    check_monic_quartic(f)?;
    f.height()
        .checked_pow(3)
        .and_then(|h3| h3.checked_mul(26))
        .ok_or(Error::Magnitude("Masser bound exceeds u128"))
}

/// Points of `Y² = f(X)` with `lo ≤ x ≤ hi`, ascending in `x`.
/// No shape check on `f`; `x` with `f(x) < 0` are skipped.
pub fn curve_points_in_range(f: &IntPolynomial, lo: i128, hi: i128) -> Result<Vec<CurvePoint>> {
    let mut out = Vec::new();
    let mut x = lo;
    while x <= hi {
        let v = f.eval(x)?;
        if v >= 0 {
            let (y, exact) = integer_sqrt(v as u128);
            if exact {
                out.push(CurvePoint { x, y });
            }
        }
        x += 1;
    }
    Ok(out)
}

/// Every integral point of `Y² = f(X)`, found by scanning
/// `[-masser_bound(f), masser_bound(f)]`.
pub fn curve_integral_points(f: &IntPolynomial) -> Result<Vec<CurvePoint>> {
    let bound = masser_bound(f)?;
    let bound = i128::try_from(bound).map_err(|_| Error::Magnitude("scan range exceeds i128"))?;
    curve_points_in_range(f, -bound, bound)
}

/// `g(k) = 25k⁴ + 25k³ + 15k² + 5k + 1`, so that `m_{5k} = 25 · g(k)`.
pub fn gk_value(k: i128) -> Result<u128> {
    let v = [25i128, 15, 5, 1]
        .iter()
        .try_fold(25i128, |acc, &c| acc.checked_mul(k).and_then(|t| t.checked_add(c)))
        .ok_or(Error::Magnitude("g(k) overflowed i128"))?;
    Ok(v as u128)
}

/// `g` as a polynomial.
pub fn gk_polynomial() -> IntPolynomial {
    IntPolynomial::new([25, 25, 15, 5, 1])
}

/// Roots of `g` modulo `p³`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CubeRootCount {
    /// `ρ(p³) = #{x mod p³ : p³ | g(x)}`.
    pub all: u64,
    /// `ρ'(p³)`, the same count restricted to `gcd(x, p) = 1`.
    pub coprime: u64,
}

/// Primes above this enumerate through the lifting path only.
pub const ENUMERATION_CUTOFF: u64 = 50;

/// Largest prime accepted by the root counters, keeping `p³ < 2⁶³`.
pub const MAX_ROOT_PRIME: u64 = 2_097_143;

const G_ASCENDING: [u128; 5] = [1, 5, 15, 25, 25];

fn g_mod(x: u128, q: u128) -> u128 {
    G_ASCENDING.iter().rev().fold(0u128, |acc, &c| (acc * x + c) % q)
}

fn g_prime_mod(x: u128, q: u128) -> u128 {
    // g'(k) = 100k³ + 75k² + 30k + 5
    [100u128, 75, 30, 5].iter().fold(0u128, |acc, &c| (acc * x + c) % q)
}

fn check_root_prime(p: u64) -> Result<()> {
    if p > MAX_ROOT_PRIME || !is_prime(p as u128)? {
        return Err(Error::InvalidArgument(format!("{p} is not a prime at most {MAX_ROOT_PRIME}")));
    }
    Ok(())
}

/// Counts roots of `g` mod `p³` by testing every residue.
pub fn rho_cube_enumerate(p: u64) -> Result<CubeRootCount> {
    check_root_prime(p)?;
    let p = p as u128;
    let q = p * p * p;
    let mut count = CubeRootCount { all: 0, coprime: 0 };
    for x in 0..q {
        if g_mod(x, q) == 0 {
            count.all += 1;
            if x % p != 0 {
                count.coprime += 1;
            }
        }
    }
    Ok(count)
}

/// Counts roots of `g` mod `p³` by lifting roots mod `p`.
///
/// A simple root (`g'(r) ≢ 0 mod p`) lifts uniquely. A singular root is
/// lifted one power at a time by testing the `p` candidates `s + t·p^k`
/// above each root `s` mod `p^k`.
pub fn rho_cube_lift(p: u64) -> Result<CubeRootCount> {
    check_root_prime(p)?;
    let p = p as u128;
    let mut count = CubeRootCount { all: 0, coprime: 0 };
    for r in (0..p).filter(|&r| g_mod(r, p) == 0) {
        let lifts = if g_prime_mod(r, p) != 0 {
            1
        } else {
            let mut level = alloc::vec![r];
            let mut pk = p;
            for _ in 1..3 {
                let next = pk * p;
                level = level
                    .iter()
                    .flat_map(|&s| (0..p).map(move |t| s + t * pk))
                    .filter(|&x| g_mod(x, next) == 0)
                    .collect();
                pk = next;
            }
            level.len() as u64
        };
        count.all += lifts;
        if r != 0 {
            count.coprime += lifts;
        }
    }
    Ok(count)
}

/// Both root counts, enumerating for `p ≤ 50` and lifting above.
pub fn rho_cube_counts(p: u64) -> Result<CubeRootCount> {
    if p <= ENUMERATION_CUTOFF {
        rho_cube_enumerate(p)
    } else {
        rho_cube_lift(p)
    }
}

/// `ρ(p³)`.
pub fn rho_cube(p: u64) -> Result<u64> {
    rho_cube_counts(p).map(|c| c.all)
}

/// Outcome of a cube-free density sweep.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct DensityReport {
    /// Sweep covers `k = 1..=limit`.
    pub limit: u64,
    /// Number of `k` tested.
    pub tested: u64,
    /// How many `g(k)` were cube-free.
    pub cubefree_count: u64,
    /// `cubefree_count / tested`.
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_decimal::big_rational"))]
    pub empirical_density: BigRational,
    /// Largest prime in the product.
    pub prime_cutoff: u64,
    /// `(p, ρ(p³))` for every prime `p ≤ prime_cutoff`.
    pub root_counts: Vec<(u64, u64)>,
    /// `∏_{p ≤ cutoff} (1 - ρ(p³)/p³)`.
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_decimal::big_rational"))]
    pub truncated_product: BigRational,
}

/// `(tested, cube-free)` counts of `g(k)` over `lo ≤ k ≤ hi`.
pub fn count_cubefree_gk(lo: i128, hi: i128) -> Result<(u64, u64)> {
    let mut tested = 0;
    let mut cubefree = 0;
    let mut k = lo;
    while k <= hi {
        tested += 1;
        if factor(gk_value(k)?)?.is_cube_free() {
            cubefree += 1;
        }
        k += 1;
    }
    Ok((tested, cubefree))
}

/// `(p, ρ(p³))` for `p ≤ cutoff` and `∏ (1 - ρ(p³)/p³)`.
pub fn truncated_euler_product(prime_cutoff: u64) -> Result<(Vec<(u64, u64)>, BigRational)> {
    let mut counts = Vec::new();
    let mut product = BigRational::one();
    for p in primes_up_to(prime_cutoff) {
        let rho = rho_cube(p)?;
        let q = BigInt::from(p).pow(3);
        product *= BigRational::new(&q - BigInt::from(rho), q);
        counts.push((p, rho));
    }
    Ok((counts, product))
}

/// Assembles a [`DensityReport`] from already-computed sweep counts.
pub fn density_report_from_counts(
    limit: u64,
    tested: u64,
    cubefree_count: u64,
    prime_cutoff: u64,
) -> Result<DensityReport> {
    if tested == 0 {
        return Err(Error::InvalidArgument("density over an empty range".into()));
    }
    let (root_counts, truncated_product) = truncated_euler_product(prime_cutoff)?;
    Ok(DensityReport {
        limit,
        tested,
        cubefree_count,
        empirical_density: BigRational::new(cubefree_count.into(), tested.into()),
        prime_cutoff,
        root_counts,
        truncated_product,
    })
}

/// Fraction of cube-free `g(k)` for `1 ≤ k ≤ limit` beside the truncated
/// Euler product over primes `≤ prime_cutoff`.
pub fn cubefree_density(limit: u64, prime_cutoff: u64) -> Result<DensityReport> {
    if limit < 10 {
        return Err(Error::InvalidArgument("density limit must be at least 10".into()));
    }
    let (tested, cubefree) = count_cubefree_gk(1, limit as i128)?;
    density_report_from_counts(limit, tested, cubefree, prime_cutoff)
}

/// `∏_{p ≤ cutoff} (1 - ρ'(p³) / φ(p³))` with `φ(p³) = p³ - p²`.
pub fn hel_constant(prime_cutoff: u64) -> Result<BigRational> {
    if prime_cutoff < 2 {
        return Err(Error::InvalidArgument("cutoff must be at least 2".into()));
    }
    let mut product = BigRational::one();
    for p in primes_up_to(prime_cutoff) {
        let rho = rho_cube_counts(p)?.coprime;
        let p = BigInt::from(p);
        let phi = p.pow(3) - p.pow(2);
        product *= BigRational::new(&phi - BigInt::from(rho), phi);
    }
    Ok(product)
}

/// `ω(m_{5p})` sampled over primes.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OmegaStats {
    /// Primes `p ≤ prime_limit` were sampled.
    pub prime_limit: u64,
    /// `(p, ω(m_{5p}))`, ascending in `p`.
    pub samples: Vec<(u64, u32)>,
    /// Primes whose `m_{5p}` could not be factored; excluded from the means.
    pub failed: Vec<u64>,
    /// Mean of the sampled `ω`.
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_decimal::big_rational"))]
    pub mean_omega: BigRational,
    /// Mean of `ln ln p` over the sampled primes.
    pub mean_loglog: f64,
}

/// `ω(m_{5p})`, checked to be at least 2 (`25 | m_{5p}` and `g(p) > 1`).
pub fn omega_sample(p: u64) -> Result<u32> {
    let m = m_value(5 * p as i128)?;
    let w = factor(m)?.omega() as u32;
    if w < 2 {
        return Err(Error::Consistency(format!("omega(m_{}) = {w} < 2", 5 * p)));
    }
    Ok(w)
}

/// Assembles [`OmegaStats`] from per-prime outcomes, in prime order.
/// Factorization failures are recorded; any other error propagates.
pub fn omega_stats_from_samples(
    prime_limit: u64,
    outcomes: impl IntoIterator<Item = (u64, Result<u32>)>,
) -> Result<OmegaStats> {
    let mut samples = Vec::new();
    let mut failed = Vec::new();
    for (p, outcome) in outcomes {
        match outcome {
            Ok(w) => samples.push((p, w)),
            Err(Error::FactorizationFailed { .. }) => failed.push(p),
            Err(e) => return Err(e),
        }
    }
    let count = samples.len().max(1) as u64;
    let total: u64 = samples.iter().map(|&(_, w)| w as u64).sum();
    let loglog: f64 = samples.iter().map(|&(p, _)| libm::log(libm::log(p as f64))).sum();
    Ok(OmegaStats {
        prime_limit,
        mean_omega: BigRational::new(total.into(), count.into()),
        mean_loglog: loglog / count as f64,
        samples,
        failed,
    })
}

/// `ω(m_{5p})` for every prime `p ≤ prime_limit`.
pub fn omega_over_primes(prime_limit: u64) -> Result<OmegaStats> {
    if prime_limit < 2 {
        return Err(Error::InvalidArgument("prime limit must be at least 2".into()));
    }
    let outcomes = primes_up_to(prime_limit).into_iter().map(|p| (p, omega_sample(p)));
    omega_stats_from_samples(prime_limit, outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::lehmer_quartic;
    use alloc::vec;
    use num_traits::ToPrimitive;

    #[test]
    fn masser_examples() {
        assert_eq!(masser_bound(&lehmer_quartic()).unwrap(), 406_250);
        assert_eq!(masser_bound(&IntPolynomial::new([1, 0, 0, 0, 1])).unwrap(), 26);
        assert_eq!(masser_bound(&IntPolynomial::new([1, -1, 0, 1, 2])).unwrap(), 208);
        assert_eq!(masser_bound(&IntPolynomial::new([1, 0, 2, 0, 1])), Err(Error::PerfectSquare));
        assert!(matches!(
            masser_bound(&IntPolynomial::new([2, 0, 0, 0, 1])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn small_curve() {
        let f = IntPolynomial::new([1, 0, 0, 0, 1]);
        assert_eq!(curve_integral_points(&f).unwrap(), [CurvePoint { x: 0, y: 1 }]);
        assert_eq!(
            curve_integral_points(&IntPolynomial::new([1, 0, 2, 0, 1])),
            Err(Error::PerfectSquare)
        );
        // x⁴ - 1 is negative on (-1, 1) and zero at ±1.
        let g = IntPolynomial::new([1, 0, 0, 0, -1]);
        assert_eq!(
            curve_integral_points(&g).unwrap(),
            [CurvePoint { x: -1, y: 0 }, CurvePoint { x: 1, y: 0 }]
        );
    }

    #[test]
    fn curve_brute_force_oracle() {
        // x⁴ + x + 1 = y²; reference by scanning squares directly.
        let f = IntPolynomial::new([1, 0, 0, 1, 1]);
        let mut expected = vec![];
        for x in -26i128..=26 {
            let v = x.pow(4) + x + 1;
            if let Some(y) = (0..=v.max(0)).find(|y| y * y >= v) {
                if y * y == v {
                    expected.push(CurvePoint { x, y: y as u128 });
                }
            }
        }
        assert_eq!(curve_integral_points(&f).unwrap(), expected);
    }

    #[test]
    fn gk_examples() {
        assert_eq!(gk_value(0).unwrap(), 1);
        assert_eq!(gk_value(1).unwrap(), 71);
        assert_eq!(gk_value(2).unwrap(), 671);
        for k in -10_000i128..=10_000 {
            assert_eq!(25 * gk_value(k).unwrap(), m_value(5 * k).unwrap());
        }
        assert_eq!(gk_polynomial().eval(3).unwrap() as u128, gk_value(3).unwrap());
    }

    #[test]
    fn rho_small_primes() {
        assert_eq!(rho_cube(5).unwrap(), 0);
        assert_eq!(rho_cube(2).unwrap(), 0);
        assert_eq!(rho_cube(3).unwrap(), 0);
        assert_eq!(rho_cube(11).unwrap(), 4);
        assert!(rho_cube(4).is_err());
    }

    #[test]
    fn lifting_matches_enumeration() {
        for p in primes_up_to(ENUMERATION_CUTOFF) {
            assert_eq!(rho_cube_lift(p).unwrap(), rho_cube_enumerate(p).unwrap(), "p = {p}");
        }
    }

    #[test]
    fn rho_bounds() {
        for p in primes_up_to(400) {
            let c = rho_cube_counts(p).unwrap();
            assert!(c.coprime <= c.all && c.all <= 4 * p * p);
        }
    }

    #[test]
    fn density_examples() {
        let r = cubefree_density(10, 5).unwrap();
        assert_eq!(r.empirical_density, BigRational::one());
        assert_eq!(r.truncated_product, BigRational::one());
        assert_eq!(r.root_counts, [(2, 0), (3, 0), (5, 0)]);
        assert!(cubefree_density(9, 5).is_err());
    }

    #[test]
    fn euler_product_cutoff_100() {
        // Exact value from residue enumeration mod p³ for every p < 100.
        let (_, product) = truncated_euler_product(100).unwrap();
        let expected = BigRational::new(
            "20117935490870355810417".parse().unwrap(),
            "20183039639774699876221".parse().unwrap(),
        );
        assert_eq!(product, expected);
    }

    #[test]
    fn euler_product_non_increasing() {
        let mut last = BigRational::one();
        for cutoff in [2u64, 5, 11, 30, 31, 41, 100, 200] {
            let (_, p) = truncated_euler_product(cutoff).unwrap();
            assert!(p <= last);
            last = p;
        }
    }

    #[test]
    fn hel_constant_examples() {
        assert_eq!(hel_constant(5).unwrap(), BigRational::one());
        assert_eq!(hel_constant(2).unwrap(), BigRational::one());
        let expected = BigRational::new(
            "14618909035871127".parse().unwrap(),
            "14670733454815625".parse().unwrap(),
        );
        assert_eq!(hel_constant(100).unwrap(), expected);
        assert!(hel_constant(1).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_sample(2).unwrap(), 3);
        assert_eq!(omega_sample(3).unwrap(), 2);
        assert_eq!(omega_sample(5).unwrap(), 3);
        assert_eq!(omega_sample(7).unwrap(), 2);
        let s = omega_over_primes(10).unwrap();
        assert_eq!(s.samples, [(2, 3), (3, 2), (5, 3), (7, 2)]);
        assert_eq!(s.mean_omega.to_f64().unwrap(), 2.5);
        let s = omega_over_primes(2).unwrap();
        assert_eq!(s.samples, [(2, 3)]);
        assert!(omega_over_primes(1).is_err());
    }

    #[test]
    fn omega_failures_are_recorded() {
        let outcomes =
            vec![(2u64, Ok(3)), (3, Err(Error::FactorizationFailed { cofactor: 91 })), (5, Ok(3))];
        let s = omega_stats_from_samples(5, outcomes).unwrap();
        assert_eq!(s.samples, [(2, 3), (5, 3)]);
        assert_eq!(s.failed, [3]);
        assert_eq!(s.mean_omega, BigRational::from_integer(3.into()));
    }
}

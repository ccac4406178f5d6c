//! Parallel drivers for the sweeps in `lehmer_core::analytics`.
//!
//! Inputs are cut into fixed, disjoint chunks; rayon's indexed collect keeps
//! chunk order, so results do not depend on the thread count.

use rayon::prelude::*;

use lehmer_core::analytics::{
    self, count_cubefree_gk, curve_points_in_range, density_report_from_counts, omega_sample,
    omega_stats_from_samples, CurvePoint, DensityReport, OmegaStats,
};
use lehmer_core::arith::primes_up_to;
use lehmer_core::lehmer::LehmerField;
use lehmer_core::polyring::IntPolynomial;
use lehmer_core::Result;

/// Width of one curve-scan chunk.
pub const CURVE_CHUNK: i128 = 1 << 15;

/// Width of one density chunk.
pub const DENSITY_CHUNK: i128 = 512;

fn chunks(lo: i128, hi: i128, width: i128) -> Vec<(i128, i128)> {
    let mut out = Vec::new();
    let mut start = lo;
    while start <= hi {
        let end = (start + width - 1).min(hi);
        out.push((start, end));
        start = end + 1;
    }
    out
}

/// Integral points of `Y² = f(X)` over the Masser range, with the bound.
pub fn curve_points(f: &IntPolynomial) -> Result<(u128, Vec<CurvePoint>)> {
    let bound = analytics::masser_bound(f)?;
    let b = i128::try_from(bound)
        .map_err(|_| lehmer_core::Error::Magnitude("scan range exceeds i128"))?;
    let parts = chunks(-b, b, CURVE_CHUNK)
        .into_par_iter()
        .map(|(lo, hi)| curve_points_in_range(f, lo, hi))
        .collect::<Result<Vec<_>>>()?;
    Ok((bound, parts.into_iter().flatten().collect()))
}

/// Cube-free density of `g(k)` for `1 ≤ k ≤ limit`.
pub fn cubefree_density(limit: u64, prime_cutoff: u64) -> Result<DensityReport> {
    let counts = chunks(1, limit as i128, DENSITY_CHUNK)
        .into_par_iter()
        .map(|(lo, hi)| count_cubefree_gk(lo, hi))
        .collect::<Result<Vec<_>>>()?;
    let (tested, cubefree) = counts.into_iter().fold((0, 0), |(t, c), (dt, dc)| (t + dt, c + dc));
    density_report_from_counts(limit, tested, cubefree, prime_cutoff)
}

/// `ω(m_{5p})` over primes `p ≤ prime_limit`.
pub fn omega_over_primes(prime_limit: u64) -> Result<OmegaStats> {
    let outcomes: Vec<_> =
        primes_up_to(prime_limit).into_par_iter().map(|p| (p, omega_sample(p))).collect();
    omega_stats_from_samples(prime_limit, outcomes)
}

/// Factored fields for every index, in order; failures stay in place.
pub fn fields(indices: &[i128]) -> Vec<Result<LehmerField>> {
    indices.par_iter().map(|&n| LehmerField::new(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use lehmer_core::polyring::lehmer_quartic;

    #[test]
    fn chunks_cover_range_exactly() {
        let c = chunks(-10, 10, 4);
        assert_eq!(c.first(), Some(&(-10, -7)));
        assert_eq!(c.last(), Some(&(10, 10)));
        assert!(c.windows(2).all(|w| w[0].1 + 1 == w[1].0));
        assert!(chunks(5, 4, 3).is_empty());
    }

    #[test]
    fn parallel_matches_sequential() {
        let f = IntPolynomial::new([1, 0, 0, 1, 1]);
        let (_, par) = curve_points(&f).unwrap();
        assert_eq!(par, analytics::curve_integral_points(&f).unwrap());

        assert_eq!(
            cubefree_density(2000, 50).unwrap(),
            analytics::cubefree_density(2000, 50).unwrap()
        );
        assert_eq!(omega_over_primes(500).unwrap(), analytics::omega_over_primes(500).unwrap());
        assert!(curve_points(&lehmer_quartic()).is_ok());
    }
}

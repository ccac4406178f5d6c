//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;

use lehmer_cli::{cmd_table, Format};
use lehmer_core::analytics::{
    self, cubefree_density, curve_integral_points, masser_bound, omega_over_primes, rho_cube,
    rho_cube_enumerate, rho_cube_lift, CurvePoint,
};
use lehmer_core::arith::{factor, is_prime, primes_up_to};
use lehmer_core::lehmer::{c_value, m_value, LehmerField, LehmerQuintic};
use lehmer_core::polyring::{lehmer_coeffs, lehmer_quartic};

const TABLE1: &str = include_str!("data/table1.csv");

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed <= Duration::from_secs(limit_secs), || {
        format!("took {elapsed:.2?}, budget {limit_secs}s")
    })
}

fn parse_rows(csv: &str) -> Vec<(i128, u128, u128, u32)> {
    csv.lines()
        .skip(1)
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (
                f[0].parse().unwrap(),
                f[1].parse().unwrap(),
                f[2].parse().unwrap(),
                f[3].parse().unwrap(),
            )
        })
        .collect()
}

/// 1. Table 1 reproduced exactly.
fn table_golden() -> Outcome {
    let start = Instant::now();
    let out = cmd_table(-60, 60, false, Format::Csv).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(!out.failed, || "table reported failures".into())?;
    ensure(out.body.starts_with("n,m,cube_part,po_order\n"), || "bad CSV header".into())?;
    let got = parse_rows(&out.body);
    let want = parse_rows(TABLE1);
    ensure(want.len() == 120, || format!("golden file has {} rows", want.len()))?;
    ensure(got.len() == 120, || format!("{} rows emitted", got.len()))?;
    for (g, w) in got.iter().zip(&want) {
        ensure(g == w, || format!("row mismatch: got {g:?}, want {w:?}"))?;
    }
    for spot in [
        (1, 1775, 1, 1),
        (-53, 4_839_549_275, 1331, 2),
        (43, 2_187_141_275, 1, 4),
        (49, 3_677_437_775, 1, 4),
    ] {
        ensure(got.contains(&spot), || format!("missing {spot:?}"))?;
    }
    within(elapsed, 10)?;
    Ok(format!("120/120 rows match ({elapsed:.2?})"))
}

/// 2. Only (0, 5) on Y² = X⁴ + 5X³ + 15X² + 25X + 25 for |x| ≤ 406250.
fn curve_search() -> Outcome {
    let f = lehmer_quartic();
    let bound = masser_bound(&f).map_err(|e| e.to_string())?;
    ensure(bound == 406_250, || format!("bound {bound}"))?;
    let start = Instant::now();
    let points = curve_integral_points(&f).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(points == [CurvePoint { x: 0, y: 5 }], || format!("points {points:?}"))?;
    within(elapsed, 60)?;
    Ok(format!("812501 abscissae, points {{(0, 5)}}, single-threaded ({elapsed:.2?})"))
}

/// 3. Resultant discriminant equals c² m⁴ for |n| ≤ 50.
fn discriminant_oracle() -> Outcome {
    let mut cases = 0;
    for n in -50i128..=50 {
        let disc = lehmer_coeffs(n).and_then(|f| f.discriminant()).map_err(|e| e.to_string())?;
        let c = BigInt::from(n.pow(3) + 5 * n.pow(2) + 10 * n + 7);
        let m = BigInt::from(n.pow(4) + 5 * n.pow(3) + 15 * n.pow(2) + 25 * n + 25);
        let closed = c.pow(2) * m.pow(4);
        ensure(disc == closed, || format!("n = {n}: {disc} != {closed}"))?;
        cases += 1;
    }
    ensure(cases == 101, || format!("{cases} cases"))?;
    Ok("101/101 exact".into())
}

/// 4. Prime divisors of m_n, the 5-adic valuation, and gcd with 6.
fn prime_divisor_suite() -> Outcome {
    let mut checked_primes = 0;
    for n in -1000i128..=1000 {
        let m = m_value(n).map_err(|e| e.to_string())?;
        let c = c_value(n).map_err(|e| e.to_string())?;
        let fac = factor(m).map_err(|e| e.to_string())?;
        for p in fac.primes() {
            ensure(p == 5 || p % 5 == 1, || format!("n = {n}: prime {p}"))?;
            checked_primes += 1;
        }
        ensure((m % 5 == 0) == (n % 5 == 0), || format!("n = {n}: 5 | m mismatch"))?;
        if n % 5 == 0 {
            ensure(fac.exponent_of(5) == 2, || format!("n = {n}: v5 = {}", fac.exponent_of(5)))?;
        }
        // gcd(m c, 6) = 1 iff m c is 1 or 5 mod 6.
        let mc = (m % 6) * c.rem_euclid(6) as u128 % 6;
        ensure(mc == 1 || mc == 5, || format!("n = {n}: gcd(m c, 6) != 1"))?;
    }
    Ok(format!("2001 values, {checked_primes} prime divisors, 0 violations"))
}

/// 5. disc(f_n) / d(K_n) is a square whose root is prime to 6.
fn index_relation() -> Outcome {
    for n in -1000i128..=1000 {
        let field = LehmerField::new(n).map_err(|e| e.to_string())?;
        let inv = field.invariants().map_err(|e| e.to_string())?;
        let disc = LehmerQuintic::new(n).map_err(|e| e.to_string())?.disc_poly;
        ensure(&disc % &inv.field_disc == BigUint::from(0u8), || {
            format!("n = {n}: not divisible")
        })?;
        let quot = &disc / &inv.field_disc;
        let root = quot.sqrt();
        ensure(&root * &root == quot, || format!("n = {n}: quotient not a square"))?;
        ensure(
            root.clone() % 2u8 != BigUint::from(0u8) && root.clone() % 3u8 != BigUint::from(0u8),
            || format!("n = {n}: index {root} shares a factor with 6"),
        )?;
        let reported = field.theta_index().map_err(|e| e.to_string())?;
        ensure(BigUint::from(reported) == root, || {
            format!("n = {n}: theta_index {reported} != {root}")
        })?;
    }
    Ok("2001 values, 0 violations".into())
}

/// 6. |Po| = 5^(ω(m) - 1) and the prime-or-25 criterion for cube-free m.
fn polya_formula() -> Outcome {
    let mut cube_free = 0;
    let mut non_polya_family = 0;
    for n in -1000i128..=1000 {
        let m = m_value(n).map_err(|e| e.to_string())?;
        let fac = factor(m).map_err(|e| e.to_string())?;
        if fac.pairs().iter().any(|&(_, e)| e >= 3) {
            continue;
        }
        cube_free += 1;
        let report = LehmerField::new(n).and_then(|f| f.classify()).map_err(|e| e.to_string())?;
        let expected = 5u128.pow(fac.omega() as u32 - 1);
        ensure(report.po_order == expected, || {
            format!("n = {n}: |Po| = {} != {expected}", report.po_order)
        })?;
        let criterion = is_prime(m).map_err(|e| e.to_string())? || m == 25;
        ensure(report.is_polya == criterion, || format!("n = {n}: verdict mismatch"))?;
        if n % 5 == 0 && n != 0 {
            ensure(!report.is_polya, || format!("n = {n}: 5 | n but Polya"))?;
            non_polya_family += 1;
        }
    }
    Ok(format!(
        "{cube_free} cube-free m_n, {non_polya_family} non-Polya 5 | n members, 0 violations"
    ))
}

/// 7. Pólya-number bound equals 5 |Po| when 5 | n.
fn genus_bound() -> Outcome {
    let mut cases = 0;
    for n in (-1000i128..=1000).filter(|n| n % 5 == 0) {
        let field = LehmerField::new(n).map_err(|e| e.to_string())?;
        let bound = field.polya_number_bound().map_err(|e| e.to_string())?;
        let po = field.polya_group_order().map_err(|e| e.to_string())?;
        ensure(bound == 5 * po, || format!("n = {n}: {bound} != 5 * {po}"))?;
        cases += 1;
    }
    Ok(format!("{cases} values, 0 violations"))
}

/// 8. Root counts and the cube-free density of g(k).
fn density_cross_check() -> Outcome {
    let start = Instant::now();
    for p in primes_up_to(50) {
        let e = rho_cube_enumerate(p).map_err(|e| e.to_string())?;
        let l = rho_cube_lift(p).map_err(|e| e.to_string())?;
        ensure(e == l, || format!("p = {p}: enumeration {e:?} vs lifting {l:?}"))?;
    }
    for p in [2, 3, 5] {
        let r = rho_cube(p).map_err(|e| e.to_string())?;
        ensure(r == 0, || format!("rho({p}^3) = {r}"))?;
    }
    let report = cubefree_density(10_000, 100).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    // Frozen by a residue-enumeration / factorization oracle run before the build.
    ensure(report.cubefree_count == 9967 && report.tested == 10_000, || {
        format!("cube-free count {} of {}", report.cubefree_count, report.tested)
    })?;
    let frozen = BigRational::new(
        "20117935490870355810417".parse().unwrap(),
        "20183039639774699876221".parse().unwrap(),
    );
    ensure(report.truncated_product == frozen, || format!("product {}", report.truncated_product))?;
    let emp = report.empirical_density.to_f64().unwrap();
    let prod = report.truncated_product.to_f64().unwrap();
    ensure((emp - prod).abs() <= 0.01, || format!("|{emp} - {prod}| > 0.01"))?;
    within(elapsed, 30)?;
    Ok(format!(
        "empirical {emp:.6}, product {prod:.6}, gap {:.6} <= 0.01 ({elapsed:.2?})",
        (emp - prod).abs()
    ))
}

/// 9. ω(m_{5p}) ≥ 2 for p ≤ 10⁴; report-only means.
fn omega_sanity() -> Outcome {
    let stats = omega_over_primes(10_000).map_err(|e| e.to_string())?;
    ensure(stats.failed.is_empty(), || format!("failed primes {:?}", stats.failed))?;
    ensure(stats.samples.len() == 1229, || format!("{} samples", stats.samples.len()))?;
    for &(p, w) in &stats.samples {
        ensure(w >= 2, || format!("omega(m_{}) = {w}", 5 * p))?;
    }
    let mean = stats.mean_omega.to_f64().unwrap();
    Ok(format!(
        "1229 primes, min omega {}, mean omega {mean:.4}, mean ln ln p {:.4}",
        stats.samples.iter().map(|&(_, w)| w).min().unwrap(),
        stats.mean_loglog
    ))
}

/// 10. m_x is a perfect square only at x = 0.
fn square_values() -> Outcome {
    let f = lehmer_quartic();
    let points =
        analytics::curve_points_in_range(&f, -406_250, 406_250).map_err(|e| e.to_string())?;
    let squares: Vec<(i128, u128)> =
        points.iter().map(|p| (p.x, m_value(p.x).unwrap_or(0))).collect();
    ensure(squares == [(0, 25)], || format!("square values at {squares:?}"))?;
    Ok("only m_0 = 25 = 5^2".into())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Table 1 golden reproduction", table_golden),
        ("curve search to Masser bound", curve_search),
        ("resultant discriminant vs closed form", discriminant_oracle),
        ("prime divisors of m_n are 1 mod 5", prime_divisor_suite),
        ("index relation disc(f)/d(K) square, prime to 6", index_relation),
        ("Polya order and verdict formula", polya_formula),
        ("Polya-number bound = 5 |Po| for 5 | n", genus_bound),
        ("rho lifting vs enumeration, density vs product", density_cross_check),
        ("omega(m_5p) >= 2 over p <= 10^4", omega_sanity),
        ("m_x square only at x = 0", square_values),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  AC{:<2} {name}: {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL  AC{:<2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} passed, {failures} failed", criteria.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Field-level invariants of `K_n`: the quartic `m_n`, the cubic `c_n`, the
//! `5^b · A · B²` decomposition of `m_n`, conductor, field discriminant,
//! ramified primes and the index of `θ_n`.
//!
//! The polynomial discriminant is `disc(f_n) = c_n² · m_n⁴` and the field
//! discriminant is `conductor⁴`; their quotient is the square of the index
//! `[O_K : Z[θ_n]]`.

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::{factor, Factorization};
use crate::polyring::{lehmer_coeffs, IntPolynomial};
use crate::{Error, Result};

const OVERFLOW: Error = Error::Magnitude("m_n or c_n overflowed 128-bit arithmetic");

/// `m_n = n⁴ + 5n³ + 15n² + 25n + 25`.
pub fn m_value(n: i128) -> Result<u128> {
    // Horner on ((n + 5)n + 15)n + 25)n + 25.
    let v = [5i128, 15, 25, 25]
        .iter()
        .try_fold(1i128, |acc, &c| acc.checked_mul(n).and_then(|t| t.checked_add(c)));
    let v = v.ok_or(OVERFLOW)?;
    if v < 1 {
        return Err(Error::Consistency(format!("m_{n} = {v} is not positive")));
    }
    Ok(v as u128)
}

/// `c_n = n³ + 5n² + 10n + 7`.
pub fn c_value(n: i128) -> Result<i128> {
    [5i128, 10, 7]
        .iter()
        .try_fold(1i128, |acc, &c| acc.checked_mul(n).and_then(|t| t.checked_add(c)))
        .ok_or(OVERFLOW)
}

/// The quintic `f_n` with its attached integers.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LehmerQuintic {
    /// Family parameter.
    pub n: i128,
    /// `f_n`, highest degree first.
    #[cfg_attr(feature = "serde", serde(serialize_with = "ser_poly"))]
    pub poly: IntPolynomial,
    /// `m_n`.
    pub m: u128,
    /// `c_n`.
    pub c: i128,
    /// `disc(f_n) = c_n² · m_n⁴`.
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_decimal::biguint"))]
    pub disc_poly: BigUint,
}

#[cfg(feature = "serde")]
fn ser_poly<S: serde::Serializer>(
    p: &IntPolynomial,
    s: S,
) -> core::result::Result<S::Ok, S::Error> {
    use serde::Serialize;
    p.coeffs().serialize(s)
}

impl LehmerQuintic {
    /// Builds `f_n` and checks `gcd(m_n, 6) = gcd(c_n, 6) = 1`.
    pub fn new(n: i128) -> Result<Self> {
        let poly = lehmer_coeffs(n)?;
        let m = m_value(n)?;
        let c = c_value(n)?;
        if m.gcd(&6) != 1 || c.gcd(&6) != 1 {
            return Err(Error::Consistency(format!(
                "m_{n} = {m} or c_{n} = {c} shares a factor with 6"
            )));
        }
        let disc_poly = BigUint::from(c.unsigned_abs()).pow(2) * BigUint::from(m).pow(4);
        Ok(LehmerQuintic { n, poly, m, c, disc_poly })
    }

    /// `b` in `m_n = 5^b · A · B²`: 2 when `5 | n`, else 0.
    pub fn b(&self) -> u32 {
        if self.n % 5 == 0 {
            2
        } else {
            0
        }
    }
}

/// `m_n = 5^b · A · B²` together with the cube part of `m_n`.
///
/// `A` collects the primes `≠ 5` of exponent 1 and `B` those of exponent 2.
/// When `m_n` is not cube-free both describe only the cube-free cofactor, and
/// `cube` carries the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MDecomposition {
    /// Exponent of 5, always 0 or 2.
    pub b: u32,
    /// Square-free product of the exponent-1 primes other than 5.
    #[cfg_attr(feature = "serde", serde(rename = "A"))]
    pub simple_part: u128,
    /// Square-free product of the exponent-2 primes other than 5.
    #[cfg_attr(feature = "serde", serde(rename = "B"))]
    pub square_part: u128,
    /// Product of the prime powers with exponent at least 3.
    pub cube: u128,
    /// `cube == 1`.
    pub is_cube_free: bool,
}

/// Conductor, discriminant and ramification data of `K_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FieldInvariants {
    /// `f(K_n)`.
    pub conductor: u128,
    /// `d(K_n) = f(K_n)⁴`.
    #[cfg_attr(feature = "serde", serde(with = "crate::serde_decimal::biguint"))]
    pub field_disc: BigUint,
    /// The totally ramified primes, ascending.
    pub ramified_primes: Vec<u128>,
    /// Number of ramified primes.
    pub t: usize,
    /// Whether 5 ramifies, equivalently `5 | n`.
    pub five_ramified: bool,
}

/// `K_n` with `m_n` already factored. Every derived invariant reads from the
/// single factorization held here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LehmerField {
    quintic: LehmerQuintic,
    factorization: Factorization,
}

impl LehmerField {
    /// Factors `m_n` and checks that `v₅(m_n)` agrees with `b`.
    pub fn new(n: i128) -> Result<Self> {
        let quintic = LehmerQuintic::new(n)?;
        let factorization = factor(quintic.m)?;
        let v5 = factorization.exponent_of(5);
        if v5 != quintic.b() {
            return Err(Error::Consistency(format!("v_5(m_{n}) = {v5} but b = {}", quintic.b())));
        }
        Ok(LehmerField { quintic, factorization })
    }

    /// The underlying quintic.
    pub fn quintic(&self) -> &LehmerQuintic {
        &self.quintic
    }

    /// Family parameter `n`.
    pub fn n(&self) -> i128 {
        self.quintic.n
    }

    /// `m_n`.
    pub fn m(&self) -> u128 {
        self.quintic.m
    }

    /// Prime factorization of `m_n`.
    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    /// The `5^b · A · B²` decomposition.
    pub fn decomposition(&self) -> MDecomposition {
        let mut simple_part = 1;
        let mut square_part = 1;
        for &(p, e) in self.factorization.pairs() {
            match (p, e) {
                (5, _) => {}
                (_, 1) => simple_part *= p,
                (_, 2) => square_part *= p,
                _ => {}
            }
        }
        let cube = self.factorization.cube_part();
        MDecomposition {
            b: self.quintic.b(),
            simple_part,
            square_part,
            cube,
            is_cube_free: cube == 1,
        }
    }

    /// Conductor, discriminant and ramified primes.
    ///
    /// A prime `p ≠ 5` ramifies iff `v_p(m_n) ≢ 0 (mod 5)`; every such prime
    /// must be `≡ 1 (mod 5)`, and this is checked rather than assumed.
    pub fn invariants(&self) -> Result<FieldInvariants> {
        let n = self.n();
        let five_ramified = self.quintic.b() == 2;
        let mut ramified_primes = Vec::new();
        let mut conductor: u128 = if five_ramified { 25 } else { 1 };
        if five_ramified {
            ramified_primes.push(5);
        }
        for &(p, e) in self.factorization.pairs() {
            if p == 5 || e % 5 == 0 {
                continue;
            }
            if p % 5 != 1 {
                return Err(Error::Consistency(format!(
                    "prime {p} divides m_{n} but is not 1 mod 5"
                )));
            }
            ramified_primes.push(p);
            conductor = conductor.checked_mul(p).ok_or(OVERFLOW)?;
        }
        let t = ramified_primes.len();
        Ok(FieldInvariants {
            conductor,
            field_disc: BigUint::from(conductor).pow(4),
            ramified_primes,
            t,
            five_ramified,
        })
    }

    /// `I(θ_n) = [O_K : Z[θ_n]]`, the square root of `disc(f_n) / d(K_n)`.
    ///
    /// Cross-checked against `|c_n| · (m_n / f(K_n))²`.
    pub fn theta_index(&self) -> Result<u128> {
        let n = self.n();
        let inv = self.invariants()?;
        let (quot, rem) = self.quintic.disc_poly.div_rem(&inv.field_disc);
        if rem != BigUint::default() {
            return Err(Error::Consistency(format!("d(K_{n}) does not divide disc(f_{n})")));
        }
        let root = quot.sqrt();
        if &root * &root != quot {
            return Err(Error::Consistency(format!(
                "disc(f_{n}) / d(K_{n}) is not a perfect square"
            )));
        }
        let ratio = self.quintic.m / inv.conductor;
        let expected = BigUint::from(self.quintic.c.unsigned_abs()) * BigUint::from(ratio).pow(2);
        if !self.quintic.m.is_multiple_of(inv.conductor) || expected != root {
            return Err(Error::Consistency(format!(
                "index of theta_{n} disagrees with |c|(m/f)^2"
            )));
        }
        root.to_u128().ok_or(Error::Magnitude("index of theta_n exceeds u128"))
    }
}

/// See [`LehmerField::decomposition`].
pub fn decompose_m(n: i128) -> Result<MDecomposition> {
    LehmerField::new(n).map(|f| f.decomposition())
}

/// See [`LehmerField::invariants`].
pub fn field_invariants(n: i128) -> Result<FieldInvariants> {
    LehmerField::new(n)?.invariants()
}

/// See [`LehmerField::theta_index`].
pub fn theta_index(n: i128) -> Result<u128> {
    LehmerField::new(n)?.theta_index()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::valuation;
    use alloc::vec;

    #[test]
    fn m_and_c_values() {
        assert_eq!(m_value(0).unwrap(), 25);
        assert_eq!(m_value(5).unwrap(), 1775);
        assert_eq!(m_value(1).unwrap(), 71);
        assert_eq!(m_value(-265).unwrap(), 4_839_549_275);
        assert_eq!(c_value(0).unwrap(), 7);
        assert_eq!(c_value(1).unwrap(), 23);
        assert_eq!(c_value(5).unwrap(), 307);
        assert!(m_value(i128::MAX / 8).is_err());
    }

    #[test]
    fn quintic_discriminant_matches_resultant() {
        for n in [-7i128, 0, 1, 5, 12] {
            let q = LehmerQuintic::new(n).unwrap();
            let disc = q.poly.discriminant().unwrap();
            assert_eq!(disc.to_biguint().unwrap(), q.disc_poly);
        }
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_m(5).unwrap();
        assert_eq!(
            d,
            MDecomposition { b: 2, simple_part: 71, square_part: 1, cube: 1, is_cube_free: true }
        );
        let d = decompose_m(10).unwrap();
        assert_eq!((d.b, d.simple_part, d.square_part, d.cube), (2, 671, 1, 1));
        let d = decompose_m(-265).unwrap();
        assert_eq!(
            d,
            MDecomposition {
                b: 2,
                simple_part: 145_441,
                square_part: 1,
                cube: 1331,
                is_cube_free: false
            }
        );
        assert_eq!(decompose_m(1).unwrap().b, 0);
    }

    #[test]
    fn invariants_examples() {
        let f = field_invariants(1).unwrap();
        assert_eq!(f.conductor, 71);
        assert_eq!(f.field_disc, BigUint::from(71u32).pow(4));
        assert_eq!((f.ramified_primes.clone(), f.t, f.five_ramified), (vec![71], 1, false));

        let f = field_invariants(5).unwrap();
        assert_eq!(f.conductor, 1775);
        assert_eq!(f.field_disc, BigUint::from(1775u32).pow(4));
        assert_eq!((f.ramified_primes.clone(), f.t), (vec![5, 71], 2));

        let f = field_invariants(-265).unwrap();
        assert_eq!(f.conductor, 39_996_275);
        assert_eq!(f.ramified_primes, [5, 11, 145_441]);
        assert_eq!(f.t, 3);

        let f = field_invariants(0).unwrap();
        assert_eq!((f.conductor, f.t, f.five_ramified), (25, 1, true));
    }

    #[test]
    fn theta_index_examples() {
        assert_eq!(theta_index(5).unwrap(), 307);
        assert_eq!(theta_index(0).unwrap(), 7);
        assert_eq!(theta_index(1).unwrap(), 23);
        // Non-cube-free m: the 11³ contributes 11 to m / f(K).
        assert_eq!(theta_index(-265).unwrap(), c_value(-265).unwrap().unsigned_abs() * 121 * 121);
    }

    #[test]
    fn prime_divisors_are_one_mod_five() {
        for n in -1000i128..=1000 {
            let field = LehmerField::new(n).unwrap();
            for p in field.factorization().primes() {
                assert!(p == 5 || p % 5 == 1, "n = {n}, p = {p}");
            }
            let m = field.m();
            assert_eq!(m.is_multiple_of(5), n % 5 == 0);
            if n % 5 == 0 {
                assert_eq!(valuation(m, 5).unwrap(), 2);
            }
        }
    }

    #[test]
    fn conductor_shape() {
        for n in -300i128..=300 {
            let field = LehmerField::new(n).unwrap();
            let inv = field.invariants().unwrap();
            let odd = if inv.five_ramified { inv.conductor / 25 } else { inv.conductor };
            assert_ne!(odd % 5, 0);
            assert!(crate::arith::factor(odd).unwrap().pairs().iter().all(|&(_, e)| e == 1));
            assert_eq!(inv.t, inv.ramified_primes.len());
            assert_eq!(field.m() % inv.conductor, 0);
        }
    }
}

//! Pólya group order and structure, the Pólya/non-Pólya verdict, genus
//! number, Pólya-number bound and the monogenicity report.
//!
//! For a cyclic field of odd prime degree `ℓ` the Pólya group has order
//! `∏ e_p / ℓ`; here every ramified prime has `e_p = 5`, so
//! `|Po(K_n)| = 5^(t-1)` with `t` the number of ramified primes. Each
//! nontrivial ambiguous class has order 5, hence `Po(K_n) ≅ (Z/5Z)^(t-1)`.

use alloc::format;

use crate::lehmer::LehmerField;
use crate::{Error, Result};

/// Classification of `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PolyaReport {
    /// Family parameter.
    pub n: i128,
    /// `m_n`.
    pub m: u128,
    /// Whether `m_n` is cube-free.
    pub is_cube_free: bool,
    /// `Po(K_n)` is trivial.
    pub is_polya: bool,
    /// `|Po(K_n)|`, a power of 5.
    pub po_order: u128,
    /// `r` with `Po(K_n) ≅ (Z/5Z)^r`.
    pub po_rank: u32,
    /// Genus number `g_K`.
    pub genus_number: u128,
    /// Upper bound on the Pólya number `po_K`.
    pub polya_number_bound: u128,
    /// False when `m_n` is not cube-free: the order then comes from the
    /// conductor formula alone and the verdict is formula-extended.
    pub theorem1_applies: bool,
}

/// Monogenicity data of `K_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MonogenicityReport {
    /// Family parameter.
    pub n: i128,
    /// `I(θ_n)`.
    pub theta_index: u128,
    /// `gcd(I(θ_n), 6)`; always 1.
    pub gcd_with_six: u128,
    /// Proven not monogenic. `false` means undecided by this criterion, not
    /// monogenic.
    pub non_monogenic: bool,
    /// `I(K_n) = 1`.
    pub field_index_one: bool,
}

fn pow5(e: u32) -> Result<u128> {
    5u128.checked_pow(e).ok_or(Error::Magnitude("power of 5 exceeds u128"))
}

fn ramified_count(field: &LehmerField) -> Result<u32> {
    let t = field.invariants()?.t as u32;
    if t == 0 {
        // A cyclic quintic field is never unramified over Q.
        return Err(Error::Consistency(format!("K_{} has no ramified prime", field.n())));
    }
    Ok(t)
}

impl LehmerField {
    /// `|Po(K_n)| = 5^(t-1)`.
    pub fn polya_group_order(&self) -> Result<u128> {
        pow5(ramified_count(self)? - 1)
    }

    /// Genus number: `5^t` when 5 ramifies, otherwise `5^(t-1)`.
    pub fn genus_number(&self) -> Result<u128> {
        let t = ramified_count(self)?;
        pow5(if self.invariants()?.five_ramified { t } else { t - 1 })
    }

    /// The genus number, an upper bound for the Pólya number. When `5 | n`
    /// it equals `5 · |Po(K_n)|`, which is checked.
    pub fn polya_number_bound(&self) -> Result<u128> {
        let bound = self.genus_number()?;
        if self.n() % 5 == 0 {
            let po = self.polya_group_order()?;
            if po.checked_mul(5) != Some(bound) {
                return Err(Error::Consistency(format!(
                    "genus bound {bound} != 5 * |Po| = 5 * {po} for n = {}",
                    self.n()
                )));
            }
        }
        Ok(bound)
    }

    /// Full classification.
    ///
    /// For cube-free `m_n` the verdict is also checked against the closed
    /// criterion "Pólya iff `m_n` is prime or `m_n = 25`".
    pub fn classify(&self) -> Result<PolyaReport> {
        let n = self.n();
        let m = self.m();
        let t = ramified_count(self)?;
        let po_rank = t - 1;
        let po_order = pow5(po_rank)?;
        let is_polya = po_order == 1;
        let is_cube_free = self.factorization().is_cube_free();
        if is_cube_free {
            let criterion = self.factorization().is_prime() || m == 25;
            if criterion != is_polya {
                return Err(Error::Consistency(format!(
                    "n = {n}: |Po| = {po_order} but prime-or-25 criterion says {criterion}"
                )));
            }
            if self.factorization().omega() as u32 != t {
                return Err(Error::Consistency(format!("n = {n}: cube-free m with omega != t")));
            }
        }
        Ok(PolyaReport {
            n,
            m,
            is_cube_free,
            is_polya,
            po_order,
            po_rank,
            genus_number: self.genus_number()?,
            polya_number_bound: self.polya_number_bound()?,
            theorem1_applies: is_cube_free,
        })
    }

    /// Index of `θ_n`, its gcd with 6, and the two monogenicity flags.
    ///
    /// Non-Pólya members cannot be a real cyclotomic subfield, so they are
    /// not monogenic. `I(K_n)` can only have prime divisors below 5; with
    /// `gcd(I(θ_n), 6) = 1` it must be 1.
    pub fn monogenicity_report(&self) -> Result<MonogenicityReport> {
        let n = self.n();
        let theta_index = self.theta_index()?;
        let gcd_with_six = num_integer::gcd(theta_index, 6);
        if gcd_with_six != 1 {
            return Err(Error::Consistency(format!("gcd(I(theta_{n}), 6) = {gcd_with_six}")));
        }
        let is_polya = self.polya_group_order()? == 1;
        Ok(MonogenicityReport {
            n,
            theta_index,
            gcd_with_six,
            non_monogenic: !is_polya,
            field_index_one: true,
        })
    }
}

/// See [`LehmerField::polya_group_order`].
pub fn polya_group_order(n: i128) -> Result<u128> {
    LehmerField::new(n)?.polya_group_order()
}

/// See [`LehmerField::classify`].
pub fn classify(n: i128) -> Result<PolyaReport> {
    LehmerField::new(n)?.classify()
}

/// See [`LehmerField::genus_number`].
pub fn genus_number(n: i128) -> Result<u128> {
    LehmerField::new(n)?.genus_number()
}

/// See [`LehmerField::polya_number_bound`].
pub fn polya_number_bound(n: i128) -> Result<u128> {
    LehmerField::new(n)?.polya_number_bound()
}

/// See [`LehmerField::monogenicity_report`].
pub fn monogenicity_report(n: i128) -> Result<MonogenicityReport> {
    LehmerField::new(n)?.monogenicity_report()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_order_examples() {
        assert_eq!(polya_group_order(5).unwrap(), 5);
        assert_eq!(polya_group_order(0).unwrap(), 1);
        assert_eq!(polya_group_order(-265).unwrap(), 25);
    }

    #[test]
    fn classify_examples() {
        let r = classify(1).unwrap();
        assert!(r.is_polya && r.is_cube_free && r.theorem1_applies);
        assert_eq!((r.m, r.po_order, r.po_rank), (71, 1, 0));

        let r = classify(0).unwrap();
        assert!(r.is_polya);
        assert_eq!(r.m, 25);

        let r = classify(10).unwrap();
        assert!(!r.is_polya);
        assert_eq!((r.po_order, r.po_rank), (25, 2));

        let r = classify(-265).unwrap();
        assert!(!r.is_polya && !r.is_cube_free && !r.theorem1_applies);
        assert_eq!(r.po_order, 25);
    }

    #[test]
    fn genus_and_bound_examples() {
        assert_eq!(genus_number(5).unwrap(), 25);
        assert_eq!(genus_number(1).unwrap(), 1);
        assert_eq!(genus_number(10).unwrap(), 125);
        assert_eq!(polya_number_bound(5).unwrap(), 25);
        assert_eq!(polya_number_bound(-265).unwrap(), 125);
        assert_eq!(polya_number_bound(1).unwrap(), 1);
    }

    #[test]
    fn monogenicity_examples() {
        let r = monogenicity_report(5).unwrap();
        assert_eq!(
            r,
            MonogenicityReport {
                n: 5,
                theta_index: 307,
                gcd_with_six: 1,
                non_monogenic: true,
                field_index_one: true
            }
        );
        let r = monogenicity_report(0).unwrap();
        assert_eq!((r.theta_index, r.non_monogenic, r.field_index_one), (7, false, true));
        let r = monogenicity_report(10).unwrap();
        assert!(r.non_monogenic && r.field_index_one);
        assert_eq!(r.gcd_with_six, 1);
    }

    #[test]
    fn report_invariants_hold() {
        for n in -200i128..=200 {
            let r = classify(n).unwrap();
            assert_eq!(r.po_order, 5u128.pow(r.po_rank));
            assert_eq!(r.is_polya, r.po_order == 1);
            assert!(r.genus_number == r.po_order || r.genus_number == 5 * r.po_order);
            assert_eq!(r.theorem1_applies, r.is_cube_free);
        }
    }
}

//! Dense integer polynomials with exact discriminants and a mod-p
//! irreducibility witness for quintics.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::is_prime;
use crate::{Error, Result};

/// Integer polynomial stored highest degree first.
///
/// The leading coefficient is nonzero unless the polynomial is zero, which is
/// stored as the single coefficient `[0]` with degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

const OVERFLOW: Error = Error::Magnitude("polynomial arithmetic overflowed i128");

impl IntPolynomial {
    /// Builds a polynomial from coefficients listed highest degree first.
    /// Leading zeros are dropped.
    pub fn new(coeffs: impl Into<Vec<i128>>) -> Self {
        let mut coeffs = coeffs.into();
        let lead = coeffs.iter().position(|&c| c != 0).unwrap_or(coeffs.len());
        coeffs.drain(..lead);
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        IntPolynomial { coeffs }
    }

    /// Coefficients, highest degree first.
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Leading coefficient.
    pub fn leading(&self) -> i128 {
        self.coeffs[0]
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs == [0]
    }

    /// True when the leading coefficient is 1.
    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    /// Height: the largest absolute value among the coefficients.
    pub fn height(&self) -> u128 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: i128) -> Result<i128> {
        self.coeffs.iter().try_fold(0i128, |acc, &c| {
            acc.checked_mul(x).and_then(|v| v.checked_add(c)).ok_or(OVERFLOW)
        })
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Result<Self> {
        let d = self.degree();
        if d == 0 {
            return Ok(Self::new([0]));
        }
        let coeffs = self.coeffs[..d]
            .iter()
            .enumerate()
            .map(|(i, &c)| c.checked_mul((d - i) as i128).ok_or(OVERFLOW))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(OVERFLOW)?;
                out[i + j] = out[i + j].checked_add(t).ok_or(OVERFLOW)?;
            }
        }
        Ok(Self::new(out))
    }

    /// The substitution `x ↦ x + c`.
    pub fn shift(&self, c: i128) -> Result<Self> {
        let linear = Self::new([1, c]);
        let mut acc = Self::new([0]);
        for &a in &self.coeffs {
            acc = acc.mul(&linear)?;
            let last = acc.coeffs.len() - 1;
            acc.coeffs[last] = acc.coeffs[last].checked_add(a).ok_or(OVERFLOW)?;
            acc = Self::new(acc.coeffs);
        }
        Ok(acc)
    }

    /// Returns the monic `g` with `g² = self` when one exists over the integers.
    ///
    /// Only monic polynomials of even degree can qualify. The top half of
    /// `g` is read off the top coefficients of `self`, then the candidate is
    /// squared and compared exactly.
    pub fn monic_square_root(&self) -> Result<Option<Self>> {
        let d = self.degree();
        if !self.is_monic() || !d.is_multiple_of(2) {
            return Ok(None);
        }
        let k = d / 2;
        // root[j] is the coefficient of x^(k-j).
        let mut root = vec![0i128; k + 1];
        root[0] = 1;
        for i in 1..=k {
            let mut cross = 0i128;
            for j in 1..i {
                let t = root[j].checked_mul(root[i - j]).ok_or(OVERFLOW)?;
                cross = cross.checked_add(t).ok_or(OVERFLOW)?;
            }
            let rem = self.coeffs[i].checked_sub(cross).ok_or(OVERFLOW)?;
            if rem % 2 != 0 {
                return Ok(None);
            }
            root[i] = rem / 2;
        }
        let candidate = Self::new(root);
        Ok((candidate.mul(&candidate)? == *self).then_some(candidate))
    }

    /// Exact discriminant of a monic polynomial of degree at least 2.
    ///
    /// Computed as `(-1)^(d(d-1)/2) · Res(f, f')`, the resultant being the
    /// determinant of the `(2d - 1)`-square Sylvester matrix of `f` and `f'`,
    /// evaluated by fraction-free Bareiss elimination over big integers.
    pub fn discriminant(&self) -> Result<BigInt> {
        let d = self.degree();
        if d < 2 || !self.is_monic() {
            return Err(Error::InvalidArgument(
                "discriminant needs a monic polynomial of degree >= 2".into(),
            ));
        }
        let res = resultant(self, &self.derivative()?);
        Ok(if (d * (d - 1) / 2) % 2 == 1 { -res } else { res })
    }

    /// True iff this quintic has no factor of degree 1 or 2 modulo `p`,
    /// which for degree 5 means it is irreducible over the `p`-element field.
    ///
    /// Tests `gcd(X^p - X, f)` and `gcd(X^(p²) - X, f)` over `F_p`; the powers
    /// are taken by repeated squaring modulo `f` with coefficients reduced
    /// mod `p` at every step.
    pub fn is_irreducible_mod_p(&self, p: u64) -> Result<bool> {
        if self.degree() != 5 {
            return Err(Error::InvalidArgument(
                "irreducibility witness is defined for quintics only".into(),
            ));
        }
        if !is_prime(p as u128)? {
            return Err(Error::InvalidArgument(alloc::format!("{p} is not prime")));
        }
        if self.leading().rem_euclid(p as i128) == 0 {
            return Err(Error::InvalidArgument("leading coefficient vanishes modulo p".into()));
        }
        let f = FpPoly::from_int(self, p).monic();
        let x = FpPoly::new(vec![0, 1], p);
        let xp = x.pow_mod(p as u128, &f);
        if f.gcd(&xp.sub(&x)).degree() > 0 {
            return Ok(false);
        }
        let xpp = xp.pow_mod(p as u128, &f);
        Ok(f.gcd(&xpp.sub(&x)).degree() == 0)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            let power = d - i;
            if c == 0 && !(first && power == 0) {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (a, power) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "x^{power}")?,
                (_, 1) => write!(f, "{a}x")?,
                _ => write!(f, "{a}x^{power}")?,
            }
        }
        Ok(())
    }
}

/// `f_n(x)`, the Lehmer quintic for parameter `n`.
pub fn lehmer_coeffs(n: i128) -> Result<IntPolynomial> {
    let n2 = n.checked_mul(n).ok_or(OVERFLOW)?;
    let n3 = n2.checked_mul(n).ok_or(OVERFLOW)?;
    let n4 = n3.checked_mul(n).ok_or(OVERFLOW)?;
    let lin = |terms: &[(i128, i128)], konst: i128| -> Result<i128> {
        terms.iter().try_fold(konst, |acc, &(k, v)| {
            k.checked_mul(v).and_then(|t| acc.checked_add(t)).ok_or(OVERFLOW)
        })
    };
    let c3 = lin(&[(2, n3), (6, n2), (10, n)], 10)?;
    let c2 = lin(&[(1, n4), (5, n3), (11, n2), (15, n)], 5)?;
    let c1 = lin(&[(1, n3), (4, n2), (10, n)], 10)?;
    Ok(IntPolynomial::new([1, n2, -c3, c2, c1, 1]))
}

/// The quartic `X⁴ + 5X³ + 15X² + 25X + 25`, whose value at `n` is `m_n`.
pub fn lehmer_quartic() -> IntPolynomial {
    IntPolynomial::new([1, 5, 15, 25, 25])
}

/// Determinant of the Sylvester matrix of `f` and `g`.
pub fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    let (d, e) = (f.degree(), g.degree());
    let size = d + e;
    if size == 0 {
        return BigInt::one();
    }
    let mut m = vec![vec![BigInt::zero(); size]; size];
    for r in 0..e {
        for (j, &c) in f.coeffs().iter().enumerate() {
            m[r][r + j] = BigInt::from(c);
        }
    }
    for r in 0..d {
        for (j, &c) in g.coeffs().iter().enumerate() {
            m[e + r][r + j] = BigInt::from(c);
        }
    }
    bareiss_determinant(m)
}

/// Fraction-free Gaussian elimination; every division is exact.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Polynomial over `F_p`, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
struct FpPoly {
    c: Vec<u64>,
    p: u64,
}

impl FpPoly {
    fn new(mut c: Vec<u64>, p: u64) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { c, p }
    }

    fn from_int(f: &IntPolynomial, p: u64) -> Self {
        let c = f.coeffs().iter().rev().map(|&a| a.rem_euclid(p as i128) as u64).collect();
        Self::new(c, p)
    }

    /// Degree, with the zero polynomial at 0 as well.
    fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn mulp(&self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.p as u128) as u64
    }

    fn inv(&self, a: u64) -> u64 {
        crate::arith::pow_mod(a as u128, self.p as u128 - 2, self.p as u128) as u64
    }

    fn monic(&self) -> Self {
        let lead = *self.c.last().expect("monic of zero polynomial");
        let inv = self.inv(lead);
        Self::new(self.c.iter().map(|&a| self.mulp(a, inv)).collect(), self.p)
    }

    fn sub(&self, other: &Self) -> Self {
        let n = self.c.len().max(other.c.len());
        let p = self.p;
        let c = (0..n)
            .map(|i| {
                let a = self.c.get(i).copied().unwrap_or(0);
                let b = other.c.get(i).copied().unwrap_or(0);
                (a + p - b) % p
            })
            .collect();
        Self::new(c, p)
    }

    fn rem(&self, m: &Self) -> Self {
        let mut r = self.c.clone();
        let dm = m.degree();
        let inv = self.inv(*m.c.last().expect("division by zero polynomial"));
        while r.len() > dm && !r.is_empty() {
            let top = r.len() - 1;
            let q = self.mulp(r[top], inv);
            if q != 0 {
                for (i, &mc) in m.c.iter().enumerate() {
                    let idx = top - dm + i;
                    r[idx] = (r[idx] + self.p - self.mulp(q, mc)) % self.p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        Self::new(r, self.p)
    }

    fn mul_mod(&self, other: &Self, m: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new(), self.p);
        }
        let mut out = vec![0u64; self.c.len() + other.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in other.c.iter().enumerate() {
                out[i + j] = (out[i + j] + self.mulp(a, b)) % self.p;
            }
        }
        Self::new(out, self.p).rem(m)
    }

    fn pow_mod(&self, mut e: u128, m: &Self) -> Self {
        let mut base = self.rem(m);
        let mut acc = Self::new(vec![1], self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, m);
            }
            base = base.mul_mod(&base, m);
            e >>= 1;
        }
        acc
    }

    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }
}

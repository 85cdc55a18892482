use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::F2Poly;
use crate::error::{Error, Result};

/// Dense polynomial over Z4.
///
/// `coeffs[i]` is the coefficient of `x^i`, always in `0..4`, with no
/// trailing zeros. The zero polynomial has an empty coefficient vector and
/// degree `None`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u8>", from = "Vec<u8>")]
pub struct Z4Poly {
    coeffs: Vec<u8>,
}

impl Z4Poly {
    /// Builds a polynomial from ascending coefficients; values are taken mod 4.
    pub fn new(mut coeffs: Vec<u8>) -> Self {
        for c in coeffs.iter_mut() {
            *c &= 3;
        }
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn x() -> Self {
        Self { coeffs: vec![0, 1] }
    }

    /// `c * x^deg`.
    pub fn monomial(c: u8, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    /// `x^n - 1 = x^n + 3`.
    pub fn x_n_minus_1(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = 3;
        coeffs[n] = 1;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u8> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<u8> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    /// Coefficient vector padded (or truncated) to exactly `len` entries.
    pub fn padded(&self, len: usize) -> Vec<u8> {
        let mut v = self.coeffs.clone();
        v.resize(len, 0);
        v
    }

    pub fn scale(&self, c: u8) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * (c & 3)).collect())
    }

    /// Coefficient-wise reduction modulo 2.
    pub fn reduce_mod2(&self) -> F2Poly {
        F2Poly::new(self.coeffs.iter().map(|&c| c & 1).collect())
    }

    /// For a polynomial whose coefficients are all even, returns `p / 2` as an
    /// F2 polynomial; `None` if some coefficient is odd.
    pub fn halve(&self) -> Option<F2Poly> {
        if self.coeffs.iter().any(|&c| c & 1 == 1) {
            return None;
        }
        Some(F2Poly::new(self.coeffs.iter().map(|&c| c >> 1).collect()))
    }

    /// Division with remainder by a divisor whose leading coefficient is a
    /// unit (1 or 3).
    pub fn div_rem(&self, divisor: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial("quotient"))?;
        let lead = divisor.leading().unwrap();
        if lead & 1 == 0 {
            return Err(Error::NonMonicDivisor);
        }
        // 1 and 3 are their own inverses mod 4.
        let inv = lead;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Z4Poly::zero(), self.clone()));
        }
        let mut quot = vec![0u8; rem.len() - dd];
        for pos in (dd..rem.len()).rev() {
            let c = (rem[pos] * inv) & 3;
            if c == 0 {
                continue;
            }
            quot[pos - dd] = c;
            let shift = pos - dd;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + 4 - ((c * b) & 3)) & 3;
            }
        }
        Ok((Z4Poly::new(quot), Z4Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Z4Poly) -> Result<Z4Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Reduction modulo `x^n - 1` (fold exponents mod n).
    pub fn reduce_cyclic(&self, n: usize) -> Z4Poly {
        let mut out = vec![0u8; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i % n] = (out[i % n] + c) & 3;
        }
        Z4Poly::new(out)
    }

    /// Product in `Z4[x]/<x^n - 1>`.
    pub fn mul_cyclic(&self, other: &Z4Poly, n: usize) -> Z4Poly {
        Z4Poly::new(cyclic_convolve(&self.coeffs, &other.coeffs, n))
    }

    /// Reciprocal polynomial `x^d f(1/x)`, i.e. the coefficients reversed.
    pub fn reciprocal(&self) -> Result<Z4Poly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("reciprocal"));
        }
        let mut c = self.coeffs.clone();
        c.reverse();
        Ok(Z4Poly::new(c))
    }
}

/// Cyclic convolution of two Z4 coefficient slices into a length-`n` vector.
pub(crate) fn cyclic_convolve(a: &[u8], b: &[u8], n: usize) -> Vec<u8> {
    let mut out = vec![0u8; n];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let idx = (i + j) % n;
            out[idx] = (out[idx] + x * y) & 3;
        }
    }
    out
}

impl From<Vec<u8>> for Z4Poly {
    fn from(v: Vec<u8>) -> Self {
        Z4Poly::new(v)
    }
}

impl From<Z4Poly> for Vec<u8> {
    fn from(p: Z4Poly) -> Self {
        p.coeffs
    }
}

impl Add for &Z4Poly {
    type Output = Z4Poly;
    fn add(self, rhs: &Z4Poly) -> Z4Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Z4Poly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Z4Poly {
    type Output = Z4Poly;
    fn sub(self, rhs: &Z4Poly) -> Z4Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Z4Poly::new((0..len).map(|i| self.coeff(i) + 4 - rhs.coeff(i)).collect())
    }
}

impl Neg for &Z4Poly {
    type Output = Z4Poly;
    fn neg(self) -> Z4Poly {
        Z4Poly::new(self.coeffs.iter().map(|&c| 4 - c).collect())
    }
}

impl Mul for &Z4Poly {
    type Output = Z4Poly;
    fn mul(self, rhs: &Z4Poly) -> Z4Poly {
        if self.is_zero() || rhs.is_zero() {
            return Z4Poly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a * b) & 3;
            }
        }
        Z4Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Z4Poly {
            type Output = Z4Poly;
            fn $m(self, rhs: Z4Poly) -> Z4Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs)
    }
}

impl fmt::Debug for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4Poly({self})")
    }
}

/// Writes `3x^2 + x + 1` style text, highest degree first.
pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[u8]) -> fmt::Result {
    let mut first = true;
    for (i, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        match (i, c) {
            (0, _) => write!(f, "{c}")?,
            (1, 1) => f.write_str("x")?,
            (1, _) => write!(f, "{c}x")?,
            (_, 1) => write!(f, "x^{i}")?,
            _ => write!(f, "{c}x^{i}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use super::Z4Poly;
use crate::error::{Error, Result};

/// Dense polynomial over F2; `coeffs[i]` is the bit of `x^i`, no trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<u8>", from = "Vec<u8>")]
pub struct F2Poly {
    coeffs: Vec<u8>,
}

impl F2Poly {
    pub fn new(mut coeffs: Vec<u8>) -> Self {
        for c in coeffs.iter_mut() {
            *c &= 1;
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

    pub fn monomial(deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = 1;
        Self { coeffs }
    }

    /// `x^n + 1`.
    pub fn x_n_plus_1(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.coeffs[0] ^= 1;
        p.trim();
        p
    }

    /// Polynomial whose bit `i` of `bits` is the coefficient of `x^i`.
    pub fn from_bits(bits: u128) -> Self {
        Self::new((0..128).map(|i| ((bits >> i) & 1) as u8).collect())
    }

    /// Inverse of [`F2Poly::from_bits`]; `None` for degree >= 128.
    pub fn to_bits(&self) -> Option<u128> {
        if self.coeffs.len() > 128 {
            return None;
        }
        Some(self.coeffs.iter().enumerate().fold(0u128, |acc, (i, &c)| acc | ((c as u128) << i)))
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn padded(&self, len: usize) -> Vec<u8> {
        let mut v = self.coeffs.clone();
        v.resize(len, 0);
        v
    }

    /// The same coefficients read as a Z4 polynomial (F2 regarded as {0,1} in Z4).
    pub fn embed(&self) -> Z4Poly {
        Z4Poly::new(self.coeffs.clone())
    }

    pub fn div_rem(&self, divisor: &F2Poly) -> Result<(F2Poly, F2Poly)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial("quotient"))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((F2Poly::zero(), self.clone()));
        }
        let mut quot = vec![0u8; rem.len() - dd];
        for pos in (dd..rem.len()).rev() {
            if rem[pos] == 0 {
                continue;
            }
            quot[pos - dd] = 1;
            let shift = pos - dd;
            for (i, &b) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] ^= b;
            }
        }
        Ok((F2Poly::new(quot), F2Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &F2Poly) -> Result<F2Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn divides(&self, other: &F2Poly) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn gcd(&self, other: &F2Poly) -> F2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`.
    pub fn ext_gcd(&self, other: &F2Poly) -> (F2Poly, F2Poly, F2Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (F2Poly::one(), F2Poly::zero());
        let (mut t0, mut t1) = (F2Poly::zero(), F2Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 + &(&q * &s1);
            let t = &t0 + &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        (r0, s0, t0)
    }

    pub fn mul_mod(&self, other: &F2Poly, modulus: &F2Poly) -> F2Poly {
        (self * other).rem(modulus).expect("nonzero modulus")
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &F2Poly) -> F2Poly {
        let mut base = self.rem(modulus).expect("nonzero modulus");
        let mut acc = F2Poly::one().rem(modulus).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus);
            }
            base = base.mul_mod(&base, modulus);
            e >>= 1;
        }
        acc
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(m) = self.degree() else { return false };
        if m == 0 {
            return false;
        }
        // x^(2^i) mod self, by repeated squaring
        let x = F2Poly::x().rem(self).expect("nonzero");
        let mut frob = vec![x.clone()];
        for _ in 0..m {
            let last = frob.last().unwrap();
            frob.push(last.mul_mod(last, self));
        }
        if frob[m] != x {
            return false;
        }
        prime_factors(m).into_iter().all(|p| {
            let h = &frob[m / p] + &x;
            self.gcd(&h).degree() == Some(0)
        })
    }
}

/// Distinct prime factors of `n`, ascending.
pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl From<Vec<u8>> for F2Poly {
    fn from(v: Vec<u8>) -> Self {
        F2Poly::new(v)
    }
}

impl From<F2Poly> for Vec<u8> {
    fn from(p: F2Poly) -> Self {
        p.coeffs
    }
}

impl Add for &F2Poly {
    type Output = F2Poly;
    fn add(self, rhs: &F2Poly) -> F2Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        F2Poly::new((0..len).map(|i| self.coeff(i) ^ rhs.coeff(i)).collect())
    }
}

impl Mul for &F2Poly {
    type Output = F2Poly;
    fn mul(self, rhs: &F2Poly) -> F2Poly {
        if self.is_zero() || rhs.is_zero() {
            return F2Poly::zero();
        }
        let mut out = vec![0u8; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] ^= b;
            }
        }
        F2Poly::new(out)
    }
}

impl Add for F2Poly {
    type Output = F2Poly;
    fn add(self, rhs: F2Poly) -> F2Poly {
        &self + &rhs
    }
}

impl Mul for F2Poly {
    type Output = F2Poly;
    fn mul(self, rhs: F2Poly) -> F2Poly {
        &self * &rhs
    }
}

/// Ordered by degree first, then by coefficients from the top degree down
/// (equivalently, by the integer whose bits are the coefficients).
impl Ord for F2Poly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for F2Poly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::z4poly::write_poly(f, &self.coeffs)
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn irreducibility() {
        assert!(F2Poly::new(vec![1, 1]).is_irreducible());
        assert!(F2Poly::new(vec![1, 1, 1]).is_irreducible());
        assert!(F2Poly::new(vec![1, 1, 0, 1]).is_irreducible());
        assert!(!F2Poly::new(vec![1, 0, 1]).is_irreducible());
        assert!(!F2Poly::x_n_plus_1(7).is_irreducible());
        assert!(!F2Poly::one().is_irreducible());
        assert!(F2Poly::from_bits(0x11b).is_irreducible());
    }

    #[test]
    fn irreducibility_matches_trial_division_up_to_degree_8() {
        for bits in 2u128..512 {
            let p = F2Poly::from_bits(bits);
            let deg = p.degree().unwrap();
            let brute = deg >= 1
                && (2u128..bits).all(|q| {
                    let q = F2Poly::from_bits(q);
                    q.degree().unwrap() == 0 || q.degree().unwrap() >= deg || !q.divides(&p)
                });
            assert_eq!(p.is_irreducible(), brute, "{p}");
        }
    }

    #[test]
    fn ordering_is_degree_then_top_down() {
        let a = F2Poly::new(vec![1, 1, 0, 1]); // x^3+x+1
        let b = F2Poly::new(vec![1, 0, 1, 1]); // x^3+x^2+1
        assert!(a < b);
        assert!(F2Poly::new(vec![1, 1]) < a);
    }

    proptest! {
        #[test]
        fn ext_gcd_identity(a in 0u128..4096, b in 0u128..4096) {
            let (a, b) = (F2Poly::from_bits(a), F2Poly::from_bits(b));
            let (g, s, t) = a.ext_gcd(&b);
            prop_assert_eq!(&(&s * &a) + &(&t * &b), g);
        }

        #[test]
        fn bits_round_trip(a in any::<u64>()) {
            let p = F2Poly::from_bits(a as u128);
            prop_assert_eq!(p.to_bits(), Some(a as u128));
        }
    }
}

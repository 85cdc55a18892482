//! Element arithmetic in the Galois ring `K = Z4[x]/<f>`, its residue field
//! `F = F2[x]/<fbar>`, the chain ring `F[u]/<u^s>` and the mixed ring
//! `K[u]/<u^k>`.
//!
//! Every element carries a shared handle to its [`GaloisRing`]; binary
//! operations on elements of different rings fail through the `checked_*`
//! methods and panic through the operator traits.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polyarith::{factor_xn_minus_1_f2, hensel_lift, F2Poly, Z4Poly};

/// `Z4[x]/<f>` for a monic basic irreducible `f` of degree `d`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct GaloisRing {
    f: Z4Poly,
    fbar: F2Poly,
    d: usize,
}

impl GaloisRing {
    pub fn new(f: Z4Poly) -> Result<Arc<Self>> {
        let d = f.degree().filter(|&d| d >= 1).ok_or(Error::InvalidDegree(0))?;
        if !f.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let fbar = f.reduce_mod2();
        if !fbar.is_irreducible() {
            return Err(Error::InvalidSpec(format!("{f} is not basic irreducible")));
        }
        Ok(Arc::new(Self { f, fbar, d }))
    }

    /// A Galois ring of degree `d` built from the first irreducible factor of
    /// degree `d` of `x^(2^d - 1) + 1`, lifted to Z4.
    pub fn with_degree(d: usize) -> Result<Arc<Self>> {
        if d == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if d > 24 {
            return Err(Error::Unsupported(d));
        }
        let n = (1usize << d) - 1;
        let g = factor_xn_minus_1_f2(n)?
            .into_iter()
            .find(|g| g.degree() == Some(d))
            .ok_or_else(|| Error::Internal(format!("no degree-{d} factor")))?;
        Self::new(hensel_lift(&g, n)?)
    }

    pub fn modulus(&self) -> &Z4Poly {
        &self.f
    }

    pub fn residue_modulus(&self) -> &F2Poly {
        &self.fbar
    }

    pub fn degree(&self) -> usize {
        self.d
    }

    pub fn reduce(&self, p: &Z4Poly) -> Z4Poly {
        p.rem(&self.f).expect("monic modulus")
    }

    pub fn reduce_f2(&self, p: &F2Poly) -> F2Poly {
        p.rem(&self.fbar).expect("nonzero modulus")
    }
}

fn same_ring(a: &Arc<GaloisRing>, b: &Arc<GaloisRing>) -> Result<()> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Element of the Galois ring `K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GrEl {
    ring: Arc<GaloisRing>,
    poly: Z4Poly,
}

impl GrEl {
    pub fn new(ring: &Arc<GaloisRing>, p: &Z4Poly) -> Self {
        Self { poly: ring.reduce(p), ring: ring.clone() }
    }

    pub fn zero(ring: &Arc<GaloisRing>) -> Self {
        Self { ring: ring.clone(), poly: Z4Poly::zero() }
    }

    pub fn one(ring: &Arc<GaloisRing>) -> Self {
        Self { ring: ring.clone(), poly: Z4Poly::one() }
    }

    pub fn ring(&self) -> &Arc<GaloisRing> {
        &self.ring
    }

    pub fn poly(&self) -> &Z4Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn checked_add(&self, o: &GrEl) -> Result<GrEl> {
        same_ring(&self.ring, &o.ring)?;
        Ok(GrEl { ring: self.ring.clone(), poly: &self.poly + &o.poly })
    }

    pub fn checked_sub(&self, o: &GrEl) -> Result<GrEl> {
        same_ring(&self.ring, &o.ring)?;
        Ok(GrEl { ring: self.ring.clone(), poly: &self.poly - &o.poly })
    }

    pub fn checked_mul(&self, o: &GrEl) -> Result<GrEl> {
        same_ring(&self.ring, &o.ring)?;
        Ok(GrEl::new(&self.ring, &(&self.poly * &o.poly)))
    }
}

/// Element of the residue field `F`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqEl {
    ring: Arc<GaloisRing>,
    poly: F2Poly,
}

impl FqEl {
    pub fn new(ring: &Arc<GaloisRing>, p: &F2Poly) -> Self {
        Self { poly: ring.reduce_f2(p), ring: ring.clone() }
    }

    pub fn ring(&self) -> &Arc<GaloisRing> {
        &self.ring
    }

    pub fn poly(&self) -> &F2Poly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn checked_add(&self, o: &FqEl) -> Result<FqEl> {
        same_ring(&self.ring, &o.ring)?;
        Ok(FqEl { ring: self.ring.clone(), poly: &self.poly + &o.poly })
    }

    pub fn checked_mul(&self, o: &FqEl) -> Result<FqEl> {
        same_ring(&self.ring, &o.ring)?;
        Ok(FqEl::new(&self.ring, &(&self.poly * &o.poly)))
    }
}

/// Element of the chain ring `F[u]/<u^s>`; `coeffs[l]` is the `u^l` coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainEl {
    ring: Arc<GaloisRing>,
    coeffs: Vec<F2Poly>,
}

impl ChainEl {
    /// Builds an element from `u`-coefficients, padding or truncating to `s`.
    pub fn new(ring: &Arc<GaloisRing>, coeffs: &[F2Poly], s: usize) -> Self {
        let mut c: Vec<F2Poly> = coeffs.iter().take(s).map(|b| ring.reduce_f2(b)).collect();
        c.resize(s, F2Poly::zero());
        Self { ring: ring.clone(), coeffs: c }
    }

    pub fn zero(ring: &Arc<GaloisRing>, s: usize) -> Self {
        Self { ring: ring.clone(), coeffs: vec![F2Poly::zero(); s] }
    }

    pub fn ring(&self) -> &Arc<GaloisRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[F2Poly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F2Poly> {
        self.coeffs
    }

    pub fn chain_length(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(F2Poly::is_zero)
    }

    pub fn is_unit(&self) -> bool {
        self.coeffs.first().is_some_and(|b| !b.is_zero())
    }

    fn check(&self, o: &ChainEl) -> Result<()> {
        same_ring(&self.ring, &o.ring)?;
        if self.coeffs.len() != o.coeffs.len() {
            return Err(Error::ChainLengthMismatch(self.coeffs.len(), o.coeffs.len()));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &ChainEl) -> Result<ChainEl> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Ok(ChainEl { ring: self.ring.clone(), coeffs })
    }

    pub fn checked_mul(&self, o: &ChainEl) -> Result<ChainEl> {
        self.check(o)?;
        let s = self.coeffs.len();
        let mut out = vec![F2Poly::zero(); s];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.coeffs.iter().enumerate().take(s - a) {
                out[a + b] = &out[a + b] + &(x * y);
            }
        }
        let coeffs = out.iter().map(|c| self.ring.reduce_f2(c)).collect();
        Ok(ChainEl { ring: self.ring.clone(), coeffs })
    }

    /// `self = u^i * xi` with `xi` a unit; `i` is the lowest nonzero power.
    pub fn unit_decompose(&self) -> Result<(usize, ChainEl)> {
        let i = self.coeffs.iter().position(|b| !b.is_zero()).ok_or(Error::ZeroElement)?;
        let s = self.coeffs.len();
        let mut c = self.coeffs[i..].to_vec();
        c.resize(s, F2Poly::zero());
        Ok((i, ChainEl { ring: self.ring.clone(), coeffs: c }))
    }
}

/// Iterator over the units of `F[u]/<u^s>` for `F` of degree `d`, in
/// lexicographic order of `(b_0, b_1, ...)` with each `b_l` read as the
/// integer whose bits are its coefficients.
#[derive(Clone, Debug)]
pub struct UnitTuples {
    d: usize,
    digits: Vec<u128>,
    done: bool,
}

impl UnitTuples {
    pub fn new(d: usize, s: usize) -> Self {
        let mut digits = vec![0u128; s];
        if s > 0 {
            digits[0] = 1;
        }
        Self { d, digits, done: s == 0 || d == 0 || d > 127 }
    }
}

impl Iterator for UnitTuples {
    type Item = Vec<F2Poly>;

    fn next(&mut self) -> Option<Vec<F2Poly>> {
        if self.done {
            return None;
        }
        let out = self.digits.iter().map(|&b| F2Poly::from_bits(b)).collect();
        let top = 1u128 << self.d;
        let mut pos = self.digits.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < top {
                break;
            }
            self.digits[pos] = if pos == 0 { 1 } else { 0 };
        }
        Some(out)
    }
}

/// All units of `F[u]/<u^s>` over the residue field of `ring`.
pub fn enumerate_units(ring: &Arc<GaloisRing>, s: usize) -> impl Iterator<Item = ChainEl> + '_ {
    UnitTuples::new(ring.degree(), s).map(move |c| ChainEl { ring: ring.clone(), coeffs: c })
}

/// Element of `K[u]/<u^k>`; `coeffs[l]` is the `u^l` coefficient, reduced mod `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MixedEl {
    ring: Arc<GaloisRing>,
    coeffs: Vec<Z4Poly>,
}

impl MixedEl {
    pub fn new(ring: &Arc<GaloisRing>, coeffs: &[Z4Poly], k: usize) -> Self {
        let mut c: Vec<Z4Poly> = coeffs.iter().take(k).map(|p| ring.reduce(p)).collect();
        c.resize(k, Z4Poly::zero());
        Self { ring: ring.clone(), coeffs: c }
    }

    pub fn zero(ring: &Arc<GaloisRing>, k: usize) -> Self {
        Self { ring: ring.clone(), coeffs: vec![Z4Poly::zero(); k] }
    }

    pub fn one(ring: &Arc<GaloisRing>, k: usize) -> Self {
        Self::monomial(ring, k, 1, 0)
    }

    /// `c * u^l` (zero when `l >= k`).
    pub fn monomial(ring: &Arc<GaloisRing>, k: usize, c: u8, l: usize) -> Self {
        let mut m = Self::zero(ring, k);
        if l < k {
            m.coeffs[l] = Z4Poly::new(vec![c]);
        }
        m
    }

    /// `F`-coefficients read inside `K` as {0,1}-valued polynomials.
    pub fn embed(xi: &ChainEl, k: usize) -> Self {
        let c: Vec<Z4Poly> = xi.coeffs.iter().map(F2Poly::embed).collect();
        Self::new(&xi.ring, &c, k)
    }

    /// `2 * xi` for `xi` in `F[u]/<u^k>`.
    pub fn two_times(xi: &ChainEl, k: usize) -> Self {
        Self::embed(xi, k).scale(2)
    }

    /// `2 * (a * b)` with the product taken in `F[u]/<u^k>` first.
    pub fn two_times_product(a: &ChainEl, b: &ChainEl, k: usize) -> Result<Self> {
        Ok(Self::two_times(&a.checked_mul(b)?, k))
    }

    /// Rebuilds an element from `k * d` Z4 digits, digit `l * d + m` being
    /// the coefficient of `x^m u^l`.
    pub fn from_digits(ring: &Arc<GaloisRing>, k: usize, digits: &[u8]) -> Self {
        let d = ring.degree();
        let coeffs = (0..k).map(|l| Z4Poly::new(digits[l * d..(l + 1) * d].to_vec())).collect();
        Self { ring: ring.clone(), coeffs }
    }

    pub fn to_digits(&self) -> Vec<u8> {
        let d = self.ring.degree();
        self.coeffs.iter().flat_map(|c| c.padded(d)).collect()
    }

    pub fn ring(&self) -> &Arc<GaloisRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Z4Poly] {
        &self.coeffs
    }

    pub fn chain_length(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Z4Poly::is_zero)
    }

    pub fn scale(&self, c: u8) -> Self {
        let coeffs = self.coeffs.iter().map(|p| p.scale(c)).collect();
        Self { ring: self.ring.clone(), coeffs }
    }

    /// Multiplication by `x^a u^b`.
    pub fn shift(&self, a: usize, b: usize) -> Self {
        let k = self.coeffs.len();
        let mut out = vec![Z4Poly::zero(); k];
        let xa = Z4Poly::monomial(1, a);
        for l in 0..k.saturating_sub(b) {
            out[l + b] = self.ring.reduce(&(&self.coeffs[l] * &xa));
        }
        Self { ring: self.ring.clone(), coeffs: out }
    }

    fn check(&self, o: &MixedEl) -> Result<()> {
        same_ring(&self.ring, &o.ring)?;
        if self.coeffs.len() != o.coeffs.len() {
            return Err(Error::ChainLengthMismatch(self.coeffs.len(), o.coeffs.len()));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &MixedEl) -> Result<MixedEl> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Ok(MixedEl { ring: self.ring.clone(), coeffs })
    }

    pub fn checked_sub(&self, o: &MixedEl) -> Result<MixedEl> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Ok(MixedEl { ring: self.ring.clone(), coeffs })
    }

    pub fn checked_mul(&self, o: &MixedEl) -> Result<MixedEl> {
        self.check(o)?;
        let k = self.coeffs.len();
        let mut out = vec![Z4Poly::zero(); k];
        for (a, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in o.coeffs.iter().enumerate().take(k - a) {
                out[a + b] = &out[a + b] + &(x * y);
            }
        }
        let coeffs = out.iter().map(|c| self.ring.reduce(c)).collect();
        Ok(MixedEl { ring: self.ring.clone(), coeffs })
    }

    /// The 2-adic expansion `self = eta0 + 2 eta1` with `eta0, eta1` in
    /// `F[u]/<u^k>` embedded coefficient-wise; `eta0` is the projection tau.
    pub fn two_adic_split(&self) -> (ChainEl, ChainEl) {
        let k = self.coeffs.len();
        let mut eta0 = Vec::with_capacity(k);
        let mut eta1 = Vec::with_capacity(k);
        for c in &self.coeffs {
            eta0.push(c.reduce_mod2());
            eta1.push(F2Poly::new(c.coeffs().iter().map(|&a| a >> 1).collect()));
        }
        (
            ChainEl { ring: self.ring.clone(), coeffs: eta0 },
            ChainEl { ring: self.ring.clone(), coeffs: eta1 },
        )
    }

    /// The projection `tau(eta0 + 2 eta1) = eta0`.
    pub fn tau(&self) -> ChainEl {
        self.two_adic_split().0
    }
}

macro_rules! panicking_ops {
    ($t:ident) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                self.checked_add(rhs).expect("ring mismatch")
            }
        }
        impl Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                self.checked_mul(rhs).expect("ring mismatch")
            }
        }
    };
}
panicking_ops!(GrEl);
panicking_ops!(FqEl);
panicking_ops!(ChainEl);
panicking_ops!(MixedEl);

impl Sub for &GrEl {
    type Output = GrEl;
    fn sub(self, rhs: &GrEl) -> GrEl {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Sub for &MixedEl {
    type Output = MixedEl;
    fn sub(self, rhs: &MixedEl) -> MixedEl {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl Neg for &MixedEl {
    type Output = MixedEl;
    fn neg(self) -> MixedEl {
        self.scale(3)
    }
}

/// Writes `sum c_l u^l` with each coefficient parenthesized when needed.
fn write_u_poly<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[T],
    is_zero: impl Fn(&T) -> bool,
) -> fmt::Result {
    let mut first = true;
    for (l, c) in coeffs.iter().enumerate() {
        if is_zero(c) {
            continue;
        }
        if !first {
            f.write_str(" + ")?;
        }
        first = false;
        let text = c.to_string();
        let simple = !text.contains(' ');
        match (l, simple) {
            (0, _) => f.write_str(&text)?,
            (_, true) if text == "1" => write!(f, "{}", u_pow(l))?,
            (_, true) => write!(f, "{text}{}", u_pow(l))?,
            (_, false) => write!(f, "({text}){}", u_pow(l))?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn u_pow(l: usize) -> String {
    if l == 1 {
        "u".into()
    } else {
        format!("u^{l}")
    }
}

impl fmt::Display for ChainEl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_u_poly(f, &self.coeffs, F2Poly::is_zero)
    }
}

impl fmt::Display for MixedEl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_u_poly(f, &self.coeffs, Z4Poly::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn z4(c: &[u8]) -> Z4Poly {
        Z4Poly::new(c.to_vec())
    }

    fn k1() -> Arc<GaloisRing> {
        GaloisRing::new(z4(&[3, 1])).unwrap()
    }

    fn k2() -> Arc<GaloisRing> {
        GaloisRing::new(z4(&[3, 1, 2, 1])).unwrap()
    }

    /// Every element of `K[u]/<u^k>` by digit enumeration.
    fn all_elements(ring: &Arc<GaloisRing>, k: usize) -> Vec<MixedEl> {
        let len = ring.degree() * k;
        (0..1usize << (2 * len))
            .map(|idx| {
                let digits: Vec<u8> = (0..len).map(|p| ((idx >> (2 * p)) & 3) as u8).collect();
                MixedEl::from_digits(ring, k, &digits)
            })
            .collect()
    }

    #[test]
    fn u_power_vanishes() {
        let r = k1();
        let a = MixedEl::monomial(&r, 4, 1, 3);
        let b = MixedEl::monomial(&r, 4, 1, 1);
        assert!((&a * &b).is_zero());
    }

    #[test]
    fn one_plus_two_u_squares_to_one() {
        let r = k1();
        let a = &MixedEl::one(&r, 3) + &MixedEl::monomial(&r, 3, 2, 1);
        assert_eq!(&a * &a, MixedEl::one(&r, 3));
    }

    #[test]
    fn x_cubed_reduces_mod_f2() {
        let r = k2();
        let x = GrEl::new(&r, &Z4Poly::x());
        let x2 = GrEl::new(&r, &z4(&[0, 0, 1]));
        assert_eq!((&x * &x2).poly(), &z4(&[1, 3, 2]));
    }

    #[test]
    fn mismatched_rings_are_errors() {
        let a = GrEl::one(&k1());
        let b = GrEl::one(&k2());
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch));
        let c = MixedEl::one(&k1(), 2);
        let d = MixedEl::one(&k1(), 3);
        assert_eq!(c.checked_mul(&d), Err(Error::ChainLengthMismatch(2, 3)));
    }

    #[test]
    fn two_adic_examples() {
        let r = k2();
        let three = MixedEl::monomial(&r, 2, 3, 0);
        let (e0, e1) = three.two_adic_split();
        assert_eq!(e0.coeffs()[0], F2Poly::one());
        assert_eq!(e1.coeffs()[0], F2Poly::one());
        let two_u = MixedEl::monomial(&r, 2, 2, 1);
        let (e0, e1) = two_u.two_adic_split();
        assert!(e0.is_zero());
        assert_eq!(e1.coeffs(), &[F2Poly::zero(), F2Poly::one()]);
        let a = MixedEl::new(&r, &[z4(&[0, 2]), Z4Poly::one()], 2);
        let (e0, e1) = a.two_adic_split();
        assert_eq!(e0.coeffs(), &[F2Poly::zero(), F2Poly::one()]);
        assert_eq!(e1.coeffs(), &[F2Poly::x(), F2Poly::zero()]);
    }

    #[test]
    fn split_round_trips_and_tau_is_a_homomorphism() {
        for (ring, k) in [(k1(), 2), (k1(), 4), (GaloisRing::with_degree(2).unwrap(), 2)] {
            let all = all_elements(&ring, k);
            for a in &all {
                let (e0, e1) = a.two_adic_split();
                let back = &MixedEl::embed(&e0, k) + &MixedEl::two_times(&e1, k);
                assert_eq!(&back, a);
            }
            for a in all.iter().step_by(7) {
                for b in all.iter().step_by(5) {
                    assert_eq!((a * b).tau(), &a.tau() * &b.tau());
                    assert_eq!((a + b).tau(), &a.tau() + &b.tau());
                    let (xa, xb) = (a.tau(), b.tau());
                    assert_eq!(
                        MixedEl::two_times_product(&xa, &xb, k).unwrap(),
                        &MixedEl::embed(&xa, k) * &MixedEl::two_times(&xb, k)
                    );
                }
            }
        }
    }

    #[test]
    fn unit_examples() {
        let r = k1();
        let units: Vec<String> = enumerate_units(&r, 2).map(|u| u.to_string()).collect();
        assert_eq!(units, vec!["1", "1 + u"]);
        assert_eq!(enumerate_units(&k2(), 1).count(), 7);
        assert_eq!(enumerate_units(&r, 1).count(), 1);
    }

    #[test]
    fn unit_counts_match_formula() {
        for d in 1..=3 {
            let ring = GaloisRing::with_degree(d).unwrap();
            for s in 1..=5 {
                let expected = ((1usize << d) - 1) << ((s - 1) * d);
                let units: Vec<ChainEl> = enumerate_units(&ring, s).collect();
                assert_eq!(units.len(), expected);
                assert!(units.iter().all(ChainEl::is_unit));
            }
        }
    }

    #[test]
    fn unit_decomposition() {
        let r = k1();
        let u2 = ChainEl::new(&r, &[F2Poly::zero(), F2Poly::zero(), F2Poly::one()], 3);
        let (i, xi) = u2.unit_decompose().unwrap();
        assert_eq!((i, xi.to_string()), (2, "1".to_string()));
        let a = ChainEl::new(&r, &[F2Poly::zero(), F2Poly::one(), F2Poly::one()], 3);
        let (i, xi) = a.unit_decompose().unwrap();
        assert_eq!((i, xi.to_string()), (1, "1 + u".to_string()));
        assert_eq!(ChainEl::zero(&r, 3).unit_decompose(), Err(Error::ZeroElement));

        let r = k2();
        let c = ChainEl::new(&r, &[F2Poly::zero(), F2Poly::zero(), F2Poly::x()], 4);
        let (i, xi) = c.unit_decompose().unwrap();
        assert_eq!(i, 2);
        let u_i = ChainEl::new(&r, &[F2Poly::zero(), F2Poly::zero(), F2Poly::one()], 4);
        assert_eq!(&u_i * &xi, c);
    }

    #[test]
    fn principal_u_power_ideals_have_expected_size() {
        for (ring, s) in [(k1(), 4), (k1(), 8), (GaloisRing::with_degree(2).unwrap(), 4)] {
            let d = ring.degree();
            let all: Vec<ChainEl> = (0..1usize << (d * s))
                .map(|idx| {
                    let c: Vec<F2Poly> =
                        (0..s).map(|l| F2Poly::from_bits(((idx >> (l * d)) & ((1 << d) - 1)) as u128)).collect();
                    ChainEl::new(&ring, &c, s)
                })
                .collect();
            for l in 0..=s {
                let mut gen = vec![F2Poly::zero(); s];
                if l < s {
                    gen[l] = F2Poly::one();
                }
                let g = ChainEl::new(&ring, &gen, s);
                let ideal: HashSet<ChainEl> = all.iter().map(|a| a * &g).collect();
                assert_eq!(ideal.len(), 1 << (d * (s - l)));
            }
        }
    }

    #[test]
    fn default_rings() {
        assert_eq!(GaloisRing::with_degree(1).unwrap().modulus(), &z4(&[3, 1]));
        assert_eq!(GaloisRing::with_degree(2).unwrap().modulus(), &z4(&[1, 1, 1]));
        assert_eq!(GaloisRing::with_degree(3).unwrap().modulus(), &z4(&[3, 1, 2, 1]));
    }
}

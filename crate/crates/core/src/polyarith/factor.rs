//! Factorization of `x^n + 1` over F2 for odd `n`.
//!
//! Each irreducible factor is the minimal polynomial of `beta^c` over F2,
//! where `beta` has multiplicative order `n` in `F_{2^m}`, `m` is the order
//! of 2 modulo `n`, and `c` runs over representatives of the 2-cyclotomic
//! cosets modulo `n`.

use super::f2poly::prime_factors;
use super::F2Poly;
use crate::error::{Error, Result};

/// Largest extension degree handled (exponents of `F_{2^m}^*` must fit in u128).
const MAX_EXTENSION_DEGREE: usize = 127;

pub(crate) fn check_odd(n: usize) -> Result<()> {
    if n == 0 || n.is_multiple_of(2) {
        Err(Error::InvalidLength(n))
    } else {
        Ok(())
    }
}

/// Multiplicative order of 2 modulo odd `n` (1 for `n = 1`).
pub fn order_of_two(n: usize) -> Result<usize> {
    check_odd(n)?;
    let mut m = 1;
    let mut p = 2 % n;
    while p != 1 % n {
        p = (p * 2) % n;
        m += 1;
    }
    Ok(m)
}

/// 2-cyclotomic cosets modulo `n`, each sorted, ordered by smallest element.
pub fn cyclotomic_cosets(n: usize) -> Result<Vec<Vec<usize>>> {
    check_odd(n)?;
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for c in 0..n {
        if seen[c] {
            continue;
        }
        let mut coset = Vec::new();
        let mut e = c;
        while !seen[e] {
            seen[e] = true;
            coset.push(e);
            e = (e * 2) % n;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(cosets)
}

/// The finite field `F_{2^m}` as F2[y] modulo an irreducible polynomial.
struct ExtensionField {
    modulus: F2Poly,
}

impl ExtensionField {
    fn new(m: usize) -> Self {
        // smallest irreducible of degree m in the degree/top-down order
        let mut candidate = F2Poly::monomial(m);
        loop {
            let with_one = &candidate + &F2Poly::one();
            if with_one.is_irreducible() {
                return Self { modulus: with_one };
            }
            candidate = next_same_degree(&candidate, m);
        }
    }

    fn mul(&self, a: &F2Poly, b: &F2Poly) -> F2Poly {
        a.mul_mod(b, &self.modulus)
    }

    fn pow(&self, a: &F2Poly, e: u128) -> F2Poly {
        a.pow_mod(e, &self.modulus)
    }
}

/// Steps through degree-`m` polynomials with zero constant term by
/// incrementing the middle coefficients as a binary counter.
fn next_same_degree(p: &F2Poly, m: usize) -> F2Poly {
    let mut c = p.padded(m + 1);
    for bit in c.iter_mut().take(m).skip(1) {
        if *bit == 0 {
            *bit = 1;
            return F2Poly::new(c);
        }
        *bit = 0;
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

/// A root of unity of exact order `n` in `field`, found deterministically.
fn primitive_nth_root(field: &ExtensionField, m: usize, n: usize) -> F2Poly {
    let group_order: u128 = (1u128 << m) - 1;
    let cofactor = group_order / n as u128;
    let primes = prime_factors(n);
    let mut bits: u128 = 2;
    loop {
        let gamma = F2Poly::from_bits(bits);
        bits += 1;
        if gamma.degree().is_some_and(|d| d >= m) {
            continue;
        }
        let beta = field.pow(&gamma, cofactor);
        if beta.is_zero() {
            continue;
        }
        if primes.iter().all(|&p| !field.pow(&beta, (n / p) as u128).is_one()) {
            return beta;
        }
    }
}

/// The monic irreducible factors of `x^n + 1` over F2, sorted by degree and
/// then by coefficients from the top degree down.
pub fn factor_xn_minus_1_f2(n: usize) -> Result<Vec<F2Poly>> {
    check_odd(n)?;
    if n == 1 {
        return Ok(vec![F2Poly::new(vec![1, 1])]);
    }
    let m = order_of_two(n)?;
    if m > MAX_EXTENSION_DEGREE {
        return Err(Error::Unsupported(n));
    }
    let field = ExtensionField::new(m);
    let beta = primitive_nth_root(&field, m, n);
    let mut factors = Vec::new();
    for coset in cyclotomic_cosets(n)? {
        // product of (X - beta^c) over the coset, coefficients in F_{2^m}
        let mut poly: Vec<F2Poly> = vec![F2Poly::one()];
        for &c in &coset {
            let root = field.pow(&beta, c as u128);
            let mut next = vec![F2Poly::zero(); poly.len() + 1];
            for (i, coeff) in poly.iter().enumerate() {
                next[i + 1] = &next[i + 1] + coeff;
                next[i] = &next[i] + &field.mul(coeff, &root);
            }
            poly = next;
        }
        let mut bits = Vec::with_capacity(poly.len());
        for coeff in &poly {
            match coeff.degree() {
                None => bits.push(0),
                Some(0) => bits.push(1),
                Some(_) => {
                    return Err(Error::Internal(format!(
                        "minimal polynomial of beta^{} has a coefficient outside F2",
                        coset[0]
                    )))
                }
            }
        }
        factors.push(F2Poly::new(bits));
    }
    factors.sort();
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(bits: &[u8]) -> F2Poly {
        F2Poly::new(bits.to_vec())
    }

    /// Brute force: every monic F2 polynomial of degree 1..=max_deg that is
    /// irreducible (trial division) and divides x^n + 1.
    fn brute_force_factors(n: usize, max_deg: usize) -> Vec<F2Poly> {
        let target = F2Poly::x_n_plus_1(n);
        let mut out = Vec::new();
        for bits in 2u128..(1u128 << (max_deg + 1)) {
            let p = F2Poly::from_bits(bits);
            let deg = p.degree().unwrap();
            let irreducible = (2u128..bits).all(|q| {
                let q = F2Poly::from_bits(q);
                let dq = q.degree().unwrap();
                dq == 0 || dq >= deg || !q.divides(&p)
            });
            if irreducible && p.divides(&target) {
                out.push(p);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn n7_matches_printed_factors() {
        assert_eq!(
            factor_xn_minus_1_f2(7).unwrap(),
            vec![f(&[1, 1]), f(&[1, 1, 0, 1]), f(&[1, 0, 1, 1])]
        );
    }

    #[test]
    fn small_cases() {
        assert_eq!(factor_xn_minus_1_f2(1).unwrap(), vec![f(&[1, 1])]);
        assert_eq!(factor_xn_minus_1_f2(3).unwrap(), vec![f(&[1, 1]), f(&[1, 1, 1])]);
        assert_eq!(factor_xn_minus_1_f2(3).unwrap(), brute_force_factors(3, 2));
    }

    #[test]
    fn rejects_even_or_zero() {
        assert_eq!(factor_xn_minus_1_f2(0), Err(Error::InvalidLength(0)));
        assert_eq!(factor_xn_minus_1_f2(8), Err(Error::InvalidLength(8)));
    }

    #[test]
    fn matches_brute_force_for_small_n() {
        for n in [5, 9, 11, 13, 15, 17, 21] {
            let got = factor_xn_minus_1_f2(n).unwrap();
            let max_deg = got.iter().filter_map(|p| p.degree()).max().unwrap();
            assert_eq!(got, brute_force_factors(n, max_deg), "n = {n}");
        }
    }

    #[test]
    fn product_is_xn_plus_1_for_all_odd_n_up_to_63() {
        for n in (1..=63).step_by(2) {
            let factors = factor_xn_minus_1_f2(n).unwrap();
            let prod = factors.iter().fold(F2Poly::one(), |acc, p| &acc * p);
            assert_eq!(prod, F2Poly::x_n_plus_1(n), "n = {n}");
            assert!(factors.iter().all(F2Poly::is_irreducible));
            let mut dedup = factors.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), factors.len());
        }
    }

    #[test]
    fn order_of_two_values() {
        assert_eq!(order_of_two(1).unwrap(), 1);
        assert_eq!(order_of_two(7).unwrap(), 3);
        assert_eq!(order_of_two(23).unwrap(), 11);
        assert_eq!(order_of_two(63).unwrap(), 6);
    }
}

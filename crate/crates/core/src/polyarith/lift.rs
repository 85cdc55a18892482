//! Hensel lifting of F2 factors of `x^n + 1` to Z4, Bezout pairs and the
//! CRT idempotents of `Z4[x]/<x^n - 1>`.

use super::factor::{check_odd, factor_xn_minus_1_f2};
use super::{F2Poly, Z4Poly};
use crate::error::{Error, Result};

/// The monic Z4 factor of `x^n - 1` reducing to `g` modulo 2.
///
/// Graeffe construction: with `g = e + o` split into even and odd degree
/// parts, `f(x^2) = ±(e^2 - o^2)` over Z4.
pub fn hensel_lift(g: &F2Poly, n: usize) -> Result<Z4Poly> {
    check_odd(n)?;
    let not_factor = || Error::NotAFactor(g.to_string(), n);
    let d = g.degree().ok_or_else(not_factor)?;
    if d == 0 || !g.is_irreducible() || !g.divides(&F2Poly::x_n_plus_1(n)) {
        return Err(not_factor());
    }
    let lifted = g.embed();
    let mut even = vec![0u8; d + 1];
    let mut odd = vec![0u8; d + 1];
    for (i, &c) in lifted.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            even[i] = c;
        } else {
            odd[i] = c;
        }
    }
    let (e, o) = (Z4Poly::new(even), Z4Poly::new(odd));
    let square = &(&e * &e) - &(&o * &o);
    let f = Z4Poly::new((0..=d).map(|i| square.coeff(2 * i)).collect());
    // the leading coefficient is a unit; 1 and 3 are self-inverse
    let f = f.scale(f.leading().unwrap_or(0));
    if !f.is_monic() || f.reduce_mod2() != *g {
        return Err(Error::LiftFailed(g.to_string()));
    }
    match Z4Poly::x_n_minus_1(n).rem(&f) {
        Ok(r) if r.is_zero() => Ok(f),
        _ => Err(Error::LiftFailed(g.to_string())),
    }
}

/// Polynomials `(v, w)` over Z4 with `v*F + w*f = 1`, where `deg v < deg f`
/// whenever `f` has positive degree.
pub fn bezout_pair(big_f: &Z4Poly, f: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
    let (g, s, t) = big_f.reduce_mod2().ext_gcd(&f.reduce_mod2());
    if !g.is_one() {
        return Err(Error::NotCoprime);
    }
    let (v0, w0) = (s.embed(), t.embed());
    let err = &(&(&v0 * big_f) + &(&w0 * f)) - &Z4Poly::one();
    let eps = err.halve().ok_or_else(|| Error::Internal("Bezout defect is not even".into()))?;
    // (1 + 2eps)^2 = 1 over Z4
    let corr = &Z4Poly::one() + &eps.embed().scale(2);
    let (mut v, mut w) = (&v0 * &corr, &w0 * &corr);
    if f.degree().is_some_and(|d| d > 0) && f.leading().is_some_and(|c| c & 1 == 1) {
        let (q, r) = v.div_rem(f)?;
        w = &w + &(&q * big_f);
        v = r;
    }
    if &(&v * big_f) + &(&w * f) != Z4Poly::one() {
        return Err(Error::Internal("Bezout identity check failed".into()));
    }
    Ok((v, w))
}

/// Hensel lifts of all factors of `x^n - 1`, in the sorted F2 factor order.
pub fn lift_factors(n: usize) -> Result<Vec<Z4Poly>> {
    factor_xn_minus_1_f2(n)?.iter().map(|g| hensel_lift(g, n)).collect()
}

/// `e_j = v_j F_j mod (x^n - 1)` with `F_j = (x^n - 1) / f_j`, aligned with
/// [`lift_factors`].
pub fn idempotents(n: usize) -> Result<Vec<Z4Poly>> {
    let factors = lift_factors(n)?;
    factors.iter().map(|f| idempotent_for(f, n)).collect()
}

/// The idempotent attached to one lifted factor `f` of `x^n - 1`, together
/// with its cofactor and Bezout pair.
pub(crate) fn idempotent_data(f: &Z4Poly, n: usize) -> Result<(Z4Poly, Z4Poly, Z4Poly, Z4Poly)> {
    let (cofactor, r) = Z4Poly::x_n_minus_1(n).div_rem(f)?;
    if !r.is_zero() {
        return Err(Error::Internal(format!("{f} does not divide x^{n} - 1")));
    }
    let (v, w) = bezout_pair(&cofactor, f)?;
    let e = (&v * &cofactor).reduce_cyclic(n);
    Ok((e, cofactor, v, w))
}

fn idempotent_for(f: &Z4Poly, n: usize) -> Result<Z4Poly> {
    Ok(idempotent_data(f, n)?.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u8]) -> Z4Poly {
        Z4Poly::new(c.to_vec())
    }

    #[test]
    fn n7_lifts() {
        assert_eq!(lift_factors(7).unwrap(), vec![p(&[3, 1]), p(&[3, 1, 2, 1]), p(&[3, 2, 3, 1])]);
    }

    #[test]
    fn n7_idempotents() {
        let e = idempotents(7).unwrap();
        assert_eq!(e[0], p(&[3; 7]));
        assert_eq!(e[1], p(&[1, 3, 3, 2, 3, 2, 2]));
        assert_eq!(e[2], p(&[1, 2, 2, 3, 2, 3, 3]));
    }

    #[test]
    fn n1_idempotent_is_one() {
        assert_eq!(idempotents(1).unwrap(), vec![Z4Poly::one()]);
    }

    #[test]
    fn lift_rejects_non_factors() {
        assert!(matches!(hensel_lift(&F2Poly::new(vec![1, 1, 1]), 7), Err(Error::NotAFactor(..))));
        assert!(hensel_lift(&F2Poly::new(vec![1, 0, 1]), 7).is_err());
        assert!(hensel_lift(&F2Poly::one(), 7).is_err());
    }

    #[test]
    fn bezout_trivial_and_small() {
        assert_eq!(bezout_pair(&Z4Poly::one(), &p(&[3, 1])).unwrap(), (Z4Poly::one(), Z4Poly::zero()));
        let (big_f, f) = (p(&[1, 1]), p(&[3, 1]));
        assert!(bezout_pair(&big_f, &f).is_err(), "x+1 and x+3 share a root mod 2");
        let (big_f, f) = (p(&[1, 1, 1]), p(&[3, 1]));
        let (v, w) = bezout_pair(&big_f, &f).unwrap();
        assert_eq!(&(&v * &big_f) + &(&w * &f), Z4Poly::one());
    }

    #[test]
    fn lifts_and_idempotents_for_all_odd_n_up_to_63() {
        for n in (1..=63).step_by(2) {
            let fs = lift_factors(n).unwrap();
            let prod = fs.iter().fold(Z4Poly::one(), |acc, f| &acc * f);
            assert_eq!(prod, Z4Poly::x_n_minus_1(n), "n = {n}");
            let es = idempotents(n).unwrap();
            let sum = es.iter().fold(Z4Poly::zero(), |acc, e| &acc + e);
            assert_eq!(sum.reduce_cyclic(n), Z4Poly::one(), "n = {n}");
            for (a, ea) in es.iter().enumerate() {
                assert_eq!(&ea.mul_cyclic(ea, n), ea);
                for eb in es.iter().skip(a + 1) {
                    assert!(ea.mul_cyclic(eb, n).is_zero());
                }
            }
            for f in &fs {
                let (_, big_f, v, w) = idempotent_data(f, n).unwrap();
                assert_eq!(&(&v * &big_f) + &(&w * f), Z4Poly::one());
            }
        }
    }
}

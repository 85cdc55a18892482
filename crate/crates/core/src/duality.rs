//! Euclidean duals of cyclic codes and the self-dual census.

use std::sync::Arc;

use num_bigint::BigUint;

use crate::codes::{CodeElement, CyclicCode, FactorSystem};
use crate::error::{check_budget, Error, Result};
use crate::idealenum::{count_formulas, enumerate_ideal_specs, Case, IdealSpec};
use crate::polyarith::F2Poly;
use crate::rings::UnitTuples;

/// `sum_i a_i b_i` in `R = Z4[u]/<u^k>`, as `k` Z4 coefficients.
pub fn euclidean_inner_product(a: &CodeElement, b: &CodeElement) -> Result<Vec<u8>> {
    if (a.n(), a.k()) != (b.n(), b.k()) {
        return Err(Error::DimensionMismatch(format!("{}x{} vs {}x{}", a.n(), a.k(), b.n(), b.k())));
    }
    let k = a.k();
    let mut out = vec![0u8; k];
    for i in 0..a.n() {
        let (x, y) = (a.row(i), b.row(i));
        for (p, &xp) in x.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (q, &yq) in y.iter().enumerate().take(k - p) {
                out[p + q] = (out[p + q] + xp * yq) & 3;
            }
        }
    }
    Ok(out)
}

/// Replaces every `u`-coefficient `b(x)` by `b(x^(n-1)) mod target`.
pub fn substitute_inverse(h: &[F2Poly], n: usize, target: &F2Poly) -> Result<Vec<F2Poly>> {
    h.iter()
        .map(|b| {
            let mut bits = vec![0u8; n];
            for (m, &c) in b.coeffs().iter().enumerate() {
                bits[(n - m % n) % n] ^= c;
            }
            F2Poly::new(bits).rem(target)
        })
        .collect()
}

/// The dual ideal under an `h -> h(x^-1)` map supplied by the caller.
pub fn dual_spec_with(spec: &IdealSpec, conj: impl Fn(&[F2Poly]) -> Result<Vec<F2Poly>>) -> Result<IdealSpec> {
    spec.validate()?;
    let (d, k) = (spec.d, spec.k);
    let (i, s, t) = (spec.i.unwrap_or(0), spec.s.unwrap_or(0), spec.t.unwrap_or(0));
    let h = || conj(spec.h.as_deref().unwrap_or(&[]));
    let out = match spec.case {
        Case::I => IdealSpec::u_power(d, k, k - i)?,
        Case::II if s == 0 => IdealSpec::two_u_power(d, k, 0)?,
        Case::II => IdealSpec::pair(d, k, k - s, 0)?,
        Case::III => IdealSpec::principal(d, k, k - i, k + t - 2 * i, &h()?)?,
        Case::IV if t == 0 => IdealSpec::principal(d, k, i, 0, &h()?)?,
        Case::IV => IdealSpec::pair_twisted(d, k, i - t, k - i, 0, &h()?)?,
        Case::V if s == 0 => IdealSpec::two_u_power(d, k, k - i)?,
        Case::V => IdealSpec::pair(d, k, k - s, k - i)?,
        Case::VI if t == 0 => IdealSpec::principal(d, k, k - s, k - i - s, &h()?)?,
        Case::VI => IdealSpec::pair_twisted(d, k, k - s, k - i, k + t - i - s, &h()?)?,
    };
    if out.log2_cardinality() + spec.log2_cardinality() != 2 * (d * k) as u64 {
        return Err(Error::Internal(format!("dual of {spec} has the wrong size")));
    }
    Ok(out)
}

/// The dual of ideal `spec` at factor `j`; it lives at factor `sigma(j)`.
pub fn dual_ideal_spec(system: &FactorSystem, j: usize, spec: &IdealSpec) -> Result<(usize, IdealSpec)> {
    if j >= system.r() {
        return Err(Error::DimensionMismatch(format!("factor index {j} out of range")));
    }
    let target = system.sigma(j);
    let fbar = &system.factor(target).fbar;
    let dual = dual_spec_with(spec, |h| substitute_inverse(h, system.n(), fbar))?;
    Ok((target, dual))
}

pub fn dual_code(code: &CyclicCode) -> Result<CyclicCode> {
    let system = code.system();
    let mut specs = code.specs().to_vec();
    for (j, spec) in code.specs().iter().enumerate() {
        let (to, dual) = dual_ideal_spec(system, j, spec)?;
        specs[to] = dual;
    }
    CyclicCode::new(system.clone(), code.k(), specs)
}

pub fn is_self_dual(code: &CyclicCode) -> Result<bool> {
    Ok(dual_code(code)? == *code)
}

/// The self-dual ideals at a self-reciprocal factor `j`, in the order of
/// the classification (cases A-i for even `k`, A-ii for odd `k`).
pub fn self_dual_ideal_specs(system: &FactorSystem, j: usize, k: usize) -> Result<Vec<IdealSpec>> {
    if j >= system.r() || system.sigma(j) != j {
        return Err(Error::InvalidSpec(format!("factor {j} is not self-reciprocal")));
    }
    if k < 2 {
        return Err(Error::InvalidChainLength(k));
    }
    let fac = system.factor(j);
    let d = fac.d;
    let fixed = |h: &[F2Poly]| -> Result<bool> { Ok(substitute_inverse(h, system.n(), &fac.fbar)? == h) };
    let mut out = Vec::new();
    let push_h = |out: &mut Vec<IdealSpec>, m: usize, build: &dyn Fn(&[F2Poly]) -> Result<IdealSpec>| -> Result<()> {
        for h in UnitTuples::new(d, m) {
            let spec = build(&h)?;
            if fixed(spec.h.as_deref().unwrap_or(&[]))? {
                out.push(spec);
            }
        }
        Ok(())
    };
    if k.is_multiple_of(2) {
        let half = k / 2;
        out.push(IdealSpec::u_power(d, k, half)?);
        out.push(IdealSpec::two_u_power(d, k, 0)?);
        for t in 0..half {
            push_h(&mut out, half - t, &|h| IdealSpec::principal(d, k, half, t, h))?;
        }
        for i in half + 1..k {
            push_h(&mut out, k - i, &|h| IdealSpec::principal(d, k, i, 0, h))?;
        }
        for i in half + 1..k {
            out.push(IdealSpec::pair(d, k, i, k - i)?);
        }
        for i in half + 1..k {
            for t in 1..k - i {
                push_h(&mut out, k - i - t, &|h| IdealSpec::pair_twisted(d, k, i, k - i, t, h))?;
            }
        }
    } else {
        let half = k.div_ceil(2);
        out.push(IdealSpec::two_u_power(d, k, 0)?);
        for i in half..k {
            push_h(&mut out, k - i, &|h| IdealSpec::principal(d, k, i, 0, h))?;
        }
        for i in half..k {
            out.push(IdealSpec::pair(d, k, i, k - i)?);
        }
        for i in half..k {
            for t in 1..k - i {
                push_h(&mut out, k - i - t, &|h| IdealSpec::pair_twisted(d, k, i, k - i, t, h))?;
            }
        }
    }
    Ok(out)
}

/// Iterator over all self-dual cyclic codes.
pub struct SelfDualCodes {
    system: Arc<FactorSystem>,
    k: usize,
    free: Vec<(usize, Vec<IdealSpec>)>,
    idx: Vec<usize>,
    done: bool,
}

impl Iterator for SelfDualCodes {
    type Item = Result<CyclicCode>;

    fn next(&mut self) -> Option<Result<CyclicCode>> {
        if self.done {
            return None;
        }
        let mut specs: Vec<Option<IdealSpec>> = vec![None; self.system.r()];
        for (&i, (j, list)) in self.idx.iter().zip(&self.free) {
            let spec = list[i].clone();
            if self.system.sigma(*j) != *j {
                match dual_ideal_spec(&self.system, *j, &spec) {
                    Ok((to, dual)) => specs[to] = Some(dual),
                    Err(e) => return Some(Err(e)),
                }
            }
            specs[*j] = Some(spec);
        }
        let mut pos = self.idx.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.idx[pos] += 1;
            if self.idx[pos] < self.free[pos].1.len() {
                break;
            }
            self.idx[pos] = 0;
        }
        let specs = specs.into_iter().map(|s| s.ok_or_else(|| Error::Internal("unfilled factor".into())));
        Some(specs.collect::<Result<Vec<_>>>().and_then(|s| CyclicCode::new(self.system.clone(), self.k, s)))
    }
}

/// Every self-dual cyclic code: self-dual ideals at self-reciprocal factors,
/// and an arbitrary ideal with its dual at the partner for each pair.
pub fn enumerate_self_dual(system: &Arc<FactorSystem>, k: usize, budget: u128) -> Result<SelfDualCodes> {
    let total = count_self_dual(system, k)?;
    check_budget(u128::try_from(&total).unwrap_or(u128::MAX), budget)?;
    let mut free = Vec::new();
    for j in 0..system.r() {
        let sj = system.sigma(j);
        if sj == j {
            free.push((j, self_dual_ideal_specs(system, j, k)?));
        } else if j < sj {
            free.push((j, enumerate_ideal_specs(system.factor(j).d, k)?.collect()));
        }
    }
    let done = free.iter().any(|(_, l)| l.is_empty());
    let idx = vec![0; free.len()];
    Ok(SelfDualCodes { system: system.clone(), k, free, idx, done })
}

/// Number of self-dual cyclic codes.
pub fn count_self_dual(system: &FactorSystem, k: usize) -> Result<BigUint> {
    let mut total = BigUint::from(1u8);
    for j in 0..system.r() {
        let sj = system.sigma(j);
        if sj == j {
            total *= BigUint::from(self_dual_ideal_specs(system, j, k)?.len());
        } else if j < sj {
            total *= count_formulas(system.factor(j).d, k)?.total;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idealenum::{ideal_span, packed_index};

    fn f2(c: &[u8]) -> F2Poly {
        F2Poly::new(c.to_vec())
    }

    #[test]
    fn inner_product_examples() {
        let a = CodeElement::from_entries(1, 2, &[3, 0]).unwrap();
        let b = CodeElement::from_entries(1, 2, &[1, 0]).unwrap();
        assert_eq!(euclidean_inner_product(&a, &b).unwrap(), vec![3, 0]);
        assert_eq!(euclidean_inner_product(&a, &CodeElement::zero(1, 2)).unwrap(), vec![0, 0]);
        let a = CodeElement::from_entries(2, 3, &[1, 1, 0, 2, 0, 1]).unwrap();
        let b = CodeElement::from_entries(2, 3, &[0, 1, 1, 1, 3, 0]).unwrap();
        // (1+u)(u+u^2) + (2+u^2)(1+3u) = u+2u^2 + 2+2u+u^2 = 2+3u+3u^2
        assert_eq!(euclidean_inner_product(&a, &b).unwrap(), vec![2, 3, 3]);
        assert!(euclidean_inner_product(&a, &CodeElement::zero(2, 2)).is_err());
    }

    #[test]
    fn substitute_inverse_example() {
        let target = f2(&[1, 0, 1, 1]);
        for bits in 0u8..8 {
            let (b0, b1, b2) = (bits & 1, bits >> 1 & 1, bits >> 2 & 1);
            let got = substitute_inverse(&[f2(&[b0, b1, b2])], 7, &target).unwrap();
            assert_eq!(got, vec![f2(&[b0 ^ b2, b1 ^ b2, b1])]);
        }
        assert_eq!(substitute_inverse(&[F2Poly::one()], 7, &target).unwrap(), vec![F2Poly::one()]);
        assert_eq!(substitute_inverse(&[F2Poly::one(), F2Poly::one()], 1, &f2(&[1, 1])).unwrap().len(), 2);
    }

    #[test]
    fn dual_is_an_involution_on_specs() {
        for n in [1, 3, 7, 9] {
            let system = FactorSystem::new(n).unwrap();
            for k in 2..=5 {
                for j in 0..system.r() {
                    for spec in enumerate_ideal_specs(system.factor(j).d, k).unwrap() {
                        let (to, dual) = dual_ideal_spec(&system, j, &spec).unwrap();
                        assert_eq!(to, system.sigma(j));
                        let (back, again) = dual_ideal_spec(&system, to, &dual).unwrap();
                        assert_eq!((back, &again), (j, &spec), "n={n} k={k} {spec}");
                    }
                }
            }
        }
    }

    #[test]
    fn printed_dual_rows() {
        let s = FactorSystem::new(1).unwrap();
        let d = |spec: IdealSpec| dual_ideal_spec(&s, 0, &spec).unwrap().1.to_string();
        assert_eq!(d(IdealSpec::u_power(1, 4, 1).unwrap()), "u^3");
        assert_eq!(d(IdealSpec::two_u_power(1, 4, 1).unwrap()), "(u^3,2)");
        assert_eq!(d(IdealSpec::unit_ideal(1, 4)), "u^4");
        assert_eq!(d(IdealSpec::two_u_power(1, 2, 0).unwrap()), "2");
        assert_eq!(d(IdealSpec::principal(1, 4, 1, 0, &[F2Poly::one()]).unwrap()), "u^3+2u^2");
        assert_eq!(d(IdealSpec::principal(1, 4, 3, 1, &[F2Poly::one()]).unwrap()), "(u^2+2,2u)");
        assert_eq!(d(IdealSpec::pair(1, 4, 3, 0).unwrap()), "2u");
    }

    fn members(code: &CyclicCode) -> Vec<CodeElement> {
        code.codewords(1 << 16).unwrap()
    }

    #[test]
    fn duals_annihilate_small_codes() {
        for (n, k) in [(1, 2), (1, 3), (3, 2)] {
            let system = FactorSystem::new(n).unwrap();
            for code in system.all_codes(k, 1 << 16).unwrap() {
                let dual = dual_code(&code).unwrap();
                assert_eq!(code.log2_cardinality() + dual.log2_cardinality(), 2 * (n * k) as u64);
                for a in members(&code) {
                    for b in members(&dual) {
                        assert!(euclidean_inner_product(&a, &b).unwrap().iter().all(|&c| c == 0));
                    }
                }
            }
        }
    }

    #[test]
    fn census_matches_filter() {
        for n in [1, 3, 7] {
            let system = FactorSystem::new(n).unwrap();
            for k in 2..=6 {
                for j in (0..system.r()).filter(|&j| system.sigma(j) == j) {
                    let d = system.factor(j).d;
                    if d > 1 && k > 4 {
                        continue;
                    }
                    let census = self_dual_ideal_specs(&system, j, k).unwrap();
                    let filtered: Vec<IdealSpec> = enumerate_ideal_specs(d, k)
                        .unwrap()
                        .filter(|s| dual_ideal_spec(&system, j, s).unwrap().1 == *s)
                        .collect();
                    let mut a = census.clone();
                    a.sort_by_key(|s| s.to_string());
                    let mut b = filtered;
                    b.sort_by_key(|s| s.to_string());
                    assert_eq!(a, b, "n={n} k={k} j={j}");
                }
            }
        }
    }

    #[test]
    fn factor_one_choices_at_length_seven() {
        let system = FactorSystem::new(7).unwrap();
        let names: Vec<String> = self_dual_ideal_specs(&system, 0, 4).unwrap().iter().map(|s| s.to_string()).collect();
        assert_eq!(names, vec!["u^2", "2", "u^2+2", "u^2+2*(1+u)", "u^2+2u", "u^3+2", "(u^3,2u)"]);
        assert!(self_dual_ideal_specs(&system, 1, 4).is_err());
    }

    #[test]
    fn self_dual_counts() {
        let system = FactorSystem::new(7).unwrap();
        assert_eq!(count_self_dual(&system, 4).unwrap(), BigUint::from(791u32));
        let codes: Vec<CyclicCode> = enumerate_self_dual(&system, 4, 1 << 20).unwrap().map(Result::unwrap).collect();
        assert_eq!(codes.len(), 791);
        assert!(codes.iter().all(|c| is_self_dual(c).unwrap()));
        let filtered = system.all_codes(2, 1 << 20).unwrap().filter(|c| is_self_dual(c).unwrap()).count();
        let census = enumerate_self_dual(&system, 2, 1 << 20).unwrap().count();
        assert_eq!(filtered, census);
        let one = FactorSystem::new(1).unwrap();
        let names: Vec<String> =
            enumerate_self_dual(&one, 2, 100).unwrap().map(|c| c.unwrap().specs()[0].to_string()).collect();
        assert_eq!(names, vec!["u", "2", "u+2"]);
    }

    #[test]
    fn self_dual_ideals_have_half_size() {
        let system = FactorSystem::new(1).unwrap();
        for k in 2..=4 {
            for spec in self_dual_ideal_specs(&system, 0, k).unwrap() {
                let ring = &system.factor(0).ring;
                let m: Vec<u64> = ideal_span(&spec, ring).unwrap().elements(1 << 10).unwrap().iter().map(|v| packed_index(v)).collect();
                assert_eq!(m.len() * m.len(), 1 << (2 * k), "{spec}");
            }
        }
    }
}

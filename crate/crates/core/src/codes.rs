//! Cyclic codes over `R = Z4[u]/<u^k>` of odd length `n`, assembled from one
//! ideal of `K_j[u]/<u^k>` per factor `f_j` of `x^n - 1`.

use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_budget, Error, Result};
use crate::idealenum::{count_formulas, enumerate_ideal_specs, random_ideal_spec, IdealSpec};
use crate::polyarith::{idempotent_data, lift_factors, F2Poly, Z4Poly};
use crate::rings::{GaloisRing, MixedEl};
use crate::z4span::Z4Span;

/// One Z4 factor `f_j` of `x^n - 1` with its CRT data.
#[derive(Clone, Debug)]
pub struct Factor {
    pub f: Z4Poly,
    pub fbar: F2Poly,
    pub d: usize,
    /// Idempotent `e_j = v_j F_j mod (x^n - 1)`.
    pub e: Z4Poly,
    /// `F_j = (x^n - 1) / f_j`.
    pub cofactor: Z4Poly,
    pub v: Z4Poly,
    pub w: Z4Poly,
    pub ring: Arc<GaloisRing>,
}

/// The factorization of `x^n - 1` over Z4 with the reciprocal pairing.
#[derive(Debug)]
pub struct FactorSystem {
    n: usize,
    factors: Vec<Factor>,
    sigma: Vec<usize>,
    delta: Vec<u8>,
    block_order: Vec<usize>,
    lambda: usize,
    epsilon: usize,
}

impl FactorSystem {
    /// Factors in canonical order (sorted by the F2 reductions).
    pub fn new(n: usize) -> Result<Arc<Self>> {
        let lifted = lift_factors(n)?;
        let mut factors = Vec::with_capacity(lifted.len());
        for f in lifted {
            let (e, cofactor, v, w) = idempotent_data(&f, n)?;
            let ring = GaloisRing::new(f.clone())?;
            let fbar = f.reduce_mod2();
            let d = fbar.degree().unwrap_or(0);
            factors.push(Factor { f, fbar, d, e, cofactor, v, w, ring });
        }
        let mut sigma = Vec::with_capacity(factors.len());
        let mut delta = Vec::with_capacity(factors.len());
        for fac in &factors {
            let rec = fac.f.reciprocal()?;
            let unit = rec.leading().unwrap_or(0);
            let monic = rec.scale(unit);
            let partner = factors
                .iter()
                .position(|g| g.f == monic)
                .ok_or_else(|| Error::Internal(format!("reciprocal of {} is not a factor", fac.f)))?;
            sigma.push(partner);
            delta.push(unit);
        }
        let fixed: Vec<usize> = (0..factors.len()).filter(|&j| sigma[j] == j).collect();
        let small: Vec<usize> = (0..factors.len()).filter(|&j| sigma[j] > j).collect();
        let mut block_order = fixed.clone();
        block_order.extend(&small);
        block_order.extend(small.iter().map(|&j| sigma[j]));
        Ok(Arc::new(Self { n, factors, sigma, delta, block_order, lambda: fixed.len(), epsilon: small.len() }))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn factor(&self, j: usize) -> &Factor {
        &self.factors[j]
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.d).collect()
    }

    /// Index of the factor proportional to the reciprocal of `f_j`.
    pub fn sigma(&self, j: usize) -> usize {
        self.sigma[j]
    }

    pub fn sigma_all(&self) -> &[usize] {
        &self.sigma
    }

    /// `delta_j` in `{1, 3}` with `reciprocal(f_j) = delta_j f_sigma(j)`.
    pub fn delta(&self, j: usize) -> u8 {
        self.delta[j]
    }

    pub fn delta_all(&self) -> &[u8] {
        &self.delta
    }

    /// Number of self-reciprocal factors.
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    /// Number of reciprocal pairs.
    pub fn epsilon(&self) -> usize {
        self.epsilon
    }

    /// Factor indices arranged as fixed points, then the smaller member of
    /// each pair, then the partners in the same order.
    pub fn block_order(&self) -> &[usize] {
        &self.block_order
    }

    /// Number of cyclic codes of length `n` over `Z4[u]/<u^k>`.
    pub fn count_codes(&self, k: usize) -> Result<BigUint> {
        self.factors.iter().try_fold(BigUint::from(1u8), |acc, f| Ok(acc * count_formulas(f.d, k)?.total))
    }

    /// Every cyclic code, in lexicographic order of the per-factor spec lists.
    pub fn all_codes(self: &Arc<Self>, k: usize, budget: u128) -> Result<CodeProduct> {
        let total = self.count_codes(k)?;
        check_budget(u128::try_from(&total).unwrap_or(u128::MAX), budget)?;
        let lists = self
            .factors
            .iter()
            .map(|f| Ok(enumerate_ideal_specs(f.d, k)?.collect()))
            .collect::<Result<Vec<Vec<IdealSpec>>>>()?;
        Ok(CodeProduct::new(self.clone(), k, lists))
    }

    /// A uniformly random cyclic code.
    pub fn random_code<R: Rng + ?Sized>(self: &Arc<Self>, k: usize, rng: &mut R) -> Result<CyclicCode> {
        let specs = self.factors.iter().map(|f| random_ideal_spec(f.d, k, rng)).collect::<Result<Vec<_>>>()?;
        CyclicCode::new(self.clone(), k, specs)
    }
}

/// Number of cyclic codes of length `n` over `Z4[u]/<u^k>`.
pub fn count_cyclic_codes(n: usize, k: usize) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::InvalidChainLength(k));
    }
    FactorSystem::new(n)?.count_codes(k)
}

/// Element of `R[x]/<x^n - 1>` stored as an `n x k` Z4 matrix; entry `(i, l)`
/// is the coefficient of `x^i u^l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CodeElement {
    n: usize,
    k: usize,
    coeffs: Vec<u8>,
}

impl CodeElement {
    pub fn zero(n: usize, k: usize) -> Self {
        Self { n, k, coeffs: vec![0; n * k] }
    }

    /// From row-major entries (`i * k + l`).
    pub fn from_entries(n: usize, k: usize, entries: &[u8]) -> Result<Self> {
        if entries.len() != n * k {
            return Err(Error::DimensionMismatch(format!("expected {} entries, got {}", n * k, entries.len())));
        }
        Ok(Self { n, k, coeffs: entries.iter().map(|&c| c & 3).collect() })
    }

    /// From the `k` columns `xi_l` in `Z4[x]/<x^n - 1>`.
    pub fn from_columns(n: usize, columns: &[Z4Poly]) -> Self {
        let k = columns.len();
        let mut out = Self::zero(n, k);
        for (l, col) in columns.iter().enumerate() {
            for (i, c) in col.reduce_cyclic(n).padded(n).into_iter().enumerate() {
                out.coeffs[i * k + l] = c;
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, l: usize) -> u8 {
        self.coeffs[i * self.k + l]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[u8] {
        &self.coeffs
    }

    /// The coefficient of `x^i` as an element of `R`.
    pub fn row(&self, i: usize) -> &[u8] {
        &self.coeffs[i * self.k..(i + 1) * self.k]
    }

    /// The coefficient of `u^l` as an element of `Z4[x]/<x^n - 1>`.
    pub fn column(&self, l: usize) -> Z4Poly {
        Z4Poly::new((0..self.n).map(|i| self.get(i, l)).collect())
    }

    /// Entries in column-major order (`l * n + i`), the export layout.
    pub fn column_major(&self) -> Vec<u8> {
        (0..self.k).flat_map(|l| (0..self.n).map(move |i| self.get(i, l))).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn same_shape(&self, o: &CodeElement) -> Result<()> {
        if (self.n, self.k) != (o.n, o.k) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.n, self.k, o.n, o.k
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, o: &CodeElement) -> Result<CodeElement> {
        self.same_shape(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| (a + b) & 3).collect();
        Ok(Self { n: self.n, k: self.k, coeffs })
    }

    pub fn scale(&self, c: u8) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| (a * c) & 3).collect();
        Self { n: self.n, k: self.k, coeffs }
    }

    /// Multiplication by `x`: a cyclic shift of the rows.
    pub fn mul_x(&self) -> Self {
        let mut out = Self::zero(self.n, self.k);
        for i in 0..self.n {
            let to = (i + 1) % self.n;
            out.coeffs[to * self.k..(to + 1) * self.k].copy_from_slice(self.row(i));
        }
        out
    }

    /// Multiplication by `u`: a shift of the columns, dropping `u^k`.
    pub fn mul_u(&self) -> Self {
        let mut out = Self::zero(self.n, self.k);
        for i in 0..self.n {
            for l in 1..self.k {
                out.coeffs[i * self.k + l] = self.get(i, l - 1);
            }
        }
        out
    }
}

/// A cyclic code given by one ideal spec per factor, in canonical factor order.
#[derive(Clone, Debug)]
pub struct CyclicCode {
    system: Arc<FactorSystem>,
    k: usize,
    specs: Vec<IdealSpec>,
    span: OnceLock<Z4Span>,
}

impl PartialEq for CyclicCode {
    fn eq(&self, o: &Self) -> bool {
        self.system.n == o.system.n && self.k == o.k && self.specs == o.specs
    }
}

impl Eq for CyclicCode {}

/// JSON descriptor of a code.
#[derive(Clone, Debug, Serialize)]
pub struct CodeDescriptor {
    pub n: usize,
    pub k: usize,
    pub specs: Vec<IdealSpec>,
    pub spec_text: Vec<String>,
    pub log2_size: u64,
}

impl CyclicCode {
    /// Checks that spec `j` has `d = d_j` and chain length `k`.
    pub fn new(system: Arc<FactorSystem>, k: usize, specs: Vec<IdealSpec>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidChainLength(k));
        }
        if specs.len() != system.r() {
            return Err(Error::DimensionMismatch(format!(
                "{} specs for {} factors",
                specs.len(),
                system.r()
            )));
        }
        for (j, (spec, fac)) in specs.iter().zip(system.factors()).enumerate() {
            spec.validate()?;
            if spec.d != fac.d || spec.k != k {
                return Err(Error::DimensionMismatch(format!(
                    "spec {j} has (d, k) = ({}, {}), factor needs ({}, {k})",
                    spec.d, spec.k, fac.d
                )));
            }
        }
        Ok(Self { system, k, specs, span: OnceLock::new() })
    }

    pub fn system(&self) -> &Arc<FactorSystem> {
        &self.system
    }

    pub fn n(&self) -> usize {
        self.system.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn specs(&self) -> &[IdealSpec] {
        &self.specs
    }

    pub fn log2_cardinality(&self) -> u64 {
        self.specs.iter().map(IdealSpec::log2_cardinality).sum()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(1u8) << self.log2_cardinality()
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            n: self.n(),
            k: self.k,
            specs: self.specs.clone(),
            spec_text: self.specs.iter().map(ToString::to_string).collect(),
            log2_size: self.log2_cardinality(),
        }
    }

    /// `e_j * beta` for `beta` in `K_j[u]/<u^k>`.
    pub fn embed_component(&self, j: usize, beta: &MixedEl) -> CodeElement {
        let n = self.n();
        let e = &self.system.factors[j].e;
        let columns: Vec<Z4Poly> = beta.coeffs().iter().map(|c| e.mul_cyclic(c, n)).collect();
        CodeElement::from_columns(n, &columns)
    }

    fn rows(&self, u_shifts: usize) -> Result<Vec<CodeElement>> {
        let mut out = Vec::new();
        for (j, spec) in self.specs.iter().enumerate() {
            let fac = &self.system.factors[j];
            for g in spec.generators(&fac.ring)? {
                for a in 0..fac.d {
                    for b in 0..u_shifts {
                        let row = self.embed_component(j, &g.shift(a, b));
                        if !row.is_zero() {
                            out.push(row);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Rows `e_j x^a g` generating the code as an `R`-module.
    pub fn r_generators(&self) -> Result<Vec<CodeElement>> {
        self.rows(1)
    }

    /// Rows `e_j x^a u^b g` spanning the code over Z4.
    pub fn spanning_rows(&self) -> Result<Vec<CodeElement>> {
        self.rows(self.k)
    }

    /// The code as a Z4-submodule of `Z4^(n k)` in row-major layout.
    pub fn span(&self) -> Result<&Z4Span> {
        if let Some(s) = self.span.get() {
            return Ok(s);
        }
        let rows = self.spanning_rows()?;
        let span = Z4Span::from_rows(self.n() * self.k, rows.iter().map(CodeElement::entries));
        if span.log2_size() as u64 != self.log2_cardinality() {
            return Err(Error::Internal("code span size disagrees with the ideal sizes".into()));
        }
        Ok(self.span.get_or_init(|| span))
    }

    /// Every codeword; fails when `|C|` exceeds `budget`.
    pub fn codewords(&self, budget: u128) -> Result<Vec<CodeElement>> {
        check_budget(1u128.checked_shl(self.log2_cardinality() as u32).unwrap_or(u128::MAX), budget)?;
        let (n, k) = (self.n(), self.k);
        Ok(self.span()?.elements(budget)?.into_iter().map(|v| CodeElement { n, k, coeffs: v }).collect())
    }

    pub fn contains(&self, w: &CodeElement) -> Result<bool> {
        if (w.n, w.k) != (self.n(), self.k) {
            return Err(Error::DimensionMismatch(format!(
                "word is {}x{}, code is {}x{}",
                w.n,
                w.k,
                self.n(),
                self.k
            )));
        }
        Ok(self.span()?.contains(&w.coeffs))
    }
}

/// Iterator over the Cartesian product of per-factor spec lists.
pub struct CodeProduct {
    system: Arc<FactorSystem>,
    k: usize,
    lists: Vec<Vec<IdealSpec>>,
    idx: Vec<usize>,
    done: bool,
}

impl CodeProduct {
    pub(crate) fn new(system: Arc<FactorSystem>, k: usize, lists: Vec<Vec<IdealSpec>>) -> Self {
        let done = lists.iter().any(Vec::is_empty);
        let idx = vec![0; lists.len()];
        Self { system, k, lists, idx, done }
    }
}

impl Iterator for CodeProduct {
    type Item = CyclicCode;

    fn next(&mut self) -> Option<CyclicCode> {
        if self.done {
            return None;
        }
        let specs = self.idx.iter().zip(&self.lists).map(|(&i, l)| l[i].clone()).collect();
        let mut pos = self.idx.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.idx[pos] += 1;
            if self.idx[pos] < self.lists[pos].len() {
                break;
            }
            self.idx[pos] = 0;
        }
        Some(CyclicCode { system: self.system.clone(), k: self.k, specs, span: OnceLock::new() })
    }
}

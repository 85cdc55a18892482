//! Ideals of `K[u]/<u^k>` for a Galois ring `K` of degree `d`: the six
//! parametrized families, their sizes and counts, explicit member sets, and
//! an exhaustive oracle for tiny rings.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{check_budget, Error, Result};
use crate::packed::add_word;
use crate::polyarith::F2Poly;
use crate::rings::{ChainEl, GaloisRing, MixedEl, UnitTuples};
use crate::z4span::Z4Span;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Case {
    I,
    II,
    III,
    IV,
    V,
    VI,
}

impl Case {
    pub const ALL: [Case; 6] = [Case::I, Case::II, Case::III, Case::IV, Case::V, Case::VI];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One ideal of `K[u]/<u^k>`:
///
/// | case | generators | parameters |
/// |------|------------|------------|
/// | I    | `u^i` | `0 <= i <= k` |
/// | II   | `2u^s` | `0 <= s < k` |
/// | III  | `u^i + 2u^t h` | `0 <= t < i < k`, `t >= 2i - k`, `h` a unit mod `u^(i-t)` |
/// | IV   | `u^i + 2u^t h` | `0 <= t < i < k`, `t < 2i - k`, `h` a unit mod `u^(k-i)` |
/// | V    | `u^i, 2u^s` | `0 <= s < i < k` |
/// | VI   | `u^i + 2u^t h, 2u^s` | `0 <= t < s < i < k`, `i + s <= k + t - 1`, `h` a unit mod `u^(s-t)` |
///
/// `h` always has `k` coefficients (bit polynomials modulo the residue
/// modulus); those at or beyond the quotient length are zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealSpec {
    pub case: Case,
    pub i: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub h: Option<Vec<F2Poly>>,
    pub d: usize,
    pub k: usize,
}

fn padded_h(h: &[F2Poly], k: usize) -> Vec<F2Poly> {
    let mut v = h.to_vec();
    v.resize(k, F2Poly::zero());
    v
}

impl IdealSpec {
    fn raw(case: Case, d: usize, k: usize) -> Self {
        Self { case, i: None, s: None, t: None, h: None, d, k }
    }

    /// `<u^i>`.
    pub fn u_power(d: usize, k: usize, i: usize) -> Result<Self> {
        Self { i: Some(i), ..Self::raw(Case::I, d, k) }.validated()
    }

    pub fn unit_ideal(d: usize, k: usize) -> Self {
        Self { i: Some(0), ..Self::raw(Case::I, d, k) }
    }

    pub fn zero_ideal(d: usize, k: usize) -> Self {
        Self { i: Some(k), ..Self::raw(Case::I, d, k) }
    }

    /// `<2u^s>`.
    pub fn two_u_power(d: usize, k: usize, s: usize) -> Result<Self> {
        Self { s: Some(s), ..Self::raw(Case::II, d, k) }.validated()
    }

    /// `<u^i + 2u^t h>`, classified as III or IV; `h` is truncated to the
    /// quotient length.
    pub fn principal(d: usize, k: usize, i: usize, t: usize, h: &[F2Poly]) -> Result<Self> {
        let case = if 2 * i <= k + t { Case::III } else { Case::IV };
        let m = if case == Case::III { i.saturating_sub(t) } else { k.saturating_sub(i) };
        let mut h = padded_h(h, k);
        h.iter_mut().skip(m).for_each(|b| *b = F2Poly::zero());
        Self { i: Some(i), t: Some(t), h: Some(h), ..Self::raw(case, d, k) }.validated()
    }

    /// `<u^i, 2u^s>`.
    pub fn pair(d: usize, k: usize, i: usize, s: usize) -> Result<Self> {
        Self { i: Some(i), s: Some(s), ..Self::raw(Case::V, d, k) }.validated()
    }

    /// `<u^i + 2u^t h, 2u^s>`; `h` is truncated to length `s - t`.
    pub fn pair_twisted(d: usize, k: usize, i: usize, s: usize, t: usize, h: &[F2Poly]) -> Result<Self> {
        let mut h = padded_h(h, k);
        h.iter_mut().skip(s.saturating_sub(t)).for_each(|b| *b = F2Poly::zero());
        Self { i: Some(i), s: Some(s), t: Some(t), h: Some(h), ..Self::raw(Case::VI, d, k) }.validated()
    }

    fn validated(self) -> Result<Self> {
        self.validate()?;
        Ok(self)
    }

    /// Length `m` of the quotient `F[u]/<u^m>` that `h` lives in.
    pub fn quotient_len(&self) -> Option<usize> {
        let (i, s, t) = (self.i.unwrap_or(0), self.s.unwrap_or(0), self.t.unwrap_or(0));
        match self.case {
            Case::III => Some(i - t),
            Case::IV => Some(self.k - i),
            Case::VI => Some(s - t),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidSpec(format!("{}: {why}", self.case)));
        let (d, k) = (self.d, self.k);
        if d == 0 {
            return Err(Error::InvalidDegree(0));
        }
        if k < 2 {
            return Err(Error::InvalidChainLength(k));
        }
        let need = |used: [bool; 4]| {
            self.i.is_some() == used[0]
                && self.s.is_some() == used[1]
                && self.t.is_some() == used[2]
                && self.h.is_some() == used[3]
        };
        let ok_fields = match self.case {
            Case::I => need([true, false, false, false]),
            Case::II => need([false, true, false, false]),
            Case::III | Case::IV => need([true, false, true, true]),
            Case::V => need([true, true, false, false]),
            Case::VI => need([true, true, true, true]),
        };
        if !ok_fields {
            return bad("wrong set of parameters for this case");
        }
        let (i, s, t) = (self.i.unwrap_or(0), self.s.unwrap_or(0), self.t.unwrap_or(0));
        let ranges = match self.case {
            Case::I => i <= k,
            Case::II => s < k,
            Case::III => t < i && i < k && 2 * i <= k + t,
            Case::IV => t < i && i < k && 2 * i > k + t,
            Case::V => s < i && i < k,
            Case::VI => t < s && s < i && i < k && i + s < k + t,
        };
        if !ranges {
            return bad("parameters out of range");
        }
        if let Some(h) = &self.h {
            let m = self.quotient_len().unwrap_or(0);
            if h.len() != k {
                return bad("h must have k coefficients");
            }
            if h[0].is_zero() {
                return bad("h is not a unit");
            }
            if h.iter().any(|b| b.degree().is_some_and(|e| e >= d)) {
                return bad("h coefficient degree must be below d");
            }
            if h.iter().skip(m).any(|b| !b.is_zero()) {
                return bad("h has coefficients beyond its quotient");
            }
        }
        Ok(())
    }

    /// `log2 |C|`.
    pub fn log2_cardinality(&self) -> u64 {
        let (d, k) = (self.d as u64, self.k as u64);
        let (i, s, t) = (self.i.unwrap_or(0) as u64, self.s.unwrap_or(0) as u64, self.t.unwrap_or(0) as u64);
        match self.case {
            Case::I | Case::III => 2 * d * (k - i),
            Case::II => d * (k - s),
            Case::IV => d * (k - t),
            Case::V | Case::VI => d * (2 * k - (i + s)),
        }
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(1u8) << self.log2_cardinality()
    }

    /// The `h` polynomial as an element of `F[u]/<u^k>`.
    pub fn h_element(&self, ring: &Arc<GaloisRing>) -> Option<ChainEl> {
        self.h.as_ref().map(|h| ChainEl::new(ring, h, self.k))
    }

    /// Generators in `K[u]/<u^k>`.
    pub fn generators(&self, ring: &Arc<GaloisRing>) -> Result<Vec<MixedEl>> {
        if ring.degree() != self.d {
            return Err(Error::DimensionMismatch(format!(
                "spec has d = {} but the ring has degree {}",
                self.d,
                ring.degree()
            )));
        }
        let k = self.k;
        let u_pow = |l| MixedEl::monomial(ring, k, 1, l);
        let two_u_pow = |l| MixedEl::monomial(ring, k, 2, l);
        let twisted = |i: usize, t: usize| {
            let h = self.h_element(ring).expect("validated");
            &u_pow(i) + &MixedEl::two_times(&h, k).shift(0, t)
        };
        let (i, s, t) = (self.i.unwrap_or(0), self.s.unwrap_or(0), self.t.unwrap_or(0));
        Ok(match self.case {
            Case::I => vec![u_pow(i)],
            Case::II => vec![two_u_pow(s)],
            Case::III | Case::IV => vec![twisted(i, t)],
            Case::V => vec![u_pow(i), two_u_pow(s)],
            Case::VI => vec![twisted(i, t), two_u_pow(s)],
        })
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.case == Case::I && self.i == Some(self.k)
    }
}

fn u_text(l: usize) -> String {
    match l {
        0 => String::new(),
        1 => "u".into(),
        _ => format!("u^{l}"),
    }
}

fn compact_f2(p: &F2Poly) -> String {
    p.to_string().replace(' ', "")
}

/// Text of a `u`-polynomial with F2 polynomial coefficients, e.g. `1+u*(x+1)`.
pub(crate) fn h_text(h: &[F2Poly]) -> String {
    let terms: Vec<String> = h
        .iter()
        .enumerate()
        .filter(|(_, b)| !b.is_zero())
        .map(|(l, b)| {
            let c = compact_f2(b);
            match (l, c.as_str()) {
                (0, _) => c,
                (_, "1") => u_text(l),
                _ if c.contains('+') => format!("{}*({c})", u_text(l)),
                _ => format!("{}*{c}", u_text(l)),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn two_u_text(t: usize, h: Option<&[F2Poly]>) -> String {
    let ht = h.map(h_text).unwrap_or_else(|| "1".into());
    let head = format!("2{}", u_text(t));
    match ht.as_str() {
        "1" => head,
        _ if ht.contains('+') || ht.contains('*') => format!("{head}*({ht})"),
        _ => format!("{head}*{ht}"),
    }
}

fn u_power_text(i: usize) -> String {
    if i == 0 {
        "1".into()
    } else {
        u_text(i)
    }
}

/// Writes the spec in the `u^i+2u^t*(h)` mini-language.
impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, s, t) = (self.i.unwrap_or(0), self.s.unwrap_or(0), self.t.unwrap_or(0));
        let h = self.h.as_deref();
        match self.case {
            Case::I => f.write_str(&u_power_text(i)),
            Case::II => f.write_str(&two_u_text(s, None)),
            Case::III | Case::IV => write!(f, "{}+{}", u_power_text(i), two_u_text(t, h)),
            Case::V => write!(f, "({},{})", u_power_text(i), two_u_text(s, None)),
            Case::VI => write!(f, "({}+{},{})", u_power_text(i), two_u_text(t, h), two_u_text(s, None)),
        }
    }
}

/// Parameter tuples `(case, i, s, t)` in enumeration order, each with the
/// quotient length of its `h` (zero when the case has no `h`).
fn ideal_families(d: usize, k: usize) -> Result<Vec<(IdealSpec, usize)>> {
    if d == 0 {
        return Err(Error::InvalidDegree(d));
    }
    if k < 2 {
        return Err(Error::InvalidChainLength(k));
    }
    let base = |case| IdealSpec::raw(case, d, k);
    let mut out = Vec::new();
    out.extend((0..=k).map(|i| (IdealSpec { i: Some(i), ..base(Case::I) }, 0)));
    out.extend((0..k).map(|s| (IdealSpec { s: Some(s), ..base(Case::II) }, 0)));
    for i in 1..k {
        for t in (2 * i).saturating_sub(k)..i {
            out.push((IdealSpec { i: Some(i), t: Some(t), ..base(Case::III) }, i - t));
        }
    }
    for i in 1..k {
        for t in 0..(2 * i).saturating_sub(k).min(i) {
            out.push((IdealSpec { i: Some(i), t: Some(t), ..base(Case::IV) }, k - i));
        }
    }
    for i in 1..k {
        out.extend((0..i).map(|s| (IdealSpec { i: Some(i), s: Some(s), ..base(Case::V) }, 0)));
    }
    for i in 1..k {
        for s in 1..i {
            for t in (0..s).filter(|&t| i + s < k + t) {
                out.push((IdealSpec { i: Some(i), s: Some(s), t: Some(t), ..base(Case::VI) }, s - t));
            }
        }
    }
    Ok(out)
}

/// Every ideal of `K[u]/<u^k>`, ordered by case, then by `(i, s, t, h)`.
pub fn enumerate_ideal_specs(d: usize, k: usize) -> Result<Box<dyn Iterator<Item = IdealSpec> + Send>> {
    let families = ideal_families(d, k)?;
    Ok(Box::new(families.into_iter().flat_map(move |(spec, m)| {
        let plain = (m == 0).then(|| spec.clone());
        let with_h = (m > 0).then(|| {
            UnitTuples::new(d, m).map(move |h| IdealSpec { h: Some(padded_h(&h, k)), ..spec.clone() })
        });
        plain.into_iter().chain(with_h.into_iter().flatten())
    })))
}

/// A uniformly random ideal of `K[u]/<u^k>`; needs `d * k <= 120`.
pub fn random_ideal_spec<R: Rng + ?Sized>(d: usize, k: usize, rng: &mut R) -> Result<IdealSpec> {
    if d * k > 120 {
        return Err(Error::Unsupported(d * k));
    }
    let families = ideal_families(d, k)?;
    let weight = |m: usize| if m == 0 { 1u128 } else { ((1u128 << d) - 1) << (d * (m - 1)) };
    let total: u128 = families.iter().map(|(_, m)| weight(*m)).sum();
    let mut pick = rng.gen_range(0..total);
    for (mut spec, m) in families {
        if pick >= weight(m) {
            pick -= weight(m);
            continue;
        }
        if m > 0 {
            let mut h = vec![F2Poly::zero(); k];
            h[0] = F2Poly::from_bits(rng.gen_range(1..1u128 << d));
            for b in h.iter_mut().take(m).skip(1) {
                *b = F2Poly::from_bits(rng.gen_range(0..1u128 << d));
            }
            spec.h = Some(h);
        }
        return Ok(spec);
    }
    Err(Error::Internal("random ideal selection fell through".into()))
}

/// Per-case ideal counts and their total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealCount {
    pub per_case: [BigUint; 6],
    pub total: BigUint,
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn q_pow(d: usize, e: usize) -> BigUint {
    big(1) << (d * e)
}

/// Number of case III ideals.
pub fn omega1(d: usize, k: usize) -> BigUint {
    let q1 = q_pow(d, 1) - 1u32;
    let num = if k.is_multiple_of(2) {
        q_pow(d, k / 2 + 1) + q_pow(d, k / 2) - 2u32
    } else {
        (q_pow(d, k.div_ceil(2)) - 1u32) * 2u32
    };
    num / q1 - big(k as u64 + 1)
}

/// Number of case IV ideals.
pub fn omega2(d: usize, k: usize) -> BigUint {
    let q1 = q_pow(d, 1) - 1u32;
    let sum: BigUint = (k / 2 + 1..k).map(|i| big((2 * i - k) as u64) * q_pow(d, k - i - 1)).sum();
    q1 * sum
}

/// The Gamma recurrence; case VI has `(2^d - 1) * gamma(d, k)` ideals.
pub fn gamma(d: usize, k: usize) -> BigUint {
    if k <= 3 {
        return big(0);
    }
    let mut g = big(1);
    for rho in 5..=k {
        let step: BigUint = (1..rho / 2).map(|s| big((rho - 2 * s - 1) as u64) * q_pow(d, s - 1)).sum();
        g += step;
    }
    g
}

/// `N(2, d, k)` from the closed forms for `k = 2 rho` and `k = 2 rho + 1`.
pub fn closed_form_count(d: usize, k: usize) -> BigUint {
    let rho = k / 2;
    let base = if k.is_multiple_of(2) { 1u64 } else { 3 };
    (0..=rho).map(|i| big(base + 4 * i as u64) * q_pow(d, rho - i)).sum()
}

/// Case counts from the `Omega_1`, `Omega_2` and `Gamma` formulas.
pub fn count_formulas(d: usize, k: usize) -> Result<IdealCount> {
    if d == 0 {
        return Err(Error::InvalidDegree(d));
    }
    if k < 2 {
        return Err(Error::InvalidChainLength(k));
    }
    let per_case = [
        big(k as u64 + 1),
        big(k as u64),
        omega1(d, k),
        omega2(d, k),
        big((k * (k - 1) / 2) as u64),
        (q_pow(d, 1) - 1u32) * gamma(d, k),
    ];
    let total = per_case.iter().sum();
    Ok(IdealCount { per_case, total })
}

/// The ideal as a Z4-submodule of `Z4^(k d)` in [`MixedEl::to_digits`] layout.
pub fn ideal_span(spec: &IdealSpec, ring: &Arc<GaloisRing>) -> Result<Z4Span> {
    spec.validate()?;
    let (d, k) = (spec.d, spec.k);
    let mut span = Z4Span::new(d * k);
    for g in spec.generators(ring)? {
        for a in 0..d {
            for b in 0..k {
                span.insert(&g.shift(a, b).to_digits());
            }
        }
    }
    Ok(span)
}

/// Every element of the ideal.
pub fn ideal_members(spec: &IdealSpec, ring: &Arc<GaloisRing>, budget: u128) -> Result<Vec<MixedEl>> {
    let span = ideal_span(spec, ring)?;
    let k = spec.k;
    Ok(span.elements(budget)?.iter().map(|v| MixedEl::from_digits(ring, k, v)).collect())
}

/// Index of an element with at most 32 Z4 digits: digit `p` sits in bits `2p, 2p+1`.
pub fn packed_index(digits: &[u8]) -> u64 {
    digits.iter().enumerate().fold(0u64, |acc, (p, &c)| acc | ((c as u64 & 3) << (2 * p)))
}

/// Dense set of ring elements indexed by [`packed_index`].
#[derive(Clone, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(size: usize) -> Self {
        Bits(vec![0; size.div_ceil(64)])
    }
    fn set(&mut self, i: u64) -> bool {
        let (w, b) = ((i / 64) as usize, i % 64);
        let fresh = self.0[w] >> b & 1 == 0;
        self.0[w] |= 1 << b;
        fresh
    }
    fn get(&self, i: u64) -> bool {
        self.0[(i / 64) as usize] >> (i % 64) & 1 == 1
    }
    fn members(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for (w, &word) in self.0.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as u64;
                out.push(w as u64 * 64 + b);
                bits &= bits - 1;
            }
        }
        out
    }
}

/// Largest ring the brute-force ideal search accepts.
pub const BRUTE_FORCE_LIMIT: u128 = 4096;

/// Every ideal of `K[u]/<u^k>` found by brute force: the principal ideals
/// `{r a}` of all elements `a`, closed under pairwise sums. Each ideal is
/// returned as the sorted list of [`packed_index`] values of its members.
pub fn brute_force_all_ideals(ring: &Arc<GaloisRing>, k: usize, budget: u128) -> Result<Vec<Vec<u64>>> {
    let len = ring.degree() * k;
    let needed = if len < 64 { 1u128 << (2 * len) } else { u128::MAX };
    check_budget(needed, budget.min(BRUTE_FORCE_LIMIT))?;
    let size = needed as usize;
    let basis: Vec<MixedEl> = (0..len)
        .map(|p| {
            let mut digits = vec![0u8; len];
            digits[p] = 1;
            MixedEl::from_digits(ring, k, &digits)
        })
        .collect();

    let mut ideals: Vec<Bits> = Vec::new();
    let mut seen: HashSet<Bits> = HashSet::new();
    for idx in 0..size {
        let digits: Vec<u8> = (0..len).map(|p| ((idx >> (2 * p)) & 3) as u8).collect();
        let a = MixedEl::from_digits(ring, k, &digits);
        let images: Vec<u64> = basis.iter().map(|e| packed_index(&(e * &a).to_digits())).collect();
        let mut ideal = Bits::new(size);
        let mut counter = vec![0u8; len];
        let mut current = 0u64;
        'walk: loop {
            ideal.set(current);
            let mut pos = 0;
            loop {
                if pos == len {
                    break 'walk;
                }
                current = add_word(current, images[pos]);
                counter[pos] += 1;
                if counter[pos] < 4 {
                    break;
                }
                counter[pos] = 0;
                pos += 1;
            }
        }
        if seen.insert(ideal.clone()) {
            ideals.push(ideal);
        }
    }

    let mut frontier = 0;
    while frontier < ideals.len() {
        let upto = ideals.len();
        let mut fresh = Vec::new();
        for a in 0..upto {
            for b in frontier.max(a + 1)..upto {
                let sum = ideal_sum(&ideals[a], &ideals[b]);
                if seen.insert(sum.clone()) {
                    fresh.push(sum);
                }
            }
        }
        frontier = upto;
        ideals.extend(fresh);
    }
    let mut out: Vec<Vec<u64>> = ideals.iter().map(Bits::members).collect();
    out.sort();
    Ok(out)
}

fn ideal_sum(a: &Bits, b: &Bits) -> Bits {
    let mut acc = a.clone();
    let mut members = acc.members();
    for y in b.members() {
        if acc.get(y) {
            continue;
        }
        let mut added = Vec::new();
        for &x in &members {
            let mut z = x;
            for _ in 0..3 {
                z = add_word(z, y);
                if acc.set(z) {
                    added.push(z);
                }
            }
        }
        members.extend(added);
    }
    acc
}

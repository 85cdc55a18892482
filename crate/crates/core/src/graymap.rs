//! The map `Upsilon` from `A[u]/<u^4>` to `A^4`, `A = Z4[x]/<x^n - 1>`,
//! quasi-cyclic generator matrices of index 4, and minimum Lee distances.

use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{CodeElement, CyclicCode};
use crate::error::{check_budget, Error, Result};
use crate::packed;
use crate::z4span::{MixedRadix, Z4Span};

/// Lee weights 0, 1, 2, 1 of the Z4 symbols 0, 1, 2, 3.
pub fn lee_weight(v: &[u8]) -> u64 {
    v.iter().map(|&c| [0, 1, 2, 1][(c & 3) as usize]).sum()
}

/// `xi_0 + u xi_1 + u^2 xi_2 + u^3 xi_3 -> (xi_3, xi_2+xi_3, xi_1+xi_2+xi_3, xi_0+...+xi_3)`,
/// flattened into four blocks of length `n`.
pub fn upsilon(e: &CodeElement) -> Result<Vec<u8>> {
    if e.k() != 4 {
        return Err(Error::GrayNeedsK4(e.k()));
    }
    let n = e.n();
    let mut out = vec![0u8; 4 * n];
    for i in 0..n {
        let mut acc = 0u8;
        for b in 0..4 {
            acc = (acc + e.get(i, 3 - b)) & 3;
            out[b * n + i] = acc;
        }
    }
    Ok(out)
}

/// Simultaneous cyclic shift of the four `n`-blocks.
pub fn quasi_cyclic_shift(v: &[u8], n: usize) -> Vec<u8> {
    let mut out = vec![0u8; v.len()];
    for (b, block) in v.chunks(n).enumerate() {
        for (i, &c) in block.iter().enumerate() {
            out[b * n + (i + 1) % n] = c;
        }
    }
    out
}

type Matrix = Vec<Vec<u8>>;

fn add_rows(parts: &[&[u8]]) -> Vec<u8> {
    let mut out = vec![0u8; parts[0].len()];
    for p in parts {
        for (o, &c) in out.iter_mut().zip(p.iter()) {
            *o = (*o + c) & 3;
        }
    }
    out
}

/// `G_D` from the `u`-adic parts `G_0..G_3` of an `m x n` generator matrix
/// over `R`; returns `4m x 4n` rows.
pub fn qc_generator_matrix(g: [&[Vec<u8>]; 4]) -> Result<Matrix> {
    let m = g[0].len();
    let n = g[0].first().map_or(0, Vec::len);
    if g.iter().any(|b| b.len() != m || b.iter().any(|r| r.len() != n)) {
        return Err(Error::DimensionMismatch("G_0..G_3 must all be m x n".into()));
    }
    let [g0, g1, g2, g3] = g;
    let zero = vec![0u8; n];
    let layout: [[&[usize]; 4]; 4] = [
        [&[3], &[2, 3], &[1, 2, 3], &[0, 1, 2, 3]],
        [&[2], &[1, 2], &[0, 1, 2], &[0, 1, 2]],
        [&[1], &[0, 1], &[0, 1], &[0, 1]],
        [&[0], &[0], &[0], &[0]],
    ];
    let blocks = [g0, g1, g2, g3];
    let mut out = Vec::with_capacity(4 * m);
    for row_block in layout {
        #[allow(clippy::needless_range_loop)]
        for r in 0..m {
            let mut row = Vec::with_capacity(4 * n);
            for parts in row_block {
                let picked: Vec<&[u8]> = parts.iter().map(|&l| blocks[l][r].as_slice()).collect();
                row.extend(if picked.is_empty() { zero.clone() } else { add_rows(&picked) });
            }
            out.push(row);
        }
    }
    Ok(out)
}

/// `G_0..G_3` of the generator rows of `code` over `R`.
pub fn r_generator_blocks(code: &CyclicCode) -> Result<[Matrix; 4]> {
    if code.k() != 4 {
        return Err(Error::GrayNeedsK4(code.k()));
    }
    let rows = code.r_generators()?;
    let n = code.n();
    let block = |l: usize| -> Matrix { rows.iter().map(|r| (0..n).map(|i| r.get(i, l)).collect()).collect() };
    Ok([block(0), block(1), block(2), block(3)])
}

/// `[length, log2 M, d]` of a quasi-cyclic code; `d` is `None` for the zero code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QcParameters {
    pub length: usize,
    pub log2_size: u64,
    pub min_lee_distance: Option<u64>,
}

/// Quasi-cyclic code of index 4 over Z4 given by spanning rows of length `4n`.
#[derive(Clone, Debug)]
pub struct QcCode {
    n: usize,
    rows: Matrix,
    span: Z4Span,
}

impl QcCode {
    pub fn new(n: usize, rows: Matrix) -> Result<Self> {
        if rows.iter().any(|r| r.len() != 4 * n) {
            return Err(Error::DimensionMismatch(format!("rows must have length {}", 4 * n)));
        }
        let span = Z4Span::from_rows(4 * n, rows.iter().map(Vec::as_slice));
        Ok(Self { n, rows, span })
    }

    /// `Upsilon` of a cyclic code over `Z4[u]/<u^4>`, generated by `G_D`.
    pub fn from_code(code: &CyclicCode) -> Result<Self> {
        let [g0, g1, g2, g3] = r_generator_blocks(code)?;
        let rows = if g0.is_empty() { Vec::new() } else { qc_generator_matrix([&g0, &g1, &g2, &g3])? };
        Self::new(code.n(), rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn span(&self) -> &Z4Span {
        &self.span
    }

    pub fn log2_size(&self) -> u64 {
        self.span.log2_size() as u64
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.span.contains(v)
    }

    /// Exhaustive minimum Lee weight over the nonzero codewords.
    pub fn min_lee_distance(&self, budget: u128) -> Result<Option<u64>> {
        let log = self.log2_size();
        check_budget(1u128.checked_shl(log as u32).unwrap_or(u128::MAX), budget)?;
        let basis: Vec<(Vec<u8>, u8)> = self.span.basis().into_iter().map(|(r, m)| (r.to_vec(), m)).collect();
        Ok(min_nonzero_lee(4 * self.n, &basis))
    }

    pub fn parameters(&self, budget: u128) -> Result<QcParameters> {
        Ok(QcParameters {
            length: 4 * self.n,
            log2_size: self.log2_size(),
            min_lee_distance: self.min_lee_distance(budget)?,
        })
    }
}

/// Splits the basis into a prefix walked in parallel and a suffix walked
/// sequentially per prefix value.
fn min_nonzero_lee(len: usize, basis: &[(Vec<u8>, u8)]) -> Option<u64> {
    let mut split = 0;
    let mut chunks = 1usize;
    while split < basis.len() && chunks < 1024 {
        chunks *= basis[split].1 as usize;
        split += 1;
    }
    let prefixes: Vec<Vec<u64>> = MixedRadix::new(len, basis[..split].to_vec()).map(|v| packed::pack(&v)).collect();
    let rest: Vec<(Vec<u64>, u8)> = basis[split..].iter().map(|(r, m)| (packed::pack(r), *m)).collect();
    prefixes
        .par_iter()
        .filter_map(|start| walk_min(start.clone(), &rest))
        .min()
}

fn walk_min(mut current: Vec<u64>, rest: &[(Vec<u64>, u8)]) -> Option<u64> {
    let mut best: Option<u64> = None;
    let mut digits = vec![0u8; rest.len()];
    loop {
        let w = packed::lee(&current) as u64;
        if w > 0 && best.is_none_or(|b| w < b) {
            best = Some(w);
        }
        let mut pos = rest.len();
        loop {
            if pos == 0 {
                return best;
            }
            pos -= 1;
            let (row, radix) = &rest[pos];
            digits[pos] += 1;
            if digits[pos] < *radix {
                packed::add_assign(&mut current, row);
                break;
            }
            digits[pos] = 0;
            for _ in 0..(5 - *radix) & 3 {
                packed::add_assign(&mut current, row);
            }
        }
    }
}

/// Minimum Lee distance of `Upsilon` applied to a cyclic code over
/// `Z4[u]/<u^4>`; `None` for the zero code.
pub fn min_lee_distance(code: &CyclicCode, budget: u128) -> Result<Option<u64>> {
    QcCode::from_code(code)?.min_lee_distance(budget)
}

/// `[4n, log2 |C|, d]` for a cyclic code over `Z4[u]/<u^4>`.
pub fn gray_parameters(code: &CyclicCode, budget: u128) -> Result<QcParameters> {
    let qc = QcCode::from_code(code)?;
    if qc.log2_size() != code.log2_cardinality() {
        return Err(Error::Internal("Gray image size differs from the code size".into()));
    }
    qc.parameters(budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::FactorSystem;
    use crate::idealenum::IdealSpec;
    use crate::polyarith::F2Poly;
    use std::collections::HashSet;

    fn identity(n: usize) -> Matrix {
        (0..n).map(|r| (0..n).map(|c| (r == c) as u8).collect()).collect()
    }

    #[test]
    fn lee_examples() {
        assert_eq!(lee_weight(&[0, 0, 0]), 0);
        assert_eq!(lee_weight(&[1, 2, 3, 0]), 4);
        assert_eq!(lee_weight(&[2, 2]), 4);
    }

    #[test]
    fn upsilon_examples() {
        let u3 = CodeElement::from_entries(1, 4, &[0, 0, 0, 1]).unwrap();
        assert_eq!(upsilon(&u3).unwrap(), vec![1, 1, 1, 1]);
        let one = CodeElement::from_entries(1, 4, &[1, 0, 0, 0]).unwrap();
        assert_eq!(upsilon(&one).unwrap(), vec![0, 0, 0, 1]);
        assert_eq!(upsilon(&CodeElement::zero(3, 4)).unwrap(), vec![0; 12]);
        assert!(matches!(upsilon(&CodeElement::zero(3, 2)), Err(Error::GrayNeedsK4(2))));
    }

    #[test]
    fn upsilon_is_bijective_at_length_one() {
        let images: HashSet<Vec<u8>> = (0..256u32)
            .map(|x| {
                let e: Vec<u8> = (0..4).map(|p| (x >> (2 * p) & 3) as u8).collect();
                upsilon(&CodeElement::from_entries(1, 4, &e).unwrap()).unwrap()
            })
            .collect();
        assert_eq!(images.len(), 256);
    }

    #[test]
    fn block_layout() {
        let i2 = identity(2);
        let z = vec![vec![0u8; 2]; 2];
        let g = qc_generator_matrix([&i2, &z, &z, &z]).unwrap();
        let block = |rb: usize, cb: usize| -> Matrix { g[2 * rb..2 * rb + 2].iter().map(|r| r[2 * cb..2 * cb + 2].to_vec()).collect() };
        let pattern = [[0, 0, 0, 1], [0, 0, 1, 1], [0, 1, 1, 1], [1, 1, 1, 1]];
        for (rb, row) in pattern.iter().enumerate() {
            for (cb, &on) in row.iter().enumerate() {
                assert_eq!(block(rb, cb), if on == 1 { i2.clone() } else { z.clone() });
            }
        }
        let g = qc_generator_matrix([&z, &z, &z, &i2]).unwrap();
        assert_eq!(g[0], vec![1, 0, 1, 0, 1, 0, 1, 0]);
        assert!(g[2..].iter().all(|r| r.iter().all(|&c| c == 0)));
        assert!(qc_generator_matrix([&i2, &z, &z, &identity(3)]).is_err());
    }

    fn seven(specs: [IdealSpec; 3]) -> CyclicCode {
        CyclicCode::new(FactorSystem::new(7).unwrap(), 4, specs.to_vec()).unwrap()
    }

    #[test]
    fn table_row_one() {
        let c = seven([
            IdealSpec::zero_ideal(1, 4),
            IdealSpec::u_power(3, 4, 3).unwrap(),
            IdealSpec::zero_ideal(3, 4),
        ]);
        let p = gray_parameters(&c, 1 << 20).unwrap();
        assert_eq!(p, QcParameters { length: 28, log2_size: 6, min_lee_distance: Some(24) });
    }

    #[test]
    fn gray_image_matches_mapped_codewords() {
        let c = seven([
            IdealSpec::u_power(1, 4, 3).unwrap(),
            IdealSpec::zero_ideal(3, 4),
            IdealSpec::principal(3, 4, 3, 2, &[F2Poly::new(vec![0, 0, 1])]).unwrap(),
        ]);
        let qc = QcCode::from_code(&c).unwrap();
        assert_eq!(qc.log2_size(), 8);
        let mut best = u64::MAX;
        for w in c.codewords(1 << 10).unwrap() {
            let img = upsilon(&w).unwrap();
            assert!(qc.contains(&img));
            assert!(qc.contains(&quasi_cyclic_shift(&img, 7)));
            if !w.is_zero() {
                best = best.min(lee_weight(&img));
            }
        }
        assert_eq!(qc.min_lee_distance(1 << 10).unwrap(), Some(best));
        assert_eq!(best, 20);
    }

    #[test]
    fn zero_code_has_no_distance() {
        let c = seven([IdealSpec::zero_ideal(1, 4), IdealSpec::zero_ideal(3, 4), IdealSpec::zero_ideal(3, 4)]);
        assert_eq!(gray_parameters(&c, 16).unwrap().min_lee_distance, None);
    }

    #[test]
    fn whole_space_at_length_one() {
        let c = CyclicCode::new(FactorSystem::new(1).unwrap(), 4, vec![IdealSpec::unit_ideal(1, 4)]).unwrap();
        assert_eq!(min_lee_distance(&c, 256).unwrap(), Some(1));
        assert!(min_lee_distance(&c, 255).is_err());
    }

    #[test]
    fn needs_k4() {
        let c = CyclicCode::new(FactorSystem::new(1).unwrap(), 3, vec![IdealSpec::unit_ideal(1, 3)]).unwrap();
        assert!(matches!(QcCode::from_code(&c), Err(Error::GrayNeedsK4(3))));
    }
}

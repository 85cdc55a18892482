//! Submodules of `Z4^len` in echelon form.
//!
//! Rows have distinct pivot columns; a pivot is 1 or 2. For every row with
//! pivot 2, twice that row reduces to zero against the rows with larger
//! pivots, which makes greedy reduction a complete membership test and gives
//! every element a unique coefficient vector.

use crate::error::{check_budget, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Span {
    len: usize,
    /// `rows[c]` is the row whose pivot column is `c`, if any.
    rows: Vec<Option<Vec<u8>>>,
}

fn leading(v: &[u8]) -> Option<usize> {
    v.iter().position(|&c| c != 0)
}

fn axpy(v: &mut [u8], a: u8, b: &[u8]) {
    for (x, &y) in v.iter_mut().zip(b) {
        *x = (*x + a * y) & 3;
    }
}

fn negate(v: &mut [u8]) {
    for x in v.iter_mut() {
        *x = (4 - *x) & 3;
    }
}

impl Z4Span {
    pub fn new(len: usize) -> Self {
        Self { len, rows: vec![None; len] }
    }

    pub fn from_rows<'a>(len: usize, rows: impl IntoIterator<Item = &'a [u8]>) -> Self {
        let mut span = Self::new(len);
        for r in rows {
            span.insert(r);
        }
        span
    }

    /// Length of the ambient vectors.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, v: &[u8]) {
        assert_eq!(v.len(), self.len, "vector length");
        let mut pending = vec![v.iter().map(|&c| c & 3).collect::<Vec<u8>>()];
        while let Some(mut v) = pending.pop() {
            while let Some(c) = leading(&v) {
                match &mut self.rows[c] {
                    None => {
                        if v[c] == 3 {
                            negate(&mut v);
                        }
                        if v[c] == 2 {
                            let twice: Vec<u8> = v.iter().map(|&x| (2 * x) & 3).collect();
                            pending.push(twice);
                        }
                        self.rows[c] = Some(v);
                        break;
                    }
                    Some(b) if b[c] == 1 => {
                        let a = 4 - v[c];
                        axpy(&mut v, a, b);
                    }
                    Some(b) if v[c] == 2 => {
                        axpy(&mut v, 3, b);
                    }
                    Some(b) => {
                        if v[c] == 3 {
                            negate(&mut v);
                        }
                        let mut rest = std::mem::replace(b, v);
                        axpy(&mut rest, 2, b);
                        v = rest;
                    }
                }
            }
        }
    }

    /// Reduces `v` against the rows; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[u8]) -> Vec<u8> {
        let mut v: Vec<u8> = v.iter().map(|&c| c & 3).collect();
        let mut start = 0;
        while let Some(off) = leading(&v[start..]) {
            let c = start + off;
            match &self.rows[c] {
                Some(b) if b[c] == 1 => {
                    let a = 4 - v[c];
                    axpy(&mut v, a, b);
                }
                Some(b) if v[c] == 2 => axpy(&mut v, 3, b),
                _ => return v,
            }
            start = c + 1;
        }
        v
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        v.len() == self.len && leading(&self.reduce(v)).is_none()
    }

    /// Rows in pivot order with their coefficient ranges (4 for pivot 1,
    /// 2 for pivot 2).
    pub fn basis(&self) -> Vec<(&[u8], u8)> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.as_ref().map(|r| (r.as_slice(), if r[c] == 1 { 4 } else { 2 })))
            .collect()
    }

    /// `log2` of the number of elements.
    pub fn log2_size(&self) -> u32 {
        self.basis().iter().map(|&(_, radix)| if radix == 4 { 2 } else { 1 }).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Option::is_none)
    }

    /// All elements, in mixed-radix order of the coefficient vector.
    pub fn elements(&self, budget: u128) -> Result<Vec<Vec<u8>>> {
        let log = self.log2_size();
        check_budget(if log >= 127 { u128::MAX } else { 1u128 << log }, budget)?;
        let basis: Vec<(Vec<u8>, u8)> = self.basis().into_iter().map(|(r, m)| (r.to_vec(), m)).collect();
        Ok(MixedRadix::new(self.len, basis).collect())
    }

    pub fn is_subspan_of(&self, other: &Z4Span) -> bool {
        self.basis().iter().all(|(r, _)| other.contains(r))
    }

    /// Intersection-free equality test: each contains the other's rows.
    pub fn same_span(&self, other: &Z4Span) -> bool {
        self.len == other.len && self.is_subspan_of(other) && other.is_subspan_of(self)
    }
}

/// Walks every combination `sum a_r row_r` with `a_r < radix_r`, updating
/// the running vector by one row per step.
pub struct MixedRadix {
    basis: Vec<(Vec<u8>, u8)>,
    digits: Vec<u8>,
    current: Vec<u8>,
    done: bool,
}

impl MixedRadix {
    pub fn new(len: usize, basis: Vec<(Vec<u8>, u8)>) -> Self {
        let digits = vec![0; basis.len()];
        Self { basis, digits, current: vec![0; len], done: false }
    }
}

impl Iterator for MixedRadix {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let mut pos = self.basis.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            let (row, radix) = &self.basis[pos];
            self.digits[pos] += 1;
            if self.digits[pos] < *radix {
                axpy(&mut self.current, 1, row);
                break;
            }
            self.digits[pos] = 0;
            axpy(&mut self.current, (5 - *radix) & 3, row);
        }
        Some(out)
    }
}

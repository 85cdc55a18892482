//! Z4 vectors packed two bits per digit, 32 digits per word.

const LO: u64 = 0x5555_5555_5555_5555;

pub(crate) fn add_word(a: u64, b: u64) -> u64 {
    let x = a ^ b;
    let carry = (a & b & LO) << 1;
    (x & LO) | ((x & !LO) ^ carry)
}

/// Lee weight of the 32 digits in a word.
pub(crate) fn lee_word(x: u64) -> u32 {
    let lo = x & LO;
    let hi = (x >> 1) & LO;
    (lo | hi).count_ones() + (hi & !lo).count_ones()
}

pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(32)
}

pub(crate) fn pack(v: &[u8]) -> Vec<u64> {
    let mut out = vec![0u64; words_for(v.len())];
    for (p, &c) in v.iter().enumerate() {
        out[p / 32] |= (c as u64 & 3) << (2 * (p % 32));
    }
    out
}

pub(crate) fn add_assign(acc: &mut [u64], v: &[u64]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = add_word(*a, b);
    }
}

pub(crate) fn lee(v: &[u64]) -> u32 {
    v.iter().map(|&w| lee_word(w)).sum()
}

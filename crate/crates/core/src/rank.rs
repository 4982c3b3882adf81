//! Perfect ranking of states for dense visited sets.
//!
//! Ids are ranked by their Lehmer code; in signed mode the orientation bits
//! are appended as the low `n` bits of the rank.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::model::Mode;

/// Number of states for `cells` cells, or `None` when it does not fit `u64`.
pub fn state_space_size(cells: usize, mode: Mode) -> Option<u64> {
    let mut total: u64 = 1;
    for k in 2..=cells as u64 {
        total = total.checked_mul(k)?;
    }
    if mode.is_signed() {
        total = total.checked_mul(1u64.checked_shl(cells as u32)?)?;
    }
    Some(total)
}

/// Rank of a buffer of cell codes among all states with the same cell count.
pub(crate) fn rank_codes(codes: &[u16], signed: bool) -> u64 {
    let n = codes.len();
    let mut rank: u64 = 0;
    // Lehmer digits: how many later ids are smaller
    for i in 0..n {
        let id = codes[i] >> 1;
        let smaller = codes[i + 1..].iter().filter(|&&c| (c >> 1) < id).count() as u64;
        rank = rank * (n - i) as u64 + smaller;
    }
    if signed {
        let orient = codes
            .iter()
            .fold(0u64, |acc, &c| (acc << 1) | u64::from(c & 1));
        rank = (rank << n) | orient;
    }
    rank
}

/// A fixed-size bitset that can be filled concurrently.
pub(crate) struct AtomicBitSet {
    words: Vec<AtomicU64>,
}

impl AtomicBitSet {
    pub fn new(bits: u64) -> Self {
        let words = bits.div_ceil(64) as usize;
        AtomicBitSet {
            words: (0..words).map(|_| AtomicU64::new(0)).collect(),
        }
    }

    /// Sets the bit; returns `true` if this call set it.
    #[inline]
    pub fn insert(&self, bit: u64) -> bool {
        let mask = 1u64 << (bit % 64);
        let prev = self.words[(bit / 64) as usize].fetch_or(mask, Ordering::Relaxed);
        prev & mask == 0
    }
}

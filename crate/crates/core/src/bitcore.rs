//! Binary digits of heap sizes and the Nim-sum.
//!
//! Heap sizes are 64-bit words, so every binary expansion is finite: digits at
//! index 64 and above are zero.

use crate::error::{Error, Result};

/// Number of binary digits carried by a heap size.
pub const WORD_BITS: u32 = u64::BITS;

/// The `k`-th binary digit of `t` (`k = 0` is least significant).
#[inline]
pub fn bit(t: u64, k: u32) -> u8 {
    if k >= WORD_BITS {
        0
    } else {
        ((t >> k) & 1) as u8
    }
}

/// XOR of the `k`-th digits of every entry.
#[inline]
pub fn digit_xor(xs: &[u64], k: u32) -> u8 {
    xs.iter().fold(0, |acc, &x| acc ^ bit(x, k))
}

/// Bitwise exclusive OR of all heap sizes.
pub fn nim_sum(xs: &[u64]) -> Result<u64> {
    if xs.is_empty() {
        return Err(Error::EmptyInput);
    }
    Ok(xs.iter().fold(0, |acc, &x| acc ^ x))
}

/// Highest digit index at which an odd number of entries carry a 1, or
/// `None` when the Nim-sum is zero.
pub fn highest_discrepancy_bit(xs: &[u64]) -> Result<Option<u32>> {
    let s = nim_sum(xs)?;
    Ok((s != 0).then(|| WORD_BITS - 1 - s.leading_zeros()))
}

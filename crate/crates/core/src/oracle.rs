//! Direct P-position test and winning-move construction for the canonical
//! game on an odd number `n >= 3` of heaps.
//!
//! In that game a position is P exactly when its Nim-sum is zero. From an
//! N-position the winning reply empties the discrepancy: take the highest
//! digit `k'` where the heaps disagree, pick a heap with digit `k'` set, keep
//! its digits above `k'`, and replace the ones at or below `k'` by the XOR of
//! the other heaps. That heap strictly shrinks and the Nim-sum drops to zero.

use serde::Serialize;

use crate::bitcore::{bit, highest_discrepancy_bit, nim_sum, WORD_BITS};
use crate::error::{Error, Result};
use crate::game::{GameSpec, Move, MoveVector, Position};

/// Verdict for a position, with the constructed winning move when there is one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub is_p: bool,
    pub winning: Option<Move>,
}

/// Fails unless `n` is odd and at least 3.
pub fn check_oracle_dim(n: usize) -> Result<()> {
    if n >= 3 && n % 2 == 1 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(n))
    }
}

pub fn is_p_position(pos: &[u64]) -> Result<bool> {
    check_oracle_dim(pos.len())?;
    Ok(nim_sum(pos)? == 0)
}

/// The single-heap move that restores Nim-sum zero, using the lowest-index
/// heap that carries the top discrepancy digit.
pub fn winning_move(pos: &[u64]) -> Result<Move> {
    check_oracle_dim(pos.len())?;
    let Some(top) = highest_discrepancy_bit(pos)? else {
        return Err(Error::NoWinningMove(
            Position::new(pos.to_vec())?.to_string(),
        ));
    };
    let heap = pos
        .iter()
        .position(|&x| bit(x, top) == 1)
        .expect("an odd number of heaps carry the discrepancy digit");

    let x = pos[heap];
    let mut target = 0u64;
    for k in 0..WORD_BITS {
        let digit = if k > top {
            bit(x, k)
        } else {
            pos.iter()
                .enumerate()
                .filter(|&(j, _)| j != heap)
                .fold(0, |acc, (_, &y)| acc ^ bit(y, k))
        };
        target |= u64::from(digit) << k;
    }
    debug_assert!(target < x);

    Ok(Move {
        vector: MoveVector::unit(pos.len(), heap),
        k: x - target,
    })
}

pub fn verdict(pos: &[u64]) -> Result<OracleVerdict> {
    if is_p_position(pos)? {
        Ok(OracleVerdict {
            is_p: true,
            winning: None,
        })
    } else {
        Ok(OracleVerdict {
            is_p: false,
            winning: Some(winning_move(pos)?),
        })
    }
}

/// The unique `t` (mod 2^64) with Nim-sum of `x_i - t` equal to zero, for an
/// odd number of heaps.
///
/// Subtracting `2^k` from every heap flips digit `k` of each difference and
/// leaves lower digits alone; with an odd number of heaps that flips digit
/// `k` of the Nim-sum. Fixing digits of `t` from the bottom up therefore
/// determines it completely.
fn diagonal_reset(pos: &[u64]) -> u64 {
    let mut t = 0u64;
    for k in 0..WORD_BITS {
        let s = pos.iter().fold(0, |acc, &x| acc ^ x.wrapping_sub(t));
        if bit(s, k) == 1 {
            t |= 1 << k;
        }
    }
    t
}

/// Every legal move from `pos` that reaches Nim-sum zero, in canonical move
/// order: single-heap moves by heap index, then the diagonal.
///
/// Runs in `O(64·n)` regardless of heap sizes. There is at most one winning
/// move per heap and at most one diagonal one.
pub fn all_winning_moves(spec: &GameSpec, pos: &Position) -> Result<Vec<Move>> {
    check_oracle_dim(spec.n())?;
    if !spec.is_canonical() {
        return Err(Error::InvalidSpec(
            "oracle requires the canonical move set".into(),
        ));
    }
    if pos.dim() != spec.n() {
        return Err(Error::DimensionMismatch {
            expected: spec.n(),
            found: pos.dim(),
        });
    }
    let s = nim_sum(pos)?;
    let mut moves = Vec::new();
    if s == 0 {
        return Ok(moves);
    }
    for v in spec.vectors() {
        match v.unit_heap() {
            Some(i) => {
                let target = pos[i] ^ s;
                if target < pos[i] {
                    moves.push(Move {
                        vector: v.clone(),
                        k: pos[i] - target,
                    });
                }
            }
            None => {
                let t = diagonal_reset(pos);
                let min = pos.iter().copied().min().unwrap_or(0);
                if t >= 1 && t <= min {
                    moves.push(Move {
                        vector: v.clone(),
                        k: t,
                    });
                }
            }
        }
    }
    Ok(moves)
}

/// The engine's choice: the constructed winning move from an N-position,
/// otherwise the first legal move in canonical order. `None` when the
/// position is terminal.
pub fn engine_move(pos: &Position) -> Result<Option<Move>> {
    check_oracle_dim(pos.dim())?;
    if !is_p_position(pos)? {
        return winning_move(pos).map(Some);
    }
    let spec = GameSpec::canonical(pos.dim())?;
    // First legal move in canonical order: one token from the first
    // nonempty heap. The diagonal comes last, so it is never chosen here.
    Ok(spec.vectors().iter().find_map(|v| {
        let i = v.unit_heap()?;
        (pos[i] > 0).then(|| Move {
            vector: v.clone(),
            k: 1,
        })
    }))
}

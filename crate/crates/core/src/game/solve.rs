use std::fmt;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use super::{box_positions, check_dim, GameSpec, Position};
use crate::budget::{saturating_pow, Budget};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    /// The player to move loses.
    P,
    /// The player to move wins.
    N,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::P => "P",
            Verdict::N => "N",
        })
    }
}

/// P/N classification of every position in `[0,bound)^n`, one bit per cell.
///
/// Cells are indexed in mixed radix `bound` with the first heap most
/// significant, so index order is lexicographic order.
#[derive(Clone, Debug)]
pub struct VerdictTable {
    spec: GameSpec,
    bound: u64,
    cells: usize,
    p_bits: Vec<u64>,
}

impl VerdictTable {
    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// Number of positions in the box.
    pub fn len(&self) -> usize {
        self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells == 0
    }

    fn index_of(&self, pos: &[u64]) -> Result<usize> {
        check_dim(self.n(), pos.len())?;
        let mut idx = 0usize;
        for &x in pos {
            if x >= self.bound {
                return Err(Error::OutsideBox(
                    Position::new(pos.to_vec())?.to_string(),
                    self.bound,
                ));
            }
            idx = idx * self.bound as usize + x as usize;
        }
        Ok(idx)
    }

    #[inline]
    fn p_at(&self, idx: usize) -> bool {
        self.p_bits[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn verdict(&self, pos: &[u64]) -> Result<Verdict> {
        let idx = self.index_of(pos)?;
        Ok(if self.p_at(idx) {
            Verdict::P
        } else {
            Verdict::N
        })
    }

    pub fn is_p(&self, pos: &[u64]) -> Result<bool> {
        self.verdict(pos).map(|v| v == Verdict::P)
    }

    /// All positions with their verdicts, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (Position, Verdict)> + '_ {
        box_positions(self.n(), self.bound)
            .enumerate()
            .map(|(idx, pos)| {
                let v = if self.p_at(idx) {
                    Verdict::P
                } else {
                    Verdict::N
                };
                (pos, v)
            })
    }

    /// P-positions in lexicographic order.
    pub fn p_positions(&self) -> impl Iterator<Item = Position> + '_ {
        self.iter()
            .filter(|(_, v)| *v == Verdict::P)
            .map(|(p, _)| p)
    }

    pub fn p_count(&self) -> usize {
        self.p_bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// CSV with header `x1,...,xn,verdict`, rows in lexicographic order.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        let header: Vec<String> = (1..=self.n()).map(|i| format!("x{i}")).collect();
        writeln!(out, "{},verdict", header.join(","))?;
        for (pos, verdict) in self.iter() {
            for x in pos.iter() {
                write!(out, "{x},")?;
            }
            writeln!(out, "{verdict}")?;
        }
        out.flush()
    }
}

/// Retrograde analysis of the box `[0,bound)^n` with the default budget.
pub fn solve_box(spec: &GameSpec, bound: u64) -> Result<VerdictTable> {
    solve_box_with_budget(spec, bound, Budget::default())
}

/// Retrograde analysis of the box `[0,bound)^n`.
///
/// Every move is componentwise non-increasing, so successors of a box
/// position stay in the box and have a strictly smaller index. One pass in
/// index order therefore sees every successor classified before its
/// predecessor: a position is P iff none of its successors is P, and
/// terminal positions (empty or not) come out P.
pub fn solve_box_with_budget(spec: &GameSpec, bound: u64, budget: Budget) -> Result<VerdictTable> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    let n = spec.n();
    let requested = saturating_pow(bound, n);
    budget.check(requested)?;
    let cells = requested as usize;

    // Index offset of one copy of each vector. Saturation only happens for
    // vectors with an entry >= bound, which never fit in the box anyway.
    let strides: Vec<usize> = spec
        .vectors()
        .iter()
        .map(|v| {
            v.coords().iter().fold(0usize, |acc, &c| {
                acc.saturating_mul(bound as usize)
                    .saturating_add(c as usize)
            })
        })
        .collect();

    let mut p_bits = vec![0u64; cells.div_ceil(64)];
    let mut coords = vec![0u64; n];
    for idx in 0..cells {
        let mut reaches_p = false;
        'vectors: for (v, &stride) in spec.vectors().iter().zip(&strides) {
            let k_max = super::max_multiplier(&coords, v) as usize;
            for k in 1..=k_max {
                let succ = idx - k * stride;
                if p_bits[succ / 64] >> (succ % 64) & 1 == 1 {
                    reaches_p = true;
                    break 'vectors;
                }
            }
        }
        if !reaches_p {
            p_bits[idx / 64] |= 1 << (idx % 64);
        }
        // Advance the mixed-radix counter.
        for c in coords.iter_mut().rev() {
            *c += 1;
            if *c < bound {
                break;
            }
            *c = 0;
        }
    }

    Ok(VerdictTable {
        spec: spec.clone(),
        bound,
        cells,
        p_bits,
    })
}

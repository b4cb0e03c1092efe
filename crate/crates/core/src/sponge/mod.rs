//! Discrete Sierpinski sponges: the Nim-sum-zero points of `[0,2^m)^n`.
//!
//! Level `m + 1` is the disjoint union of the translates `2^m·v + level m`
//! over the even-weight 0-1 vectors `v`, so it holds `2^{n-1}` copies of the
//! level below. Scaling level `m` by `2^-m` gives an increasing family of
//! dyadic point sets in `[0,1)^n` whose union is invariant under the
//! contractions `x -> (x + v)/2`.

mod dyadic;
mod export;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use dyadic::{q_membership, Dyadic, DyadicPoint, MAX_LEVEL};
pub use export::{export_points, write_points, ExportFormat};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::game::Position;
use crate::oracle::check_oracle_dim;

/// Translation directions of the self-similar decomposition: the 0-1
/// vectors of even weight, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TSet {
    n: usize,
    vectors: Vec<Position>,
}

impl TSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[Position] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

pub fn t_set(n: usize) -> Result<TSet> {
    check_oracle_dim(n)?;
    if n >= 64 {
        return Err(Error::BudgetExceeded {
            requested: 1u128 << (n - 1).min(127),
            limit: 1 << 63,
        });
    }
    let vectors = (0u64..1 << n)
        .filter(|mask| mask.count_ones() % 2 == 0)
        .map(|mask| {
            let coords = (0..n).map(|i| mask >> (n - 1 - i) & 1).collect();
            Position::new(coords).expect("n >= 3")
        })
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    Ok(TSet { n, vectors })
}

/// The point set `P_m^(n)`, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpongeLevel {
    n: usize,
    m: u32,
    points: Vec<Position>,
}

impl SpongeLevel {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn points(&self) -> &[Position] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Position) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Unchecked constructor for tests that need a damaged level.
    #[cfg(test)]
    pub(crate) fn from_raw(n: usize, m: u32, mut points: Vec<Position>) -> Self {
        points.sort();
        SpongeLevel { n, m, points }
    }
}

/// `2^{m(n-1)}`, the size of level `m`, saturating.
pub fn level_size(n: usize, m: u32) -> u128 {
    let exp = u128::from(m) * (n as u128 - 1);
    if exp >= 128 {
        u128::MAX
    } else {
        1u128 << exp
    }
}

pub fn generate_level(n: usize, m: u32) -> Result<SpongeLevel> {
    generate_level_with_budget(n, m, Budget::default())
}

/// Builds level `m` by repeated self-similar expansion from the origin:
/// level `j + 1` is `{2^j·v + p : v in T, p in level j}`.
pub fn generate_level_with_budget(n: usize, m: u32, budget: Budget) -> Result<SpongeLevel> {
    let t = t_set(n)?;
    budget.check(level_size(n, m))?;
    if m > MAX_LEVEL {
        return Err(Error::DyadicOutOfRange { num: 0, level: m });
    }
    let mut points = vec![Position::origin(n)];
    for j in 0..m {
        let scale = 1u64 << j;
        let mut next = Vec::with_capacity(points.len() * t.len());
        for v in t.vectors() {
            next.extend(points.iter().map(|p| {
                let coords = p
                    .iter()
                    .zip(v.iter())
                    .map(|(&x, &d)| x + d * scale)
                    .collect();
                Position::new(coords).expect("n >= 3")
            }));
        }
        points = next;
    }
    points.sort_unstable();
    Ok(SpongeLevel { n, m, points })
}

/// Splits level `m >= 1` by the digit pattern at index `m - 1`. Each part is
/// translated back by `-2^{m-1}·v` and keyed by its T-vector `v`.
pub fn decompose(level: &SpongeLevel) -> Result<BTreeMap<Position, SpongeLevel>> {
    if level.m == 0 {
        return Err(Error::LevelZero);
    }
    let shift = level.m - 1;
    let mut parts: BTreeMap<Position, Vec<Position>> = BTreeMap::new();
    for p in &level.points {
        let v: Vec<u64> = p.iter().map(|&x| x >> shift & 1).collect();
        let rest: Vec<u64> = p.iter().map(|&x| x & !(1 << shift)).collect();
        parts
            .entry(Position::new(v)?)
            .or_default()
            .push(Position::new(rest)?);
    }
    Ok(parts
        .into_iter()
        .map(|(v, points)| {
            (
                v,
                SpongeLevel {
                    n: level.n,
                    m: shift,
                    points,
                },
            )
        })
        .collect())
}

/// Coordinates `x / 2^m` for every point of the level.
pub fn scale(level: &SpongeLevel) -> Result<BTreeSet<DyadicPoint>> {
    level
        .points
        .iter()
        .map(|p| DyadicPoint::from_integers(p, level.m))
        .collect()
}

/// Checks `scale(level m) = ⋃_{v in T} (v + scale(level m-1)) / 2` as exact
/// dyadic sets, with level `m - 1` generated independently.
pub fn ifs_check(level: &SpongeLevel) -> Result<bool> {
    if level.m == 0 {
        return Err(Error::LevelZero);
    }
    let t = t_set(level.n)?;
    let coarser = generate_level_with_budget(level.n, level.m - 1, Budget::new(u64::MAX))?;
    let coarser_scaled = scale(&coarser)?;
    let mut image = BTreeSet::new();
    for v in t.vectors() {
        for p in &coarser_scaled {
            image.insert(p.contract_toward(v)?);
        }
    }
    Ok(scale(level)? == image)
}

/// `log2(count) / m` as a reduced fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactSlope {
    pub numer: u32,
    pub denom: u32,
}

impl ExactSlope {
    fn new(numer: u32, denom: u32) -> Self {
        let g = gcd(numer, denom);
        ExactSlope {
            numer: numer / g,
            denom: denom / g,
        }
    }

    pub fn as_f64(&self) -> f64 {
        f64::from(self.numer) / f64::from(self.denom)
    }

    pub fn is_integer(&self, d: u32) -> bool {
        self.denom == 1 && self.numer == d
    }
}

impl fmt::Display for ExactSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxCount {
    pub m: u32,
    pub count: u64,
    /// `None` for `m = 0`, or if the count is not a power of two.
    pub slope: Option<ExactSlope>,
}

/// At scale `2^-m` every point of the scaled level `m` sits in its own box,
/// so the box count is `|P_m|`.
pub fn box_count(levels: &[SpongeLevel]) -> Result<Vec<BoxCount>> {
    let Some(first) = levels.first() else {
        return Ok(Vec::new());
    };
    levels
        .iter()
        .map(|level| {
            if level.n != first.n {
                return Err(Error::MixedDimensions(first.n, level.n));
            }
            let count = level.len() as u64;
            let slope = (level.m >= 1 && count.is_power_of_two())
                .then(|| ExactSlope::new(count.trailing_zeros(), level.m));
            Ok(BoxCount {
                m: level.m,
                count,
                slope,
            })
        })
        .collect()
}

/// Number of cells of side `2^-j` met by the scaled level, for `j <= m`.
pub fn occupied_boxes(level: &SpongeLevel, j: u32) -> usize {
    let shift = level.m.saturating_sub(j);
    let cells: BTreeSet<Vec<u64>> = level
        .points
        .iter()
        .map(|p| p.iter().map(|&x| x >> shift).collect())
        .collect();
    cells.len()
}

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::check_oracle_dim;

/// Largest supported denominator exponent; keeps `2^level` in a `u64`.
pub const MAX_LEVEL: u32 = 63;

/// An exact value `num / 2^level` in `[0,1]`, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Dyadic {
    num: u64,
    level: u32,
}

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic { num: 0, level: 0 };
    pub const ONE: Dyadic = Dyadic { num: 1, level: 0 };

    pub fn new(num: u64, level: u32) -> Result<Self> {
        if level > MAX_LEVEL || num > 1u64 << level {
            return Err(Error::DyadicOutOfRange { num, level });
        }
        Ok(Dyadic { num, level }.reduced())
    }

    fn reduced(mut self) -> Self {
        if self.num == 0 {
            return Dyadic::ZERO;
        }
        let shift = self.num.trailing_zeros().min(self.level);
        self.num >>= shift;
        self.level -= shift;
        self
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// `(digit + self) / 2` for a binary digit.
    pub fn average_with_digit(&self, digit: u8) -> Result<Self> {
        let level = self.level + 1;
        if level > MAX_LEVEL {
            return Err(Error::DyadicOutOfRange {
                num: self.num,
                level,
            });
        }
        Dyadic::new(u64::from(digit & 1) << self.level | self.num, level)
    }

    /// Numerator over the common denominator `2^level`, for `level >= self.level`.
    fn scaled_to(&self, level: u32) -> u64 {
        self.num << (level - self.level)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u128 << self.level)
        }
    }
}

/// A point of `[0,1]^n` with dyadic coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DyadicPoint(Vec<Dyadic>);

impl DyadicPoint {
    pub fn new(coords: Vec<Dyadic>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(DyadicPoint(coords))
    }

    /// `x_i / 2^level` for every coordinate.
    pub fn from_integers(xs: &[u64], level: u32) -> Result<Self> {
        xs.iter()
            .map(|&x| Dyadic::new(x, level))
            .collect::<Result<Vec<_>>>()
            .and_then(DyadicPoint::new)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Dyadic] {
        &self.0
    }

    /// `(v + self) / 2` for a 0-1 vector `v`.
    pub fn contract_toward(&self, v: &[u64]) -> Result<Self> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        self.0
            .iter()
            .zip(v)
            .map(|(c, &d)| c.average_with_digit(d as u8))
            .collect::<Result<Vec<_>>>()
            .map(DyadicPoint)
    }
}

impl fmt::Display for DyadicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Whether `p` lies in the closure of the scaled sponge: every coordinate has
/// a binary expansion `0.a_1 a_2 ...` such that the digits XOR to zero at
/// every position.
///
/// A dyadic value has at most two expansions: the terminating one and the
/// one ending in all ones (`1` only has the latter, `0` only the former).
/// Over a common prefix of `L` digits, where `2^L` is the largest
/// denominator, a value `A/2^L` reads as digits `A` with zero tail, or as
/// digits `A - 1` with an all-ones tail. A choice works iff the prefixes XOR
/// to zero and an even number of coordinates take the all-ones tail.
pub fn q_membership(p: &DyadicPoint) -> Result<bool> {
    check_oracle_dim(p.dim())?;
    let prefix_len = p.coords().iter().map(Dyadic::level).max().unwrap_or(0);
    let full = 1u64 << prefix_len;

    // Reachable (prefix XOR, tail parity) states after each coordinate.
    let mut states: Vec<(u64, bool)> = vec![(0, false)];
    for c in p.coords() {
        let a = c.scaled_to(prefix_len);
        let mut options = Vec::with_capacity(2);
        if a < full {
            options.push((a, false));
        }
        if a >= 1 {
            options.push((a - 1, true));
        }
        let mut next: Vec<(u64, bool)> = states
            .iter()
            .flat_map(|&(x, t)| options.iter().map(move |&(d, tail)| (x ^ d, t ^ tail)))
            .collect();
        next.sort_unstable();
        next.dedup();
        states = next;
    }
    Ok(states.contains(&(0, false)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[(u64, u32)]) -> DyadicPoint {
        DyadicPoint::new(
            coords
                .iter()
                .map(|&(n, l)| Dyadic::new(n, l).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(Dyadic::new(2, 2).unwrap(), Dyadic::new(1, 1).unwrap());
        assert_eq!(Dyadic::new(0, 7).unwrap(), Dyadic::ZERO);
        assert_eq!(Dyadic::new(8, 3).unwrap(), Dyadic::ONE);
        assert!(Dyadic::new(5, 2).is_err());
        assert!(Dyadic::new(1, 64).is_err());
        assert_eq!(Dyadic::new(3, 2).unwrap().to_string(), "3/4");
    }

    #[test]
    fn contraction() {
        let p = DyadicPoint::from_integers(&[1, 0, 0], 1).unwrap();
        let q = p.contract_toward(&[1, 1, 0]).unwrap();
        assert_eq!(q, pt(&[(3, 2), (1, 1), (0, 0)]));
    }

    #[test]
    fn membership_examples() {
        assert!(q_membership(&pt(&[(0, 0), (0, 0), (0, 0)])).unwrap());
        assert!(q_membership(&pt(&[(1, 1), (1, 2), (3, 2)])).unwrap());
        assert!(!q_membership(&pt(&[(1, 1), (0, 0), (0, 0)])).unwrap());
    }

    #[test]
    fn membership_uses_all_ones_expansions() {
        // 1 = 0.111..., so two ones cancel.
        assert!(q_membership(&pt(&[(1, 0), (1, 0), (0, 0)])).unwrap());
        assert!(!q_membership(&pt(&[(1, 0), (0, 0), (0, 0)])).unwrap());
        // 1/2 = 0.0111... pairs with 1 = 0.111... against 1/2 = 0.1000...
        assert!(q_membership(&pt(&[(1, 1), (1, 1), (1, 0)])).unwrap());
        // (1/2, 1/2, 0): .1 xor .1 xor 0 = 0
        assert!(q_membership(&pt(&[(1, 1), (1, 1), (0, 0)])).unwrap());
        assert!(!q_membership(&pt(&[(1, 1), (1, 1), (1, 1)])).unwrap());
        assert!(q_membership(&pt(&[(1, 0), (1, 0), (1, 0), (1, 0), (0, 0)])).unwrap());
    }

    #[test]
    fn membership_rejects_even_dimension() {
        assert!(q_membership(&pt(&[(0, 0), (0, 0)])).is_err());
    }

    /// Independent check: enumerate the 0-1 digit choices explicitly as digit
    /// strings of length `L + 1`, with the last digit standing for the tail.
    fn brute_membership(p: &DyadicPoint) -> bool {
        let l = p.coords().iter().map(Dyadic::level).max().unwrap();
        let expansions: Vec<Vec<Vec<u8>>> = p
            .coords()
            .iter()
            .map(|c| {
                let mut out = Vec::new();
                for tail in [0u8, 1] {
                    for a in 0..(1u64 << l) {
                        let digits: Vec<u8> = (1..=l).map(|k| ((a >> (l - k)) & 1) as u8).collect();
                        // value = a/2^l + tail/2^l
                        if u128::from(a) + u128::from(tail)
                            == u128::from(c.numerator()) << (l - c.level())
                        {
                            let mut d = digits;
                            d.push(tail);
                            out.push(d);
                        }
                    }
                }
                out
            })
            .collect();
        let mut stack = vec![(0usize, vec![0u8; l as usize + 1])];
        while let Some((i, acc)) = stack.pop() {
            if i == expansions.len() {
                if acc.iter().all(|&d| d == 0) {
                    return true;
                }
                continue;
            }
            for e in &expansions[i] {
                stack.push((i + 1, acc.iter().zip(e).map(|(a, b)| a ^ b).collect()));
            }
        }
        false
    }

    #[test]
    fn membership_matches_brute_force() {
        for n in [3usize, 5] {
            let level = if n == 3 { 3 } else { 2 };
            let side = (1u64 << level) + 1;
            let total = side.pow(n as u32);
            for idx in 0..total {
                let mut rest = idx;
                let mut xs = vec![0u64; n];
                for x in xs.iter_mut() {
                    *x = rest % side;
                    rest /= side;
                }
                let p = DyadicPoint::from_integers(&xs, level).unwrap();
                assert_eq!(q_membership(&p).unwrap(), brute_membership(&p), "at {p}");
            }
        }
    }
}

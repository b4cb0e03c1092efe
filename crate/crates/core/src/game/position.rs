use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Heap sizes, one entry per heap.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Position(Vec<u64>);

impl Position {
    pub fn new(coords: Vec<u64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(Position(coords))
    }

    pub fn origin(n: usize) -> Self {
        Position(vec![0; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }

    /// True when every heap is empty.
    pub fn is_origin(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl Deref for Position {
    type Target = [u64];

    fn deref(&self) -> &[u64] {
        &self.0
    }
}

impl<const N: usize> From<[u64; N]> for Position {
    fn from(coords: [u64; N]) -> Self {
        Position(coords.to_vec())
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Parses comma-separated decimals such as `1,2,3`; surrounding parentheses
/// and whitespace are tolerated.
impl FromStr for Position {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParsePosition(s.to_owned());
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body);
        if body.trim().is_empty() {
            return Err(bad());
        }
        body.split(',')
            .map(|part| part.trim().parse::<u64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()
            .map(Position)
    }
}

/// A direction of play: a nonzero vector of token counts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct MoveVector(Vec<u64>);

impl MoveVector {
    pub fn new(coords: Vec<u64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::EmptyInput);
        }
        if coords.iter().all(|&c| c == 0) {
            return Err(Error::InvalidSpec("move vector must be nonzero".into()));
        }
        Ok(MoveVector(coords))
    }

    /// Unit vector for heap `heap` (zero-based) in dimension `n`.
    pub fn unit(n: usize, heap: usize) -> Self {
        assert!(heap < n, "heap index {heap} out of range for n = {n}");
        let mut coords = vec![0; n];
        coords[heap] = 1;
        MoveVector(coords)
    }

    pub fn diagonal(n: usize) -> Self {
        assert!(n > 0);
        MoveVector(vec![1; n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    /// Index of the only nonzero entry when this is a unit vector.
    pub fn unit_heap(&self) -> Option<usize> {
        let mut nonzero = self.0.iter().enumerate().filter(|(_, &c)| c != 0);
        match (nonzero.next(), nonzero.next()) {
            (Some((i, 1)), None) => Some(i),
            _ => None,
        }
    }
}

impl TryFrom<Vec<u64>> for MoveVector {
    type Error = Error;

    fn try_from(coords: Vec<u64>) -> Result<Self> {
        MoveVector::new(coords)
    }
}

impl From<MoveVector> for Vec<u64> {
    fn from(v: MoveVector) -> Self {
        v.0
    }
}

impl fmt::Display for MoveVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// `k` copies of `vector`, removed from the heaps in one turn.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub vector: MoveVector,
    pub k: u64,
}

impl Move {
    pub fn new(vector: MoveVector, k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::IllegalMove("multiplier k must be at least 1".into()));
        }
        Ok(Move { vector, k })
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.vector, self.k)
    }
}

/// Dimension plus the finite set of move vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSpec")]
pub struct GameSpec {
    n: usize,
    vectors: Vec<MoveVector>,
}

#[derive(Deserialize)]
struct RawSpec {
    n: usize,
    vectors: Vec<Vec<u64>>,
}

impl TryFrom<RawSpec> for GameSpec {
    type Error = Error;

    fn try_from(raw: RawSpec) -> Result<Self> {
        let vectors = raw
            .vectors
            .into_iter()
            .map(MoveVector::new)
            .collect::<Result<Vec<_>>>()?;
        GameSpec::new(raw.n, vectors)
    }
}

impl GameSpec {
    pub fn new(n: usize, vectors: Vec<MoveVector>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("dimension must be at least 1".into()));
        }
        if vectors.is_empty() {
            return Err(Error::InvalidSpec(
                "at least one move vector is required".into(),
            ));
        }
        for (i, v) in vectors.iter().enumerate() {
            if v.dim() != n {
                return Err(Error::InvalidSpec(format!(
                    "vector {v} has dimension {}, expected {n}",
                    v.dim()
                )));
            }
            if vectors[..i].contains(v) {
                return Err(Error::InvalidSpec(format!("duplicate vector {v}")));
            }
        }
        Ok(GameSpec { n, vectors })
    }

    /// The n unit vectors followed by the all-ones diagonal.
    pub fn canonical(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSpec("dimension must be at least 1".into()));
        }
        let mut vectors: Vec<_> = (0..n).map(|i| MoveVector::unit(n, i)).collect();
        if n > 1 {
            vectors.push(MoveVector::diagonal(n));
        }
        GameSpec::new(n, vectors)
    }

    /// Two heaps with moves (1,0), (0,1), (1,1).
    pub fn classic() -> Self {
        GameSpec::canonical(2).expect("two-heap spec is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[MoveVector] {
        &self.vectors
    }

    /// Same vector set as [`GameSpec::canonical`], in any order.
    pub fn is_canonical(&self) -> bool {
        let Ok(canonical) = GameSpec::canonical(self.n) else {
            return false;
        };
        self.vectors.len() == canonical.vectors.len()
            && canonical.vectors.iter().all(|v| self.vectors.contains(v))
    }

    pub fn to_json(&self) -> String {
        serde_json::json!({ "n": self.n, "vectors": self.vectors }).to_string()
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[u64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

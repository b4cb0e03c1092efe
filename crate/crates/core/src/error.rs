use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("at least one heap is required")]
    EmptyInput,

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("oracle undefined for dimension {0}: n must be odd and at least 3")]
    UnsupportedDimension(usize),

    #[error("invalid game spec: {0}")]
    InvalidSpec(String),

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("position {0} is a P-position and has no winning move")]
    NoWinningMove(String),

    #[error("budget exceeded: {requested} cells requested, limit is {limit}")]
    BudgetExceeded { requested: u128, limit: u64 },

    #[error("bound must be at least 1")]
    ZeroBound,

    #[error("position {0} lies outside the box [0,{1})^n")]
    OutsideBox(String, u64),

    #[error("decomposition requires level m >= 1")]
    LevelZero,

    #[error("dyadic coordinate {num}/2^{level} is not in [0,1]")]
    DyadicOutOfRange { num: u64, level: u32 },

    #[error("PLY export needs n = 3, got n = {0}")]
    PlyDimension(usize),

    #[error("levels disagree on dimension: {0} vs {1}")]
    MixedDimensions(usize, usize),

    #[error("cannot parse position {0:?}")]
    ParsePosition(String),
}

use super::Position;

pub const GOLDEN_FLOOR_MAX_K: u64 = 1 << 62;

/// `⌊k·φ⌋` for the golden ratio `φ = (1 + √5)/2`, in exact integer arithmetic.
///
/// `k·φ = (k + k√5)/2` and `k√5 = √(5k²)`, so the floor is
/// `(k + isqrt(5k²)) / 2`. Exact for `k <= GOLDEN_FLOOR_MAX_K`, where `5k²`
/// still fits in 128 bits.
pub fn golden_floor(k: u64) -> u128 {
    assert!(
        k <= GOLDEN_FLOOR_MAX_K,
        "golden_floor argument {k} too large"
    );
    let k = u128::from(k);
    (k + (5 * k * k).isqrt()) / 2
}

/// P-positions of the two-heap game with both coordinates below `limit`:
/// the pairs `(⌊kφ⌋, ⌊kφ²⌋)` and their mirror images, sorted
/// lexicographically. Uses `⌊kφ²⌋ = ⌊kφ⌋ + k`.
pub fn beatty_p_positions(limit: u64) -> Vec<Position> {
    let limit = u128::from(limit);
    let mut out = Vec::new();
    for k in 0u64.. {
        let a = golden_floor(k);
        if a >= limit {
            break;
        }
        let b = a + u128::from(k);
        if b < limit {
            out.push(Position::from([a as u64, b as u64]));
            if k > 0 {
                out.push(Position::from([b as u64, a as u64]));
            }
        }
    }
    out.sort();
    out
}

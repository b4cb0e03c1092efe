//! n-heap games defined by a finite set of move vectors.
//!
//! A move subtracts a positive multiple `k·v` of some vector `v` from the
//! heaps, componentwise, and is legal while every heap stays non-negative.
//! The player with no legal move loses, so a position can be terminal even
//! with tokens left on the table.

mod beatty;
mod position;
mod solve;
mod verify;

pub use beatty::{beatty_p_positions, golden_floor, GOLDEN_FLOOR_MAX_K};
pub use position::{GameSpec, Move, MoveVector, Position};
pub use solve::{solve_box, solve_box_with_budget, Verdict, VerdictTable};
pub use verify::{verify_p_set, PSetReport, Violation};

use crate::error::{Error, Result};

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// Largest `k` with `pos - k·v >= 0`, componentwise.
pub(crate) fn max_multiplier(pos: &[u64], v: &MoveVector) -> u64 {
    pos.iter()
        .zip(v.coords())
        .filter(|(_, &c)| c > 0)
        .map(|(&x, &c)| x / c)
        .min()
        .unwrap_or(0)
}

/// Every legal move at `pos`: vectors in spec order, `k` ascending.
pub fn legal_moves(spec: &GameSpec, pos: &Position) -> Result<Vec<Move>> {
    check_dim(spec.n(), pos.dim())?;
    let mut moves = Vec::new();
    for v in spec.vectors() {
        let k_max = max_multiplier(pos, v);
        moves.extend((1..=k_max).map(|k| Move {
            vector: v.clone(),
            k,
        }));
    }
    Ok(moves)
}

/// True when the mover has no legal move.
pub fn is_terminal(spec: &GameSpec, pos: &Position) -> Result<bool> {
    check_dim(spec.n(), pos.dim())?;
    Ok(spec.vectors().iter().all(|v| max_multiplier(pos, v) == 0))
}

/// `pos - k·v`, or an error if a heap would go negative.
pub fn apply_move(pos: &Position, mv: &Move) -> Result<Position> {
    check_dim(pos.dim(), mv.vector.dim())?;
    if mv.k == 0 {
        return Err(Error::IllegalMove("multiplier k must be at least 1".into()));
    }
    let illegal = || Error::IllegalMove(format!("{mv} from {pos}"));
    pos.iter()
        .zip(mv.vector.coords())
        .map(|(&x, &c)| {
            c.checked_mul(mv.k)
                .and_then(|take| x.checked_sub(take))
                .ok_or_else(illegal)
        })
        .collect::<Result<Vec<_>>>()
        .map(|coords| Position::new(coords).expect("dimension is nonzero"))
}

/// Positions of the box `[0,bound)^n` in lexicographic order.
pub fn box_positions(n: usize, bound: u64) -> impl Iterator<Item = Position> {
    let mut next = (n > 0 && bound > 0).then(|| vec![0u64; n]);
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for i in (0..n).rev() {
            succ[i] += 1;
            if succ[i] < bound {
                next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(Position::new(current).expect("n > 0"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mv(v: &[u64], k: u64) -> Move {
        Move::new(MoveVector::new(v.to_vec()).unwrap(), k).unwrap()
    }

    #[test]
    fn legal_move_examples() {
        let spec = GameSpec::canonical(3).unwrap();
        assert!(legal_moves(&spec, &Position::from([0, 0, 0]))
            .unwrap()
            .is_empty());
        assert_eq!(
            legal_moves(&spec, &Position::from([1, 0, 0])).unwrap(),
            vec![mv(&[1, 0, 0], 1)]
        );
        assert_eq!(
            legal_moves(&spec, &Position::from([1, 1, 1])).unwrap(),
            vec![
                mv(&[1, 0, 0], 1),
                mv(&[0, 1, 0], 1),
                mv(&[0, 0, 1], 1),
                mv(&[1, 1, 1], 1)
            ]
        );
        assert_eq!(
            legal_moves(&spec, &Position::from([1, 2])),
            Err(Error::DimensionMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn legal_moves_order_k_ascending() {
        let spec = GameSpec::canonical(2).unwrap();
        let moves = legal_moves(&spec, &Position::from([2, 1])).unwrap();
        let rendered: Vec<String> = moves.iter().map(ToString::to_string).collect();
        assert_eq!(
            rendered,
            ["((1,0),1)", "((1,0),2)", "((0,1),1)", "((1,1),1)"]
        );
    }

    #[test]
    fn apply_move_examples() {
        assert_eq!(
            apply_move(&Position::from([5, 3, 2]), &mv(&[1, 1, 1], 2)).unwrap(),
            Position::from([3, 1, 0])
        );
        assert_eq!(
            apply_move(&Position::from([7, 5, 6]), &mv(&[1, 0, 0], 4)).unwrap(),
            Position::from([3, 5, 6])
        );
        assert!(matches!(
            apply_move(&Position::from([1, 0]), &mv(&[0, 1], 1)),
            Err(Error::IllegalMove(_))
        ));
        assert!(matches!(
            apply_move(&Position::from([u64::MAX, 0]), &mv(&[2, 0], u64::MAX)),
            Err(Error::IllegalMove(_))
        ));
    }

    #[test]
    fn terminal_positions() {
        let spec = GameSpec::new(2, vec![MoveVector::new(vec![2, 2]).unwrap()]).unwrap();
        assert!(is_terminal(&spec, &Position::from([1, 5])).unwrap());
        assert!(!is_terminal(&spec, &Position::from([2, 5])).unwrap());
    }

    #[test]
    fn box_enumeration() {
        let all: Vec<Position> = box_positions(2, 2).collect();
        assert_eq!(
            all,
            vec![
                Position::from([0, 0]),
                Position::from([0, 1]),
                Position::from([1, 0]),
                Position::from([1, 1])
            ]
        );
        assert_eq!(box_positions(3, 5).count(), 125);
        assert_eq!(box_positions(3, 0).count(), 0);
    }

    #[test]
    fn generated_moves_always_apply() {
        let spec = GameSpec::canonical(3).unwrap();
        for pos in box_positions(3, 6) {
            for m in legal_moves(&spec, &pos).unwrap() {
                let next = apply_move(&pos, &m).unwrap();
                assert!(next < pos);
            }
        }
    }
}

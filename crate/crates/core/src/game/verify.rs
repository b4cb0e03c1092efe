use std::collections::HashSet;
use std::fmt;

use super::{apply_move, box_positions, check_dim, legal_moves, GameSpec, Move, Position};
use crate::error::{Error, Result};

/// Outcome of checking a candidate P-set on a box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PSetReport {
    Valid { positions_checked: usize },
    Violation(Violation),
}

impl PSetReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, PSetReport::Valid { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A candidate position has a move to another candidate.
    LeadsIntoCandidate {
        from: Position,
        mv: Move,
        to: Position,
    },
    /// A position outside the candidate set has no move into it.
    NoMoveIntoCandidate { position: Position },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::LeadsIntoCandidate { from, mv, to } => write!(
                f,
                "{from} is in the candidate set but move {mv} reaches candidate {to}"
            ),
            Violation::NoMoveIntoCandidate { position } => write!(
                f,
                "{position} is not in the candidate set and has no move into it"
            ),
        }
    }
}

/// Checks on `[0,bound)^n` that `candidate` is exactly the set of
/// P-positions: no move joins two candidates, and every other position has a
/// move into the set. Positions are visited in lexicographic order and the
/// first violation is reported.
///
/// The box is closed under moves (moves only remove tokens), so every
/// witness needed for either condition lies inside it and the check is
/// exact for the box.
pub fn verify_p_set(
    spec: &GameSpec,
    candidate: &HashSet<Position>,
    bound: u64,
) -> Result<PSetReport> {
    if bound == 0 {
        return Err(Error::ZeroBound);
    }
    for c in candidate {
        check_dim(spec.n(), c.dim())?;
        if c.iter().any(|&x| x >= bound) {
            return Err(Error::OutsideBox(c.to_string(), bound));
        }
    }

    let mut checked = 0;
    for pos in box_positions(spec.n(), bound) {
        checked += 1;
        let moves = legal_moves(spec, &pos)?;
        if candidate.contains(&pos) {
            for mv in moves {
                let to = apply_move(&pos, &mv)?;
                if candidate.contains(&to) {
                    return Ok(PSetReport::Violation(Violation::LeadsIntoCandidate {
                        from: pos,
                        mv,
                        to,
                    }));
                }
            }
        } else {
            let mut rescued = false;
            for mv in &moves {
                if candidate.contains(&apply_move(&pos, mv)?) {
                    rescued = true;
                    break;
                }
            }
            if !rescued {
                return Ok(PSetReport::Violation(Violation::NoMoveIntoCandidate {
                    position: pos,
                }));
            }
        }
    }
    Ok(PSetReport::Valid {
        positions_checked: checked,
    })
}

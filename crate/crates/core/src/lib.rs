//! Solver and verification toolkit for n-heap Wythoff's game.
//!
//! * [`bitcore`]: binary digits and the Nim-sum.
//! * [`game`]: positions, move vectors, the retrograde box solver, the
//!   P-set verifier and the two-heap Beatty pairs.
//! * [`oracle`]: the Nim-sum test and winning-move construction for the
//!   canonical game on an odd number of heaps.
//! * [`sponge`]: discrete Sierpinski sponges, their decomposition, dyadic
//!   scaling, closure membership and box counts.
//! * `service`: the HTTP API (feature `service`).

pub mod bitcore;
pub mod budget;
pub mod error;
pub mod game;
pub mod oracle;
#[cfg(feature = "service")]
pub mod service;
pub mod sponge;

pub use budget::Budget;
pub use error::{Error, Result};
pub use game::{GameSpec, Move, MoveVector, Position, Verdict, VerdictTable};

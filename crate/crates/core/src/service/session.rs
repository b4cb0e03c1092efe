use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{apply_move, is_terminal, GameSpec, Move, Position};
use crate::oracle::{check_oracle_dim, engine_move};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    Human,
    Engine,
}

impl Player {
    fn other(self) -> Player {
        match self {
            Player::Human => Player::Engine,
            Player::Engine => Player::Human,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum Status {
    HumanToMove,
    EngineToMove,
    Finished { winner: Player },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ply {
    pub mover: Player,
    #[serde(rename = "move")]
    pub mv: Move,
}

/// One game of the canonical odd-n game between a human and the engine.
#[derive(Clone, Debug, Serialize)]
pub struct GameSession {
    pub id: String,
    pub n: usize,
    pub start: Position,
    pub current: Position,
    pub history: Vec<Ply>,
    pub status: Status,
    #[serde(skip)]
    spec: GameSpec,
}

/// Why a human move was refused.
#[derive(Debug, PartialEq, Eq)]
pub enum MoveRejection {
    NotHumansTurn,
    Illegal(Error),
}

impl GameSession {
    /// Starts a game; when the engine moves first it plays immediately.
    pub fn new(id: String, start: Position, human_first: bool) -> Result<Self> {
        let n = start.dim();
        check_oracle_dim(n)?;
        let spec = GameSpec::canonical(n)?;
        let first = if human_first {
            Player::Human
        } else {
            Player::Engine
        };
        let mut session = GameSession {
            id,
            n,
            current: start.clone(),
            start,
            history: Vec::new(),
            status: Status::EngineToMove,
            spec,
        };
        session.hand_turn_to(first)?;
        if session.status == Status::EngineToMove {
            session.engine_ply()?;
        }
        Ok(session)
    }

    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    /// Applies the human's move and, unless that ends the game, the engine's
    /// reply.
    pub fn human_move(&mut self, mv: Move) -> std::result::Result<(), MoveRejection> {
        if self.status != Status::HumanToMove {
            return Err(MoveRejection::NotHumansTurn);
        }
        if !self.spec.vectors().contains(&mv.vector) {
            return Err(MoveRejection::Illegal(Error::IllegalMove(format!(
                "{} is not a move vector of this game",
                mv.vector
            ))));
        }
        let next = apply_move(&self.current, &mv).map_err(MoveRejection::Illegal)?;
        self.current = next;
        self.history.push(Ply {
            mover: Player::Human,
            mv,
        });
        self.hand_turn_to(Player::Engine)
            .map_err(MoveRejection::Illegal)?;
        if self.status == Status::EngineToMove {
            self.engine_ply().map_err(MoveRejection::Illegal)?;
        }
        Ok(())
    }

    fn engine_ply(&mut self) -> Result<()> {
        let Some(mv) = engine_move(&self.current)? else {
            // hand_turn_to already finished the game on terminal positions
            return Ok(());
        };
        self.current = apply_move(&self.current, &mv)?;
        self.history.push(Ply {
            mover: Player::Engine,
            mv,
        });
        self.hand_turn_to(Player::Human)
    }

    fn hand_turn_to(&mut self, mover: Player) -> Result<()> {
        self.status = if is_terminal(&self.spec, &self.current)? {
            Status::Finished {
                winner: mover.other(),
            }
        } else if mover == Player::Human {
            Status::HumanToMove
        } else {
            Status::EngineToMove
        };
        Ok(())
    }

    /// Folds the history over the start position.
    pub fn replay(&self) -> Result<Position> {
        self.history
            .iter()
            .try_fold(self.start.clone(), |pos, ply| apply_move(&pos, &ply.mv))
    }
}

struct Entry {
    session: Arc<Mutex<GameSession>>,
    last_used: Instant,
}

/// In-memory sessions with idle expiry. Each session sits behind its own
/// lock, so requests on one session are serialized while distinct sessions
/// proceed in parallel.
pub struct SessionStore {
    entries: Mutex<HashMap<String, Entry>>,
    idle_ttl: Duration,
}

impl SessionStore {
    pub const DEFAULT_IDLE_TTL: Duration = Duration::from_secs(30 * 60);

    pub fn new(idle_ttl: Duration) -> Self {
        SessionStore {
            entries: Mutex::new(HashMap::new()),
            idle_ttl,
        }
    }

    pub fn create(&self, start: Position, human_first: bool) -> Result<Arc<Mutex<GameSession>>> {
        let id = format!("{:032x}", rand::random::<u128>());
        let session = Arc::new(Mutex::new(GameSession::new(
            id.clone(),
            start,
            human_first,
        )?));
        let mut entries = self.entries.lock().expect("session map poisoned");
        self.expire(&mut entries);
        entries.insert(
            id,
            Entry {
                session: session.clone(),
                last_used: Instant::now(),
            },
        );
        Ok(session)
    }

    pub fn get(&self, id: &str) -> Option<Arc<Mutex<GameSession>>> {
        let mut entries = self.entries.lock().expect("session map poisoned");
        self.expire(&mut entries);
        entries.get_mut(id).map(|e| {
            e.last_used = Instant::now();
            e.session.clone()
        })
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("session map poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn expire(&self, entries: &mut HashMap<String, Entry>) {
        let ttl = self.idle_ttl;
        entries.retain(|_, e| e.last_used.elapsed() < ttl);
    }
}

impl Default for SessionStore {
    fn default() -> Self {
        SessionStore::new(Self::DEFAULT_IDLE_TTL)
    }
}

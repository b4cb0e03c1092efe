//! JSON-over-HTTP API for the oracle, game sessions and sponge point clouds.
//!
//! | route | |
//! |---|---|
//! | `GET /api/verdict?pos=1,2,3` | `{"is_p":true,"nim_sum":0}` |
//! | `POST /api/session` | `{"n":3,"start":[1,1,1],"human_first":false}` → session |
//! | `POST /api/session/{id}/move` | `{"vector":[1,0,0],"k":1}` → session |
//! | `GET /api/session/{id}/hints` | winning moves from the current position |
//! | `GET /api/sponge?n=3&m=6` | `{"n":3,"m":6,"points":[[..],..]}` |

mod session;

use std::collections::HashMap;
use std::net::SocketAddr;
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::json;
use tower_http::cors::CorsLayer;

pub use session::{GameSession, MoveRejection, Player, Ply, SessionStore, Status};

use crate::bitcore::nim_sum;
use crate::budget::Budget;
use crate::error::Error;
use crate::game::{Move, Position};
use crate::oracle::{all_winning_moves, check_oracle_dim};
use crate::sponge::{export_points, generate_level_with_budget, ExportFormat};

#[derive(Clone)]
pub struct AppState {
    sessions: Arc<SessionStore>,
    sponge_cache: Arc<Mutex<HashMap<(usize, u32), Bytes>>>,
    budget: Budget,
}

impl AppState {
    pub fn new(sessions: SessionStore, budget: Budget) -> Self {
        AppState {
            sessions: Arc::new(sessions),
            sponge_cache: Arc::default(),
            budget,
        }
    }

    pub fn sessions(&self) -> &SessionStore {
        &self.sessions
    }
}

impl Default for AppState {
    fn default() -> Self {
        AppState::new(SessionStore::default(), Budget::default())
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            message: message.into(),
        }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        ApiError::new(StatusCode::BAD_REQUEST, message)
    }
}

impl From<Error> for ApiError {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::UnsupportedDimension(_) | Error::IllegalMove(_) => {
                StatusCode::UNPROCESSABLE_ENTITY
            }
            Error::BudgetExceeded { .. } => StatusCode::PAYLOAD_TOO_LARGE,
            Error::ParsePosition(_) | Error::EmptyInput | Error::DimensionMismatch { .. } => {
                StatusCode::BAD_REQUEST
            }
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        ApiError::new(status, e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(json!({ "error": self.message }))).into_response()
    }
}

type ApiResult<T> = Result<T, ApiError>;

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/api/verdict", get(verdict))
        .route("/api/session", post(create_session))
        .route("/api/session/{id}/move", post(play_move))
        .route("/api/session/{id}/hints", get(hints))
        .route("/api/sponge", get(sponge))
        .layer(CorsLayer::permissive())
        .with_state(state)
}

/// Binds `0.0.0.0:port` and serves until the process is stopped.
pub async fn serve(port: u16, state: AppState) -> std::io::Result<()> {
    let addr = SocketAddr::from(([0, 0, 0, 0], port));
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(state)).await
}

fn parse_json<T: for<'de> Deserialize<'de>>(body: &Bytes) -> ApiResult<T> {
    serde_json::from_slice(body).map_err(|e| ApiError::bad_request(format!("malformed body: {e}")))
}

fn query_param<'a>(q: &'a HashMap<String, String>, key: &str) -> ApiResult<&'a str> {
    q.get(key)
        .map(String::as_str)
        .ok_or_else(|| ApiError::bad_request(format!("missing query parameter {key:?}")))
}

async fn verdict(Query(q): Query<HashMap<String, String>>) -> ApiResult<Json<serde_json::Value>> {
    let pos: Position = query_param(&q, "pos")?.parse()?;
    check_oracle_dim(pos.dim())?;
    let s = nim_sum(&pos)?;
    Ok(Json(json!({ "is_p": s == 0, "nim_sum": s })))
}

#[derive(Deserialize)]
struct NewSession {
    n: usize,
    start: Vec<u64>,
    human_first: bool,
}

async fn create_session(
    State(state): State<AppState>,
    body: Bytes,
) -> ApiResult<(StatusCode, Json<GameSession>)> {
    let req: NewSession = parse_json(&body)?;
    if req.start.len() != req.n {
        return Err(ApiError::bad_request(format!(
            "start has {} heaps but n = {}",
            req.start.len(),
            req.n
        )));
    }
    check_oracle_dim(req.n)?;
    let session = state
        .sessions
        .create(Position::new(req.start)?, req.human_first)?;
    let snapshot = session.lock().expect("session poisoned").clone();
    Ok((StatusCode::CREATED, Json(snapshot)))
}

async fn play_move(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> ApiResult<Json<GameSession>> {
    let session = state
        .sessions
        .get(&id)
        .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no session {id}")))?;
    let mv: Move = parse_json(&body)?;
    let mut session = session.lock().expect("session poisoned");
    match session.human_move(mv) {
        Ok(()) => Ok(Json(session.clone())),
        Err(MoveRejection::NotHumansTurn) => Err(ApiError::new(
            StatusCode::CONFLICT,
            "it is not the human's turn",
        )),
        Err(MoveRejection::Illegal(e)) => Err(ApiError::new(
            StatusCode::UNPROCESSABLE_ENTITY,
            e.to_string(),
        )),
    }
}

async fn hints(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> ApiResult<Json<Vec<Move>>> {
    let session = state
        .sessions
        .get(&id)
        .ok_or_else(|| ApiError::new(StatusCode::NOT_FOUND, format!("no session {id}")))?;
    let session = session.lock().expect("session poisoned");
    Ok(Json(all_winning_moves(session.spec(), &session.current)?))
}

async fn sponge(
    State(state): State<AppState>,
    Query(q): Query<HashMap<String, String>>,
) -> ApiResult<Response> {
    let n: usize = query_param(&q, "n")?
        .parse()
        .map_err(|_| ApiError::bad_request("n must be a non-negative integer"))?;
    let m: u32 = query_param(&q, "m")?
        .parse()
        .map_err(|_| ApiError::bad_request("m must be a non-negative integer"))?;
    check_oracle_dim(n)?;

    let cached = state
        .sponge_cache
        .lock()
        .expect("cache poisoned")
        .get(&(n, m))
        .cloned();
    let body = match cached {
        Some(body) => body,
        None => {
            let level = generate_level_with_budget(n, m, state.budget)?;
            let body = Bytes::from(export_points(&level, ExportFormat::Json)?);
            state
                .sponge_cache
                .lock()
                .expect("cache poisoned")
                .insert((n, m), body.clone());
            body
        }
    };
    Ok((
        [
            (header::CONTENT_TYPE, "application/json"),
            (header::CACHE_CONTROL, "public, max-age=86400"),
        ],
        body,
    )
        .into_response())
}

//! JSON-over-HTTP play and analysis API.
//!
//! Sessions live in memory and expire after a TTL. With a journal path,
//! every creation and move is appended as one JSON line and replayed at
//! startup. The built UI bundle, when given, is served at `/`.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::future::Future;
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex, RwLock};
use std::time::{Duration, Instant};

use axum::body::Bytes;
use axum::extract::{Path as UrlPath, State};
use axum::http::StatusCode;
use axum::response::{Html, IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;
use tower_http::services::ServeDir;

use crate::engine::{Outcome, Solver};
use crate::play::{catalog, Analysis, GameSpec, GameState, MovePayload, PlayError, PositionView};

pub const DEFAULT_PORT: u16 = 8080;
pub const DEFAULT_TTL: Duration = Duration::from_secs(3600);

#[derive(Debug, Clone)]
pub struct ServiceConfig {
    /// Directory holding the built UI; a minimal index page otherwise.
    pub ui_dir: Option<PathBuf>,
    /// Append-only session journal.
    pub journal: Option<PathBuf>,
    pub session_ttl: Duration,
}

impl Default for ServiceConfig {
    fn default() -> Self {
        Self {
            ui_dir: None,
            journal: None,
            session_ttl: DEFAULT_TTL,
        }
    }
}

#[derive(Debug, Error)]
pub enum ServiceError {
    #[error("journal {path}: {source}")]
    Journal {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("journal {path}, line {line}: {message}")]
    JournalCorrupt {
        path: PathBuf,
        line: usize,
        message: String,
    },
    #[error("server: {0}")]
    Serve(std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mover {
    Human,
    Engine,
}

impl Mover {
    fn other(self) -> Self {
        match self {
            Mover::Human => Mover::Engine,
            Mover::Engine => Mover::Human,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SessionStatus {
    InProgress,
    HumanWon,
    EngineWon,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub mover: Mover,
    #[serde(rename = "move")]
    pub mv: MovePayload,
}

/// The engine's move as reported by `engine-move`.
#[derive(Debug, Clone, Serialize)]
pub struct EngineMoveNote {
    #[serde(rename = "move")]
    pub mv: MovePayload,
    /// Outcome label of the position the engine left.
    pub left: Outcome,
}

#[derive(Debug, Clone, Serialize)]
pub struct SessionView {
    pub id: String,
    pub game: &'static str,
    pub params: Value,
    pub position: PositionView,
    pub legal_moves: Vec<MovePayload>,
    pub history: Vec<HistoryEntry>,
    pub status: SessionStatus,
    /// `None` once the game is over.
    pub to_move: Option<Mover>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine_move: Option<EngineMoveNote>,
}

struct Session {
    id: String,
    spec: GameSpec,
    state: GameState,
    to_move: Mover,
    history: Vec<HistoryEntry>,
    solver: Solver,
    touched: Instant,
}

impl Session {
    fn status(&self) -> SessionStatus {
        if !self.state.is_terminal() {
            SessionStatus::InProgress
        } else {
            // Normal play: whoever faces the empty position has lost.
            match self.to_move {
                Mover::Human => SessionStatus::EngineWon,
                Mover::Engine => SessionStatus::HumanWon,
            }
        }
    }

    fn view(&self, engine_move: Option<EngineMoveNote>) -> SessionView {
        let status = self.status();
        let params = serde_json::to_value(&self.spec)
            .ok()
            .and_then(|v| v.get("params").cloned())
            .unwrap_or(Value::Null);
        SessionView {
            id: self.id.clone(),
            game: self.spec.game_id(),
            params,
            position: self.state.view(),
            legal_moves: self.state.legal_moves(),
            history: self.history.clone(),
            status,
            to_move: (status == SessionStatus::InProgress).then_some(self.to_move),
            engine_move,
        }
    }

    fn push(&mut self, mover: Mover, mv: MovePayload) -> Result<(), PlayError> {
        self.state = self.state.apply(&mv)?;
        self.history.push(HistoryEntry { mover, mv });
        self.to_move = mover.other();
        Ok(())
    }

    /// Plays the engine's choice and labels the position it leaves.
    fn engine_turn(&mut self) -> Result<Option<EngineMoveNote>, PlayError> {
        let Some(mv) = self.state.best_move(&mut self.solver)? else {
            return Ok(None);
        };
        self.push(Mover::Engine, mv.clone())?;
        let left = self.state.outcome(&mut self.solver)?;
        Ok(Some(EngineMoveNote { mv, left }))
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(tag = "event", rename_all = "snake_case")]
enum JournalEvent {
    Create {
        id: String,
        spec: GameSpec,
        #[serde(default)]
        engine_first: bool,
    },
    Move {
        id: String,
        mover: Mover,
        #[serde(rename = "move")]
        mv: MovePayload,
    },
}

type SessionRef = Arc<Mutex<Session>>;

struct AppState {
    sessions: RwLock<HashMap<String, SessionRef>>,
    next_id: AtomicU64,
    ttl: Duration,
    journal: Option<(PathBuf, Mutex<File>)>,
}

/// API error carried to the client as `{code, message}`.
#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, code: &'static str, message: impl Into<String>) -> Self {
        Self {
            status,
            code,
            message: message.into(),
        }
    }

    fn not_found(id: &str) -> Self {
        Self::new(
            StatusCode::NOT_FOUND,
            "not_found",
            format!("no session `{id}`"),
        )
    }

    fn conflict(message: impl Into<String>) -> Self {
        Self::new(StatusCode::CONFLICT, "conflict", message)
    }
}

impl From<PlayError> for ApiError {
    fn from(e: PlayError) -> Self {
        let (status, code) = match &e {
            PlayError::InvalidParams(_) => (StatusCode::BAD_REQUEST, "invalid_params"),
            PlayError::TooLarge(_) => (StatusCode::UNPROCESSABLE_ENTITY, "too_large"),
            PlayError::IllegalMove(_) => (StatusCode::UNPROCESSABLE_ENTITY, "illegal_move"),
            PlayError::Solve(_) => (StatusCode::UNPROCESSABLE_ENTITY, "too_large"),
        };
        Self::new(status, code, e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = serde_json::json!({ "code": self.code, "message": self.message });
        (self.status, Json(body)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

fn parse_body<T: for<'de> Deserialize<'de>>(body: &[u8]) -> Result<T, ApiError> {
    serde_json::from_slice(body)
        .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "bad_request", e.to_string()))
}

impl AppState {
    fn open(config: &ServiceConfig) -> Result<Self, ServiceError> {
        let state = AppState {
            sessions: RwLock::new(HashMap::new()),
            next_id: AtomicU64::new(1),
            ttl: config.session_ttl,
            journal: None,
        };
        let Some(path) = &config.journal else {
            return Ok(state);
        };
        let io = |source| ServiceError::Journal {
            path: path.clone(),
            source,
        };
        if path.exists() {
            state.replay(path)?;
        }
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .map_err(io)?;
        Ok(AppState {
            journal: Some((path.clone(), Mutex::new(file))),
            ..state
        })
    }

    fn replay(&self, path: &Path) -> Result<(), ServiceError> {
        let file = File::open(path).map_err(|source| ServiceError::Journal {
            path: path.to_path_buf(),
            source,
        })?;
        for (i, line) in BufReader::new(file).lines().enumerate() {
            let corrupt = |message: String| ServiceError::JournalCorrupt {
                path: path.to_path_buf(),
                line: i + 1,
                message,
            };
            let line = line.map_err(|e| corrupt(e.to_string()))?;
            if line.trim().is_empty() {
                continue;
            }
            let event: JournalEvent =
                serde_json::from_str(&line).map_err(|e| corrupt(e.to_string()))?;
            match event {
                JournalEvent::Create {
                    id,
                    spec,
                    engine_first,
                } => {
                    let state = spec.start().map_err(|e| corrupt(e.to_string()))?;
                    if let Some(n) = id
                        .strip_prefix('s')
                        .and_then(|h| u64::from_str_radix(h, 16).ok())
                    {
                        self.next_id.fetch_max(n + 1, Ordering::Relaxed);
                    }
                    self.insert(Session {
                        id,
                        spec,
                        state,
                        to_move: if engine_first {
                            Mover::Engine
                        } else {
                            Mover::Human
                        },
                        history: Vec::new(),
                        solver: Solver::new(),
                        touched: Instant::now(),
                    });
                }
                JournalEvent::Move { id, mover, mv } => {
                    let session = self
                        .get(&id)
                        .ok_or_else(|| corrupt(format!("move for unknown session {id}")))?;
                    let mut s = session.lock().unwrap_or_else(|p| p.into_inner());
                    if s.to_move != mover {
                        return Err(corrupt(format!("out-of-turn move in {id}")));
                    }
                    s.push(mover, mv).map_err(|e| corrupt(e.to_string()))?;
                }
            }
        }
        Ok(())
    }

    fn record(&self, event: &JournalEvent) {
        let Some((path, file)) = &self.journal else {
            return;
        };
        let line = serde_json::to_string(event).expect("journal events serialize");
        let mut f = file.lock().unwrap_or_else(|p| p.into_inner());
        if let Err(e) = writeln!(f, "{line}").and_then(|_| f.flush()) {
            eprintln!("warning: journal {}: {e}", path.display());
        }
    }

    fn insert(&self, session: Session) -> SessionRef {
        let id = session.id.clone();
        let handle = Arc::new(Mutex::new(session));
        self.sessions
            .write()
            .unwrap_or_else(|p| p.into_inner())
            .insert(id, Arc::clone(&handle));
        handle
    }

    fn get(&self, id: &str) -> Option<SessionRef> {
        self.sessions
            .read()
            .unwrap_or_else(|p| p.into_inner())
            .get(id)
            .cloned()
    }

    /// Drops sessions idle for longer than the TTL.
    fn expire(&self) {
        let ttl = self.ttl;
        self.sessions
            .write()
            .unwrap_or_else(|p| p.into_inner())
            .retain(|_, s| match s.try_lock() {
                Ok(s) => s.touched.elapsed() <= ttl,
                Err(_) => true,
            });
    }

    fn lookup(&self, id: &str) -> Result<SessionRef, ApiError> {
        self.expire();
        self.get(id).ok_or_else(|| ApiError::not_found(id))
    }
}

#[derive(Deserialize)]
struct CreateRequest {
    game: String,
    #[serde(default)]
    params: Value,
    #[serde(default)]
    engine_first: bool,
}

#[derive(Deserialize)]
struct MoveRequest {
    #[serde(rename = "move")]
    mv: MovePayload,
}

/// Runs `f` on the session off the async runtime, one caller at a time.
async fn with_session<T, F>(app: &Arc<AppState>, id: String, f: F) -> Result<T, ApiError>
where
    T: Send + 'static,
    F: FnOnce(&AppState, &mut Session) -> Result<T, ApiError> + Send + 'static,
{
    let handle = app.lookup(&id)?;
    let app = Arc::clone(app);
    tokio::task::spawn_blocking(move || {
        let mut s = handle.lock().unwrap_or_else(|p| p.into_inner());
        s.touched = Instant::now();
        f(&app, &mut s)
    })
    .await
    .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, "internal", e.to_string()))?
}

async fn list_games() -> Json<Value> {
    Json(serde_json::json!({ "games": catalog() }))
}

async fn create_session(State(app): State<Arc<AppState>>, body: Bytes) -> ApiResult<SessionView> {
    let req: CreateRequest = parse_body(&body)?;
    let spec: GameSpec = serde_json::from_value(serde_json::json!({
        "game": req.game,
        "params": req.params,
    }))
    .map_err(|e| ApiError::new(StatusCode::BAD_REQUEST, "invalid_params", e.to_string()))?;
    let state = spec.start()?;
    app.expire();
    let id = format!("s{:08x}", app.next_id.fetch_add(1, Ordering::Relaxed));
    let session = Session {
        id: id.clone(),
        spec: spec.clone(),
        state,
        to_move: if req.engine_first {
            Mover::Engine
        } else {
            Mover::Human
        },
        history: Vec::new(),
        solver: Solver::new(),
        touched: Instant::now(),
    };
    app.record(&JournalEvent::Create {
        id: id.clone(),
        spec,
        engine_first: req.engine_first,
    });
    if req.engine_first {
        app.insert(session);
        return engine_move(State(app), UrlPath(id)).await;
    }
    let view = session.view(None);
    app.insert(session);
    Ok(Json(view))
}

async fn get_session(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
) -> ApiResult<SessionView> {
    with_session(&app, id, |_, s| Ok(s.view(None)))
        .await
        .map(Json)
}

async fn human_move(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
    body: Bytes,
) -> ApiResult<SessionView> {
    let req: MoveRequest = parse_body(&body)?;
    with_session(&app, id, move |app, s| {
        if s.status() != SessionStatus::InProgress {
            return Err(ApiError::conflict("game is over"));
        }
        if s.to_move != Mover::Human {
            return Err(ApiError::conflict("it is the engine's turn"));
        }
        let mv = req.mv;
        s.push(Mover::Human, mv.clone())?;
        app.record(&JournalEvent::Move {
            id: s.id.clone(),
            mover: Mover::Human,
            mv,
        });
        Ok(s.view(None))
    })
    .await
    .map(Json)
}

async fn engine_move(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
) -> ApiResult<SessionView> {
    with_session(&app, id, |app, s| {
        if s.status() != SessionStatus::InProgress {
            return Err(ApiError::conflict("game is over"));
        }
        if s.to_move != Mover::Engine {
            return Err(ApiError::conflict("it is the human's turn"));
        }
        let note = s.engine_turn()?;
        if let Some(n) = &note {
            app.record(&JournalEvent::Move {
                id: s.id.clone(),
                mover: Mover::Engine,
                mv: n.mv.clone(),
            });
        }
        Ok(s.view(note))
    })
    .await
    .map(Json)
}

async fn analysis(
    State(app): State<Arc<AppState>>,
    UrlPath(id): UrlPath<String>,
) -> ApiResult<Analysis> {
    with_session(&app, id, |_, s| Ok(s.state.analyze(&mut s.solver)?))
        .await
        .map(Json)
}

const BUILTIN_INDEX: &str = "<!doctype html>
<html><head><meta charset=\"utf-8\"><title>impartial</title></head>
<body><h1>impartial</h1>
<p>No UI bundle is being served. The JSON API is at <a href=\"/api/games\">/api/games</a>.</p>
</body></html>
";

async fn builtin_index() -> Html<&'static str> {
    Html(BUILTIN_INDEX)
}

/// The full application: API routes plus static hosting.
pub fn router(config: &ServiceConfig) -> Result<Router, ServiceError> {
    let app = Arc::new(AppState::open(config)?);
    let api = Router::new()
        .route("/api/games", get(list_games))
        .route("/api/sessions", post(create_session))
        .route("/api/sessions/:id", get(get_session))
        .route("/api/sessions/:id/moves", post(human_move))
        .route("/api/sessions/:id/engine-move", post(engine_move))
        .route("/api/sessions/:id/analysis", get(analysis))
        .with_state(app);
    Ok(match &config.ui_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api.route("/", get(builtin_index)),
    })
}

/// Serves on `listener` until `shutdown` resolves.
pub async fn serve(
    listener: tokio::net::TcpListener,
    config: &ServiceConfig,
    shutdown: impl Future<Output = ()> + Send + 'static,
) -> Result<(), ServiceError> {
    let app = router(config)?;
    axum::serve(listener, app)
        .with_graceful_shutdown(shutdown)
        .await
        .map_err(ServiceError::Serve)
}

//! One serializable interface over all seven games, used by the HTTP
//! service and the terminal player.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{Grundy, Outcome, Position, SolveError, Solver};
use crate::graph::{GraphFamily, RaePosition, SimpleGraph};
use crate::grid::{Axis, CellConfig, DiamondShape, LineMove, SquareMove, TokenConfig};
use crate::pile::{ChocolatePosition, DemonPosition, NoFactorPosition, SfpMove, SfpPosition};

pub const MAX_CHOCOLATE_STONES: u64 = 10_000;
pub const MAX_CHOCOLATE_MODULUS: u64 = 1_000;
pub const MAX_DEMON_COINS: u64 = 1_000_000;
pub const MAX_SFP: u64 = 100_000;
pub const MAX_NOFACTOR: u32 = 12;
pub const MAX_DIAMOND_C: u32 = 4;
pub const MAX_CROSS_ARM: u32 = 15;
pub const MAX_TOKEN_RECT_SIDE: u32 = 6;
pub const MAX_CUSTOM_TOKENS: usize = 20;
pub const MAX_STRIP_CELLS: u32 = 120;
pub const MAX_BLOCK_CELLS: u32 = 20;
pub const MAX_CUSTOM_CELLS: usize = 20;
pub const MAX_GRAPH_VERTICES: usize = 24;
pub const MAX_COMPLETE_VERTICES: usize = 16;
pub const MAX_SPARSE_FAMILY_VERTICES: usize = 64;

#[derive(Debug, Error)]
pub enum PlayError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl From<crate::ParamError> for PlayError {
    fn from(e: crate::ParamError) -> Self {
        PlayError::InvalidParams(e.0)
    }
}

impl From<crate::graph::GraphError> for PlayError {
    fn from(e: crate::graph::GraphError) -> Self {
        PlayError::InvalidParams(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum TokenShape {
    Diamond { c: u32 },
    Cross { m: u32, n: u32 },
    Rect { m: u32, n: u32 },
    Custom { tokens: Vec<(i32, i32)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum CellShape {
    Rect { rows: u32, cols: u32 },
    Custom { cells: Vec<(i32, i32)> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum GraphShape {
    Complete {
        n: usize,
    },
    Star {
        n: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Custom {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

/// A game and its starting parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "game", content = "params", rename_all = "kebab-case")]
pub enum GameSpec {
    Chocolate { modulus: u64, stones: u64 },
    Diamond(TokenShape),
    Demon { coins: u64 },
    SumFromProduct { n: u64 },
    RemoveASquare(CellShape),
    RemoveAnEdge(GraphShape),
    NoFactor { n: u32 },
}

fn too_large(what: String) -> PlayError {
    PlayError::TooLarge(what)
}

fn check(ok: bool, err: impl FnOnce() -> PlayError) -> Result<(), PlayError> {
    if ok {
        Ok(())
    } else {
        Err(err())
    }
}

impl GameSpec {
    pub fn game_id(&self) -> &'static str {
        match self {
            GameSpec::Chocolate { .. } => "chocolate",
            GameSpec::Diamond(_) => "diamond",
            GameSpec::Demon { .. } => "demon",
            GameSpec::SumFromProduct { .. } => "sum-from-product",
            GameSpec::RemoveASquare(_) => "remove-a-square",
            GameSpec::RemoveAnEdge(_) => "remove-an-edge",
            GameSpec::NoFactor { .. } => "no-factor",
        }
    }

    /// Validates the parameters and the size bounds and builds the start.
    pub fn start(&self) -> Result<GameState, PlayError> {
        Ok(match self {
            GameSpec::Chocolate { modulus, stones } => {
                check(*stones <= MAX_CHOCOLATE_STONES, || {
                    too_large(format!("at most {MAX_CHOCOLATE_STONES} stones"))
                })?;
                check(*modulus <= MAX_CHOCOLATE_MODULUS, || {
                    too_large(format!("modulus at most {MAX_CHOCOLATE_MODULUS}"))
                })?;
                GameState::Chocolate(ChocolatePosition::new(*modulus, *stones)?)
            }
            GameSpec::Demon { coins } => {
                check(*coins <= MAX_DEMON_COINS, || {
                    too_large(format!("at most {MAX_DEMON_COINS} coins"))
                })?;
                GameState::Demon(DemonPosition::new(*coins))
            }
            GameSpec::SumFromProduct { n } => {
                check(*n <= MAX_SFP, || too_large(format!("n at most {MAX_SFP}")))?;
                GameState::SumFromProduct(SfpPosition::new(*n)?)
            }
            GameSpec::NoFactor { n } => {
                check(*n >= 1, || {
                    PlayError::InvalidParams("board size must be at least 1".into())
                })?;
                check(*n <= MAX_NOFACTOR, || {
                    too_large(format!("board size at most {MAX_NOFACTOR}"))
                })?;
                GameState::NoFactor(NoFactorPosition::new(*n)?)
            }
            GameSpec::Diamond(shape) => GameState::Diamond(token_start(shape)?),
            GameSpec::RemoveASquare(shape) => GameState::RemoveASquare(cell_start(shape)?),
            GameSpec::RemoveAnEdge(shape) => {
                GameState::RemoveAnEdge(RaePosition::new(Arc::new(graph_start(shape)?)))
            }
        })
    }
}

fn token_start(shape: &TokenShape) -> Result<TokenConfig, PlayError> {
    match shape {
        TokenShape::Diamond { c } => {
            check(*c <= MAX_DIAMOND_C, || {
                too_large(format!("diamond c at most {MAX_DIAMOND_C}"))
            })?;
            Ok(DiamondShape::Diamond { c: *c }.config()?)
        }
        TokenShape::Cross { m, n } => {
            check(*m <= MAX_CROSS_ARM && *n <= MAX_CROSS_ARM, || {
                too_large(format!("cross arms at most {MAX_CROSS_ARM}"))
            })?;
            Ok(DiamondShape::Cross { m: *m, n: *n }.config()?)
        }
        TokenShape::Rect { m, n } => {
            check(
                *m <= MAX_TOKEN_RECT_SIDE && *n <= MAX_TOKEN_RECT_SIDE,
                || too_large(format!("rectangle sides at most {MAX_TOKEN_RECT_SIDE}")),
            )?;
            Ok(DiamondShape::Rect { m: *m, n: *n }.config()?)
        }
        TokenShape::Custom { tokens } => {
            let config = TokenConfig::from_points(tokens.iter().copied());
            check(!config.is_empty(), || {
                PlayError::InvalidParams("no tokens given".into())
            })?;
            check(config.len() <= MAX_CUSTOM_TOKENS, || {
                too_large(format!("at most {MAX_CUSTOM_TOKENS} custom tokens"))
            })?;
            Ok(config)
        }
    }
}

fn cell_start(shape: &CellShape) -> Result<CellConfig, PlayError> {
    match shape {
        CellShape::Rect { rows, cols } => {
            check(*rows >= 1 && *cols >= 1, || {
                PlayError::InvalidParams("rectangle sides must be at least 1".into())
            })?;
            let cells = rows * cols;
            let limit = if (*rows).min(*cols) <= 2 {
                MAX_STRIP_CELLS
            } else {
                MAX_BLOCK_CELLS
            };
            check(cells <= limit, || {
                too_large(format!("{rows}x{cols} exceeds {limit} cells"))
            })?;
            Ok(CellConfig::rect(*rows, *cols))
        }
        CellShape::Custom { cells } => {
            let config = CellConfig::from_cells(cells.iter().copied());
            check(!config.is_empty(), || {
                PlayError::InvalidParams("no cells given".into())
            })?;
            check(config.len() <= MAX_CUSTOM_CELLS, || {
                too_large(format!("at most {MAX_CUSTOM_CELLS} custom cells"))
            })?;
            Ok(config)
        }
    }
}

fn graph_start(shape: &GraphShape) -> Result<SimpleGraph, PlayError> {
    let family = match *shape {
        GraphShape::Complete { n } => {
            check(n <= MAX_COMPLETE_VERTICES, || {
                too_large(format!(
                    "complete graphs up to {MAX_COMPLETE_VERTICES} vertices"
                ))
            })?;
            GraphFamily::Complete(n)
        }
        GraphShape::Star { n } => GraphFamily::Star(n),
        GraphShape::Path { n } => GraphFamily::Path(n),
        GraphShape::Cycle { n } => {
            check(n >= 3, || {
                PlayError::InvalidParams("cycle needs n >= 3".into())
            })?;
            GraphFamily::Cycle(n)
        }
        GraphShape::Custom { n, ref edges } => {
            check(n <= MAX_GRAPH_VERTICES, || {
                too_large(format!("custom graphs up to {MAX_GRAPH_VERTICES} vertices"))
            })?;
            return Ok(SimpleGraph::new(n, edges)?);
        }
    };
    check(family.size() >= 1, || {
        PlayError::InvalidParams("graph needs a vertex".into())
    })?;
    check(family.size() <= MAX_SPARSE_FAMILY_VERTICES, || {
        too_large(format!("at most {MAX_SPARSE_FAMILY_VERTICES} vertices"))
    })?;
    Ok(family.build()?)
}

/// A move in wire form. Serialized externally tagged, e.g. `{"take": 2}`,
/// `{"line": {"axis": "row", "coordinate": 0}}`, `{"pair": [0, 1]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MovePayload {
    Take(u64),
    Factors { a: u64, b: u64 },
    Line(LineMove),
    Square(SquareMove),
    Pair([usize; 2]),
    Subset(Vec<u32>),
}

impl MovePayload {
    fn normalized(&self) -> Self {
        match self {
            MovePayload::Pair([u, v]) => MovePayload::Pair([*u.min(v), *u.max(v)]),
            MovePayload::Subset(xs) => {
                let set: BTreeSet<u32> = xs.iter().copied().collect();
                MovePayload::Subset(set.into_iter().collect())
            }
            MovePayload::Factors { a, b } => MovePayload::Factors {
                a: *a.min(b),
                b: *a.max(b),
            },
            other => other.clone(),
        }
    }

    /// Short human-readable form, also accepted by [`GameState::parse_move`].
    pub fn to_text(&self) -> String {
        match self {
            MovePayload::Take(t) => format!("take {t}"),
            MovePayload::Factors { a, b } => format!("{a}x{b}"),
            MovePayload::Line(l) => match l.axis {
                Axis::Row => format!("row {}", l.coordinate),
                Axis::Column => format!("col {}", l.coordinate),
            },
            MovePayload::Square(s) => format!("{} {} {}", s.x, s.y, s.size),
            MovePayload::Pair([u, v]) => format!("{u} {v}"),
            MovePayload::Subset(xs) => xs
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

trait Codec: Position {
    fn encode(&self, mv: &Self::Move) -> MovePayload;
}

impl Codec for ChocolatePosition {
    fn encode(&self, mv: &u64) -> MovePayload {
        MovePayload::Take(*mv)
    }
}

impl Codec for DemonPosition {
    fn encode(&self, mv: &u64) -> MovePayload {
        MovePayload::Take(*mv)
    }
}

impl Codec for SfpPosition {
    fn encode(&self, mv: &SfpMove) -> MovePayload {
        MovePayload::Factors { a: mv.a, b: mv.b }
    }
}

impl Codec for NoFactorPosition {
    fn encode(&self, mv: &u64) -> MovePayload {
        MovePayload::Subset(crate::pile::nofactor::mask_numbers(*mv))
    }
}

impl Codec for TokenConfig {
    fn encode(&self, mv: &LineMove) -> MovePayload {
        MovePayload::Line(*mv)
    }
}

impl Codec for CellConfig {
    fn encode(&self, mv: &SquareMove) -> MovePayload {
        MovePayload::Square(*mv)
    }
}

impl Codec for RaePosition {
    fn encode(&self, &(u, v): &(usize, usize)) -> MovePayload {
        MovePayload::Pair([u, v])
    }
}

fn legal<P: Codec>(pos: &P) -> Vec<MovePayload> {
    pos.moves().iter().map(|m| pos.encode(m)).collect()
}

fn apply_payload<P: Codec>(pos: &P, payload: &MovePayload) -> Result<P, PlayError> {
    let wanted = payload.normalized();
    pos.moves()
        .iter()
        .find(|m| pos.encode(m) == wanted)
        .map(|m| pos.play(m))
        .ok_or_else(|| PlayError::IllegalMove(payload.to_text()))
}

fn engine_choice<P: Codec>(pos: &P, solver: &mut Solver) -> Result<Option<MovePayload>, PlayError> {
    Ok(solver.best_move(pos)?.map(|m| pos.encode(&m)))
}

fn analysis<P: Codec>(
    pos: &P,
    solver: &mut Solver,
    with_grundy: bool,
) -> Result<Analysis, PlayError> {
    let grundy = if with_grundy {
        Some(solver.grundy(pos)?)
    } else {
        None
    };
    let outcome = match grundy {
        Some(g) => Outcome::from_grundy(g),
        None => solver.outcome(pos)?,
    };
    let moves = solver
        .move_outcomes(pos)?
        .into_iter()
        .map(|(m, leaves)| MoveAnalysis {
            mv: pos.encode(&m),
            leaves,
        })
        .collect();
    Ok(Analysis {
        outcome,
        grundy,
        moves,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveAnalysis {
    #[serde(rename = "move")]
    pub mv: MovePayload,
    /// Outcome label of the position the move leaves.
    pub leaves: Outcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub outcome: Outcome,
    /// Absent for No-Factor, which is solved by outcome search only.
    pub grundy: Option<Grundy>,
    pub moves: Vec<MoveAnalysis>,
}

impl Analysis {
    pub fn winning_moves(&self) -> Vec<&MovePayload> {
        self.moves
            .iter()
            .filter(|m| m.leaves.is_p())
            .map(|m| &m.mv)
            .collect()
    }
}

/// Render-oriented snapshot of a position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PositionView {
    Pile {
        count: u64,
        modulus: Option<u64>,
    },
    Number {
        n: u64,
    },
    Tokens {
        tokens: Vec<(i32, i32)>,
    },
    Cells {
        cells: Vec<(i32, i32)>,
    },
    Graph {
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        alive: Vec<usize>,
    },
    Numbers {
        size: u32,
        remaining: Vec<u32>,
    },
}

/// Current position of any of the seven games.
#[derive(Debug, Clone)]
pub enum GameState {
    Chocolate(ChocolatePosition),
    Diamond(TokenConfig),
    Demon(DemonPosition),
    SumFromProduct(SfpPosition),
    RemoveASquare(CellConfig),
    RemoveAnEdge(RaePosition),
    NoFactor(NoFactorPosition),
}

macro_rules! each {
    ($state:expr, $p:ident => $body:expr) => {
        match $state {
            GameState::Chocolate($p) => $body,
            GameState::Diamond($p) => $body,
            GameState::Demon($p) => $body,
            GameState::SumFromProduct($p) => $body,
            GameState::RemoveASquare($p) => $body,
            GameState::RemoveAnEdge($p) => $body,
            GameState::NoFactor($p) => $body,
        }
    };
}

impl GameState {
    pub fn legal_moves(&self) -> Vec<MovePayload> {
        each!(self, p => legal(p))
    }

    pub fn is_terminal(&self) -> bool {
        each!(self, p => p.is_terminal())
    }

    pub fn apply(&self, payload: &MovePayload) -> Result<GameState, PlayError> {
        Ok(match self {
            GameState::Chocolate(p) => GameState::Chocolate(apply_payload(p, payload)?),
            GameState::Diamond(p) => GameState::Diamond(apply_payload(p, payload)?),
            GameState::Demon(p) => GameState::Demon(apply_payload(p, payload)?),
            GameState::SumFromProduct(p) => GameState::SumFromProduct(apply_payload(p, payload)?),
            GameState::RemoveASquare(p) => GameState::RemoveASquare(apply_payload(p, payload)?),
            GameState::RemoveAnEdge(p) => GameState::RemoveAnEdge(apply_payload(p, payload)?),
            GameState::NoFactor(p) => GameState::NoFactor(apply_payload(p, payload)?),
        })
    }

    /// The engine's move, `None` at a terminal position. Use one solver per
    /// game: cache keys are not namespaced by game.
    pub fn best_move(&self, solver: &mut Solver) -> Result<Option<MovePayload>, PlayError> {
        each!(self, p => engine_choice(p, solver))
    }

    pub fn outcome(&self, solver: &mut Solver) -> Result<Outcome, PlayError> {
        Ok(each!(self, p => solver.outcome(p))?)
    }

    pub fn analyze(&self, solver: &mut Solver) -> Result<Analysis, PlayError> {
        let with_grundy = !matches!(self, GameState::NoFactor(_));
        each!(self, p => analysis(p, solver, with_grundy))
    }

    pub fn view(&self) -> PositionView {
        match self {
            GameState::Chocolate(p) => PositionView::Pile {
                count: p.stones(),
                modulus: Some(p.modulus()),
            },
            GameState::Demon(p) => PositionView::Pile {
                count: p.coins(),
                modulus: None,
            },
            GameState::SumFromProduct(p) => PositionView::Number { n: p.value() },
            GameState::Diamond(p) => PositionView::Tokens {
                tokens: p.points().copied().collect(),
            },
            GameState::RemoveASquare(p) => PositionView::Cells {
                cells: p.cells().copied().collect(),
            },
            GameState::RemoveAnEdge(p) => PositionView::Graph {
                vertex_count: p.graph().vertex_count(),
                edges: p.graph().edges().to_vec(),
                alive: (0..p.graph().vertex_count())
                    .filter(|v| p.alive() & (1 << v) != 0)
                    .collect(),
            },
            GameState::NoFactor(p) => PositionView::Numbers {
                size: p.size(),
                remaining: p.numbers(),
            },
        }
    }

    /// Plain-text picture for the terminal.
    pub fn describe(&self) -> String {
        match self {
            GameState::Chocolate(p) => {
                format!("{} stones (modulus {})", p.stones(), p.modulus())
            }
            GameState::Demon(p) => format!("{} coins", p.coins()),
            GameState::SumFromProduct(p) => format!("n = {}", p.value()),
            GameState::NoFactor(p) => format!("board: {:?}", p.numbers()),
            GameState::Diamond(p) => {
                let pts: Vec<_> = p.points().copied().collect();
                draw(&pts, 'o')
            }
            GameState::RemoveASquare(p) => {
                let pts: Vec<_> = p.cells().copied().collect();
                draw(&pts, '#')
            }
            GameState::RemoveAnEdge(p) => {
                let edges: Vec<String> =
                    p.moves().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                format!("live edges: {}", edges.join(" "))
            }
        }
    }

    /// Parses a move typed at the terminal, or a JSON payload.
    pub fn parse_move(&self, text: &str) -> Result<MovePayload, PlayError> {
        let text = text.trim();
        let bad = || PlayError::IllegalMove(format!("cannot read `{text}`"));
        if text.starts_with('{') {
            return serde_json::from_str(text).map_err(|_| bad());
        }
        let words: Vec<&str> = text
            .split(|c: char| c.is_whitespace() || c == ',' || c == 'x' || c == '*')
            .filter(|w| !w.is_empty())
            .collect();
        let ints = |ws: &[&str]| -> Result<Vec<i64>, PlayError> {
            ws.iter()
                .map(|w| w.parse::<i64>().map_err(|_| bad()))
                .collect()
        };
        let words: Vec<&str> = words.into_iter().filter(|w| *w != "take").collect();
        match self {
            GameState::Chocolate(_) | GameState::Demon(_) => match ints(&words)?.as_slice() {
                [t] if *t >= 0 => Ok(MovePayload::Take(*t as u64)),
                _ => Err(bad()),
            },
            GameState::SumFromProduct(_) => match ints(&words)?.as_slice() {
                [a, b] if *a > 0 && *b > 0 => Ok(MovePayload::Factors {
                    a: *a as u64,
                    b: *b as u64,
                }),
                _ => Err(bad()),
            },
            GameState::Diamond(_) => {
                let (axis, rest) = words.split_first().ok_or_else(bad)?;
                let axis = match *axis {
                    "row" | "r" => Axis::Row,
                    "col" | "column" | "c" => Axis::Column,
                    _ => return Err(bad()),
                };
                match ints(rest)?.as_slice() {
                    [k] => Ok(MovePayload::Line(LineMove {
                        axis,
                        coordinate: *k as i32,
                    })),
                    _ => Err(bad()),
                }
            }
            GameState::RemoveASquare(_) => match ints(&words)?.as_slice() {
                [x, y, k] if *k > 0 => Ok(MovePayload::Square(SquareMove {
                    x: *x as i32,
                    y: *y as i32,
                    size: *k as u32,
                })),
                _ => Err(bad()),
            },
            GameState::RemoveAnEdge(_) => match ints(&words)?.as_slice() {
                [u, v] if *u >= 0 && *v >= 0 => Ok(MovePayload::Pair([*u as usize, *v as usize])),
                _ => Err(bad()),
            },
            GameState::NoFactor(_) => {
                let xs = ints(&words)?;
                if xs.is_empty() || xs.iter().any(|&x| x <= 0) {
                    return Err(bad());
                }
                Ok(MovePayload::Subset(
                    xs.into_iter().map(|x| x as u32).collect(),
                ))
            }
        }
    }
}

fn draw(points: &[(i32, i32)], mark: char) -> String {
    if points.is_empty() {
        return "(empty)".to_string();
    }
    let min_x = points.iter().map(|p| p.0).min().unwrap_or(0);
    let max_x = points.iter().map(|p| p.0).max().unwrap_or(0);
    let min_y = points.iter().map(|p| p.1).min().unwrap_or(0);
    let max_y = points.iter().map(|p| p.1).max().unwrap_or(0);
    let set: BTreeSet<(i32, i32)> = points.iter().copied().collect();
    let mut out = String::new();
    for y in (min_y..=max_y).rev() {
        let _ = write!(out, "{y:>4} ");
        for x in min_x..=max_x {
            out.push(if set.contains(&(x, y)) { mark } else { '.' });
        }
        out.push('\n');
    }
    let _ = write!(out, "     x from {min_x} to {max_x}");
    out
}

/// Parameter description for the game catalog.
#[derive(Debug, Clone, Serialize)]
pub struct ParamSchema {
    pub name: &'static str,
    /// `integer`, `choice`, `points` or `edges`.
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub choices: Vec<&'static str>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GameInfo {
    pub id: &'static str,
    pub name: &'static str,
    pub params: Vec<ParamSchema>,
}

fn int(name: &'static str, min: u64, max: u64) -> ParamSchema {
    ParamSchema {
        name,
        kind: "integer",
        min: Some(min),
        max: Some(max),
        choices: Vec::new(),
    }
}

fn choice(choices: Vec<&'static str>) -> ParamSchema {
    ParamSchema {
        name: "shape",
        kind: "choice",
        min: None,
        max: None,
        choices,
    }
}

fn list(name: &'static str, kind: &'static str, max: usize) -> ParamSchema {
    ParamSchema {
        name,
        kind,
        min: None,
        max: Some(max as u64),
        choices: Vec::new(),
    }
}

/// The seven games with their parameter schemas.
pub fn catalog() -> Vec<GameInfo> {
    vec![
        GameInfo {
            id: "chocolate",
            name: "Chocolate Stones",
            params: vec![
                int("modulus", 1, MAX_CHOCOLATE_MODULUS),
                int("stones", 0, MAX_CHOCOLATE_STONES),
            ],
        },
        GameInfo {
            id: "diamond",
            name: "Diamond",
            params: vec![
                choice(vec!["diamond", "cross", "rect", "custom"]),
                int("c", 0, MAX_DIAMOND_C as u64),
                int("m", 1, MAX_CROSS_ARM as u64),
                int("n", 1, MAX_CROSS_ARM as u64),
                list("tokens", "points", MAX_CUSTOM_TOKENS),
            ],
        },
        GameInfo {
            id: "demon",
            name: "Demon Money",
            params: vec![int("coins", 0, MAX_DEMON_COINS)],
        },
        GameInfo {
            id: "sum-from-product",
            name: "Sum-from-Product",
            params: vec![int("n", 1, MAX_SFP)],
        },
        GameInfo {
            id: "remove-a-square",
            name: "Remove-a-Square",
            params: vec![
                choice(vec!["rect", "custom"]),
                int("rows", 1, MAX_STRIP_CELLS as u64),
                int("cols", 1, MAX_STRIP_CELLS as u64),
                list("cells", "points", MAX_CUSTOM_CELLS),
            ],
        },
        GameInfo {
            id: "remove-an-edge",
            name: "Remove-an-Edge",
            params: vec![
                choice(vec!["complete", "star", "path", "cycle", "custom"]),
                int("n", 1, MAX_SPARSE_FAMILY_VERTICES as u64),
                list("edges", "edges", MAX_GRAPH_VERTICES),
            ],
        },
        GameInfo {
            id: "no-factor",
            name: "No-Factor",
            params: vec![int("n", 1, MAX_NOFACTOR as u64)],
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(json: &str) -> GameSpec {
        serde_json::from_str(json).unwrap()
    }

    #[test]
    fn catalog_has_seven_games() {
        let c = catalog();
        assert_eq!(c.len(), 7);
        let demon = c.iter().find(|g| g.id == "demon").unwrap();
        assert_eq!(demon.params.len(), 1);
        assert_eq!(demon.params[0].name, "coins");
        assert_eq!(demon.params[0].min, Some(0));
    }

    #[test]
    fn spec_json_shapes() {
        assert_eq!(
            spec(r#"{"game":"demon","params":{"coins":5}}"#),
            GameSpec::Demon { coins: 5 }
        );
        assert_eq!(
            spec(r#"{"game":"diamond","params":{"shape":"cross","m":2,"n":3}}"#),
            GameSpec::Diamond(TokenShape::Cross { m: 2, n: 3 })
        );
        assert_eq!(
            spec(
                r#"{"game":"remove-an-edge","params":{"shape":"custom","n":3,"edges":[[0,1],[1,2]]}}"#
            ),
            GameSpec::RemoveAnEdge(GraphShape::Custom {
                n: 3,
                edges: vec![(0, 1), (1, 2)]
            })
        );
    }

    #[test]
    fn starts_and_bounds() {
        let demon = GameSpec::Demon { coins: 5 }.start().unwrap();
        assert_eq!(
            demon.legal_moves(),
            vec![MovePayload::Take(2), MovePayload::Take(3)]
        );
        let nf = GameSpec::NoFactor { n: 3 }.start().unwrap();
        assert_eq!(nf.legal_moves(), vec![MovePayload::Subset(vec![1])]);
        assert!(matches!(
            GameSpec::RemoveAnEdge(GraphShape::Cycle { n: 2 }).start(),
            Err(PlayError::InvalidParams(_))
        ));
        assert!(matches!(
            GameSpec::NoFactor { n: 13 }.start(),
            Err(PlayError::TooLarge(_))
        ));
        assert!(matches!(
            GameSpec::Chocolate {
                modulus: 0,
                stones: 3
            }
            .start(),
            Err(PlayError::InvalidParams(_))
        ));
    }

    #[test]
    fn apply_checks_legality() {
        let demon = GameSpec::Demon { coins: 5 }.start().unwrap();
        let after = demon.apply(&MovePayload::Take(2)).unwrap();
        assert_eq!(
            after.view(),
            PositionView::Pile {
                count: 3,
                modulus: None
            }
        );
        assert!(matches!(
            demon.apply(&MovePayload::Take(4)),
            Err(PlayError::IllegalMove(_))
        ));
        assert!(demon.apply(&MovePayload::Pair([0, 1])).is_err());
        let k3 = GameSpec::RemoveAnEdge(GraphShape::Complete { n: 3 })
            .start()
            .unwrap();
        assert!(k3.apply(&MovePayload::Pair([2, 0])).is_ok());
    }

    #[test]
    fn analysis_of_demon_five() {
        let demon = GameSpec::Demon { coins: 5 }.start().unwrap();
        let a = demon.analyze(&mut Solver::new()).unwrap();
        assert_eq!(a.outcome, Outcome::N);
        assert_eq!(a.winning_moves(), vec![&MovePayload::Take(2)]);
        assert_eq!(a.moves[1].leaves, Outcome::N);
    }

    #[test]
    fn analysis_examples() {
        let ras = GameSpec::RemoveASquare(CellShape::Rect { rows: 2, cols: 13 })
            .start()
            .unwrap();
        assert_eq!(ras.analyze(&mut Solver::new()).unwrap().outcome, Outcome::P);
        let rect = GameSpec::Diamond(TokenShape::Rect { m: 2, n: 2 })
            .start()
            .unwrap();
        assert_eq!(
            rect.analyze(&mut Solver::new()).unwrap().outcome,
            Outcome::P
        );
        let nf = GameSpec::NoFactor { n: 6 }.start().unwrap();
        let a = nf.analyze(&mut Solver::new()).unwrap();
        assert_eq!((a.outcome, a.grundy), (Outcome::P, None));
    }

    #[test]
    fn parse_moves() {
        let d = GameSpec::Diamond(TokenShape::Diamond { c: 1 })
            .start()
            .unwrap();
        assert_eq!(
            d.parse_move("row -1").unwrap(),
            MovePayload::Line(LineMove::row(-1))
        );
        assert_eq!(
            d.parse_move("c 0").unwrap(),
            MovePayload::Line(LineMove::column(0))
        );
        assert!(d.parse_move("diagonal 1").is_err());
        let s = GameSpec::SumFromProduct { n: 6 }.start().unwrap();
        assert_eq!(
            s.parse_move("2x3").unwrap(),
            MovePayload::Factors { a: 2, b: 3 }
        );
        assert!(s.apply(&s.parse_move("3 2").unwrap()).is_ok());
        let c = GameSpec::Chocolate {
            modulus: 2,
            stones: 4,
        }
        .start()
        .unwrap();
        assert_eq!(c.parse_move("take 2").unwrap(), MovePayload::Take(2));
        assert_eq!(
            c.parse_move(r#"{"take": 2}"#).unwrap(),
            MovePayload::Take(2)
        );
        let nf = GameSpec::NoFactor { n: 6 }.start().unwrap();
        assert_eq!(nf.parse_move("1").unwrap(), MovePayload::Subset(vec![1]));
    }

    #[test]
    fn payload_round_trips_through_text() {
        let games = [
            GameSpec::Diamond(TokenShape::Diamond { c: 2 }),
            GameSpec::RemoveASquare(CellShape::Rect { rows: 2, cols: 3 }),
            GameSpec::RemoveAnEdge(GraphShape::Cycle { n: 5 }),
            GameSpec::SumFromProduct { n: 36 },
            GameSpec::Demon { coins: 10 },
        ];
        for g in games {
            let state = g.start().unwrap();
            for mv in state.legal_moves() {
                let text = mv.to_text();
                assert_eq!(state.parse_move(&text).unwrap(), mv, "{text}");
            }
        }
    }
}

//! Planar games: Diamond (line removal on lattice points) and Remove-a-Square
//! (square removal on unit cells).

pub mod cells;
pub mod strategy;
pub mod tokens;

pub use cells::{ras_grundy_2xn, ras_p_positions, CellConfig, RasGrundyTable, SquareMove};
pub use strategy::{
    diamond_reply, mirror_strategy, symmetric_axis_free_configs, verify_diamond_strategy,
    verify_mirror_strategy, verify_second_player, StrategyError, StrategyFailure,
};
pub use tokens::{diamond_outcome_closed, Axis, DiamondShape, LineMove, TokenConfig};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct PointFormatError {
    pub line: usize,
    pub message: String,
}

/// Parses the `x y` per line point format. Blank lines and lines starting
/// with `#` are skipped.
pub fn parse_points(text: &str) -> Result<Vec<(i32, i32)>, PointFormatError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: &str| PointFormatError {
            line: i + 1,
            message: message.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(x), Some(y), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err("expected two integer fields"));
        };
        let x = x.parse().map_err(|_| err("bad x coordinate"))?;
        let y = y.parse().map_err(|_| err("bad y coordinate"))?;
        out.push((x, y));
    }
    Ok(out)
}

/// Renders points sorted, one `x y` pair per line.
pub fn render_points<'a>(points: impl IntoIterator<Item = &'a (i32, i32)>) -> String {
    let mut pts: Vec<_> = points.into_iter().copied().collect();
    pts.sort_unstable();
    pts.iter().map(|(x, y)| format!("{x} {y}\n")).collect()
}

//! Explicit second-player strategies for the Diamond game and an exhaustive
//! adversary walk that checks them.

use std::collections::HashSet;

use thiserror::Error;

use super::tokens::{Axis, LineMove, TokenConfig};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("position is not symmetric with respect to both axes")]
    NotSymmetric,
    #[error("position has tokens on an axis")]
    TouchesAxis,
    #[error("move {0:?} removes nothing")]
    IllegalMove(LineMove),
    #[error("strategy inapplicable: {0}")]
    Inapplicable(String),
}

/// A line of play the strategy lost, alternating adversary and strategy
/// moves, starting with the adversary.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{reason} (line of play {line:?})")]
pub struct StrategyFailure {
    pub line: Vec<LineMove>,
    pub reason: String,
}

fn reflect(mv: &LineMove) -> LineMove {
    LineMove {
        axis: mv.axis,
        coordinate: -mv.coordinate,
    }
}

/// Reply to `opponent` on a position symmetric in both axes with no token on
/// either axis: reflect rows across the x-axis and columns across the y-axis.
pub fn mirror_strategy(
    before: &TokenConfig,
    opponent: &LineMove,
) -> Result<LineMove, StrategyError> {
    if before.touches_axis() {
        return Err(StrategyError::TouchesAxis);
    }
    if !before.is_doubly_symmetric() {
        return Err(StrategyError::NotSymmetric);
    }
    if !before.is_legal(opponent) {
        return Err(StrategyError::IllegalMove(*opponent));
    }
    Ok(reflect(opponent))
}

fn other_axis(axis: Axis) -> Axis {
    match axis {
        Axis::Row => Axis::Column,
        Axis::Column => Axis::Row,
    }
}

fn lines(pos: &TokenConfig, axis: Axis) -> Vec<i32> {
    match axis {
        Axis::Row => pos.rows(),
        Axis::Column => pos.columns(),
    }
}

/// Second-player reply for a game that started from a diamond centered at
/// the origin. `after` is the position once the opponent's move is made.
///
/// End game: a single line is taken outright. With exactly two parallel
/// lines, a perpendicular line is removed so that both parallel lines stay
/// and some two-token perpendicular line survives (one-token lines first).
///
/// Mid game: an axis line is answered with the other axis line; any other
/// line with its reflection across the parallel axis.
pub fn diamond_reply(after: &TokenConfig, opponent: &LineMove) -> Result<LineMove, StrategyError> {
    let rows = after.rows();
    let cols = after.columns();
    if rows.len() == 1 {
        return Ok(LineMove::row(rows[0]));
    }
    if cols.len() == 1 {
        return Ok(LineMove::column(cols[0]));
    }
    if rows.len() == 2 || cols.len() == 2 {
        let parallel = if rows.len() == 2 {
            Axis::Row
        } else {
            Axis::Column
        };
        let perp = other_axis(parallel);
        let perp_lines = lines(after, perp);
        let mut best: Option<(usize, LineMove)> = None;
        for &k in &perp_lines {
            let mv = LineMove {
                axis: perp,
                coordinate: k,
            };
            let rest = after.remove_line(&mv);
            if lines(&rest, parallel).len() < 2 {
                continue;
            }
            let keeps_double = perp_lines.iter().any(|&j| {
                j != k
                    && after.line_len(&LineMove {
                        axis: perp,
                        coordinate: j,
                    }) == 2
            });
            if !keeps_double {
                continue;
            }
            let size = after.line_len(&mv);
            if best.is_none_or(|(s, _)| size < s) {
                best = Some((size, mv));
            }
        }
        return best
            .map(|(_, mv)| mv)
            .ok_or_else(|| StrategyError::Inapplicable("no safe perpendicular line".into()));
    }
    if opponent.coordinate == 0 {
        let reply = LineMove {
            axis: other_axis(opponent.axis),
            coordinate: 0,
        };
        return if after.is_legal(&reply) {
            Ok(reply)
        } else {
            Err(StrategyError::Inapplicable(
                "other axis already gone".into(),
            ))
        };
    }
    let reply = reflect(opponent);
    if after.is_legal(&reply) {
        Ok(reply)
    } else {
        Err(StrategyError::Inapplicable(format!(
            "mirror line {reply:?} is empty"
        )))
    }
}

/// Walks every adversary line of play from `start` (adversary to move) with
/// `reply(before, after, opponent_move)` choosing the strategy's answers.
/// Succeeds with the number of distinct positions examined when the strategy
/// always makes the last move.
pub fn verify_second_player<F>(start: &TokenConfig, reply: F) -> Result<usize, StrategyFailure>
where
    F: Fn(&TokenConfig, &TokenConfig, &LineMove) -> Result<LineMove, StrategyError>,
{
    let mut won: HashSet<Vec<(i32, i32)>> = HashSet::new();
    if start.is_empty() {
        return Err(StrategyFailure {
            line: Vec::new(),
            reason: "empty start: the second player never moves".into(),
        });
    }
    walk(start, &reply, &mut won)?;
    Ok(won.len())
}

fn walk<F>(
    pos: &TokenConfig,
    reply: &F,
    won: &mut HashSet<Vec<(i32, i32)>>,
) -> Result<(), StrategyFailure>
where
    F: Fn(&TokenConfig, &TokenConfig, &LineMove) -> Result<LineMove, StrategyError>,
{
    let key: Vec<(i32, i32)> = pos.points().copied().collect();
    if won.contains(&key) {
        return Ok(());
    }
    for adversary in crate::engine::Position::moves(pos) {
        let after = pos.remove_line(&adversary);
        let fail = |line: Vec<LineMove>, reason: String| StrategyFailure { line, reason };
        if after.is_empty() {
            return Err(fail(vec![adversary], "adversary made the last move".into()));
        }
        let answer =
            reply(pos, &after, &adversary).map_err(|e| fail(vec![adversary], e.to_string()))?;
        if !after.is_legal(&answer) {
            return Err(fail(
                vec![adversary, answer],
                "strategy chose an empty line".into(),
            ));
        }
        let next = after.remove_line(&answer);
        if next.is_empty() {
            continue;
        }
        walk(&next, reply, won).map_err(|mut f| {
            f.line.splice(0..0, [adversary, answer]);
            f
        })?;
    }
    won.insert(key);
    Ok(())
}

/// Every configuration symmetric in both axes, free of axis tokens, with at
/// most `max_tokens` tokens, up to order-preserving relabeling of the
/// positive coordinates (which leaves the game and the mirror replies
/// unchanged). Built from quadrant sets inside `{1..q} x {1..q}` with
/// `q = max_tokens / 4`.
pub fn symmetric_axis_free_configs(max_tokens: usize) -> Vec<TokenConfig> {
    let q = (max_tokens / 4) as i32;
    let cells: Vec<(i32, i32)> = (1..=q).flat_map(|x| (1..=q).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    let total = 1u64 << cells.len();
    for mask in 1..total {
        if mask.count_ones() as i32 > q {
            continue;
        }
        let quadrant: Vec<(i32, i32)> = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &c)| c)
            .collect();
        out.push(TokenConfig::from_points(
            quadrant
                .iter()
                .flat_map(|&(x, y)| [(x, y), (-x, y), (x, -y), (-x, -y)]),
        ));
    }
    out
}

/// Runs the mirror strategy against every adversary on every configuration
/// from [`symmetric_axis_free_configs`]. Returns the number of starting
/// configurations checked.
pub fn verify_mirror_strategy(max_tokens: usize) -> Result<usize, StrategyFailure> {
    let configs = symmetric_axis_free_configs(max_tokens);
    for start in &configs {
        verify_second_player(start, |before, _, mv| mirror_strategy(before, mv))?;
    }
    Ok(configs.len())
}

/// Runs [`diamond_reply`] against every adversary from the diamond
/// `|x| + |y| <= c`.
pub fn verify_diamond_strategy(c: u32) -> Result<usize, StrategyFailure> {
    verify_second_player(&TokenConfig::diamond(c), |_, after, mv| {
        diamond_reply(after, mv)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_examples() {
        let d = TokenConfig::from_points([
            (1, 1),
            (-1, 1),
            (1, -1),
            (-1, -1),
            (2, 2),
            (-2, 2),
            (2, -2),
            (-2, -2),
        ]);
        assert_eq!(
            mirror_strategy(&d, &LineMove::row(2)).unwrap(),
            LineMove::row(-2)
        );
        assert_eq!(
            mirror_strategy(&d, &LineMove::column(-1)).unwrap(),
            LineMove::column(1)
        );
    }

    #[test]
    fn mirror_four_tokens_empties_board() {
        let four = TokenConfig::from_points([(1, 1), (-1, 1), (1, -1), (-1, -1)]);
        let reply = mirror_strategy(&four, &LineMove::row(1)).unwrap();
        assert_eq!(reply, LineMove::row(-1));
        let after = four.remove_line(&LineMove::row(1)).remove_line(&reply);
        assert!(after.is_empty());
    }

    #[test]
    fn mirror_preconditions() {
        let lopsided = TokenConfig::from_points([(1, 1), (-1, 1), (1, -1)]);
        assert_eq!(
            mirror_strategy(&lopsided, &LineMove::row(1)),
            Err(StrategyError::NotSymmetric)
        );
        assert_eq!(
            mirror_strategy(&TokenConfig::diamond(1), &LineMove::row(1)),
            Err(StrategyError::TouchesAxis)
        );
        let four = TokenConfig::from_points([(1, 1), (-1, 1), (1, -1), (-1, -1)]);
        assert_eq!(
            mirror_strategy(&four, &LineMove::row(5)),
            Err(StrategyError::IllegalMove(LineMove::row(5)))
        );
    }

    #[test]
    fn diamond_reply_examples() {
        let d = TokenConfig::diamond(2);
        let after = d.remove_line(&LineMove::row(0));
        assert_eq!(
            diamond_reply(&after, &LineMove::row(0)).unwrap(),
            LineMove::column(0)
        );
        let line = TokenConfig::from_points([(-1, 3), (0, 3), (1, 3)]);
        assert_eq!(
            diamond_reply(&line, &LineMove::row(1)).unwrap(),
            LineMove::row(3)
        );
        let after = d.remove_line(&LineMove::column(2));
        assert_eq!(
            diamond_reply(&after, &LineMove::column(2)).unwrap(),
            LineMove::column(-2)
        );
    }

    #[test]
    fn diamond_strategy_small() {
        assert!(verify_diamond_strategy(1).is_ok());
        assert!(verify_diamond_strategy(2).is_ok());
    }

    #[test]
    fn single_token_is_a_loss_for_second_player() {
        let f = verify_diamond_strategy(0).unwrap_err();
        assert_eq!(f.line.len(), 1);
    }

    #[test]
    fn symmetric_enumeration() {
        let configs = symmetric_axis_free_configs(12);
        // subsets of a 3x3 quadrant grid with 1..=3 points
        assert_eq!(configs.len(), 9 + 36 + 84);
        assert!(configs
            .iter()
            .all(|c| c.len() <= 12 && c.is_doubly_symmetric() && !c.touches_axis()));
    }

    #[test]
    fn broken_strategy_is_caught() {
        // Always answering with the lowest row is not a winning strategy.
        let start = TokenConfig::from_points([(1, 1), (-1, 1), (1, -1), (-1, -1)]);
        let res = verify_second_player(&start, |_, after, _| Ok(LineMove::row(after.rows()[0])));
        let f = res.unwrap_err();
        assert!(!f.line.is_empty());
    }
}

//! Edge-delete game: players alternately delete one edge; the player whose
//! deletion leaves a vertex with no edges loses at once.

use std::collections::HashMap;

use super::SimpleGraph;
use crate::engine::Outcome;
use crate::ParamError;

/// Largest path accepted by [`edge_delete_path_outcome`].
pub const EDGE_DELETE_MAX_PATH: usize = 14;

/// Outcome for the player to move on the full graph. A player whose every
/// deletion isolates a vertex must still delete and therefore loses.
/// The graph must start with no isolated vertex and at most 64 edges.
pub fn edge_delete_outcome(graph: &SimpleGraph) -> Result<Outcome, ParamError> {
    if graph.edges().len() > 64 {
        return Err(ParamError::new("edge-delete supports at most 64 edges"));
    }
    if (0..graph.vertex_count()).any(|v| graph.neighbors(v) == 0) {
        return Err(ParamError::new(
            "edge-delete needs a graph without isolated vertices",
        ));
    }
    let mut degree: Vec<u32> = (0..graph.vertex_count())
        .map(|v| graph.neighbors(v).count_ones())
        .collect();
    let mut memo = HashMap::new();
    let wins = mover_wins(graph.edges(), 0, &mut degree, &mut memo);
    Ok(if wins { Outcome::N } else { Outcome::P })
}

fn mover_wins(
    edges: &[(usize, usize)],
    deleted: u64,
    degree: &mut [u32],
    memo: &mut HashMap<u64, bool>,
) -> bool {
    if let Some(&w) = memo.get(&deleted) {
        return w;
    }
    let mut win = false;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if deleted & (1 << i) != 0 {
            continue;
        }
        // deleting this edge isolates an endpoint: an immediate loss
        if degree[u] == 1 || degree[v] == 1 {
            continue;
        }
        degree[u] -= 1;
        degree[v] -= 1;
        let opponent_wins = mover_wins(edges, deleted | 1 << i, degree, memo);
        degree[u] += 1;
        degree[v] += 1;
        if !opponent_wins {
            win = true;
            break;
        }
    }
    memo.insert(deleted, win);
    win
}

/// Edge-delete outcome on the path with `n` vertices, `2 <= n <= 14`.
pub fn edge_delete_path_outcome(n: usize) -> Result<Outcome, ParamError> {
    if !(2..=EDGE_DELETE_MAX_PATH).contains(&n) {
        return Err(ParamError::new(format!(
            "edge-delete path size must be in 2..={EDGE_DELETE_MAX_PATH}"
        )));
    }
    let graph = SimpleGraph::path(n).map_err(|e| ParamError::new(e.to_string()))?;
    edge_delete_outcome(&graph)
}

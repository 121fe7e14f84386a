//! Remove-an-Edge: a move deletes two adjacent vertices together with every
//! edge touching them.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{GraphError, SimpleGraph};
use crate::engine::{mex, Grundy, Outcome, Position, SolveError, Solver};
use crate::ParamError;

/// Vertex bound for [`rae_solve_general`].
pub const RAE_GENERAL_MAX_VERTICES: usize = 24;

/// Live vertices of a fixed base graph.
#[derive(Debug, Clone)]
pub struct RaePosition {
    graph: Arc<SimpleGraph>,
    alive: u64,
}

impl RaePosition {
    pub fn new(graph: Arc<SimpleGraph>) -> Self {
        let alive = graph.all_vertices();
        Self { graph, alive }
    }

    pub fn with_alive(graph: Arc<SimpleGraph>, alive: u64) -> Self {
        let alive = alive & graph.all_vertices();
        Self { graph, alive }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn alive(&self) -> u64 {
        self.alive
    }

    /// Live vertices with at least one live neighbor.
    fn active(&self) -> u64 {
        (0..self.graph.vertex_count())
            .filter(|&v| self.alive & (1 << v) != 0 && self.graph.neighbors(v) & self.alive != 0)
            .fold(0, |m, v| m | 1 << v)
    }

    pub fn is_legal(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v) && self.alive & (1 << u) != 0 && self.alive & (1 << v) != 0
    }
}

impl Position for RaePosition {
    /// `(u, v)` with `u < v`.
    type Move = (usize, usize);

    /// Live edges in `(u, v)` order.
    fn moves(&self) -> Vec<(usize, usize)> {
        self.graph
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| self.alive & (1 << u) != 0 && self.alive & (1 << v) != 0)
            .collect()
    }

    fn play(&self, &(u, v): &(usize, usize)) -> Self {
        Self {
            graph: Arc::clone(&self.graph),
            alive: self.alive & !(1 << u) & !(1 << v),
        }
    }

    /// Live non-isolated vertices and their live neighborhoods, so positions
    /// on different base graphs never share a key. Isolated live vertices
    /// take no part in the game.
    fn cache_key(&self) -> Vec<u8> {
        let active = self.active();
        let mut key = active.to_le_bytes().to_vec();
        let mut rest = active;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            key.extend_from_slice(&(self.graph.neighbors(v) & active).to_le_bytes());
        }
        key
    }

    fn is_terminal(&self) -> bool {
        self.active() == 0
    }

    /// Connected components of the live graph with at least one edge.
    fn components(&self) -> Option<Vec<Self>> {
        let mut rest = self.active();
        let mut parts = Vec::new();
        while rest != 0 {
            let seed = rest.trailing_zeros() as usize;
            let mut part = 1u64 << seed;
            let mut frontier = part;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.graph.neighbors(v) & self.alive & !part;
                part |= fresh;
                frontier |= fresh;
            }
            rest &= !part;
            parts.push(Self {
                graph: Arc::clone(&self.graph),
                alive: part,
            });
        }
        Some(parts)
    }
}

/// Graph families with closed-form outcomes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "n", rename_all = "lowercase")]
pub enum GraphFamily {
    Complete(usize),
    Star(usize),
    Path(usize),
    Cycle(usize),
}

impl GraphFamily {
    pub fn parse(name: &str, n: usize) -> Result<Self, ParamError> {
        match name {
            "complete" => Ok(Self::Complete(n)),
            "star" => Ok(Self::Star(n)),
            "path" => Ok(Self::Path(n)),
            "cycle" => Ok(Self::Cycle(n)),
            other => Err(ParamError::new(format!("unknown graph family `{other}`"))),
        }
    }

    pub fn size(&self) -> usize {
        match *self {
            Self::Complete(n) | Self::Star(n) | Self::Path(n) | Self::Cycle(n) => n,
        }
    }

    pub fn build(&self) -> Result<SimpleGraph, GraphError> {
        match *self {
            Self::Complete(n) => SimpleGraph::complete(n),
            Self::Star(n) => SimpleGraph::star(n),
            Self::Path(n) => SimpleGraph::path(n),
            Self::Cycle(n) => SimpleGraph::cycle(n),
        }
    }
}

/// Membership in the path P-set: `{0, 1, 15, 35}` together with every
/// positive integer congruent to 5, 9, 21, 25 or 29 modulo 34.
pub fn path_p_member(n: usize) -> bool {
    matches!(n, 0 | 1 | 15 | 35) || (n > 0 && matches!(n % 34, 5 | 9 | 21 | 25 | 29))
}

/// Closed-form outcome for the four families. Complete: N iff `n mod 4` is 2
/// or 3. Star (`n > 1`): N. Path: P iff in the path P-set. Cycle (`n >= 3`):
/// N iff the path on `n - 2` vertices is P.
pub fn rae_outcome_closed(family: GraphFamily) -> Result<Outcome, ParamError> {
    let n_wins = match family {
        GraphFamily::Complete(n) => matches!(n % 4, 2 | 3),
        GraphFamily::Star(n) => {
            if n < 2 {
                return Err(ParamError::new("star needs at least 2 vertices"));
            }
            true
        }
        GraphFamily::Path(n) => !path_p_member(n),
        GraphFamily::Cycle(n) => return cycle_outcome(n),
    };
    Ok(if n_wins { Outcome::N } else { Outcome::P })
}

/// The first move on a cycle always leaves a path on `n - 2` vertices.
pub fn cycle_outcome(n: usize) -> Result<Outcome, ParamError> {
    if n < 3 {
        return Err(ParamError::new("cycle needs at least 3 vertices"));
    }
    Ok(if path_p_member(n - 2) {
        Outcome::N
    } else {
        Outcome::P
    })
}

/// `G(n)` for the path on `n` vertices, `n = 0..=n_max`: removing an edge
/// splits the path into pieces of `i` and `n - i - 2` vertices.
pub fn path_grundy(n_max: usize) -> Vec<Grundy> {
    let mut g: Vec<Grundy> = vec![0; n_max.max(1) + 1];
    for n in 2..=n_max {
        g[n] = mex((0..=n - 2).map(|i| g[i] ^ g[n - i - 2]));
    }
    g.truncate(n_max + 1);
    g
}

#[derive(Debug, thiserror::Error)]
pub enum RaeSolveError {
    #[error("general solver handles at most {RAE_GENERAL_MAX_VERTICES} vertices, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Exhaustive outcome and nimber of the full graph.
pub fn rae_solve_general(graph: SimpleGraph) -> Result<(Outcome, Grundy), RaeSolveError> {
    if graph.vertex_count() > RAE_GENERAL_MAX_VERTICES {
        return Err(RaeSolveError::TooLarge(graph.vertex_count()));
    }
    let pos = RaePosition::new(Arc::new(graph));
    let g = Solver::new().grundy(&pos)?;
    Ok((Outcome::from_grundy(g), g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(g: SimpleGraph) -> RaePosition {
        RaePosition::new(Arc::new(g))
    }

    #[test]
    fn move_examples() {
        let k2 = pos(SimpleGraph::complete(2).unwrap());
        let succ = k2.successors();
        assert_eq!(succ.len(), 1);
        assert!(succ[0].1.is_terminal());
        let star = pos(SimpleGraph::star(4).unwrap());
        let moves = star.moves();
        assert_eq!(moves, vec![(0, 1), (0, 2), (0, 3)]);
        assert!(star.successors().iter().all(|(_, p)| p.is_terminal()));
        assert!(pos(SimpleGraph::new(3, &[]).unwrap()).moves().is_empty());
    }

    #[test]
    fn one_solver_serves_several_graphs() {
        let mut solver = Solver::new();
        let path = solver.outcome(&pos(SimpleGraph::path(6).unwrap())).unwrap();
        let cycle = solver
            .outcome(&pos(SimpleGraph::cycle(6).unwrap()))
            .unwrap();
        assert_eq!(path, Outcome::N);
        assert_eq!(cycle, cycle_outcome(6).unwrap());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(
            rae_outcome_closed(GraphFamily::Complete(6)).unwrap(),
            Outcome::N
        );
        assert_eq!(
            rae_outcome_closed(GraphFamily::Complete(4)).unwrap(),
            Outcome::P
        );
        assert_eq!(
            rae_outcome_closed(GraphFamily::Path(5)).unwrap(),
            Outcome::P
        );
        assert_eq!(
            rae_outcome_closed(GraphFamily::Cycle(7)).unwrap(),
            Outcome::N
        );
        assert!(rae_outcome_closed(GraphFamily::Star(1)).is_err());
        assert!(GraphFamily::parse("wheel", 5).is_err());
    }

    #[test]
    fn cycle_examples() {
        assert_eq!(cycle_outcome(3).unwrap(), Outcome::N);
        assert_eq!(cycle_outcome(4).unwrap(), Outcome::P);
        assert_eq!(cycle_outcome(17).unwrap(), Outcome::N);
        assert!(cycle_outcome(2).is_err());
    }

    #[test]
    fn path_grundy_examples() {
        let g = path_grundy(40);
        assert_eq!(g[2], 1);
        let zeros: Vec<usize> = (0..=40).filter(|&n| g[n] == 0).collect();
        assert_eq!(zeros, vec![0, 1, 5, 9, 15, 21, 25, 29, 35, 39]);
        assert!((0..=40).all(|n| (g[n] == 0) == path_p_member(n)));
    }

    #[test]
    fn general_examples() {
        assert_eq!(
            rae_solve_general(SimpleGraph::complete(6).unwrap())
                .unwrap()
                .0,
            Outcome::N
        );
        assert_eq!(
            rae_solve_general(SimpleGraph::cycle(8).unwrap()).unwrap().0,
            Outcome::P
        );
        assert_eq!(
            rae_solve_general(SimpleGraph::star(5).unwrap()).unwrap().0,
            Outcome::N
        );
        assert!(matches!(
            rae_solve_general(SimpleGraph::path(25).unwrap()),
            Err(RaeSolveError::TooLarge(25))
        ));
    }

    #[test]
    fn path_brute_force_matches_recursion() {
        let g = path_grundy(40);
        for n in 0..=40 {
            let mut s = Solver::new();
            assert_eq!(
                s.grundy(&pos(SimpleGraph::path(n).unwrap())).unwrap(),
                g[n],
                "n={n}"
            );
        }
    }

    #[test]
    fn complete_graphs_every_playout_has_floor_half_moves() {
        use std::collections::{BTreeSet, HashMap};
        fn lengths(p: &RaePosition, memo: &mut HashMap<u64, BTreeSet<usize>>) -> BTreeSet<usize> {
            if let Some(l) = memo.get(&p.alive()) {
                return l.clone();
            }
            let succ = p.successors();
            let mut out = BTreeSet::new();
            if succ.is_empty() {
                out.insert(0);
            }
            for (_, next) in succ {
                out.extend(lengths(&next, memo).into_iter().map(|l| l + 1));
            }
            memo.insert(p.alive(), out.clone());
            out
        }
        for n in 1..=12 {
            let all = lengths(&pos(SimpleGraph::complete(n).unwrap()), &mut HashMap::new());
            assert_eq!(all.into_iter().collect::<Vec<_>>(), vec![n / 2]);
        }
    }
}

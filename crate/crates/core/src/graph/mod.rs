//! Remove-an-Edge on simple graphs, plus the two games it is compared
//! against: domino covering on a strip and the edge-delete game.

pub mod domino;
pub mod edge_delete;
pub mod rae;

pub use domino::domino_outcome;
pub use edge_delete::{edge_delete_outcome, edge_delete_path_outcome, EDGE_DELETE_MAX_PATH};
pub use rae::{
    cycle_outcome, path_grundy, path_p_member, rae_outcome_closed, rae_solve_general, GraphFamily,
    RaePosition, RAE_GENERAL_MAX_VERTICES,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Most vertices a graph may have (vertex sets are 64-bit masks).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("at most {MAX_VERTICES} vertices are supported, got {0}")]
    TooManyVertices(usize),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// Undirected simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    adjacency: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(vertex_count));
        }
        let mut adjacency = vec![0u64; vertex_count];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if adjacency[u] & (1 << v) != 0 {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        Ok(Self {
            vertex_count,
            edges: normalized,
            adjacency,
        })
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges)
    }

    /// Vertex 0 joined to `n - 1` leaves.
    pub fn star(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Self::new(n, &edges)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(n, &edges)
    }

    /// Requires `n >= 3`; smaller `n` yields a path (no multi-edges).
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((0, n - 1));
        }
        Self::new(n, &edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count && v < self.vertex_count && self.adjacency[u] & (1 << v) != 0
    }

    pub fn all_vertices(&self) -> u64 {
        if self.vertex_count == 64 {
            u64::MAX
        } else {
            (1u64 << self.vertex_count) - 1
        }
    }

    /// Edge-list text: header `n <count>`, then `u v` per line. `#` comments
    /// and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut count: Option<usize> = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| GraphError::Format {
                line: i + 1,
                message: message.to_string(),
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if count.is_none() {
                match fields.as_slice() {
                    ["n", c] => count = Some(c.parse().map_err(|_| err("bad vertex count"))?),
                    _ => return Err(err("expected header `n <count>`")),
                }
                continue;
            }
            match fields.as_slice() {
                [u, v] => edges.push((
                    u.parse().map_err(|_| err("bad vertex"))?,
                    v.parse().map_err(|_| err("bad vertex"))?,
                )),
                _ => return Err(err("expected `u v`")),
            }
        }
        let count = count.ok_or(GraphError::Format {
            line: 0,
            message: "missing header `n <count>`".into(),
        })?;
        Self::new(count, &edges)
    }

    pub fn render(&self) -> String {
        let mut out = format!("n {}\n", self.vertex_count);
        for (u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

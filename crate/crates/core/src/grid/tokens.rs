use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::engine::{Outcome, Position};
use crate::ParamError;

/// A finite set of lattice points. Rows are lines of constant `y`, columns
/// lines of constant `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TokenConfig {
    tokens: BTreeSet<(i32, i32)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    Row,
    Column,
}

/// Removes every token on one row (`y == coordinate`) or column
/// (`x == coordinate`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LineMove {
    pub axis: Axis,
    pub coordinate: i32,
}

impl LineMove {
    pub fn row(y: i32) -> Self {
        Self {
            axis: Axis::Row,
            coordinate: y,
        }
    }

    pub fn column(x: i32) -> Self {
        Self {
            axis: Axis::Column,
            coordinate: x,
        }
    }

    pub fn covers(&self, (x, y): (i32, i32)) -> bool {
        match self.axis {
            Axis::Row => y == self.coordinate,
            Axis::Column => x == self.coordinate,
        }
    }
}

impl TokenConfig {
    pub fn from_points(points: impl IntoIterator<Item = (i32, i32)>) -> Self {
        Self {
            tokens: points.into_iter().collect(),
        }
    }

    /// Every lattice point with `|x| + |y| <= c`; its longest row holds
    /// `2c + 1` tokens.
    pub fn diamond(c: u32) -> Self {
        let c = c as i32;
        Self::from_points(
            (-c..=c).flat_map(|x| (-(c - x.abs())..=(c - x.abs())).map(move |y| (x, y))),
        )
    }

    /// Consecutive segments through the origin: `m` tokens on the x-axis and
    /// `n` on the y-axis, sharing the center.
    pub fn cross(m: u32, n: u32) -> Result<Self, ParamError> {
        if m == 0 || n == 0 {
            return Err(ParamError::new("cross arms need at least one token each"));
        }
        let segment = |len: u32| {
            let lo = -((len as i32 - 1) / 2);
            lo..lo + len as i32
        };
        let horizontal = segment(m).map(|x| (x, 0));
        let vertical = segment(n).map(|y| (0, y));
        Ok(Self::from_points(horizontal.chain(vertical)))
    }

    /// `m` rows by `n` columns.
    pub fn rect(m: u32, n: u32) -> Self {
        Self::from_points((0..n as i32).flat_map(|x| (0..m as i32).map(move |y| (x, y))))
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn contains(&self, p: (i32, i32)) -> bool {
        self.tokens.contains(&p)
    }

    pub fn points(&self) -> impl Iterator<Item = &(i32, i32)> {
        self.tokens.iter()
    }

    /// Occupied row coordinates, ascending.
    pub fn rows(&self) -> Vec<i32> {
        let set: BTreeSet<i32> = self.tokens.iter().map(|&(_, y)| y).collect();
        set.into_iter().collect()
    }

    /// Occupied column coordinates, ascending.
    pub fn columns(&self) -> Vec<i32> {
        let set: BTreeSet<i32> = self.tokens.iter().map(|&(x, _)| x).collect();
        set.into_iter().collect()
    }

    pub fn line_len(&self, line: &LineMove) -> usize {
        self.tokens.iter().filter(|&&p| line.covers(p)).count()
    }

    pub fn is_legal(&self, line: &LineMove) -> bool {
        self.tokens.iter().any(|&p| line.covers(p))
    }

    pub fn remove_line(&self, line: &LineMove) -> Self {
        Self {
            tokens: self
                .tokens
                .iter()
                .copied()
                .filter(|&p| !line.covers(p))
                .collect(),
        }
    }

    pub fn touches_axis(&self) -> bool {
        self.tokens.iter().any(|&(x, y)| x == 0 || y == 0)
    }

    pub fn is_doubly_symmetric(&self) -> bool {
        self.tokens
            .iter()
            .all(|&(x, y)| self.contains((-x, y)) && self.contains((x, -y)))
    }

    /// Occupancy matrix after dropping empty lines: `rows x cols`.
    fn matrix(&self) -> Vec<Vec<bool>> {
        let rows = self.rows();
        let cols = self.columns();
        let row_rank: BTreeMap<i32, usize> =
            rows.iter().enumerate().map(|(i, &y)| (y, i)).collect();
        let col_rank: BTreeMap<i32, usize> =
            cols.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut m = vec![vec![false; cols.len()]; rows.len()];
        for &(x, y) in &self.tokens {
            m[row_rank[&y]][col_rank[&x]] = true;
        }
        m
    }
}

fn transpose(m: &[Vec<bool>]) -> Vec<Vec<bool>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|c| m.iter().map(|row| row[c]).collect())
        .collect()
}

/// Alternately sorts rows and columns until neither changes. The result is
/// a row/column permutation of the input.
fn sort_lines(mut m: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    for _ in 0..64 {
        let mut changed = false;
        for _ in 0..2 {
            let before = m.clone();
            m.sort();
            changed |= m != before;
            m = transpose(&m);
        }
        if !changed {
            break;
        }
    }
    m
}

fn encode(m: &[Vec<bool>]) -> Vec<u8> {
    let rows = m.len() as u16;
    let cols = m.first().map_or(0, Vec::len) as u16;
    let mut out = rows.to_le_bytes().to_vec();
    out.extend_from_slice(&cols.to_le_bytes());
    let mut byte = 0u8;
    let mut filled = 0;
    for bit in m.iter().flatten() {
        byte = byte << 1 | u8::from(*bit);
        filled += 1;
        if filled == 8 {
            out.push(byte);
            byte = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(byte << (8 - filled));
    }
    out
}

impl Position for TokenConfig {
    type Move = LineMove;

    /// Rows by coordinate, then columns by coordinate.
    fn moves(&self) -> Vec<LineMove> {
        let rows = self.rows().into_iter().map(LineMove::row);
        let cols = self.columns().into_iter().map(LineMove::column);
        rows.chain(cols).collect()
    }

    fn play(&self, mv: &LineMove) -> Self {
        self.remove_line(mv)
    }

    /// Invariant under independent permutation of rows and of columns and
    /// under transposition.
    fn cache_key(&self) -> Vec<u8> {
        let m = self.matrix();
        let a = encode(&sort_lines(m.clone()));
        let b = encode(&sort_lines(transpose(&m)));
        a.min(b)
    }

    fn is_terminal(&self) -> bool {
        self.tokens.is_empty()
    }

    /// Groups of tokens linked through shared rows or columns.
    fn components(&self) -> Option<Vec<Self>> {
        let pts: Vec<(i32, i32)> = self.tokens.iter().copied().collect();
        let mut parent: Vec<usize> = (0..pts.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut by_row: BTreeMap<i32, usize> = BTreeMap::new();
        let mut by_col: BTreeMap<i32, usize> = BTreeMap::new();
        for (i, &(x, y)) in pts.iter().enumerate() {
            for first in [*by_row.entry(y).or_insert(i), *by_col.entry(x).or_insert(i)] {
                let (a, b) = (find(&mut parent, first), find(&mut parent, i));
                parent[a] = b;
            }
        }
        let mut groups: BTreeMap<usize, Vec<(i32, i32)>> = BTreeMap::new();
        for (i, &p) in pts.iter().enumerate() {
            groups.entry(find(&mut parent, i)).or_default().push(p);
        }
        Some(groups.into_values().map(Self::from_points).collect())
    }
}

/// Starting shapes with a closed-form outcome.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum DiamondShape {
    Diamond { c: u32 },
    Cross { m: u32, n: u32 },
    Rect { m: u32, n: u32 },
}

impl DiamondShape {
    pub fn config(&self) -> Result<TokenConfig, ParamError> {
        match *self {
            DiamondShape::Diamond { c } => Ok(TokenConfig::diamond(c)),
            DiamondShape::Cross { m, n } => TokenConfig::cross(m, n),
            DiamondShape::Rect { m, n } => {
                if m == 0 || n == 0 {
                    Err(ParamError::new("rectangle sides must be at least 1"))
                } else {
                    Ok(TokenConfig::rect(m, n))
                }
            }
        }
    }
}

/// Diamonds: N only for the single token. Crosses and rectangles: P exactly
/// when `m + n` is even and both exceed 1.
pub fn diamond_outcome_closed(shape: DiamondShape) -> Outcome {
    let p = match shape {
        DiamondShape::Diamond { c } => c >= 1,
        DiamondShape::Cross { m, n } | DiamondShape::Rect { m, n } => {
            (m + n) % 2 == 0 && m > 1 && n > 1
        }
    };
    if p {
        Outcome::P
    } else {
        Outcome::N
    }
}

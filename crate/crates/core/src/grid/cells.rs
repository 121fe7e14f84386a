//! Remove-a-Square: a move deletes a full `k x k` block of cells.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::engine::{mex, Grundy, Position};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CellConfig {
    cells: BTreeSet<(i32, i32)>,
}

/// The block `x..x+size` by `y..y+size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquareMove {
    pub x: i32,
    pub y: i32,
    pub size: u32,
}

impl SquareMove {
    fn cells(&self) -> impl Iterator<Item = (i32, i32)> + '_ {
        let k = self.size as i32;
        (0..k).flat_map(move |dx| (0..k).map(move |dy| (self.x + dx, self.y + dy)))
    }
}

impl CellConfig {
    pub fn from_cells(cells: impl IntoIterator<Item = (i32, i32)>) -> Self {
        Self {
            cells: cells.into_iter().collect(),
        }
    }

    /// `rows` by `cols` rectangle; x runs over columns.
    pub fn rect(rows: u32, cols: u32) -> Self {
        Self::from_cells((0..cols as i32).flat_map(|x| (0..rows as i32).map(move |y| (x, y))))
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = &(i32, i32)> {
        self.cells.iter()
    }

    pub fn fits(&self, mv: &SquareMove) -> bool {
        mv.size >= 1 && mv.cells().all(|c| self.cells.contains(&c))
    }

    pub fn remove_square(&self, mv: &SquareMove) -> Self {
        let mut cells = self.cells.clone();
        for c in mv.cells() {
            cells.remove(&c);
        }
        Self { cells }
    }

    pub fn has_square(&self, size: u32) -> bool {
        self.cells
            .iter()
            .any(|&(x, y)| self.fits(&SquareMove { x, y, size }))
    }
}

impl Position for CellConfig {
    type Move = SquareMove;

    /// Size ascending, then origin `(x, y)` ascending.
    fn moves(&self) -> Vec<SquareMove> {
        let mut out = Vec::new();
        for size in 1.. {
            let before = out.len();
            for &(x, y) in &self.cells {
                let mv = SquareMove { x, y, size };
                if self.fits(&mv) {
                    out.push(mv);
                }
            }
            if out.len() == before {
                break;
            }
        }
        out
    }

    fn play(&self, mv: &SquareMove) -> Self {
        self.remove_square(mv)
    }

    /// Smallest encoding of the cell set over translations and the eight
    /// symmetries of the square grid.
    fn cache_key(&self) -> Vec<u8> {
        let transforms: [fn((i32, i32)) -> (i32, i32); 8] = [
            |(x, y)| (x, y),
            |(x, y)| (-x, y),
            |(x, y)| (x, -y),
            |(x, y)| (-x, -y),
            |(x, y)| (y, x),
            |(x, y)| (-y, x),
            |(x, y)| (y, -x),
            |(x, y)| (-y, -x),
        ];
        transforms
            .iter()
            .map(|t| {
                let moved: Vec<(i32, i32)> = self.cells.iter().map(|&c| t(c)).collect();
                let min_x = moved.iter().map(|c| c.0).min().unwrap_or(0);
                let min_y = moved.iter().map(|c| c.1).min().unwrap_or(0);
                let mut norm: Vec<(i32, i32)> =
                    moved.iter().map(|&(x, y)| (x - min_x, y - min_y)).collect();
                norm.sort_unstable();
                norm.iter()
                    .flat_map(|&(x, y)| {
                        let mut b = (x as u32).to_le_bytes().to_vec();
                        b.extend_from_slice(&(y as u32).to_le_bytes());
                        b
                    })
                    .collect::<Vec<u8>>()
            })
            .min()
            .unwrap_or_default()
    }

    fn is_terminal(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells joined through fitting 2x2 blocks. A larger square is a union
    /// of overlapping 2x2 blocks, so every move stays inside one group, and a
    /// cell in no block is a group of its own.
    fn components(&self) -> Option<Vec<Self>> {
        let cells: Vec<(i32, i32)> = self.cells.iter().copied().collect();
        let index = |c: &(i32, i32)| cells.binary_search(c).ok();
        let mut parent: Vec<usize> = (0..cells.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for (i, &(x, y)) in cells.iter().enumerate() {
            let block = [(x + 1, y), (x, y + 1), (x + 1, y + 1)].map(|c| index(&c));
            if let [Some(a), Some(b), Some(c)] = block {
                for j in [a, b, c] {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
        let mut groups: std::collections::BTreeMap<usize, BTreeSet<(i32, i32)>> =
            Default::default();
        for (i, &c) in cells.iter().enumerate() {
            groups.entry(find(&mut parent, i)).or_default().insert(c);
        }
        Some(groups.into_values().map(|cells| Self { cells }).collect())
    }
}

/// `G(n)` for the 2-by-n rectangle, `n = 0..=computed_through`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasGrundyTable {
    values: Vec<Grundy>,
}

impl RasGrundyTable {
    pub fn get(&self, n: usize) -> Option<Grundy> {
        self.values.get(n).copied()
    }

    pub fn computed_through(&self) -> usize {
        self.values.len() - 1
    }

    /// Values indexed from `n = 0`.
    pub fn values(&self) -> &[Grundy] {
        &self.values
    }
}

/// Removing a 2x2 block at columns `i+1, i+2` leaves `2 x i` plus
/// `2 x (n-i-2)`; removing one cell of column `j+1` leaves `2 x j`, a lone
/// cell, and `2 x (n-j-1)`. Cut positions include the left edge.
pub fn ras_grundy_2xn(n_max: usize) -> RasGrundyTable {
    let mut g: Vec<Grundy> = vec![0; n_max.max(1) + 1];
    for n in 2..=n_max {
        let squares = (0..=n - 2).map(|i| g[i] ^ g[n - i - 2]);
        let singles = (0..n).map(|j| g[j] ^ 1 ^ g[n - j - 1]);
        g[n] = mex(squares.chain(singles));
    }
    g.truncate(n_max + 1);
    RasGrundyTable { values: g }
}

/// `n` in `1..=n_max` with `G(n) = 0`.
pub fn ras_p_positions(n_max: usize) -> Vec<usize> {
    let table = ras_grundy_2xn(n_max);
    (1..=n_max).filter(|&n| table.values[n] == 0).collect()
}

//! Demon Money: from a pile of `n` coins take `floor(sqrt n)` or
//! `ceil(sqrt n)` coins (only `k` when `n = k^2`).

use crate::engine::{Outcome, Position};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DemonPosition {
    coins: u64,
}

impl DemonPosition {
    pub fn new(coins: u64) -> Self {
        Self { coins }
    }

    pub fn coins(&self) -> u64 {
        self.coins
    }

    pub fn takes(&self) -> Vec<u64> {
        if self.coins == 0 {
            return Vec::new();
        }
        let root = self.coins.isqrt();
        if root * root == self.coins {
            vec![root]
        } else {
            vec![root, root + 1]
        }
    }
}

impl Position for DemonPosition {
    type Move = u64;

    fn moves(&self) -> Vec<u64> {
        self.takes()
    }

    fn play(&self, take: &u64) -> Self {
        Self::new(self.coins - take)
    }

    fn cache_key(&self) -> Vec<u8> {
        self.coins.to_le_bytes().to_vec()
    }

    fn is_terminal(&self) -> bool {
        self.coins == 0
    }
}

/// The `k >= 1` whose block `[k^2 - 1, (k+1)^2 - 2]` contains `n`. Each block
/// is a P-interval `[k^2 - 1, k^2 + k - 2]` followed by an N-interval
/// `[k^2 + k - 1, (k+1)^2 - 2]`.
fn block(n: u64) -> u64 {
    let guess = (n + 1).isqrt();
    (guess.saturating_sub(1).max(1)..=guess + 1)
        .find(|&k| k * k - 1 <= n && n <= (k + 1) * (k + 1) - 2)
        .expect("blocks partition the non-negative integers")
}

fn in_n_interval(n: u64, k: u64) -> bool {
    n >= k * k + k - 1
}

pub fn demon_outcome_closed(coins: u64) -> Outcome {
    if in_n_interval(coins, block(coins)) {
        Outcome::N
    } else {
        Outcome::P
    }
}

/// Length of the game when the winning side plays optimally: `2k - 1` on the
/// k-th N-interval and `2k - 2` on the k-th P-interval.
pub fn demon_move_count(coins: u64) -> u64 {
    let k = block(coins);
    if in_n_interval(coins, k) {
        2 * k - 1
    } else {
        2 * k - 2
    }
}

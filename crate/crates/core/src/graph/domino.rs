//! Domino covering on a `1 x n` strip, brute-forced over covered-cell masks.
//! Kept independent of the engine so it can serve as a cross-check.

use std::collections::HashMap;

use crate::engine::Outcome;

/// Outcome of the empty strip of `len` cells (`len <= 63`).
pub fn domino_outcome(len: usize) -> Outcome {
    assert!(len < 64, "strip too long for a 64-bit mask");
    let mut memo = HashMap::new();
    if mover_wins(len, 0, &mut memo) {
        Outcome::N
    } else {
        Outcome::P
    }
}

fn mover_wins(len: usize, covered: u64, memo: &mut HashMap<u64, bool>) -> bool {
    if let Some(&w) = memo.get(&covered) {
        return w;
    }
    let win = (0..len.saturating_sub(1)).any(|i| {
        let tile = 0b11u64 << i;
        covered & tile == 0 && !mover_wins(len, covered | tile, memo)
    });
    memo.insert(covered, win);
    win
}

//! No-Factor: numbers 1..=n are written out; a move removes any nonempty set
//! of numbers none of which has a proper divisor still on the board.

use crate::engine::{Outcome, Position, SolveError, Solver};
use crate::ParamError;

/// Largest board representable in the 64-bit number set.
pub const NOFACTOR_MAX_BOARD: u32 = 63;

/// Board state. Bit `i` of `remaining` is set when number `i` is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NoFactorPosition {
    size: u32,
    remaining: u64,
}

fn full_mask(size: u32) -> u64 {
    // bits 1..=size
    if size == 0 {
        0
    } else {
        (u64::MAX >> (63 - size)) & !1
    }
}

impl NoFactorPosition {
    pub fn new(size: u32) -> Result<Self, ParamError> {
        if size > NOFACTOR_MAX_BOARD {
            return Err(ParamError::new(format!(
                "no-factor board size {size} exceeds {NOFACTOR_MAX_BOARD}"
            )));
        }
        Ok(Self {
            size,
            remaining: full_mask(size),
        })
    }

    /// Position with an explicit set of numbers left on a board of `size`.
    pub fn with_numbers(size: u32, numbers: &[u32]) -> Result<Self, ParamError> {
        let mut pos = Self::new(size)?;
        pos.remaining = 0;
        for &x in numbers {
            if x == 0 || x > size {
                return Err(ParamError::new(format!("{x} is not on a board of {size}")));
            }
            pos.remaining |= 1 << x;
        }
        Ok(pos)
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn remaining_mask(&self) -> u64 {
        self.remaining
    }

    pub fn numbers(&self) -> Vec<u32> {
        mask_numbers(self.remaining)
    }

    /// Numbers with no proper divisor still present.
    pub fn removable(&self) -> u64 {
        let mut out = 0;
        for x in mask_numbers(self.remaining) {
            let blocked = (1..x).any(|d| x % d == 0 && self.remaining & (1 << d) != 0);
            if !blocked {
                out |= 1 << x;
            }
        }
        out
    }
}

/// Numbers whose bits are set, ascending.
pub fn mask_numbers(mask: u64) -> Vec<u32> {
    (0..64).filter(|i| mask & (1 << i) != 0).collect()
}

impl Position for NoFactorPosition {
    /// Bit mask of the numbers removed.
    type Move = u64;

    /// Every nonempty subset of the removable numbers, ascending by bit
    /// pattern.
    fn moves(&self) -> Vec<u64> {
        let free = self.removable();
        let mut out = Vec::new();
        let mut sub: u64 = 0;
        loop {
            sub = sub.wrapping_sub(free) & free;
            if sub == 0 {
                break;
            }
            out.push(sub);
        }
        out
    }

    fn play(&self, removed: &u64) -> Self {
        Self {
            size: self.size,
            remaining: self.remaining & !removed,
        }
    }

    fn cache_key(&self) -> Vec<u8> {
        self.remaining.to_le_bytes().to_vec()
    }

    fn is_terminal(&self) -> bool {
        self.remaining == 0
    }
}

/// Outcome of the full board 1..=n by exhaustive outcome search.
pub fn nofactor_outcome(size: u32) -> Result<Outcome, NoFactorError> {
    let pos = NoFactorPosition::new(size)?;
    Ok(Solver::new().outcome(&pos)?)
}

/// N for `n = 1`, P otherwise (the empty board included).
pub fn nofactor_outcome_closed(size: u32) -> Outcome {
    if size == 1 {
        Outcome::N
    } else {
        Outcome::P
    }
}

#[derive(Debug, thiserror::Error)]
pub enum NoFactorError {
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Largest prime `p` with `n/2 < p <= n`, if one exists.
pub fn bertrand_prime(n: u64) -> Option<u64> {
    fn is_prime(p: u64) -> bool {
        p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
    }
    (n / 2 + 1..=n).rev().find(|&p| is_prime(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u32]) -> u64 {
        xs.iter().fold(0, |m, &x| m | 1 << x)
    }

    #[test]
    fn removable_examples() {
        assert_eq!(NoFactorPosition::new(9).unwrap().removable(), set(&[1]));
        let pos = NoFactorPosition::with_numbers(9, &[2, 4]).unwrap();
        assert_eq!(pos.removable(), set(&[2]));
        let pos = NoFactorPosition::with_numbers(9, &[4, 9]).unwrap();
        assert_eq!(pos.removable(), set(&[4, 9]));
    }

    #[test]
    fn move_examples() {
        let pos = NoFactorPosition::with_numbers(9, &[1, 4]).unwrap();
        assert_eq!(pos.moves(), vec![set(&[1])]);
        let pos = NoFactorPosition::with_numbers(9, &[4, 9]).unwrap();
        assert_eq!(pos.moves(), vec![set(&[4]), set(&[9]), set(&[4, 9])]);
        let pos = NoFactorPosition::new(2).unwrap();
        let succ = pos.successors();
        assert_eq!(succ.len(), 1);
        assert_eq!(succ[0].1.numbers(), vec![2]);
    }

    #[test]
    fn first_move_is_always_one() {
        for n in 1..=NOFACTOR_MAX_BOARD {
            assert_eq!(NoFactorPosition::new(n).unwrap().moves(), vec![set(&[1])]);
        }
    }

    #[test]
    fn outcome_examples() {
        assert_eq!(nofactor_outcome(0).unwrap(), Outcome::P);
        assert_eq!(nofactor_outcome(1).unwrap(), Outcome::N);
        assert_eq!(nofactor_outcome(2).unwrap(), Outcome::P);
        assert_eq!(nofactor_outcome(6).unwrap(), Outcome::P);
        assert!(nofactor_outcome(64).is_err());
    }

    #[test]
    fn removable_nonempty_when_board_nonempty() {
        for mask in (0u64..1 << 12).map(|m| m << 1) {
            let pos = NoFactorPosition {
                size: 12,
                remaining: mask,
            };
            assert_eq!(pos.removable() == 0, mask == 0);
        }
    }

    #[test]
    fn bertrand_small() {
        assert_eq!(bertrand_prime(1), None);
        assert_eq!(bertrand_prime(2), Some(2));
        assert_eq!(bertrand_prime(12), Some(11));
        assert_eq!(bertrand_prime(14), Some(13));
    }
}

//! Chocolate Stones: with modulus `m`, a pile of `n` stones allows taking
//! any amount from `n mod m` (or `m` when `m` divides `n`) up to `m`.

use crate::engine::{Outcome, Position};
use crate::ParamError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChocolatePosition {
    modulus: u64,
    stones: u64,
}

impl ChocolatePosition {
    pub fn new(modulus: u64, stones: u64) -> Result<Self, ParamError> {
        if modulus == 0 {
            return Err(ParamError::new("chocolate modulus must be at least 1"));
        }
        Ok(Self { modulus, stones })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn stones(&self) -> u64 {
        self.stones
    }

    /// Legal take amounts, ascending. Takes are capped at the pile size.
    pub fn takes(&self) -> Vec<u64> {
        if self.stones == 0 {
            return Vec::new();
        }
        let min = match self.stones % self.modulus {
            0 => self.modulus,
            r => r,
        };
        (min..=self.modulus.min(self.stones)).collect()
    }
}

impl Position for ChocolatePosition {
    type Move = u64;

    fn moves(&self) -> Vec<u64> {
        self.takes()
    }

    fn play(&self, take: &u64) -> Self {
        Self {
            modulus: self.modulus,
            stones: self.stones - take,
        }
    }

    fn cache_key(&self) -> Vec<u8> {
        let mut key = self.modulus.to_le_bytes().to_vec();
        key.extend_from_slice(&self.stones.to_le_bytes());
        key
    }

    fn is_terminal(&self) -> bool {
        self.stones == 0
    }
}

/// `ceil(n / m)`; every legal move lowers it by exactly one.
pub fn chocolate_value(stones: u64, modulus: u64) -> u64 {
    stones.div_ceil(modulus)
}

/// P exactly when the chocolate value is even.
pub fn chocolate_outcome_closed(stones: u64, modulus: u64) -> Outcome {
    if chocolate_value(stones, modulus) % 2 == 0 {
        Outcome::P
    } else {
        Outcome::N
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::Solver;

    fn takes(m: u64, n: u64) -> Vec<u64> {
        ChocolatePosition::new(m, n).unwrap().takes()
    }

    #[test]
    fn move_examples() {
        assert_eq!(takes(2, 5), vec![1, 2]);
        assert_eq!(takes(2, 4), vec![2]);
        assert_eq!(takes(3, 2), vec![2]);
        assert_eq!(takes(3, 0), Vec::<u64>::new());
        assert_eq!(takes(1, 7), vec![1]);
    }

    #[test]
    fn zero_modulus_rejected() {
        assert!(ChocolatePosition::new(0, 3).is_err());
    }

    #[test]
    fn value_examples() {
        assert_eq!(chocolate_value(0, 7), 0);
        assert_eq!(chocolate_value(5, 2), 3);
        assert_eq!(chocolate_value(6, 3), 2);
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(chocolate_outcome_closed(0, 4), Outcome::P);
        assert_eq!(chocolate_outcome_closed(3, 2), Outcome::P);
        assert_eq!(chocolate_outcome_closed(7, 3), Outcome::N);
        // Exhaustive search agrees on the derived examples.
        let mut s = Solver::new();
        assert_eq!(
            s.outcome(&ChocolatePosition::new(2, 3).unwrap()).unwrap(),
            Outcome::P
        );
        let mut s = Solver::new();
        assert_eq!(
            s.outcome(&ChocolatePosition::new(3, 7).unwrap()).unwrap(),
            Outcome::N
        );
    }

    #[test]
    fn every_move_lowers_value_by_one() {
        for m in 1..=10 {
            for n in 1..=10_000 {
                let pos = ChocolatePosition::new(m, n).unwrap();
                let f = chocolate_value(n, m);
                for t in pos.takes() {
                    assert_eq!(chocolate_value(n - t, m), f - 1, "m={m} n={n} t={t}");
                }
            }
        }
    }

    #[test]
    fn forced_move_on_even_pile() {
        let mut s = Solver::new();
        let pos = ChocolatePosition::new(2, 4).unwrap();
        assert_eq!(s.best_move(&pos).unwrap(), Some(2));
    }
}

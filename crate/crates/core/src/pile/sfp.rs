//! Sum-from-Product: from `n`, pick positive `a * b = n` and move to
//! `n - a - b` provided the result is at least 1.

use crate::engine::{Outcome, Position, SolveError, Solver};
use crate::ParamError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SfpPosition {
    n: u64,
}

/// Factor pair with `a <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SfpMove {
    pub a: u64,
    pub b: u64,
}

impl SfpPosition {
    pub fn new(n: u64) -> Result<Self, ParamError> {
        if n == 0 {
            return Err(ParamError::new("sum-from-product needs n >= 1"));
        }
        Ok(Self { n })
    }

    pub fn value(&self) -> u64 {
        self.n
    }

    /// Factor pairs with a legal result, ordered by ascending successor.
    pub fn factor_moves(&self) -> Vec<SfpMove> {
        let n = self.n;
        let mut out = Vec::new();
        let mut a = 1;
        while a * a <= n {
            if n % a == 0 {
                let b = n / a;
                if a + b < n {
                    out.push(SfpMove { a, b });
                }
            }
            a += 1;
        }
        // a + n/a shrinks as a grows toward sqrt(n), so the successors
        // n - a - b come out ascending and distinct.
        out
    }

    /// Successor values, ascending.
    pub fn successor_values(&self) -> Vec<u64> {
        self.factor_moves()
            .iter()
            .map(|m| self.n - m.a - m.b)
            .collect()
    }
}

impl Position for SfpPosition {
    type Move = SfpMove;

    fn moves(&self) -> Vec<SfpMove> {
        self.factor_moves()
    }

    fn play(&self, mv: &SfpMove) -> Self {
        Self {
            n: self.n - mv.a - mv.b,
        }
    }

    fn cache_key(&self) -> Vec<u8> {
        self.n.to_le_bytes().to_vec()
    }
}

/// Splits `1..=limit` into (P-positions, N-positions), both ascending.
pub fn sfp_classify_range(limit: u64) -> Result<(Vec<u64>, Vec<u64>), SolveError> {
    let mut solver = Solver::new();
    let mut p = Vec::new();
    let mut n = Vec::new();
    for v in 1..=limit {
        let pos = SfpPosition { n: v };
        match solver.outcome(&pos)? {
            Outcome::P => p.push(v),
            Outcome::N => n.push(v),
        }
    }
    Ok((p, n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn succ(n: u64) -> Vec<u64> {
        SfpPosition::new(n).unwrap().successor_values()
    }

    #[test]
    fn move_examples() {
        assert_eq!(succ(4), Vec::<u64>::new());
        assert_eq!(succ(6), vec![1]);
        assert_eq!(succ(13), Vec::<u64>::new());
        assert_eq!(succ(36), vec![16, 21, 23, 24]);
        assert!(SfpPosition::new(0).is_err());
    }

    #[test]
    fn classify_examples() {
        let (p, n) = sfp_classify_range(30).unwrap();
        assert_eq!(
            p,
            [1, 2, 3, 4, 5, 7, 11, 13, 16, 17, 19, 22, 23, 25, 27, 29]
        );
        assert_eq!(n, [6, 8, 9, 10, 12, 14, 15, 18, 20, 21, 24, 26, 28, 30]);
        assert_eq!(sfp_classify_range(1).unwrap(), (vec![1], vec![]));
    }

    #[test]
    fn terminal_set_is_one_four_and_primes() {
        let limit = 10_000usize;
        let mut composite = vec![false; limit + 1];
        for i in 2..=limit {
            if !composite[i] {
                for j in (i * i..=limit).step_by(i) {
                    composite[j] = true;
                }
            }
        }
        for n in 1..=limit {
            let terminal = SfpPosition::new(n as u64).unwrap().is_terminal();
            let expected = n == 1 || n == 4 || (n >= 2 && !composite[n]);
            assert_eq!(terminal, expected, "n={n}");
        }
    }
}

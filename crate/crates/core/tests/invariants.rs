use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use impartial::grid::{CellConfig, TokenConfig};
use impartial::pile::{
    bertrand_prime, demon_move_count, ChocolatePosition, DemonPosition, NoFactorPosition,
};
use impartial::{Outcome, Position, Solver};

/// Every position reachable from `start`.
fn reachable<P: Position + Clone>(start: &P) -> Vec<P> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(p) = queue.pop_front() {
        if !seen.insert(p.cache_key()) {
            continue;
        }
        for (_, next) in p.successors() {
            queue.push_back(next);
        }
        out.push(p);
    }
    out
}

/// A cached P label needs every successor cached as N; a cached N label
/// needs some successor cached P.
fn replay_outcomes<P: Position + Clone>(start: P) {
    let mut solver = Solver::new().flat();
    solver.outcome(&start).unwrap();
    let mut checked = 0;
    for pos in reachable(&start) {
        let Some(label) = solver.cache().outcome_of(&pos.cache_key()) else {
            continue;
        };
        let succ: Vec<Option<Outcome>> = pos
            .successors()
            .iter()
            .map(|(_, s)| solver.cache().outcome_of(&s.cache_key()))
            .collect();
        match label {
            Outcome::P => assert!(succ.iter().all(|o| *o == Some(Outcome::N))),
            Outcome::N => assert!(succ.contains(&Some(Outcome::P))),
        }
        checked += 1;
    }
    assert!(checked > 0);
}

#[test]
fn cached_outcomes_replay_consistently() {
    replay_outcomes(DemonPosition::new(400));
    replay_outcomes(ChocolatePosition::new(3, 60).unwrap());
    replay_outcomes(TokenConfig::diamond(2));
    replay_outcomes(CellConfig::rect(3, 3));
    replay_outcomes(NoFactorPosition::new(9).unwrap());
}

#[test]
fn grundy_zero_iff_outcome_p() {
    let start = TokenConfig::diamond(2);
    let mut by_grundy = Solver::new();
    let mut by_outcome = Solver::new();
    for pos in reachable(&start) {
        let g = by_grundy.grundy(&pos).unwrap();
        assert_eq!(g == 0, by_outcome.outcome(&pos).unwrap() == Outcome::P);
    }
    let rect = CellConfig::rect(2, 6);
    for pos in reachable(&rect) {
        let g = by_grundy.grundy(&pos).unwrap();
        assert_eq!(g == 0, by_outcome.outcome(&pos).unwrap() == Outcome::P);
    }
}

/// Every playout length from `coins` when the side that wins always moves
/// to a P-position and the other side moves arbitrarily.
fn winner_optimal_lengths(
    coins: u64,
    solver: &mut Solver,
    memo: &mut HashMap<u64, BTreeSet<u64>>,
) -> BTreeSet<u64> {
    // Bottom-up: every move lowers the coin count.
    for n in 0..=coins {
        if memo.contains_key(&n) {
            continue;
        }
        let pos = DemonPosition::new(n);
        let mover_wins = solver.outcome(&pos).unwrap() == Outcome::N;
        let mut lengths = BTreeSet::new();
        if pos.is_terminal() {
            lengths.insert(0);
        }
        for (_, next) in pos.successors() {
            if mover_wins && solver.outcome(&next).unwrap() != Outcome::P {
                continue;
            }
            for l in &memo[&next.coins()] {
                lengths.insert(l + 1);
            }
        }
        memo.insert(n, lengths);
    }
    memo[&coins].clone()
}

#[test]
fn demon_move_count_is_forced_once_the_winner_is_optimal() {
    let mut solver = Solver::new();
    let mut memo = HashMap::new();
    for n in 0..=2000 {
        let lengths = winner_optimal_lengths(n, &mut solver, &mut memo);
        assert_eq!(lengths, BTreeSet::from([demon_move_count(n)]), "n = {n}");
    }
}

#[test]
fn demon_move_count_is_not_fixed_under_arbitrary_play() {
    // Sanity check that the optimal-winner reading is what matters: some
    // start has playouts of different lengths once both sides play freely.
    let mut all: HashMap<u64, BTreeSet<u64>> = HashMap::new();
    for n in 0..=200u64 {
        let pos = DemonPosition::new(n);
        let mut lengths = BTreeSet::new();
        if pos.is_terminal() {
            lengths.insert(0);
        }
        for (_, next) in pos.successors() {
            for l in &all[&next.coins()] {
                lengths.insert(l + 1);
            }
        }
        all.insert(n, lengths);
    }
    assert!(all.values().any(|l| l.len() > 1));
}

#[test]
fn bertrand_prime_exists_up_to_a_million() {
    // Sieve once, then track the largest prime seen so far.
    const LIMIT: usize = 1_000_000;
    let mut composite = vec![false; LIMIT + 1];
    let mut largest = 0usize;
    for n in 2..=LIMIT {
        if !composite[n] {
            largest = n;
            let mut k = n * n;
            while k <= LIMIT {
                composite[k] = true;
                k += n;
            }
        }
        assert!(2 * largest > n, "no prime in ({}, {n}]", n / 2);
    }
    for n in [2u64, 3, 10, 100, 1_000, 999_983] {
        let p = bertrand_prime(n).unwrap();
        assert!(2 * p > n && p <= n);
    }
}

#[test]
fn nofactor_first_move_is_one() {
    for n in 1..=12 {
        let pos = NoFactorPosition::new(n).unwrap();
        let moves = pos.moves();
        assert_eq!(moves.len(), 1, "n = {n}");
        assert_eq!(impartial::pile::nofactor::mask_numbers(moves[0]), vec![1]);
    }
}

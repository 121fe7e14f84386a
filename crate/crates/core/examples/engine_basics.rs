//! Grundy values, outcomes and sums with the generic solver.

use impartial::pile::DemonPosition;
use impartial::{mex, nim_sum, Position, Solver};

fn main() {
    println!("mex {{0, 1, 3}} = {}", mex([0, 1, 3]));
    println!("nim-sum 3 ^ 5 ^ 6 = {}", nim_sum([3, 5, 6]));

    let mut solver = Solver::new();
    for coins in [0, 2, 5, 8, 13, 24] {
        let pos = DemonPosition::new(coins);
        let g = solver.grundy(&pos).expect("small game");
        let best = solver.best_move(&pos).expect("small game");
        println!(
            "demon {coins:>2}: grundy {g}, outcome {:?}, best take {best:?}",
            solver.outcome(&pos).unwrap()
        );
    }
    let cache = solver.cache();
    println!(
        "cache: {} entries, {} hits, {} misses",
        cache.len(),
        cache.hits(),
        cache.misses()
    );
    println!("moves from 10 coins: {:?}", DemonPosition::new(10).moves());
}

//! Line-removal on token sets: closed forms and the two strategy checks.

use impartial::grid::{
    diamond_outcome_closed, verify_diamond_strategy, verify_mirror_strategy, DiamondShape,
};
use impartial::Solver;

fn main() {
    let mut solver = Solver::new();
    for shape in [
        DiamondShape::Diamond { c: 2 },
        DiamondShape::Cross { m: 3, n: 5 },
        DiamondShape::Rect { m: 2, n: 3 },
    ] {
        let config = shape.config().unwrap();
        let brute = solver.outcome(&config).unwrap();
        println!(
            "{shape:?}: solver {brute:?}, closed form {:?}",
            diamond_outcome_closed(shape)
        );
    }

    for c in 1..=3 {
        let n = verify_diamond_strategy(c).expect("strategy wins");
        println!("diamond c={c}: second player wins, {n} positions examined");
    }
    let configs = verify_mirror_strategy(8).expect("mirroring wins");
    println!("mirror strategy wins on {configs} symmetric configurations");
}

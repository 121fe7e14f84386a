//! Closed forms for the pile games checked against the solver.

use impartial::pile::{
    bertrand_prime, chocolate_outcome_closed, demon_move_count, demon_outcome_closed,
    nofactor_outcome, sfp_classify_range, ChocolatePosition, DemonPosition,
};
use impartial::Solver;

fn main() {
    let mut solver = Solver::new();
    let agree = (0..=200).all(|n| {
        let pos = ChocolatePosition::new(3, n).unwrap();
        solver.outcome(&pos).unwrap() == chocolate_outcome_closed(n, 3)
    });
    println!("chocolate m=3, n<=200: closed form agrees = {agree}");

    let labels: String = (0..=24)
        .map(|n| format!("{:?}", demon_outcome_closed(n)))
        .collect();
    println!("demon 0..=24: {labels}");
    println!(
        "demon 1000 coins: {:?} after {} moves",
        solver.outcome(&DemonPosition::new(1000)).unwrap(),
        demon_move_count(1000)
    );

    let (p, _) = sfp_classify_range(60).unwrap();
    println!("sum-from-product P-positions up to 60: {p:?}");

    for n in 1..=8 {
        println!("no-factor 1..={n}: {:?}", nofactor_outcome(n).unwrap());
    }
    println!("Bertrand prime for 100: {:?}", bertrand_prime(100));
}

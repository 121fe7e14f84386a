//! Remove-an-Edge on graph families, plus the domino and cycle links.

use std::sync::Arc;

use impartial::graph::rae::RaePosition;
use impartial::graph::{
    domino_outcome, edge_delete_path_outcome, path_grundy, rae_outcome_closed, rae_solve_general,
    GraphFamily, SimpleGraph,
};
use impartial::Solver;

fn main() {
    for family in [
        GraphFamily::Complete(6),
        GraphFamily::Star(9),
        GraphFamily::Path(15),
        GraphFamily::Cycle(17),
    ] {
        let (outcome, g) = rae_solve_general(family.build().unwrap()).unwrap();
        println!(
            "{family:?}: solver {outcome:?} (grundy {g}), closed form {:?}",
            rae_outcome_closed(family).unwrap()
        );
    }
    println!("path nimbers 0..=20: {:?}", path_grundy(20));

    for n in 2..=10 {
        println!(
            "P_{n}: edge-delete {:?}, domino strip {} {:?}",
            edge_delete_path_outcome(n).unwrap(),
            n - 2,
            domino_outcome(n - 2)
        );
    }

    let graph = SimpleGraph::parse("n 5\n0 1\n1 2\n2 3\n3 4\n1 3\n").unwrap();
    let pos = RaePosition::new(Arc::new(graph));
    let mut solver = Solver::new();
    println!(
        "custom graph: {:?}, best move {:?}",
        solver.outcome(&pos).unwrap(),
        solver.best_move(&pos).unwrap()
    );
}

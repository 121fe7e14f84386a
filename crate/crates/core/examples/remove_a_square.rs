//! The 2-by-n Grundy table, its period and small rectangles.

use impartial::engine::detect_period;
use impartial::grid::{ras_grundy_2xn, ras_p_positions, CellConfig};
use impartial::Solver;

fn main() {
    let table = ras_grundy_2xn(48);
    for row in table.values()[1..].chunks(12) {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        println!("{}", cells.join(" "));
    }

    let long = ras_grundy_2xn(400);
    let report = detect_period(long.values(), 200, 2);
    println!(
        "period {} after preperiod {}",
        report.period, report.preperiod
    );
    println!("P-positions up to 100: {:?}", ras_p_positions(100));

    let mut solver = Solver::new();
    for (rows, cols) in [(3, 3), (3, 4), (4, 4)] {
        let g = solver.grundy(&CellConfig::rect(rows, cols)).unwrap();
        println!("{rows}x{cols} rectangle: grundy {g}");
    }
}

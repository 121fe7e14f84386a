//! Compares computed sequences with the bundled OEIS snapshots.

use impartial::graph::path_grundy;
use impartial::grid::ras_grundy_2xn;
use impartial::oeis::{compare, SnapshotStore};

fn main() {
    let store = SnapshotStore::bundled();

    let ras: Vec<i64> = ras_grundy_2xn(192)
        .values()
        .iter()
        .map(|&g| g.into())
        .collect();
    let report = compare(&ras, 0, &store.load("A286332").unwrap(), 0).unwrap();
    print!("{report}");

    // The sequence index is one less than the vertex count.
    let path: Vec<i64> = path_grundy(151)[1..].iter().map(|&g| g.into()).collect();
    let report = compare(&path, 1, &store.load("A002187").unwrap(), -1).unwrap();
    print!("{report}");
}

//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use impartial::engine::detect_period;
use impartial::graph::rae::RaePosition;
use impartial::graph::{
    domino_outcome, edge_delete_path_outcome, path_grundy, path_p_member, rae_outcome_closed,
    rae_solve_general, GraphFamily, SimpleGraph,
};
use impartial::grid::{
    diamond_outcome_closed, ras_grundy_2xn, verify_diamond_strategy, verify_mirror_strategy,
    DiamondShape,
};
use impartial::oeis::{compare, BFile, SnapshotStore};
use impartial::pile::{
    chocolate_outcome_closed, chocolate_value, demon_move_count, demon_outcome_closed,
    nofactor_outcome, sfp_classify_range, ChocolatePosition, DemonPosition,
};
use impartial::play::{CellShape, GameSpec, GraphShape, TokenShape};
use impartial::{Outcome, Position, Solver};

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn snapshot(id: &str) -> Result<BFile, String> {
    SnapshotStore::bundled().load(id).map_err(|e| e.to_string())
}

fn table_reproduction() -> Check {
    let text = include_str!("data/ras_2xn_first_192.txt");
    let expected: Vec<u32> = text
        .split_whitespace()
        .map(|t| t.parse().map_err(|_| format!("bad table entry {t:?}")))
        .collect::<Result<_, _>>()?;
    ensure(expected.len() == 192, || {
        format!("table has {} entries", expected.len())
    })?;
    let table = ras_grundy_2xn(192);
    let computed = &table.values()[1..];
    if let Some(i) = (0..192).find(|&i| computed[i] != expected[i]) {
        return Err(format!(
            "G({}) = {}, table says {}",
            i + 1,
            computed[i],
            expected[i]
        ));
    }
    ensure(
        computed[..12] == [0, 2, 2, 1, 4, 3, 3, 1, 4, 2, 6, 5],
        || "G(1..12) differ".into(),
    )?;
    ensure(table.get(15) == Some(7), || {
        format!("G(15) = {:?}", table.get(15))
    })?;
    Ok("192/192 entries match".into())
}

fn period_twelve() -> Check {
    let g = ras_grundy_2xn(600);
    let values = g.values();
    let report = detect_period(values, 300, 2);
    ensure(
        report.is_confirmed() && report.period == 12 && report.preperiod <= 72,
        || format!("detected {report:?}"),
    )?;
    ensure(report.holds_for(values), || "report does not hold".into())?;
    if let Some(n) = (83..=600).find(|&n| values[n] != values[n - 12]) {
        return Err(format!("G({n}) != G({})", n - 12));
    }
    Ok(format!("period 12, preperiod {}", report.preperiod))
}

fn zeros_are_12a_plus_1() -> Check {
    let g = ras_grundy_2xn(600);
    let zeros: Vec<usize> = (1..=600).filter(|&n| g.values()[n] == 0).collect();
    let expected: Vec<usize> = (0..)
        .map(|a| 12 * a + 1)
        .take_while(|&n| n <= 600)
        .collect();
    ensure(zeros == expected, || format!("zeros {zeros:?}"))?;
    Ok(format!("{} zeros", zeros.len()))
}

fn oeis_regression() -> Check {
    let as_i64 = |v: &[u32]| v.iter().map(|&x| i64::from(x)).collect::<Vec<_>>();
    let diff = |computed: &[i64], first: i64, id: &str, offset: i64| -> Result<(), String> {
        let report = compare(computed, first, &snapshot(id)?, offset).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("{report}"))
    };

    // A286332 from n = 0 through 192.
    diff(&as_i64(ras_grundy_2xn(192).values()), 0, "A286332", 0)?;

    // Sum-from-Product P and N sets up to 200.
    let (p, n) = sfp_classify_range(200).map_err(|e| e.to_string())?;
    for (id, side) in [("A285304", p), ("A285847", n)] {
        let reference: Vec<i64> = snapshot(id)?
            .values()
            .into_iter()
            .filter(|&v| v <= 200)
            .collect();
        let computed: Vec<i64> = side.iter().map(|&v| v as i64).collect();
        ensure(reference == computed, || format!("{id} differs below 200"))?;
    }

    // A002187(n - 1) is the path nimber on n vertices; n - 1 runs to 150.
    diff(&as_i64(&path_grundy(151)[1..]), 1, "A002187", -1)?;

    // Cycle N-positions via the path reduction.
    let g = path_grundy(200);
    let cycle_n: Vec<i64> = (2..=200)
        .filter(|&n| g[n - 2] == 0)
        .map(|n| n as i64)
        .collect();
    ensure(
        cycle_n[..12] == [2, 3, 7, 11, 17, 23, 27, 31, 37, 41, 45, 57],
        || format!("first cycle terms {:?}", &cycle_n[..12]),
    )?;
    let a274161 = snapshot("A274161")?.values();
    ensure(
        a274161.len() <= cycle_n.len() && a274161 == cycle_n[..a274161.len()],
        || "A274161 differs from the cycle reduction".into(),
    )?;

    // Path P-positions: zeros of the recursion, the membership rule and the
    // shift rule must all agree with the snapshot.
    let a215721 = snapshot("A215721")?;
    let values = a215721.values();
    let top = *values.last().ok_or("A215721 snapshot is empty")? as usize;
    let g = path_grundy(top);
    let zeros: Vec<i64> = (0..=top).filter(|&n| g[n] == 0).map(|n| n as i64).collect();
    ensure(zeros == values, || {
        "A215721 differs from the path zeros".into()
    })?;
    if let Some(n) = (0..=top).find(|&n| path_p_member(n) != (g[n] == 0)) {
        return Err(format!("membership rule wrong at {n}"));
    }
    for (n, v) in a215721.entries.iter().copied().filter(|&(n, _)| n > 14) {
        let back = a215721
            .get(n - 5)
            .ok_or_else(|| format!("missing A215721({})", n - 5))?;
        ensure(v == back + 34, || {
            format!(
                "A215721({n}) = {v}, A215721({}) + 34 = {}",
                n - 5,
                back + 34
            )
        })?;
    }
    Ok(format!("6 sequences, A215721 through {top}"))
}

fn closed_forms() -> Check {
    // Chocolate, with the value dropping by one on every move.
    for m in 1..=10u64 {
        let mut solver = Solver::new();
        for n in 0..=2000u64 {
            let pos = ChocolatePosition::new(m, n).map_err(|e| e.to_string())?;
            let brute = solver.outcome(&pos).map_err(|e| e.to_string())?;
            ensure(brute == chocolate_outcome_closed(n, m), || {
                format!("chocolate m={m} n={n}")
            })?;
            for take in pos.takes() {
                ensure(
                    chocolate_value(n - take, m) + 1 == chocolate_value(n, m),
                    || format!("chocolate value m={m} n={n} take {take}"),
                )?;
            }
        }
    }

    // Demon outcomes, then game length under optimal play on both sides.
    let mut solver = Solver::new();
    for n in 0..=100_000u64 {
        let brute = solver
            .outcome(&DemonPosition::new(n))
            .map_err(|e| e.to_string())?;
        ensure(brute == demon_outcome_closed(n), || format!("demon n={n}"))?;
    }
    for n in 0..=10_000u64 {
        let mut pos = DemonPosition::new(n);
        let mut moves = 0;
        while let Some(take) = solver.best_move(&pos).map_err(|e| e.to_string())? {
            pos = pos.play(&take);
            moves += 1;
        }
        ensure(moves == demon_move_count(n), || {
            format!("demon n={n}: {moves} moves")
        })?;
    }

    // Token removal shapes against the general solver.
    let mut solver = Solver::new();
    let mut shapes: Vec<DiamondShape> = (1..=3).map(|c| DiamondShape::Diamond { c }).collect();
    for m in 1..=6 {
        shapes.extend((1..=6).map(|n| DiamondShape::Cross { m, n }));
    }
    for m in 1..=5 {
        shapes.extend((1..=5).map(|n| DiamondShape::Rect { m, n }));
    }
    for m in 1..=2 {
        shapes.extend((6..=8).map(|n| DiamondShape::Rect { m, n }));
    }
    for shape in &shapes {
        let config = shape.config().map_err(|e| e.to_string())?;
        let brute = solver.outcome(&config).map_err(|e| e.to_string())?;
        ensure(brute == diamond_outcome_closed(*shape), || {
            format!("{shape:?}")
        })?;
    }

    // Remove-an-Edge families.
    let solved = |g: Result<SimpleGraph, _>| -> Result<Outcome, String> {
        let g = g.map_err(|e: impartial::graph::GraphError| e.to_string())?;
        rae_solve_general(g)
            .map(|(o, _)| o)
            .map_err(|e| e.to_string())
    };
    let closed = |f| rae_outcome_closed(f).map_err(|e| e.to_string());
    for n in 1..=12 {
        ensure(
            solved(SimpleGraph::complete(n))? == closed(GraphFamily::Complete(n))?,
            || format!("K_{n}"),
        )?;
    }
    for n in 2..=12 {
        ensure(
            solved(SimpleGraph::star(n))? == closed(GraphFamily::Star(n))?,
            || format!("S_{n}"),
        )?;
    }
    let recursion = path_grundy(40);
    let mut solver = Solver::new();
    for (n, &expected) in recursion.iter().enumerate().skip(1) {
        let graph = SimpleGraph::path(n).map_err(|e| e.to_string())?;
        let brute = solver
            .grundy(&RaePosition::new(Arc::new(graph)))
            .map_err(|e| e.to_string())?;
        ensure(brute == expected, || {
            format!("P_{n}: {brute} vs {}", expected)
        })?;
        ensure(
            Outcome::from_grundy(brute) == closed(GraphFamily::Path(n))?,
            || format!("P_{n} closed form"),
        )?;
    }
    for n in 3..=16 {
        ensure(
            solved(SimpleGraph::cycle(n))? == closed(GraphFamily::Cycle(n))?,
            || format!("C_{n}"),
        )?;
    }
    Ok(format!(
        "{} token shapes, graph families through P_40",
        shapes.len()
    ))
}

fn strategies() -> Check {
    let configs = verify_mirror_strategy(12).map_err(|e| e.to_string())?;
    let mut positions = Vec::new();
    for c in 1..=3 {
        positions.push(verify_diamond_strategy(c).map_err(|e| format!("diamond c={c}: {e}"))?);
    }
    for n in 1..=12 {
        let want = if n == 1 { Outcome::N } else { Outcome::P };
        let got = nofactor_outcome(n).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("no-factor n={n} is {got:?}"))?;
    }
    Ok(format!(
        "mirror on {configs} configs, diamond positions {positions:?}"
    ))
}

fn equivalence_chain() -> Check {
    for n in 2..=14 {
        let edge = edge_delete_path_outcome(n).map_err(|e| e.to_string())?;
        ensure(edge == domino_outcome(n - 2), || {
            format!("n={n}: edge-delete {edge:?}")
        })?;
    }
    let mut solver = Solver::new();
    for n in 3..=16 {
        let path = SimpleGraph::path(n - 2).map_err(|e| e.to_string())?;
        let reduced = solver
            .outcome(&RaePosition::new(Arc::new(path)))
            .map_err(|e| e.to_string())?;
        let cycle = RaePosition::new(Arc::new(SimpleGraph::cycle(n).map_err(|e| e.to_string())?));
        for (mv, next) in cycle.successors() {
            let o = solver.outcome(&next).map_err(|e| e.to_string())?;
            ensure(o == reduced, || {
                format!("C_{n} after {mv:?}: {o:?} vs P_{} {reduced:?}", n - 2)
            })?;
        }
    }
    Ok("paths 2..=14, cycles 3..=16".into())
}

fn random_points(rng: &mut ChaCha8Rng, max: usize) -> Vec<(i32, i32)> {
    let count = rng.gen_range(1..=max);
    let mut pts: Vec<(i32, i32)> = (0..count)
        .map(|_| (rng.gen_range(0..5), rng.gen_range(0..5)))
        .collect();
    pts.sort_unstable();
    pts.dedup();
    pts
}

fn random_spec(rng: &mut ChaCha8Rng) -> GameSpec {
    match rng.gen_range(0..7) {
        0 => GameSpec::Chocolate {
            modulus: rng.gen_range(1..=40),
            stones: rng.gen_range(0..=2000),
        },
        1 => GameSpec::Demon {
            coins: rng.gen_range(0..=20_000),
        },
        2 => GameSpec::SumFromProduct {
            n: rng.gen_range(1..=2000),
        },
        3 => GameSpec::NoFactor {
            n: rng.gen_range(1..=10),
        },
        4 => GameSpec::Diamond(match rng.gen_range(0..4) {
            0 => TokenShape::Diamond {
                c: rng.gen_range(1..=3),
            },
            1 => TokenShape::Cross {
                m: rng.gen_range(1..=8),
                n: rng.gen_range(1..=8),
            },
            2 => TokenShape::Rect {
                m: rng.gen_range(1..=4),
                n: rng.gen_range(1..=4),
            },
            _ => TokenShape::Custom {
                tokens: random_points(rng, 12),
            },
        }),
        5 => GameSpec::RemoveASquare(match rng.gen_range(0..3) {
            0 => CellShape::Rect {
                rows: rng.gen_range(1..=2),
                cols: rng.gen_range(1..=40),
            },
            1 => CellShape::Rect {
                rows: rng.gen_range(3..=4),
                cols: rng.gen_range(1..=5),
            },
            _ => CellShape::Custom {
                cells: random_points(rng, 16),
            },
        }),
        _ => GameSpec::RemoveAnEdge(match rng.gen_range(0..5) {
            0 => GraphShape::Complete {
                n: rng.gen_range(1..=12),
            },
            1 => GraphShape::Star {
                n: rng.gen_range(2..=24),
            },
            2 => GraphShape::Path {
                n: rng.gen_range(1..=40),
            },
            3 => GraphShape::Cycle {
                n: rng.gen_range(3..=24),
            },
            _ => {
                let n = rng.gen_range(2..=12);
                let edges = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(0.3))
                    .collect::<Vec<_>>();
                GraphShape::Custom { n, edges }
            }
        }),
    }
}

/// One playout. Returns an error describing the first violation.
fn playout(seed: u64) -> Result<bool, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = random_spec(&mut rng);
    let ctx = |e: impartial::play::PlayError| format!("seed {seed} {spec:?}: {e}");
    let mut state = spec.start().map_err(ctx)?;
    for _ in 0..rng.gen_range(0..=3) {
        let Some(mv) = state.legal_moves().choose(&mut rng).cloned() else {
            break;
        };
        state = state.apply(&mv).map_err(ctx)?;
    }

    let mut solver = Solver::new();
    let engine_should_win = state.outcome(&mut solver).map_err(ctx)? == Outcome::N;
    let mut engine_to_move = true;
    let mut engine_moved_last = false;
    while !state.is_terminal() {
        let mv = if engine_to_move || !engine_should_win {
            state
                .best_move(&mut solver)
                .map_err(ctx)?
                .ok_or("no move on a live position")?
        } else {
            state
                .legal_moves()
                .choose(&mut rng)
                .cloned()
                .ok_or("no legal moves")?
        };
        state = state.apply(&mv).map_err(ctx)?;
        // The winning side must always hand over a P-position.
        if engine_to_move == engine_should_win
            && state.outcome(&mut solver).map_err(ctx)? != Outcome::P
        {
            return Err(format!(
                "seed {seed} {spec:?}: winning side left an N-position"
            ));
        }
        engine_moved_last = engine_to_move;
        engine_to_move = !engine_to_move;
    }
    ensure(engine_moved_last == engine_should_win, || {
        format!("seed {seed} {spec:?}: expected engine win = {engine_should_win}")
    })?;
    Ok(engine_should_win)
}

fn engine_soundness() -> Check {
    let mut wins = 0;
    for seed in 0..1000 {
        if playout(seed)? {
            wins += 1;
        }
    }
    Ok(format!(
        "1000 playouts, {wins} from N-positions, 0 violations"
    ))
}

fn run(name: &str, limit: Duration, check: fn() -> Check) -> bool {
    let start = Instant::now();
    let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    let elapsed = start.elapsed();
    let result = result.and_then(|detail| {
        if elapsed <= limit {
            Ok(detail)
        } else {
            Err(format!("{detail}; over the {limit:?} limit"))
        }
    });
    let secs = elapsed.as_secs_f64();
    match &result {
        Ok(detail) => println!("PASS {name}: {detail} [{secs:.2}s]"),
        Err(why) => println!("FAIL {name}: {why} [{secs:.2}s]"),
    }
    result.is_ok()
}

fn main() -> ExitCode {
    panic::set_hook(Box::new(|_| {}));
    let minute = Duration::from_secs(60);
    let criteria: [Criterion; 8] = [
        (
            "2xn Grundy table reproduction",
            Duration::from_secs(1),
            table_reproduction,
        ),
        ("2xn period 12", Duration::from_secs(5), period_twelve),
        ("2xn zeros are 12a+1", minute, zeros_are_12a_plus_1),
        ("OEIS regression", minute, oeis_regression),
        ("closed forms vs solver", 2 * minute, closed_forms),
        ("strategy verification", 2 * minute, strategies),
        (
            "edge-delete / domino / cycle equivalence",
            minute,
            equivalence_chain,
        ),
        ("engine soundness", 5 * minute, engine_soundness),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        if !run(name, limit, check) {
            failed += 1;
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

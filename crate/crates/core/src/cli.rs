//! Command-line front end. Exit codes: 0 success, 2 usage, 3 verification
//! failure, 4 data error, 5 environment error.

use std::io::{self, BufRead, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::engine::{detect_period, DEFAULT_MIN_CONFIRM};
use crate::engine::{Grundy, Outcome, Solver};
use crate::graph::{path_grundy, rae_outcome_closed, rae_solve_general, GraphFamily};
use crate::grid::{
    diamond_outcome_closed, mirror_strategy, parse_points, ras_grundy_2xn, verify_diamond_strategy,
    verify_mirror_strategy, verify_second_player, DiamondShape, StrategyFailure, TokenConfig,
};
use crate::oeis::{compare, fetch_remote, OeisError, SnapshotStore, DEFAULT_URL_PATTERN};
use crate::pile::{
    chocolate_outcome_closed, demon_outcome_closed, nofactor_outcome, nofactor_outcome_closed,
    ChocolatePosition, DemonPosition, SfpPosition,
};
use crate::play::{GameSpec, GameState, PlayError};
use crate::service::{ServiceConfig, ServiceError, DEFAULT_PORT};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Verification(String),
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Environment(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 3,
            CliError::Data(_) => 4,
            CliError::Environment(_) => 5,
        }
    }
}

impl From<OeisError> for CliError {
    fn from(e: OeisError) -> Self {
        match e {
            OeisError::InvalidId(_) => CliError::Usage(e.to_string()),
            OeisError::Offline | OeisError::Network { .. } => CliError::Environment(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(msg.to_string())
}

type CliResult = Result<(), CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "impartial",
    version,
    about = "Sprague-Grundy workbench for seven impartial games"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SequenceGame {
    #[value(name = "remove-a-square-2xn")]
    RemoveASquare2xn,
    PathRemoveAnEdge,
}

impl SequenceGame {
    /// `G(0..=n_max)`.
    fn values(self, n_max: usize) -> Vec<Grundy> {
        match self {
            SequenceGame::RemoveASquare2xn => ras_grundy_2xn(n_max).values().to_vec(),
            SequenceGame::PathRemoveAnEdge => path_grundy(n_max),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassifyGame {
    Chocolate,
    Demon,
    Sfp,
    Nofactor,
    Diamond,
    Cross,
    Rect,
    Complete,
    Star,
    Path,
    Cycle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyGame {
    #[value(name = "remove-a-square-2xn")]
    RemoveASquare2xn,
    PathRemoveAnEdge,
    SfpP,
    SfpN,
    PathP,
    CycleN,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyTarget {
    DiamondStrategy,
    MirrorStrategy,
    NofactorSecondWins,
}

#[derive(Debug, Args)]
pub struct SnapshotArgs {
    /// Snapshot directory; defaults to $IMPARTIAL_OEIS_DIR, then the bundled copies.
    #[arg(long)]
    pub snapshot_dir: Option<PathBuf>,
}

impl SnapshotArgs {
    fn store(&self) -> SnapshotStore {
        match &self.snapshot_dir {
            Some(dir) => SnapshotStore::at(dir),
            None => SnapshotStore::from_env(),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print G(1)..G(n_max) for a sequence-producing game.
    Grundy {
        #[arg(long)]
        game: SequenceGame,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// P/N label for each value in a range.
    Classify {
        #[arg(long)]
        game: ClassifyGame,
        /// Inclusive range `a..b`.
        #[arg(long)]
        range: String,
        /// Chocolate modulus, or the fixed first side of a cross or rectangle.
        #[arg(long)]
        m: Option<u32>,
        /// Force the brute-force oracle.
        #[arg(long, conflicts_with = "check")]
        oracle: bool,
        /// Run closed form and oracle; exit 3 on any disagreement.
        #[arg(long)]
        check: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Diff computed values against an OEIS snapshot.
    Verify {
        #[arg(long)]
        game: VerifyGame,
        /// Sequence id; each game has a default.
        #[arg(long)]
        oeis: Option<String>,
        /// Index shift between computed and reference values.
        #[arg(long, allow_hyphen_values = true)]
        offset: Option<i64>,
        #[arg(long)]
        n_max: Option<usize>,
        #[command(flatten)]
        snapshots: SnapshotArgs,
    },
    /// Detect eventual periodicity of a Grundy sequence (indexed from 0).
    Period {
        #[arg(long)]
        game: SequenceGame,
        #[arg(long)]
        n_max: usize,
        /// Defaults to n_max / 2.
        #[arg(long)]
        max_preperiod: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_MIN_CONFIRM)]
        min_confirm: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Exhaustively check a second-player strategy.
    VerifyStrategy {
        #[arg(long)]
        target: StrategyTarget,
        /// Size bound: diamond c, mirror token count, or No-Factor n.
        #[arg(long)]
        bound: Option<usize>,
        /// Token file (`x y` per line) for the mirror strategy.
        #[arg(long)]
        shape_file: Option<PathBuf>,
    },
    /// Play against the engine on the terminal.
    Play {
        /// chocolate, diamond, demon, sum-from-product, remove-a-square,
        /// remove-an-edge or no-factor.
        #[arg(long)]
        game: String,
        /// Parameters as JSON (`{"coins": 5}`) or `key=value,...`.
        #[arg(long, default_value = "{}")]
        params: String,
        #[arg(long)]
        engine_first: bool,
    },
    /// Run the HTTP service.
    Serve {
        #[arg(long, default_value_t = DEFAULT_PORT)]
        port: u16,
        #[command(flatten)]
        snapshots: SnapshotArgs,
        /// Built UI bundle served at `/`.
        #[arg(long)]
        ui_dir: Option<PathBuf>,
        /// Append-only session journal.
        #[arg(long)]
        journal: Option<PathBuf>,
        /// Session idle timeout in seconds.
        #[arg(long, default_value_t = 3600)]
        ttl: u64,
    },
    /// Refresh a snapshot from the network (explicit opt-in).
    Fetch {
        #[arg(long)]
        oeis: String,
        #[arg(long)]
        allow_network: bool,
        /// `{id}` and `{num}` are substituted.
        #[arg(long, default_value = DEFAULT_URL_PATTERN)]
        url_pattern: String,
        #[command(flatten)]
        snapshots: SnapshotArgs,
    },
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

pub fn run(cli: Cli) -> CliResult {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Grundy {
            game,
            n_max,
            format,
        } => cmd_grundy(game, n_max, format, &mut out),
        Command::Classify {
            game,
            range,
            m,
            oracle,
            check,
            jobs,
            format,
        } => {
            let range = parse_range(&range)?;
            let mode = if check {
                Mode::Check
            } else if oracle {
                Mode::Oracle
            } else {
                Mode::Closed
            };
            cmd_classify(game, range, m, mode, jobs, format, &mut out)
        }
        Command::Verify {
            game,
            oeis,
            offset,
            n_max,
            snapshots,
        } => cmd_verify(game, oeis, offset, n_max, &snapshots.store(), &mut out),
        Command::Period {
            game,
            n_max,
            max_preperiod,
            min_confirm,
            format,
        } => cmd_period(game, n_max, max_preperiod, min_confirm, format, &mut out),
        Command::VerifyStrategy {
            target,
            bound,
            shape_file,
        } => cmd_verify_strategy(target, bound, shape_file, &mut out),
        Command::Play {
            game,
            params,
            engine_first,
        } => {
            let spec = parse_spec(&game, &params)?;
            let stdin = io::stdin();
            cmd_play(&spec, engine_first, stdin.lock(), &mut out).map(|_| ())
        }
        Command::Serve {
            port,
            snapshots,
            ui_dir,
            journal,
            ttl,
        } => {
            if let Some(dir) = &snapshots.snapshot_dir {
                if !dir.is_dir() {
                    return Err(CliError::Environment(format!(
                        "snapshot directory {} does not exist",
                        dir.display()
                    )));
                }
            }
            let config = ServiceConfig {
                ui_dir,
                journal,
                session_ttl: Duration::from_secs(ttl),
            };
            cmd_serve(port, config)
        }
        Command::Fetch {
            oeis,
            allow_network,
            url_pattern,
            snapshots,
        } => {
            let store = snapshots.store();
            let b = fetch_remote(&store, &oeis, allow_network, &url_pattern)?;
            writeln!(
                out,
                "{}: {} entries written to {}",
                oeis,
                b.entries.len(),
                store.path_for(&oeis)?.display()
            )
            .map_err(io_err)
        }
    }
}

fn io_err(e: io::Error) -> CliError {
    CliError::Environment(e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

pub fn cmd_grundy(
    game: SequenceGame,
    n_max: usize,
    format: OutputFormat,
    out: &mut impl Write,
) -> CliResult {
    if n_max < 1 {
        return Err(usage("--n-max must be at least 1"));
    }
    let values = game.values(n_max);
    let text = match format {
        OutputFormat::Table => {
            let width = values
                .iter()
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(1);
            values[1..]
                .chunks(12)
                .map(|row| {
                    row.iter()
                        .map(|v| format!("{v:>width$}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                        + "\n"
                })
                .collect::<String>()
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,g\n");
            for (n, v) in values.iter().enumerate().skip(1) {
                s += &format!("{n},{v}\n");
            }
            s
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = values
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, g)| serde_json::json!({ "n": n, "g": g }))
                .collect();
            to_json(&rows) + "\n"
        }
    };
    out.write_all(text.as_bytes()).map_err(io_err)
}

/// Parses `a..b` or `a..=b`, both inclusive.
pub fn parse_range(text: &str) -> Result<RangeInclusive<u64>, CliError> {
    let bad = || usage(format!("range `{text}` is not of the form a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u64 = a.trim().parse().map_err(|_| bad())?;
    let b: u64 = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(usage(format!("empty range `{text}`")));
    }
    Ok(a..=b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Closed,
    Oracle,
    Check,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Classified {
    pub n: u64,
    pub outcome: Outcome,
}

/// Oracle size bounds per game.
fn oracle_bound(game: ClassifyGame, m: u64) -> u64 {
    match game {
        ClassifyGame::Chocolate | ClassifyGame::Demon | ClassifyGame::Sfp => 1_000_000,
        ClassifyGame::Nofactor => 16,
        ClassifyGame::Diamond => 4,
        ClassifyGame::Cross => 22u64.saturating_sub(m),
        ClassifyGame::Rect => 36 / m.max(1),
        ClassifyGame::Complete => 20,
        ClassifyGame::Star | ClassifyGame::Path | ClassifyGame::Cycle => 24,
    }
}

fn family(game: ClassifyGame, n: u64) -> Option<GraphFamily> {
    let n = n as usize;
    match game {
        ClassifyGame::Complete => Some(GraphFamily::Complete(n)),
        ClassifyGame::Star => Some(GraphFamily::Star(n)),
        ClassifyGame::Path => Some(GraphFamily::Path(n)),
        ClassifyGame::Cycle => Some(GraphFamily::Cycle(n)),
        _ => None,
    }
}

fn token_shape(game: ClassifyGame, m: u32, n: u64) -> Option<DiamondShape> {
    let n = n as u32;
    match game {
        ClassifyGame::Diamond => Some(DiamondShape::Diamond { c: n }),
        ClassifyGame::Cross => Some(DiamondShape::Cross { m, n }),
        ClassifyGame::Rect => Some(DiamondShape::Rect { m, n }),
        _ => None,
    }
}

fn closed_form(game: ClassifyGame, m: u32, n: u64) -> Result<Option<Outcome>, CliError> {
    Ok(Some(match game {
        ClassifyGame::Chocolate => chocolate_outcome_closed(n, m as u64),
        ClassifyGame::Demon => demon_outcome_closed(n),
        ClassifyGame::Sfp => return Ok(None),
        ClassifyGame::Nofactor => nofactor_outcome_closed(n as u32),
        ClassifyGame::Diamond | ClassifyGame::Cross | ClassifyGame::Rect => {
            diamond_outcome_closed(token_shape(game, m, n).expect("token game"))
        }
        _ => rae_outcome_closed(family(game, n).expect("graph game")).map_err(usage)?,
    }))
}

fn oracle(game: ClassifyGame, m: u32, n: u64, solver: &mut Solver) -> Result<Outcome, CliError> {
    let bound = oracle_bound(game, m as u64);
    if n > bound {
        return Err(usage(format!("oracle bound exceeded: n = {n} > {bound}")));
    }
    let solve = |e: crate::SolveError| CliError::Environment(e.to_string());
    match game {
        ClassifyGame::Chocolate => {
            let pos = ChocolatePosition::new(m as u64, n).map_err(usage)?;
            solver.outcome(&pos).map_err(solve)
        }
        ClassifyGame::Demon => solver.outcome(&DemonPosition::new(n)).map_err(solve),
        ClassifyGame::Sfp => {
            let pos = SfpPosition::new(n).map_err(usage)?;
            solver.outcome(&pos).map_err(solve)
        }
        ClassifyGame::Nofactor => nofactor_outcome(n as u32).map_err(usage),
        ClassifyGame::Diamond | ClassifyGame::Cross | ClassifyGame::Rect => {
            let config = token_shape(game, m, n)
                .expect("token game")
                .config()
                .map_err(usage)?;
            solver.outcome(&config).map_err(solve)
        }
        _ => {
            let fam = family(game, n).expect("graph game");
            if matches!(fam, GraphFamily::Star(k) if k < 2) {
                return Err(usage("star needs at least 2 vertices"));
            }
            let graph = fam.build().map_err(usage)?;
            rae_solve_general(graph).map(|(o, _)| o).map_err(usage)
        }
    }
}

fn classify_one(
    game: ClassifyGame,
    m: u32,
    n: u64,
    mode: Mode,
    solver: &mut Solver,
) -> Result<Classified, CliError> {
    let outcome = match mode {
        Mode::Closed => match closed_form(game, m, n)? {
            Some(o) => o,
            None => oracle(game, m, n, solver)?,
        },
        Mode::Oracle => oracle(game, m, n, solver)?,
        Mode::Check => {
            let fast = closed_form(game, m, n)?
                .ok_or_else(|| usage("this game has no closed form to check"))?;
            let slow = oracle(game, m, n, solver)?;
            if fast != slow {
                return Err(CliError::Verification(format!(
                    "n = {n}: closed form says {fast}, oracle says {slow}"
                )));
            }
            fast
        }
    };
    Ok(Classified { n, outcome })
}

/// Classifies every value of `range`, fanning out over `jobs` threads with
/// output order preserved.
pub fn classify(
    game: ClassifyGame,
    range: RangeInclusive<u64>,
    m: Option<u32>,
    mode: Mode,
    jobs: usize,
) -> Result<Vec<Classified>, CliError> {
    let needs_m = matches!(
        game,
        ClassifyGame::Chocolate | ClassifyGame::Cross | ClassifyGame::Rect
    );
    let m = match (needs_m, m) {
        (true, None) => return Err(usage("this game needs --m")),
        (true, Some(0)) => return Err(usage("--m must be at least 1")),
        (_, m) => m.unwrap_or(0),
    };
    let values: Vec<u64> = range.collect();
    let jobs = jobs.clamp(1, values.len().max(1));
    let chunk = values.len().div_ceil(jobs).max(1);
    let results: Vec<Result<Vec<Classified>, CliError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = values
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    let mut solver = Solver::new();
                    part.iter()
                        .map(|&n| classify_one(game, m, n, mode, &mut solver))
                        .collect()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("classification worker panicked"))
            .collect()
    });
    let mut all = Vec::with_capacity(values.len());
    for r in results {
        all.extend(r?);
    }
    Ok(all)
}

pub fn cmd_classify(
    game: ClassifyGame,
    range: RangeInclusive<u64>,
    m: Option<u32>,
    mode: Mode,
    jobs: usize,
    format: OutputFormat,
    out: &mut impl Write,
) -> CliResult {
    let rows = classify(game, range, m, mode, jobs)?;
    let text = match format {
        OutputFormat::Table => {
            let mut s: String = rows
                .iter()
                .map(|r| format!("{:>8}  {}\n", r.n, r.outcome))
                .collect();
            let ps: Vec<String> = rows
                .iter()
                .filter(|r| r.outcome.is_p())
                .map(|r| r.n.to_string())
                .collect();
            s += &format!("P: {}\n", ps.join(","));
            s
        }
        OutputFormat::Csv => {
            let mut s = String::from("n,outcome\n");
            for r in &rows {
                s += &format!("{},{}\n", r.n, r.outcome);
            }
            s
        }
        OutputFormat::Json => to_json(&rows) + "\n",
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    if mode == Mode::Check {
        writeln!(
            out,
            "check: closed form agrees with oracle on {} values",
            rows.len()
        )
        .map_err(io_err)?;
    }
    Ok(())
}

/// Sorted values `1..=limit` whose Sum-from-Product outcome is `want`.
fn sfp_side(limit: u64, want: Outcome) -> Result<Vec<i64>, CliError> {
    let (p, n) =
        crate::pile::sfp_classify_range(limit).map_err(|e| CliError::Environment(e.to_string()))?;
    let side = if want.is_p() { p } else { n };
    Ok(side.into_iter().map(|v| v as i64).collect())
}

impl VerifyGame {
    fn defaults(self) -> (&'static str, i64, usize) {
        match self {
            VerifyGame::RemoveASquare2xn => ("A286332", 0, 192),
            VerifyGame::PathRemoveAnEdge => ("A002187", -1, 151),
            VerifyGame::SfpP => ("A285304", 0, 200),
            VerifyGame::SfpN => ("A285847", 0, 200),
            VerifyGame::PathP => ("A215721", 0, 700),
            VerifyGame::CycleN => ("A274161", 0, 60),
        }
    }

    /// Computed values and the index of the first one.
    fn compute(self, n_max: usize) -> Result<(Vec<i64>, i64), CliError> {
        let as_i64 = |v: Vec<Grundy>| v.into_iter().map(i64::from).collect::<Vec<_>>();
        Ok(match self {
            VerifyGame::RemoveASquare2xn => {
                (as_i64(ras_grundy_2xn(n_max).values()[1..].to_vec()), 1)
            }
            VerifyGame::PathRemoveAnEdge => (as_i64(path_grundy(n_max)[1..].to_vec()), 1),
            VerifyGame::SfpP => (sfp_side(n_max as u64, Outcome::P)?, 1),
            VerifyGame::SfpN => (sfp_side(n_max as u64, Outcome::N)?, 1),
            VerifyGame::PathP => {
                let g = path_grundy(n_max);
                let zeros = (0..=n_max)
                    .filter(|&n| g[n] == 0)
                    .map(|n| n as i64)
                    .collect();
                (zeros, 1)
            }
            VerifyGame::CycleN => {
                // The reduction rule from n = 2, which is where the
                // edge-delete reading of the sequence starts.
                let g = path_grundy(n_max);
                let ns = (2..=n_max)
                    .filter(|&n| g[n - 2] == 0)
                    .map(|n| n as i64)
                    .collect();
                (ns, 1)
            }
        })
    }
}

pub fn cmd_verify(
    game: VerifyGame,
    oeis: Option<String>,
    offset: Option<i64>,
    n_max: Option<usize>,
    store: &SnapshotStore,
    out: &mut impl Write,
) -> CliResult {
    let (default_id, default_offset, default_n) = game.defaults();
    let id = oeis.unwrap_or_else(|| default_id.to_string());
    let n_max = n_max.unwrap_or(default_n);
    if n_max < 1 {
        return Err(usage("--n-max must be at least 1"));
    }
    let reference = store.load(&id)?;
    let (computed, first) = game.compute(n_max)?;
    let report = compare(
        &computed,
        first,
        &reference,
        offset.unwrap_or(default_offset),
    )?;
    write!(out, "{report}").map_err(io_err)?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "{} mismatches against {id}",
            report.mismatches.len()
        )))
    }
}

pub fn cmd_period(
    game: SequenceGame,
    n_max: usize,
    max_preperiod: Option<usize>,
    min_confirm: usize,
    format: OutputFormat,
    out: &mut impl Write,
) -> CliResult {
    if n_max < 1 {
        return Err(usage("--n-max must be at least 1"));
    }
    let values = game.values(n_max);
    let report = detect_period(&values, max_preperiod.unwrap_or(n_max / 2), min_confirm);
    let text = match format {
        OutputFormat::Json => to_json(&report) + "\n",
        OutputFormat::Csv => format!(
            "preperiod,period,confirmed_through,status\n{},{},{},{}\n",
            report.preperiod,
            report.period,
            report.confirmed_through,
            if report.is_confirmed() {
                "confirmed"
            } else {
                "not_found"
            }
        ),
        OutputFormat::Table if report.is_confirmed() => format!(
            "preperiod {} period {} (confirmed through n = {})\n",
            report.preperiod, report.period, report.confirmed_through
        ),
        OutputFormat::Table => "not_found\n".to_string(),
    };
    out.write_all(text.as_bytes()).map_err(io_err)?;
    if report.is_confirmed() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "no period found in G(0..={n_max})"
        )))
    }
}

fn failure(target: &str, f: StrategyFailure) -> CliError {
    let line: Vec<String> = f
        .line
        .iter()
        .enumerate()
        .map(|(i, mv)| {
            let who = if i % 2 == 0 { "adversary" } else { "strategy" };
            format!("{who}: {:?} {}", mv.axis, mv.coordinate)
        })
        .collect();
    CliError::Verification(format!(
        "{target} failed ({}): {}",
        f.reason,
        line.join(", ")
    ))
}

pub fn cmd_verify_strategy(
    target: StrategyTarget,
    bound: Option<usize>,
    shape_file: Option<PathBuf>,
    out: &mut impl Write,
) -> CliResult {
    match target {
        StrategyTarget::DiamondStrategy => {
            let c_max = bound.unwrap_or(3);
            if c_max > 4 {
                return Err(usage("diamond strategy bound is c <= 4"));
            }
            for c in 1..=c_max as u32 {
                let checked =
                    verify_diamond_strategy(c).map_err(|f| failure("diamond-strategy", f))?;
                writeln!(out, "diamond c={c}: pass ({checked} positions)").map_err(io_err)?;
            }
        }
        StrategyTarget::MirrorStrategy => match shape_file {
            Some(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
                let points = parse_points(&text).map_err(|e| CliError::Data(e.to_string()))?;
                let start = TokenConfig::from_points(points);
                if start.len() > 20 {
                    return Err(usage("mirror strategy bound is 20 tokens"));
                }
                if start.touches_axis() || !start.is_doubly_symmetric() {
                    let why = if start.touches_axis() {
                        "has tokens on an axis"
                    } else {
                        "is not symmetric in both axes"
                    };
                    return Err(usage(format!("precondition: shape {why}")));
                }
                let checked =
                    verify_second_player(&start, |before, _, mv| mirror_strategy(before, mv))
                        .map_err(|f| failure("mirror-strategy", f))?;
                writeln!(
                    out,
                    "mirror on {}: pass ({checked} positions)",
                    path.display()
                )
                .map_err(io_err)?;
            }
            None => {
                let max_tokens = bound.unwrap_or(12);
                if max_tokens > 16 {
                    return Err(usage("mirror strategy bound is 16 tokens"));
                }
                let configs = verify_mirror_strategy(max_tokens)
                    .map_err(|f| failure("mirror-strategy", f))?;
                writeln!(
                    out,
                    "mirror up to {max_tokens} tokens: pass ({configs} configurations)"
                )
                .map_err(io_err)?;
            }
        },
        StrategyTarget::NofactorSecondWins => {
            let n_max = bound.unwrap_or(12);
            if n_max > 16 {
                return Err(usage("No-Factor bound is n <= 16"));
            }
            for n in 2..=n_max as u32 {
                let o = nofactor_outcome(n).map_err(usage)?;
                if o != Outcome::P {
                    return Err(CliError::Verification(format!(
                        "No-Factor n = {n}: first player wins"
                    )));
                }
                writeln!(out, "no-factor n={n}: second player wins").map_err(io_err)?;
            }
        }
    }
    Ok(())
}

/// Reads `--params` as JSON or `key=value,...` (numbers become integers).
pub fn parse_spec(game: &str, params: &str) -> Result<GameSpec, CliError> {
    let params: Value = if params.trim_start().starts_with('{') {
        serde_json::from_str(params).map_err(|e| usage(format!("--params: {e}")))?
    } else {
        let mut map = serde_json::Map::new();
        for pair in params.split(',').filter(|p| !p.trim().is_empty()) {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| usage(format!("--params: `{pair}` is not key=value")))?;
            let v = v.trim();
            let value = v
                .parse::<i64>()
                .map(Value::from)
                .unwrap_or_else(|_| Value::from(v));
            map.insert(k.trim().to_string(), value);
        }
        Value::Object(map)
    };
    serde_json::from_value(serde_json::json!({ "game": game, "params": params }))
        .map_err(|e| usage(format!("game `{game}`: {e}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlayResult {
    HumanWon,
    EngineWon,
    Aborted,
}

/// Terminal game loop. Illegal or unreadable moves are re-prompted; end of
/// input aborts.
pub fn cmd_play(
    spec: &GameSpec,
    engine_first: bool,
    mut input: impl BufRead,
    out: &mut impl Write,
) -> Result<PlayResult, CliError> {
    let mut state: GameState = spec.start().map_err(|e| match e {
        PlayError::TooLarge(m) => usage(format!("instance too large: {m}")),
        other => usage(other),
    })?;
    let mut solver = Solver::new();
    let mut human_turn = !engine_first;
    let w = |e| io_err(e);
    loop {
        writeln!(out, "{}", state.describe()).map_err(w)?;
        if state.is_terminal() {
            let result = if human_turn {
                PlayResult::EngineWon
            } else {
                PlayResult::HumanWon
            };
            let msg = if human_turn {
                "No moves left: the engine wins."
            } else {
                "No moves left: you win."
            };
            writeln!(out, "{msg}").map_err(w)?;
            return Ok(result);
        }
        if !human_turn {
            let mv = state
                .best_move(&mut solver)
                .map_err(|e| CliError::Environment(e.to_string()))?
                .expect("non-terminal position has a move");
            writeln!(out, "engine plays: {}", mv.to_text()).map_err(w)?;
            state = state.apply(&mv).expect("engine moves are legal");
            human_turn = true;
            continue;
        }
        let moves: Vec<String> = state.legal_moves().iter().map(|m| m.to_text()).collect();
        writeln!(out, "legal: {}", moves.join(" | ")).map_err(w)?;
        loop {
            write!(out, "your move> ").map_err(w)?;
            out.flush().map_err(w)?;
            let mut line = String::new();
            if input.read_line(&mut line).map_err(w)? == 0 {
                writeln!(out, "\naborted").map_err(w)?;
                return Ok(PlayResult::Aborted);
            }
            if line.trim().is_empty() {
                continue;
            }
            match state.parse_move(&line).and_then(|mv| state.apply(&mv)) {
                Ok(next) => {
                    state = next;
                    break;
                }
                Err(e) => writeln!(out, "{e}; try again").map_err(w)?,
            }
        }
        human_turn = false;
    }
}

pub fn cmd_serve(port: u16, config: ServiceConfig) -> CliResult {
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(io_err)?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind(("127.0.0.1", port))
            .await
            .map_err(|e| CliError::Environment(format!("cannot bind port {port}: {e}")))?;
        let addr = listener.local_addr().map_err(io_err)?;
        eprintln!("listening on http://{addr}");
        let shutdown = async {
            let _ = tokio::signal::ctrl_c().await;
        };
        crate::service::serve(listener, &config, shutdown)
            .await
            .map_err(|e| match e {
                ServiceError::JournalCorrupt { .. } => CliError::Data(e.to_string()),
                other => CliError::Environment(other.to_string()),
            })
    })
}

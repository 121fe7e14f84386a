//! Game-agnostic solving machinery.
//!
//! Every game in this crate implements [`Position`]. The [`Solver`] walks the
//! game tree with an explicit stack (no recursion, so deep pile games do not
//! overflow the thread stack), memoizes on the byte key each game produces,
//! and sums independent components by XOR when a position reports them.
//!
//! Two search paths exist:
//!
//! * [`Solver::grundy`] computes nimbers (mex over successors, XOR over
//!   components).
//! * [`Solver::outcome`] computes only the P/N label and stops expanding a
//!   position as soon as one P successor is found. Games with very wide move
//!   sets (No-Factor) use this path exclusively.

mod period;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use period::{detect_period, PeriodStatus, PeriodicityReport, DEFAULT_MIN_CONFIRM};

/// Nimber of a position.
pub type Grundy = u32;

/// Default cap on expanded positions for a single [`Solver`].
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Win/loss label under normal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// The previous player (the one who just moved) wins.
    P,
    /// The next player (the one to move) wins.
    N,
}

impl Outcome {
    pub fn from_grundy(g: Grundy) -> Self {
        if g == 0 {
            Outcome::P
        } else {
            Outcome::N
        }
    }

    pub fn is_p(self) -> bool {
        self == Outcome::P
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::P => "P",
            Outcome::N => "N",
        })
    }
}

/// Least non-negative integer not in `values`.
pub fn mex<I: IntoIterator<Item = Grundy>>(values: I) -> Grundy {
    let values: Vec<Grundy> = values.into_iter().collect();
    // mex(S) <= |S|, so anything larger can be ignored.
    let mut seen = vec![false; values.len() + 1];
    for v in values {
        if let Some(slot) = seen.get_mut(v as usize) {
            *slot = true;
        }
    }
    seen.iter().position(|s| !s).unwrap_or(0) as Grundy
}

/// XOR fold; the empty sum is 0.
pub fn nim_sum<I: IntoIterator<Item = Grundy>>(values: I) -> Grundy {
    values.into_iter().fold(0, |acc, v| acc ^ v)
}

/// A position of an impartial game under normal play.
///
/// Implementations must keep `moves` in a fixed, documented order: the
/// engine's move choice is "first move that ..." and relies on it for
/// reproducibility.
pub trait Position: Sized {
    type Move: Clone + fmt::Debug;

    fn moves(&self) -> Vec<Self::Move>;

    /// Applies a move taken from [`Position::moves`].
    fn play(&self, mv: &Self::Move) -> Self;

    /// Byte key, equal for positions the game treats as equivalent.
    fn cache_key(&self) -> Vec<u8>;

    fn successors(&self) -> Vec<(Self::Move, Self)> {
        self.moves()
            .into_iter()
            .map(|mv| {
                let next = self.play(&mv);
                (mv, next)
            })
            .collect()
    }

    fn is_terminal(&self) -> bool {
        self.moves().is_empty()
    }

    /// Independent sub-positions whose game sum equals this position.
    /// `None` (the default) means "do not decompose".
    fn components(&self) -> Option<Vec<Self>> {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("node budget exceeded: more than {budget} positions expanded")]
    BudgetExceeded { budget: u64 },
}

/// Memo table from canonical key to solved value.
///
/// Entries are write-once: a key solved by the Grundy path also answers
/// outcome queries, and an outcome-only entry never gets a nimber attached.
#[derive(Debug, Default, Clone)]
pub struct SolveCache {
    grundy: HashMap<Vec<u8>, Grundy>,
    outcome: HashMap<Vec<u8>, Outcome>,
    hits: u64,
    misses: u64,
}

impl SolveCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.grundy.len() + self.outcome.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hits(&self) -> u64 {
        self.hits
    }

    pub fn misses(&self) -> u64 {
        self.misses
    }

    pub fn grundy_of(&self, key: &[u8]) -> Option<Grundy> {
        self.grundy.get(key).copied()
    }

    pub fn outcome_of(&self, key: &[u8]) -> Option<Outcome> {
        self.grundy
            .get(key)
            .map(|&g| Outcome::from_grundy(g))
            .or_else(|| self.outcome.get(key).copied())
    }

    fn lookup_grundy(&mut self, key: &[u8]) -> Option<Grundy> {
        let found = self.grundy_of(key);
        self.count(found.is_some());
        found
    }

    fn lookup_outcome(&mut self, key: &[u8]) -> Option<Outcome> {
        let found = self.outcome_of(key);
        self.count(found.is_some());
        found
    }

    fn count(&mut self, hit: bool) {
        if hit {
            self.hits += 1;
        } else {
            self.misses += 1;
        }
    }

    fn store_grundy(&mut self, key: Vec<u8>, g: Grundy) {
        let prev = self.grundy.insert(key, g);
        debug_assert!(prev.is_none() || prev == Some(g), "cache entry rewritten");
    }

    fn store_outcome(&mut self, key: Vec<u8>, o: Outcome) {
        let prev = self.outcome.insert(key, o);
        debug_assert!(prev.is_none() || prev == Some(o), "cache entry rewritten");
    }
}

enum Combine {
    Sum,
    Mex,
}

struct GrundyFrame<P> {
    key: Vec<u8>,
    combine: Combine,
    children: Vec<P>,
    next: usize,
    values: Vec<Grundy>,
}

struct OutcomeFrame<P> {
    key: Vec<u8>,
    children: Vec<P>,
    next: usize,
}

/// Memoizing solver. One instance per game family: keys from different
/// games are not namespaced.
#[derive(Debug, Clone)]
pub struct Solver {
    cache: SolveCache,
    budget: u64,
    expanded: u64,
    decompose: bool,
}

impl Default for Solver {
    fn default() -> Self {
        Self::new()
    }
}

impl Solver {
    pub fn new() -> Self {
        Self {
            cache: SolveCache::new(),
            budget: DEFAULT_NODE_BUDGET,
            expanded: 0,
            decompose: true,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    /// Disables component decomposition; every position is solved flat.
    pub fn flat(mut self) -> Self {
        self.decompose = false;
        self
    }

    pub fn cache(&self) -> &SolveCache {
        &self.cache
    }

    /// Positions expanded so far (cache misses that were searched).
    pub fn expanded(&self) -> u64 {
        self.expanded
    }

    fn charge(&mut self) -> Result<(), SolveError> {
        self.expanded += 1;
        if self.expanded > self.budget {
            Err(SolveError::BudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    fn split<P: Position>(&self, pos: &P) -> Option<Vec<P>> {
        if !self.decompose {
            return None;
        }
        pos.components().filter(|c| c.len() >= 2)
    }

    fn grundy_frame<P: Position>(
        &mut self,
        pos: &P,
        key: Vec<u8>,
    ) -> Result<GrundyFrame<P>, SolveError> {
        self.charge()?;
        let (combine, children) = match self.split(pos) {
            Some(parts) => (Combine::Sum, parts),
            None => (
                Combine::Mex,
                pos.successors().into_iter().map(|(_, p)| p).collect(),
            ),
        };
        Ok(GrundyFrame {
            key,
            values: Vec::with_capacity(children.len()),
            combine,
            children,
            next: 0,
        })
    }

    /// Nimber of `pos`: 0 for terminals, XOR of components when the position
    /// decomposes, mex over successors otherwise.
    pub fn grundy<P: Position>(&mut self, pos: &P) -> Result<Grundy, SolveError> {
        let key = pos.cache_key();
        if let Some(g) = self.cache.lookup_grundy(&key) {
            return Ok(g);
        }
        let mut stack = vec![self.grundy_frame(pos, key)?];
        loop {
            let top = stack.last_mut().expect("stack never empty inside loop");
            if top.next < top.children.len() {
                let child = &top.children[top.next];
                let child_key = child.cache_key();
                if let Some(g) = self.cache.lookup_grundy(&child_key) {
                    top.values.push(g);
                    top.next += 1;
                    continue;
                }
                let frame = self.grundy_frame(child, child_key)?;
                stack.push(frame);
                continue;
            }
            let done = stack.pop().expect("checked above");
            let g = match done.combine {
                Combine::Sum => nim_sum(done.values),
                Combine::Mex => mex(done.values),
            };
            self.cache.store_grundy(done.key, g);
            match stack.last_mut() {
                Some(parent) => {
                    parent.values.push(g);
                    parent.next += 1;
                }
                None => return Ok(g),
            }
        }
    }

    /// P/N label of `pos`. Short-circuits on the first P successor. Positions
    /// that decompose are labelled through their nimber.
    pub fn outcome<P: Position>(&mut self, pos: &P) -> Result<Outcome, SolveError> {
        let key = pos.cache_key();
        if let Some(o) = self.cache.lookup_outcome(&key) {
            return Ok(o);
        }
        if self.split(pos).is_some() {
            return self.grundy(pos).map(Outcome::from_grundy);
        }
        self.charge()?;
        let mut stack = vec![OutcomeFrame {
            key,
            children: pos.successors().into_iter().map(|(_, p)| p).collect(),
            next: 0,
        }];
        // Result of the frame most recently popped, to be folded into its parent.
        let mut resolved: Option<Outcome> = None;
        loop {
            if let Some(o) = resolved.take() {
                let Some(top) = stack.last_mut() else {
                    unreachable!("root resolution returns directly")
                };
                if o == Outcome::P {
                    let done = stack.pop().expect("non-empty");
                    self.cache.store_outcome(done.key, Outcome::N);
                    if stack.is_empty() {
                        return Ok(Outcome::N);
                    }
                    resolved = Some(Outcome::N);
                    continue;
                }
                top.next += 1;
            }
            let top = stack.last_mut().expect("non-empty");
            if top.next == top.children.len() {
                let done = stack.pop().expect("non-empty");
                self.cache.store_outcome(done.key, Outcome::P);
                if stack.is_empty() {
                    return Ok(Outcome::P);
                }
                resolved = Some(Outcome::P);
                continue;
            }
            let child = &top.children[top.next];
            let child_key = child.cache_key();
            if let Some(o) = self.cache.lookup_outcome(&child_key) {
                resolved = Some(o);
                continue;
            }
            if self.split(child).is_some() {
                let g = self.grundy(child)?;
                resolved = Some(Outcome::from_grundy(g));
                continue;
            }
            let children = child.successors().into_iter().map(|(_, p)| p).collect();
            self.charge()?;
            stack.push(OutcomeFrame {
                key: child_key,
                children,
                next: 0,
            });
        }
    }

    /// Outcome label of the position each move leaves, in move order.
    pub fn move_outcomes<P: Position>(
        &mut self,
        pos: &P,
    ) -> Result<Vec<(P::Move, Outcome)>, SolveError> {
        pos.successors()
            .into_iter()
            .map(|(mv, next)| Ok((mv, self.outcome(&next)?)))
            .collect()
    }

    /// Engine move choice. From an N-position: the first move reaching a P
    /// successor. From a P-position: the first move whose successor has the
    /// fewest P-successors (the fewest winning replies for the opponent).
    /// `None` only for terminals.
    pub fn best_move<P: Position>(&mut self, pos: &P) -> Result<Option<P::Move>, SolveError> {
        let successors = pos.successors();
        for (mv, next) in &successors {
            if self.outcome(next)? == Outcome::P {
                return Ok(Some(mv.clone()));
            }
        }
        let mut best: Option<(usize, P::Move)> = None;
        for (mv, next) in successors {
            let mut replies = 0;
            for (_, after) in next.successors() {
                if self.outcome(&after)? == Outcome::P {
                    replies += 1;
                }
            }
            if best.as_ref().is_none_or(|(b, _)| replies < *b) {
                best = Some((replies, mv));
            }
        }
        Ok(best.map(|(_, mv)| mv))
    }
}

//! Backtracking search for Schur partitions.
//!
//! The main entry point grows a [`PartialPartition`] by depth-first search.
//! In symmetric mode only positions up to `ceil(N / 2)` are branched on and
//! every placement of `x` also places its mirror `N + 1 - x` in the same
//! colour. A colour is tried for a position only while its blockage count
//! is zero, and with forward checking on, a node is abandoned as soon as some
//! pending position has no colour left.
//!
//! [`seed_symmetric`] builds the usual starting point: a known partition of
//! `[1, b]`, the integer `b + 1` in a fresh colour, and the mirror images of
//! all of them.

mod exhaustive;
mod partial;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::partition::Partition;
use crate::verifier::{verify_schur, Violation};

pub use exhaustive::{exhaustive_max, ExhaustiveOutcome};
pub use partial::{AssignError, BlockageTable, Checkpoint, CheckpointError, PartialPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("base partition is not sum-free: {0}")]
    BaseInvalid(Violation),
    #[error("target order {target} must exceed the base order {base}")]
    TargetTooSmall { base: usize, target: usize },
    #[error("seeding is contradictory: {0}")]
    Contradiction(Violation),
    #[error("seeding forces position {position} into colours {first} and {second}")]
    Collision {
        position: usize,
        first: usize,
        second: usize,
    },
    #[error("position {0} and its mirror are not paired although symmetric mode is on")]
    NotMirrorClosed(usize),
    #[error("invalid search configuration: {0}")]
    Config(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VariableOrder {
    /// Lowest pending position first.
    #[default]
    Ascending,
    /// Pending position with the fewest admissible colours first.
    MostBlockedFirst,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ColourOrder {
    /// Colour index order.
    #[default]
    Fixed,
    /// Colours with the fewest blocked positions first.
    LeastBlockedFirst,
}

/// How parallel workers pick the reported witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParallelMode {
    /// The witness a single-threaded run would find.
    #[default]
    Deterministic,
    /// Whichever worker finishes first.
    Fast,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub symmetric: bool,
    /// Positions released from mirror pairing. Either member of a pair may
    /// be listed.
    pub exceptions: Vec<usize>,
    pub variable_order: VariableOrder,
    pub colour_order: ColourOrder,
    /// Shuffle equally ranked colours with a per-node RNG derived from
    /// `seed` and the current assignment.
    pub random_ties: bool,
    pub seed: u64,
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    pub forward_check: bool,
    pub threads: usize,
    pub parallel_mode: ParallelMode,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            symmetric: true,
            exceptions: Vec::new(),
            variable_order: VariableOrder::Ascending,
            colour_order: ColourOrder::Fixed,
            random_ties: false,
            seed: 0,
            max_nodes: None,
            max_time: None,
            forward_check: true,
            threads: 1,
            parallel_mode: ParallelMode::Deterministic,
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<(), SearchError> {
        if self.max_nodes == Some(0) {
            return Err(SearchError::Config("node budget must be positive".into()));
        }
        if self.max_time == Some(Duration::ZERO) {
            return Err(SearchError::Config("time budget must be positive".into()));
        }
        if self.threads == 0 {
            return Err(SearchError::Config("thread count must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetExceeded,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    /// Most branch positions assigned at once.
    pub max_depth: usize,
    pub elapsed: Duration,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witness: Option<Partition>,
    pub stats: SearchStats,
    /// Assignment at the deepest node reached (index 0 unused, 0 =
    /// unassigned).
    pub deepest: Vec<usize>,
}

/// Periodic progress snapshot handed to an observer.
#[derive(Debug, Clone, Copy)]
pub struct Progress {
    pub nodes: u64,
    pub depth: usize,
    pub max_depth: usize,
    pub elapsed: Duration,
}

/// An observer and the node interval between its calls.
pub type ProgressObserver<'p> = (u64, &'p mut (dyn FnMut(&Progress) + Send));

/// A partial partition ready for [`extend`], plus any warnings raised while
/// seeding it.
#[derive(Debug, Clone)]
pub struct Seeded {
    pub partial: PartialPartition,
    pub warnings: Vec<String>,
}

/// Warning text when `N + 1` is divisible by 3 and the offending pair is not
/// released from pairing.
pub fn divisibility_warning(target: usize, exceptions: &[usize]) -> Option<String> {
    if !(target + 1).is_multiple_of(3) {
        return None;
    }
    let x = (target + 1) / 3;
    if exceptions.contains(&x) || exceptions.contains(&(2 * x)) {
        return None;
    }
    Some(format!(
        "{} is divisible by 3: a fully symmetric partition of [1, {target}] is impossible \
         ({x} + {x} = {} is the mirror of {x})",
        target + 1,
        2 * x
    ))
}

/// Seeds a symmetric search for a partition of `[1, target]` in `k + 1`
/// colours from a Schur partition `base` of `[1, b]` in `k` colours.
///
/// Every `x <= b` keeps its base colour, `b + 1` takes colour `k + 1`, and
/// each seeded `x` also places `target + 1 - x` (unless `x` is an exception).
pub fn seed_symmetric(
    base: &Partition,
    target: usize,
    exceptions: &[usize],
) -> Result<Seeded, SearchError> {
    let report = verify_schur(base);
    if let Some(v) = report.violations.first() {
        return Err(SearchError::BaseInvalid(*v));
    }
    let b = base.order();
    if b + 1 > target {
        return Err(SearchError::TargetTooSmall { base: b, target });
    }
    let k = base.colour_count() + 1;
    let pairing = Pairing::new(target, true, exceptions);
    let mut partial = PartialPartition::new(target, k);
    let seed_one = |partial: &mut PartialPartition, x: usize, c: usize| {
        match partial.colour_of(x) {
            0 => {}
            same if same == c => return Ok(()),
            other => {
                return Err(SearchError::Collision {
                    position: x,
                    first: other,
                    second: c,
                })
            }
        }
        if partial.blockage(x, c) != 0 {
            let v = partial
                .witness(x, c)
                .expect("blocked position has a witness");
            return Err(SearchError::Contradiction(v));
        }
        partial.place(x, c);
        Ok(())
    };
    for x in 1..=b + 1 {
        let c = base.colour_of(x).unwrap_or(k);
        seed_one(&mut partial, x, c)?;
        if pairing.is_paired(x) {
            seed_one(&mut partial, target + 1 - x, c)?;
        }
    }
    let warnings = divisibility_warning(target, exceptions)
        .into_iter()
        .collect();
    Ok(Seeded { partial, warnings })
}

/// Which positions are tied to their mirror.
#[derive(Debug, Clone)]
struct Pairing {
    order: usize,
    symmetric: bool,
    // normalized to the lower member of each pair
    exceptions: BTreeSet<usize>,
}

impl Pairing {
    fn new(order: usize, symmetric: bool, exceptions: &[usize]) -> Self {
        let exceptions = exceptions
            .iter()
            .filter(|&&x| x >= 1 && x <= order)
            .map(|&x| x.min(order + 1 - x))
            .collect();
        Self {
            order,
            symmetric,
            exceptions,
        }
    }

    fn mirror(&self, x: usize) -> usize {
        self.order + 1 - x
    }

    fn is_paired(&self, x: usize) -> bool {
        let m = self.mirror(x);
        self.symmetric && m != x && !self.exceptions.contains(&x.min(m))
    }

    /// A paired position whose mirror is its double can never be placed.
    fn self_conflict(&self, x: usize) -> bool {
        let m = self.mirror(x);
        self.is_paired(x) && (2 * x == m || 2 * m == x)
    }

    /// Branch positions for the current state, ascending.
    fn branch_positions(&self, partial: &PartialPartition) -> Vec<usize> {
        let n = self.order;
        let mut vars: Vec<usize> = if self.symmetric {
            let mut v: Vec<usize> = (1..=n.div_ceil(2)).collect();
            v.extend(
                self.exceptions
                    .iter()
                    .map(|&e| self.mirror(e))
                    .filter(|&m| m > n.div_ceil(2)),
            );
            v
        } else {
            (1..=n).collect()
        };
        vars.retain(|&x| partial.colour_of(x) == 0);
        vars.sort_unstable();
        vars
    }

    fn check_closed(&self, partial: &PartialPartition) -> Result<(), SearchError> {
        for x in 1..=self.order / 2 {
            if self.is_paired(x) && partial.colour_of(x) != partial.colour_of(self.mirror(x)) {
                return Err(SearchError::NotMirrorClosed(x));
            }
        }
        Ok(())
    }
}

/// Depth-first completion of `partial` under `config`.
///
/// With `config.threads > 1` the tree is split at a shallow frontier and the
/// subtrees are searched on separate threads (see [`ParallelMode`]).
pub fn extend(
    partial: &PartialPartition,
    config: &SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    extend_with_progress(partial, config, None)
}

/// [`extend`] with an observer called every `progress_every` nodes.
pub fn extend_with_progress(
    partial: &PartialPartition,
    config: &SearchConfig,
    progress: Option<ProgressObserver<'_>>,
) -> Result<SearchOutcome, SearchError> {
    config.validate()?;
    let pairing = Pairing::new(partial.order(), config.symmetric, &config.exceptions);
    pairing.check_closed(partial)?;
    let start = Instant::now();
    let shared = Shared::new(config, start);
    if config.threads > 1 {
        return Ok(parallel(partial, config, &pairing, &shared, progress));
    }
    let mut engine = Engine::new(partial.clone(), config, &pairing, &shared, None);
    engine.progress = progress;
    let found = engine.run();
    Ok(engine.into_outcome(found))
}

/// State shared by all engines of one search.
struct Shared {
    start: Instant,
    max_nodes: Option<u64>,
    max_time: Option<Duration>,
    nodes: AtomicU64,
    // lowest frontier index that found a witness
    winner: AtomicUsize,
}

impl Shared {
    fn new(config: &SearchConfig, start: Instant) -> Self {
        Self {
            start,
            max_nodes: config.max_nodes,
            max_time: config.max_time,
            nodes: AtomicU64::new(0),
            winner: AtomicUsize::new(usize::MAX),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Stop {
    Budget,
    Cancelled,
}

type Decision = (usize, usize);

struct Engine<'a, 'p> {
    partial: PartialPartition,
    config: &'a SearchConfig,
    pairing: &'a Pairing,
    shared: &'a Shared,
    vars: Vec<usize>,
    depth: usize,
    max_depth: usize,
    nodes: u64,
    deepest: Vec<usize>,
    stop: Option<Stop>,
    // (frontier index, mode) when running as a parallel worker
    worker: Option<(usize, ParallelMode)>,
    progress: Option<ProgressObserver<'p>>,
    // frontier collection: target depth, current path, collected paths
    collect_at: Option<usize>,
    path: Vec<Decision>,
    frontier: Vec<Vec<Decision>>,
}

impl<'a, 'p> Engine<'a, 'p> {
    fn new(
        partial: PartialPartition,
        config: &'a SearchConfig,
        pairing: &'a Pairing,
        shared: &'a Shared,
        worker: Option<(usize, ParallelMode)>,
    ) -> Self {
        let vars = pairing.branch_positions(&partial);
        let deepest = partial.assignment().to_vec();
        Self {
            partial,
            config,
            pairing,
            shared,
            vars,
            depth: 0,
            max_depth: 0,
            nodes: 0,
            deepest,
            stop: None,
            worker,
            progress: None,
            collect_at: None,
            path: Vec::new(),
            frontier: Vec::new(),
        }
    }

    fn run(&mut self) -> bool {
        if self.config.forward_check && !self.all_pending_viable(0) {
            return false;
        }
        self.dfs(0)
    }

    fn into_outcome(self, found: bool) -> SearchOutcome {
        let stats = SearchStats {
            nodes: self.nodes,
            max_depth: self.max_depth,
            elapsed: self.shared.start.elapsed(),
        };
        if found {
            let witness = self.partial.to_partition().expect("complete assignment");
            let report = verify_schur(&witness);
            assert!(
                report.valid,
                "search produced an invalid witness: {:?}",
                report.violations
            );
            return SearchOutcome {
                status: SearchStatus::Found,
                witness: Some(witness),
                stats,
                deepest: self.partial.assignment().to_vec(),
            };
        }
        let status = match self.stop {
            Some(_) => SearchStatus::BudgetExceeded,
            None => SearchStatus::Exhausted,
        };
        SearchOutcome {
            status,
            witness: None,
            stats,
            deepest: self.deepest,
        }
    }

    fn pending_var(&self, cursor: usize) -> Option<(usize, usize)> {
        match self.config.variable_order {
            VariableOrder::Ascending => self.vars[cursor..]
                .iter()
                .position(|&v| self.partial.colour_of(v) == 0)
                .map(|i| (cursor + i, self.vars[cursor + i])),
            VariableOrder::MostBlockedFirst => self
                .vars
                .iter()
                .enumerate()
                .filter(|&(_, &v)| self.partial.colour_of(v) == 0)
                .min_by_key(|&(_, &v)| (self.options(v), v))
                .map(|(i, &v)| (i, v)),
        }
    }

    fn viable(&self, v: usize, c: usize) -> bool {
        if self.partial.blockage(v, c) != 0 {
            return false;
        }
        if self.pairing.is_paired(v) {
            let m = self.pairing.mirror(v);
            if self.partial.colour_of(m) == 0 && self.partial.blockage(m, c) != 0 {
                return false;
            }
        }
        true
    }

    fn options(&self, v: usize) -> usize {
        if self.pairing.self_conflict(v) {
            return 0;
        }
        (1..=self.partial.colour_count())
            .filter(|&c| self.viable(v, c))
            .count()
    }

    fn all_pending_viable(&self, cursor: usize) -> bool {
        let vars = match self.config.variable_order {
            VariableOrder::Ascending => &self.vars[cursor..],
            VariableOrder::MostBlockedFirst => &self.vars[..],
        };
        vars.iter().all(|&v| {
            self.partial.colour_of(v) != 0
                || (!self.pairing.self_conflict(v)
                    && (1..=self.partial.colour_count()).any(|c| self.viable(v, c)))
        })
    }

    fn candidates(&self, v: usize) -> Vec<usize> {
        if self.pairing.self_conflict(v) {
            return Vec::new();
        }
        let k = self.partial.colour_count();
        let mut seen_empty = false;
        let mut out: Vec<usize> = Vec::with_capacity(k);
        for c in 1..=k {
            // empty colours are interchangeable; try only the first
            if self.partial.members(c).is_empty() {
                if seen_empty {
                    continue;
                }
                seen_empty = true;
            }
            if self.viable(v, c) {
                out.push(c);
            }
        }
        if self.config.random_ties && out.len() > 1 {
            let seed =
                self.config.seed ^ partial::splitmix64(self.partial.fingerprint() ^ v as u64);
            out.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        if self.config.colour_order == ColourOrder::LeastBlockedFirst {
            out.sort_by_key(|&c| self.partial.blocked_positions(c));
        }
        out
    }

    /// Places `v` (and its mirror) in `c`; returns how many positions were
    /// placed, 0 when the mirror turned out blocked.
    fn place(&mut self, v: usize, c: usize) -> usize {
        self.partial.place(v, c);
        if !self.pairing.is_paired(v) {
            return 1;
        }
        let m = self.pairing.mirror(v);
        if self.partial.colour_of(m) != 0 {
            return 1;
        }
        if self.partial.blockage(m, c) != 0 {
            self.partial.undo();
            return 0;
        }
        self.partial.place(m, c);
        2
    }

    fn tick(&mut self) -> bool {
        let total = self.shared.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.shared.max_nodes.is_some_and(|max| total > max) {
            self.stop = Some(Stop::Budget);
            return false;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) {
            if let Some(max) = self.shared.max_time {
                if self.shared.start.elapsed() > max {
                    self.stop = Some(Stop::Budget);
                    return false;
                }
            }
            if let Some((index, mode)) = self.worker {
                let winner = self.shared.winner.load(Ordering::Relaxed);
                let cancelled = match mode {
                    ParallelMode::Deterministic => winner < index,
                    ParallelMode::Fast => winner != usize::MAX,
                };
                if cancelled {
                    self.stop = Some(Stop::Cancelled);
                    return false;
                }
            }
        }
        if let Some((every, observer)) = self.progress.as_mut() {
            if self.nodes.is_multiple_of(*every) {
                observer(&Progress {
                    nodes: self.nodes,
                    depth: self.depth,
                    max_depth: self.max_depth,
                    elapsed: self.shared.start.elapsed(),
                });
            }
        }
        true
    }

    fn dfs(&mut self, cursor: usize) -> bool {
        let Some((idx, v)) = self.pending_var(cursor) else {
            // leaf: every colour must be used for a valid partition
            return (1..=self.partial.colour_count()).all(|c| !self.partial.members(c).is_empty());
        };
        if self.collect_at == Some(self.depth) {
            self.frontier.push(self.path.clone());
            return false;
        }
        let next_cursor = match self.config.variable_order {
            VariableOrder::Ascending => idx + 1,
            VariableOrder::MostBlockedFirst => 0,
        };
        for c in self.candidates(v) {
            if self.stop.is_some() || !self.tick() {
                return false;
            }
            let placed = self.place(v, c);
            if placed == 0 {
                continue;
            }
            self.depth += 1;
            self.path.push((v, c));
            if self.depth > self.max_depth {
                self.max_depth = self.depth;
                self.deepest.copy_from_slice(self.partial.assignment());
            }
            let viable = !self.config.forward_check || self.all_pending_viable(next_cursor);
            if viable && self.dfs(next_cursor) {
                return true;
            }
            self.path.pop();
            self.depth -= 1;
            for _ in 0..placed {
                self.partial.undo();
            }
            if self.stop.is_some() {
                return false;
            }
        }
        false
    }
}

enum WorkerResult {
    Found(Partition),
    Exhausted,
    Stopped(Stop),
}

fn parallel(
    root: &PartialPartition,
    config: &SearchConfig,
    pairing: &Pairing,
    shared: &Shared,
    mut progress: Option<ProgressObserver<'_>>,
) -> SearchOutcome {
    let threads = config.threads;
    // grow the frontier depth until there is enough work to share
    let mut depth = 1;
    let mut collector = loop {
        let mut collector = Engine::new(root.clone(), config, pairing, shared, None);
        collector.collect_at = Some(depth);
        let found = collector.run();
        if found || collector.stop.is_some() {
            return collector.into_outcome(found);
        }
        if collector.frontier.len() >= 8 * threads || collector.max_depth < depth || depth >= 24 {
            break collector;
        }
        depth += 1;
    };
    let frontier = std::mem::take(&mut collector.frontier);
    let base_nodes = collector.nodes;
    if frontier.is_empty() {
        return collector.into_outcome(false);
    }

    let next = AtomicUsize::new(0);
    type Slot = Option<(WorkerResult, SearchStats, Vec<usize>)>;
    let results: Mutex<Vec<Slot>> = Mutex::new((0..frontier.len()).map(|_| None).collect());
    let progress_slot = Mutex::new(progress.as_mut());
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= frontier.len() {
                    break;
                }
                let winner = shared.winner.load(Ordering::SeqCst);
                if winner != usize::MAX
                    && (config.parallel_mode == ParallelMode::Fast || i > winner)
                {
                    break;
                }
                let mut engine = Engine::new(
                    root.clone(),
                    config,
                    pairing,
                    shared,
                    Some((i, config.parallel_mode)),
                );
                let mut ok = true;
                for &(v, c) in &frontier[i] {
                    if engine.place(v, c) == 0 {
                        ok = false;
                        break;
                    }
                    engine.depth += 1;
                }
                engine.max_depth = engine.depth;
                engine.deepest.copy_from_slice(engine.partial.assignment());
                let found = ok && engine.dfs(0);
                if found {
                    shared.winner.fetch_min(i, Ordering::SeqCst);
                }
                if let Ok(mut slot) = progress_slot.lock() {
                    if let Some((_, observer)) = slot.as_mut() {
                        observer(&Progress {
                            nodes: shared.nodes.load(Ordering::Relaxed),
                            depth: engine.depth,
                            max_depth: engine.max_depth,
                            elapsed: shared.start.elapsed(),
                        });
                    }
                }
                let result = match (found, engine.stop) {
                    (true, _) => {
                        WorkerResult::Found(engine.partial.to_partition().expect("complete"))
                    }
                    (false, Some(stop)) => WorkerResult::Stopped(stop),
                    (false, None) => WorkerResult::Exhausted,
                };
                let stats = SearchStats {
                    nodes: engine.nodes,
                    max_depth: engine.max_depth,
                    elapsed: Duration::ZERO,
                };
                let deepest = if found {
                    engine.partial.assignment().to_vec()
                } else {
                    engine.deepest
                };
                results.lock().expect("results lock")[i] = Some((result, stats, deepest));
            });
        }
    });

    let results = results.into_inner().expect("results lock");
    let mut stats = SearchStats {
        nodes: base_nodes,
        max_depth: collector.max_depth,
        elapsed: Duration::ZERO,
    };
    let mut deepest = collector.deepest;
    let mut best_depth = collector.max_depth;
    let mut status = SearchStatus::Exhausted;
    let mut witness = None;
    for (result, s, d) in results.into_iter().flatten() {
        stats.nodes += s.nodes;
        if s.max_depth > best_depth {
            best_depth = s.max_depth;
            deepest = d.clone();
        }
        stats.max_depth = stats.max_depth.max(s.max_depth);
        if witness.is_some() || status == SearchStatus::BudgetExceeded {
            continue;
        }
        match result {
            WorkerResult::Found(p) => {
                status = SearchStatus::Found;
                witness = Some(p);
                deepest = d;
            }
            WorkerResult::Exhausted | WorkerResult::Stopped(Stop::Cancelled) => {}
            WorkerResult::Stopped(Stop::Budget) => {
                if config.parallel_mode == ParallelMode::Deterministic {
                    status = SearchStatus::BudgetExceeded;
                }
            }
        }
    }
    if witness.is_none() && status == SearchStatus::Exhausted {
        // in fast mode a budget stop anywhere means the search is incomplete
        // unless another worker found a witness
        let budget_hit = shared
            .max_nodes
            .is_some_and(|m| shared.nodes.load(Ordering::Relaxed) > m)
            || shared.max_time.is_some_and(|t| shared.start.elapsed() > t);
        if budget_hit {
            status = SearchStatus::BudgetExceeded;
        }
    }
    if let Some(p) = &witness {
        let report = verify_schur(p);
        assert!(
            report.valid,
            "search produced an invalid witness: {:?}",
            report.violations
        );
    }
    stats.elapsed = shared.start.elapsed();
    SearchOutcome {
        status,
        witness,
        stats,
        deepest,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> Partition {
        Partition::from_subsets(4, 2, &[vec![1, 4], vec![2, 3]]).unwrap()
    }

    #[test]
    fn seeding_from_s2_to_13() {
        let seeded = seed_symmetric(&s2(), 13, &[]).unwrap();
        let p = &seeded.partial;
        assert!(seeded.warnings.is_empty());
        assert_eq!(p.colour_count(), 3);
        assert_eq!(p.colour_of(5), 3);
        for (x, m) in [(1, 13), (2, 12), (3, 11), (4, 10), (5, 9)] {
            assert_ne!(p.colour_of(x), 0);
            assert_eq!(p.colour_of(x), p.colour_of(m));
        }
        assert_eq!(p.assigned_count(), 10);
        assert_eq!(p.blockage_table(), p.blockage_snapshot());
    }

    #[test]
    fn seeding_from_s1_completes_s2() {
        let base = Partition::from_subsets(1, 1, &[vec![1]]).unwrap();
        let seeded = seed_symmetric(&base, 4, &[]).unwrap();
        let p = seeded.partial.to_partition().unwrap();
        assert_eq!(p, s2());
    }

    #[test]
    fn seeding_warns_when_symmetry_is_impossible() {
        // 18 = 3 * 6 and 6 is not seeded
        let seeded = seed_symmetric(&s2(), 17, &[]).unwrap();
        assert_eq!(seeded.warnings.len(), 1);
        assert!(seeded.warnings[0].contains("divisible by 3"));
        assert!(seed_symmetric(&s2(), 17, &[6]).unwrap().warnings.is_empty());
        // with N = 14 the fresh colour itself hits 5 + 5 = 10
        match seed_symmetric(&s2(), 14, &[]) {
            Err(SearchError::Contradiction(v)) => assert_eq!((v.a, v.b, v.c), (5, 5, 10)),
            other => panic!("expected a contradiction, got {other:?}"),
        }
        assert!(seed_symmetric(&s2(), 14, &[5]).unwrap().warnings.is_empty());
    }

    #[test]
    fn seeding_errors() {
        let bad = Partition::from_subsets(3, 2, &[vec![1, 2], vec![3]]).unwrap();
        assert!(matches!(
            seed_symmetric(&bad, 10, &[]),
            Err(SearchError::BaseInvalid(_))
        ));
        assert!(matches!(
            seed_symmetric(&s2(), 4, &[]),
            Err(SearchError::TargetTooSmall { .. })
        ));
        // 3 is the mirror of 1 and also the fresh-colour position
        let two = Partition::from_subsets(2, 2, &[vec![1], vec![2]]).unwrap();
        assert_eq!(
            seed_symmetric(&two, 3, &[]).unwrap_err(),
            SearchError::Collision {
                position: 3,
                first: 1,
                second: 3
            }
        );
        // 2 and its mirror 4 share colour 2, but 2 + 2 = 4
        let base = Partition::from_subsets(1, 1, &[vec![1]]).unwrap();
        match seed_symmetric(&base, 5, &[]) {
            Err(SearchError::Contradiction(v)) => assert_eq!((v.a, v.b, v.c), (2, 2, 4)),
            other => panic!("expected a contradiction, got {other:?}"),
        }
    }

    #[test]
    fn extend_finds_s3_witness() {
        let seeded = seed_symmetric(&s2(), 13, &[]).unwrap();
        let out = extend(&seeded.partial, &SearchConfig::default()).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        let w = out.witness.unwrap();
        assert_eq!((w.order(), w.colour_count()), (13, 3));
        assert!(verify_schur(&w).valid);
        assert!(w.is_symmetric());
    }

    #[test]
    fn extend_exhausts_when_three_divides_successor() {
        let seeded = seed_symmetric(&s2(), 17, &[]).unwrap();
        let out = extend(&seeded.partial, &SearchConfig::default()).unwrap();
        assert_eq!(out.status, SearchStatus::Exhausted);
        assert_eq!(out.stats.nodes, 0);
        let cfg = SearchConfig {
            forward_check: false,
            ..SearchConfig::default()
        };
        assert_eq!(
            extend(&seeded.partial, &cfg).unwrap().status,
            SearchStatus::Exhausted
        );
    }

    #[test]
    fn extend_respects_node_budget() {
        let partial = PartialPartition::new(40, 3);
        let cfg = SearchConfig {
            max_nodes: Some(50),
            symmetric: false,
            ..SearchConfig::default()
        };
        let out = extend(&partial, &cfg).unwrap();
        assert_eq!(out.status, SearchStatus::BudgetExceeded);
        assert!(out.stats.nodes <= 50);
        assert!(out.deepest.iter().skip(1).any(|&c| c != 0));
    }

    #[test]
    fn config_validation() {
        let partial = PartialPartition::new(5, 2);
        for cfg in [
            SearchConfig {
                max_nodes: Some(0),
                ..SearchConfig::default()
            },
            SearchConfig {
                max_time: Some(Duration::ZERO),
                ..SearchConfig::default()
            },
            SearchConfig {
                threads: 0,
                ..SearchConfig::default()
            },
        ] {
            assert!(matches!(
                extend(&partial, &cfg),
                Err(SearchError::Config(_))
            ));
        }
    }

    #[test]
    fn extend_rejects_unpaired_state() {
        let mut partial = PartialPartition::new(6, 2);
        partial.assign(1, 1).unwrap();
        assert_eq!(
            extend(&partial, &SearchConfig::default()).unwrap_err(),
            SearchError::NotMirrorClosed(1)
        );
    }

    #[test]
    fn unconstrained_search_finds_s2_and_refutes_5() {
        let cfg = SearchConfig {
            symmetric: false,
            ..SearchConfig::default()
        };
        let out = extend(&PartialPartition::new(4, 2), &cfg).unwrap();
        assert_eq!(out.status, SearchStatus::Found);
        let out = extend(&PartialPartition::new(5, 2), &cfg).unwrap();
        assert_eq!(out.status, SearchStatus::Exhausted);
    }
}

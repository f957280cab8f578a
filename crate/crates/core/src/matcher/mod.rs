//! One-off support counting by depth-first search with backtracking.
//!
//! For every root position holding the first positive, in ascending order,
//! the search extends a partial occurrence one level at a time, always taking
//! the leftmost admissible child. A child at `(level, position)` is admissible
//! when its symbol matches, the gap holds, the position is not consumed by an
//! earlier occurrence, no node at that key has been created before in this
//! sequence, and the negative element (if any) is absent from the interior.
//! A node with no admissible child left is dead and the search backtracks.
//! Completed occurrences consume their positions for every level.
//!
//! Node keys are created at most once per (pattern, sequence), so one count
//! costs at most `m × n` node creations plus `O(N - M + 1)` window work each.

mod observer;
pub mod oracle;

pub use observer::{MatchObserver, NodeCounter, Rejection, TraceEvent, TraceRecorder};

use crate::occurrence::{EmptyGapPolicy, Occurrence};
use crate::pattern::{Pattern, Symbol};
use crate::sequence::{Sequence, SequenceDatabase, SequenceId};

/// Per-sequence bookkeeping for one pattern.
///
/// `cursor` is indexed by level rather than by node: only the nodes on the
/// current search path can still be extended, and each level holds exactly
/// one of them.
#[derive(Debug, Clone, Default)]
pub struct MatchState {
    n: usize,
    m: usize,
    used: Vec<bool>,
    created: Vec<bool>,
    dead: Vec<bool>,
    cursor: Vec<usize>,
    path: Vec<usize>,
    created_count: usize,
}

impl MatchState {
    pub fn new(n: usize, m: usize) -> Self {
        let mut state = MatchState::default();
        state.reset(n, m);
        state
    }

    /// Clears the state for a fresh (sequence, pattern) pair, keeping allocations.
    pub fn reset(&mut self, n: usize, m: usize) {
        self.n = n;
        self.m = m;
        self.used.clear();
        self.used.resize(n, false);
        self.created.clear();
        self.created.resize(n * m, false);
        self.dead.clear();
        self.dead.resize(n * m, false);
        self.cursor.clear();
        self.cursor.resize(m, 0);
        self.path.clear();
        self.created_count = 0;
    }

    pub fn is_used(&self, position: usize) -> bool {
        self.used[position - 1]
    }

    pub fn is_created(&self, level: usize, position: usize) -> bool {
        self.created[self.key(level - 1, position - 1)]
    }

    pub fn is_dead(&self, level: usize, position: usize) -> bool {
        self.dead[self.key(level - 1, position - 1)]
    }

    /// Number of nodes created since the last reset.
    pub fn created_count(&self) -> usize {
        self.created_count
    }

    /// Creates the level-1 node at `position` if it is free. Returns whether
    /// the node was created.
    pub fn create_root(&mut self, position: usize) -> bool {
        let i = position - 1;
        if self.used[i] || self.created[i] {
            return false;
        }
        self.created[i] = true;
        self.created_count += 1;
        true
    }

    /// Marks every position of `occurrence` as consumed.
    pub fn consume(&mut self, occurrence: &Occurrence) {
        for &p in occurrence.positions() {
            self.used[p - 1] = true;
        }
    }

    fn key(&self, level0: usize, pos0: usize) -> usize {
        level0 * self.n + pos0
    }
}

/// Whether a negative element `e` is satisfied between 1-based positions
/// `left < right`. Only the interior is inspected.
pub fn negative_gap_ok(seq: &Sequence, left: usize, right: usize, e: Option<Symbol>, policy: EmptyGapPolicy) -> bool {
    interior_ok(seq.symbols(), left - 1, right - 1, e, policy)
}

#[inline]
fn interior_ok(symbols: &[Symbol], left0: usize, right0: usize, e: Option<Symbol>, policy: EmptyGapPolicy) -> bool {
    match e {
        None => true,
        Some(e) => {
            if right0 == left0 + 1 {
                policy == EmptyGapPolicy::Accept
            } else {
                !symbols[left0 + 1..right0].contains(&e)
            }
        }
    }
}

/// One-off support of a pattern in one sequence or a whole database.
#[derive(Debug, Clone, Copy, Default)]
pub struct Matcher {
    pub policy: EmptyGapPolicy,
}

impl Matcher {
    pub fn new(policy: EmptyGapPolicy) -> Self {
        Matcher { policy }
    }

    /// Extends the already-created root at 1-based `root` depth-first.
    /// Returns the first complete occurrence, or `None` once the root's
    /// subtree is exhausted (the root is then dead).
    pub fn dfb<O: MatchObserver>(
        &self,
        seq: &Sequence,
        pattern: &Pattern,
        root: usize,
        state: &mut MatchState,
        observer: &mut O,
    ) -> Option<Occurrence> {
        debug_assert!(state.is_created(1, root) && !state.is_used(root));
        debug_assert_eq!(seq.at(root), pattern.first());
        self.extend(seq.symbols(), pattern, root - 1, state, observer)
            .then(|| Occurrence::new(state.path.iter().map(|&p| p + 1).collect()))
    }

    /// Counts the one-off support of `pattern` in `seq` and returns the
    /// occurrences in discovery order.
    pub fn count_support(&self, seq: &Sequence, pattern: &Pattern) -> (usize, Vec<Occurrence>) {
        let mut occurrences = Vec::new();
        let count = self.scan(seq, pattern, &mut MatchState::default(), &mut (), |path| {
            occurrences.push(Occurrence::new(path.iter().map(|&p| p + 1).collect()))
        });
        (count, occurrences)
    }

    /// Count only, reusing `state`.
    pub fn support_in(&self, seq: &Sequence, pattern: &Pattern, state: &mut MatchState) -> usize {
        self.scan(seq, pattern, state, &mut (), |_| {})
    }

    /// Count with an observer attached, reusing `state`.
    pub fn support_observed<O: MatchObserver>(
        &self,
        seq: &Sequence,
        pattern: &Pattern,
        state: &mut MatchState,
        observer: &mut O,
    ) -> usize {
        self.scan(seq, pattern, state, observer, |_| {})
    }

    /// Database support: the sum of fresh per-sequence counts.
    pub fn count_support_db(&self, db: &SequenceDatabase, pattern: &Pattern) -> SupportResult {
        let per_sequence: Vec<_> = db
            .sequences()
            .iter()
            .map(|seq| {
                let (count, occurrences) = self.count_support(seq, pattern);
                SequenceSupport { id: seq.id().clone(), count, occurrences }
            })
            .collect();
        SupportResult { pattern: pattern.clone(), total: per_sequence.iter().map(|s| s.count).sum(), per_sequence }
    }

    /// Database support without occurrence lists.
    pub fn support_db(&self, db: &SequenceDatabase, pattern: &Pattern, state: &mut MatchState) -> usize {
        db.sequences().iter().map(|seq| self.support_in(seq, pattern, state)).sum()
    }

    fn scan<O: MatchObserver>(
        &self,
        seq: &Sequence,
        pattern: &Pattern,
        state: &mut MatchState,
        observer: &mut O,
        mut found: impl FnMut(&[usize]),
    ) -> usize {
        let (n, m) = (seq.len(), pattern.len());
        if n < m {
            return 0;
        }
        state.reset(n, m);
        let symbols = seq.symbols();
        let first = pattern.first();
        let mut count = 0;
        for i in 0..=n - m {
            if symbols[i] != first || !state.create_root(i + 1) {
                continue;
            }
            observer.node_created(1, i + 1);
            if self.extend(symbols, pattern, i, state, observer) {
                count += 1;
                for k in 0..state.path.len() {
                    let p = state.path[k];
                    state.used[p] = true;
                }
                observer.occurrence_found(&state.path);
                found(&state.path);
            }
        }
        count
    }

    /// Depth-first extension from the created root `root0` (0-based). On
    /// success `state.path` holds the occurrence.
    fn extend<O: MatchObserver>(
        &self,
        symbols: &[Symbol],
        pattern: &Pattern,
        root0: usize,
        state: &mut MatchState,
        observer: &mut O,
    ) -> bool {
        let n = symbols.len();
        let m = pattern.len();
        let gap = pattern.gap();
        let positives = pattern.positives();
        let negatives = pattern.negatives();

        state.path.clear();
        state.path.push(root0);
        state.cursor[0] = root0 + gap.min() + 1;
        loop {
            let depth = state.path.len();
            if depth == m {
                return true;
            }
            let parent = state.path[depth - 1];
            let hi = (parent + gap.max() + 1).min(n - 1);
            let want = positives[depth];
            let mut child = None;
            while state.cursor[depth - 1] <= hi {
                let i = state.cursor[depth - 1];
                state.cursor[depth - 1] += 1;
                if symbols[i] != want {
                    continue;
                }
                let key = depth * n + i;
                let rejection = if state.used[i] {
                    Some(Rejection::Used)
                } else if state.created[key] {
                    Some(Rejection::AlreadyCreated)
                } else if !interior_ok(symbols, parent, i, negatives[depth - 1], self.policy) {
                    Some(Rejection::Negative)
                } else {
                    None
                };
                match rejection {
                    Some(reason) => observer.candidate_rejected(depth + 1, i + 1, reason),
                    None => {
                        child = Some(i);
                        break;
                    }
                }
            }
            match child {
                Some(i) => {
                    state.created[depth * n + i] = true;
                    state.created_count += 1;
                    observer.node_created(depth + 1, i + 1);
                    state.path.push(i);
                    state.cursor[depth] = i + gap.min() + 1;
                }
                None => {
                    state.dead[(depth - 1) * n + parent] = true;
                    observer.node_dead(depth, parent + 1);
                    state.path.pop();
                    if state.path.is_empty() {
                        return false;
                    }
                }
            }
        }
    }
}

/// Support of one pattern in one sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSupport {
    pub id: SequenceId,
    pub count: usize,
    pub occurrences: Vec<Occurrence>,
}

/// Database support with per-sequence breakdown, in database order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportResult {
    pub pattern: Pattern,
    pub total: usize,
    pub per_sequence: Vec<SequenceSupport>,
}

/// [`Matcher::count_support`] with the default policy.
pub fn count_support(seq: &Sequence, pattern: &Pattern) -> (usize, Vec<Occurrence>) {
    Matcher::default().count_support(seq, pattern)
}

/// [`Matcher::count_support_db`] with the default policy.
pub fn count_support_db(db: &SequenceDatabase, pattern: &Pattern) -> SupportResult {
    Matcher::default().count_support_db(db, pattern)
}

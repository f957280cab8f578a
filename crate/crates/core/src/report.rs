use std::time::Duration;

use crate::config::MiningConfig;
use crate::pattern::{Alphabet, Pattern};

/// Candidate accounting for one pattern length.
///
/// `generated = pruned + checked`; `frequent <= checked`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LevelStats {
    pub len: usize,
    pub generated: usize,
    pub pruned: usize,
    pub checked: usize,
    pub frequent: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequentPattern {
    pub pattern: Pattern,
    pub support: usize,
}

#[derive(Debug, Clone)]
pub struct LevelReport {
    pub stats: LevelStats,
    /// Sorted by canonical text.
    pub frequent: Vec<FrequentPattern>,
    pub elapsed: Duration,
}

/// Outcome of a mining run.
#[derive(Debug, Clone)]
pub struct MiningReport {
    pub config: MiningConfig,
    /// The alphabet negatives and enumeration extensions were drawn from.
    pub alphabet: Alphabet,
    /// One entry per pattern length examined, starting at 1.
    pub levels: Vec<LevelReport>,
    pub elapsed: Duration,
}

impl MiningReport {
    pub fn level(&self, len: usize) -> Option<&LevelReport> {
        self.levels.iter().find(|l| l.stats.len == len)
    }

    /// All frequent patterns, shortest first, canonical order within a length.
    pub fn patterns(&self) -> impl Iterator<Item = &FrequentPattern> {
        self.levels.iter().flat_map(|l| l.frequent.iter())
    }

    pub fn total_frequent(&self) -> usize {
        self.levels.iter().map(|l| l.frequent.len()).sum()
    }

    /// Frequent patterns summed over lengths >= `from_len`.
    pub fn total_frequent_from(&self, from_len: usize) -> usize {
        self.levels.iter().filter(|l| l.stats.len >= from_len).map(|l| l.frequent.len()).sum()
    }

    /// Patterns whose support was computed, summed over lengths >= `from_len`.
    pub fn total_checked(&self, from_len: usize) -> usize {
        self.levels.iter().filter(|l| l.stats.len >= from_len).map(|l| l.stats.checked).sum()
    }

    pub fn support_of(&self, pattern: &Pattern) -> Option<usize> {
        self.level(pattern.len())?
            .frequent
            .binary_search_by(|f| f.pattern.cmp(pattern))
            .ok()
            .map(|i| self.level(pattern.len()).unwrap().frequent[i].support)
    }

    /// Same frequent patterns with the same supports.
    pub fn same_patterns(&self, other: &MiningReport) -> bool {
        self.patterns().eq(other.patterns())
    }
}

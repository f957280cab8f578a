use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::occurrence::EmptyGapPolicy;
use crate::pattern::{Alphabet, GapConstraint};

/// Candidate-generation strategy. All of them count support the same way.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Prefix/suffix join with positive-skeleton pruning.
    #[default]
    JoinPrune,
    /// Prefix/suffix join, every candidate checked.
    JoinOnly,
    /// Enumeration tree, level by level.
    EnumBfs,
    /// Enumeration tree, one subtree at a time.
    EnumDfs,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::EnumDfs, Strategy::EnumBfs, Strategy::JoinOnly, Strategy::JoinPrune];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::JoinPrune => "join-prune",
            Strategy::JoinOnly => "join-only",
            Strategy::EnumBfs => "enum-bfs",
            Strategy::EnumDfs => "enum-dfs",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| format!("unknown strategy {s:?}; expected one of join-prune, join-only, enum-bfs, enum-dfs"))
    }
}

/// Parameters of one mining run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiningConfig {
    /// Absolute support threshold over the whole database.
    pub minsup: usize,
    pub gap: GapConstraint,
    pub strategy: Strategy,
    /// Replaces the observed alphabet; must contain every observed symbol.
    pub alphabet_override: Option<Alphabet>,
    /// Worker threads for support checks. 0 uses every core, 1 runs inline.
    pub parallelism: usize,
    pub empty_gap: EmptyGapPolicy,
    /// Longest pattern to consider. Defaults to the longest sequence.
    pub max_len: Option<usize>,
}

impl MiningConfig {
    pub fn new(minsup: usize, gap: GapConstraint) -> Result<Self> {
        let config = MiningConfig {
            minsup,
            gap,
            strategy: Strategy::default(),
            alphabet_override: None,
            parallelism: 1,
            empty_gap: EmptyGapPolicy::default(),
            max_len: None,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Self {
        self.alphabet_override = Some(alphabet);
        self
    }

    pub fn with_parallelism(mut self, workers: usize) -> Self {
        self.parallelism = workers;
        self
    }

    pub fn with_empty_gap(mut self, policy: EmptyGapPolicy) -> Self {
        self.empty_gap = policy;
        self
    }

    pub fn with_max_len(mut self, max_len: usize) -> Self {
        self.max_len = Some(max_len);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.minsup < 1 {
            return Err(Error::InvalidMinsup);
        }
        GapConstraint::new(self.gap.min(), self.gap.max())?;
        Ok(())
    }
}

//! Level-wise mining driver.
//!
//! Length one is a symbol count, length two is the pair bootstrap, and every
//! later length joins the previous frequent set, checks positive candidates,
//! prunes negatives whose skeleton failed, then checks the survivors. The loop
//! stops at the first length without frequent patterns.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::baselines;
use crate::candidates::{find_frequent, generate_level2, pattern_join_all, prune_by_skeleton};
use crate::config::{MiningConfig, Strategy};
use crate::error::Result;
use crate::matcher::Matcher;
use crate::pattern::{Alphabet, Pattern, Symbol};
use crate::report::{FrequentPattern, LevelReport, LevelStats, MiningReport};
use crate::sequence::SequenceDatabase;
use crate::support::SupportCounter;

/// Runs `config.strategy` over `db`.
pub fn mine(db: &SequenceDatabase, config: &MiningConfig) -> Result<MiningReport> {
    match config.strategy {
        Strategy::JoinPrune => mine_join(db, config, true),
        Strategy::JoinOnly => baselines::mine_join_only(db, config),
        Strategy::EnumBfs => baselines::mine_enum(db, config, baselines::Order::BreadthFirst),
        Strategy::EnumDfs => baselines::mine_enum(db, config, baselines::Order::DepthFirst),
    }
}

/// Occurrence count of every symbol of `alphabet` over `db`, keeping those
/// at or above `minsup`. Alphabet order.
pub fn frequent_length1(db: &SequenceDatabase, minsup: usize, alphabet: &Alphabet) -> Vec<(Symbol, usize)> {
    symbol_counts(db, alphabet).into_iter().filter(|&(_, c)| c >= minsup).collect()
}

pub(crate) fn symbol_counts(db: &SequenceDatabase, alphabet: &Alphabet) -> Vec<(Symbol, usize)> {
    alphabet
        .iter()
        .map(|s| (s, db.sequences().iter().map(|q| q.symbols().iter().filter(|&&x| x == s).count()).sum()))
        .collect()
}

/// Everything a strategy needs: validated config, effective alphabet,
/// support counter and level cap.
pub(crate) struct Run<'a> {
    pub config: &'a MiningConfig,
    pub alphabet: Alphabet,
    pub counter: SupportCounter<'a>,
    pub max_len: usize,
    pub started: Instant,
}

impl<'a> Run<'a> {
    pub fn new(db: &'a SequenceDatabase, config: &'a MiningConfig) -> Result<Self> {
        config.validate()?;
        let alphabet = match &config.alphabet_override {
            Some(a) => db.clone().with_alphabet(a.clone())?.alphabet().clone(),
            None => db.alphabet().clone(),
        };
        Ok(Run {
            config,
            alphabet,
            counter: SupportCounter::new(db, Matcher::new(config.empty_gap), config.parallelism),
            max_len: config.max_len.unwrap_or_else(|| db.max_sequence_length()),
            started: Instant::now(),
        })
    }

    /// Level one: every alphabet symbol is a checked candidate.
    pub fn level1(&self) -> LevelReport {
        let t = Instant::now();
        let counts = symbol_counts(self.counter.db(), &self.alphabet);
        let frequent: Vec<FrequentPattern> = counts
            .iter()
            .filter(|&&(_, c)| c >= self.config.minsup)
            .map(|&(s, support)| FrequentPattern { pattern: Pattern::single(s, self.config.gap), support })
            .collect();
        let stats =
            LevelStats { len: 1, generated: counts.len(), pruned: 0, checked: counts.len(), frequent: frequent.len() };
        LevelReport { stats, frequent, elapsed: t.elapsed() }
    }

    pub fn finish(self, levels: Vec<LevelReport>) -> MiningReport {
        MiningReport { config: self.config.clone(), alphabet: self.alphabet, levels, elapsed: self.started.elapsed() }
    }
}

/// Join-based mining, with or without skeleton pruning.
pub(crate) fn mine_join(db: &SequenceDatabase, config: &MiningConfig, prune: bool) -> Result<MiningReport> {
    let run = Run::new(db, config)?;
    let minsup = config.minsup;
    let mut levels = vec![run.level1()];

    let f1: Vec<Symbol> = levels[0].frequent.iter().map(|f| f.pattern.first()).collect();
    if f1.is_empty() || run.max_len < 2 {
        return Ok(run.finish(levels));
    }
    let t = Instant::now();
    let level2 = generate_level2(&f1, &run.alphabet, config.gap, &run.counter, minsup, prune);
    levels.push(LevelReport { stats: level2.stats, frequent: level2.frequent, elapsed: t.elapsed() });

    let mut len = 2;
    while len < run.max_len && !levels[len - 1].frequent.is_empty() {
        let t = Instant::now();
        let current: Vec<Pattern> = levels[len - 1].frequent.iter().map(|f| f.pattern.clone()).collect();
        let cands = pattern_join_all(&current);
        let generated = cands.len();

        let mut frequent = find_frequent(&run.counter, minsup, &cands.positives);
        let (cands, pruned) = if prune {
            let skeletons: BTreeSet<Pattern> = frequent.iter().map(|f| f.pattern.clone()).collect();
            prune_by_skeleton(cands, &skeletons)
        } else {
            (cands, 0)
        };
        frequent.extend(find_frequent(&run.counter, minsup, &cands.negatives));
        frequent.sort_by(|a, b| a.pattern.cmp(&b.pattern));

        len += 1;
        let stats = LevelStats { len, generated, pruned, checked: cands.len(), frequent: frequent.len() };
        levels.push(LevelReport { stats, frequent, elapsed: t.elapsed() });
    }
    Ok(run.finish(levels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::GapConstraint;

    fn db(texts: &[&str]) -> SequenceDatabase {
        SequenceDatabase::from_strs(texts).unwrap()
    }

    fn dna() -> Alphabet {
        Alphabet::parse("ACGT").unwrap()
    }

    #[test]
    fn length_one_counts() {
        let f1 = frequent_length1(&db(&["AACACCTCAACGCTC"]), 3, &dna());
        let syms: String = f1.iter().map(|(s, _)| s.as_char()).collect();
        assert_eq!(syms, "AC");
        assert_eq!(f1, vec![(f1[0].0, 5), (f1[1].0, 7)]);
        assert_eq!(frequent_length1(&db(&["AACACCTC"]), 2, &dna()).len(), 2);
        assert_eq!(frequent_length1(&db(&["AGT", "C"]), 1, &Alphabet::parse("ACGT").unwrap()).len(), 4);
    }

    #[test]
    fn nothing_frequent_stops_immediately() {
        let config = MiningConfig::new(10, GapConstraint::new(0, 2).unwrap()).unwrap();
        let report = mine(&db(&["ACGT"]), &config).unwrap();
        assert_eq!(report.total_frequent(), 0);
        assert_eq!(report.levels.len(), 1);
    }

    #[test]
    fn rejects_bad_override() {
        let config = MiningConfig::new(1, GapConstraint::new(0, 2).unwrap())
            .unwrap()
            .with_alphabet(Alphabet::parse("A").unwrap());
        assert!(mine(&db(&["ACGT"]), &config).is_err());
    }

    #[test]
    fn level_cap_is_respected() {
        let config = MiningConfig::new(1, GapConstraint::new(0, 1).unwrap()).unwrap().with_max_len(2);
        let report = mine(&db(&["AAAAAA"]), &config).unwrap();
        assert!(report.levels.iter().all(|l| l.stats.len <= 2));
    }
}

//! Comparison strategies sharing the same support counting: join without
//! pruning, and the enumeration tree in breadth-first or depth-first order.

use std::time::{Duration, Instant};

use crate::config::MiningConfig;
use crate::error::Result;
use crate::miner::{mine_join, Run};
use crate::pattern::{Alphabet, Pattern};
use crate::report::{FrequentPattern, LevelReport, LevelStats, MiningReport};
use crate::sequence::SequenceDatabase;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    BreadthFirst,
    DepthFirst,
}

/// `p[M,N]x` for every `x`, then `p[M,N]¬e x` for every `(e, x)`:
/// `|Σ| + |Σ|²` patterns, positives first.
pub fn enum_extensions(p: &Pattern, alphabet: &Alphabet) -> Vec<Pattern> {
    let positives = alphabet.iter().map(|x| p.extended(None, x));
    let negatives = alphabet.iter().flat_map(|e| alphabet.iter().map(move |x| p.extended(Some(e), x)));
    positives.chain(negatives).collect()
}

/// Join strategy without skeleton pruning; at length two the negative
/// variants of every positive pair are checked.
pub fn mine_join_only(db: &SequenceDatabase, config: &MiningConfig) -> Result<MiningReport> {
    mine_join(db, config, false)
}

/// Enumeration-tree mining. Every alphabet symbol seeds the tree; deeper
/// levels extend frequent patterns only.
pub fn mine_enum(db: &SequenceDatabase, config: &MiningConfig, order: Order) -> Result<MiningReport> {
    let run = Run::new(db, config)?;
    let level1 = run.level1();
    let roots: Vec<Pattern> = run.alphabet.iter().map(|s| Pattern::single(s, config.gap)).collect();
    let mut acc = Levels::default();
    acc.push(level1);
    match order {
        Order::BreadthFirst => bfs(&run, roots, &mut acc),
        Order::DepthFirst => {
            for root in &roots {
                dfs(&run, root, &mut acc);
            }
        }
    }
    Ok(run.finish(acc.finish()))
}

fn bfs(run: &Run<'_>, roots: Vec<Pattern>, acc: &mut Levels) {
    let mut base = roots;
    let mut len = 1;
    while !base.is_empty() && len < run.max_len {
        let t = Instant::now();
        let cands: Vec<Pattern> = base.iter().flat_map(|p| enum_extensions(p, &run.alphabet)).collect();
        let frequent = check(run, &cands);
        len += 1;
        acc.record(len, cands.len(), &frequent, t.elapsed());
        base = frequent.into_iter().map(|f| f.pattern).collect();
    }
}

fn dfs(run: &Run<'_>, node: &Pattern, acc: &mut Levels) {
    if node.len() >= run.max_len {
        return;
    }
    let t = Instant::now();
    let cands = enum_extensions(node, &run.alphabet);
    let frequent = check(run, &cands);
    acc.record(node.len() + 1, cands.len(), &frequent, t.elapsed());
    for child in &frequent {
        dfs(run, &child.pattern, acc);
    }
}

fn check(run: &Run<'_>, cands: &[Pattern]) -> Vec<FrequentPattern> {
    crate::candidates::find_frequent(&run.counter, run.config.minsup, cands)
}

/// Per-length accumulation for traversals that visit lengths out of order.
#[derive(Default)]
struct Levels(Vec<LevelReport>);

impl Levels {
    fn push(&mut self, level: LevelReport) {
        self.0.push(level);
    }

    fn record(&mut self, len: usize, checked: usize, frequent: &[FrequentPattern], elapsed: Duration) {
        while self.0.len() < len {
            let stats = LevelStats { len: self.0.len() + 1, ..Default::default() };
            self.0.push(LevelReport { stats, frequent: Vec::new(), elapsed: Duration::ZERO });
        }
        let level = &mut self.0[len - 1];
        level.stats.generated += checked;
        level.stats.checked += checked;
        level.stats.frequent += frequent.len();
        level.frequent.extend_from_slice(frequent);
        level.elapsed += elapsed;
    }

    fn finish(mut self) -> Vec<LevelReport> {
        for level in &mut self.0 {
            level.frequent.sort_by(|a, b| a.pattern.cmp(&b.pattern));
        }
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::GapConstraint;

    #[test]
    fn extension_counts() {
        let g = GapConstraint::new(0, 2).unwrap();
        let p = Pattern::parse("A[0,2]C", g).unwrap();
        let dna = Alphabet::parse("ACGT").unwrap();
        let ext = enum_extensions(&p, &dna);
        assert_eq!(ext.len(), 20);
        assert!(ext.contains(&Pattern::parse("A[0,2]C[0,2]¬GA", g).unwrap()));
        assert!(ext[..4].iter().all(|e| !e.is_negative()));

        let one = Alphabet::parse("a").unwrap();
        let texts: Vec<String> =
            enum_extensions(&Pattern::parse("a", g).unwrap(), &one).iter().map(|p| p.to_string()).collect();
        assert_eq!(texts, vec!["a[0,2]a", "a[0,2]¬aa"]);
    }

    #[test]
    fn infrequent_roots_still_expand_once() {
        let db = SequenceDatabase::from_strs(&["ACGT"]).unwrap();
        let config = MiningConfig::new(5, GapConstraint::new(0, 2).unwrap()).unwrap();
        for order in [Order::BreadthFirst, Order::DepthFirst] {
            let r = mine_enum(&db, &config, order).unwrap();
            assert_eq!(r.level(2).unwrap().stats.checked, 80);
            assert_eq!(r.levels.len(), 2);
            assert_eq!(r.total_frequent(), 0);
        }
    }
}

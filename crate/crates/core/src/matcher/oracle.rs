//! Exhaustive reference implementations for tests.
//!
//! Nothing here shares code with the search in the parent module: occurrences
//! are enumerated straight from the pattern definition and the one-off
//! maximum is found by dynamic programming over all of them.
//!
//! Limits: sequences of at most [`MAX_SEQUENCE_LEN`] positions, at most
//! `limit` occurrences, and at most [`SEARCH_BUDGET`] memoised packing states.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::occurrence::{EmptyGapPolicy, Occurrence};
use crate::pattern::Pattern;
use crate::sequence::Sequence;

pub const MAX_SEQUENCE_LEN: usize = 128;
pub const DEFAULT_LIMIT: usize = 100_000;
pub const SEARCH_BUDGET: usize = 5_000_000;

/// Every occurrence of `pattern` in `seq`, one-off or not, in lexicographic order.
pub fn enumerate_all_occurrences(
    seq: &Sequence,
    pattern: &Pattern,
    policy: EmptyGapPolicy,
    limit: usize,
) -> Result<Vec<Occurrence>> {
    if seq.len() > MAX_SEQUENCE_LEN {
        return Err(Error::OracleLimit(format!("sequence length {} exceeds {MAX_SEQUENCE_LEN}", seq.len())));
    }
    let mut out = Vec::new();
    let mut tuple = Vec::with_capacity(pattern.len());
    for first in 1..=seq.len() {
        tuple.clear();
        tuple.push(first);
        walk(seq, pattern, policy, &mut tuple, &mut out, limit)?;
    }
    Ok(out)
}

fn walk(
    seq: &Sequence,
    pattern: &Pattern,
    policy: EmptyGapPolicy,
    tuple: &mut Vec<usize>,
    out: &mut Vec<Occurrence>,
    limit: usize,
) -> Result<()> {
    let j = tuple.len() - 1;
    let here = tuple[j];
    if seq.at(here) != pattern.positives()[j] {
        return Ok(());
    }
    if j > 0 && !link_ok(seq, pattern, policy, tuple[j - 1], here, j - 1) {
        return Ok(());
    }
    if tuple.len() == pattern.len() {
        if out.len() == limit {
            return Err(Error::OracleLimit(format!("more than {limit} occurrences")));
        }
        out.push(Occurrence::new(tuple.clone()));
        return Ok(());
    }
    for next in here + 1..=seq.len() {
        tuple.push(next);
        let r = walk(seq, pattern, policy, tuple, out, limit);
        tuple.pop();
        r?;
    }
    Ok(())
}

/// Gap inequality plus the negative element between slots `slot` and `slot + 1`.
fn link_ok(seq: &Sequence, pattern: &Pattern, policy: EmptyGapPolicy, left: usize, right: usize, slot: usize) -> bool {
    let wildcards = right - left - 1;
    let gap = pattern.gap();
    if wildcards < gap.min() || wildcards > gap.max() {
        return false;
    }
    match pattern.negatives()[slot] {
        None => true,
        Some(_) if wildcards == 0 => policy == EmptyGapPolicy::Accept,
        Some(e) => (left + 1..right).all(|p| seq.at(p) != e),
    }
}

/// Size of the largest pairwise position-disjoint subset of all occurrences.
pub fn max_disjoint_count(seq: &Sequence, pattern: &Pattern, policy: EmptyGapPolicy, limit: usize) -> Result<usize> {
    let occurrences = enumerate_all_occurrences(seq, pattern, policy, limit)?;
    let mut by_start: Vec<Vec<u128>> = vec![Vec::new(); seq.len()];
    for o in &occurrences {
        let first = o.positions()[0] - 1;
        by_start[first].push(o.positions().iter().fold(0u128, |acc, &p| acc | 1 << (p - 1 - first)));
    }
    let mut packing = Packing { by_start, memo: HashMap::new() };
    let best = packing.best(0, 0)?;
    Ok(best)
}

/// Exact packing by dynamic programming over start positions. At most one
/// chosen occurrence starts at each position, so it is enough to decide, from
/// left to right, which one (if any) starts here. `taken` is the occupancy
/// from position `start` onward, bit 0 being `start` itself.
struct Packing {
    by_start: Vec<Vec<u128>>,
    memo: HashMap<(usize, u128), usize>,
}

impl Packing {
    fn best(&mut self, start: usize, taken: u128) -> Result<usize> {
        if start == self.by_start.len() {
            return Ok(0);
        }
        if let Some(&v) = self.memo.get(&(start, taken)) {
            return Ok(v);
        }
        if self.memo.len() >= SEARCH_BUDGET {
            return Err(Error::OracleLimit("packing state budget exhausted".to_string()));
        }
        let mut best = self.best(start + 1, taken >> 1)?;
        for k in 0..self.by_start[start].len() {
            let mask = self.by_start[start][k];
            if mask & taken == 0 {
                best = best.max(1 + self.best(start + 1, (taken | mask) >> 1)?);
            }
        }
        self.memo.insert((start, taken), best);
        Ok(best)
    }
}

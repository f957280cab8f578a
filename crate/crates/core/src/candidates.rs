//! Candidate generation: prefix/suffix, pattern join, the length-two
//! bootstrap and positive-skeleton pruning.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::pattern::{Alphabet, GapConstraint, Pattern, Symbol};
use crate::report::{FrequentPattern, LevelStats};
use crate::support::SupportCounter;

/// Drops the last positive and the negative slot before it. `None` for `m < 2`.
pub fn prefix(p: &Pattern) -> Option<Pattern> {
    let m = p.len();
    (m >= 2).then(|| {
        Pattern::from_parts_unchecked(p.positives()[..m - 1].to_vec(), p.negatives()[..m - 2].to_vec(), p.gap())
    })
}

/// Drops the first positive and the negative slot after it. `None` for `m < 2`.
pub fn suffix(p: &Pattern) -> Option<Pattern> {
    (p.len() >= 2)
        .then(|| Pattern::from_parts_unchecked(p.positives()[1..].to_vec(), p.negatives()[1..].to_vec(), p.gap()))
}

/// `p ⊕ q` when `suffix(p) == prefix(q)`: `p` followed by `q`'s last slot and
/// last positive. `None` when they do not overlap, or when lengths or gaps differ.
pub fn join(p: &Pattern, q: &Pattern) -> Option<Pattern> {
    let m = p.len();
    if m < 2 || q.len() != m || p.gap() != q.gap() || !overlaps(p, q) {
        return None;
    }
    Some(p.extended(q.negatives()[m - 2], q.last()))
}

/// `suffix(p) == prefix(q)` without building either.
fn overlaps(p: &Pattern, q: &Pattern) -> bool {
    let m = p.len();
    p.positives()[1..] == q.positives()[..m - 1] && p.negatives()[1..] == q.negatives()[..m - 2]
}

/// Candidates of one length, split by polarity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CandidateSet {
    pub level: usize,
    /// Candidates without negative elements, canonical order.
    pub positives: Vec<Pattern>,
    /// Candidates with at least one negative element, canonical order.
    pub negatives: Vec<Pattern>,
    /// Positive skeleton of every negative candidate.
    pub skeleton_index: BTreeMap<Pattern, Pattern>,
}

impl CandidateSet {
    pub fn from_patterns(level: usize, patterns: impl IntoIterator<Item = Pattern>) -> Self {
        let unique: BTreeSet<Pattern> = patterns.into_iter().collect();
        let mut set = CandidateSet { level, ..Default::default() };
        for p in unique {
            debug_assert_eq!(p.len(), level);
            if p.is_negative() {
                set.skeleton_index.insert(p.clone(), p.positive_skeleton());
                set.negatives.push(p);
            } else {
                set.positives.push(p);
            }
        }
        set
    }

    pub fn len(&self) -> usize {
        self.positives.len() + self.negatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Every `p ⊕ q` over ordered pairs of `frequent`, self-pairs included.
pub fn pattern_join_all(frequent: &[Pattern]) -> CandidateSet {
    let level = frequent.first().map_or(0, |p| p.len() + 1);
    let mut by_prefix: HashMap<Pattern, Vec<&Pattern>> = HashMap::new();
    for q in frequent {
        if let Some(pre) = prefix(q) {
            by_prefix.entry(pre).or_default().push(q);
        }
    }
    let joined = frequent
        .iter()
        .filter_map(|p| Some((p, by_prefix.get(&suffix(p)?)?)))
        .flat_map(|(p, qs)| qs.iter().map(move |q| p.extended(q.negatives()[q.len() - 2], q.last())));
    CandidateSet::from_patterns(level, joined)
}

/// Removes negative candidates whose skeleton is not in `frequent_positives`.
/// Returns the surviving set and the number removed.
pub fn prune_by_skeleton(cands: CandidateSet, frequent_positives: &BTreeSet<Pattern>) -> (CandidateSet, usize) {
    let CandidateSet { level, positives, negatives, mut skeleton_index } = cands;
    let before = negatives.len();
    let negatives: Vec<Pattern> =
        negatives.into_iter().filter(|n| frequent_positives.contains(&skeleton_index[n])).collect();
    skeleton_index.retain(|n, _| negatives.binary_search(n).is_ok());
    let pruned = before - negatives.len();
    (CandidateSet { level, positives, negatives, skeleton_index }, pruned)
}

/// `A[M,N]¬eB` for every `e` in `alphabet`, from a positive 2-pattern `A[M,N]B`.
pub fn negative_variants(p: &Pattern, alphabet: &Alphabet) -> Vec<Pattern> {
    debug_assert_eq!(p.len(), 2);
    alphabet.iter().map(|e| Pattern::from_parts_unchecked(p.positives().to_vec(), vec![Some(e)], p.gap())).collect()
}

/// All ordered pairs `A[M,N]B` over `symbols`, including `A = B`.
pub fn positive_pairs(symbols: &[Symbol], gap: GapConstraint) -> Vec<Pattern> {
    let mut out: Vec<Pattern> = symbols
        .iter()
        .flat_map(|&a| symbols.iter().map(move |&b| Pattern::from_parts_unchecked(vec![a, b], vec![None], gap)))
        .collect();
    out.sort();
    out
}

/// Support-checks `cands`, keeping those at or above `minsup`.
pub fn find_frequent(counter: &SupportCounter<'_>, minsup: usize, cands: &[Pattern]) -> Vec<FrequentPattern> {
    counter
        .supports(cands)
        .into_iter()
        .zip(cands)
        .filter(|(s, _)| *s >= minsup)
        .map(|(support, p)| FrequentPattern { pattern: p.clone(), support })
        .collect()
}

/// Frequent length-two patterns and their accounting.
#[derive(Debug, Clone)]
pub struct Level2 {
    /// Canonical order.
    pub frequent: Vec<FrequentPattern>,
    pub stats: LevelStats,
}

/// Length-two bootstrap. Positive pairs over `f1` are checked first; negative
/// variants over the whole `alphabet` are then built from the frequent pairs
/// only (`prune = true`) or from every pair (`prune = false`).
pub fn generate_level2(
    f1: &[Symbol],
    alphabet: &Alphabet,
    gap: GapConstraint,
    counter: &SupportCounter<'_>,
    minsup: usize,
    prune: bool,
) -> Level2 {
    let positives = positive_pairs(f1, gap);
    let mut frequent = find_frequent(counter, minsup, &positives);
    let bases: Vec<&Pattern> =
        if prune { frequent.iter().map(|f| &f.pattern).collect() } else { positives.iter().collect() };
    let negatives: Vec<Pattern> = bases.iter().flat_map(|p| negative_variants(p, alphabet)).collect();
    let all_negatives = positives.len() * alphabet.len();
    frequent.extend(find_frequent(counter, minsup, &negatives));
    frequent.sort_by(|a, b| a.pattern.cmp(&b.pattern));
    let stats = LevelStats {
        len: 2,
        generated: positives.len() + all_negatives,
        pruned: all_negatives - negatives.len(),
        checked: positives.len() + negatives.len(),
        frequent: frequent.len(),
    };
    Level2 { frequent, stats }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g() -> GapConstraint {
        GapConstraint::new(0, 2).unwrap()
    }

    fn pat(t: &str) -> Pattern {
        Pattern::parse(t, g()).unwrap()
    }

    fn texts(ps: &[Pattern]) -> Vec<String> {
        ps.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(prefix(&pat("C[0,2]A")).unwrap().to_string(), "C");
        assert_eq!(prefix(&pat("A[0,2]¬GC[0,2]C")).unwrap().to_string(), "A[0,2]¬GC");
        assert_eq!(prefix(&pat("A[0,2]¬GC")).unwrap().to_string(), "A");
        assert_eq!(prefix(&pat("A")), None);
    }

    #[test]
    fn suffix_examples() {
        assert_eq!(suffix(&pat("A[0,2]¬GC")).unwrap().to_string(), "C");
        assert_eq!(suffix(&pat("A[0,2]C[0,2]¬CC")).unwrap().to_string(), "C[0,2]¬CC");
        let p = Pattern::parse("A[0,1]C[0,1]¬GC", GapConstraint::new(0, 1).unwrap()).unwrap();
        assert_eq!(suffix(&p).unwrap().to_string(), "C[0,1]¬GC");
        assert_eq!(suffix(&pat("A")), None);
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&pat("A[0,2]¬GC"), &pat("C[0,2]A")).unwrap().to_string(), "A[0,2]¬GC[0,2]A");
        assert_eq!(join(&pat("A[0,2]C"), &pat("C[0,2]C")).unwrap().to_string(), "A[0,2]C[0,2]C");
        assert_eq!(join(&pat("A[0,2]¬GC"), &pat("A[0,2]C")), None);
        assert_eq!(join(&pat("C[0,2]C"), &pat("C[0,2]C")).unwrap().to_string(), "C[0,2]C[0,2]C");
        let other_gap = Pattern::parse("C[0,1]A", GapConstraint::new(0, 1).unwrap()).unwrap();
        assert_eq!(join(&pat("A[0,2]C"), &other_gap), None);
    }

    #[test]
    fn join_all_examples() {
        assert!(pattern_join_all(&[pat("A[0,2]C")]).is_empty());
        let set = pattern_join_all(&[pat("A[0,2]C"), pat("A[0,2]¬GC"), pat("A[0,2]¬TC"), pat("C[0,2]A")]);
        assert_eq!(set.level, 3);
        assert_eq!(texts(&set.positives), vec!["A[0,2]C[0,2]A", "C[0,2]A[0,2]C"]);
        assert_eq!(
            texts(&set.negatives),
            vec!["A[0,2]¬GC[0,2]A", "A[0,2]¬TC[0,2]A", "C[0,2]A[0,2]¬GC", "C[0,2]A[0,2]¬TC"]
        );
        for n in &set.negatives {
            assert_eq!(set.skeleton_index[n], n.positive_skeleton());
        }
    }

    #[test]
    fn join_all_on_worked_example_level_two() {
        let f2: Vec<Pattern> = ["A[0,2]C", "C[0,2]A", "C[0,2]C", "A[0,2]¬GC", "A[0,2]¬TC", "C[0,2]¬CC", "C[0,2]¬GC"]
            .into_iter()
            .map(pat)
            .collect();
        let set = pattern_join_all(&f2);
        assert_eq!(set.len(), 27);
        assert_eq!(set.positives.len(), 5);
    }

    #[test]
    fn pruning_examples() {
        let set = pattern_join_all(&[pat("A[0,2]C"), pat("A[0,2]¬GC"), pat("A[0,2]¬TC"), pat("C[0,2]A")]);
        let (none, pruned) = prune_by_skeleton(set.clone(), &BTreeSet::new());
        assert_eq!(pruned, 4);
        assert!(none.negatives.is_empty());
        assert_eq!(none.positives, set.positives);
        let all: BTreeSet<Pattern> = set.positives.iter().cloned().collect();
        let (kept, pruned) = prune_by_skeleton(set.clone(), &all);
        assert_eq!(pruned, 0);
        assert_eq!(kept, set);
        let one: BTreeSet<Pattern> = [pat("C[0,2]A[0,2]C")].into();
        let (half, pruned) = prune_by_skeleton(set, &one);
        assert_eq!(pruned, 2);
        assert_eq!(texts(&half.negatives), vec!["C[0,2]A[0,2]¬GC", "C[0,2]A[0,2]¬TC"]);
        assert_eq!(half.skeleton_index.len(), 2);
    }

    #[test]
    fn negative_variants_cover_alphabet() {
        let sigma = Alphabet::parse("ACGT").unwrap();
        assert_eq!(
            texts(&negative_variants(&pat("A[0,2]C"), &sigma)),
            vec!["A[0,2]¬AC", "A[0,2]¬CC", "A[0,2]¬GC", "A[0,2]¬TC"]
        );
    }

    #[test]
    fn join_split_consistency() {
        let t = pat("A[0,2]¬GC[0,2]C[0,2]¬TA");
        let (p, q) = (prefix(&t).unwrap(), suffix(&t).unwrap());
        assert_eq!(join(&p, &q).unwrap(), t);
    }
}

use std::collections::BTreeSet;

use onp_core::{
    mine, Alphabet, GapConstraint, LevelStats, MiningConfig, MiningReport, Pattern, SequenceDatabase, Strategy,
};

const SHORT_DNA_PATTERNS: [&str; 17] = [
    "A",
    "C",
    "A[0,1]C",
    "C[0,1]C",
    "A[0,1]¬GC",
    "A[0,1]¬TC",
    "C[0,1]¬CC",
    "C[0,1]¬GC",
    "A[0,1]C[0,1]C",
    "A[0,1]C[0,1]¬CC",
    "A[0,1]¬GC[0,1]¬CC",
    "A[0,1]¬TC[0,1]¬CC",
    "A[0,1]C[0,1]¬GC",
    "A[0,1]¬GC[0,1]¬GC",
    "A[0,1]¬TC[0,1]¬GC",
    "A[0,1]¬GC[0,1]C",
    "A[0,1]¬TC[0,1]C",
];

fn run(seq: &str, lo: usize, hi: usize, minsup: usize, strategy: Strategy) -> MiningReport {
    let db = SequenceDatabase::from_strs(&[seq]).unwrap();
    let config = MiningConfig::new(minsup, GapConstraint::new(lo, hi).unwrap())
        .unwrap()
        .with_alphabet(Alphabet::parse("ACGT").unwrap())
        .with_strategy(strategy);
    mine(&db, &config).unwrap()
}

fn stats(r: &MiningReport, len: usize) -> (usize, usize, usize, usize) {
    let LevelStats { generated, pruned, checked, frequent, .. } = r.level(len).unwrap().stats;
    (generated, pruned, checked, frequent)
}

#[test]
fn short_dna_every_strategy() {
    let expected: BTreeSet<String> = SHORT_DNA_PATTERNS.iter().map(|s| s.to_string()).collect();
    for strategy in Strategy::ALL {
        let r = run("AACACCTC", 0, 1, 2, strategy);
        let got: BTreeSet<String> = r.patterns().map(|f| f.pattern.to_string()).collect();
        assert_eq!(got, expected, "{strategy}");
        let p = Pattern::parse("A[0,1]C[0,1]¬GC", GapConstraint::new(0, 1).unwrap()).unwrap();
        assert_eq!(r.support_of(&p), Some(2));
    }
}

#[test]
fn long_dna_join_prune_levels() {
    let r = run("AACACCTCAACGCTC", 0, 2, 3, Strategy::JoinPrune);
    let f1: Vec<String> = r.level(1).unwrap().frequent.iter().map(|f| f.pattern.to_string()).collect();
    assert_eq!(f1, vec!["A", "C"]);
    assert_eq!(stats(&r, 2), (20, 4, 16, 7));
    assert_eq!(stats(&r, 3), (27, 12, 15, 9));
    assert_eq!(stats(&r, 4), (3, 2, 1, 0));
    assert_eq!(r.total_frequent_from(2), 16);
    assert_eq!(r.total_checked(2), 32);
}

#[test]
fn long_dna_enumeration_levels() {
    for strategy in [Strategy::EnumBfs, Strategy::EnumDfs] {
        let r = run("AACACCTCAACGCTC", 0, 2, 3, strategy);
        let checked: Vec<usize> = (2..=4).map(|k| r.level(k).unwrap().stats.checked).collect();
        assert_eq!(checked, vec![80, 140, 180]);
        assert_eq!(r.total_frequent_from(2), 16);
    }
}

#[test]
fn long_dna_join_only_levels() {
    let r = run("AACACCTCAACGCTC", 0, 2, 3, Strategy::JoinOnly);
    assert_eq!(stats(&r, 2), (20, 0, 20, 7));
    assert_eq!(stats(&r, 3), (27, 0, 27, 9));
    // Two of the three joined candidates have an infrequent positive skeleton;
    // only skeleton pruning skips them.
    assert_eq!(stats(&r, 4), (3, 0, 3, 0));
    assert_eq!(r.total_frequent_from(2), 16);
}

#[test]
fn strategies_agree_on_worked_examples() {
    for (seq, lo, hi, minsup) in [("AACACCTC", 0, 1, 2), ("AACACCTCAACGCTC", 0, 2, 3), ("AACACCTCAACGCTC", 1, 3, 2)] {
        let base = run(seq, lo, hi, minsup, Strategy::JoinPrune);
        for strategy in Strategy::ALL {
            assert!(run(seq, lo, hi, minsup, strategy).same_patterns(&base), "{seq} {strategy}");
        }
    }
}

#[test]
fn stats_reconcile() {
    for strategy in Strategy::ALL {
        let r = run("AACACCTCAACGCTCGATTACA", 0, 2, 2, strategy);
        for level in &r.levels {
            let s = level.stats;
            assert_eq!(s.generated, s.pruned + s.checked);
            assert!(s.frequent <= s.checked);
            assert_eq!(s.frequent, level.frequent.len());
        }
    }
}

#[test]
fn parallel_matches_serial() {
    let db = SequenceDatabase::from_strs(&["AACACCTCAACGCTC", "GATTACAGATTACA", "CCCAAAGGGTTT"]).unwrap();
    let base = MiningConfig::new(2, GapConstraint::new(0, 2).unwrap()).unwrap();
    let serial = mine(&db, &base).unwrap();
    for workers in [0, 2, 4] {
        let par = mine(&db, &base.clone().with_parallelism(workers)).unwrap();
        assert!(par.same_patterns(&serial));
        let a: Vec<LevelStats> = par.levels.iter().map(|l| l.stats).collect();
        let b: Vec<LevelStats> = serial.levels.iter().map(|l| l.stats).collect();
        assert_eq!(a, b);
    }
}

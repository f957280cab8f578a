use onp_core::baselines::{enum_extensions, mine_enum, mine_join_only, Order};
use onp_core::{mine, Alphabet, GapConstraint, MiningConfig, Pattern, SequenceDatabase, Strategy};

fn config(minsup: usize, lo: usize, hi: usize) -> MiningConfig {
    MiningConfig::new(minsup, GapConstraint::new(lo, hi).unwrap())
        .unwrap()
        .with_alphabet(Alphabet::parse("ACGT").unwrap())
}

#[test]
fn extensions_are_sigma_plus_sigma_squared() {
    let dna = Alphabet::parse("ACGT").unwrap();
    let g = GapConstraint::new(0, 2).unwrap();
    for text in ["A", "A[0,2]¬GC", "C[0,2]A[0,2]C"] {
        let p = Pattern::parse(text, g).unwrap();
        let ext = enum_extensions(&p, &dna);
        assert_eq!(ext.len(), 20);
        assert!(ext.iter().all(|e| e.len() == p.len() + 1));
        assert_eq!(ext.iter().filter(|e| e.negatives().last() == Some(&None)).count(), 4);
    }
}

#[test]
fn bfs_and_dfs_visit_the_same_tree() {
    let db = SequenceDatabase::from_strs(&["AACACCTCAACGCTC", "ACGTACGTAC"]).unwrap();
    let c = config(2, 0, 2);
    let bfs = mine_enum(&db, &c, Order::BreadthFirst).unwrap();
    let dfs = mine_enum(&db, &c, Order::DepthFirst).unwrap();
    assert!(bfs.same_patterns(&dfs));
    let stats = |r: &onp_core::MiningReport| r.levels.iter().map(|l| l.stats).collect::<Vec<_>>();
    assert_eq!(stats(&bfs), stats(&dfs));
}

#[test]
fn join_only_matches_dispatch() {
    let db = SequenceDatabase::from_strs(&["AACACCTCAACGCTC"]).unwrap();
    let c = config(3, 0, 2);
    let direct = mine_join_only(&db, &c).unwrap();
    let dispatched = mine(&db, &c.clone().with_strategy(Strategy::JoinOnly)).unwrap();
    assert!(direct.same_patterns(&dispatched));
    assert!(direct.levels.iter().all(|l| l.stats.pruned == 0));
}

#[test]
fn enumeration_checks_dominate_join() {
    let db = SequenceDatabase::from_strs(&["AACACCTCAACGCTC"]).unwrap();
    let c = config(3, 0, 2);
    let checked = |s| mine(&db, &c.clone().with_strategy(s)).unwrap().total_checked(2);
    assert_eq!(checked(Strategy::EnumBfs), 400);
    assert!(checked(Strategy::JoinPrune) < checked(Strategy::JoinOnly));
    assert!(checked(Strategy::JoinOnly) < checked(Strategy::EnumDfs));
}

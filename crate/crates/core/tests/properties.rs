use std::collections::BTreeSet;

use onp_core::candidates::{prefix, suffix};
use onp_core::matcher::oracle::{max_disjoint_count, DEFAULT_LIMIT};
use onp_core::matcher::NodeCounter;
use onp_core::occurrence::check_one_off;
use onp_core::{
    mine, Alphabet, EmptyGapPolicy, GapConstraint, MatchState, Matcher, MiningConfig, Pattern, Sequence,
    SequenceDatabase, SequenceId, Strategy as Mining, Symbol,
};
use proptest::prelude::{any, prop, prop_assert, prop_assert_eq, proptest, Just, ProptestConfig};
use proptest::strategy::Strategy;

const SIGMA: &str = "ABCD";

fn symbols(k: usize) -> Vec<Symbol> {
    SIGMA.chars().take(k).map(|c| Symbol::new(c).unwrap()).collect()
}

fn gap() -> impl proptest::strategy::Strategy<Value = GapConstraint> {
    (0usize..=3, 0usize..=3).prop_map(|(a, b)| GapConstraint::new(a.min(b), a.max(b)).unwrap())
}

fn sequence(k: usize, max_len: usize) -> impl proptest::strategy::Strategy<Value = Sequence> {
    prop::collection::vec(prop::sample::select(symbols(k)), 1..=max_len)
        .prop_map(|s| Sequence::new(SequenceId::Ordinal(1), s).unwrap())
}

fn pattern(k: usize, g: GapConstraint) -> impl proptest::strategy::Strategy<Value = Pattern> {
    let sym = prop::sample::select(symbols(k));
    (1usize..=4).prop_flat_map(move |m| {
        (prop::collection::vec(sym.clone(), m), prop::collection::vec(prop::option::weighted(0.4, sym.clone()), m - 1))
            .prop_map(move |(pos, neg)| Pattern::new(pos, neg, g).unwrap())
    })
}

fn instance() -> impl proptest::strategy::Strategy<Value = (Sequence, Pattern, EmptyGapPolicy)> {
    (2usize..=4, gap(), any::<bool>()).prop_flat_map(|(k, g, accept)| {
        let policy = if accept { EmptyGapPolicy::Accept } else { EmptyGapPolicy::Reject };
        (sequence(k, 25), pattern(k, g), Just(policy))
    })
}

fn frequent_set(r: &onp_core::MiningReport) -> BTreeSet<String> {
    r.patterns().map(|f| f.pattern.to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn matchdb_agrees_with_oracle((seq, p, policy) in instance()) {
        let matcher = Matcher::new(policy);
        let mut state = MatchState::default();
        let mut counter = NodeCounter::default();
        let count = matcher.support_observed(&seq, &p, &mut state, &mut counter);
        let (count2, found) = matcher.count_support(&seq, &p);
        let occs = found;
        prop_assert_eq!(count, count2);
        prop_assert_eq!(occs.len(), count);
        for o in &occs {
            prop_assert!(o.validate(&seq, &p, policy).is_ok(), "{} invalid for {}", o, p);
        }
        prop_assert!(check_one_off(&occs).is_ok());
        prop_assert!(counter.created <= p.len() * seq.len());
        prop_assert!(count <= max_disjoint_count(&seq, &p, policy, DEFAULT_LIMIT).unwrap());
    }

    #[test]
    fn matchdb_count_is_deterministic_with_reused_state((seq, p, policy) in instance(), q in pattern(2, GapConstraint::new(0, 1).unwrap())) {
        let matcher = Matcher::new(policy);
        let mut state = MatchState::default();
        let _ = matcher.support_in(&seq, &q, &mut state);
        let reused = matcher.support_in(&seq, &p, &mut state);
        prop_assert_eq!(reused, matcher.count_support(&seq, &p).0);
    }
}

fn small_db() -> impl proptest::strategy::Strategy<Value = (SequenceDatabase, MiningConfig)> {
    (2usize..=3, gap(), 2usize..=3, 1usize..=2).prop_flat_map(|(k, g, minsup, rows)| {
        prop::collection::vec(prop::collection::vec(prop::sample::select(symbols(k)), 3..=11), rows).prop_map(
            move |rows| {
                let texts: Vec<String> = rows.iter().map(|r| r.iter().map(|s| s.as_char()).collect()).collect();
                let db = SequenceDatabase::from_strs(&texts).unwrap();
                let alphabet = Alphabet::new(symbols(k));
                let config = MiningConfig::new(minsup, g).unwrap().with_alphabet(alphabet).with_max_len(4);
                (db, config)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn strategies_nest((db, config) in small_db()) {
        let run = |s: Mining| mine(&db, &config.clone().with_strategy(s)).unwrap();
        let (jp, jo, bfs, dfs) = (run(Mining::JoinPrune), run(Mining::JoinOnly), run(Mining::EnumBfs), run(Mining::EnumDfs));
        prop_assert!(bfs.same_patterns(&dfs));
        let (jp, jo, en) = (frequent_set(&jp), frequent_set(&jo), frequent_set(&bfs));
        prop_assert!(jp.is_subset(&jo));
        prop_assert!(jo.is_subset(&en));
    }

    #[test]
    fn join_outputs_have_frequent_prefix_and_suffix((db, config) in small_db()) {
        for strategy in [Mining::JoinPrune, Mining::JoinOnly] {
            let r = mine(&db, &config.clone().with_strategy(strategy)).unwrap();
            let all: BTreeSet<Pattern> = r.patterns().map(|f| f.pattern.clone()).collect();
            for p in all.iter().filter(|p| p.len() >= 2) {
                prop_assert!(all.contains(&prefix(p).unwrap()), "{} lacks prefix", p);
                prop_assert!(all.contains(&suffix(p).unwrap()), "{} lacks suffix", p);
            }
            for p in all.iter().filter(|p| p.len() >= 3 && p.is_negative()) {
                if strategy == Mining::JoinPrune {
                    prop_assert!(all.contains(&p.positive_skeleton()), "{} kept without skeleton", p);
                }
            }
        }
    }

    #[test]
    fn supports_reported_are_recomputable((db, config) in small_db()) {
        let r = mine(&db, &config).unwrap();
        let matcher = Matcher::new(config.empty_gap);
        for f in r.patterns() {
            prop_assert_eq!(matcher.count_support_db(&db, &f.pattern).total, f.support);
            prop_assert!(f.support >= config.minsup);
        }
    }
}

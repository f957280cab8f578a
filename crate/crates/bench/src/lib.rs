//! Inputs shared by the benchmarks.

use onp_core::synthetic::{generate, SyntheticSpec};
use onp_core::{Alphabet, GapConstraint, MiningConfig, SequenceDatabase};

pub const WORKED_SEQUENCE: &str = "AACACCTCAACGCTC";

pub fn worked_example() -> (SequenceDatabase, MiningConfig) {
    let db = SequenceDatabase::from_strs(&[WORKED_SEQUENCE]).expect("valid sequence");
    let config = MiningConfig::new(3, GapConstraint::new(0, 2).expect("valid gap"))
        .expect("valid config")
        .with_alphabet(Alphabet::parse("ACGT").expect("valid alphabet"));
    (db, config)
}

/// Eight-symbol skewed database of `total` symbols in sequences of 1000.
pub fn synthetic(total: usize) -> SequenceDatabase {
    generate(&SyntheticSpec::with_total(total, 1000, 42)).expect("valid spec")
}

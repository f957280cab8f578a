//! Seeded random sequence databases for scalability runs.

use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::pattern::Symbol;
use crate::sequence::{Sequence, SequenceDatabase, SequenceId};

/// Shape of a generated database. Symbol `k` (from `a`) is drawn with weight
/// `1 / (k + 1)^skew`, so `skew = 0` is uniform.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub sequences: usize,
    pub length: usize,
    pub alphabet_size: usize,
    pub skew: f64,
    pub seed: u64,
}

impl SyntheticSpec {
    /// `total` symbols split into sequences of `length`, eight symbols, mild skew.
    pub fn with_total(total: usize, length: usize, seed: u64) -> Self {
        SyntheticSpec { sequences: total.div_ceil(length), length, alphabet_size: 8, skew: 1.0, seed }
    }
}

pub fn generate(spec: &SyntheticSpec) -> Result<SequenceDatabase> {
    if spec.alphabet_size == 0 || spec.alphabet_size > 26 {
        return Err(Error::InvalidBinning(format!("alphabet size {} outside 1..=26", spec.alphabet_size)));
    }
    let symbols: Vec<Symbol> =
        (b'a'..).take(spec.alphabet_size).map(|b| Symbol::new(b as char).expect("ascii letter")).collect();
    let weights: Vec<f64> = (0..spec.alphabet_size).map(|k| ((k + 1) as f64).powf(-spec.skew)).collect();
    let dist = WeightedIndex::new(&weights).map_err(|e| Error::InvalidBinning(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let sequences = (0..spec.sequences)
        .map(|k| {
            let body = (0..spec.length).map(|_| symbols[dist.sample(&mut rng)]).collect();
            Sequence::new(SequenceId::Ordinal(k + 1), body)
        })
        .collect::<Result<Vec<_>>>()?;
    SequenceDatabase::new(sequences)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_sized() {
        let spec = SyntheticSpec::with_total(4000, 500, 7);
        let a = generate(&spec).unwrap();
        assert_eq!(a, generate(&spec).unwrap());
        assert_eq!(a.len(), 8);
        assert_eq!(a.total_length(), 4000);
        assert_eq!(a.alphabet().len(), 8);
        assert_ne!(a, generate(&SyntheticSpec { seed: 8, ..spec }).unwrap());
    }

    #[test]
    fn skew_favours_early_symbols() {
        let db = generate(&SyntheticSpec { sequences: 1, length: 5000, alphabet_size: 4, skew: 2.0, seed: 1 }).unwrap();
        let count = |c| db.sequences()[0].symbols().iter().filter(|s| s.as_char() == c).count();
        assert!(count('a') > count('b') && count('b') > count('d'));
    }

    #[test]
    fn rejects_bad_alphabet() {
        assert!(generate(&SyntheticSpec { sequences: 1, length: 1, alphabet_size: 0, skew: 0.0, seed: 0 }).is_err());
    }
}

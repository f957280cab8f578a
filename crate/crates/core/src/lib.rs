//! One-off negative sequential pattern mining.
//!
//! A pattern is a chain of positive symbols separated by a uniform gap
//! `[M,N]`, with an optional negative element between adjacent positives
//! that must not occur anywhere in that gap. Support counts occurrences
//! under the one-off condition: no sequence position is used twice.
//!
//! ```
//! use onp_core::{mine, Alphabet, GapConstraint, MiningConfig, SequenceDatabase};
//!
//! let db = SequenceDatabase::from_strs(&["AACACCTC"]).unwrap();
//! let config = MiningConfig::new(2, GapConstraint::new(0, 1).unwrap())
//!     .unwrap()
//!     .with_alphabet(Alphabet::parse("ACGT").unwrap());
//! let report = mine(&db, &config).unwrap();
//! assert_eq!(report.total_frequent(), 17);
//! ```

pub mod baselines;
pub mod candidates;
pub mod config;
pub mod error;
pub mod ingest;
pub mod matcher;
pub mod miner;
pub mod occurrence;
pub mod pattern;
pub mod report;
pub mod support;
pub mod synthetic;

mod sequence;

pub use config::{MiningConfig, Strategy};
pub use error::{Error, Result};
pub use matcher::{count_support, count_support_db, MatchState, Matcher, SequenceSupport, SupportResult};
pub use miner::{frequent_length1, mine};
pub use occurrence::{EmptyGapPolicy, Occurrence};
pub use pattern::{Alphabet, GapConstraint, Pattern, Symbol};
pub use report::{FrequentPattern, LevelReport, LevelStats, MiningReport};
pub use sequence::{Sequence, SequenceDatabase, SequenceId};
pub use support::SupportCounter;

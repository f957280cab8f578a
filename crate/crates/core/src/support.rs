use rayon::prelude::*;

use crate::matcher::{MatchState, Matcher};
use crate::pattern::Pattern;
use crate::sequence::SequenceDatabase;

enum Exec {
    Inline,
    Global,
    Pool(rayon::ThreadPool),
}

/// Batch support evaluation over one database.
///
/// Results come back in input order whatever the worker count.
pub struct SupportCounter<'a> {
    db: &'a SequenceDatabase,
    matcher: Matcher,
    exec: Exec,
}

impl<'a> SupportCounter<'a> {
    /// `workers`: 1 runs inline, 0 uses the global rayon pool, anything else
    /// builds a dedicated pool.
    pub fn new(db: &'a SequenceDatabase, matcher: Matcher, workers: usize) -> Self {
        let exec = match workers {
            1 => Exec::Inline,
            0 => Exec::Global,
            n => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => Exec::Pool(pool),
                Err(_) => Exec::Global,
            },
        };
        SupportCounter { db, matcher, exec }
    }

    pub fn db(&self) -> &SequenceDatabase {
        self.db
    }

    pub fn matcher(&self) -> Matcher {
        self.matcher
    }

    pub fn support(&self, pattern: &Pattern) -> usize {
        self.matcher.support_db(self.db, pattern, &mut MatchState::default())
    }

    pub fn supports(&self, patterns: &[Pattern]) -> Vec<usize> {
        let (db, matcher) = (self.db, self.matcher);
        let par =
            || patterns.par_iter().map_init(MatchState::default, |state, p| matcher.support_db(db, p, state)).collect();
        match &self.exec {
            Exec::Inline => {
                let mut state = MatchState::default();
                patterns.iter().map(|p| matcher.support_db(db, p, &mut state)).collect()
            }
            Exec::Global => par(),
            Exec::Pool(pool) => pool.install(par),
        }
    }
}

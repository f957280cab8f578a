use std::collections::HashSet;
use std::fmt;

use crate::pattern::{Pattern, Symbol};
use crate::sequence::Sequence;

/// How a negative element treats two positives with nothing between them.
///
/// With [`EmptyGapPolicy::Reject`] a negative element `¬e` needs at least one
/// position between its flanking positives, none of which holds `e`. With
/// [`EmptyGapPolicy::Accept`] an empty interior satisfies `¬e` vacuously.
/// `Reject` is the default.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum EmptyGapPolicy {
    #[default]
    Reject,
    Accept,
}

/// A strictly increasing tuple of 1-based positions witnessing one match.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Occurrence(Vec<usize>);

impl Occurrence {
    pub fn new(positions: Vec<usize>) -> Self {
        Occurrence(positions)
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Checks the occurrence against the pattern definition: positives match,
    /// gaps are respected and no forbidden symbol sits between flanking positives.
    pub fn validate(&self, seq: &Sequence, pattern: &Pattern, policy: EmptyGapPolicy) -> Result<(), Violation> {
        let pos = &self.0;
        if pos.len() != pattern.len() {
            return Err(Violation::Length { expected: pattern.len(), found: pos.len() });
        }
        for (j, (&l, &want)) in pos.iter().zip(pattern.positives()).enumerate() {
            if l == 0 || l > seq.len() {
                return Err(Violation::OutOfBounds { level: j + 1, position: l });
            }
            if seq.at(l) != want {
                return Err(Violation::Symbol { level: j + 1, position: l });
            }
        }
        for (j, w) in pos.windows(2).enumerate() {
            let (left, right) = (w[0], w[1]);
            if !pattern.gap().admits(left, right) {
                return Err(Violation::Gap { level: j + 1, left, right });
            }
            if let Some(e) = pattern.negatives()[j] {
                if right - left == 1 && policy == EmptyGapPolicy::Reject {
                    return Err(Violation::EmptyNegativeGap { level: j + 1 });
                }
                if let Some(p) = (left + 1..right).find(|&p| seq.at(p) == e) {
                    return Err(Violation::Negative { level: j + 1, position: p, symbol: e });
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ">")
    }
}

/// Why an occurrence fails validation. Levels are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Length { expected: usize, found: usize },
    OutOfBounds { level: usize, position: usize },
    Symbol { level: usize, position: usize },
    Gap { level: usize, left: usize, right: usize },
    EmptyNegativeGap { level: usize },
    Negative { level: usize, position: usize, symbol: Symbol },
    SharedPosition { position: usize },
}

/// Checks that no position appears in two of `occurrences`.
pub fn check_one_off<'a>(occurrences: impl IntoIterator<Item = &'a Occurrence>) -> Result<(), Violation> {
    let mut seen = HashSet::new();
    for occ in occurrences {
        for &p in occ.positions() {
            if !seen.insert(p) {
                return Err(Violation::SharedPosition { position: p });
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::GapConstraint;
    use crate::sequence::SequenceId;

    #[test]
    fn validator_catches_each_rule() {
        let s = Sequence::parse(SequenceId::Ordinal(1), "AACACCTCAACGCTC").unwrap();
        let p = Pattern::parse("A[0,2]C[0,2]¬GC", GapConstraint::new(0, 2).unwrap()).unwrap();
        let ok = |v: &[usize]| Occurrence::new(v.to_vec()).validate(&s, &p, EmptyGapPolicy::Reject);
        assert_eq!(ok(&[1, 3, 5]), Ok(()));
        assert_eq!(ok(&[10, 13, 15]), Ok(()));
        assert!(matches!(ok(&[9, 11, 13]), Err(Violation::Negative { position: 12, .. })));
        assert!(matches!(ok(&[1, 5, 6]), Err(Violation::Gap { .. })));
        assert!(matches!(ok(&[2, 3, 4]), Err(Violation::Symbol { level: 3, .. })));
        assert!(matches!(ok(&[4, 5, 6]), Err(Violation::EmptyNegativeGap { level: 2 })));
        assert_eq!(Occurrence::new(vec![4, 5, 6]).validate(&s, &p, EmptyGapPolicy::Accept), Ok(()));
    }

    #[test]
    fn one_off_detects_shared_positions() {
        let a = Occurrence::new(vec![1, 3, 5]);
        let b = Occurrence::new(vec![4, 5, 6]);
        let c = Occurrence::new(vec![4, 6, 8]);
        assert_eq!(check_one_off([&a, &c]), Ok(()));
        assert_eq!(check_one_off([&a, &b]), Err(Violation::SharedPosition { position: 5 }));
        assert_eq!(a.to_string(), "<1,3,5>");
    }
}

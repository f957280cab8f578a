//! Symbols, gap constraints and negative patterns.
//!
//! A pattern alternates positive symbols with optional negative elements:
//! `A[0,2]¬GC[0,2]A` has positives `A C A`, a negative `G` between the first
//! two positives and nothing between the last two. The gap `[M,N]` is uniform
//! across a pattern. The canonical text form is what [`Pattern`]'s `Display`
//! produces and what [`Pattern::parse`] accepts.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// Marker printed before a negative element.
pub const NEGATION: char = '¬';
/// ASCII spelling of [`NEGATION`], accepted by the parser.
pub const ASCII_NEGATION: char = '!';

/// A single event character.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(char);

impl Symbol {
    /// Rejects characters that would make the canonical pattern text ambiguous
    /// (brackets, negation markers) as well as whitespace and control characters.
    pub fn new(c: char) -> Result<Self> {
        if c.is_whitespace() || c.is_control() || matches!(c, '[' | ']' | NEGATION | ASCII_NEGATION) {
            return Err(Error::InvalidSymbol(c));
        }
        Ok(Symbol(c))
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<char> for Symbol {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        Symbol::new(c)
    }
}

/// An ordered set of symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet(BTreeSet<Symbol>);

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = Symbol>) -> Self {
        Alphabet(symbols.into_iter().collect())
    }

    /// Builds an alphabet from the characters of `text`, ignoring duplicates.
    pub fn parse(text: &str) -> Result<Self> {
        text.chars().map(Symbol::new).collect::<Result<BTreeSet<_>>>().map(Alphabet)
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.0.contains(&s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Symbols in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().copied()
    }

    pub fn is_superset(&self, other: &Alphabet) -> bool {
        self.0.is_superset(&other.0)
    }

    pub fn missing_from(&self, other: &Alphabet) -> Vec<Symbol> {
        other.0.difference(&self.0).copied().collect()
    }
}

impl FromIterator<Symbol> for Alphabet {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Alphabet::new(iter)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

/// Minimum and maximum number of wildcard positions between two consecutive
/// matched positives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GapConstraint {
    min: usize,
    max: usize,
}

impl GapConstraint {
    pub fn new(min: usize, max: usize) -> Result<Self> {
        if min > max {
            return Err(Error::InvalidGap { min, max });
        }
        Ok(GapConstraint { min, max })
    }

    pub fn min(self) -> usize {
        self.min
    }

    pub fn max(self) -> usize {
        self.max
    }

    /// Whether consecutive positions `left < right` respect the gap.
    pub fn admits(self, left: usize, right: usize) -> bool {
        right > left && (self.min..=self.max).contains(&(right - left - 1))
    }
}

impl fmt::Display for GapConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.min, self.max)
    }
}

impl std::str::FromStr for GapConstraint {
    type Err = Error;

    /// Parses `M,N` (surrounding brackets are tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let bad =
            || Error::MalformedPattern { text: s.to_string(), reason: "expected a gap of the form M,N".to_string() };
        let (lo, hi) = inner.split_once(',').ok_or_else(bad)?;
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        GapConstraint::new(lo, hi)
    }
}

/// A gap-constrained pattern with optional negative elements between
/// adjacent positives.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    positives: Vec<Symbol>,
    negatives: Vec<Option<Symbol>>,
    gap: GapConstraint,
}

impl Pattern {
    /// `negatives[j]` sits between `positives[j]` and `positives[j + 1]`.
    pub fn new(positives: Vec<Symbol>, negatives: Vec<Option<Symbol>>, gap: GapConstraint) -> Result<Self> {
        if positives.is_empty() {
            return Err(Error::MalformedPattern {
                text: String::new(),
                reason: "a pattern needs at least one positive symbol".to_string(),
            });
        }
        if negatives.len() + 1 != positives.len() {
            return Err(Error::MalformedPattern {
                text: format!("{positives:?}"),
                reason: format!(
                    "{} positives need {} negative slots, got {}",
                    positives.len(),
                    positives.len() - 1,
                    negatives.len()
                ),
            });
        }
        Ok(Pattern { positives, negatives, gap })
    }

    /// A pattern without negative elements.
    pub fn positive(positives: Vec<Symbol>, gap: GapConstraint) -> Result<Self> {
        let slots = positives.len().saturating_sub(1);
        Pattern::new(positives, vec![None; slots], gap)
    }

    pub fn single(symbol: Symbol, gap: GapConstraint) -> Self {
        Pattern { positives: vec![symbol], negatives: Vec::new(), gap }
    }

    /// Parses canonical text. Embedded `[M,N]` must equal `gap`. `!` is
    /// accepted in place of `¬`.
    pub fn parse(text: &str, gap: GapConstraint) -> Result<Self> {
        Parser { text, chars: text.chars().collect(), at: 0 }.pattern(gap)
    }

    /// Like [`Pattern::parse`] but also rejects symbols outside `alphabet`.
    pub fn parse_in(text: &str, gap: GapConstraint, alphabet: &Alphabet) -> Result<Self> {
        let p = Pattern::parse(text, gap)?;
        if let Some(s) = p.symbols().find(|s| !alphabet.contains(*s)) {
            return Err(Error::UnknownSymbol(s.as_char()));
        }
        Ok(p)
    }

    /// Number of positive symbols, `m`.
    pub fn len(&self) -> usize {
        self.positives.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn positives(&self) -> &[Symbol] {
        &self.positives
    }

    pub fn negatives(&self) -> &[Option<Symbol>] {
        &self.negatives
    }

    pub fn gap(&self) -> GapConstraint {
        self.gap
    }

    pub fn first(&self) -> Symbol {
        self.positives[0]
    }

    pub fn last(&self) -> Symbol {
        self.positives[self.positives.len() - 1]
    }

    /// True when at least one negative element is present.
    pub fn is_negative(&self) -> bool {
        self.negatives.iter().any(Option::is_some)
    }

    /// Every symbol mentioned, positive or negative.
    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.positives.iter().copied().chain(self.negatives.iter().flatten().copied())
    }

    /// The same pattern with every negative element removed.
    pub fn positive_skeleton(&self) -> Pattern {
        Pattern { positives: self.positives.clone(), negatives: vec![None; self.negatives.len()], gap: self.gap }
    }

    /// Appends `[M,N]` followed by an optional negative and a positive.
    pub fn extended(&self, negative: Option<Symbol>, positive: Symbol) -> Pattern {
        let mut p = self.clone();
        p.negatives.push(negative);
        p.positives.push(positive);
        p
    }

    pub(crate) fn from_parts_unchecked(
        positives: Vec<Symbol>,
        negatives: Vec<Option<Symbol>>,
        gap: GapConstraint,
    ) -> Pattern {
        debug_assert_eq!(negatives.len() + 1, positives.len());
        Pattern { positives, negatives, gap }
    }

    /// Canonical text with `!` instead of `¬`.
    pub fn ascii(&self) -> Ascii<'_> {
        Ascii(self)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, negation: char) -> fmt::Result {
        write!(f, "{}", self.positives[0])?;
        for (neg, pos) in self.negatives.iter().zip(&self.positives[1..]) {
            write!(f, "[{}]", self.gap)?;
            if let Some(e) = neg {
                write!(f, "{negation}{e}")?;
            }
            write!(f, "{pos}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, NEGATION)
    }
}

/// See [`Pattern::ascii`].
pub struct Ascii<'a>(&'a Pattern);

impl fmt::Display for Ascii<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write(f, ASCII_NEGATION)
    }
}

/// Orders patterns by canonical text, then by gap (length-one patterns print
/// without their gap).
impl Ord for Pattern {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.gap != other.gap {
            return self.to_string().cmp(&other.to_string()).then(self.gap.cmp(&other.gap));
        }
        // With equal gaps the bracketed gap text is identical, so the texts
        // differ only in the tokens that follow each `]`.
        let slot = |neg: Option<Symbol>, pos: Symbol| match neg {
            Some(e) => [NEGATION, e.as_char(), pos.as_char()],
            None => [pos.as_char(), '\0', '\0'],
        };
        match self.positives[0].cmp(&other.positives[0]) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let a = self.negatives.iter().zip(&self.positives[1..]);
        let b = other.negatives.iter().zip(&other.positives[1..]);
        for ((na, pa), (nb, pb)) in a.zip(b) {
            let (sa, sb) = (slot(*na, *pa), slot(*nb, *pb));
            let ord = match (na, nb) {
                (Some(_), Some(_)) | (None, None) => sa.cmp(&sb),
                _ => sa[0].cmp(&sb[0]),
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.len().cmp(&other.len())
    }
}

impl PartialOrd for Pattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<char>,
    at: usize,
}

impl Parser<'_> {
    fn fail(&self, reason: impl Into<String>) -> Error {
        Error::MalformedPattern { text: self.text.to_string(), reason: reason.into() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).copied()
    }

    fn symbol(&mut self) -> Result<Symbol> {
        let c = self.peek().ok_or_else(|| self.fail(format!("expected a symbol at offset {}", self.at)))?;
        self.at += 1;
        Symbol::new(c).map_err(|_| self.fail(format!("{c:?} at offset {} is not a valid symbol", self.at - 1)))
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.at += 1;
                Ok(())
            }
            _ => Err(self.fail(format!("expected {want:?} at offset {}", self.at))),
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.at;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.at += 1;
        }
        let digits: String = self.chars[start..self.at].iter().collect();
        digits.parse().map_err(|_| self.fail(format!("expected a number at offset {start}")))
    }

    fn pattern(mut self, gap: GapConstraint) -> Result<Pattern> {
        let mut positives = vec![self.symbol()?];
        let mut negatives = Vec::new();
        while self.peek().is_some() {
            self.expect('[')?;
            let lo = self.number()?;
            self.expect(',')?;
            let hi = self.number()?;
            self.expect(']')?;
            if (lo, hi) != (gap.min(), gap.max()) {
                return Err(Error::GapMismatch { expected: gap.to_string(), found: format!("{lo},{hi}") });
            }
            let negative = match self.peek() {
                Some(NEGATION | ASCII_NEGATION) => {
                    self.at += 1;
                    Some(self.symbol()?)
                }
                _ => None,
            };
            negatives.push(negative);
            positives.push(self.symbol()?);
        }
        Ok(Pattern { positives, negatives, gap })
    }
}

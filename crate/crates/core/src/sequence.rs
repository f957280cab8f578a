use std::fmt;

use crate::error::{Error, Result};
use crate::pattern::{Alphabet, Symbol};

/// Identifier of a sequence inside a database.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// 1-based position in the source, used when no name was given.
    Ordinal(usize),
    Named(String),
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceId::Ordinal(k) => write!(f, "{k}"),
            SequenceId::Named(name) => f.write_str(name),
        }
    }
}

/// A non-empty sequence of symbols. Positions are 1-based in every public API.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence {
    id: SequenceId,
    symbols: Vec<Symbol>,
}

impl Sequence {
    pub fn new(id: SequenceId, symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptySequence(id.to_string()));
        }
        Ok(Sequence { id, symbols })
    }

    /// Builds a sequence from the characters of `text`.
    pub fn parse(id: SequenceId, text: &str) -> Result<Self> {
        let symbols = text.chars().map(Symbol::new).collect::<Result<Vec<_>>>()?;
        Sequence::new(id, symbols)
    }

    pub fn id(&self) -> &SequenceId {
        &self.id
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Symbol at 1-based `position`.
    pub fn at(&self, position: usize) -> Symbol {
        self.symbols[position - 1]
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.symbols.iter().try_for_each(|s| write!(f, "{s}"))
    }
}

/// Ordered sequences together with the alphabet mining draws from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceDatabase {
    sequences: Vec<Sequence>,
    alphabet: Alphabet,
}

impl SequenceDatabase {
    /// The alphabet is the set of symbols observed in `sequences`.
    pub fn new(sequences: Vec<Sequence>) -> Result<Self> {
        if sequences.is_empty() {
            return Err(Error::EmptyDatabase);
        }
        let alphabet = sequences.iter().flat_map(|s| s.symbols().iter().copied()).collect();
        Ok(SequenceDatabase { sequences, alphabet })
    }

    /// Convenience constructor: one sequence per string, ordinal ids.
    pub fn from_strs<S: AsRef<str>>(texts: &[S]) -> Result<Self> {
        let sequences = texts
            .iter()
            .enumerate()
            .map(|(k, t)| Sequence::parse(SequenceId::Ordinal(k + 1), t.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        SequenceDatabase::new(sequences)
    }

    /// Replaces the observed alphabet with `alphabet`, which must contain it.
    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Result<Self> {
        let missing = alphabet.missing_from(&self.alphabet);
        if !missing.is_empty() {
            return Err(Error::AlphabetOverride(missing.into_iter().map(Symbol::as_char).collect()));
        }
        self.alphabet = alphabet;
        Ok(self)
    }

    pub fn sequences(&self) -> &[Sequence] {
        &self.sequences
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    /// Sum of sequence lengths.
    pub fn total_length(&self) -> usize {
        self.sequences.iter().map(Sequence::len).sum()
    }

    pub fn max_sequence_length(&self) -> usize {
        self.sequences.iter().map(Sequence::len).max().unwrap_or(0)
    }
}

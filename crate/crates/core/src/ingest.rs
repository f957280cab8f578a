//! Loading sequence databases: plain line files, numeric series binned to
//! symbols, and multi-character event logs translated through a mapping.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::pattern::Symbol;
use crate::sequence::{Sequence, SequenceDatabase, SequenceId};

/// Reads one sequence per line. A line is either `SYMBOLS` or `id<TAB>SYMBOLS`;
/// blank lines and lines starting with `#` are skipped. Unnamed sequences are
/// identified by their 1-based position in the database.
pub fn load_lines<R: BufRead>(reader: R) -> Result<SequenceDatabase> {
    let mut sequences = Vec::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let (id, body) = match line.split_once('\t') {
            Some((name, body)) => (SequenceId::Named(name.to_string()), body),
            None => (SequenceId::Ordinal(sequences.len() + 1), line),
        };
        let seq = Sequence::parse(id, body).map_err(|e| Error::Parse { line: k + 1, message: e.to_string() })?;
        sequences.push(seq);
    }
    SequenceDatabase::new(sequences)
}

pub fn load_lines_path(path: impl AsRef<Path>) -> Result<SequenceDatabase> {
    load_lines(BufReader::new(File::open(path)?))
}

/// Inverse of [`load_lines`]: named sequences keep their `id<TAB>` prefix.
pub fn write_lines<W: Write>(db: &SequenceDatabase, mut out: W) -> io::Result<()> {
    for seq in db.sequences() {
        match seq.id() {
            SequenceId::Named(name) => writeln!(out, "{name}\t{seq}")?,
            SequenceId::Ordinal(_) => writeln!(out, "{seq}")?,
        }
    }
    Ok(())
}

/// Which side of a bin boundary a value exactly on it belongs to.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Boundary {
    /// Bin 0 is `[o, o+w]`, bin `k >= 1` is `(o+kw, o+(k+1)w]`.
    #[default]
    UpperInclusive,
    /// Bin `k` is `[o+kw, o+(k+1)w)`; the top edge joins the last bin.
    LowerInclusive,
}

/// Fixed-width binning of numeric values onto labels.
#[derive(Debug, Clone, PartialEq)]
pub struct BinningRule {
    bin_width: f64,
    origin: f64,
    labels: Vec<Symbol>,
    boundary: Boundary,
}

impl BinningRule {
    pub fn new(bin_width: f64, origin: f64, labels: Vec<Symbol>, boundary: Boundary) -> Result<Self> {
        if !(bin_width.is_finite() && bin_width > 0.0) {
            return Err(Error::InvalidBinning(format!("bin width must be positive, got {bin_width}")));
        }
        if !origin.is_finite() {
            return Err(Error::InvalidBinning(format!("origin must be finite, got {origin}")));
        }
        if labels.is_empty() {
            return Err(Error::InvalidBinning("no labels".into()));
        }
        let mut seen = labels.clone();
        seen.sort();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidBinning(format!("label {} repeated", w[0])));
        }
        Ok(BinningRule { bin_width, origin, labels, boundary })
    }

    /// Width 1000 from 0, labels `a` to `g`, upper-inclusive.
    pub fn traffic() -> Self {
        let labels = "abcdefg".chars().map(|c| Symbol::new(c).expect("letter")).collect();
        BinningRule::new(1000.0, 0.0, labels, Boundary::UpperInclusive).expect("valid rule")
    }

    pub fn bin_width(&self) -> f64 {
        self.bin_width
    }

    pub fn origin(&self) -> f64 {
        self.origin
    }

    pub fn labels(&self) -> &[Symbol] {
        &self.labels
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn upper(&self) -> f64 {
        self.origin + self.bin_width * self.labels.len() as f64
    }

    /// Bin index of `v`, or `None` outside `[origin, upper]`.
    pub fn bin(&self, v: f64) -> Option<usize> {
        if !(self.origin..=self.upper()).contains(&v) {
            return None;
        }
        let x = (v - self.origin) / self.bin_width;
        let k = match self.boundary {
            Boundary::UpperInclusive => (x.ceil() as usize).saturating_sub(1),
            Boundary::LowerInclusive => x.floor() as usize,
        };
        Some(k.min(self.labels.len() - 1))
    }

    pub fn label(&self, v: f64) -> Option<Symbol> {
        self.bin(v).map(|k| self.labels[k])
    }
}

/// Maps every value of `series` to its label. The error names the first
/// out-of-range value by 1-based position.
pub fn discretize(id: SequenceId, series: &[f64], rule: &BinningRule) -> Result<Sequence> {
    let symbols = series
        .iter()
        .enumerate()
        .map(|(k, &value)| rule.label(value).ok_or(Error::ValueOutOfRange { position: k + 1, value }))
        .collect::<Result<Vec<_>>>()?;
    Sequence::new(id, symbols)
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericSeries {
    pub id: SequenceId,
    pub values: Vec<f64>,
}

/// Discretizes every series with the same rule.
pub fn discretize_all(series: &[NumericSeries], rule: &BinningRule) -> Result<SequenceDatabase> {
    let sequences = series.iter().map(|s| discretize(s.id.clone(), &s.values, rule)).collect::<Result<Vec<_>>>()?;
    SequenceDatabase::new(sequences)
}

/// Shape of a numeric CSV file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CsvLayout {
    /// One series per row. With `id_column` the first field names the series.
    Wide { has_headers: bool, id_column: bool },
    /// One value per row, grouped by `group_by` and ordered by `order_by`
    /// within each group. Groups keep first-appearance order.
    Long { group_by: String, order_by: String, value: String },
}

pub fn read_numeric_csv<R: Read>(reader: R, layout: &CsvLayout) -> Result<Vec<NumericSeries>> {
    match layout {
        CsvLayout::Wide { has_headers, id_column } => read_wide(reader, *has_headers, *id_column),
        CsvLayout::Long { group_by, order_by, value } => read_long(reader, group_by, order_by, value),
    }
}

fn number(field: &str, line: usize) -> Result<f64> {
    field.trim().parse().map_err(|_| Error::Parse { line, message: format!("not a number: {field:?}") })
}

fn record_line(record: &csv::StringRecord, fallback: usize) -> usize {
    record.position().map_or(fallback, |p| p.line() as usize)
}

fn read_wide<R: Read>(reader: R, has_headers: bool, id_column: bool) -> Result<Vec<NumericSeries>> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(has_headers).flexible(true).from_reader(reader);
    let mut out = Vec::new();
    for (k, record) in rdr.records().enumerate() {
        let record = record?;
        let line = record_line(&record, k + 1);
        let mut fields = record.iter();
        let id = if id_column {
            let name = fields.next().ok_or(Error::Parse { line, message: "missing id".into() })?;
            SequenceId::Named(name.to_string())
        } else {
            SequenceId::Ordinal(out.len() + 1)
        };
        let values = fields.filter(|f| !f.trim().is_empty()).map(|f| number(f, line)).collect::<Result<Vec<_>>>()?;
        out.push(NumericSeries { id, values });
    }
    Ok(out)
}

fn column(headers: &csv::StringRecord, name: &str) -> Result<usize> {
    headers
        .iter()
        .position(|h| h.trim() == name)
        .ok_or_else(|| Error::Parse { line: 1, message: format!("no column named {name:?}") })
}

/// Numeric when both keys parse as numbers, textual otherwise.
fn order_keys(a: &str, b: &str) -> Ordering {
    match (a.trim().parse::<f64>(), b.trim().parse::<f64>()) {
        (Ok(x), Ok(y)) => x.total_cmp(&y),
        _ => a.cmp(b),
    }
}

fn read_long<R: Read>(reader: R, group_by: &str, order_by: &str, value: &str) -> Result<Vec<NumericSeries>> {
    let mut rdr = csv::Reader::from_reader(reader);
    let headers = rdr.headers()?.clone();
    let (g, o, v) = (column(&headers, group_by)?, column(&headers, order_by)?, column(&headers, value)?);
    let mut groups: Vec<(String, Vec<(String, f64)>)> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for (k, record) in rdr.records().enumerate() {
        let record = record?;
        let line = record_line(&record, k + 2);
        let field = |i: usize| record.get(i).ok_or(Error::Parse { line, message: "short row".into() });
        let key = field(g)?.to_string();
        let slot = *index.entry(key.clone()).or_insert_with(|| {
            groups.push((key, Vec::new()));
            groups.len() - 1
        });
        groups[slot].1.push((field(o)?.to_string(), number(field(v)?, line)?));
    }
    Ok(groups
        .into_iter()
        .map(|(name, mut rows)| {
            rows.sort_by(|a, b| order_keys(&a.0, &b.0));
            NumericSeries { id: SequenceId::Named(name), values: rows.into_iter().map(|r| r.1).collect() }
        })
        .collect())
}

/// Bijective translation between multi-character event names and symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EventMapping {
    forward: BTreeMap<String, Symbol>,
    backward: BTreeMap<Symbol, String>,
}

impl EventMapping {
    /// Parses `name=char` lines; blank and `#` lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut mapping = EventMapping::default();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse { line: k + 1, message };
            let (name, sym) = line.rsplit_once('=').ok_or_else(|| err("expected name=char".into()))?;
            let (name, sym) = (name.trim(), sym.trim());
            let mut chars = sym.chars();
            let c = match (chars.next(), chars.next()) {
                (Some(c), None) => c,
                _ => return Err(err(format!("{sym:?} is not a single character"))),
            };
            let symbol = Symbol::new(c).map_err(|e| err(e.to_string()))?;
            mapping.insert(name, symbol).map_err(err)?;
        }
        Ok(mapping)
    }

    pub fn insert(&mut self, name: &str, symbol: Symbol) -> Result<(), String> {
        if name.is_empty() {
            return Err("empty event name".into());
        }
        if let Some(prev) = self.forward.get(name) {
            return Err(format!("event {name:?} already mapped to {prev}"));
        }
        if let Some(prev) = self.backward.get(&symbol) {
            return Err(format!("symbol {symbol} already used by {prev:?}"));
        }
        self.forward.insert(name.to_string(), symbol);
        self.backward.insert(symbol, name.to_string());
        Ok(())
    }

    pub fn symbol(&self, name: &str) -> Option<Symbol> {
        self.forward.get(name).copied()
    }

    pub fn name(&self, symbol: Symbol) -> Option<&str> {
        self.backward.get(&symbol).map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// Reads one event sequence per line: optional `id<TAB>`, then event names
/// separated by commas or whitespace.
pub fn load_events<R: BufRead>(reader: R, mapping: &EventMapping) -> Result<SequenceDatabase> {
    let mut sequences = Vec::new();
    for (k, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let (id, body) = match line.split_once('\t') {
            Some((name, body)) => (SequenceId::Named(name.to_string()), body),
            None => (SequenceId::Ordinal(sequences.len() + 1), line.as_str()),
        };
        let symbols = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                mapping.symbol(t).ok_or_else(|| Error::Parse { line: k + 1, message: format!("unmapped event {t:?}") })
            })
            .collect::<Result<Vec<_>>>()?;
        sequences.push(Sequence::new(id, symbols).map_err(|e| Error::Parse { line: k + 1, message: e.to_string() })?);
    }
    SequenceDatabase::new(sequences)
}

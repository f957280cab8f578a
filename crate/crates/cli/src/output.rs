use std::io::Write;

use onp_core::{LevelStats, MiningReport, Pattern, SupportResult};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct ConfigRecord {
    pub minsup: usize,
    pub gap: String,
    pub strategy: String,
    pub alphabet: String,
    pub empty_gap: String,
    pub max_len: Option<usize>,
    pub threads: usize,
}

#[derive(Debug, Serialize)]
pub struct LevelRecord {
    pub len: usize,
    pub generated: usize,
    pub pruned: usize,
    pub checked: usize,
    pub frequent: usize,
}

impl From<LevelStats> for LevelRecord {
    fn from(s: LevelStats) -> Self {
        LevelRecord { len: s.len, generated: s.generated, pruned: s.pruned, checked: s.checked, frequent: s.frequent }
    }
}

#[derive(Debug, Serialize)]
pub struct SequenceRecord {
    pub id: String,
    pub support: usize,
    pub occurrences: Vec<Vec<usize>>,
}

/// One frequent pattern. `per_sequence` is present only when occurrences
/// were requested.
#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub pattern: String,
    pub length: usize,
    pub support: usize,
    pub is_negative: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_sequence: Option<Vec<SequenceRecord>>,
}

#[derive(Debug, Serialize)]
struct CsvRow<'a> {
    pattern: &'a str,
    length: usize,
    support: usize,
    is_negative: bool,
}

#[derive(Debug, Serialize)]
pub struct MineOutput {
    pub config: ConfigRecord,
    pub levels: Vec<LevelRecord>,
    pub patterns: Vec<OutputRecord>,
}

pub fn pattern_text(p: &Pattern, ascii: bool) -> String {
    if ascii {
        p.ascii().to_string()
    } else {
        p.to_string()
    }
}

pub fn sequence_records(result: &SupportResult) -> Vec<SequenceRecord> {
    result
        .per_sequence
        .iter()
        .map(|s| SequenceRecord {
            id: s.id.to_string(),
            support: s.count,
            occurrences: s.occurrences.iter().map(|o| o.positions().to_vec()).collect(),
        })
        .collect()
}

pub fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

pub fn write_pattern_csv(records: &[OutputRecord], out: &mut dyn Write) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(CsvRow { pattern: &r.pattern, length: r.length, support: r.support, is_negative: r.is_negative })?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_stats(report: &MiningReport, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "{:>4} {:>10} {:>8} {:>8} {:>9}", "len", "generated", "pruned", "checked", "frequent")?;
    let mut total = LevelStats::default();
    for level in &report.levels {
        let s = level.stats;
        writeln!(out, "{:>4} {:>10} {:>8} {:>8} {:>9}", s.len, s.generated, s.pruned, s.checked, s.frequent)?;
        if s.len >= 2 {
            total.generated += s.generated;
            total.pruned += s.pruned;
            total.checked += s.checked;
            total.frequent += s.frequent;
        }
    }
    writeln!(
        out,
        "{:>4} {:>10} {:>8} {:>8} {:>9}  (lengths >= 2)",
        "sum", total.generated, total.pruned, total.checked, total.frequent
    )
}

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub strategy: String,
    pub levels: Vec<LevelRecord>,
    pub checked_total: usize,
    pub frequent_total: usize,
    pub elapsed_ms: f64,
}

/// Strategy-by-length matrix of checked candidates, lengths two and up,
/// followed by the frequent counts of the first strategy.
pub fn write_bench_table(rows: &[BenchRow], out: &mut dyn Write) -> std::io::Result<()> {
    let max_len = rows.iter().flat_map(|r| r.levels.iter().map(|l| l.len)).max().unwrap_or(1);
    let lens: Vec<usize> = (2..=max_len).collect();
    let cell = |r: &BenchRow, len: usize| r.levels.iter().find(|l| l.len == len).map_or(0, |l| l.checked);
    write!(out, "{:<12}", "strategy")?;
    for len in &lens {
        write!(out, " {len:>8}")?;
    }
    writeln!(out, " {:>8} {:>10}", "total", "ms")?;
    for r in rows {
        write!(out, "{:<12}", r.strategy)?;
        for &len in &lens {
            write!(out, " {:>8}", cell(r, len))?;
        }
        writeln!(out, " {:>8} {:>10.3}", r.checked_total, r.elapsed_ms)?;
    }
    if let Some(first) = rows.first() {
        write!(out, "{:<12}", "frequent")?;
        for &len in &lens {
            write!(out, " {:>8}", first.levels.iter().find(|l| l.len == len).map_or(0, |l| l.frequent))?;
        }
        writeln!(out, " {:>8}", first.frequent_total)?;
    }
    Ok(())
}

pub fn write_bench_csv(rows: &[BenchRow], out: &mut dyn Write) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["strategy", "len", "generated", "pruned", "checked", "frequent"])?;
    for r in rows {
        for l in &r.levels {
            w.write_record([
                r.strategy.clone(),
                l.len.to_string(),
                l.generated.to_string(),
                l.pruned.to_string(),
                l.checked.to_string(),
                l.frequent.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

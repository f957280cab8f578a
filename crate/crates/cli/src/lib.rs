//! `onpminer`: load sequences, mine one-off negative patterns, report them.
//!
//! Exit codes: 0 success, 2 usage error, 3 input error, 4 internal
//! invariant violation.

pub mod args;
pub mod output;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::path::Path;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;
use onp_core::ingest::{self, BinningRule, CsvLayout, EventMapping};
use onp_core::{mine, Error, Matcher, MiningConfig, MiningReport, Pattern, SequenceDatabase, Strategy, Symbol};

use args::{
    BenchArgs, Cli, Command, DiscretizeArgs, Emit, Format, InputArgs, Layout, MineArgs, MiningArgs, NumericArgs,
    SupportArgs,
};
use output::{BenchRow, ConfigRecord, LevelRecord, MineOutput, OutputRecord};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Invariant(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Invariant(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Input(m) | CliError::Invariant(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidGap { .. }
            | Error::InvalidSymbol(_)
            | Error::UnknownSymbol(_)
            | Error::MalformedPattern { .. }
            | Error::GapMismatch { .. }
            | Error::AlphabetOverride(_)
            | Error::InvalidMinsup
            | Error::InvalidBinning(_) => CliError::Usage(msg),
            Error::OracleLimit(_) => CliError::Invariant(msg),
            _ => CliError::Input(msg),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Parses `args` (program name first) and runs the subcommand. Data goes to
/// `stdout` or `--output`; diagnostics and stats go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(stderr, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Mine(a) => run_mine(&a, stdout, stderr),
        Command::Support(a) => run_support(&a, stdout),
        Command::Discretize(a) => run_discretize(&a, stdout),
        Command::Bench(a) => run_bench(&a, stdout, stderr),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "onpminer: {}", e.message());
            e.code()
        }
    }
}

fn open(path: &Path) -> Result<Box<dyn BufRead>, CliError> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(Box::new(BufReader::new(file)))
}

fn binning(n: &NumericArgs) -> Result<BinningRule, CliError> {
    let labels = n.labels.chars().map(Symbol::new).collect::<Result<Vec<_>, _>>()?;
    Ok(BinningRule::new(n.bin_width, n.origin, labels, n.boundary.into())?)
}

fn layout(n: &NumericArgs) -> CsvLayout {
    match n.layout {
        Layout::Wide => CsvLayout::Wide { has_headers: n.headers, id_column: n.id_column },
        Layout::Long => {
            CsvLayout::Long { group_by: n.group_by.clone(), order_by: n.order_by.clone(), value: n.value.clone() }
        }
    }
}

fn load_numeric(reader: impl Read, n: &NumericArgs) -> Result<SequenceDatabase, CliError> {
    let rule = binning(n)?;
    let series = ingest::read_numeric_csv(reader, &layout(n))?;
    Ok(ingest::discretize_all(&series, &rule)?)
}

fn load(input: &InputArgs) -> Result<SequenceDatabase, CliError> {
    let reader = open(&input.input)?;
    let db = match input.format {
        Format::Lines => ingest::load_lines(reader)?,
        Format::Csv => load_numeric(reader, &input.numeric)?,
        Format::Events => {
            let path =
                input.mapping.as_ref().ok_or_else(|| CliError::Usage("--format events needs --mapping".into()))?;
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            let mapping =
                EventMapping::parse(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            ingest::load_events(reader, &mapping)?
        }
    };
    Ok(db)
}

fn with_output<F>(path: Option<&Path>, stdout: &mut dyn Write, f: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> Result<(), CliError>,
{
    match path {
        Some(p) => {
            let mut file =
                io::BufWriter::new(File::create(p).map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?);
            f(&mut file)?;
            file.flush()?;
            Ok(())
        }
        None => f(stdout),
    }
}

fn mining_config(m: &MiningArgs, strategy: Strategy) -> Result<MiningConfig, CliError> {
    let minsup = usize::try_from(m.minsup).map_err(|_| CliError::Usage("--minsup too large".into()))?;
    let mut config = MiningConfig::new(minsup, m.gap)?
        .with_strategy(strategy)
        .with_parallelism(m.threads)
        .with_empty_gap(m.empty_gap.into());
    if let Some(a) = &m.alphabet {
        config = config.with_alphabet(a.clone());
    }
    if let Some(len) = m.max_len {
        config = config.with_max_len(len);
    }
    Ok(config)
}

fn config_record(report: &MiningReport) -> ConfigRecord {
    let c = &report.config;
    ConfigRecord {
        minsup: c.minsup,
        gap: c.gap.to_string(),
        strategy: c.strategy.name().to_string(),
        alphabet: report.alphabet.to_string(),
        empty_gap: format!("{:?}", c.empty_gap).to_lowercase(),
        max_len: c.max_len,
        threads: c.parallelism,
    }
}

/// Internal consistency of a report before anything is written.
fn check_report(report: &MiningReport) -> Result<(), CliError> {
    for level in &report.levels {
        let s = level.stats;
        if s.generated != s.pruned + s.checked || s.frequent != level.frequent.len() || s.frequent > s.checked {
            return Err(CliError::Invariant(format!("inconsistent counts at length {}: {s:?}", s.len)));
        }
        if let Some(f) = level.frequent.iter().find(|f| f.support < report.config.minsup || f.pattern.len() != s.len) {
            return Err(CliError::Invariant(format!("pattern {} misreported at length {}", f.pattern, s.len)));
        }
    }
    Ok(())
}

fn run_mine(a: &MineArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let db = load(&a.input)?;
    let config = mining_config(&a.mining, a.strategy)?;
    let report = mine(&db, &config)?;
    check_report(&report)?;
    if a.stats {
        output::write_stats(&report, stderr)?;
    }
    let matcher = Matcher::new(config.empty_gap);
    let mut records = Vec::with_capacity(report.total_frequent());
    for f in report.patterns() {
        let per_sequence = if a.occurrences {
            let result = matcher.count_support_db(&db, &f.pattern);
            if result.total != f.support {
                return Err(CliError::Invariant(format!("support of {} changed on recount", f.pattern)));
            }
            for (seq, s) in db.sequences().iter().zip(&result.per_sequence) {
                if let Some(bad) = s.occurrences.iter().find(|o| o.validate(seq, &f.pattern, config.empty_gap).is_err())
                {
                    return Err(CliError::Invariant(format!("invalid occurrence {bad} of {}", f.pattern)));
                }
            }
            Some(output::sequence_records(&result))
        } else {
            None
        };
        records.push(OutputRecord {
            pattern: output::pattern_text(&f.pattern, a.out.ascii),
            length: f.pattern.len(),
            support: f.support,
            is_negative: f.pattern.is_negative(),
            per_sequence,
        });
    }
    with_output(a.out.output.as_deref(), stdout, |out| match a.emit {
        Emit::Csv => Ok(output::write_pattern_csv(&records, out)?),
        Emit::Json | Emit::Text => {
            let doc = MineOutput {
                config: config_record(&report),
                levels: report.levels.iter().map(|l| l.stats.into()).collect(),
                patterns: records,
            };
            Ok(output::write_json(&doc, out)?)
        }
    })
}

#[derive(serde::Serialize)]
struct SupportOutput {
    pattern: String,
    support: usize,
    per_sequence: Vec<output::SequenceRecord>,
}

fn run_support(a: &SupportArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let db = load(&a.input)?;
    let pattern = match &a.alphabet {
        Some(alphabet) => Pattern::parse_in(&a.pattern, a.gap, alphabet)?,
        None => Pattern::parse(&a.pattern, a.gap)?,
    };
    let result = Matcher::new(a.empty_gap.into()).count_support_db(&db, &pattern);
    let text = output::pattern_text(&pattern, a.out.ascii);
    let per_sequence = output::sequence_records(&result);
    with_output(a.out.output.as_deref(), stdout, |out| {
        match a.emit {
            Emit::Json => {
                output::write_json(&SupportOutput { pattern: text, support: result.total, per_sequence }, out)?
            }
            Emit::Csv => {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["sequence", "support", "occurrences"])?;
                for (s, r) in per_sequence.iter().zip(&result.per_sequence) {
                    let occs: Vec<String> = r.occurrences.iter().map(ToString::to_string).collect();
                    w.write_record([s.id.clone(), s.support.to_string(), occs.join(" ")])?;
                }
                w.flush()?;
            }
            Emit::Text => {
                writeln!(out, "{text}\tsupport {}", result.total)?;
                for s in &result.per_sequence {
                    let occs: Vec<String> = s.occurrences.iter().map(ToString::to_string).collect();
                    writeln!(out, "{}\t{}\t{}", s.id, s.count, occs.join(" "))?;
                }
            }
        }
        Ok(())
    })
}

fn run_discretize(a: &DiscretizeArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let db = load_numeric(open(&a.input)?, &a.numeric)?;
    with_output(a.output.as_deref(), stdout, |out| Ok(ingest::write_lines(&db, out)?))
}

fn run_bench(a: &BenchArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let db = load(&a.input)?;
    let mut rows = Vec::new();
    let mut reference: Option<MiningReport> = None;
    for strategy in Strategy::ALL {
        let config = mining_config(&a.mining, strategy)?;
        let start = Instant::now();
        let report = mine(&db, &config)?;
        let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
        check_report(&report)?;
        match &reference {
            Some(r) if !r.same_patterns(&report) => {
                let _ = writeln!(stderr, "note: {strategy} found a different frequent set than {}", r.config.strategy);
            }
            None => reference = Some(report.clone()),
            _ => {}
        }
        rows.push(BenchRow {
            strategy: strategy.name().to_string(),
            levels: report.levels.iter().filter(|l| l.stats.len >= 2).map(|l| LevelRecord::from(l.stats)).collect(),
            checked_total: report.total_checked(2),
            frequent_total: report.total_frequent_from(2),
            elapsed_ms,
        });
    }
    with_output(a.out.output.as_deref(), stdout, |out| match a.emit {
        Emit::Text => Ok(output::write_bench_table(&rows, out)?),
        Emit::Csv => Ok(output::write_bench_csv(&rows, out)?),
        Emit::Json => Ok(output::write_json(&rows, out)?),
    })
}

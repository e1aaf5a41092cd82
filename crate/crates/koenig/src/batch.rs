//! The batch engine: reads graph6 lines, analyses them in parallel chunks and
//! hands records to a sink in input order.
//!
//! Output is identical for every worker count. Checkpoints are written after
//! each chunk; resuming skips the lines already consumed and restores the
//! tally.

use std::io::BufRead;
use std::path::PathBuf;
use std::time::Instant;

use koenig_core::invariants::DEFAULT_COMPONENT_LIMIT;
use koenig_core::recognition::{
    find_asteroidal_triple, find_weakly_closed_ordering_with_budget, DEFAULT_ORDERING_BUDGET,
};
use koenig_core::{parse_graph6, Graph6Error, InvariantError, InvariantReport};
use rayon::prelude::*;

use crate::checkpoint::{Checkpoint, CHECKPOINT_VERSION};
use crate::error::HarnessError;
use crate::input::InputSource;
use crate::record::{GraphRecord, WeaklyClosedVerdict};
use crate::tally::{Tally, VerificationSummary};

pub const DEFAULT_CHECKPOINT_EVERY: usize = 10_000;
const DEFAULT_CHUNK: usize = 4096;

/// Graphs failing an enabled filter are counted as read and then dropped.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Filters {
    pub connected: bool,
    pub at_free: bool,
}

/// Optional per-graph computations beyond the invariant report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Selection {
    pub at_free: bool,
    pub weakly_closed: bool,
}

#[derive(Clone, Debug)]
pub struct BatchOptions {
    pub input: InputSource,
    pub filters: Filters,
    pub selection: Selection,
    pub jobs: usize,
    pub checkpoint: Option<PathBuf>,
    /// Lines per chunk when checkpointing.
    pub checkpoint_every: usize,
    /// Abort on the first malformed or unsupported line.
    pub strict: bool,
    pub ordering_budget: u64,
    pub component_limit: usize,
    /// Stop once this many input lines have been consumed in total, leaving
    /// the run incomplete. Used to simulate interruption.
    pub stop_after: Option<usize>,
}

impl BatchOptions {
    pub fn new(input: InputSource) -> Self {
        BatchOptions {
            input,
            filters: Filters::default(),
            selection: Selection::default(),
            jobs: 1,
            checkpoint: None,
            checkpoint_every: DEFAULT_CHECKPOINT_EVERY,
            strict: false,
            ordering_budget: DEFAULT_ORDERING_BUDGET,
            component_limit: DEFAULT_COMPONENT_LIMIT,
            stop_after: None,
        }
    }

    /// The settings that change results, as stored in checkpoints.
    pub fn fingerprint(&self) -> String {
        format!(
            "connected={} at-free-filter={} at-free={} weakly-closed={} strict={} budget={} limit={}",
            self.filters.connected,
            self.filters.at_free,
            self.selection.at_free,
            self.selection.weakly_closed,
            self.strict,
            self.ordering_budget,
            self.component_limit,
        )
    }
}

/// A line that was skipped rather than analysed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LineIssue {
    Malformed { line: usize, error: Graph6Error },
    Unsupported { line: usize, error: InvariantError },
}

impl std::fmt::Display for LineIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LineIssue::Malformed { line, error } => write!(f, "line {line}: {error}"),
            LineIssue::Unsupported { line, error } => write!(f, "line {line}: {error}"),
        }
    }
}

pub trait RecordSink {
    fn record(&mut self, record: &GraphRecord) -> Result<(), HarnessError>;

    fn issue(&mut self, _issue: &LineIssue) {}
}

/// Discards records.
pub struct NullSink;

impl RecordSink for NullSink {
    fn record(&mut self, _: &GraphRecord) -> Result<(), HarnessError> {
        Ok(())
    }
}

/// Keeps every record and issue in memory.
#[derive(Default)]
pub struct CollectSink {
    pub records: Vec<GraphRecord>,
    pub issues: Vec<LineIssue>,
}

impl RecordSink for CollectSink {
    fn record(&mut self, record: &GraphRecord) -> Result<(), HarnessError> {
        self.records.push(record.clone());
        Ok(())
    }

    fn issue(&mut self, issue: &LineIssue) {
        self.issues.push(issue.clone());
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub tally: Tally,
    /// Input lines consumed, including those covered by a resumed checkpoint.
    pub lines_consumed: usize,
    /// Lines skipped because a checkpoint already covered them.
    pub resumed_from: usize,
    pub complete: bool,
}

enum Outcome {
    Blank,
    Malformed(Graph6Error),
    Unsupported(usize, InvariantError),
    Filtered(usize),
    Kept(Box<GraphRecord>),
}

fn process(line: usize, text: &str, opts: &BatchOptions) -> Outcome {
    let text = text.trim_end_matches(['\r', '\n']);
    if text.trim().is_empty() {
        return Outcome::Blank;
    }
    let g = match parse_graph6(text) {
        Ok(g) => g,
        Err(e) => return Outcome::Malformed(e),
    };
    let n = g.order();
    if opts.filters.connected && !g.is_connected() {
        return Outcome::Filtered(n);
    }
    let triple = if opts.filters.at_free || opts.selection.at_free {
        Some(find_asteroidal_triple(&g))
    } else {
        None
    };
    let at_free = triple.as_ref().map(Option::is_none);
    if opts.filters.at_free && at_free == Some(false) {
        return Outcome::Filtered(n);
    }
    let report = match InvariantReport::compute_with_limit(&g, opts.component_limit) {
        Ok(r) => r,
        Err(e) => return Outcome::Unsupported(n, e),
    };
    let (weakly_closed, ordering) = if opts.selection.weakly_closed {
        match find_weakly_closed_ordering_with_budget(&g, opts.ordering_budget) {
            Ok(Some(o)) => (Some(WeaklyClosedVerdict::Yes), Some(o)),
            Ok(None) => (Some(WeaklyClosedVerdict::No), None),
            Err(_) => (Some(WeaklyClosedVerdict::BudgetExceeded), None),
        }
    } else {
        (None, None)
    };
    Outcome::Kept(Box::new(GraphRecord {
        line,
        graph6: text.to_owned(),
        report,
        at_free,
        asteroidal_triple: triple.flatten(),
        weakly_closed,
        ordering,
    }))
}

fn apply(
    line: usize,
    outcome: Outcome,
    strict: bool,
    tally: &mut Tally,
    sink: &mut dyn RecordSink,
) -> Result<(), HarnessError> {
    match outcome {
        Outcome::Blank => {}
        Outcome::Malformed(error) => {
            if strict {
                return Err(HarnessError::Malformed {
                    line,
                    source: error,
                });
            }
            tally.malformed += 1;
            sink.issue(&LineIssue::Malformed { line, error });
        }
        Outcome::Unsupported(order, error) => {
            if strict {
                return Err(HarnessError::Unsupported {
                    line,
                    source: error,
                });
            }
            tally.skip(order);
            tally.malformed += 1;
            sink.issue(&LineIssue::Unsupported { line, error });
        }
        Outcome::Filtered(order) => tally.skip(order),
        Outcome::Kept(record) => {
            tally.absorb(&record);
            sink.record(&record)?;
        }
    }
    Ok(())
}

/// Runs the batch, sending analysed records to `sink` in input order.
pub fn analyze_stream(
    opts: &BatchOptions,
    sink: &mut dyn RecordSink,
) -> Result<RunOutcome, HarnessError> {
    if opts.jobs == 0 {
        return Err(HarnessError::NoWorkers);
    }
    let settings = opts.fingerprint();
    let mut digest = None;
    let mut tally = Tally::default();
    let mut start = 0;
    if let Some(path) = &opts.checkpoint {
        let d = opts
            .input
            .digest()?
            .ok_or_else(|| HarnessError::Checkpoint {
                path: path.clone(),
                reason: "checkpointing needs file input".into(),
            })?;
        if let Some(cp) = Checkpoint::load(path)? {
            cp.ensure_matches(path, &d, &settings)?;
            tally = cp.tally;
            start = cp.lines_consumed;
        }
        digest = Some(d);
    }

    let pool = if opts.jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(opts.jobs)
                .build()
                .map_err(|e| std::io::Error::other(e.to_string()))?,
        )
    } else {
        None
    };

    let mut lines = opts.input.open()?.lines();
    for skipped in 0..start {
        if lines.next().transpose()?.is_none() {
            return Err(HarnessError::Checkpoint {
                path: opts.checkpoint.clone().unwrap_or_default(),
                reason: format!("input ends after {skipped} lines, checkpoint covers {start}"),
            });
        }
    }

    let chunk_size = if opts.checkpoint.is_some() {
        opts.checkpoint_every.max(1)
    } else {
        DEFAULT_CHUNK
    };
    let mut consumed = start;
    let mut eof = false;
    let mut chunk: Vec<(usize, String)> = Vec::with_capacity(chunk_size);
    while !eof {
        chunk.clear();
        while chunk.len() < chunk_size {
            if opts.stop_after.is_some_and(|s| consumed + chunk.len() >= s) {
                break;
            }
            match lines.next().transpose()? {
                Some(text) => chunk.push((consumed + chunk.len() + 1, text)),
                None => {
                    eof = true;
                    break;
                }
            }
        }
        if chunk.is_empty() && !eof {
            break;
        }
        let outcomes: Vec<Outcome> = match &pool {
            Some(pool) => pool.install(|| {
                chunk
                    .par_iter()
                    .map(|(line, text)| process(*line, text, opts))
                    .collect()
            }),
            None => chunk
                .iter()
                .map(|(line, text)| process(*line, text, opts))
                .collect(),
        };
        for ((line, _), outcome) in chunk.iter().zip(outcomes) {
            apply(*line, outcome, opts.strict, &mut tally, sink)?;
        }
        consumed += chunk.len();
        if let (Some(path), Some(d)) = (&opts.checkpoint, &digest) {
            Checkpoint {
                version: CHECKPOINT_VERSION,
                input_sha256: d.clone(),
                settings: settings.clone(),
                lines_consumed: consumed,
                complete: eof,
                tally: tally.clone(),
            }
            .store(path)?;
        }
    }

    if eof && tally.graphs_read == 0 && tally.malformed > 0 {
        return Err(HarnessError::AllMalformed {
            lines: tally.malformed,
        });
    }
    Ok(RunOutcome {
        tally,
        lines_consumed: consumed,
        resumed_from: start,
        complete: eof,
    })
}

/// Checks every connected AT-free input graph for the König property.
///
/// Forces the connected filter and AT-free detection on; the remaining
/// options (workers, checkpoint, budgets) are taken from `opts`.
pub fn verify_conjecture(
    opts: &BatchOptions,
    sink: &mut dyn RecordSink,
) -> Result<VerificationSummary, HarnessError> {
    let mut opts = opts.clone();
    opts.filters.connected = true;
    opts.selection.at_free = true;
    let started = Instant::now();
    let outcome = analyze_stream(&opts, sink)?;
    Ok(VerificationSummary::from_tally(
        &outcome.tally,
        outcome.complete,
        started.elapsed(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(text: &str) -> (tempfile::TempDir, BatchOptions) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("in.g6");
        std::fs::write(&path, text).unwrap();
        let opts = BatchOptions::new(InputSource::file(path));
        (dir, opts)
    }

    #[test]
    fn blank_and_malformed_lines_are_skipped() {
        let (_dir, opts) = fixture("A_\n\nnot graph6 \u{7f}\nBW\n");
        let mut sink = CollectSink::default();
        let out = analyze_stream(&opts, &mut sink).unwrap();
        assert!(out.complete);
        assert_eq!(out.lines_consumed, 4);
        assert_eq!(sink.records.len(), 2);
        assert_eq!(sink.records[0].line, 1);
        assert_eq!(sink.records[1].line, 4);
        assert_eq!(out.tally.malformed, 1);
        assert!(matches!(
            sink.issues[..],
            [LineIssue::Malformed { line: 3, .. }]
        ));
    }

    #[test]
    fn strict_mode_stops_at_the_first_bad_line() {
        let (_dir, mut opts) = fixture("A_\nA\nBW\n");
        opts.strict = true;
        let err = analyze_stream(&opts, &mut NullSink).unwrap_err();
        assert!(matches!(err, HarnessError::Malformed { line: 2, .. }));
    }

    #[test]
    fn all_malformed_is_an_error() {
        let (_dir, opts) = fixture("!!\n\n~\n");
        let err = analyze_stream(&opts, &mut NullSink).unwrap_err();
        assert!(matches!(err, HarnessError::AllMalformed { lines: 2 }));
    }

    #[test]
    fn empty_graph_is_unsupported_unless_filtered() {
        let (_dir, mut opts) = fixture("?\nA_\n");
        let mut sink = CollectSink::default();
        let out = analyze_stream(&opts, &mut sink).unwrap();
        assert!(matches!(
            sink.issues[..],
            [LineIssue::Unsupported { line: 1, .. }]
        ));
        assert_eq!(out.tally.graphs_read, 2);

        opts.filters.connected = true;
        let mut sink = CollectSink::default();
        analyze_stream(&opts, &mut sink).unwrap();
        assert!(sink.issues.is_empty());
        assert_eq!(sink.records.len(), 1);
    }

    #[test]
    fn zero_jobs_is_rejected() {
        let (_dir, mut opts) = fixture("A_\n");
        opts.jobs = 0;
        assert!(matches!(
            analyze_stream(&opts, &mut NullSink),
            Err(HarnessError::NoWorkers)
        ));
    }

    #[test]
    fn stdin_cannot_be_checkpointed() {
        let mut opts = BatchOptions::new(InputSource::Stdin);
        opts.checkpoint = Some(PathBuf::from("/tmp/never-written.ckpt"));
        assert!(matches!(
            analyze_stream(&opts, &mut NullSink),
            Err(HarnessError::Checkpoint { .. })
        ));
    }
}

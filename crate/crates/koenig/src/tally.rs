//! Running counts over a batch, carried in checkpoints and turned into the
//! verification summary.

use std::collections::BTreeMap;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::record::{GraphRecord, JsonReport};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderTally {
    pub read: usize,
    pub analysed: usize,
    pub at_free: usize,
    pub koenig: usize,
    pub counterexamples: usize,
}

/// An analysed AT-free graph whose ideal is not of König type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub line: usize,
    pub graph6: String,
    pub report: JsonReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    /// Well-formed graphs seen.
    pub graphs_read: usize,
    /// Graphs that passed the filters and were analysed.
    pub graphs_filtered: usize,
    /// Lines skipped because they did not parse or exceeded a budget.
    pub malformed: usize,
    pub at_free: usize,
    pub koenig: usize,
    pub at_free_koenig: usize,
    pub counterexamples: Vec<Counterexample>,
    pub by_order: BTreeMap<usize, OrderTally>,
}

impl Tally {
    pub fn skip(&mut self, order: usize) {
        self.graphs_read += 1;
        self.by_order.entry(order).or_default().read += 1;
    }

    pub fn absorb(&mut self, record: &GraphRecord) {
        let koenig = record.report.koenig_type;
        let at_free = record.at_free == Some(true);
        self.graphs_read += 1;
        self.graphs_filtered += 1;
        let slot = self.by_order.entry(record.report.order).or_default();
        slot.read += 1;
        slot.analysed += 1;
        if koenig {
            self.koenig += 1;
            slot.koenig += 1;
        }
        if at_free {
            self.at_free += 1;
            slot.at_free += 1;
            if koenig {
                self.at_free_koenig += 1;
            } else {
                slot.counterexamples += 1;
                self.counterexamples.push(Counterexample {
                    line: record.line,
                    graph6: record.graph6.clone(),
                    report: record.to_json(true),
                });
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderRow {
    pub order: usize,
    pub read: usize,
    pub connected: usize,
    pub at_free: usize,
    pub koenig: usize,
    pub counterexamples: usize,
}

/// Outcome of checking that every connected AT-free input graph has a
/// binomial edge ideal of König type.
///
/// `at_free_count` covers every order present in the input;
/// `at_free_count_from_order_3` leaves out the one- and two-vertex graphs so
/// that either convention for "up to n vertices" can be read off directly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub graphs_read: usize,
    /// Connected graphs, i.e. those that passed the filter.
    pub graphs_filtered: usize,
    pub malformed: usize,
    pub at_free_count: usize,
    pub at_free_count_from_order_3: usize,
    pub koenig_count: usize,
    pub at_free_koenig_count: usize,
    pub complete: bool,
    pub per_order: Vec<OrderRow>,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock time; not serialised so that summaries stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationSummary {
    pub fn from_tally(tally: &Tally, complete: bool, elapsed: Duration) -> Self {
        let per_order: Vec<OrderRow> = tally
            .by_order
            .iter()
            .map(|(&order, t)| OrderRow {
                order,
                read: t.read,
                connected: t.analysed,
                at_free: t.at_free,
                koenig: t.koenig,
                counterexamples: t.counterexamples,
            })
            .collect();
        VerificationSummary {
            graphs_read: tally.graphs_read,
            graphs_filtered: tally.graphs_filtered,
            malformed: tally.malformed,
            at_free_count: tally.at_free,
            at_free_count_from_order_3: per_order
                .iter()
                .filter(|r| r.order >= 3)
                .map(|r| r.at_free)
                .sum(),
            koenig_count: tally.koenig,
            at_free_koenig_count: tally.at_free_koenig,
            complete,
            per_order,
            counterexamples: tally.counterexamples.clone(),
            elapsed,
        }
    }

    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

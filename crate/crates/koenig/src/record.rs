//! Per-graph records and their JSON / CSV encodings.
//!
//! The CSV columns, in order, are
//! `n, edges, pi, sc, sc_star, lf, height, dim, koenig, unmixed, at_free,
//! weakly_closed, graph6`. JSON lines carry the same keys plus the input
//! line number and, when requested, the witnesses and certificates.

use std::io::Write;

use koenig_core::algebra::MinimalPrime;
use koenig_core::recognition::{AsteroidalTriple, WeaklyClosedOrdering};
use koenig_core::InvariantReport;
use serde::{Deserialize, Serialize};

use crate::error::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeaklyClosedVerdict {
    Yes,
    No,
    BudgetExceeded,
}

/// Everything computed for one input graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphRecord {
    /// 1-based input line number.
    pub line: usize,
    pub graph6: String,
    pub report: InvariantReport,
    pub at_free: Option<bool>,
    pub asteroidal_triple: Option<AsteroidalTriple>,
    pub weakly_closed: Option<WeaklyClosedVerdict>,
    pub ordering: Option<WeaklyClosedOrdering>,
}

/// The flat row shared by both output formats.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub n: usize,
    pub edges: usize,
    pub pi: usize,
    pub sc: i64,
    pub sc_star: usize,
    pub lf: usize,
    pub height: Option<usize>,
    pub dim: Option<usize>,
    pub koenig: bool,
    pub unmixed: Option<bool>,
    pub at_free: Option<bool>,
    pub weakly_closed: Option<WeaklyClosedVerdict>,
    pub graph6: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleJson {
    pub vertices: [usize; 3],
    /// `paths[t]` joins the other two vertices while avoiding `N[vertices[t]]`.
    pub paths: [Vec<usize>; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub line: usize,
    #[serde(flatten)]
    pub row: ReportRow,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_set: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_cover: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub asteroidal_triple: Option<TripleJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weakly_closed_ordering: Option<Vec<usize>>,
}

impl GraphRecord {
    pub fn row(&self) -> ReportRow {
        let r = &self.report;
        ReportRow {
            n: r.order,
            edges: r.edges,
            pi: r.path_cover,
            sc: r.scattering,
            sc_star: r.unrestricted_scattering,
            lf: r.linear_forest_edges,
            height: r.ideal_height,
            dim: r.quotient_dim,
            koenig: r.koenig_type,
            unmixed: r.unmixed,
            at_free: self.at_free,
            weakly_closed: self.weakly_closed,
            graph6: self.graph6.clone(),
        }
    }

    pub fn to_json(&self, certificates: bool) -> JsonReport {
        let mut out = JsonReport {
            line: self.line,
            row: self.row(),
            witness_set: None,
            witness_cover: None,
            asteroidal_triple: None,
            weakly_closed_ordering: None,
        };
        if certificates {
            out.witness_set = Some(self.report.witness_set.to_vec());
            out.witness_cover = Some(self.report.witness_cover.paths().to_vec());
            out.asteroidal_triple = self.asteroidal_triple.as_ref().map(|at| TripleJson {
                vertices: at.vertices,
                paths: at.certificates.clone().map(|c| c.path),
            });
            out.weakly_closed_ordering = self.ordering.as_ref().map(|o| o.ordering.clone());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    JsonLines,
    Csv,
}

/// Streams records to a writer in one of the two formats.
pub struct RecordWriter<W: Write> {
    inner: Inner<W>,
    certificates: bool,
}

enum Inner<W: Write> {
    Json(W),
    Csv(Box<csv::Writer<W>>),
}

impl<W: Write> RecordWriter<W> {
    /// `header` controls whether a CSV header row is written; it is skipped
    /// when appending to the output of an interrupted run.
    pub fn new(out: W, format: OutputFormat, certificates: bool, header: bool) -> Self {
        let inner = match format {
            OutputFormat::JsonLines => Inner::Json(out),
            OutputFormat::Csv => Inner::Csv(Box::new(
                csv::WriterBuilder::new()
                    .has_headers(header)
                    .from_writer(out),
            )),
        };
        RecordWriter {
            inner,
            certificates,
        }
    }

    pub fn write(&mut self, record: &GraphRecord) -> Result<(), HarnessError> {
        match &mut self.inner {
            Inner::Json(w) => {
                serde_json::to_writer(&mut *w, &record.to_json(self.certificates))?;
                w.write_all(b"\n")?;
            }
            Inner::Csv(w) => w.serialize(record.row())?,
        }
        Ok(())
    }

    pub fn flush(&mut self) -> Result<(), HarnessError> {
        match &mut self.inner {
            Inner::Json(w) => w.flush()?,
            Inner::Csv(w) => w.flush()?,
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeJson {
    pub cut_set: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub height: usize,
}

impl From<&MinimalPrime> for PrimeJson {
    fn from(p: &MinimalPrime) -> Self {
        PrimeJson {
            cut_set: p.cut_set.to_vec(),
            components: p.components.iter().map(|c| c.to_vec()).collect(),
            height: p.height,
        }
    }
}

pub fn primes_to_json(primes: &[MinimalPrime]) -> Result<String, HarnessError> {
    let rows: Vec<PrimeJson> = primes.iter().map(PrimeJson::from).collect();
    Ok(serde_json::to_string_pretty(&rows)?)
}
